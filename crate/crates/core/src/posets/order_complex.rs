use super::Poset;

/// Order complex of a poset: its faces are the strict chains, grouped by
/// dimension (a chain with `d + 1` elements has dimension `d`). Each face is
/// listed in increasing order, faces of a dimension sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderComplex {
    pub faces: Vec<Vec<Vec<usize>>>,
}

impl OrderComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn faces_of_dim(&self, d: usize) -> &[Vec<usize>] {
        self.faces.get(d).map_or(&[], Vec::as_slice)
    }
}

pub fn order_complex(p: &Poset) -> OrderComplex {
    let n = p.len();
    // Process elements along a linear extension so chains come out sorted.
    let mut ext: Vec<usize> = (0..n).collect();
    ext.sort_by_key(|&x| (p.down_set(x).count_ones(), x));
    let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut chain = Vec::new();
    fn extend(p: &Poset, ext: &[usize], start: usize, chain: &mut Vec<usize>, faces: &mut Vec<Vec<Vec<usize>>>) {
        for k in start..ext.len() {
            let x = ext[k];
            if chain.last().is_some_and(|&last| !p.lt(last, x)) {
                continue;
            }
            chain.push(x);
            let d = chain.len() - 1;
            if faces.len() <= d {
                faces.push(Vec::new());
            }
            faces[d].push(chain.clone());
            extend(p, ext, k + 1, chain, faces);
            chain.pop();
        }
    }
    extend(p, &ext, 0, &mut chain, &mut faces);
    for level in &mut faces {
        level.sort();
    }
    OrderComplex { faces }
}
