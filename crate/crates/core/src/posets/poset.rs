use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::PosetError;

/// Largest poset this crate handles; order relations are stored as bit rows.
pub const MAX_ELEMENTS: usize = 64;

/// A finite poset. Element `x` is below `y` iff bit `y` of `up[x]` is set;
/// the stored relation is reflexive and transitively closed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<u64>,
}

/// Cover pairs `(x, y)` with `x ⋖ y`, as element indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HasseDiagram {
    pub covers: Vec<(usize, usize)>,
}

/// On-disk poset description: covers are generators, the order is their
/// reflexive-transitive closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl Poset {
    /// Builds the order generated by `covers` (pairs of labels).
    pub fn from_covers<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Poset, PosetError> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let index = label_index(&labels)?;
        let edges = covers
            .iter()
            .map(|(a, b)| {
                let a = a.as_ref();
                let b = b.as_ref();
                let ia = *index.get(a).ok_or_else(|| PosetError::UnknownLabel(a.to_string()))?;
                let ib = *index.get(b).ok_or_else(|| PosetError::UnknownLabel(b.to_string()))?;
                Ok((ia, ib))
            })
            .collect::<Result<Vec<_>, PosetError>>()?;
        Poset::from_edges(labels, &edges)
    }

    /// Same as [`Poset::from_covers`] with index pairs.
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Poset, PosetError> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(n));
        }
        label_index(&labels)?;
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in edges {
            assert!(a < n && b < n, "edge endpoint out of range");
            succ[a].push(b);
        }
        if let Some(cycle) = find_cycle(&succ) {
            return Err(PosetError::Cycle(cycle.into_iter().map(|i| labels[i].clone()).collect()));
        }
        // Reachability by DFS from every element.
        let mut up = vec![0u64; n];
        for (x, row) in up.iter_mut().enumerate() {
            let mut stack = vec![x];
            *row |= 1 << x;
            while let Some(v) = stack.pop() {
                for &w in &succ[v] {
                    if *row & (1 << w) == 0 {
                        *row |= 1 << w;
                        stack.push(w);
                    }
                }
            }
        }
        Ok(Poset { labels, up })
    }

    /// Builds a poset from a full relation matrix, checking the axioms.
    pub fn from_relation(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<Poset, PosetError> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge(n));
        }
        label_index(&labels)?;
        assert!(leq.len() == n && leq.iter().all(|r| r.len() == n), "relation must be n x n");
        for x in 0..n {
            if !leq[x][x] {
                return Err(PosetError::NotReflexive(labels[x].clone()));
            }
            for y in 0..n {
                if x != y && leq[x][y] && leq[y][x] {
                    return Err(PosetError::NotAntisymmetric(labels[x].clone(), labels[y].clone()));
                }
                for z in 0..n {
                    if leq[x][y] && leq[y][z] && !leq[x][z] {
                        return Err(PosetError::NotTransitive(labels[x].clone(), labels[z].clone()));
                    }
                }
            }
        }
        let up = leq
            .iter()
            .map(|row| row.iter().enumerate().fold(0u64, |acc, (y, &b)| if b { acc | 1 << y } else { acc }))
            .collect();
        Ok(Poset { labels, up })
    }

    pub(crate) fn from_up_sets(labels: Vec<String>, up: Vec<u64>) -> Poset {
        debug_assert_eq!(labels.len(), up.len());
        Poset { labels, up }
    }

    pub fn chain(n: usize) -> Poset {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_edges(labels, &edges).expect("a chain is acyclic")
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_edges((0..n).map(|i| i.to_string()).collect(), &[]).expect("no edges")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] & (1 << y) != 0
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// Bit set of elements `>= x`.
    pub fn up_set(&self, x: usize) -> u64 {
        self.up[x]
    }

    /// Bit set of elements `<= x`.
    pub fn down_set(&self, x: usize) -> u64 {
        (0..self.len()).filter(|&y| self.leq(y, x)).fold(0, |acc, y| acc | 1 << y)
    }

    /// Number of pairs `x <= y`, which is the dimension of the incidence
    /// algebra.
    pub fn order_pair_count(&self) -> usize {
        self.up.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn strict_pair_count(&self) -> usize {
        self.order_pair_count() - self.len()
    }

    pub fn hasse(&self) -> HasseDiagram {
        let n = self.len();
        let mut covers = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) && !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    covers.push((x, y));
                }
            }
        }
        HasseDiagram { covers }
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| !(0..self.len()).any(|y| self.lt(y, x))).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| !(0..self.len()).any(|y| self.lt(x, y))).collect()
    }

    /// Connected in the comparability graph. The empty poset counts as
    /// disconnected.
    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return false;
        }
        let mut seen = 1u64;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if seen & (1 << y) == 0 && (self.leq(x, y) || self.leq(y, x)) {
                    seen |= 1 << y;
                    stack.push(y);
                }
            }
        }
        seen.count_ones() as usize == n
    }

    /// Componentwise order on pairs, labelled `"(a,b)"`.
    pub fn product(&self, other: &Poset) -> Poset {
        let mut labels = Vec::with_capacity(self.len() * other.len());
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("({a},{b})"));
            }
        }
        let m = other.len();
        let n = self.len() * m;
        assert!(n <= MAX_ELEMENTS, "product too large");
        let mut up = vec![0u64; n];
        for (i, row) in up.iter_mut().enumerate() {
            let (a, b) = (i / m, i % m);
            for j in 0..n {
                let (c, d) = (j / m, j % m);
                if self.leq(a, c) && other.leq(b, d) {
                    *row |= 1 << j;
                }
            }
        }
        Poset { labels, up }
    }

    /// The same set with the order reversed.
    pub fn opposite(&self) -> Poset {
        let n = self.len();
        let up = (0..n).map(|x| self.down_set(x)).collect();
        Poset { labels: self.labels.clone(), up }
    }

    /// Relabels elements `0..n` in the given order of old indices.
    pub fn permuted(&self, order: &[usize]) -> Poset {
        let n = self.len();
        assert_eq!(order.len(), n);
        let mut up = vec![0u64; n];
        for (i, &oi) in order.iter().enumerate() {
            for (j, &oj) in order.iter().enumerate() {
                if self.leq(oi, oj) {
                    up[i] |= 1 << j;
                }
            }
        }
        let labels = order.iter().map(|&o| self.labels[o].clone()).collect();
        Poset { labels, up }
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Poset, PosetError> {
        assert_eq!(labels.len(), self.len());
        label_index(&labels)?;
        Ok(Poset { labels, up: self.up.clone() })
    }

    pub fn to_file(&self) -> PosetFile {
        let covers = self
            .hasse()
            .covers
            .into_iter()
            .map(|(a, b)| [self.labels[a].clone(), self.labels[b].clone()])
            .collect();
        PosetFile { elements: self.labels.clone(), covers }
    }

    pub fn from_file(file: &PosetFile) -> Result<Poset, PosetError> {
        let covers: Vec<(&str, &str)> = file.covers.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        let elements: Vec<&str> = file.elements.iter().map(String::as_str).collect();
        Poset::from_covers(&elements, &covers)
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| self.down_set(x).count_ones());
        let mut h = vec![0; n];
        for &x in &order {
            h[x] = (0..n).filter(|&y| self.lt(y, x)).map(|y| h[y] + 1).max().unwrap_or(0);
        }
        h
    }
}

impl HasseDiagram {
    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }
}

fn label_index(labels: &[String]) -> Result<HashMap<&str, usize>, PosetError> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.as_str(), i).is_some() {
            return Err(PosetError::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

/// A directed cycle in the graph, listed with its start repeated at the end.
pub(crate) fn find_cycle(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    fn visit(v: usize, succ: &[Vec<usize>], mark: &mut [Mark], path: &mut Vec<usize>) -> Option<Vec<usize>> {
        mark[v] = Mark::Active;
        path.push(v);
        for &w in &succ[v] {
            match mark[w] {
                Mark::Active => {
                    let start = path.iter().position(|&x| x == w).expect("active vertex is on the path");
                    let mut cycle = path[start..].to_vec();
                    cycle.push(w);
                    return Some(cycle);
                }
                Mark::New => {
                    if let Some(c) = visit(w, succ, mark, path) {
                        return Some(c);
                    }
                }
                Mark::Done => {}
            }
        }
        path.pop();
        mark[v] = Mark::Done;
        None
    }
    let mut mark = vec![Mark::New; succ.len()];
    let mut path = Vec::new();
    (0..succ.len()).find_map(|v| if mark[v] == Mark::New { visit(v, succ, &mut mark, &mut path) } else { None })
}
