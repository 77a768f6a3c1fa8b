use std::collections::HashMap;

use crate::exactla::{Field, IntMatrix, Matrix};
use crate::quivers::{Presentation, Quiver};

/// Path space between two vertices modulo the ideal.
#[derive(Clone, Debug)]
struct Block<F: Field> {
    paths: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    /// Indices into `paths` of the basis representatives, ascending.
    basis: Vec<usize>,
    /// Coordinates of every path in the basis.
    normal_forms: Vec<Vec<F>>,
}

/// Finite-dimensional algebra `kQ/I` with an explicit path-class basis.
///
/// Products are concatenation read left to right: for paths `u: i -> j` and
/// `v: j -> k`, `u * v` is the path `i -> k`. Representations of the quiver
/// are then right modules.
#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra<F: Field> {
    presentation: Presentation<F>,
    order: Vec<usize>,
    blocks: Vec<Vec<Block<F>>>,
}

impl<F: Field> BoundQuiverAlgebra<F> {
    pub fn new(presentation: Presentation<F>) -> Self {
        let n = presentation.quiver.vertex_count();
        let order = presentation.quiver.topological_order();
        let blocks = (0..n)
            .map(|i| (0..n).map(|j| reduce_block(&presentation, i, j)).collect())
            .collect();
        BoundQuiverAlgebra { presentation, order, blocks }
    }

    pub fn presentation(&self) -> &Presentation<F> {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        &self.presentation.quiver
    }

    pub fn vertex_count(&self) -> usize {
        self.presentation.quiver.vertex_count()
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.order
    }

    pub fn vertex_order_labels(&self) -> Vec<String> {
        self.order.iter().map(|&v| self.quiver().vertex(v).to_string()).collect()
    }

    pub fn block_dim(&self, i: usize, j: usize) -> usize {
        self.blocks[i][j].basis.len()
    }

    /// Basis paths of `e_i A e_j`.
    pub fn basis(&self, i: usize, j: usize) -> impl Iterator<Item = &[usize]> + '_ {
        let b = &self.blocks[i][j];
        b.basis.iter().map(move |&k| b.paths[k].as_slice())
    }

    pub fn basis_path(&self, i: usize, j: usize, k: usize) -> &[usize] {
        let b = &self.blocks[i][j];
        &b.paths[b.basis[k]]
    }

    pub fn dimension(&self) -> usize {
        self.blocks.iter().flatten().map(|b| b.basis.len()).sum()
    }

    /// Coordinates of a path `i -> j` in the basis of that block.
    pub fn normal_form(&self, i: usize, j: usize, path: &[usize]) -> Vec<F> {
        let b = &self.blocks[i][j];
        let k = *b.index.get(path).expect("path lies in the block");
        b.normal_forms[k].clone()
    }

    /// Product of basis element `a` of block `(i, j)` with basis element `b`
    /// of block `(j, k)`.
    pub fn multiply_basis(&self, i: usize, j: usize, k: usize, a: usize, b: usize) -> Vec<F> {
        let mut path = self.basis_path(i, j, a).to_vec();
        path.extend_from_slice(self.basis_path(j, k, b));
        self.normal_form(i, k, &path)
    }

    /// Product of block elements given in coordinates.
    pub fn multiply(&self, i: usize, j: usize, k: usize, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.block_dim(i, k)];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa.clone() * yb;
                for (o, z) in out.iter_mut().zip(self.multiply_basis(i, j, k, a, b)) {
                    if !z.is_zero() {
                        *o = o.clone() + &(c.clone() * &z);
                    }
                }
            }
        }
        out
    }

    /// `C[a][b] = dim e_a A e_b` with rows and columns in topological order.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self
            .order
            .iter()
            .map(|&i| self.order.iter().map(|&j| self.block_dim(i, j) as i64).collect())
            .collect();
        IntMatrix::from_rows(&rows)
    }

    /// Verifies `(xy)z = x(yz)` on all triples of basis elements.
    pub fn check_associativity(&self) -> bool {
        let n = self.vertex_count();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let (dij, djk, dkl) = (self.block_dim(i, j), self.block_dim(j, k), self.block_dim(k, l));
                        if dij * djk * dkl == 0 {
                            continue;
                        }
                        for a in 0..dij {
                            for b in 0..djk {
                                let ab = self.multiply_basis(i, j, k, a, b);
                                for c in 0..dkl {
                                    let left = self.multiply(i, k, l, &ab, &unit(dkl, c));
                                    let bc = self.multiply_basis(j, k, l, b, c);
                                    let right = self.multiply(i, j, l, &unit(dij, a), &bc);
                                    if left != right {
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Radical basis elements: nontrivial basis paths, as `(source, target,
    /// index)` triples.
    pub fn radical_basis(&self) -> Vec<(usize, usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    out.extend((0..self.block_dim(i, j)).map(|k| (i, j, k)));
                }
            }
        }
        out
    }
}

fn unit<F: Field>(n: usize, k: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[k] = F::one();
    v
}

fn reduce_block<F: Field>(pres: &Presentation<F>, i: usize, j: usize) -> Block<F> {
    let ideal = pres.ideal_block(i, j);
    let paths = ideal.paths;
    let m = paths.len();
    let index = paths.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
    if ideal.generators.is_empty() {
        let normal_forms = (0..m).map(|k| unit(m, k)).collect();
        return Block { paths, index, basis: (0..m).collect(), normal_forms };
    }
    // Columns in descending path order so pivots land on the largest paths.
    let reversed: Vec<Vec<F>> = ideal.generators.iter().map(|g| g.iter().rev().cloned().collect()).collect();
    let ech = Matrix::from_rows(reversed).echelon();
    let col_of = |k: usize| m - 1 - k;
    let pivot_row: HashMap<usize, usize> = ech.pivots.iter().enumerate().map(|(r, &c)| (col_of(c), r)).collect();
    let basis: Vec<usize> = (0..m).filter(|k| !pivot_row.contains_key(k)).collect();
    let normal_forms = (0..m)
        .map(|k| match pivot_row.get(&k) {
            None => unit(basis.len(), basis.iter().position(|&b| b == k).unwrap()),
            Some(&r) => basis.iter().map(|&b| -ech.reduced[(r, col_of(b))].clone()).collect(),
        })
        .collect();
    Block { paths, index, basis, normal_forms }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rational;
    use crate::quivers::{canonical_presentation, incidence_presentation, kronecker, linear_quiver};
    use crate::posets::{build_xp, Poset};

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn canonical_222() {
        let a = BoundQuiverAlgebra::new(canonical_presentation(&[2, 2, 2], &[q(1)]).unwrap());
        assert_eq!(a.dimension(), 13);
        let zero = a.quiver().vertex_index("0").unwrap();
        let w = a.quiver().vertex_index("w").unwrap();
        assert_eq!(a.block_dim(zero, w), 2);
        let c = a.cartan_matrix();
        assert_eq!(c.to_rows()[0], vec![1, 1, 1, 1, 2]);
        assert_eq!(c.to_rows()[4], vec![0, 0, 0, 0, 1]);
        assert!(a.check_associativity());
    }

    #[test]
    fn reduced_path_is_a_combination_of_basis() {
        let a = BoundQuiverAlgebra::new(canonical_presentation(&[2, 2, 2], &[q(3)]).unwrap());
        let qv = a.quiver();
        let x3: Vec<usize> = ["x3_1", "x3_2"].iter().map(|id| qv.arrow_index(id).unwrap()).collect();
        let (zero, w) = (qv.vertex_index("0").unwrap(), qv.vertex_index("w").unwrap());
        // x3 = x2 - 3 x1, basis is (x1, x2)
        assert_eq!(a.normal_form(zero, w, &x3), vec![q(-3), q(1)]);
    }

    #[test]
    fn small_algebras() {
        let k = BoundQuiverAlgebra::new(Presentation::<Rational>::free(kronecker()));
        assert_eq!(k.dimension(), 4);
        assert_eq!(k.cartan_matrix().to_rows(), vec![vec![1, 2], vec![0, 1]]);
        let a2 = BoundQuiverAlgebra::new(Presentation::<Rational>::free(linear_quiver(2)));
        assert_eq!(a2.cartan_matrix().to_rows(), vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn incidence_dimension_is_order_pairs() {
        for p in [build_xp(2, 2, 2).unwrap(), build_xp(2, 3, 3).unwrap(), Poset::chain(4)] {
            let a = BoundQuiverAlgebra::new(incidence_presentation::<Rational>(&p).unwrap());
            assert_eq!(a.dimension(), p.order_pair_count());
            assert!(a.check_associativity());
        }
    }
}
