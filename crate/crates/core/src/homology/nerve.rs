use std::collections::HashMap;

use crate::exactla::{Field, Matrix};
use crate::posets::{order_complex, Poset};

/// Simplicial cohomology of the order complex with coefficients in `F`,
/// degrees `0..=max_deg`.
pub fn nerve_cohomology<F: Field>(p: &Poset, max_deg: usize) -> Vec<usize> {
    let complex = order_complex(p);
    let faces = |d: usize| complex.faces_of_dim(d);
    // delta^d : C^d -> C^{d+1}, (δf)(σ) = Σ (-1)^i f(σ without vertex i)
    let coboundary = |d: usize| -> Matrix<F> {
        let (lower, upper) = (faces(d), faces(d + 1));
        let index: HashMap<&[usize], usize> = lower.iter().enumerate().map(|(k, f)| (f.as_slice(), k)).collect();
        let mut m = Matrix::zeros(upper.len(), lower.len());
        for (r, face) in upper.iter().enumerate() {
            for i in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(i);
                let sign = if i % 2 == 0 { F::one() } else { -F::one() };
                m[(r, index[sub.as_slice()])] = sign;
            }
        }
        m
    };
    let ranks: Vec<usize> = (0..=max_deg).map(|d| coboundary(d).rank()).collect();
    (0..=max_deg)
        .map(|d| faces(d).len() - ranks[d] - if d == 0 { 0 } else { ranks[d - 1] })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{Fp, Rational};

    #[test]
    fn cone_and_antichain() {
        let d = Poset::from_covers(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap();
        assert_eq!(nerve_cohomology::<Rational>(&d, 2), vec![1, 0, 0]);
        assert_eq!(nerve_cohomology::<Rational>(&Poset::antichain(3), 2), vec![3, 0, 0]);
    }

    #[test]
    fn two_sphere_model() {
        let labels = ["a1", "a2", "b1", "b2", "c1", "c2"];
        let mut covers = Vec::new();
        for a in ["a1", "a2"] {
            for b in ["b1", "b2"] {
                covers.push((a, b));
            }
        }
        for b in ["b1", "b2"] {
            for c in ["c1", "c2"] {
                covers.push((b, c));
            }
        }
        let p = Poset::from_covers(&labels, &covers).unwrap();
        assert_eq!(nerve_cohomology::<Rational>(&p, 3), vec![1, 0, 1, 0]);
        assert_eq!(nerve_cohomology::<Fp<2>>(&p, 3), vec![1, 0, 1, 0]);
    }

    #[test]
    fn circle_model() {
        let p = Poset::from_covers(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]).unwrap();
        assert_eq!(nerve_cohomology::<Rational>(&p, 2), vec![1, 1, 0]);
    }
}
