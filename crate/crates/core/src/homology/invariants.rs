use serde::Serialize;

use super::{ext_dims_from_resolution, simple_resolutions, HomologyError, ProjectiveResolution};
use crate::algebra::BoundQuiverAlgebra;
use crate::exactla::{Field, IntMatrix, IntPolynomial};

pub const COXETER_CONVENTION: &str = "phi=-C^{-T}C";

/// `Φ = -C^{-T} C`.
pub fn coxeter_matrix(cartan: &IntMatrix) -> IntMatrix {
    let inv = cartan.inverse().expect("Cartan matrix is unimodular");
    inv.transpose().mul(cartan).neg()
}

pub fn coxeter_polynomial_of(cartan: &IntMatrix) -> IntPolynomial {
    coxeter_matrix(cartan).char_poly().expect("square")
}

pub fn coxeter_polynomial<F: Field>(a: &BoundQuiverAlgebra<F>) -> IntPolynomial {
    coxeter_polynomial_of(&a.cartan_matrix())
}

/// Characteristic polynomial of the other common convention `-C^{-1} C^T`.
pub fn coxeter_polynomial_transposed(cartan: &IntMatrix) -> IntPolynomial {
    let inv = cartan.inverse().expect("Cartan matrix is unimodular");
    inv.mul(&cartan.transpose()).neg().char_poly().expect("square")
}

/// Alternating Ext sums between simples against `C^{-1}`, from precomputed
/// resolutions of the simples.
pub fn euler_form_check_with<F: Field>(a: &BoundQuiverAlgebra<F>, resolutions: &[ProjectiveResolution<F>]) -> bool {
    let cinv = a.cartan_matrix().inverse().expect("Cartan matrix is unimodular");
    let order = a.topological_order();
    let n = a.vertex_count();
    (0..n).all(|i| {
        let res = &resolutions[order[i]];
        let len = res.length().unwrap_or(0);
        (0..n).all(|j| {
            let ext = ext_dims_from_resolution(a, res, &a.simple(order[j]), len);
            let euler: i64 = ext.iter().enumerate().map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
            euler == cinv[(i, j)]
        })
    })
}

pub fn euler_form_check<F: Field>(a: &BoundQuiverAlgebra<F>) -> Result<bool, HomologyError> {
    Ok(euler_form_check_with(a, &simple_resolutions(a)?))
}

/// Derived-invariant fingerprint of an algebra of finite global dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub simples: usize,
    pub total_dimension: usize,
    pub det_cartan: i64,
    pub coxeter: IntPolynomial,
    pub snf_antisym: Vec<i64>,
    pub gldim: usize,
    pub convention: String,
    pub vertex_order: Vec<String>,
}

/// One compared field of two certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldComparison {
    pub field: String,
    pub left: serde_json::Value,
    pub right: serde_json::Value,
    pub equal: bool,
}

/// Fields compared by [`Certificate::matches`]. The global dimension and
/// total dimension are reported but are not derived invariants.
pub const INVARIANT_FIELDS: [&str; 4] = ["simples", "det_cartan", "coxeter", "snf_antisym"];

impl Certificate {
    /// Builds the certificate from the Cartan matrix alone; `gldim` is
    /// supplied by the caller.
    pub fn from_cartan(cartan: &IntMatrix, total_dimension: usize, gldim: usize, vertex_order: Vec<String>) -> Self {
        Certificate {
            simples: cartan.rows(),
            total_dimension,
            det_cartan: cartan.determinant(),
            coxeter: coxeter_polynomial_of(cartan),
            snf_antisym: cartan.sub(&cartan.transpose()).smith_normal_form(),
            gldim,
            convention: COXETER_CONVENTION.to_string(),
            vertex_order,
        }
    }

    pub fn compare(&self, other: &Certificate) -> Vec<FieldComparison> {
        let (l, r) = (serde_json::to_value(self).unwrap(), serde_json::to_value(other).unwrap());
        ["simples", "det_cartan", "coxeter", "snf_antisym", "gldim", "total_dimension"]
            .iter()
            .map(|&f| FieldComparison { field: f.to_string(), left: l[f].clone(), right: r[f].clone(), equal: l[f] == r[f] })
            .collect()
    }

    /// Equality of the derived-invariant fields.
    pub fn matches(&self, other: &Certificate) -> bool {
        self.compare(other).iter().filter(|c| INVARIANT_FIELDS.contains(&c.field.as_str())).all(|c| c.equal)
    }
}

pub fn certificate<F: Field>(a: &BoundQuiverAlgebra<F>) -> Result<Certificate, HomologyError> {
    let gldim = super::global_dimension(a)?;
    Ok(Certificate::from_cartan(&a.cartan_matrix(), a.dimension(), gldim, a.vertex_order_labels()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rational;
    use crate::posets::Poset;
    use crate::quivers::{incidence_presentation, kronecker, linear_quiver, Presentation};

    #[test]
    fn kronecker_and_a2() {
        let k = BoundQuiverAlgebra::new(Presentation::<Rational>::free(kronecker()));
        assert_eq!(coxeter_matrix(&k.cartan_matrix()).to_rows(), vec![vec![-1, -2], vec![2, 3]]);
        assert_eq!(coxeter_polynomial(&k).coeffs(), &[1, -2, 1]);
        let c = certificate(&k).unwrap();
        assert_eq!((c.simples, c.det_cartan, c.gldim), (2, 1, 1));
        assert_eq!(c.snf_antisym, vec![2, 2]);
        let a2 = BoundQuiverAlgebra::new(Presentation::<Rational>::free(linear_quiver(2)));
        assert_eq!(coxeter_matrix(&a2.cartan_matrix()).to_rows(), vec![vec![-1, -1], vec![1, 0]]);
        assert_eq!(coxeter_polynomial(&a2).coeffs(), &[1, 1, 1]);
        assert!(euler_form_check(&a2).unwrap());
    }

    #[test]
    fn antichain_certificate() {
        let a = BoundQuiverAlgebra::new(incidence_presentation::<Rational>(&Poset::antichain(3)).unwrap());
        let c = certificate(&a).unwrap();
        assert_eq!(c.coxeter, IntPolynomial::new(vec![1, 1]).pow(3));
        assert!(c.snf_antisym.is_empty());
        assert_eq!(c.gldim, 0);
    }

    #[test]
    fn diamond_euler() {
        let d = Poset::from_covers(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap();
        let a = BoundQuiverAlgebra::new(incidence_presentation::<Rational>(&d).unwrap());
        let cinv = a.cartan_matrix().inverse().unwrap();
        assert_eq!(cinv[(0, 3)], 1);
        assert!(euler_form_check(&a).unwrap());
        let json = serde_json::to_value(certificate(&a).unwrap()).unwrap();
        assert_eq!(json["convention"], "phi=-C^{-T}C");
        assert_eq!(json["coxeter"].as_array().unwrap().len(), 5);
    }
}
