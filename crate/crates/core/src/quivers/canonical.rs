use super::{Arrow, Presentation, Quiver, QuiverError, Relation};
use crate::exactla::Field;
use crate::posets::arm_label;

/// Weights and parameters after removing arms of weight one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedType<F: Field> {
    pub weights: Vec<usize>,
    pub lambdas: Vec<F>,
}

/// Validates `(weights, lambdas)` and rewrites it into an equivalent type with
/// every weight at least two (when three or more arms are present) and at
/// least two arms.
///
/// For `t >= 3` arms, `lambdas[k]` belongs to arm `k + 3`. Arm `i` contributes
/// the point `x_i^{p_i} = x_2^{p_2} - lambda_i x_1^{p_1}`, so arms 1 and 2 sit
/// at `(1, 0)` and `(0, 1)` in the basis `(x_1^{p_1}, x_2^{p_2})`. Dropping
/// arms changes the basis to the first two surviving arms and rescales the
/// others.
pub fn normalize_type<F: Field>(weights: &[usize], lambdas: &[F]) -> Result<NormalizedType<F>, QuiverError> {
    if let Some(&w) = weights.iter().find(|&&w| w == 0) {
        return Err(QuiverError::InvalidType(format!("weight {w} is not positive")));
    }
    let t = weights.len();
    let expected = t.saturating_sub(2);
    if lambdas.len() != expected {
        return Err(QuiverError::InvalidType(format!("{t} weights need {expected} parameters, got {}", lambdas.len())));
    }
    if lambdas.iter().any(Field::is_zero) {
        return Err(QuiverError::InvalidType("parameters must be nonzero".into()));
    }
    for (a, la) in lambdas.iter().enumerate() {
        if lambdas[a + 1..].contains(la) {
            return Err(QuiverError::InvalidType("parameters must be pairwise distinct".into()));
        }
    }
    if t < 3 {
        let mut w = weights.to_vec();
        w.resize(2, 1);
        return Ok(NormalizedType { weights: w, lambdas: Vec::new() });
    }

    let point = |i: usize| -> (F, F) {
        match i {
            0 => (F::one(), F::zero()),
            1 => (F::zero(), F::one()),
            _ => (-lambdas[i - 2].clone(), F::one()),
        }
    };
    let kept: Vec<usize> = (0..t).filter(|&i| weights[i] >= 2).collect();
    if kept.len() < 3 {
        let mut w: Vec<usize> = kept.iter().map(|&i| weights[i]).collect();
        w.resize(2, 1);
        return Ok(NormalizedType { weights: w, lambdas: Vec::new() });
    }
    let (u, v) = (point(kept[0]), point(kept[1]));
    let det = u.0.clone() * &v.1 - &(u.1.clone() * &v.0);
    let det_inv = det.inv().expect("distinct points are independent");
    let mut new_lambdas = Vec::new();
    for &k in &kept[2..] {
        let w = point(k);
        // w = alpha v + beta u
        let alpha = (u.0.clone() * &w.1 - &(u.1.clone() * &w.0)) * &det_inv;
        let beta = (w.0.clone() * &v.1 - &(w.1.clone() * &v.0)) * &det_inv;
        let alpha_inv = alpha.inv().expect("distinct points are independent");
        new_lambdas.push(-(beta * &alpha_inv));
    }
    Ok(NormalizedType { weights: kept.iter().map(|&i| weights[i]).collect(), lambdas: new_lambdas })
}

/// Star-shaped quiver of a weight sequence: a source `0`, a sink `w`, and arm
/// `i` a chain of `p_i` arrows `x{i}_{j}` through vertices `"i,j"`.
pub fn star_quiver(weights: &[usize]) -> Quiver {
    let mut vertices = vec!["0".to_string()];
    for (i, &p) in weights.iter().enumerate() {
        for j in 1..p {
            vertices.push(arm_label(i + 1, j));
        }
    }
    vertices.push("w".to_string());
    let omega = vertices.len() - 1;
    let index = |label: &str| vertices.iter().position(|v| v == label).unwrap();
    let mut arrows = Vec::new();
    for (i, &p) in weights.iter().enumerate() {
        for j in 1..=p {
            let source = if j == 1 { 0 } else { index(&arm_label(i + 1, j - 1)) };
            let target = if j == p { omega } else { index(&arm_label(i + 1, j)) };
            arrows.push(Arrow { id: format!("x{}_{}", i + 1, j), source, target });
        }
    }
    Quiver::from_parts(vertices, arrows).expect("star quiver is acyclic")
}

/// Arrow indices along arm `i` (0-based) of a star quiver.
pub fn arm_path(quiver: &Quiver, arm: usize, weight: usize) -> Vec<usize> {
    (1..=weight).map(|j| quiver.arrow_index(&format!("x{}_{}", arm + 1, j)).expect("arm arrow")).collect()
}

/// Canonical presentation of the algebra of a weighted projective line:
/// the star quiver with relations `x_i^{p_i} - x_2^{p_2} + lambda_i x_1^{p_1}`
/// for every arm past the second. Input is normalized first.
pub fn canonical_presentation<F: Field>(weights: &[usize], lambdas: &[F]) -> Result<Presentation<F>, QuiverError> {
    let norm = normalize_type(weights, lambdas)?;
    let quiver = star_quiver(&norm.weights);
    let x1 = arm_path(&quiver, 0, norm.weights[0]);
    let x2 = arm_path(&quiver, 1, norm.weights[1]);
    let mut relations = Vec::new();
    for (k, lambda) in norm.lambdas.iter().enumerate() {
        let i = k + 2;
        let xi = arm_path(&quiver, i, norm.weights[i]);
        relations.push(Relation::new(
            &quiver,
            vec![(F::one(), xi), (-F::one(), x2.clone()), (lambda.clone(), x1.clone())],
        )?);
    }
    Ok(Presentation::new(quiver, relations))
}

/// Default parameters `1, 2, ...` for the arms past the second.
pub fn default_lambdas<F: Field>(arms: usize) -> Vec<F> {
    (0..arms.saturating_sub(2)).map(|k| F::from_i64(k as i64 + 1)).collect()
}
