use rand::Rng;

use super::ComplexOfReps;
use crate::algebra::{BoundQuiverAlgebra, GeneratorMap, ModuleMap, ProjectiveSum};
use crate::exactla::Field;

/// Random bounded complex of projectives `P^{1-len} -> ... -> P^0` with at
/// most `max_summands` indecomposable summands per term and small integer
/// coefficients. Each generator of `P^n` maps into the kernel of `d^{n+1}`,
/// so `d ∘ d = 0` by construction.
pub fn random_projective_complex<F: Field, R: Rng + ?Sized>(
    a: &BoundQuiverAlgebra<F>,
    rng: &mut R,
    len: usize,
    max_summands: usize,
) -> ComplexOfReps<F> {
    let n = a.vertex_count();
    let random_sum = |rng: &mut R| ProjectiveSum { tops: (0..rng.gen_range(1..=max_summands)).map(|_| rng.gen_range(0..n)).collect() };
    let mut sums = vec![random_sum(rng)];
    let mut diffs: Vec<ModuleMap<F>> = Vec::new();
    let mut next_d: Option<ModuleMap<F>> = None;
    for _ in 1..len {
        let upper = sums.last().unwrap().clone();
        let upper_rep = a.projective_sum(&upper);
        let lower = random_sum(rng);
        let images = lower
            .tops
            .iter()
            .map(|&v| {
                let room = match &next_d {
                    Some(d) if d.components[v].rows() > 0 => d.components[v].kernel(),
                    _ => crate::exactla::Matrix::identity(upper_rep.dims[v]),
                };
                let mut image = vec![F::zero(); upper_rep.dims[v]];
                for c in 0..room.cols() {
                    let coeff = F::from_i64(rng.gen_range(-2..=2));
                    for (r, x) in image.iter_mut().enumerate() {
                        *x = x.clone() + &(room[(r, c)].clone() * &coeff);
                    }
                }
                image
            })
            .collect();
        let d = a.generator_map(&upper_rep, &GeneratorMap { source: lower.clone(), images });
        diffs.push(d.clone());
        next_d = Some(d);
        sums.push(lower);
    }
    sums.reverse();
    diffs.reverse();
    ComplexOfReps { lo: 1 - len as i64, terms: sums.iter().map(|s| a.projective_sum(s)).collect(), diffs }
}
