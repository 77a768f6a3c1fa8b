use std::collections::HashMap;

use super::HomologyError;
use crate::algebra::BoundQuiverAlgebra;
use crate::exactla::{Field, Matrix};

/// Highest Hochschild degree computed.
pub const MAX_HOCHSCHILD_DEGREE: usize = 3;

/// Default ceiling on the dimension of a single cochain space.
pub const DEFAULT_COCHAIN_BUDGET: usize = 6000;

/// Composable sequence of radical basis elements, or an empty sequence at a
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Chain {
    source: usize,
    target: usize,
    elems: Vec<usize>,
}

struct Cochains {
    chains: Vec<Chain>,
    offsets: Vec<usize>,
    index: HashMap<(usize, Vec<usize>), usize>,
    dim: usize,
}

/// Hochschild cohomology `HH^0..=HH^max_deg` from the bar complex relative to
/// the vertex span `E`: degree-`n` cochains are `E`-bimodule maps
/// `rad^{⊗_E n} -> A`, one block `A(s, t)` per composable `n`-chain of
/// radical basis elements from `s` to `t`.
pub fn hochschild_bar<F: Field>(a: &BoundQuiverAlgebra<F>, max_deg: usize) -> Result<Vec<usize>, HomologyError> {
    hochschild_bar_with_budget(a, max_deg, DEFAULT_COCHAIN_BUDGET)
}

pub fn hochschild_bar_with_budget<F: Field>(
    a: &BoundQuiverAlgebra<F>,
    max_deg: usize,
    budget: usize,
) -> Result<Vec<usize>, HomologyError> {
    if max_deg > MAX_HOCHSCHILD_DEGREE {
        return Err(HomologyError::DegreeUnsupported { requested: max_deg, max: MAX_HOCHSCHILD_DEGREE });
    }
    let radical = a.radical_basis();
    let rad_index: HashMap<(usize, usize, usize), usize> = radical.iter().enumerate().map(|(k, &r)| (r, k)).collect();

    let mut levels: Vec<Cochains> = Vec::new();
    let mut chains: Vec<Chain> =
        (0..a.vertex_count()).map(|v| Chain { source: v, target: v, elems: Vec::new() }).collect();
    for n in 0..=max_deg + 1 {
        let level = cochains(a, chains.clone());
        if level.dim > budget {
            return Err(HomologyError::BudgetExceeded { degree: n, dim: level.dim, budget });
        }
        levels.push(level);
        chains = chains
            .iter()
            .flat_map(|c| {
                radical.iter().enumerate().filter(move |(_, r)| r.0 == c.target).map(move |(k, r)| {
                    let mut elems = c.elems.clone();
                    elems.push(k);
                    Chain { source: c.source, target: r.1, elems }
                })
            })
            .collect();
    }

    let ranks: Vec<usize> = (0..=max_deg)
        .map(|n| coboundary(a, &radical, &rad_index, &levels[n], &levels[n + 1]).rank())
        .collect();
    Ok((0..=max_deg).map(|n| levels[n].dim - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] }).collect())
}

fn cochains<F: Field>(a: &BoundQuiverAlgebra<F>, chains: Vec<Chain>) -> Cochains {
    let mut offsets = Vec::with_capacity(chains.len());
    let mut index = HashMap::new();
    let mut dim = 0;
    for (k, c) in chains.iter().enumerate() {
        offsets.push(dim);
        index.insert((c.source, c.elems.clone()), k);
        dim += a.block_dim(c.source, c.target);
    }
    Cochains { chains, offsets, index, dim }
}

/// `(δf)(a_1..a_{n+1}) = a_1 f(a_2..) + Σ_i (-1)^i f(.., a_i a_{i+1}, ..) + (-1)^{n+1} f(..a_n) a_{n+1}`.
fn coboundary<F: Field>(
    a: &BoundQuiverAlgebra<F>,
    radical: &[(usize, usize, usize)],
    rad_index: &HashMap<(usize, usize, usize), usize>,
    lower: &Cochains,
    upper: &Cochains,
) -> Matrix<F> {
    let mut m: Matrix<F> = Matrix::zeros(upper.dim, lower.dim);
    let sign = |k: usize| if k % 2 == 0 { F::one() } else { -F::one() };
    for (ci, c) in upper.chains.iter().enumerate() {
        let row0 = upper.offsets[ci];
        let n = c.elems.len() - 1;
        let (s, t) = (c.source, c.target);
        let first = radical[c.elems[0]];
        let last = radical[c.elems[n]];

        // a_1 · f(a_2 .. a_{n+1})
        let tail = lower.index[&(first.1, c.elems[1..].to_vec())];
        for beta in 0..a.block_dim(first.1, t) {
            let prod = a.multiply_basis(s, first.1, t, first.2, beta);
            for (gamma, x) in prod.into_iter().enumerate() {
                if !x.is_zero() {
                    let cell = &mut m[(row0 + gamma, lower.offsets[tail] + beta)];
                    *cell = cell.clone() + &x;
                }
            }
        }

        // (-1)^i f(.., a_i a_{i+1}, ..)
        for i in 1..=n {
            let (x, y) = (radical[c.elems[i - 1]], radical[c.elems[i]]);
            let prod = a.multiply_basis(x.0, x.1, y.1, x.2, y.2);
            for (gamma, coeff) in prod.into_iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let mut elems = c.elems[..i - 1].to_vec();
                elems.push(rad_index[&(x.0, y.1, gamma)]);
                elems.extend_from_slice(&c.elems[i + 1..]);
                let col0 = lower.offsets[lower.index[&(s, elems)]];
                let value = sign(i) * &coeff;
                for beta in 0..a.block_dim(s, t) {
                    let cell = &mut m[(row0 + beta, col0 + beta)];
                    *cell = cell.clone() + &value;
                }
            }
        }

        // (-1)^{n+1} f(a_1 .. a_n) · a_{n+1}
        let head = lower.index[&(s, c.elems[..n].to_vec())];
        for beta in 0..a.block_dim(s, last.0) {
            let prod = a.multiply_basis(s, last.0, t, beta, last.2);
            for (gamma, x) in prod.into_iter().enumerate() {
                if !x.is_zero() {
                    let cell = &mut m[(row0 + gamma, lower.offsets[head] + beta)];
                    *cell = cell.clone() + &(sign(n + 1) * &x);
                }
            }
        }
    }
    m
}
