use super::HomologyError;
use crate::algebra::{BoundQuiverAlgebra, GeneratorMap, ModuleMap, ProjectiveSum, Representation};
use crate::exactla::{Field, Matrix};

/// Minimal projective resolution `... -> P_1 -> P_0 -> M -> 0`.
///
/// Differentials are stored through generator images: `differentials[n - 1][k]`
/// is the image of the `k`-th top generator of `P_n` inside `P_{n-1}(v_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveResolution<F: Field> {
    pub terms: Vec<ProjectiveSum>,
    pub augmentation: Vec<Vec<F>>,
    pub differentials: Vec<Vec<Vec<F>>>,
}

impl<F: Field> ProjectiveResolution<F> {
    /// Projective dimension; `None` for the zero module.
    pub fn length(&self) -> Option<usize> {
        self.terms.len().checked_sub(1)
    }

    /// Multiplicity vector of `P_n` over the vertices.
    pub fn multiplicities(&self, n: usize, vertices: usize) -> Vec<usize> {
        let mut m = vec![0; vertices];
        for &v in &self.terms[n].tops {
            m[v] += 1;
        }
        m
    }

    /// `d_n: P_n -> P_{n-1}` as a module map, for `n >= 1`.
    pub fn differential(&self, a: &BoundQuiverAlgebra<F>, n: usize) -> ModuleMap<F> {
        let target = a.projective_sum(&self.terms[n - 1]);
        a.generator_map(&target, &GeneratorMap { source: self.terms[n].clone(), images: self.differentials[n - 1].clone() })
    }

    /// No generator image has a component on a trivial path.
    pub fn is_minimal(&self, a: &BoundQuiverAlgebra<F>) -> bool {
        (1..self.terms.len()).all(|n| {
            let prev = &self.terms[n - 1];
            self.terms[n].tops.iter().zip(&self.differentials[n - 1]).all(|(&v, image)| {
                prev.tops.iter().enumerate().filter(|&(_, &u)| u == v).all(|(j, _)| image[prev.offset(a, v, j)].is_zero())
            })
        })
    }
}

/// Iterated projective covers; fails once more than `cap + 1` terms would be
/// needed.
pub fn minimal_resolution<F: Field>(
    a: &BoundQuiverAlgebra<F>,
    m: &Representation<F>,
    cap: usize,
) -> Result<ProjectiveResolution<F>, HomologyError> {
    let cover = a.projective_cover(m);
    let mut res = ProjectiveResolution { terms: Vec::new(), augmentation: cover.images.clone(), differentials: Vec::new() };
    if cover.source.tops.is_empty() {
        return Ok(res);
    }
    let p0 = a.projective_sum(&cover.source);
    let pi = a.generator_map(m, &cover);
    let (mut omega, mut inclusion) = a.kernel(&p0, &pi);
    res.terms.push(cover.source);
    while !omega.is_zero() {
        if res.terms.len() > cap {
            return Err(HomologyError::CapExceeded(cap));
        }
        let cover = a.projective_cover(&omega);
        let images = cover
            .source
            .tops
            .iter()
            .zip(&cover.images)
            .map(|(&v, g)| inclusion.components[v].mul_vec(g))
            .collect();
        res.differentials.push(images);
        let pn = a.projective_sum(&cover.source);
        let map = a.generator_map(&omega, &cover);
        let (next, next_inclusion) = a.kernel(&pn, &map);
        res.terms.push(cover.source);
        omega = next;
        inclusion = next_inclusion;
    }
    Ok(res)
}

/// Matrices of `Hom(P_n, N) -> Hom(P_{n+1}, N)` for every `n`, where
/// `Hom(P_n, N) = ⊕_k N(v_k)`.
pub fn hom_complex<F: Field>(
    a: &BoundQuiverAlgebra<F>,
    res: &ProjectiveResolution<F>,
    n_mod: &Representation<F>,
) -> Vec<Matrix<F>> {
    let hom_dim = |p: &ProjectiveSum| -> usize { p.tops.iter().map(|&v| n_mod.dims[v]).sum() };
    (1..res.terms.len())
        .map(|n| {
            let (prev, cur) = (&res.terms[n - 1], &res.terms[n]);
            let mut delta = Matrix::zeros(hom_dim(cur), hom_dim(prev));
            let mut row_off = 0;
            for (&v, image) in cur.tops.iter().zip(&res.differentials[n - 1]) {
                let mut col_off = 0;
                for (j, &u) in prev.tops.iter().enumerate() {
                    let off = prev.offset(a, v, j);
                    let mut block = Matrix::zeros(n_mod.dims[v], n_mod.dims[u]);
                    for b in 0..a.block_dim(u, v) {
                        let c = &image[off + b];
                        if !c.is_zero() {
                            block = block.add(&n_mod.path_map(u, a.basis_path(u, v, b)).scale(c));
                        }
                    }
                    delta.set_block(row_off, col_off, &block);
                    col_off += n_mod.dims[u];
                }
                row_off += n_mod.dims[v];
            }
            delta
        })
        .collect()
}

/// `dim Ext^i(M, N)` for `i = 0..=max_i` from a resolution of `M`.
pub fn ext_dims_from_resolution<F: Field>(
    a: &BoundQuiverAlgebra<F>,
    res: &ProjectiveResolution<F>,
    n_mod: &Representation<F>,
    max_i: usize,
) -> Vec<usize> {
    let deltas = hom_complex(a, res, n_mod);
    let cochain_dim = |i: usize| -> usize { res.terms.get(i).map_or(0, |p| p.tops.iter().map(|&v| n_mod.dims[v]).sum()) };
    let rank = |i: usize| -> usize { deltas.get(i).map_or(0, Matrix::rank) };
    (0..=max_i)
        .map(|i| cochain_dim(i) - rank(i) - if i == 0 { 0 } else { rank(i - 1) })
        .collect()
}

pub fn ext_dims<F: Field>(
    a: &BoundQuiverAlgebra<F>,
    m: &Representation<F>,
    n: &Representation<F>,
    max_i: usize,
) -> Result<Vec<usize>, HomologyError> {
    let res = minimal_resolution(a, m, a.dimension())?;
    Ok(ext_dims_from_resolution(a, &res, n, max_i))
}

/// Resolutions of all simples, indexed by vertex.
pub fn simple_resolutions<F: Field>(a: &BoundQuiverAlgebra<F>) -> Result<Vec<ProjectiveResolution<F>>, HomologyError> {
    (0..a.vertex_count()).map(|v| minimal_resolution(a, &a.simple(v), a.dimension())).collect()
}

/// Maximum projective dimension of a simple module.
pub fn global_dimension<F: Field>(a: &BoundQuiverAlgebra<F>) -> Result<usize, HomologyError> {
    Ok(simple_resolutions(a)?.iter().filter_map(ProjectiveResolution::length).max().unwrap_or(0))
}
