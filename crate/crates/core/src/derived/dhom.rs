use super::{ComplexOfReps, DerivedError, StalkComplex};
use crate::algebra::{BoundQuiverAlgebra, GeneratorMap, ModuleMap, ProjectiveSum};
use crate::exactla::{Field, Matrix};
use crate::homology::{ext_dims, ext_dims_from_resolution, ProjectiveResolution};

/// `dim Hom(x, y[i])` for stalks: `Ext^{i + deg x - deg y}`.
pub fn derived_hom_dims<F: Field>(
    a: &BoundQuiverAlgebra<F>,
    x: &StalkComplex<F>,
    y: &StalkComplex<F>,
    i: i64,
) -> Result<usize, DerivedError> {
    let j = i + x.degree - y.degree;
    if j < 0 {
        return Ok(0);
    }
    Ok(ext_dims(a, &x.module, &y.module, j as usize)?[j as usize])
}

/// Bounded-above complex of projectives `P -> X` with acyclic cone, given by
/// generator images of the differentials and of the comparison map.
#[derive(Clone, Debug)]
pub struct ComplexResolution<F: Field> {
    pub lo: i64,
    /// `terms[k]` sits in degree `lo + k`.
    pub terms: Vec<ProjectiveSum>,
    /// Images of the generators of `P^n` in `P^{n+1}`.
    pub differentials: Vec<Vec<Vec<F>>>,
    /// Images of the generators of `P^n` in `X^n`.
    pub comparison: Vec<Vec<Vec<F>>>,
}

impl<F: Field> ComplexResolution<F> {
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    fn term(&self, n: i64) -> Option<&ProjectiveSum> {
        usize::try_from(n - self.lo).ok().and_then(|k| self.terms.get(k))
    }

    fn images(&self, n: i64) -> Option<&Vec<Vec<F>>> {
        usize::try_from(n - self.lo).ok().and_then(|k| self.differentials.get(k))
    }
}

/// Resolves a bounded complex degree by degree from the top: `P^n` covers
/// the cycles of the partial cone `P^{n+1} ⊕ X^n -> P^{n+2} ⊕ X^{n+1}`,
/// `(p, x) ↦ (-d p, φ p + d x)`.
pub fn resolve_complex<F: Field>(a: &BoundQuiverAlgebra<F>, x: &ComplexOfReps<F>) -> Result<ComplexResolution<F>, DerivedError> {
    let q = a.quiver();
    let x = x.trimmed();
    if x.terms.is_empty() {
        return Ok(ComplexResolution { lo: 0, terms: Vec::new(), differentials: Vec::new(), comparison: Vec::new() });
    }
    let cap = x.terms.len() + a.vertex_count() + 2;
    // Built from the top; reversed at the end.
    let mut terms: Vec<ProjectiveSum> = Vec::new();
    let mut diffs: Vec<Vec<Vec<F>>> = Vec::new();
    let mut comps: Vec<Vec<Vec<F>>> = Vec::new();
    let empty = ProjectiveSum { tops: Vec::new() };
    let mut n = x.hi();
    loop {
        let (p1, p2) = (terms.last().unwrap_or(&empty), terms.len().checked_sub(2).map_or(&empty, |k| &terms[k]));
        let (rp1, rp2) = (a.projective_sum(p1), a.projective_sum(p2));
        let d_next = match terms.len() {
            0 | 1 => ModuleMap::zero(&rp1, &rp2),
            k => a.generator_map(&rp2, &GeneratorMap { source: p1.clone(), images: diffs[k - 1].clone() }),
        };
        let phi_next = match terms.len() {
            0 => ModuleMap::zero(&rp1, &x.term(q, n + 1)),
            k => a.generator_map(&x.term(q, n + 1), &GeneratorMap { source: p1.clone(), images: comps[k - 1].clone() }),
        };
        let (xn, xn1) = (x.term(q, n), x.term(q, n + 1));
        let source = rp1.direct_sum(&xn);
        let dx = x.diff(q, n);
        let big = ModuleMap {
            components: (0..a.vertex_count())
                .map(|v| {
                    let (pa, pb, xa, xb) = (rp1.dims[v], rp2.dims[v], xn.dims[v], xn1.dims[v]);
                    let mut m = Matrix::zeros(pb + xb, pa + xa);
                    m.set_block(0, 0, &d_next.components[v].neg());
                    m.set_block(pb, 0, &phi_next.components[v]);
                    m.set_block(pb, pa, &dx.components[v]);
                    m
                })
                .collect(),
        };
        let (cycles, inclusion) = a.kernel(&source, &big);
        if cycles.is_zero() && n < x.lo {
            break;
        }
        if terms.len() > cap {
            return Err(DerivedError::Homology(crate::homology::HomologyError::CapExceeded(cap)));
        }
        let cover = a.projective_cover(&cycles);
        let (mut dn, mut cn) = (Vec::new(), Vec::new());
        for (&v, g) in cover.source.tops.iter().zip(&cover.images) {
            let y = inclusion.components[v].mul_vec(g);
            let split = rp1.dims[v];
            dn.push(y[..split].iter().map(|c| -c.clone()).collect());
            cn.push(y[split..].to_vec());
        }
        terms.push(cover.source);
        diffs.push(dn);
        comps.push(cn);
        n -= 1;
    }
    terms.reverse();
    diffs.reverse();
    comps.reverse();
    Ok(ComplexResolution { lo: n + 1, terms, differentials: diffs, comparison: comps })
}

/// `dim H^i Hom^•(P, Y)` for a resolution `P` of `X`, i.e. `dim Hom(X, Y[i])`.
pub fn derived_hom_from_resolution<F: Field>(
    a: &BoundQuiverAlgebra<F>,
    p: &ComplexResolution<F>,
    y: &ComplexOfReps<F>,
    i: i64,
) -> usize {
    let q = a.quiver();
    let hom_dim = |k: i64| -> usize {
        (p.lo..=p.hi())
            .map(|n| p.term(n).unwrap().tops.iter().map(|&v| y.term(q, n + k).dims[v]).sum::<usize>())
            .sum()
    };
    let delta = |k: i64| -> Matrix<F> { hom_differential(a, p, y, k) };
    let rank = |k: i64| if hom_dim(k) == 0 || hom_dim(k + 1) == 0 { 0 } else { delta(k).rank() };
    hom_dim(i) - rank(i) - rank(i - 1)
}

/// `δ^k f = d_Y f - (-1)^k f d_P` on `Hom^k = ⊕_n Hom(P^n, Y^{n+k})`.
fn hom_differential<F: Field>(a: &BoundQuiverAlgebra<F>, p: &ComplexResolution<F>, y: &ComplexOfReps<F>, k: i64) -> Matrix<F> {
    let q = a.quiver();
    let sign = if k.rem_euclid(2) == 0 { -F::one() } else { F::one() };
    // Offsets of each (degree, generator) block.
    let layout = |k: i64| -> (Vec<Vec<usize>>, usize) {
        let mut offs = Vec::new();
        let mut total = 0;
        for n in p.lo..=p.hi() {
            let t = y.term(q, n + k);
            let mut row = Vec::new();
            for &v in &p.term(n).unwrap().tops {
                row.push(total);
                total += t.dims[v];
            }
            offs.push(row);
        }
        (offs, total)
    };
    let (src_off, src_dim) = layout(k);
    let (tgt_off, tgt_dim) = layout(k + 1);
    let mut m = Matrix::zeros(tgt_dim, src_dim);
    for n in p.lo..=p.hi() {
        let idx = (n - p.lo) as usize;
        let pn = p.term(n).unwrap();
        let dy = y.diff(q, n + k);
        for (j, &v) in pn.tops.iter().enumerate() {
            m.set_block(tgt_off[idx][j], src_off[idx][j], &dy.components[v]);
        }
        let (Some(next), Some(images)) = (p.term(n + 1), p.images(n)) else { continue };
        let target = y.term(q, n + 1 + k);
        for (j, (&v, image)) in pn.tops.iter().zip(images).enumerate() {
            for (l, &u) in next.tops.iter().enumerate() {
                let off = next.offset(a, v, l);
                let mut block = Matrix::zeros(target.dims[v], target.dims[u]);
                for b in 0..a.block_dim(u, v) {
                    let c = &image[off + b];
                    if !c.is_zero() {
                        block = block.add(&target.path_map(u, a.basis_path(u, v, b)).scale(&(sign.clone() * c)));
                    }
                }
                let cur = m.block(tgt_off[idx][j], src_off[idx + 1][l], block.rows(), block.cols());
                m.set_block(tgt_off[idx][j], src_off[idx + 1][l], &cur.add(&block));
            }
        }
    }
    m
}

/// `dim Hom(X, Y[i])` for bounded complexes, through a resolution of `X`.
pub fn derived_hom_complexes<F: Field>(
    a: &BoundQuiverAlgebra<F>,
    x: &ComplexOfReps<F>,
    y: &ComplexOfReps<F>,
    i: i64,
) -> Result<usize, DerivedError> {
    Ok(derived_hom_from_resolution(a, &resolve_complex(a, x)?, y, i))
}

/// Ext between stalks from a resolution of the source module.
pub fn stalk_hom_with_resolution<F: Field>(
    a: &BoundQuiverAlgebra<F>,
    res: &ProjectiveResolution<F>,
    x_degree: i64,
    y: &StalkComplex<F>,
    i: i64,
) -> usize {
    let j = i + x_degree - y.degree;
    if j < 0 {
        return 0;
    }
    ext_dims_from_resolution(a, res, &y.module, j as usize)[j as usize]
}
