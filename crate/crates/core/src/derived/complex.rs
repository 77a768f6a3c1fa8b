use super::DerivedError;
use crate::algebra::{BoundQuiverAlgebra, ModuleMap, Representation};
use crate::exactla::{Field, Matrix};
use crate::quivers::Quiver;

/// Bounded complex of vector spaces `V^lo -> ... -> V^hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VecComplex<F: Field> {
    pub lo: i64,
    pub dims: Vec<usize>,
    /// `d[k]: V^{lo+k} -> V^{lo+k+1}`, one fewer than `dims`.
    pub d: Vec<Matrix<F>>,
}

impl<F: Field> VecComplex<F> {
    pub fn zero() -> Self {
        VecComplex { lo: 0, dims: Vec::new(), d: Vec::new() }
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64 - 1
    }

    pub fn dim(&self, n: i64) -> usize {
        usize::try_from(n - self.lo).ok().and_then(|k| self.dims.get(k).copied()).unwrap_or(0)
    }

    /// `d^n: V^n -> V^{n+1}`, zero outside the support.
    pub fn diff(&self, n: i64) -> Matrix<F> {
        match usize::try_from(n - self.lo).ok().and_then(|k| self.d.get(k)) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.dim(n + 1), self.dim(n)),
        }
    }

    /// Builds a complex on `lo..=hi` from callbacks.
    pub fn build(lo: i64, hi: i64, dim: impl Fn(i64) -> usize, diff: impl Fn(i64) -> Matrix<F>) -> Self {
        if hi < lo {
            return Self::zero();
        }
        VecComplex { lo, dims: (lo..=hi).map(&dim).collect(), d: (lo..hi).map(diff).collect() }
    }

    /// `K[n]^i = K^{i+n}` with `d_{K[n]} = (-1)^n d_K`.
    pub fn shift(&self, n: i64) -> Self {
        let sign = if n.rem_euclid(2) == 0 { F::one() } else { -F::one() };
        VecComplex { lo: self.lo - n, dims: self.dims.clone(), d: self.d.iter().map(|m| m.scale(&sign)).collect() }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let (lo, hi) = span(&[self, other]);
        Self::build(lo, hi, |n| self.dim(n) + other.dim(n), |n| self.diff(n).direct_sum(&other.diff(n)))
    }

    /// `cone(f)^i = K^{i+1} ⊕ L^i` with differential `[[-d_K, 0], [f, d_L]]`;
    /// `f(n): K^n -> L^n`.
    pub fn cone(k: &Self, l: &Self, f: impl Fn(i64) -> Matrix<F>) -> Self {
        let (lo, hi) = span(&[&k.shift(1), l]);
        Self::build(
            lo,
            hi,
            |n| k.dim(n + 1) + l.dim(n),
            |n| {
                let (k1, l0, k2, l1) = (k.dim(n + 1), l.dim(n), k.dim(n + 2), l.dim(n + 1));
                let mut m = Matrix::zeros(k2 + l1, k1 + l0);
                m.set_block(0, 0, &k.diff(n + 1).neg());
                m.set_block(k2, 0, &f(n + 1));
                m.set_block(k2, k1, &l.diff(n));
                m
            },
        )
    }

    pub fn is_complex(&self) -> bool {
        self.d.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }

    pub fn cohomology_dims(&self) -> Vec<(i64, usize)> {
        (self.lo..=self.hi())
            .map(|n| (n, self.dim(n) - self.diff(n).rank() - self.diff(n - 1).rank()))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.cohomology_dims().iter().all(|&(_, h)| h == 0)
    }
}

fn span<F: Field>(cs: &[&VecComplex<F>]) -> (i64, i64) {
    let nonempty: Vec<_> = cs.iter().filter(|c| !c.dims.is_empty()).collect();
    if nonempty.is_empty() {
        return (0, -1);
    }
    (nonempty.iter().map(|c| c.lo).min().unwrap(), nonempty.iter().map(|c| c.hi()).max().unwrap())
}

/// Bounded complex of representations `M^lo -> ... -> M^hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexOfReps<F: Field> {
    pub lo: i64,
    pub terms: Vec<Representation<F>>,
    /// `diffs[k]: terms[k] -> terms[k+1]`.
    pub diffs: Vec<ModuleMap<F>>,
}

/// Module placed in a single degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StalkComplex<F: Field> {
    pub module: Representation<F>,
    pub degree: i64,
}

/// Chain map `K -> L` given degreewise; `maps[k]` acts in degree `lo + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap<F: Field> {
    pub lo: i64,
    pub maps: Vec<ModuleMap<F>>,
}

impl<F: Field> ComplexOfReps<F> {
    pub fn new(
        a: &BoundQuiverAlgebra<F>,
        lo: i64,
        terms: Vec<Representation<F>>,
        diffs: Vec<ModuleMap<F>>,
    ) -> Result<Self, DerivedError> {
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(DerivedError::Malformed("need one differential between consecutive terms".into()));
        }
        let c = ComplexOfReps { lo, terms, diffs };
        c.validate(a)?;
        Ok(c)
    }

    pub fn validate(&self, a: &BoundQuiverAlgebra<F>) -> Result<(), DerivedError> {
        let q = a.quiver();
        if !self.terms.iter().all(|t| a.satisfies_relations(t)) {
            return Err(DerivedError::Malformed("a term violates the relations".into()));
        }
        for (k, d) in self.diffs.iter().enumerate() {
            if !d.is_module_map(q, &self.terms[k], &self.terms[k + 1]) {
                return Err(DerivedError::Malformed(format!("differential in degree {} is not a module map", self.lo + k as i64)));
            }
        }
        if self.diffs.windows(2).any(|w| !w[1].compose(&w[0]).is_zero()) {
            return Err(DerivedError::Malformed("d o d is not zero".into()));
        }
        Ok(())
    }

    pub fn zero(quiver: &Quiver) -> Self {
        let _ = quiver;
        ComplexOfReps { lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    pub fn stalk(module: Representation<F>, degree: i64) -> Self {
        ComplexOfReps { lo: degree, terms: vec![module], diffs: Vec::new() }
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn term(&self, quiver: &Quiver, n: i64) -> Representation<F> {
        match usize::try_from(n - self.lo).ok().and_then(|k| self.terms.get(k)) {
            Some(t) => t.clone(),
            None => Representation::zero(quiver),
        }
    }

    pub fn diff(&self, quiver: &Quiver, n: i64) -> ModuleMap<F> {
        match usize::try_from(n - self.lo).ok().and_then(|k| self.diffs.get(k)) {
            Some(d) => d.clone(),
            None => ModuleMap::zero(&self.term(quiver, n), &self.term(quiver, n + 1)),
        }
    }

    /// The complex of vector spaces sitting at vertex `v`.
    pub fn at_vertex(&self, v: usize) -> VecComplex<F> {
        VecComplex {
            lo: self.lo,
            dims: self.terms.iter().map(|t| t.dims[v]).collect(),
            d: self.diffs.iter().map(|d| d.components[v].clone()).collect(),
        }
    }

    /// `K[n]`: degree `d` moves to `d - n`, differentials scaled by `(-1)^n`.
    pub fn shift(&self, n: i64) -> Self {
        let sign = if n.rem_euclid(2) == 0 { F::one() } else { -F::one() };
        ComplexOfReps {
            lo: self.lo - n,
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    /// Mapping cone of `f: K -> L`, rejecting inputs that are not chain maps.
    pub fn cone(a: &BoundQuiverAlgebra<F>, k: &Self, l: &Self, f: &ChainMap<F>) -> Result<Self, DerivedError> {
        let q = a.quiver();
        let fmap = |n: i64| -> ModuleMap<F> {
            match usize::try_from(n - f.lo).ok().and_then(|i| f.maps.get(i)) {
                Some(m) => m.clone(),
                None => ModuleMap::zero(&k.term(q, n), &l.term(q, n)),
            }
        };
        for n in k.lo.min(l.lo) - 1..=k.hi().max(l.hi()) {
            let lhs = l.diff(q, n).compose(&fmap(n));
            let rhs = fmap(n + 1).compose(&k.diff(q, n));
            if lhs != rhs {
                return Err(DerivedError::NotChainMap(n));
            }
        }
        let lo = (k.lo - 1).min(l.lo);
        let hi = (k.hi() - 1).max(l.hi());
        if k.terms.is_empty() && l.terms.is_empty() {
            return Ok(Self::zero(q));
        }
        let terms: Vec<Representation<F>> = (lo..=hi).map(|n| k.term(q, n + 1).direct_sum(&l.term(q, n))).collect();
        let diffs = (lo..hi)
            .map(|n| {
                let (kd, fm, ld) = (k.diff(q, n + 1), fmap(n + 1), l.diff(q, n));
                let components = (0..a.vertex_count())
                    .map(|v| {
                        let (k1, l0) = (k.term(q, n + 1).dims[v], l.term(q, n).dims[v]);
                        let (k2, l1) = (k.term(q, n + 2).dims[v], l.term(q, n + 1).dims[v]);
                        let mut m = Matrix::zeros(k2 + l1, k1 + l0);
                        m.set_block(0, 0, &kd.components[v].neg());
                        m.set_block(k2, 0, &fm.components[v]);
                        m.set_block(k2, k1, &ld.components[v]);
                        m
                    })
                    .collect();
                ModuleMap { components }
            })
            .collect();
        Ok(ComplexOfReps { lo, terms, diffs }.trimmed())
    }

    /// Drops zero terms at both ends.
    pub fn trimmed(&self) -> Self {
        let nonzero: Vec<usize> = (0..self.terms.len()).filter(|&k| !self.terms[k].is_zero()).collect();
        let (Some(&first), Some(&last)) = (nonzero.first(), nonzero.last()) else {
            return ComplexOfReps { lo: 0, terms: Vec::new(), diffs: Vec::new() };
        };
        ComplexOfReps {
            lo: self.lo + first as i64,
            terms: self.terms[first..=last].to_vec(),
            diffs: self.diffs[first..last].to_vec(),
        }
    }

    /// The single nonzero term, if there is exactly one.
    pub fn as_stalk(&self) -> Option<StalkComplex<F>> {
        let t = self.trimmed();
        match t.terms.as_slice() {
            [m] => Some(StalkComplex { module: m.clone(), degree: t.lo }),
            _ => None,
        }
    }

    /// Per-degree total cohomology dimension.
    pub fn cohomology_dims(&self, vertices: usize) -> Vec<(i64, usize)> {
        let mut total: Vec<(i64, usize)> = (self.lo..=self.hi()).map(|n| (n, 0)).collect();
        for v in 0..vertices {
            for (slot, (_, h)) in total.iter_mut().zip(self.at_vertex(v).cohomology_dims()) {
                slot.1 += h;
            }
        }
        total
    }

    pub fn is_acyclic(&self, vertices: usize) -> bool {
        self.cohomology_dims(vertices).iter().all(|&(_, h)| h == 0)
    }
}

impl<F: Field> StalkComplex<F> {
    pub fn to_complex(&self) -> ComplexOfReps<F> {
        ComplexOfReps::stalk(self.module.clone(), self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rational;
    use crate::quivers::{linear_quiver, Presentation};

    fn two_term() -> VecComplex<Rational> {
        VecComplex { lo: 0, dims: vec![2, 1], d: vec![Matrix::from_i64_rows(&[&[1, 1]])] }
    }

    #[test]
    fn shift_moves_degrees_and_signs() {
        let k = two_term();
        let s = k.shift(1);
        assert_eq!(s.lo, -1);
        assert_eq!(s.diff(-1), Matrix::from_i64_rows(&[&[-1, -1]]));
        assert_eq!(s.shift(-1), k);
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let k = two_term();
        let c = VecComplex::cone(&k, &k, |n| Matrix::identity(k.dim(n)));
        assert!(c.is_complex());
        assert!(c.is_acyclic());
    }

    #[test]
    fn cones_with_zero_ends() {
        let k = two_term();
        let z = VecComplex::<Rational>::zero();
        let c = VecComplex::cone(&z, &k, |n| Matrix::zeros(k.dim(n), 0));
        assert_eq!(c, k);
        let c = VecComplex::cone(&k, &z, |n| Matrix::zeros(0, k.dim(n)));
        assert_eq!(c, k.shift(1));
    }

    #[test]
    fn module_cone_identity() {
        let a = BoundQuiverAlgebra::new(Presentation::<Rational>::free(linear_quiver(2)));
        let p = a.projective(0);
        let s = a.simple(0);
        let cover = a.projective_cover(&s);
        let pi = a.generator_map(&s, &cover);
        let k = ComplexOfReps::new(&a, 0, vec![p.clone(), s.clone()], vec![pi]).unwrap();
        let id = ChainMap { lo: 0, maps: vec![ModuleMap::identity(&p), ModuleMap::identity(&s)] };
        let c = ComplexOfReps::cone(&a, &k, &k, &id).unwrap();
        assert!(c.is_acyclic(2));
        let bad = ChainMap { lo: 0, maps: vec![ModuleMap::identity(&p), ModuleMap::zero(&s, &s)] };
        assert!(matches!(ComplexOfReps::cone(&a, &k, &k, &bad), Err(DerivedError::NotChainMap(_))));
    }
}
