use super::{ComplexOfReps, DerivedError, StalkComplex, VecComplex};
use crate::algebra::{BoundQuiverAlgebra, Representation};
use crate::exactla::{Field, Matrix};
use crate::posets::{arm_label, build_xp, Poset, XpFamily};
use crate::quivers::{canonical_presentation, incidence_presentation, Quiver};

/// A commutative diagram of complexes of vector spaces over a poset, stored
/// as a complex of representations of its incidence algebra.
#[derive(Clone, Debug)]
pub struct DiagramOfComplexes<F: Field> {
    pub complex: ComplexOfReps<F>,
}

impl<F: Field> DiagramOfComplexes<F> {
    /// Checks commutativity of every term and that the differentials are
    /// chain maps along every cover.
    pub fn new(incidence: &BoundQuiverAlgebra<F>, complex: ComplexOfReps<F>) -> Result<Self, DerivedError> {
        complex.validate(incidence).map_err(|e| match e {
            DerivedError::Malformed(msg) if msg.contains("relations") => DerivedError::NotCommutative,
            other => other,
        })?;
        Ok(DiagramOfComplexes { complex })
    }
}

/// One summand of `L_v`: `K_u` in the same degree, or `K_ω` one degree down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    K(usize),
    ShiftedOmega,
}

/// The functor from diagrams over `X_p` to complexes over `Λ(p)` for
/// `3 <= p1 <= p2 <= p3`, with `λ_3 = 1`.
pub struct FunctorF<F: Field> {
    weights: [usize; 3],
    poset: Poset,
    incidence: BoundQuiverAlgebra<F>,
    canonical: BoundQuiverAlgebra<F>,
    omega: usize,
    arm_ends: [usize; 3],
}

impl<F: Field> FunctorF<F> {
    pub fn new(weights: [usize; 3]) -> Result<Self, DerivedError> {
        let [p1, p2, p3] = weights;
        let family = XpFamily::of(p1, p2, p3).map_err(|e| DerivedError::UnsupportedFamily(e.to_string()))?;
        if family != XpFamily::General {
            return Err(DerivedError::UnsupportedFamily(format!(
                "the functor is implemented for 3 <= p1 <= p2 <= p3, got ({p1},{p2},{p3})"
            )));
        }
        let poset = build_xp(p1, p2, p3).expect("weights checked");
        let incidence = BoundQuiverAlgebra::new(incidence_presentation(&poset).expect("incidence presentation"));
        let canonical = BoundQuiverAlgebra::new(canonical_presentation(&weights, &[F::one()]).expect("valid type"));
        debug_assert_eq!(poset.labels(), canonical.quiver().vertices());
        let at = |label: &str| poset.index_of(label).expect("label of X_p");
        let omega = at("w");
        let arm_ends = [1, 2, 3].map(|i| at(&arm_label(i, weights[i - 1] - 1)));
        Ok(FunctorF { weights, poset, incidence, canonical, omega, arm_ends })
    }

    pub fn weights(&self) -> [usize; 3] {
        self.weights
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn incidence(&self) -> &BoundQuiverAlgebra<F> {
        &self.incidence
    }

    pub fn canonical(&self) -> &BoundQuiverAlgebra<F> {
        &self.canonical
    }

    fn arm_pred(&self, i: usize) -> usize {
        self.poset.index_of(&arm_label(i, self.weights[i - 1] - 2)).expect("p_i >= 3")
    }

    /// Summands of `L_v`.
    fn parts(&self, v: usize) -> Vec<Part> {
        let [e1, e2, e3] = self.arm_ends;
        use Part::*;
        if v == e1 {
            vec![K(e1), K(e3), ShiftedOmega]
        } else if v == e2 {
            vec![K(e2), K(e1), ShiftedOmega]
        } else if v == e3 {
            vec![K(e3), K(e2), ShiftedOmega]
        } else if v == self.omega {
            vec![K(e1), K(e2), K(e3), ShiftedOmega]
        } else {
            vec![K(v)]
        }
    }

    /// Block entries `(source part, target part, sign)` of the map along a
    /// canonical arrow.
    fn arrow_blocks(&self, source: usize, target: usize) -> Vec<(usize, usize, i64)> {
        let [e1, e2, e3] = self.arm_ends;
        if target == self.omega {
            let tparts = self.parts(target);
            self.parts(source)
                .iter()
                .enumerate()
                .map(|(k, part)| (k, tparts.iter().position(|t| t == part).expect("embedding"), 1))
                .collect()
        } else if target == e1 {
            vec![(0, 0, 1), (0, 1, -1)]
        } else if target == e2 {
            vec![(0, 0, -1), (0, 1, 1)]
        } else if target == e3 {
            vec![(0, 0, 1), (0, 1, -1)]
        } else {
            vec![(0, 0, 1)]
        }
    }

    /// `L_v` as a complex of vector spaces: `K_v`, or
    /// `cone(⊕ K_u -> K_ω)[-1]` at the arm ends and at `ω`.
    fn vertex_complex(&self, k: &ComplexOfReps<F>, v: usize, order_map: &impl Fn(i64, usize, usize) -> Matrix<F>) -> VecComplex<F> {
        let parts = self.parts(v);
        let sources: Vec<usize> = parts.iter().filter_map(|p| if let Part::K(u) = p { Some(*u) } else { None }).collect();
        if !parts.contains(&Part::ShiftedOmega) {
            return k.at_vertex(v);
        }
        let sum = sources.iter().fold(VecComplex::zero(), |acc, &u| acc.direct_sum(&k.at_vertex(u)));
        let target = k.at_vertex(self.omega);
        let y = |n: i64| -> Matrix<F> {
            sources.iter().fold(Matrix::zeros(target.dim(n), 0), |acc, &u| acc.hstack(&order_map(n, u, self.omega)))
        };
        VecComplex::cone(&sum, &target, y).shift(-1)
    }

    /// Applies the functor to a commutative diagram over `X_p`.
    pub fn apply(&self, diagram: &DiagramOfComplexes<F>) -> Result<ComplexOfReps<F>, DerivedError> {
        let k = &diagram.complex;
        let kq = self.incidence.quiver();
        let lq = self.canonical.quiver();
        let n_vertices = lq.vertex_count();
        if k.terms.is_empty() {
            return Ok(ComplexOfReps::zero(lq));
        }
        // K(u -> u') in degree n, for u <= u'.
        let order_map = |n: i64, u: usize, w: usize| -> Matrix<F> {
            let term = k.term(kq, n);
            if u == w {
                return Matrix::identity(term.dims[u]);
            }
            let path = kq.paths(u, w).into_iter().next().expect("u <= w in X_p");
            term.path_map(u, &path)
        };
        let locals: Vec<VecComplex<F>> = (0..n_vertices).map(|v| self.vertex_complex(k, v, &order_map)).collect();
        let (lo, hi) = (k.lo, k.hi() + 1);
        let part_dim = |n: i64, part: Part| match part {
            Part::K(u) => k.term(kq, n).dims[u],
            Part::ShiftedOmega => k.term(kq, n - 1).dims[self.omega],
        };
        let mut terms = Vec::new();
        for n in lo..=hi {
            let dims: Vec<usize> = locals.iter().map(|c| c.dim(n)).collect();
            let maps = lq
                .arrows()
                .iter()
                .map(|arrow| {
                    let (sp, tp) = (self.parts(arrow.source), self.parts(arrow.target));
                    let offsets = |parts: &[Part]| -> Vec<usize> {
                        parts.iter().scan(0, |acc, &p| { let o = *acc; *acc += part_dim(n, p); Some(o) }).collect()
                    };
                    let (so, to) = (offsets(&sp), offsets(&tp));
                    let mut m = Matrix::zeros(dims[arrow.target], dims[arrow.source]);
                    for (a, b, sign) in self.arrow_blocks(arrow.source, arrow.target) {
                        let block = match (sp[a], tp[b]) {
                            (Part::K(u), Part::K(w)) => order_map(n, u, w),
                            (Part::ShiftedOmega, Part::ShiftedOmega) => Matrix::identity(part_dim(n, Part::ShiftedOmega)),
                            _ => unreachable!("blocks never mix shifted and unshifted parts"),
                        };
                        m.set_block(to[b], so[a], &block.scale(&F::from_i64(sign)));
                    }
                    m
                })
                .collect();
            terms.push(Representation { dims, maps });
        }
        let diffs = (lo..hi)
            .map(|n| crate::algebra::ModuleMap { components: locals.iter().map(|c| c.diff(n)).collect() })
            .collect();
        let out = ComplexOfReps { lo, terms, diffs };
        out.validate(&self.canonical).map_err(|e| DerivedError::Internal(format!("functor output: {e}")))?;
        Ok(out.trimmed())
    }

    /// `S_x` in degree 0 as a diagram over `X_p`.
    pub fn simple_diagram(&self, x: usize) -> DiagramOfComplexes<F> {
        DiagramOfComplexes { complex: ComplexOfReps::stalk(self.incidence.simple(x), 0) }
    }

    /// Images of the simples computed through the functor, indexed like the
    /// elements of `X_p`.
    pub fn images_of_simples(&self) -> Result<Vec<StalkComplex<F>>, DerivedError> {
        (0..self.poset.len())
            .map(|x| {
                let image = self.apply(&self.simple_diagram(x))?;
                image.as_stalk().ok_or_else(|| DerivedError::Internal(format!("image of S_{} is not a stalk", self.poset.label(x))))
            })
            .collect()
    }

    /// Expected images: simples, except at the arm ends and `ω`, where the
    /// image is one-dimensional on a fixed support with identity maps.
    pub fn closed_form_image(&self, x: usize) -> StalkComplex<F> {
        let [e1, e2, e3] = self.arm_ends;
        let (support, degree) = if x == e1 {
            (vec![e1, e2, self.omega], 0)
        } else if x == e2 {
            (vec![e2, e3, self.omega], 0)
        } else if x == e3 {
            (vec![e1, e3, self.omega], 0)
        } else if x == self.omega {
            (vec![e1, e2, e3, self.omega], 1)
        } else {
            (vec![x], 0)
        };
        StalkComplex { module: thin_module(self.canonical.quiver(), &support), degree }
    }

    /// `ω`, then the three arm ends.
    pub fn special_elements(&self) -> [usize; 4] {
        let [e1, e2, e3] = self.arm_ends;
        [self.omega, e1, e2, e3]
    }

    /// Whether a complex over `Λ(p)` satisfies `x1 - x2 + x3 = 0` in every degree.
    pub fn satisfies_canonical_relation(&self, c: &ComplexOfReps<F>) -> bool {
        c.terms.iter().all(|t| self.canonical.satisfies_relations(t))
    }

    /// Predecessors of the arm ends, used by callers building test diagrams.
    pub fn arm_predecessors(&self) -> [usize; 3] {
        [1, 2, 3].map(|i| self.arm_pred(i))
    }
}

/// `k` on each vertex of `support`, identities on arrows inside it.
fn thin_module<F: Field>(q: &Quiver, support: &[usize]) -> Representation<F> {
    let dims: Vec<usize> = (0..q.vertex_count()).map(|v| usize::from(support.contains(&v))).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            if dims[a.source] == 1 && dims[a.target] == 1 {
                Matrix::identity(1)
            } else {
                Matrix::zeros(dims[a.target], dims[a.source])
            }
        })
        .collect();
    Representation { dims, maps }
}

/// Images of the simples of `X_p` under the functor, checked against the
/// closed forms.
pub fn f_images_of_simples<F: Field>(weights: [usize; 3]) -> Result<Vec<StalkComplex<F>>, DerivedError> {
    let functor = FunctorF::new(weights)?;
    let images = functor.images_of_simples()?;
    for (x, image) in images.iter().enumerate() {
        if *image != functor.closed_form_image(x) {
            return Err(DerivedError::Internal(format!(
                "image of S_{} differs from its closed form",
                functor.poset().label(x)
            )));
        }
    }
    Ok(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rational;

    #[test]
    fn simple_images_333() {
        let f = FunctorF::<Rational>::new([3, 3, 3]).unwrap();
        let images = f.images_of_simples().unwrap();
        for (x, image) in images.iter().enumerate() {
            assert_eq!(*image, f.closed_form_image(x), "element {}", f.poset().label(x));
        }
        let omega = f.poset().index_of("w").unwrap();
        assert_eq!(images[omega].degree, 1);
        assert_eq!(images[omega].module.total_dim(), 4);
    }

    #[test]
    fn zero_and_wrong_family() {
        let f = FunctorF::<Rational>::new([3, 3, 4]).unwrap();
        let zero = DiagramOfComplexes { complex: ComplexOfReps::zero(f.incidence().quiver()) };
        assert!(f.apply(&zero).unwrap().terms.is_empty());
        assert!(matches!(FunctorF::<Rational>::new([2, 3, 3]), Err(DerivedError::UnsupportedFamily(_))));
    }

    #[test]
    fn projective_diagram_satisfies_relation() {
        let f = FunctorF::<Rational>::new([3, 4, 4]).unwrap();
        for x in 0..f.poset().len() {
            let p = f.incidence().projective(x);
            let out = f.apply(&DiagramOfComplexes::new(f.incidence(), ComplexOfReps::stalk(p, 0)).unwrap()).unwrap();
            assert!(f.satisfies_canonical_relation(&out));
        }
    }
}
