//! Property tests. Every randomized case runs from a fixed seed, which can
//! be overridden with `QUIVERLAB_TEST_SEED`.

mod common;

use common::{canonical, corpus, incidence, path_algebra, proptest_config, reflection_corpus};
use proptest::prelude::*;
use proptest::test_runner::TestRunner;
use quiverlab::algebra::{BoundQuiverAlgebra, ModuleMap, Representation};
use quiverlab::derived::{
    beilinson_table_check, derived_hom_dims, derived_hom_from_resolution, random_projective_complex, resolve_complex,
    ChainMap, ComplexOfReps, DiagramOfComplexes, FunctorF, StalkComplex, VecComplex,
};
use quiverlab::exactla::{IntMatrix, Matrix};
use quiverlab::homology::{
    coxeter_polynomial, coxeter_polynomial_transposed, euler_form_check, hochschild_bar, mitchell_equivalence_check,
    nerve_cohomology, simple_resolutions,
};
use quiverlab::posets::{are_isomorphic, canonical_form, enumerate_posets, is_isomorphism, Poset};
use quiverlab::quivers::{
    bgp_reflect, canonical_presentation, default_lambdas, hasse_quiver, incidence_presentation, is_gentle,
    oriented_a, quiver_as_poset, unique_path_property,
};
use quiverlab::{Field, Fp, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// ---------- strategies ----------

fn int_rows(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

fn square_rows(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-3i64..=3, n), n))
}

/// Product of elementary row operations and swaps applied to the identity.
fn unimodular(n: usize, ops: &[(usize, usize, i64, bool)]) -> IntMatrix {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for &(i, j, k, swap) in ops {
        let (i, j) = (i % n, j % n);
        if swap {
            m.swap(i, j);
        } else if i != j {
            let src = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(src) {
                *x += k * y;
            }
        }
    }
    IntMatrix::from_rows(&m)
}

fn ops() -> impl Strategy<Value = Vec<(usize, usize, i64, bool)>> {
    prop::collection::vec((0usize..8, 0usize..8, -2i64..=2, any::<bool>()), 0..10)
}

/// Poset generated by a random DAG on `0..n`, then relabelled in random order.
fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max)
        .prop_flat_map(|n| {
            (prop::collection::vec(any::<bool>(), n * (n - 1) / 2), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
        .prop_map(|(bits, perm)| {
            let n = perm.len();
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e).collect();
            let labels = (0..n).map(|i| format!("x{i}")).collect();
            Poset::from_edges(labels, &edges).unwrap().permuted(&perm)
        })
}

fn weights() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(2usize..=4, 2..=5)
}

fn to_field<F: Field>(rows: &[Vec<i64>]) -> Matrix<F> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect())
}

fn kernel_holds<F: Field>(rows: &[Vec<i64>]) -> bool {
    let m = to_field::<F>(rows);
    let k = m.kernel();
    let (rank, cols) = (m.rank(), m.cols());
    rank + k.cols() == cols && (k.cols() == 0 || m.mul(&k).is_zero()) && k.rank() == k.cols()
}

/// `k` on the interval `[x, y]`, identities on arrows inside it.
fn interval_module(a: &BoundQuiverAlgebra<Rational>, p: &Poset, x: usize, y: usize) -> Representation<Rational> {
    let q = a.quiver();
    let inside = |v: usize| {
        let e = p.index_of(q.vertex(v)).unwrap();
        p.leq(x, e) && p.leq(e, y)
    };
    let dims: Vec<usize> = (0..q.vertex_count()).map(|v| usize::from(inside(v))).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|ar| if dims[ar.source] == 1 && dims[ar.target] == 1 { Matrix::identity(1) } else { Matrix::zeros(dims[ar.target], dims[ar.source]) })
        .collect();
    Representation::new(q, dims, maps).unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(proptest_config(96))]

    // ---------- exact linear algebra ----------

    #[test]
    fn kernel_and_rank_nullity(rows in int_rows(6)) {
        prop_assert!(kernel_holds::<Rational>(&rows));
        prop_assert!(kernel_holds::<Fp<7>>(&rows));
        prop_assert!(kernel_holds::<Fp<2>>(&rows));
    }

    #[test]
    fn char_poly_is_a_similarity_invariant(rows in square_rows(6), ops in ops()) {
        let m = IntMatrix::from_rows(&rows);
        let p = unimodular(rows.len(), &ops);
        let pinv = p.inverse().unwrap();
        prop_assert_eq!(p.mul(&m).mul(&pinv).char_poly().unwrap(), m.char_poly().unwrap());
    }

    #[test]
    fn smith_form_is_a_unimodular_invariant(rows in int_rows(5), left in ops(), right in ops()) {
        let m = IntMatrix::from_rows(&rows);
        let (p, q) = (unimodular(m.rows(), &left), unimodular(m.cols(), &right));
        let snf = m.smith_normal_form();
        prop_assert_eq!(p.mul(&m).mul(&q).smith_normal_form(), snf.clone());
        prop_assert!(snf.windows(2).all(|w| w[1] % w[0] == 0));
        prop_assert!(snf.iter().all(|&d| d > 0));
        prop_assert_eq!(snf.len(), to_field::<Rational>(&rows).rank());
    }

    // ---------- posets ----------

    #[test]
    fn hasse_round_trip(p in poset(7)) {
        let h = p.hasse();
        let back = Poset::from_edges(p.labels().to_vec(), &h.covers).unwrap();
        prop_assert_eq!(&back, &p);
        for &(x, y) in &h.covers {
            prop_assert!(p.lt(x, y));
            prop_assert!((0..p.len()).all(|z| !(p.lt(x, z) && p.lt(z, y))));
        }
        prop_assert_eq!(Poset::from_file(&p.to_file()).unwrap(), p);
    }

    #[test]
    fn isomorphism_is_an_equivalence(
        (p, s, t) in poset(7).prop_flat_map(|p| {
            let ids: Vec<usize> = (0..p.len()).collect();
            (Just(p), Just(ids.clone()).prop_shuffle(), Just(ids).prop_shuffle())
        })
    ) {
        let q = p.permuted(&s);
        let r = q.permuted(&t);
        let pq = are_isomorphic(&p, &q).expect("relabelling is an isomorphism");
        prop_assert!(is_isomorphism(&p, &q, &pq));
        let qp = are_isomorphic(&q, &p).expect("symmetric");
        prop_assert!(is_isomorphism(&q, &p, &qp));
        let pr = are_isomorphic(&p, &r).expect("transitive");
        prop_assert!(is_isomorphism(&p, &r, &pr));
        prop_assert_eq!(canonical_form(&p).0, canonical_form(&r).0);
        prop_assert!(are_isomorphic(&p, &p.opposite()).is_some() == (canonical_form(&p).0 == canonical_form(&p.opposite()).0));
    }

    // ---------- quivers ----------

    #[test]
    fn bgp_is_an_involution_and_keeps_coxeter(n in 2usize..=7, orientation in 0u64..64) {
        let q = oriented_a(n, orientation & ((1 << (n - 1)) - 1));
        let before = coxeter_polynomial(&path_algebra(q.clone()));
        for v in (0..n).filter(|&v| q.is_source(v) || q.is_sink(v)) {
            let r = bgp_reflect(&q, v).unwrap();
            prop_assert_eq!(&bgp_reflect(&r, v).unwrap(), &q);
            prop_assert_eq!(&coxeter_polynomial(&path_algebra(r)), &before);
        }
    }

    #[test]
    fn canonical_counts(w in weights()) {
        let pres = canonical_presentation::<Rational>(&w, &default_lambdas(w.len())).unwrap();
        prop_assert_eq!(pres.relations.len(), w.len() - 2);
        prop_assert_eq!(pres.quiver.vertex_count(), 2 + w.iter().map(|p| p - 1).sum::<usize>());
        prop_assert_eq!(pres.quiver.arrows().len(), w.iter().sum::<usize>());
        let a = BoundQuiverAlgebra::new(pres);
        // Pairs along each arm, with the three pairs among 0 and ω shared and
        // the 0 -> ω block two-dimensional.
        let expected = w.iter().map(|&p| binomial(p + 2, 2) - 3).sum::<usize>() + 4;
        prop_assert_eq!(a.dimension(), expected);
        prop_assert!(a.check_associativity());
        prop_assert_eq!(coxeter_polynomial_transposed(&a.cartan_matrix()), coxeter_polynomial(&a));
        prop_assert!(euler_form_check(&a).unwrap());
    }

    #[test]
    fn hasse_quivers_with_unique_paths_are_free(p in poset(7)) {
        let q = hasse_quiver(&p);
        prop_assume!(unique_path_property(&q));
        let back = quiver_as_poset(&q).unwrap();
        let pres = incidence_presentation::<Rational>(&back).unwrap();
        prop_assert!(pres.relations.is_empty());
        let paths: u64 = q.path_counts().iter().flatten().sum();
        prop_assert_eq!(BoundQuiverAlgebra::new(pres).dimension() as u64, paths);
    }

    // ---------- algebras ----------

    #[test]
    fn incidence_algebra_structure(p in poset(6)) {
        let a = incidence(&p);
        prop_assert!(a.check_associativity());
        let cartan_sum: i64 = a.cartan_matrix().to_rows().iter().flatten().sum();
        prop_assert_eq!(a.dimension() as i64, cartan_sum);
        prop_assert_eq!(a.dimension(), p.order_pair_count());
        let c = a.cartan_matrix();
        prop_assert!((0..c.rows()).all(|i| c[(i, i)] == 1 && (0..i).all(|j| c[(i, j)] == 0)));
        for v in 0..a.vertex_count() {
            let proj = a.projective(v);
            prop_assert!(a.satisfies_relations(&proj));
            prop_assert!(a.yoneda_holds(&proj));
            prop_assert!(a.yoneda_holds(&a.simple(v)));
        }
        for x in 0..p.len() {
            for y in (0..p.len()).filter(|&y| p.leq(x, y)) {
                let m = interval_module(&a, &p, x, y);
                prop_assert!(a.satisfies_relations(&m));
                prop_assert!(a.yoneda_holds(&m));
            }
        }
    }

    // ---------- homology ----------

    #[test]
    fn incidence_homology_invariants(p in poset(6)) {
        let a = incidence(&p);
        prop_assert_eq!(coxeter_polynomial_transposed(&a.cartan_matrix()), coxeter_polynomial(&a));
        prop_assert!(euler_form_check(&a).unwrap());
        prop_assert!(mitchell_equivalence_check::<Rational>(&p).unwrap().agree);
        for res in simple_resolutions(&a).unwrap() {
            prop_assert!(res.is_minimal(&a));
            let len = res.terms.len();
            for n in 1..len.saturating_sub(1) {
                prop_assert!(res.differential(&a, n).compose(&res.differential(&a, n + 1)).is_zero());
            }
            for n in 1..len {
                let d = res.differential(&a, n);
                let next = (n + 1 < len).then(|| res.differential(&a, n + 1));
                for v in 0..a.vertex_count() {
                    let dim = res.terms[n].dim_at(&a, v);
                    let image_in = next.as_ref().map_or(0, |d| d.components[v].rank());
                    prop_assert_eq!(dim, d.components[v].rank() + image_in, "exact at P_{} vertex {}", n, v);
                }
            }
        }
    }

    #[test]
    fn mitchell_on_larger_posets(p in poset(8)) {
        prop_assert!(mitchell_equivalence_check::<Rational>(&p).unwrap().agree);
    }

    // ---------- complexes ----------

    #[test]
    fn random_complexes_and_cones(p in poset(5), seed in any::<u64>(), len in 1usize..=4) {
        let a = incidence(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_projective_complex(&a, &mut rng, len, 3);
        prop_assert!(c.validate(&a).is_ok());
        for v in 0..a.vertex_count() {
            prop_assert!(c.at_vertex(v).is_complex());
        }
        let id = ChainMap { lo: c.lo, maps: c.terms.iter().map(ModuleMap::identity).collect() };
        let cone = ComplexOfReps::cone(&a, &c, &c, &id).unwrap();
        prop_assert!(cone.validate(&a).is_ok());
        prop_assert!(cone.is_acyclic(a.vertex_count()));
        let shifted = c.shift(1);
        prop_assert!(shifted.validate(&a).is_ok());
        let expected: Vec<(i64, usize)> = c.cohomology_dims(a.vertex_count()).into_iter().map(|(n, d)| (n - 1, d)).collect();
        prop_assert_eq!(shifted.cohomology_dims(a.vertex_count()), expected);
    }

    #[test]
    fn vector_space_cones(dims in prop::collection::vec(0usize..4, 1..5), lo in -3i64..3) {
        // Zero differentials; the cone of the identity is still acyclic.
        let k = VecComplex::<Rational>::build(lo, lo + dims.len() as i64 - 1, |n| dims[(n - lo) as usize], |n| {
            let (src, tgt) = (dims[(n - lo) as usize], dims.get((n + 1 - lo) as usize).copied().unwrap_or(0));
            Matrix::zeros(tgt, src)
        });
        prop_assert!(k.is_complex());
        let cone = VecComplex::cone(&k, &k, |n| Matrix::identity(k.dim(n)));
        prop_assert!(cone.is_complex());
        prop_assert!(cone.is_acyclic());
        prop_assert!(k.shift(2).shift(-2) == k);
    }
}

// ---------- exhaustive sweeps ----------

#[test]
fn bgp_corpus_keeps_coxeter() {
    for (name, q) in reflection_corpus() {
        let before = coxeter_polynomial(&path_algebra(q.clone()));
        for v in (0..q.vertex_count()).filter(|&v| q.is_source(v) || q.is_sink(v)) {
            let r = bgp_reflect(&q, v).unwrap();
            assert_eq!(bgp_reflect(&r, v).unwrap(), q, "{name}");
            assert_eq!(coxeter_polynomial(&path_algebra(r)), before, "{name} at {v}");
        }
    }
}

#[test]
fn corpus_conventions_and_euler_form() {
    for (name, a) in corpus() {
        assert_eq!(coxeter_polynomial_transposed(&a.cartan_matrix()), coxeter_polynomial(&a), "{name}");
        assert_eq!(coxeter_polynomial(&a).degree(), Some(a.vertex_count()), "{name}");
        assert_eq!(a.cartan_matrix().determinant(), 1, "{name}");
        if a.dimension() <= 40 {
            assert!(euler_form_check(&a).unwrap(), "{name}");
            assert!(a.check_associativity(), "{name}");
        }
    }
}

#[test]
fn multipath_posets_are_not_gentle() {
    let mut checked = 0;
    for n in 1..=5 {
        for p in enumerate_posets(n, false).unwrap() {
            if !unique_path_property(&hasse_quiver(&p)) {
                assert!(!is_gentle(&incidence_presentation::<Rational>(&p).unwrap()));
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn nerve_equals_bar_on_small_connected_posets() {
    for n in 1..=5 {
        for p in enumerate_posets(n, true).unwrap() {
            let bar = hochschild_bar(&incidence(&p), 2).unwrap();
            assert_eq!(bar, nerve_cohomology::<Rational>(&p, 2), "{:?}", p.to_file());
        }
    }
}

#[test]
fn functor_output_satisfies_the_relation() {
    let mut runner = TestRunner::new(proptest_config(24));
    for w in [[3, 3, 3], [3, 3, 4], [3, 4, 4]] {
        let f = FunctorF::<Rational>::new(w).unwrap();
        runner
            .run(&(any::<u64>(), 1usize..=3, 1usize..=3), |(seed, len, summands)| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let c = random_projective_complex(f.incidence(), &mut rng, len, summands);
                let diagram = DiagramOfComplexes::new(f.incidence(), c).unwrap();
                let image = f.apply(&diagram).unwrap();
                prop_assert!(f.satisfies_canonical_relation(&image));
                prop_assert!(image.validate(f.canonical()).is_ok());
                Ok(())
            })
            .unwrap();
    }
}

#[test]
fn stalk_hom_routes_agree() {
    for (name, a) in corpus().into_iter().filter(|(_, a)| a.dimension() <= 30) {
        let n = a.vertex_count();
        for x in 0..n {
            for dx in [0, 1] {
                let sx = StalkComplex { module: a.simple(x), degree: dx };
                let res = resolve_complex(&a, &sx.to_complex()).unwrap();
                for y in 0..n {
                    for dy in [-1, 0] {
                        let sy = StalkComplex { module: a.simple(y), degree: dy };
                        for i in -2..=4 {
                            assert_eq!(
                                derived_hom_dims(&a, &sx, &sy, i).unwrap(),
                                derived_hom_from_resolution(&a, &res, &sy.to_complex(), i),
                                "{name}: ({x},{dx}) ({y},{dy}) shift {i}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn left_tables_satisfy_the_euler_identity() {
    for w in [[3, 3, 3], [3, 3, 4]] {
        let report = beilinson_table_check::<Rational>(w, (-3, 3)).unwrap();
        let a = incidence(&quiverlab::posets::build_xp(w[0], w[1], w[2]).unwrap());
        let cinv = a.cartan_matrix().inverse().unwrap();
        let order = a.vertex_order_labels();
        let pos = |label: &str| order.iter().position(|l| l == label).unwrap();
        let labels = &report.left.labels;
        for (x, lx) in labels.iter().enumerate() {
            for (y, ly) in labels.iter().enumerate() {
                let euler: i64 = (-3..=3).map(|i: i64| if i.rem_euclid(2) == 0 { 1 } else { -1 } * report.left.get(x, y, i) as i64).sum();
                assert_eq!(euler, cinv[(pos(lx), pos(ly))], "{w:?} {lx} {ly}");
            }
        }
        // Rows of the Ext table sum, with signs, to the rows of C^{-1}.
        for (x, lx) in labels.iter().enumerate() {
            let row: i64 = (0..labels.len())
                .map(|y| (-3..=3).map(|i: i64| if i.rem_euclid(2) == 0 { 1 } else { -1 } * report.left.get(x, y, i) as i64).sum::<i64>())
                .sum();
            let expected: i64 = (0..labels.len()).map(|j| cinv[(pos(lx), j)]).sum();
            assert_eq!(row, expected);
        }
    }
}

#[test]
fn canonical_algebras_are_connected() {
    for w in [&[2, 2, 2][..], &[2, 3, 4], &[2, 2, 2, 2]] {
        assert_eq!(hochschild_bar(&canonical(w), 0).unwrap(), vec![1]);
    }
}
