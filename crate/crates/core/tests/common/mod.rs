//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use proptest::test_runner::{Config, RngSeed};
use quiverlab::algebra::BoundQuiverAlgebra;
use quiverlab::derived::{canonical_algebra, incidence_algebra};
use quiverlab::posets::{build_xp, Poset};
use quiverlab::quivers::{a_tilde, d_tilde, kronecker, linear_quiver, oriented_a, Presentation, Quiver};
use quiverlab::Rational;

pub const DEFAULT_SEED: u64 = 20240601;

/// Seed for randomized tests, overridable through `QUIVERLAB_TEST_SEED`.
pub fn seed() -> u64 {
    std::env::var("QUIVERLAB_TEST_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED)
}

pub fn proptest_config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed()), failure_persistence: None, ..Config::default() }
}

pub fn diamond() -> Poset {
    Poset::from_covers(&["0", "a", "b", "1"], &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]).unwrap()
}

/// `a1, a2 < b1, b2 < c1, c2` with all cross relations: a model of the 2-sphere.
pub fn sphere() -> Poset {
    let covers = [
        ("a1", "b1"),
        ("a1", "b2"),
        ("a2", "b1"),
        ("a2", "b2"),
        ("b1", "c1"),
        ("b1", "c2"),
        ("b2", "c1"),
        ("b2", "c2"),
    ];
    Poset::from_covers(&["a1", "a2", "b1", "b2", "c1", "c2"], &covers).unwrap()
}

pub fn canonical(weights: &[usize]) -> BoundQuiverAlgebra<Rational> {
    canonical_algebra(weights).unwrap()
}

pub fn incidence(p: &Poset) -> BoundQuiverAlgebra<Rational> {
    incidence_algebra(p).unwrap()
}

pub fn path_algebra(q: Quiver) -> BoundQuiverAlgebra<Rational> {
    BoundQuiverAlgebra::new(Presentation::free(q))
}

/// Quivers used for reflection tests: every orientation of `A_4`, `D̃_4`,
/// and `Ã(1,p)` for `p <= 4`.
pub fn reflection_corpus() -> Vec<(String, Quiver)> {
    let mut out: Vec<(String, Quiver)> = (0..8).map(|o| (format!("A4[{o:03b}]"), oriented_a(4, o))).collect();
    out.push(("D~4".into(), d_tilde(4)));
    out.extend((1..=4).map(|p| (format!("A~(1,{p})"), a_tilde(p))));
    out
}

/// Named algebras covering every construction in the crate.
pub fn corpus() -> Vec<(String, BoundQuiverAlgebra<Rational>)> {
    let mut out = Vec::new();
    for w in [&[][..], &[3], &[2, 3], &[2, 2, 2], &[2, 2, 3], &[2, 3, 3], &[3, 3, 3], &[2, 2, 2, 2]] {
        out.push((format!("canonical{w:?}"), canonical(w)));
    }
    out.push(("diamond".into(), incidence(&diamond())));
    out.push(("chain3".into(), incidence(&Poset::chain(3))));
    out.push(("antichain2".into(), incidence(&Poset::antichain(2))));
    out.push(("sphere".into(), incidence(&sphere())));
    for (p1, p2, p3) in [(2, 2, 2), (2, 3, 3), (3, 3, 3)] {
        out.push((format!("X({p1},{p2},{p3})"), incidence(&build_xp(p1, p2, p3).unwrap())));
    }
    out.push(("A4".into(), path_algebra(linear_quiver(4))));
    out.push(("kronecker".into(), path_algebra(kronecker())));
    out.push(("D~5".into(), path_algebra(d_tilde(5))));
    for (name, q) in reflection_corpus() {
        out.push((name, path_algebra(q)));
    }
    out
}
