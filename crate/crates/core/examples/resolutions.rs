//! Minimal projective resolutions of simples and their Ext groups.

use quiverlab::derived::incidence_algebra;
use quiverlab::homology::{ext_dims_from_resolution, simple_resolutions};
use quiverlab::posets::Poset;
use quiverlab::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let diamond = Poset::from_edges(
        vec!["0".into(), "a".into(), "b".into(), "1".into()],
        &[(0, 1), (0, 2), (1, 3), (2, 3)],
    )?;
    let a = incidence_algebra::<Rational>(&diamond)?;
    let n = a.vertex_count();
    let res = simple_resolutions(&a)?;

    for (x, r) in res.iter().enumerate() {
        let terms: Vec<Vec<usize>> = (0..r.terms.len()).map(|k| r.multiplicities(k, n)).collect();
        println!("S_{}: length {:?}, terms {terms:?}", diamond.label(x), r.length());
    }
    println!("Ext^i(S_x, S_y) for i = 0..2:");
    for (x, r) in res.iter().enumerate() {
        for y in 0..n {
            let ext = ext_dims_from_resolution(&a, r, &a.simple(y), 2);
            if ext.iter().any(|&d| d > 0) {
                println!("  ({}, {}): {ext:?}", diamond.label(x), diamond.label(y));
            }
        }
    }
    Ok(())
}
