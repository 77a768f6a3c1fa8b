//! Hochschild cohomology through the relative bar complex, and nerve
//! cohomology of the order complex for incidence algebras.

use quiverlab::derived::{canonical_algebra, incidence_algebra};
use quiverlab::homology::{hochschild_bar, nerve_cohomology};
use quiverlab::posets::{build_xp, Poset};
use quiverlab::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let four = canonical_algebra::<Rational>(&[2, 2, 2, 2])?;
    println!("four-arm canonical algebra: HH = {:?}", hochschild_bar(&four, 2)?);

    let sphere = Poset::from_edges(
        ["a1", "a2", "b1", "b2", "c1", "c2"].map(String::from).to_vec(),
        &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5)],
    )?;
    for (name, p) in [("X(2,2,2)", build_xp(2, 2, 2)?), ("X(3,3,3)", build_xp(3, 3, 3)?), ("sphere", sphere)] {
        let bar = hochschild_bar(&incidence_algebra::<Rational>(&p)?, 2)?;
        let nerve = nerve_cohomology::<Rational>(&p, 2);
        println!("{name}: bar {bar:?}, nerve {nerve:?}");
    }
    Ok(())
}
