//! Exhaustive search for posets sharing the certificate of `A~(1,p)`.

use quiverlab::derived::{certificate_search, incidence_algebra, no_poset_search};
use quiverlab::homology::certificate;
use quiverlab::posets::build_xp;
use quiverlab::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in 1..=4 {
        let r = no_poset_search::<Rational>(p)?;
        println!(
            "p = {p}: {} connected posets on {} elements, {} matches, {} retained",
            r.candidates,
            r.poset_size,
            r.matches.len(),
            r.analysis.len()
        );
    }

    let target = certificate(&incidence_algebra::<Rational>(&build_xp(2, 2, 2)?)?)?;
    let hits = certificate_search::<Rational>(&target, 5)?;
    println!("posets on 5 elements with the certificate of X(2,2,2): {}", hits.len());
    Ok(())
}
