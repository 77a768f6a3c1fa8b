//! Poset basics: the `X_p` family, Hasse quivers and incidence algebras.

use quiverlab::derived::incidence_algebra;
use quiverlab::posets::{are_isomorphic, build_xp, enumerate_posets, order_complex, Poset};
use quiverlab::quivers::{hasse_quiver, unique_path_property};
use quiverlab::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = build_xp(2, 3, 3)?;
    println!("X(2,3,3) has {} elements", x.len());
    for &(a, b) in &x.hasse().covers {
        println!("  {} < {}", x.label(a), x.label(b));
    }

    let c = Poset::chain(2);
    let cube = c.product(&c).product(&c);
    println!("X(3,3,3) is the cube: {}", are_isomorphic(&build_xp(3, 3, 3)?, &cube).is_some());

    let kx = incidence_algebra::<Rational>(&x)?;
    println!("incidence algebra dimension {} ({} order pairs)", kx.dimension(), x.order_pair_count());
    println!("order complex face counts {:?}", order_complex(&x).dims());
    println!("Hasse quiver has unique paths: {}", unique_path_property(&hasse_quiver(&x)));

    for n in 1..=5 {
        let all = enumerate_posets(n, false)?.len();
        let connected = enumerate_posets(n, true)?.len();
        println!("n = {n}: {all} posets, {connected} connected");
    }
    Ok(())
}
