//! Compares derived-invariant certificates of `Λ(p)` and `kX_p`.

use quiverlab::derived::verify_weights;
use quiverlab::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (p1, p2, p3) in [(2, 2, 2), (2, 3, 3), (3, 3, 3), (3, 4, 5)] {
        let r = verify_weights::<Rational>(p1, p2, p3, None)?;
        println!("({p1},{p2},{p3}) {:?}", r.verdict);
        for c in &r.comparisons {
            let mark = if c.equal { "=" } else { "!=" };
            println!("  {:<16} {} {mark} {}", c.field, c.left, c.right);
        }
        if let Some(d) = &r.d_tilde {
            println!("  also matches {}: {}", d.quiver, d.matches);
        }
    }
    Ok(())
}
