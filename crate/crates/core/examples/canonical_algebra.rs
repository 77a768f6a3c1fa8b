//! Builds the canonical algebra of a weight type and prints its structure.
//!
//! Run with `cargo run --example canonical_algebra -- 2,3,4`.

use quiverlab::derived::canonical_algebra;
use quiverlab::homology::{coxeter_polynomial, global_dimension};
use quiverlab::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,3,4".into());
    let weights: Vec<usize> = arg.split(',').map(str::parse).collect::<Result<_, _>>()?;
    let a = canonical_algebra::<Rational>(&weights)?;

    println!("weights {weights:?}");
    println!("vertices {:?}", a.vertex_order_labels());
    println!("arrows {}", a.quiver().arrows().len());
    println!("dimension {}", a.dimension());
    for row in a.cartan_matrix().to_rows() {
        println!("  {row:?}");
    }
    println!("coxeter polynomial {}", coxeter_polynomial(&a));
    println!("global dimension {}", global_dimension(&a)?);
    println!("associative: {}", a.check_associativity());
    Ok(())
}
