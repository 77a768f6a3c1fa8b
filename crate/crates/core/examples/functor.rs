//! Applies the cone functor to simples and to random diagrams over `X_p`,
//! then checks the Ext tables on both sides.

use quiverlab::derived::{beilinson_table_check, random_projective_complex, DiagramOfComplexes, FunctorF};
use quiverlab::Rational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FunctorF::<Rational>::new([3, 3, 4])?;
    let p = f.poset();
    for (x, image) in f.images_of_simples()?.iter().enumerate() {
        println!("F(S_{}) = dims {:?} in degree {}", p.label(x), image.module.dims, image.degree);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3 {
        let c = random_projective_complex(f.incidence(), &mut rng, 3, 2);
        let out = f.apply(&DiagramOfComplexes::new(f.incidence(), c)?)?;
        println!(
            "random diagram -> cohomology {:?}, relation holds: {}",
            out.cohomology_dims(f.canonical().vertex_count()),
            f.satisfies_canonical_relation(&out)
        );
    }

    let report = beilinson_table_check::<Rational>([3, 3, 4], (-3, 3))?;
    println!("Ext tables equal: {}, support {:?}", report.equal, report.left.support());
    println!("signed dimension vectors unimodular: {}", report.k0_unimodular);
    Ok(())
}
