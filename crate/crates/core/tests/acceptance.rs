//! Acceptance run: one PASS/FAIL line per criterion, with timings.

mod common;

use std::time::{Duration, Instant};

use common::{corpus, incidence, path_algebra, reflection_corpus};
use quiverlab::derived::{
    beilinson_table_check, canonical_algebra, certificate_search, f_images_of_simples, no_poset_search, verify_remark,
    verify_t2, verify_weights, FunctorF, DEFAULT_WINDOW,
};
use quiverlab::homology::{
    certificate, coxeter_polynomial, coxeter_polynomial_transposed, euler_form_check, hochschild_bar,
    mitchell_equivalence_check, nerve_cohomology,
};
use quiverlab::posets::{are_isomorphic, build_xp, enumerate_posets, RemarkFamily};
use quiverlab::quivers::bgp_reflect;
use quiverlab::Rational;

type Check = fn() -> Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn over_budget(label: &str, elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(elapsed <= budget, || format!("{label} took {elapsed:.1?}, budget {budget:?}"))
}

fn triples(max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for p1 in 2..=max {
        for p2 in p1..=max {
            for p3 in p2..=max {
                out.push((p1, p2, p3));
            }
        }
    }
    out
}

fn certificate_sweep() -> Result<String, String> {
    let start = Instant::now();
    let all = triples(5);
    for &(p1, p2, p3) in &all {
        let r = verify_weights::<Rational>(p1, p2, p3, None).map_err(err)?;
        let (c, x) = (&r.certificates.canonical, &r.certificates.poset);
        ensure(c.matches(x), || format!("{:?}: differing fields {:?}", (p1, p2, p3), r.comparisons.iter().filter(|f| !f.equal).map(|f| &f.field).collect::<Vec<_>>()))?;
        ensure(c.det_cartan == 1 && x.det_cartan == 1, || format!("{:?}: det C != 1", (p1, p2, p3)))?;
    }
    over_budget("sweep", start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("{} triples, all invariant fields equal", all.len()))
}

fn ext_tables() -> Result<String, String> {
    let mut notes = Vec::new();
    for w in [[3, 3, 3], [3, 3, 4], [3, 4, 4]] {
        let start = Instant::now();
        let r = beilinson_table_check::<Rational>(w, DEFAULT_WINDOW).map_err(err)?;
        ensure(r.equal, || format!("{w:?}: tables differ"))?;
        ensure(r.k0_unimodular, || format!("{w:?}: signed dimension vectors not unimodular"))?;
        over_budget(&format!("{w:?}"), start.elapsed(), Duration::from_secs(120))?;
        notes.push(format!("{w:?} {:.1?}", start.elapsed()));
    }
    Ok(format!("window {DEFAULT_WINDOW:?}: {}", notes.join(", ")))
}

fn functor_images() -> Result<String, String> {
    let images = f_images_of_simples::<Rational>([3, 3, 3]).map_err(err)?;
    let f = FunctorF::<Rational>::new([3, 3, 3]).map_err(err)?;
    let mut special = 0;
    for (x, image) in images.iter().enumerate() {
        ensure(*image == f.closed_form_image(x), || format!("S_{} differs", f.poset().label(x)))?;
        if image.module != f.canonical().simple(x) {
            special += 1;
        }
    }
    let omega = f.poset().index_of("w").ok_or("no element w")?;
    ensure(images[omega].degree == 1, || "S_w is not in degree 1".into())?;
    ensure(special == 4, || format!("{special} non-simple images, expected 4"))?;
    ensure(images.iter().enumerate().all(|(x, s)| x == omega || s.degree == 0), || "unexpected degree".into())?;
    Ok(format!("{} simples, 4 special images, S_w in degree 1", images.len()))
}

fn four_arm_hochschild() -> Result<String, String> {
    let start = Instant::now();
    let a = canonical_algebra::<Rational>(&[2, 2, 2, 2]).map_err(err)?;
    let hh = hochschild_bar(&a, 2).map_err(err)?;
    ensure(hh[2] == 1, || format!("HH^2 = {}", hh[2]))?;
    over_budget("HH", start.elapsed(), Duration::from_secs(300))?;
    Ok(format!("lambda = (1, 2): HH^0 = {}, HH^1 = {}, HH^2 = {}", hh[0], hh[1], hh[2]))
}

fn nerve_bar() -> Result<String, String> {
    let mut count = 0;
    for n in 1..=5 {
        for p in enumerate_posets(n, true).map_err(err)? {
            let bar = hochschild_bar(&incidence(&p), 2).map_err(err)?;
            let nerve = nerve_cohomology::<Rational>(&p, 2);
            ensure(bar == nerve, || format!("{:?}: bar {bar:?}, nerve {nerve:?}", p.to_file()))?;
            count += 1;
        }
    }
    // Relative cochains in degree d need chains of d + 1 elements, so degree
    // 3 exhausts every X_p with p <= (3,3,3).
    for (p1, p2, p3) in triples(3) {
        let x = build_xp(p1, p2, p3).map_err(err)?;
        let longest = x.heights().into_iter().max().unwrap_or(0);
        ensure(longest <= 3, || format!("X{:?} has a chain of {} elements", (p1, p2, p3), longest + 1))?;
        let hh = hochschild_bar(&incidence(&x), 3).map_err(err)?;
        ensure(hh == [1, 0, 0, 0], || format!("X{:?}: HH = {hh:?}", (p1, p2, p3)))?;
    }
    Ok(format!("{count} connected posets agree in degrees 0..2; HH^>=1(X_p) = 0 for {} triples", triples(3).len()))
}

fn unique_path_criterion() -> Result<String, String> {
    let mut count = 0;
    for n in 1..=5 {
        for p in enumerate_posets(n, false).map_err(err)? {
            let r = mitchell_equivalence_check::<Rational>(&p).map_err(err)?;
            ensure(r.agree, || format!("{:?}: gldim {} unique paths {}", p.to_file(), r.gldim, r.unique_paths))?;
            count += 1;
        }
    }
    Ok(format!("{count} posets, zero exceptions"))
}

fn d_tilde() -> Result<String, String> {
    for p in 2..=5 {
        let r = verify_weights::<Rational>(2, 2, p, None).map_err(err)?;
        let d = r.d_tilde.ok_or("no comparison")?;
        ensure(d.matches, || format!("(2,2,{p}) differs from {}", d.quiver))?;
    }
    Ok("(2,2,p) matches D~_{p+2} for p = 2..5".into())
}

fn orientation_families() -> Result<String, String> {
    let mut notes = Vec::new();
    let mut findings = Vec::new();
    for family in [RemarkFamily::TwinSquares, RemarkFamily::Fork, RemarkFamily::Bowtie] {
        for (p2, p3) in [(2, 2), (3, 3)] {
            let r = match verify_remark::<Rational>(family, p2, p3) {
                Ok(r) => r,
                Err(e) if (p2, p3) == (2, 2) => {
                    notes.push(format!("family {} at (2,2): not defined ({e})", family.number()));
                    continue;
                }
                Err(e) => return Err(err(e)),
            };
            if r.legal == 0 && (p2, p3) == (2, 2) {
                notes.push(format!("family {} at (2,2): no legal orientation", family.number()));
                continue;
            }
            ensure(r.legal > 0, || format!("family {} at ({p2},{p3}) has no legal orientation", family.number()))?;
            for o in r.orientations.iter().filter(|o| o.matches == Some(false)) {
                findings.push(format!("family {} ({p2},{p3}) orientation {} differs in {:?}", family.number(), o.orientation, o.differing_fields));
            }
            notes.push(format!("family {} ({p2},{p3}): {}/{} legal", family.number(), r.legal, r.orientations.len()));
        }
    }
    ensure(findings.is_empty(), || findings.join("; "))?;
    Ok(notes.join("; "))
}

fn two_arm() -> Result<String, String> {
    for (p1, p2) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
        let r = verify_t2::<Rational>(p1, p2).map_err(err)?;
        ensure(r.unique_paths && r.relations == 0, || format!("({p1},{p2}): not a free poset quiver"))?;
        ensure(r.verdict.passed(), || format!("({p1},{p2}): certificates differ"))?;
    }
    Ok("4 pairs".into())
}

fn no_poset() -> Result<String, String> {
    let mut notes = Vec::new();
    for p in 1..=5 {
        let start = Instant::now();
        let r = no_poset_search::<Rational>(p).map_err(err)?;
        ensure(r.matches.is_empty(), || format!("p = {p}: {} matches", r.matches.len()))?;
        if p == 5 {
            over_budget("n = 6 search", start.elapsed(), Duration::from_secs(300))?;
        }
        notes.push(format!("p={p}: 0/{}", r.candidates));
    }
    let target = certificate(&canonical_algebra::<Rational>(&[2, 2, 2]).map_err(err)?).map_err(err)?;
    let x = build_xp(2, 2, 2).map_err(err)?;
    let hits = certificate_search::<Rational>(&target, x.len()).map_err(err)?;
    ensure(hits.iter().any(|h| are_isomorphic(h, &x).is_some()), || "inversion did not find X(2,2,2)".into())?;
    let six = certificate_search::<Rational>(&target, 6).map_err(err)?;
    notes.push(format!("inversion: {} hit(s) on {} elements including X(2,2,2), {} on 6", hits.len(), x.len(), six.len()));
    Ok(notes.join(", "))
}

fn self_tests() -> Result<String, String> {
    let mut algebras = corpus();
    for n in 1..=5 {
        for p in enumerate_posets(n, true).map_err(err)? {
            algebras.push((format!("{:?}", p.to_file().covers), incidence(&p)));
        }
    }
    for (name, a) in &algebras {
        ensure(euler_form_check(a).map_err(err)?, || format!("Euler form fails on {name}"))?;
        ensure(coxeter_polynomial_transposed(&a.cartan_matrix()) == coxeter_polynomial(a), || format!("convention changes {name}"))?;
    }
    let mut moves = 0;
    for (name, q) in reflection_corpus() {
        let before = coxeter_polynomial(&path_algebra(q.clone()));
        for v in (0..q.vertex_count()).filter(|&v| q.is_source(v) || q.is_sink(v)) {
            let r = bgp_reflect(&q, v).map_err(err)?;
            ensure(coxeter_polynomial(&path_algebra(r)) == before, || format!("reflection of {name} at {v}"))?;
            moves += 1;
        }
    }
    let counts: Vec<usize> = (1..=5).map(|n| enumerate_posets(n, false).map(|v| v.len())).collect::<Result<_, _>>().map_err(err)?;
    ensure(counts == [1, 2, 5, 16, 63], || format!("enumeration counts {counts:?}"))?;
    Ok(format!("{} algebras, {moves} reflections, counts {counts:?}", algebras.len()))
}

fn main() {
    let criteria: [(&str, Check); 11] = [
        ("certificate sweep over 2 <= p1 <= p2 <= p3 <= 5", certificate_sweep),
        ("Ext tables of simples and their images", ext_tables),
        ("functor images of simples for (3,3,3)", functor_images),
        ("HH^2 of the four-arm canonical algebra", four_arm_hochschild),
        ("nerve and bar complex agree", nerve_bar),
        ("gldim <= 1 iff unique Hasse paths", unique_path_criterion),
        ("(2,2,p) against D~_{p+2}", d_tilde),
        ("free-edge orientation families", orientation_families),
        ("two-arm reflected posets", two_arm),
        ("no poset for A~(1,p)", no_poset),
        ("engine self-tests", self_tests),
    ];
    let total = Instant::now();
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {:>2} {name} [{elapsed:.2?}]: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{elapsed:.2?}]: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), total.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
