use serde::Serialize;

use super::{incidence_algebra, DerivedError, Verdict};
use crate::algebra::BoundQuiverAlgebra;
use crate::exactla::Field;
use crate::homology::{certificate, global_dimension, Certificate};
use crate::posets::{enumerate_posets, Poset, PosetFile};
use crate::quivers::{a_tilde, bgp_reflect, hasse_quiver, incidence_presentation, is_gentle, Presentation, Quiver};

/// Largest `p` accepted by [`no_poset_search`].
pub const MAX_SEARCH_P: usize = 6;

/// Path algebra of `A~(1,p)`.
pub fn a_tilde_algebra<F: Field>(p: usize) -> BoundQuiverAlgebra<F> {
    BoundQuiverAlgebra::new(Presentation::free(a_tilde(p)))
}

/// Quivers reachable by sink and source reflections, up to isomorphism.
pub fn reflection_orbit(q: &Quiver, limit: usize) -> Vec<Quiver> {
    let mut orbit = vec![q.clone()];
    let mut frontier = 0;
    while frontier < orbit.len() && orbit.len() < limit {
        let current = orbit[frontier].clone();
        frontier += 1;
        for v in 0..current.vertex_count() {
            let Ok(r) = bgp_reflect(&current, v) else { continue };
            if !orbit.iter().any(|o| o.is_isomorphic_to(&r)) {
                orbit.push(r);
            }
        }
    }
    orbit
}

/// Certificate fields that only need the Cartan matrix; `gldim` is left at 0.
fn cartan_certificate<F: Field>(a: &BoundQuiverAlgebra<F>) -> Certificate {
    Certificate::from_cartan(&a.cartan_matrix(), a.dimension(), 0, a.vertex_order_labels())
}

/// Connected posets on `n` elements whose certificate matches `target`.
pub fn certificate_search<F: Field>(target: &Certificate, n: usize) -> Result<Vec<Poset>, DerivedError> {
    let mut hits = Vec::new();
    for p in enumerate_posets(n, true)? {
        let a = incidence_algebra::<F>(&p)?;
        if cartan_certificate(&a).matches(target) {
            hits.push(p);
        }
    }
    Ok(hits)
}

/// Why a retained poset still cannot be derived equivalent to `A~(1,p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RetainedAnalysis {
    pub poset: PosetFile,
    pub gldim: usize,
    /// Hereditary branch: whether the Hasse quiver lies in the reflection orbit.
    pub in_reflection_orbit: Option<bool>,
    /// Non-hereditary branch: gentleness of the incidence algebra.
    pub gentle: Option<bool>,
    pub excluded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub p: usize,
    pub poset_size: usize,
    pub candidates: usize,
    pub target: Certificate,
    pub matches: Vec<PosetFile>,
    pub analysis: Vec<RetainedAnalysis>,
    pub verdict: Verdict,
}

/// Exhaustive search for a connected poset on `p + 1` elements whose
/// incidence algebra has the certificate of `A~(1,p)`.
pub fn no_poset_search<F: Field>(p: usize) -> Result<SearchReport, DerivedError> {
    if !(1..=MAX_SEARCH_P).contains(&p) {
        return Err(DerivedError::InvalidInput(format!("need 1 <= p <= {MAX_SEARCH_P}, got {p}")));
    }
    let target_algebra = a_tilde_algebra::<F>(p);
    let target = certificate(&target_algebra)?;
    let candidates = enumerate_posets(p + 1, true)?;
    let retained: Vec<Poset> = candidates
        .iter()
        .filter(|c| cartan_certificate(&incidence_algebra::<F>(c).expect("incidence")).matches(&target))
        .cloned()
        .collect();
    let mut orbit = None;
    let mut analysis = Vec::new();
    for poset in &retained {
        let pres = incidence_presentation::<F>(poset)?;
        let gldim = global_dimension(&BoundQuiverAlgebra::new(pres.clone()))?;
        let (in_orbit, gentle) = if gldim <= 1 {
            let orbit = orbit.get_or_insert_with(|| reflection_orbit(target_algebra.quiver(), 10_000));
            let h = hasse_quiver(poset);
            (Some(orbit.iter().any(|q| q.is_isomorphic_to(&h))), None)
        } else {
            (None, Some(is_gentle(&pres)))
        };
        analysis.push(RetainedAnalysis {
            poset: poset.to_file(),
            gldim,
            in_reflection_orbit: in_orbit,
            gentle,
            excluded: in_orbit == Some(false) || gentle == Some(false),
        });
    }
    Ok(SearchReport {
        p,
        poset_size: p + 1,
        candidates: candidates.len(),
        target,
        verdict: Verdict::from_bool(retained.is_empty()),
        matches: retained.iter().map(Poset::to_file).collect(),
        analysis,
    })
}
