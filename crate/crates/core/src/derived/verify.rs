use serde::Serialize;

use super::{beilinson_table_check, DerivedError};
use crate::algebra::BoundQuiverAlgebra;
use crate::exactla::Field;
use crate::homology::{certificate, Certificate, FieldComparison};
use crate::posets::{all_orientations, build_remark_poset, build_xp, remark_free_edges, Poset, RemarkFamily, XpFamily};
use crate::quivers::{
    canonical_presentation, d_tilde, default_lambdas, hasse_quiver, incidence_presentation, t2_poset,
    unique_path_property, Presentation,
};

pub const DEFAULT_WINDOW: (i64, i64) = (-3, 3);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

/// Canonical algebra with parameters `1, 2, ...`.
pub fn canonical_algebra<F: Field>(weights: &[usize]) -> Result<BoundQuiverAlgebra<F>, DerivedError> {
    Ok(BoundQuiverAlgebra::new(canonical_presentation(weights, &default_lambdas::<F>(weights.len()))?))
}

pub fn incidence_algebra<F: Field>(p: &Poset) -> Result<BoundQuiverAlgebra<F>, DerivedError> {
    Ok(BoundQuiverAlgebra::new(incidence_presentation(p)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificatePair {
    pub canonical: Certificate,
    pub poset: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BeilinsonSummary {
    pub window: (i64, i64),
    pub status: String,
    pub equal: Option<bool>,
    pub k0_unimodular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DTildeComparison {
    pub quiver: String,
    pub certificate: Certificate,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightsReport {
    pub weights: Vec<usize>,
    pub family: usize,
    pub certificates: CertificatePair,
    pub comparisons: Vec<FieldComparison>,
    pub equal_fields: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beilinson: Option<BeilinsonSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_tilde: Option<DTildeComparison>,
    pub verdict: Verdict,
}

fn equal_fields(c: &[FieldComparison]) -> Vec<String> {
    c.iter().filter(|f| f.equal).map(|f| f.field.clone()).collect()
}

/// Compares `Λ(p)` with `kX_p`; optionally runs the Ext table check, and for
/// `(2, 2, p)` also compares with the path algebra of `D̃_{p+2}`.
pub fn verify_weights<F: Field>(
    p1: usize,
    p2: usize,
    p3: usize,
    with_beilinson: Option<(i64, i64)>,
) -> Result<WeightsReport, DerivedError> {
    let family = XpFamily::of(p1, p2, p3).map_err(|e| DerivedError::InvalidInput(e.to_string()))?;
    let canonical = certificate(&canonical_algebra::<F>(&[p1, p2, p3])?)?;
    let poset = certificate(&incidence_algebra::<F>(&build_xp(p1, p2, p3)?)?)?;
    let comparisons = canonical.compare(&poset);
    let mut ok = canonical.matches(&poset);

    let beilinson = match with_beilinson {
        None => None,
        Some(window) if family == XpFamily::General => {
            let r = beilinson_table_check::<F>([p1, p2, p3], window)?;
            ok &= r.equal && r.k0_unimodular;
            Some(BeilinsonSummary {
                window,
                status: "checked".into(),
                equal: Some(r.equal),
                k0_unimodular: Some(r.k0_unimodular),
                note: None,
            })
        }
        Some(window) => Some(BeilinsonSummary {
            window,
            status: "unsupported".into(),
            equal: None,
            k0_unimodular: None,
            note: Some(format!(
                "functor images are only available for 3 <= p1; family {} is checked through certificates",
                family.number()
            )),
        }),
    };

    let d_tilde = if p1 == 2 && p2 == 2 {
        let q = d_tilde(p3 + 2);
        let c = certificate(&BoundQuiverAlgebra::new(Presentation::<F>::free(q)))?;
        let matches = c.matches(&poset);
        ok &= matches;
        Some(DTildeComparison { quiver: format!("D~_{}", p3 + 2), certificate: c, matches })
    } else {
        None
    };

    Ok(WeightsReport {
        weights: vec![p1, p2, p3],
        family: family.number(),
        equal_fields: equal_fields(&comparisons),
        comparisons,
        certificates: CertificatePair { canonical, poset },
        beilinson,
        d_tilde,
        verdict: Verdict::from_bool(ok),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct T2Report {
    pub weights: Vec<usize>,
    pub poset: crate::posets::PosetFile,
    pub unique_paths: bool,
    pub relations: usize,
    pub certificates: CertificatePair,
    pub equal_fields: Vec<String>,
    pub verdict: Verdict,
}

/// The reflected two-arm quiver read as a poset, against `Λ(p1, p2)`.
pub fn verify_t2<F: Field>(p1: usize, p2: usize) -> Result<T2Report, DerivedError> {
    if p1 < 1 || p2 < 1 {
        return Err(DerivedError::InvalidInput(format!("weights must be positive, got ({p1},{p2})")));
    }
    let poset = t2_poset(p1, p2)?;
    let unique_paths = unique_path_property(&hasse_quiver(&poset));
    let pres = incidence_presentation::<F>(&poset)?;
    let relations = pres.relations.len();
    let canonical = certificate(&canonical_algebra::<F>(&[p1, p2])?)?;
    let poset_cert = certificate(&BoundQuiverAlgebra::new(pres))?;
    let ok = unique_paths && relations == 0 && canonical.matches(&poset_cert);
    Ok(T2Report {
        weights: vec![p1, p2],
        poset: poset.to_file(),
        unique_paths,
        relations,
        equal_fields: equal_fields(&canonical.compare(&poset_cert)),
        certificates: CertificatePair { canonical, poset: poset_cert },
        verdict: Verdict::from_bool(ok),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationResult {
    /// One character per free edge: `+` as drawn, `-` reversed.
    pub orientation: String,
    pub legal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub matches: Option<bool>,
    pub differing_fields: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemarkReport {
    pub family: usize,
    pub weights: Vec<usize>,
    pub free_edges: Vec<(String, String)>,
    pub canonical: Certificate,
    pub orientations: Vec<OrientationResult>,
    pub legal: usize,
    pub mismatches: usize,
    pub verdict: Verdict,
}

/// Every orientation of the free edges of a family member, compared with
/// `Λ(2, p2, p3)`. Orientations that do not give a poset with the drawn
/// edges as covers are recorded as illegal.
pub fn verify_remark<F: Field>(family: RemarkFamily, p2: usize, p3: usize) -> Result<RemarkReport, DerivedError> {
    let free_edges = remark_free_edges(family, p2, p3).map_err(|e| DerivedError::InvalidInput(e.to_string()))?;
    let canonical = certificate(&canonical_algebra::<F>(&[2, p2, p3])?)?;
    let mut orientations = Vec::new();
    for bits in all_orientations(free_edges.len()) {
        let orientation: String = bits.iter().map(|&b| if b { '+' } else { '-' }).collect();
        match build_remark_poset(family, p2, p3, &bits) {
            Err(e) => orientations.push(OrientationResult {
                orientation,
                legal: false,
                reason: Some(e.to_string()),
                matches: None,
                differing_fields: Vec::new(),
            }),
            Ok(poset) => {
                let cert = certificate(&incidence_algebra::<F>(&poset)?)?;
                let differing_fields = canonical
                    .compare(&cert)
                    .into_iter()
                    .filter(|c| !c.equal && crate::homology::INVARIANT_FIELDS.contains(&c.field.as_str()))
                    .map(|c| c.field)
                    .collect();
                orientations.push(OrientationResult {
                    orientation,
                    legal: true,
                    reason: None,
                    matches: Some(canonical.matches(&cert)),
                    differing_fields,
                });
            }
        }
    }
    let legal = orientations.iter().filter(|o| o.legal).count();
    let mismatches = orientations.iter().filter(|o| o.matches == Some(false)).count();
    Ok(RemarkReport {
        family: family.number(),
        weights: vec![2, p2, p3],
        free_edges,
        canonical,
        orientations,
        legal,
        mismatches,
        verdict: Verdict::from_bool(legal > 0 && mismatches == 0),
    })
}
