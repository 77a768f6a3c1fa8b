use super::{canonical_presentation, Arrow, Presentation, Quiver, QuiverError};
use crate::exactla::{Field, Rational};
use crate::posets::Poset;

/// Reverses every arrow at a source or sink. Arrow ids are kept, so
/// reflecting twice at the same vertex returns the original quiver.
pub fn bgp_reflect(q: &Quiver, v: usize) -> Result<Quiver, QuiverError> {
    if !(q.is_source(v) || q.is_sink(v)) {
        return Err(QuiverError::NotSourceOrSink(q.vertex(v).to_string()));
    }
    let arrows = q
        .arrows()
        .iter()
        .map(|a| {
            if a.source == v || a.target == v {
                Arrow { id: a.id.clone(), source: a.target, target: a.source }
            } else {
                a.clone()
            }
        })
        .collect();
    q.with_arrows(arrows)
}

/// True iff every ordered pair of vertices is joined by at most one path.
pub fn unique_path_property(q: &Quiver) -> bool {
    q.path_counts().iter().flatten().all(|&c| c <= 1)
}

/// Gentle bound quiver: at most two arrows in and out of each vertex,
/// relations are paths of length two, and every arrow has at most one
/// continuation of each kind (inside / outside the relations) on both sides.
pub fn is_gentle<F: Field>(pres: &Presentation<F>) -> bool {
    let q = &pres.quiver;
    let mut zero_pairs = Vec::new();
    for r in &pres.relations {
        match r.terms.as_slice() {
            [(_, path)] if path.len() == 2 => zero_pairs.push((path[0], path[1])),
            _ => return false,
        }
    }
    for v in 0..q.vertex_count() {
        if q.in_arrows(v).count() > 2 || q.out_arrows(v).count() > 2 {
            return false;
        }
    }
    for b in 0..q.arrows().len() {
        let (s, t) = (q.arrow(b).source, q.arrow(b).target);
        let before: Vec<usize> = q.in_arrows(s).collect();
        let after: Vec<usize> = q.out_arrows(t).collect();
        let in_rel = before.iter().filter(|&&a| zero_pairs.contains(&(a, b))).count();
        let out_rel = after.iter().filter(|&&c| zero_pairs.contains(&(b, c))).count();
        if in_rel > 1 || before.len() - in_rel > 1 || out_rel > 1 || after.len() - out_rel > 1 {
            return false;
        }
    }
    true
}

/// Path order on the vertices of `q`, provided `q` is exactly the Hasse
/// diagram of that order.
pub fn quiver_as_poset(q: &Quiver) -> Result<Poset, QuiverError> {
    let counts = q.path_counts();
    for (x, row) in counts.iter().enumerate() {
        for (y, &c) in row.iter().enumerate() {
            if c > 1 {
                return Err(QuiverError::DuplicatedPath { from: q.vertex(x).into(), to: q.vertex(y).into() });
            }
        }
    }
    for a in q.arrows() {
        let through_other = q.out_arrows(a.source).any(|b| {
            let mid = q.arrow(b).target;
            mid != a.target && counts[mid][a.target] > 0
        });
        if through_other {
            return Err(QuiverError::NonCoverArrow(a.id.clone()));
        }
    }
    let edges: Vec<(usize, usize)> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
    Poset::from_edges(q.vertices().to_vec(), &edges).map_err(|e| QuiverError::Poset(e.to_string()))
}

/// Star quiver of type `(p1, p2)` reflected at its sink `w`.
pub fn t2_quiver(p1: usize, p2: usize) -> Result<Quiver, QuiverError> {
    if p1 < 2 || p2 < 2 {
        return Err(QuiverError::InvalidType(format!("t = 2 construction needs weights >= 2, got ({p1},{p2})")));
    }
    let q = canonical_presentation::<Rational>(&[p1, p2], &[])?.quiver;
    let omega = q.vertex_index("w").expect("star quiver has w");
    bgp_reflect(&q, omega)
}

/// Poset whose incidence algebra is the path algebra of [`t2_quiver`].
pub fn t2_poset(p1: usize, p2: usize) -> Result<Poset, QuiverError> {
    quiver_as_poset(&t2_quiver(p1, p2)?)
}
