//! Explicit posets whose incidence algebras are compared with canonical
//! algebras of weight type `(p1, p2, p3)`.
//!
//! Element labels follow the canonical quiver: `"0"` for the source, `"i,j"`
//! for the `j`-th interior vertex of arm `i`, `"w"` for the sink.

use serde::{Deserialize, Serialize};

use super::{Poset, PosetError};

/// Which Hasse diagram template `X_p` uses for a sorted weight triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum XpFamily {
    /// `3 <= p1 <= p2 <= p3`
    General,
    /// `p1 = 2 < p2 <= p3`
    ShortFirstArm,
    /// `p1 = p2 = 2 < p3`
    TwoShortArms,
    /// `p1 = p2 = p3 = 2`
    AllShort,
}

impl XpFamily {
    pub fn of(p1: usize, p2: usize, p3: usize) -> Result<XpFamily, PosetError> {
        if !(2 <= p1 && p1 <= p2 && p2 <= p3) {
            return Err(PosetError::InvalidWeights(format!(
                "need 2 <= p1 <= p2 <= p3, got ({p1},{p2},{p3})"
            )));
        }
        Ok(if p1 > 2 {
            XpFamily::General
        } else if p2 > 2 {
            XpFamily::ShortFirstArm
        } else if p3 > 2 {
            XpFamily::TwoShortArms
        } else {
            XpFamily::AllShort
        })
    }

    /// 1-based index of the template in the usual listing.
    pub fn number(self) -> usize {
        match self {
            XpFamily::General => 1,
            XpFamily::ShortFirstArm => 2,
            XpFamily::TwoShortArms => 3,
            XpFamily::AllShort => 4,
        }
    }
}

pub fn arm_label(arm: usize, j: usize) -> String {
    format!("{arm},{j}")
}

/// Labels of the canonical quiver vertices for weights `p`, in the order
/// source, arm 1, arm 2, ..., sink.
pub fn canonical_labels(weights: &[usize]) -> Vec<String> {
    let mut labels = vec!["0".to_string()];
    for (i, &p) in weights.iter().enumerate() {
        labels.extend((1..p).map(|j| arm_label(i + 1, j)));
    }
    labels.push("w".to_string());
    labels
}

/// The poset `X_p` for `2 <= p1 <= p2 <= p3`.
pub fn build_xp(p1: usize, p2: usize, p3: usize) -> Result<Poset, PosetError> {
    let family = XpFamily::of(p1, p2, p3)?;
    let p = [p1, p2, p3];
    let labels = canonical_labels(&p);
    let a = |i: usize, j: usize| arm_label(i, j);
    let src = "0".to_string();
    let top = "w".to_string();
    let mut covers: Vec<(String, String)> = Vec::new();
    // Arm chains that every template shares, minus the pieces a template
    // reroutes.
    let chain = |covers: &mut Vec<(String, String)>, i: usize| {
        for j in 1..p[i - 1] - 1 {
            covers.push((a(i, j), a(i, j + 1)));
        }
    };
    match family {
        XpFamily::General => {
            for i in 1..=3 {
                covers.push((src.clone(), a(i, 1)));
                chain(&mut covers, i);
                covers.push((a(i, p[i - 1] - 1), top.clone()));
            }
            covers.push((a(1, p1 - 2), a(3, p3 - 1)));
            covers.push((a(2, p2 - 2), a(1, p1 - 1)));
            covers.push((a(3, p3 - 2), a(2, p2 - 1)));
        }
        XpFamily::ShortFirstArm => {
            for i in 2..=3 {
                covers.push((src.clone(), a(i, 1)));
                chain(&mut covers, i);
                covers.push((a(i, p[i - 1] - 1), top.clone()));
            }
            covers.push((a(1, 1), top.clone()));
            covers.push((a(2, p2 - 2), a(1, 1)));
            covers.push((a(3, p3 - 2), a(2, p2 - 1)));
        }
        XpFamily::TwoShortArms => {
            covers.push((src.clone(), a(1, 1)));
            covers.push((src.clone(), a(3, 1)));
            chain(&mut covers, 3);
            covers.push((a(3, p3 - 2), a(2, 1)));
            for i in 1..=3 {
                covers.push((a(i, p[i - 1] - 1), top.clone()));
            }
        }
        XpFamily::AllShort => {
            for i in 1..=3 {
                covers.push((src.clone(), a(i, 1)));
                covers.push((a(i, 1), top.clone()));
            }
        }
    }
    let pairs: Vec<(&str, &str)> = covers.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    Poset::from_covers(&labels, &pairs)
}

/// The three poset shapes attached to weight types `(2, p2, p3)` whose
/// undirected edges may be oriented either way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RemarkFamily {
    /// Two squares sharing a vertex, with a pendant edge below them.
    TwinSquares = 1,
    /// Two directed arms leaving a fork, joined at one vertex.
    Fork = 2,
    /// A top above three elements, all above a bottom, with two tails.
    Bowtie = 3,
}

impl RemarkFamily {
    pub fn from_number(n: usize) -> Result<RemarkFamily, PosetError> {
        match n {
            1 => Ok(RemarkFamily::TwinSquares),
            2 => Ok(RemarkFamily::Fork),
            3 => Ok(RemarkFamily::Bowtie),
            _ => Err(PosetError::InvalidWeights(format!("no poset family {n}"))),
        }
    }

    pub fn number(self) -> usize {
        self as usize
    }

    fn min_weight(self) -> usize {
        match self {
            RemarkFamily::TwinSquares | RemarkFamily::Fork => 3,
            RemarkFamily::Bowtie => 2,
        }
    }
}

/// Shape of a family member: labels, fixed arrows, and the free edges in
/// their drawn left-to-right (or top-to-bottom) direction.
struct RemarkShape {
    labels: Vec<String>,
    arrows: Vec<(String, String)>,
    free: Vec<(String, String)>,
}

fn remark_shape(family: RemarkFamily, p2: usize, p3: usize) -> Result<RemarkShape, PosetError> {
    let min = family.min_weight();
    if p2 < min || p3 < min {
        return Err(PosetError::InvalidWeights(format!(
            "family {} needs p2, p3 >= {min}, got ({p2},{p3})",
            family.number()
        )));
    }
    let b = |j: usize| format!("b{j}");
    let c = |j: usize| format!("c{j}");
    let s = |x: &str| x.to_string();
    let mut labels = Vec::new();
    let mut arrows = Vec::new();
    let mut free = Vec::new();
    match family {
        RemarkFamily::TwinSquares => {
            // b1 - ... - b_{p2-2} -> m <- c_{p3-2} - ... - c1, with
            // b_{p2-2} -> d1 -> d2 <- d3 <- c_{p3-2}, m -> d2, d2 - e.
            labels.extend((1..=p2 - 2).map(b));
            labels.extend((1..=p3 - 2).map(c));
            labels.extend(["m", "d1", "d2", "d3", "e"].map(s));
            for j in 1..p2 - 2 {
                free.push((b(j), b(j + 1)));
            }
            for j in (1..p3 - 2).rev() {
                free.push((c(j + 1), c(j)));
            }
            arrows.push((b(p2 - 2), s("m")));
            arrows.push((b(p2 - 2), s("d1")));
            arrows.push((c(p3 - 2), s("m")));
            arrows.push((c(p3 - 2), s("d3")));
            arrows.push((s("m"), s("d2")));
            arrows.push((s("d1"), s("d2")));
            arrows.push((s("d3"), s("d2")));
            free.push((s("d2"), s("e")));
        }
        RemarkFamily::Fork => {
            // l1 - l2, l2 -> b1 -> ... -> b_{p2-2} - t1, l2 -> c1 -> ... ->
            // c_{p3-2} - t3, and b_{p2-2}, c_{p3-2} -> r.
            labels.extend(["l1", "l2"].map(s));
            labels.extend((1..=p2 - 2).map(b));
            labels.extend((1..=p3 - 2).map(c));
            labels.extend(["t1", "t3", "r"].map(s));
            free.push((s("l1"), s("l2")));
            arrows.push((s("l2"), b(1)));
            arrows.push((s("l2"), c(1)));
            for j in 1..p2 - 2 {
                arrows.push((b(j), b(j + 1)));
            }
            for j in 1..p3 - 2 {
                arrows.push((c(j), c(j + 1)));
            }
            free.push((b(p2 - 2), s("t1")));
            free.push((c(p3 - 2), s("t3")));
            arrows.push((b(p2 - 2), s("r")));
            arrows.push((c(p3 - 2), s("r")));
        }
        RemarkFamily::Bowtie => {
            // t -> b_{p2-1}, t -> m, t -> c_{p3-1}; those three -> u; tails
            // b1 - ... - b_{p2-1} and c_{p3-1} - ... - c1.
            labels.push(s("t"));
            labels.extend((1..p2).map(b));
            labels.push(s("m"));
            labels.extend((1..p3).map(c));
            labels.push(s("u"));
            for x in [b(p2 - 1), s("m"), c(p3 - 1)] {
                arrows.push((s("t"), x.clone()));
                arrows.push((x, s("u")));
            }
            for j in 1..p2 - 1 {
                free.push((b(j), b(j + 1)));
            }
            for j in (1..p3 - 1).rev() {
                free.push((c(j + 1), c(j)));
            }
        }
    }
    Ok(RemarkShape { labels, arrows, free })
}

/// The undirected edges of a family member, each in its drawn direction.
pub fn remark_free_edges(family: RemarkFamily, p2: usize, p3: usize) -> Result<Vec<(String, String)>, PosetError> {
    Ok(remark_shape(family, p2, p3)?.free)
}

/// Builds a family member; `orientation[k]` keeps the `k`-th free edge in
/// its drawn direction when true and reverses it when false.
pub fn build_remark_poset(
    family: RemarkFamily,
    p2: usize,
    p3: usize,
    orientation: &[bool],
) -> Result<Poset, PosetError> {
    let shape = remark_shape(family, p2, p3)?;
    if orientation.len() != shape.free.len() {
        return Err(PosetError::InvalidOrientation(format!(
            "expected {} orientation bits, got {}",
            shape.free.len(),
            orientation.len()
        )));
    }
    let mut edges = shape.arrows.clone();
    for ((x, y), &keep) in shape.free.iter().zip(orientation) {
        edges.push(if keep { (x.clone(), y.clone()) } else { (y.clone(), x.clone()) });
    }
    let pairs: Vec<(&str, &str)> = edges.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
    let labels: Vec<&str> = shape.labels.iter().map(String::as_str).collect();
    let poset = Poset::from_covers(&labels, &pairs)?;
    // The drawn edges must be exactly the covers.
    if poset.hasse().len() != edges.len() {
        return Err(PosetError::InvalidOrientation("orientation creates a non-cover edge".into()));
    }
    Ok(poset)
}

/// Every orientation of the free edges, as bit vectors in counting order.
pub fn all_orientations(free_edges: usize) -> Vec<Vec<bool>> {
    (0u64..1 << free_edges)
        .map(|m| (0..free_edges).map(|k| m & (1 << k) == 0).collect())
        .collect()
}
