use super::{Arrow, Presentation, Quiver, QuiverError, Relation};
use crate::exactla::{Field, Matrix};
use crate::posets::Poset;

/// Hasse quiver of a poset: one arrow `"x->y"` per cover.
pub fn hasse_quiver(p: &Poset) -> Quiver {
    let arrows = p
        .hasse()
        .covers
        .iter()
        .map(|&(x, y)| Arrow { id: format!("{}->{}", p.label(x), p.label(y)), source: x, target: y })
        .collect();
    Quiver::from_parts(p.labels().to_vec(), arrows).expect("Hasse diagrams are acyclic")
}

/// Incidence algebra of `p` as a bound quiver algebra on its Hasse quiver.
///
/// Intervals are visited by increasing size. Within an interval the first
/// path is identified with every other path whose difference is not already
/// forced by relations of smaller intervals. Afterwards every block must have
/// dimension one exactly when `x <= y`.
pub fn incidence_presentation<F: Field>(p: &Poset) -> Result<Presentation<F>, QuiverError> {
    let quiver = hasse_quiver(p);
    let n = p.len();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| p.lt(x, y)).collect();
    pairs.sort_by_key(|&(x, y)| ((p.up_set(x) & p.down_set(y)).count_ones(), x, y));

    let mut pres = Presentation::free(quiver.clone());
    for &(x, y) in &pairs {
        let block = pres.ideal_block(x, y);
        if block.paths.len() < 2 {
            continue;
        }
        let mut rows = block.generators;
        let mut rank = if rows.is_empty() { 0 } else { Matrix::from_rows(rows.clone()).rank() };
        for k in 1..block.paths.len() {
            let mut v = vec![F::zero(); block.paths.len()];
            v[0] = F::one();
            v[k] = -F::one();
            rows.push(v);
            let new_rank = Matrix::from_rows(rows.clone()).rank();
            if new_rank > rank {
                rank = new_rank;
                let terms = vec![(F::one(), block.paths[0].clone()), (-F::one(), block.paths[k].clone())];
                pres.relations.push(Relation::new(&quiver, terms)?);
            } else {
                rows.pop();
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            let (paths, rank) = pres.ideal_rank(x, y);
            let expected = usize::from(p.leq(x, y));
            if paths - rank != expected {
                return Err(QuiverError::DimensionCheck { from: p.label(x).into(), to: p.label(y).into() });
            }
        }
    }
    Ok(pres)
}
