use std::collections::HashSet;

use super::iso::canonical_form;
use super::{Poset, PosetError};

pub const MAX_ENUMERATION_SIZE: usize = 7;

/// All posets on `n` elements up to isomorphism, each relabelled `"0".."n-1"`
/// in its canonical ordering, sorted by canonical code.
///
/// Every poset on `n` elements arises from one on `n - 1` elements by adding
/// a new maximal element above some down-closed subset, so the search grows
/// representatives one element at a time and deduplicates by canonical code.
pub fn enumerate_posets(n: usize, connected_only: bool) -> Result<Vec<Poset>, PosetError> {
    if !(1..=MAX_ENUMERATION_SIZE).contains(&n) {
        return Err(PosetError::UnsupportedSize { n, max: MAX_ENUMERATION_SIZE });
    }
    let mut level = vec![(Vec::<bool>::new(), Poset::from_up_sets(vec!["0".to_string()], vec![1]))];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (_, p) in &level {
            for down in down_closed_subsets(p) {
                let q = add_maximal(p, down, size);
                let (code, ordering) = canonical_form(&q);
                if seen.insert(code.clone()) {
                    next.push((code, relabel(&q, &ordering)));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next;
    }
    Ok(level
        .into_iter()
        .map(|(_, p)| p)
        .filter(|p| !connected_only || p.is_connected())
        .collect())
}

fn down_closed_subsets(p: &Poset) -> Vec<u64> {
    let n = p.len();
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|x| s & (1 << x) == 0 || p.down_set(x) & !s == 0))
        .collect()
}

fn add_maximal(p: &Poset, down: u64, size: usize) -> Poset {
    let new = size - 1;
    let mut up: Vec<u64> = (0..p.len())
        .map(|x| if down & (1 << x) != 0 { p.up_set(x) | 1 << new } else { p.up_set(x) })
        .collect();
    up.push(1 << new);
    let labels = (0..size).map(|i| i.to_string()).collect();
    Poset::from_up_sets(labels, up)
}

fn relabel(p: &Poset, ordering: &[usize]) -> Poset {
    let q = p.permuted(ordering);
    let labels = (0..q.len()).map(|i| i.to_string()).collect();
    q.with_labels(labels).expect("fresh labels are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_posets(n, false).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16]);
    }

    #[test]
    fn connected_counts() {
        // Connected posets: 1, 1, 3, 10.
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_posets(n, true).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 10]);
    }

    #[test]
    fn range_is_enforced() {
        assert!(matches!(enumerate_posets(0, false), Err(PosetError::UnsupportedSize { .. })));
        assert!(matches!(enumerate_posets(8, false), Err(PosetError::UnsupportedSize { .. })));
    }

    #[test]
    fn output_is_deterministic() {
        assert_eq!(enumerate_posets(4, false).unwrap(), enumerate_posets(4, false).unwrap());
    }
}
