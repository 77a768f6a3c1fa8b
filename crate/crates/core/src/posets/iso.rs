//! Poset isomorphism by colour refinement plus backtracking.

use std::collections::BTreeMap;

use super::Poset;

/// Isomorphism-invariant colour per element. Starts from (elements below,
/// elements above, lower covers, upper covers, height) and refines by the
/// colour multisets of strictly smaller and strictly larger elements until
/// stable. Colour ids are ranks of sorted signatures, so isomorphic posets
/// get identical colourings up to the isomorphism.
pub fn refined_colors(p: &Poset) -> Vec<usize> {
    let n = p.len();
    let hasse = p.hasse();
    let mut lower_covers = vec![0usize; n];
    let mut upper_covers = vec![0usize; n];
    for &(a, b) in &hasse.covers {
        upper_covers[a] += 1;
        lower_covers[b] += 1;
    }
    let heights = p.heights();
    let initial: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            vec![
                p.down_set(x).count_ones() as usize,
                p.up_set(x).count_ones() as usize,
                lower_covers[x],
                upper_covers[x],
                heights[x],
            ]
        })
        .collect();
    let mut colors = rank(&initial);
    loop {
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                let mut below: Vec<usize> = (0..n).filter(|&y| p.lt(y, x)).map(|y| colors[y]).collect();
                let mut above: Vec<usize> = (0..n).filter(|&y| p.lt(x, y)).map(|y| colors[y]).collect();
                below.sort_unstable();
                above.sort_unstable();
                let mut s = vec![colors[x], below.len()];
                s.extend(below);
                s.push(usize::MAX);
                s.extend(above);
                s
            })
            .collect();
        let next = rank(&sigs);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

fn rank(sigs: &[Vec<usize>]) -> Vec<usize> {
    let mut distinct: Vec<&Vec<usize>> = sigs.iter().collect();
    distinct.sort();
    distinct.dedup();
    let ids: BTreeMap<&Vec<usize>, usize> = distinct.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
    sigs.iter().map(|s| ids[s]).collect()
}

/// An order isomorphism `p -> q` as the image index of every element of
/// `p`, if one exists. The witness is verified before it is returned.
pub fn are_isomorphic(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.order_pair_count() != q.order_pair_count() {
        return None;
    }
    let n = p.len();
    let cp = refined_colors(p);
    let cq = refined_colors(q);
    let mut sp = cp.clone();
    let mut sq = cq.clone();
    sp.sort_unstable();
    sq.sort_unstable();
    if sp != sq {
        return None;
    }
    // Assign the most constrained elements first.
    let class_size = |c: usize| cp.iter().filter(|&&x| x == c).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (class_size(cp[x]), cp[x], x));

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if backtrack(p, q, &cp, &cq, &order, 0, &mut image, &mut used) {
        debug_assert!(is_isomorphism(p, q, &image));
        Some(image)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    p: &Poset,
    q: &Poset,
    cp: &[usize],
    cq: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for y in 0..q.len() {
        if used[y] || cq[y] != cp[x] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&z| {
            let w = image[z];
            p.leq(x, z) == q.leq(y, w) && p.leq(z, x) == q.leq(w, y)
        });
        if !consistent {
            continue;
        }
        image[x] = y;
        used[y] = true;
        if backtrack(p, q, cp, cq, order, depth + 1, image, used) {
            return true;
        }
        used[y] = false;
        image[x] = usize::MAX;
    }
    false
}

/// Checks that `image` is a bijection preserving and reflecting the order.
pub fn is_isomorphism(p: &Poset, q: &Poset, image: &[usize]) -> bool {
    let n = p.len();
    if q.len() != n || image.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in image {
        if y >= n || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..n).all(|a| (0..n).all(|b| p.leq(a, b) == q.leq(image[a], image[b])))
}

/// Canonical code: the lexicographically smallest relation bit string over
/// all colour-respecting orderings, plus the ordering that realises it.
/// Cost is the product of the factorials of the colour class sizes, so this
/// is meant for small posets (enumeration range).
pub fn canonical_form(p: &Poset) -> (Vec<bool>, Vec<usize>) {
    let n = p.len();
    let colors = refined_colors(p);
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (x, &c) in colors.iter().enumerate() {
        classes.entry(c).or_default().push(x);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();
    let mut best: Option<(Vec<bool>, Vec<usize>)> = None;
    let mut current = Vec::with_capacity(n);
    search_orderings(p, &classes, 0, &mut current, &mut best);
    best.expect("at least one ordering exists")
}

fn code_of(p: &Poset, order: &[usize]) -> Vec<bool> {
    let mut code = Vec::with_capacity(order.len() * order.len());
    for &a in order {
        for &b in order {
            if a != b {
                code.push(p.leq(a, b));
            }
        }
    }
    code
}

fn search_orderings(
    p: &Poset,
    classes: &[Vec<usize>],
    class_idx: usize,
    current: &mut Vec<usize>,
    best: &mut Option<(Vec<bool>, Vec<usize>)>,
) {
    if class_idx == classes.len() {
        let code = code_of(p, current);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, current.clone()));
        }
        return;
    }
    let mut members = classes[class_idx].clone();
    permute(&mut members, 0, &mut |perm| {
        current.extend_from_slice(perm);
        search_orderings(p, classes, class_idx + 1, current, best);
        current.truncate(current.len() - perm.len());
    });
}

fn permute(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}
