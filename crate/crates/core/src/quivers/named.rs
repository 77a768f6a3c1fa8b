use super::{star_quiver, Arrow, Quiver};

/// Linearly oriented `A_n`: `1 -> 2 -> ... -> n`.
pub fn linear_quiver(n: usize) -> Quiver {
    let vertices = (1..=n).map(|i| i.to_string()).collect();
    let arrows = (1..n).map(|i| Arrow { id: format!("a{i}"), source: i - 1, target: i }).collect();
    Quiver::from_parts(vertices, arrows).expect("linear quiver is acyclic")
}

/// `A_n` with an arbitrary orientation; bit `k` of `orientation` reverses
/// arrow `k`.
pub fn oriented_a(n: usize, orientation: u64) -> Quiver {
    let vertices = (1..=n).map(|i| i.to_string()).collect();
    let arrows = (1..n)
        .map(|i| {
            let (s, t) = if orientation >> (i - 1) & 1 == 1 { (i, i - 1) } else { (i - 1, i) };
            Arrow { id: format!("a{i}"), source: s, target: t }
        })
        .collect();
    Quiver::from_parts(vertices, arrows).expect("trees are acyclic")
}

/// `Ã_{1,p}`: a path of `p` arrows from `0` to `w` plus one direct arrow.
/// For `p = 1` this is the Kronecker quiver.
pub fn a_tilde(p: usize) -> Quiver {
    star_quiver(&[p, 1])
}

/// Kronecker quiver: two vertices, two parallel arrows.
pub fn kronecker() -> Quiver {
    a_tilde(1)
}

/// `D̃_n` (`n >= 4`, `n + 1` vertices) in subspace orientation: a path
/// `c1 .. c_{n-3}` with two leaves at each end, every arrow pointing toward
/// `c_{n-3}`.
pub fn d_tilde(n: usize) -> Quiver {
    assert!(n >= 4, "D~_n needs n >= 4");
    let spine = n - 3;
    let mut vertices: Vec<String> = (1..=spine).map(|i| format!("c{i}")).collect();
    vertices.extend(["l1", "l2", "r1", "r2"].map(String::from));
    let mut arrows: Vec<Arrow> =
        (1..spine).map(|i| Arrow { id: format!("s{i}"), source: i - 1, target: i }).collect();
    let (left, right) = (spine, spine + 2);
    arrows.push(Arrow { id: "l1".into(), source: left, target: 0 });
    arrows.push(Arrow { id: "l2".into(), source: left + 1, target: 0 });
    arrows.push(Arrow { id: "r1".into(), source: right, target: spine - 1 });
    arrows.push(Arrow { id: "r2".into(), source: right + 1, target: spine - 1 });
    Quiver::from_parts(vertices, arrows).expect("D~_n is a tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(linear_quiver(4).arrows().len(), 3);
        let k = kronecker();
        assert_eq!((k.vertex_count(), k.arrows().len()), (2, 2));
        let a = a_tilde(3);
        assert_eq!((a.vertex_count(), a.arrows().len()), (4, 4));
        for n in 4..=7 {
            let d = d_tilde(n);
            assert_eq!(d.vertex_count(), n + 1);
            assert_eq!(d.arrows().len(), n);
            let sinks: Vec<usize> = (0..d.vertex_count()).filter(|&v| d.is_sink(v)).collect();
            assert_eq!(sinks, vec![n - 4]);
        }
    }

    #[test]
    fn d_tilde_four_is_star() {
        let d = d_tilde(4);
        assert_eq!(d.in_arrows(0).count(), 4);
    }
}
