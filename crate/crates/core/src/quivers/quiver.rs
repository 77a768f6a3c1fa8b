use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::QuiverError;
use crate::posets::find_cycle;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// Finite acyclic quiver; parallel arrows are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// A path given by its start vertex and a composable arrow sequence, read
/// left to right. The empty sequence is the trivial path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPath {
    pub source: usize,
    pub arrows: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub id: String,
    pub from: String,
    pub to: String,
}

impl Quiver {
    /// `arrows` are `(id, source label, target label)`.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Quiver, QuiverError> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let lookup = |l: &str| index.get(l).copied().ok_or_else(|| QuiverError::UnknownVertex(l.to_string()));
        let arrows = arrows
            .iter()
            .map(|(id, s, t)| {
                Ok(Arrow { id: id.as_ref().to_string(), source: lookup(s.as_ref())?, target: lookup(t.as_ref())? })
            })
            .collect::<Result<Vec<_>, QuiverError>>()?;
        Quiver::from_parts(vertices, arrows)
    }

    pub fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Quiver, QuiverError> {
        let mut ids = HashMap::new();
        for a in &arrows {
            if ids.insert(a.id.clone(), ()).is_some() {
                return Err(QuiverError::DuplicateArrow(a.id.clone()));
            }
            assert!(a.source < vertices.len() && a.target < vertices.len());
        }
        let mut succ = vec![Vec::new(); vertices.len()];
        for a in &arrows {
            succ[a.source].push(a.target);
        }
        if let Some(cycle) = find_cycle(&succ) {
            return Err(QuiverError::OrientedCycle(cycle.into_iter().map(|i| vertices[i].clone()).collect()));
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v).map(|(i, _)| i)
    }

    pub fn in_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.target == v).map(|(i, _)| i)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.in_arrows(v).next().is_none()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_arrows(v).next().is_none()
    }

    /// Vertices in a topological order, ties broken by index.
    pub fn topological_order(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for a in self.out_arrows(v) {
                let t = self.arrows[a].target;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    ready.insert(t);
                }
            }
        }
        debug_assert_eq!(order.len(), n, "quiver is acyclic");
        order
    }

    /// Every path from `i` to `j` as an arrow sequence, sorted by length and
    /// then by arrow ids.
    pub fn paths(&self, i: usize, j: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![(i, Vec::new())];
        while let Some((v, path)) = stack.pop() {
            if v == j {
                out.push(path.clone());
            }
            for a in self.out_arrows(v) {
                let mut next = path.clone();
                next.push(a);
                stack.push((self.arrows[a].target, next));
            }
        }
        out.sort_by(|a, b| self.path_key(a).cmp(&self.path_key(b)));
        out
    }

    /// Ordering key for paths: length, then arrow ids.
    pub fn path_key<'a>(&'a self, path: &[usize]) -> (usize, Vec<&'a str>) {
        (path.len(), path.iter().map(|&a| self.arrows[a].id.as_str()).collect())
    }

    /// Number of paths between every ordered pair of vertices.
    pub fn path_counts(&self) -> Vec<Vec<u64>> {
        let n = self.vertex_count();
        let order = self.topological_order();
        let mut counts = vec![vec![0u64; n]; n];
        for &s in &order {
            counts[s][s] = 1;
        }
        for &v in &order {
            for a in self.out_arrows(v) {
                let t = self.arrows[a].target;
                for row in counts.iter_mut() {
                    row[t] = row[t].saturating_add(row[v]);
                }
            }
        }
        counts
    }

    pub fn path_target(&self, path: &QPath) -> usize {
        path.arrows.last().map_or(path.source, |&a| self.arrows[a].target)
    }

    pub fn is_composable(&self, path: &QPath) -> bool {
        let mut v = path.source;
        for &a in &path.arrows {
            let arrow = &self.arrows[a];
            if arrow.source != v {
                return false;
            }
            v = arrow.target;
        }
        true
    }

    pub fn path_ids(&self, path: &[usize]) -> Vec<String> {
        path.iter().map(|&a| self.arrows[a].id.clone()).collect()
    }

    pub fn arrow_specs(&self) -> Vec<ArrowSpec> {
        self.arrows
            .iter()
            .map(|a| ArrowSpec {
                id: a.id.clone(),
                from: self.vertices[a.source].clone(),
                to: self.vertices[a.target].clone(),
            })
            .collect()
    }

    /// Quiver on the same vertices with a new arrow list.
    pub fn with_arrows(&self, arrows: Vec<Arrow>) -> Result<Quiver, QuiverError> {
        Quiver::from_parts(self.vertices.clone(), arrows)
    }

    /// Isomorphism of quivers as labelled multigraphs up to renaming of
    /// vertices and arrows. Backtracking on vertices; fine for the small
    /// quivers this crate reflects.
    pub fn is_isomorphic_to(&self, other: &Quiver) -> bool {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.arrows.len() != other.arrows.len() {
            return false;
        }
        let mult = |q: &Quiver| {
            let mut m = vec![vec![0usize; n]; n];
            for a in &q.arrows {
                m[a.source][a.target] += 1;
            }
            m
        };
        let (ma, mb) = (mult(self), mult(other));
        let degrees = |m: &[Vec<usize>]| -> Vec<(usize, usize)> {
            (0..n).map(|v| (m[v].iter().sum(), m.iter().map(|r| r[v]).sum())).collect()
        };
        let (da, db) = (degrees(&ma), degrees(&mb));
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            v: usize,
            ma: &[Vec<usize>],
            mb: &[Vec<usize>],
            da: &[(usize, usize)],
            db: &[(usize, usize)],
            image: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if v == ma.len() {
                return true;
            }
            for w in 0..ma.len() {
                if used[w] || da[v] != db[w] || ma[v][v] != mb[w][w] {
                    continue;
                }
                if !(0..v).all(|u| ma[u][v] == mb[image[u]][w] && ma[v][u] == mb[w][image[u]]) {
                    continue;
                }
                image[v] = w;
                used[w] = true;
                if extend(v + 1, ma, mb, da, db, image, used) {
                    return true;
                }
                used[w] = false;
            }
            false
        }
        extend(0, &ma, &mb, &da, &db, &mut image, &mut used)
    }
}
