use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{ArrowSpec, Quiver, QuiverError};
use crate::exactla::{Field, Matrix};

/// Linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<F: Field> {
    pub source: usize,
    pub target: usize,
    pub terms: Vec<(F, Vec<usize>)>,
}

impl<F: Field> Relation<F> {
    /// Builds a relation, merging repeated paths and dropping zero terms.
    pub fn new(quiver: &Quiver, terms: Vec<(F, Vec<usize>)>) -> Result<Relation<F>, QuiverError> {
        let first = terms.first().ok_or(QuiverError::EmptyRelation)?;
        let endpoints = |p: &[usize]| -> Result<(usize, usize), QuiverError> {
            let (&a, &b) = (p.first().ok_or(QuiverError::TrivialPathInRelation)?, p.last().unwrap());
            let mut v = quiver.arrow(a).source;
            for &x in p {
                if quiver.arrow(x).source != v {
                    return Err(QuiverError::NotComposable(quiver.path_ids(p).join(" ")));
                }
                v = quiver.arrow(x).target;
            }
            Ok((quiver.arrow(a).source, quiver.arrow(b).target))
        };
        let (source, target) = endpoints(&first.1)?;
        let mut merged: Vec<(F, Vec<usize>)> = Vec::new();
        for (c, p) in terms {
            if endpoints(&p)? != (source, target) {
                return Err(QuiverError::NotParallel);
            }
            match merged.iter_mut().find(|(_, q)| *q == p) {
                Some(entry) => entry.0 = entry.0.clone() + c,
                None => merged.push((c, p)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        if merged.is_empty() {
            return Err(QuiverError::EmptyRelation);
        }
        Ok(Relation { source, target, terms: merged })
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

/// Quiver with relations generating an admissible ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation<F: Field> {
    pub quiver: Quiver,
    pub relations: Vec<Relation<F>>,
}

/// Paths from one vertex to another together with the ideal restricted to
/// that block, as row vectors over the path list.
pub struct IdealBlock<F: Field> {
    pub paths: Vec<Vec<usize>>,
    pub generators: Vec<Vec<F>>,
}

impl<F: Field> Presentation<F> {
    pub fn new(quiver: Quiver, relations: Vec<Relation<F>>) -> Presentation<F> {
        Presentation { quiver, relations }
    }

    pub fn free(quiver: Quiver) -> Presentation<F> {
        Presentation { quiver, relations: Vec::new() }
    }

    /// Spanning set of `I` restricted to paths `i -> j`: all `u r v`.
    pub fn ideal_block(&self, i: usize, j: usize) -> IdealBlock<F> {
        let q = &self.quiver;
        let paths = q.paths(i, j);
        let index: HashMap<&[usize], usize> = paths.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect();
        let mut generators = Vec::new();
        for r in &self.relations {
            for u in q.paths(i, r.source) {
                for v in q.paths(r.target, j) {
                    let mut row = vec![F::zero(); paths.len()];
                    for (c, p) in &r.terms {
                        let full: Vec<usize> = u.iter().chain(p).chain(&v).copied().collect();
                        let k = index[full.as_slice()];
                        row[k] = row[k].clone() + c.clone();
                    }
                    generators.push(row);
                }
            }
        }
        IdealBlock { paths, generators }
    }

    pub fn to_file(&self) -> QuiverFile {
        QuiverFile {
            vertices: self.quiver.vertices().to_vec(),
            arrows: self.quiver.arrow_specs(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationSpec {
                    terms: r
                        .terms
                        .iter()
                        .map(|(c, p)| TermSpec { coeff: c.to_string(), path: self.quiver.path_ids(p) })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_file(file: &QuiverFile) -> Result<Presentation<F>, QuiverError> {
        let arrows: Vec<(&str, &str, &str)> =
            file.arrows.iter().map(|a| (a.id.as_str(), a.from.as_str(), a.to.as_str())).collect();
        let quiver = Quiver::new(&file.vertices.iter().map(String::as_str).collect::<Vec<_>>(), &arrows)?;
        let mut relations = Vec::new();
        for r in &file.relations {
            let mut terms = Vec::new();
            for t in &r.terms {
                let c = F::parse(&t.coeff).map_err(|e| QuiverError::BadCoefficient(e.0))?;
                let path = t
                    .path
                    .iter()
                    .map(|id| quiver.arrow_index(id).ok_or_else(|| QuiverError::UnknownArrow(id.clone())))
                    .collect::<Result<Vec<_>, _>>()?;
                terms.push((c, path));
            }
            relations.push(Relation::new(&quiver, terms)?);
        }
        Ok(Presentation { quiver, relations })
    }

    /// Row-reduced ideal span inside a block, for rank queries.
    pub fn ideal_rank(&self, i: usize, j: usize) -> (usize, usize) {
        let block = self.ideal_block(i, j);
        let rank = if block.generators.is_empty() {
            0
        } else {
            Matrix::from_rows(block.generators).rank()
        };
        (block.paths.len(), rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSpec {
    pub terms: Vec<TermSpec>,
}

/// JSON shape of a bound quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<RelationSpec>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rational;

    fn square() -> Quiver {
        Quiver::new(&["0", "a", "b", "1"], &[("p", "0", "a"), ("q", "0", "b"), ("r", "a", "1"), ("s", "b", "1")])
            .unwrap()
    }

    #[test]
    fn relation_merges_and_checks() {
        let q = square();
        let r = Relation::new(
            &q,
            vec![(Rational::from_i64(1), vec![0, 2]), (Rational::from_i64(-1), vec![1, 3]), (Rational::from_i64(2), vec![0, 2])],
        )
        .unwrap();
        assert_eq!(r.terms.len(), 2);
        assert_eq!(r.terms[0].0, Rational::from_i64(3));
        assert!(matches!(
            Relation::new(&q, vec![(Rational::from_i64(1), vec![0, 2]), (Rational::from_i64(1), vec![0])]),
            Err(QuiverError::NotParallel)
        ));
        assert!(matches!(Relation::new(&q, vec![(Rational::from_i64(1), vec![0, 3])]), Err(QuiverError::NotComposable(_))));
    }

    #[test]
    fn commutative_square_ideal() {
        let q = square();
        let r = Relation::new(&q, vec![(Rational::from_i64(1), vec![0, 2]), (Rational::from_i64(-1), vec![1, 3])]).unwrap();
        let pres = Presentation::new(q, vec![r]);
        assert_eq!(pres.ideal_rank(0, 3), (2, 1));
        assert_eq!(pres.ideal_rank(0, 1), (1, 0));
    }

    #[test]
    fn json_round_trip() {
        let q = square();
        let r = Relation::new(&q, vec![(Rational::new(1, 2), vec![0, 2]), (Rational::from_i64(-1), vec![1, 3])]).unwrap();
        let pres = Presentation::new(q, vec![r]);
        let text = serde_json::to_string(&pres.to_file()).unwrap();
        let back: Presentation<Rational> = Presentation::from_file(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, pres);
    }
}
