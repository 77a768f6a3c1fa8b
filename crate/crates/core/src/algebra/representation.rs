use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{AlgebraError, BoundQuiverAlgebra};
use crate::exactla::{matrix_from_strings, matrix_to_strings, Field, Matrix};
use crate::quivers::Quiver;

/// A vector space per vertex and a matrix per arrow acting on column
/// vectors: `maps[a]` has shape `dims[target] x dims[source]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<F: Field> {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix<F>>,
}

/// Family of linear maps `M(v) -> N(v)` commuting with the arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap<F: Field> {
    pub components: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    pub fn new(quiver: &Quiver, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self, AlgebraError> {
        if dims.len() != quiver.vertex_count() || maps.len() != quiver.arrows().len() {
            return Err(AlgebraError::Shape("vertex or arrow count mismatch".into()));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            if (m.rows(), m.cols()) != (dims[a.target], dims[a.source]) {
                return Err(AlgebraError::Shape(format!("map for arrow {:?} has the wrong shape", a.id)));
            }
        }
        Ok(Representation { dims, maps })
    }

    pub fn zero(quiver: &Quiver) -> Self {
        Representation {
            dims: vec![0; quiver.vertex_count()],
            maps: quiver.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Matrix of a path, composing arrow maps in path order.
    pub fn path_map(&self, source: usize, path: &[usize]) -> Matrix<F> {
        let mut m = Matrix::identity(self.dims[source]);
        for &a in path {
            m = self.maps[a].mul(&m);
        }
        m
    }

    pub fn direct_sum(&self, other: &Representation<F>) -> Representation<F> {
        Representation {
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }

    pub fn to_file(&self, quiver: &Quiver) -> RepresentationFile {
        RepresentationFile {
            dims: quiver.vertices().iter().cloned().zip(self.dims.iter().copied()).collect(),
            maps: quiver.arrows().iter().zip(&self.maps).map(|(a, m)| (a.id.clone(), matrix_to_strings(m))).collect(),
        }
    }

    pub fn from_file(quiver: &Quiver, file: &RepresentationFile) -> Result<Self, AlgebraError> {
        let dims: Vec<usize> = quiver.vertices().iter().map(|v| file.dims.get(v).copied().unwrap_or(0)).collect();
        if let Some(v) = file.dims.keys().find(|v| quiver.vertex_index(v).is_none()) {
            return Err(AlgebraError::Shape(format!("unknown vertex {v:?}")));
        }
        if let Some(a) = file.maps.keys().find(|a| quiver.arrow_index(a).is_none()) {
            return Err(AlgebraError::Shape(format!("unknown arrow {a:?}")));
        }
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = (dims[a.target], dims[a.source]);
                match file.maps.get(&a.id) {
                    Some(rows) => matrix_from_strings(r, c, rows).map_err(|e| AlgebraError::Shape(e.to_string())),
                    None => Ok(Matrix::zeros(r, c)),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Representation::new(quiver, dims, maps)
    }
}

impl<F: Field> ModuleMap<F> {
    pub fn zero(source: &Representation<F>, target: &Representation<F>) -> Self {
        ModuleMap {
            components: source.dims.iter().zip(&target.dims).map(|(&s, &t)| Matrix::zeros(t, s)).collect(),
        }
    }

    pub fn identity(m: &Representation<F>) -> Self {
        ModuleMap { components: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    pub fn compose(&self, first: &ModuleMap<F>) -> ModuleMap<F> {
        ModuleMap { components: self.components.iter().zip(&first.components).map(|(g, f)| g.mul(f)).collect() }
    }

    pub fn add(&self, other: &ModuleMap<F>) -> ModuleMap<F> {
        ModuleMap { components: self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: &F) -> ModuleMap<F> {
        ModuleMap { components: self.components.iter().map(|m| m.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    /// `N(a) f_s = f_t M(a)` for every arrow.
    pub fn is_module_map(&self, quiver: &Quiver, source: &Representation<F>, target: &Representation<F>) -> bool {
        quiver.arrows().iter().enumerate().all(|(k, a)| {
            target.maps[k].mul(&self.components[a.source]) == self.components[a.target].mul(&source.maps[k])
        })
    }
}

impl<F: Field> BoundQuiverAlgebra<F> {
    /// Every relation acts as zero.
    pub fn satisfies_relations(&self, m: &Representation<F>) -> bool {
        self.presentation().relations.iter().all(|r| {
            let mut total = Matrix::zeros(m.dims[r.target], m.dims[r.source]);
            for (c, p) in &r.terms {
                total = total.add(&m.path_map(r.source, p).scale(c));
            }
            total.is_zero()
        })
    }

    pub fn module(&self, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Representation<F>, AlgebraError> {
        let m = Representation::new(self.quiver(), dims, maps)?;
        if !self.satisfies_relations(&m) {
            return Err(AlgebraError::RelationsViolated);
        }
        Ok(m)
    }
}

/// JSON shape of a representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub dims: BTreeMap<String, usize>,
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}
