use serde::Serialize;

use super::{stalk_hom_with_resolution, DerivedError, FunctorF};
use crate::exactla::{Field, IntMatrix};
use crate::homology::{ext_dims_from_resolution, minimal_resolution, simple_resolutions};

/// `dim Hom(X_x, X_y[i])` for a family of objects, on a window of shifts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtTable {
    pub labels: Vec<String>,
    pub window: (i64, i64),
    /// `values[x][y][i - window.0]`.
    pub values: Vec<Vec<Vec<usize>>>,
}

impl ExtTable {
    pub fn get(&self, x: usize, y: usize, i: i64) -> usize {
        if i < self.window.0 || i > self.window.1 {
            return 0;
        }
        self.values[x][y][(i - self.window.0) as usize]
    }

    /// Shifts with a nonzero entry somewhere in the table.
    pub fn support(&self) -> Vec<i64> {
        (self.window.0..=self.window.1)
            .filter(|&i| self.values.iter().flatten().any(|row| row[(i - self.window.0) as usize] != 0))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BeilinsonReport {
    pub window: (i64, i64),
    /// Smallest window that holds every possibly nonzero entry.
    pub required_window: (i64, i64),
    pub left: ExtTable,
    pub right: ExtTable,
    pub equal: bool,
    pub k0_unimodular: bool,
    pub signed_dimension_vectors: Vec<Vec<i64>>,
}

/// Ext tables of the simples over `kX_p` and of their images over `Λ(p)`,
/// plus unimodularity of the images' signed dimension vectors.
pub fn beilinson_table_check<F: Field>(weights: [usize; 3], window: (i64, i64)) -> Result<BeilinsonReport, DerivedError> {
    let functor = FunctorF::<F>::new(weights)?;
    let images = functor.images_of_simples()?;
    let (kx, lam) = (functor.incidence(), functor.canonical());
    let n = kx.vertex_count();
    let labels = functor.poset().labels().to_vec();

    let left_res = simple_resolutions(kx)?;
    let right_res = images
        .iter()
        .map(|s| minimal_resolution(lam, &s.module, lam.dimension()))
        .collect::<Result<Vec<_>, _>>()?;
    let gl_x = left_res.iter().filter_map(|r| r.length()).max().unwrap_or(0) as i64;
    let gl_l = crate::homology::global_dimension(lam)? as i64;
    let degrees: Vec<i64> = images.iter().map(|s| s.degree).collect();
    let spread = degrees.iter().max().unwrap() - degrees.iter().min().unwrap();
    let required = (-spread, gl_x.max(gl_l + spread));
    if window.0 > required.0 || window.1 < required.1 {
        return Err(DerivedError::WindowTooSmall { given: window, required });
    }

    let width = (window.1 - window.0 + 1) as usize;
    let max_ext = (window.1 + spread).max(0) as usize;
    let mut left = vec![vec![vec![0; width]; n]; n];
    let mut right = vec![vec![vec![0; width]; n]; n];
    for x in 0..n {
        for y in 0..n {
            let ext = ext_dims_from_resolution(kx, &left_res[x], &kx.simple(y), max_ext);
            for (k, i) in (window.0..=window.1).enumerate() {
                left[x][y][k] = usize::try_from(i).ok().and_then(|i| ext.get(i).copied()).unwrap_or(0);
                right[x][y][k] = stalk_hom_with_resolution(lam, &right_res[x], images[x].degree, &images[y], i);
            }
        }
    }
    let signed: Vec<Vec<i64>> = images
        .iter()
        .map(|s| {
            let sign = if s.degree.rem_euclid(2) == 0 { 1 } else { -1 };
            s.module.dims.iter().map(|&d| sign * d as i64).collect()
        })
        .collect();
    let det = IntMatrix::from_rows(&signed).determinant();
    let left = ExtTable { labels: labels.clone(), window, values: left };
    let right = ExtTable { labels, window, values: right };
    Ok(BeilinsonReport {
        window,
        required_window: required,
        equal: left == right,
        left,
        right,
        k0_unimodular: det.abs() == 1,
        signed_dimension_vectors: signed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rational;

    #[test]
    fn tables_333() {
        let r = beilinson_table_check::<Rational>([3, 3, 3], (-3, 3)).unwrap();
        assert!(r.equal);
        assert!(r.k0_unimodular);
        for x in 0..r.left.labels.len() {
            for y in 0..r.left.labels.len() {
                assert_eq!(r.left.get(x, y, 0), usize::from(x == y));
            }
        }
        assert!(r.right.support().iter().all(|&i| (-1..=3).contains(&i)));
    }

    #[test]
    fn narrow_window_rejected() {
        assert!(matches!(
            beilinson_table_check::<Rational>([3, 3, 3], (0, 1)),
            Err(DerivedError::WindowTooSmall { .. })
        ));
    }
}
