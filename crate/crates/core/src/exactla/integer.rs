//! Integer matrices, integer polynomials, characteristic polynomials and
//! Smith normal forms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::scalar::{Field, Rational};
use super::LinalgError;

/// Square or rectangular matrix of machine integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = a
                        .checked_mul(rhs[(k, j)])
                        .and_then(|p| p.checked_add(out[(i, j)]))
                        .expect("integer overflow in matrix product");
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    pub fn to_field<F: Field>(&self) -> Matrix<F> {
        Matrix::from_vec(self.rows, self.cols, self.data.iter().map(|&x| F::from_i64(x)).collect())
    }

    /// Converts back from an exact matrix whose entries are all integers.
    pub fn from_field<F: Field>(m: &Matrix<F>) -> Option<IntMatrix> {
        let data = m.entries().iter().map(Field::to_i64).collect::<Option<Vec<_>>>()?;
        Some(IntMatrix { rows: m.rows(), cols: m.cols(), data })
    }

    pub fn determinant(&self) -> i64 {
        assert_eq!(self.rows, self.cols);
        self.to_field::<Rational>().determinant().to_i64().expect("integer determinant")
    }

    /// Inverse over the integers, present only for unimodular matrices.
    pub fn inverse(&self) -> Option<IntMatrix> {
        let inv = self.to_field::<Rational>().inverse()?;
        IntMatrix::from_field(&inv)
    }

    /// `det(x·I − self)`, computed exactly with the Faddeev–LeVerrier
    /// recurrence over the rationals.
    pub fn char_poly(&self) -> Result<IntPolynomial, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let a: Matrix<Rational> = self.to_field();
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = Matrix::<Rational>::zeros(n, n);
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1}·I
            let mut next = a.mul(&m);
            for i in 0..n {
                next[(i, i)] = next[(i, i)].clone() + &coeffs[n - k + 1];
            }
            m = next;
            let am = a.mul(&m);
            let trace = (0..n).fold(Rational::zero(), |acc, i| acc + &am[(i, i)]);
            let c = -(trace * &Rational::new(1, k as i64));
            coeffs[n - k] = c;
        }
        let ints = coeffs
            .iter()
            .map(|c| c.to_i64().ok_or(LinalgError::NonIntegral))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(ints))
    }

    /// Invariant factors `d1 | d2 | ... | dr`, all positive, `r` = rank.
    pub fn smith_normal_form(&self) -> Vec<i64> {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| BigInt::from(self[(i, j)])).collect())
            .collect();
        let rows = self.rows;
        let cols = self.cols;
        let mut diag = Vec::new();
        let mut t = 0;
        while t < rows.min(cols) {
            // Smallest nonzero entry in the remaining block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            loop {
                let mut dirty = false;
                // Clear column t.
                for i in t + 1..rows {
                    if m[i][t].is_zero() {
                        continue;
                    }
                    let q = m[i][t].div_floor(&m[t][t]);
                    for j in t..cols {
                        let v = &m[i][j] - &q * &m[t][j];
                        m[i][j] = v;
                    }
                    if !m[i][t].is_zero() {
                        m.swap(t, i);
                        dirty = true;
                    }
                }
                // Clear row t.
                for j in t + 1..cols {
                    if m[t][j].is_zero() {
                        continue;
                    }
                    let q = m[t][j].div_floor(&m[t][t]);
                    for row in m.iter_mut().skip(t) {
                        let v = &row[j] - &q * &row[t];
                        row[j] = v;
                    }
                    if !m[t][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // Enforce divisibility of the rest of the block by the pivot.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&m[i][j] % &m[t][t]).is_zero());
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = &m[t][j] + &m[i][j];
                            m[t][j] = v;
                        }
                    }
                    None => break,
                }
            }
            diag.push(m[t][t].abs());
            t += 1;
        }
        diag.into_iter().map(|d| d.to_i64().expect("invariant factor fits in i64")).collect()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Integer polynomial stored as ascending coefficients, trailing zeros
/// stripped; the zero polynomial is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn mul(&self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IntPolynomial::new(vec![]);
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn pow(&self, e: u32) -> IntPolynomial {
        (0..e).fold(IntPolynomial::new(vec![1]), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{a}x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
