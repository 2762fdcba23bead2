//! Dense row-major matrices, LU with partial pivoting and a 1-norm
//! condition estimator.

use rayon::prelude::*;

use crate::error::{BkmError, Result};
use crate::scalar::Real;

/// Pivots at or below this magnitude are treated as exact zeros.
pub const ZERO_PIVOT: f64 = 1e-300;

#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    /// Fills rows in parallel; the first error in row order is returned.
    pub fn try_from_fn_par<F>(rows: usize, cols: usize, f: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> Result<T> + Sync,
    {
        let mut data = vec![T::zero(); rows * cols];
        if cols > 0 {
            data.par_chunks_mut(cols).enumerate().try_for_each(|(i, row)| {
                for (j, slot) in row.iter_mut().enumerate() {
                    *slot = f(i, j)?;
                }
                Ok::<(), BkmError>(())
            })?;
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(BkmError::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Ok(DenseMatrix { rows: rows.len(), cols, data: rows.concat() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.cols {
            return Err(BkmError::DimensionMismatch { expected: self.cols, found: x.len() });
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(x).fold(T::zero(), |acc, (&a, &b)| acc + a * b)).collect())
    }

    pub fn scale(&self, c: T) -> Self {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&v| v * c).collect() }
    }

    pub fn norm_max(&self) -> T {
        self.data.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }

    pub fn norm_one(&self) -> T {
        (0..self.cols)
            .map(|j| (0..self.rows).fold(T::zero(), |s, i| s + self[(i, j)].abs()))
            .fold(T::zero(), T::max)
    }

    /// `max |a_ij − a_ji|` over a square matrix.
    pub fn max_asymmetry(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst
    }

    pub fn cast<U: Real>(&self) -> DenseMatrix<U> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| U::lit(v.as_f64())).collect() }
    }
}

impl<T> std::ops::Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// `‖A·x − b‖_∞`.
pub fn residual_inf<T: Real>(a: &DenseMatrix<T>, x: &[T], b: &[T]) -> Result<T> {
    if b.len() != a.rows() {
        return Err(BkmError::DimensionMismatch { expected: a.rows(), found: b.len() });
    }
    Ok(a.mul_vec(x)?.iter().zip(b).fold(T::zero(), |m, (&ax, &bi)| m.max((ax - bi).abs())))
}

pub fn norm_inf<T: Real>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |m, x| m.max(x.abs()))
}

fn norm_one_vec<T: Real>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |s, x| s + x.abs())
}

/// `P·A = L·U` with unit lower-triangular `L` stored below the diagonal.
#[derive(Clone, Debug)]
pub struct Lu<T> {
    factors: DenseMatrix<T>,
    perm: Vec<usize>,
    norm_one: T,
}

impl<T: Real> Lu<T> {
    pub fn factor(a: &DenseMatrix<T>) -> Result<Self> {
        if !a.is_square() {
            return Err(BkmError::DimensionMismatch { expected: a.rows(), found: a.cols() });
        }
        let n = a.rows();
        let mut f = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let tiny = T::lit(ZERO_PIVOT);
        for k in 0..n {
            let p = (k..n).fold(k, |best, i| if f[(i, k)].abs() > f[(best, k)].abs() { i } else { best });
            let pivot = f[(p, k)];
            if !(pivot.abs() > tiny) {
                return Err(BkmError::Singular { column: k, pivot: pivot.as_f64() });
            }
            if p != k {
                perm.swap(p, k);
                for j in 0..n {
                    let t = f[(k, j)];
                    f[(k, j)] = f[(p, j)];
                    f[(p, j)] = t;
                }
            }
            let (head, tail) = f.data.split_at_mut((k + 1) * n);
            let pivot_row = &head[k * n..];
            tail.par_chunks_mut(n).for_each(|row| {
                let l = row[k] / pivot_row[k];
                row[k] = l;
                if l != T::zero() {
                    for j in k + 1..n {
                        row[j] = row[j] - l * pivot_row[j];
                    }
                }
            });
        }
        Ok(Lu { factors: f, perm, norm_one: a.norm_one() })
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// Solves `A·x = b`.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        let n = self.dim();
        if b.len() != n {
            return Err(BkmError::DimensionMismatch { expected: n, found: b.len() });
        }
        let f = &self.factors;
        let mut x: Vec<T> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let s = (0..i).fold(x[i], |s, j| s - f[(i, j)] * x[j]);
            x[i] = s;
        }
        for i in (0..n).rev() {
            let s = (i + 1..n).fold(x[i], |s, j| s - f[(i, j)] * x[j]);
            x[i] = s / f[(i, i)];
        }
        Ok(x)
    }

    /// Solves `Aᵀ·x = b`.
    pub fn solve_transpose(&self, b: &[T]) -> Result<Vec<T>> {
        let n = self.dim();
        if b.len() != n {
            return Err(BkmError::DimensionMismatch { expected: n, found: b.len() });
        }
        let f = &self.factors;
        let mut y = b.to_vec();
        for i in 0..n {
            let s = (0..i).fold(y[i], |s, j| s - f[(j, i)] * y[j]);
            y[i] = s / f[(i, i)];
        }
        for i in (0..n).rev() {
            let s = (i + 1..n).fold(y[i], |s, j| s - f[(j, i)] * y[j]);
            y[i] = s;
        }
        let mut x = vec![T::zero(); n];
        for (i, &p) in self.perm.iter().enumerate() {
            x[p] = y[i];
        }
        Ok(x)
    }

    /// Estimate of `‖A‖₁·‖A⁻¹‖₁` (Hager's method with Higham's extra test vector).
    pub fn condition_estimate(&self) -> T {
        let n = self.dim();
        if n == 0 {
            return T::one();
        }
        let inv_norm = self.inverse_norm_one_estimate().unwrap_or_else(|_| T::infinity());
        self.norm_one * inv_norm
    }

    fn inverse_norm_one_estimate(&self) -> Result<T> {
        let n = self.dim();
        let nt = T::of_usize(n);
        let mut x = vec![T::one() / nt; n];
        let mut estimate = T::zero();
        for iteration in 0..5 {
            let y = self.solve(&x)?;
            let norm = norm_one_vec(&y);
            if iteration > 0 && norm <= estimate {
                break;
            }
            estimate = norm;
            let signs: Vec<T> = y.iter().map(|&v| if v >= T::zero() { T::one() } else { -T::one() }).collect();
            let z = self.solve_transpose(&signs)?;
            let (j, zmax) = z.iter().enumerate().fold((0, T::zero()), |(bj, bv), (j, &v)| if v.abs() > bv { (j, v.abs()) } else { (bj, bv) });
            let ztx = z.iter().zip(&x).fold(T::zero(), |s, (&a, &b)| s + a * b);
            if zmax <= ztx {
                break;
            }
            x = vec![T::zero(); n];
            x[j] = T::one();
        }
        let alt: Vec<T> = (0..n)
            .map(|i| {
                let mag = T::one() + T::of_usize(i) / T::of_usize((n - 1).max(1));
                if i % 2 == 0 {
                    mag
                } else {
                    -mag
                }
            })
            .collect();
        let alt_norm = T::lit(2.0) * norm_one_vec(&self.solve(&alt)?) / (T::lit(3.0) * nt);
        Ok(estimate.max(alt_norm))
    }
}
