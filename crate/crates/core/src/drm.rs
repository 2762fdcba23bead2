//! Dual-reciprocity particular solutions.
//!
//! The source term is interpolated with the order-`m` general solution `φ`
//! and the particular solution is the same combination of the order-`m+1`
//! kernel `ϕ`, which satisfies `ℜ{ϕ} = φ`.

use crate::error::{BkmError, Result};
use crate::geometry::check_distinct;
use crate::kernels::{kernel_value, normal_derivative_field, KernelFamily, KernelSpec};
use crate::linalg::{norm_inf, residual_inf, DenseMatrix, Lu};
use crate::point::Point;
use crate::scalar::Real;

/// Condition estimates above this are rejected by [`fit`].
pub fn near_singular_limit<T: Real>() -> T {
    T::one() / (T::epsilon() * T::lit(1e3))
}

#[derive(Clone, Debug)]
pub struct DrmExpansion<T> {
    lambda: Vec<T>,
    centers: Vec<Point<T>>,
    phi_spec: KernelSpec<T>,
    particular_spec: KernelSpec<T>,
    condition_estimate: T,
    residual: T,
}

/// `A_ij = φ(‖x_i − x_j‖)`.
pub fn assemble_interpolation_matrix<T: Real>(centers: &[Point<T>], phi_spec: &KernelSpec<T>) -> Result<DenseMatrix<T>> {
    if phi_spec.family() != KernelFamily::General {
        return Err(BkmError::InvalidParameter("interpolation kernel must be a general solution".into()));
    }
    check_distinct(centers)?;
    let n = centers.len();
    let upper = DenseMatrix::try_from_fn_par(n, n, |i, j| {
        if j < i {
            Ok(T::zero())
        } else {
            kernel_value(phi_spec, centers[i].distance(&centers[j]))
        }
    })?;
    Ok(DenseMatrix::from_fn(n, n, |i, j| if j < i { upper[(j, i)] } else { upper[(i, j)] }))
}

/// Solves `A_φ·λ = f` at the given centers.
pub fn fit<T: Real>(f_values: &[T], centers: &[Point<T>], phi_spec: &KernelSpec<T>) -> Result<DrmExpansion<T>> {
    if f_values.len() != centers.len() {
        return Err(BkmError::DimensionMismatch { expected: centers.len(), found: f_values.len() });
    }
    let a = assemble_interpolation_matrix(centers, phi_spec)?;
    let lu = Lu::factor(&a)?;
    let condition_estimate = lu.condition_estimate();
    let limit = near_singular_limit::<T>();
    if !(condition_estimate <= limit) {
        return Err(BkmError::NearSingular { estimate: condition_estimate.as_f64(), limit: limit.as_f64() });
    }
    let lambda = lu.solve(f_values)?;
    let residual = residual_inf(&a, &lambda, f_values)?;
    Ok(DrmExpansion {
        lambda,
        centers: centers.to_vec(),
        phi_spec: *phi_spec,
        particular_spec: phi_spec.raised(),
        condition_estimate,
        residual,
    })
}

impl<T: Real> DrmExpansion<T> {
    /// Expansion with given coefficients; no fit statistics are available.
    pub fn from_coefficients(lambda: Vec<T>, centers: Vec<Point<T>>, phi_spec: &KernelSpec<T>) -> Result<Self> {
        if lambda.len() != centers.len() {
            return Err(BkmError::DimensionMismatch { expected: centers.len(), found: lambda.len() });
        }
        Ok(DrmExpansion {
            lambda,
            centers,
            phi_spec: *phi_spec,
            particular_spec: phi_spec.raised(),
            condition_estimate: T::nan(),
            residual: T::nan(),
        })
    }

    pub fn lambda(&self) -> &[T] {
        &self.lambda
    }

    pub fn centers(&self) -> &[Point<T>] {
        &self.centers
    }

    pub fn phi_spec(&self) -> &KernelSpec<T> {
        &self.phi_spec
    }

    pub fn particular_spec(&self) -> &KernelSpec<T> {
        &self.particular_spec
    }

    pub fn condition_estimate(&self) -> T {
        self.condition_estimate
    }

    /// `‖A_φ·λ − f‖_∞` at fit time.
    pub fn residual(&self) -> T {
        self.residual
    }

    /// `‖A_φ·λ − f‖_∞ / ‖f‖_∞`, or the absolute residual when `f ≡ 0`.
    pub fn relative_residual(&self, f_values: &[T]) -> T {
        let scale = norm_inf(f_values);
        if scale > T::zero() {
            self.residual / scale
        } else {
            self.residual
        }
    }

    /// `Σ λ_j φ(‖x − x_j‖)`, the interpolant of the source term.
    pub fn interpolant(&self, x: &Point<T>) -> Result<T> {
        self.sum(|c| kernel_value(&self.phi_spec, x.distance(c)))
    }

    fn sum(&self, mut term: impl FnMut(&Point<T>) -> Result<T>) -> Result<T> {
        let mut total = T::zero();
        for (lambda, c) in self.lambda.iter().zip(&self.centers) {
            if *lambda != T::zero() {
                total = total + *lambda * term(c)?;
            }
        }
        Ok(total)
    }
}

/// `u_p(x) = Σ λ_j ϕ(‖x − x_j‖)`.
pub fn particular_solution<T: Real>(e: &DrmExpansion<T>, x: &Point<T>) -> Result<T> {
    e.sum(|c| kernel_value(&e.particular_spec, x.distance(c)))
}

/// `∂u_p/∂n` at `x`.
pub fn particular_normal_derivative<T: Real>(e: &DrmExpansion<T>, x: &Point<T>, n: &Point<T>) -> Result<T> {
    e.sum(|c| normal_derivative_field(&e.particular_spec, x, n, c))
}
