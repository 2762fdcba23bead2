//! Higher-order general and fundamental solutions of the Helmholtz and
//! modified Helmholtz operators.
//!
//! With `p` the operator parameter, `z = p·r`, `ν₀ = n/2 − 1` and
//! `ν = ν₀ + m`, the order-`m` kernels are
//!
//! ```text
//! u_m(r) = A_m · z^(m − ν₀) · C_ν(z) = A_m · z^(2m) · [z^−ν C_ν(z)]
//! ```
//!
//! with `C = J` / `I` for the nonsingular general solutions and `C = Y` / `K`
//! for the singular fundamental solutions. The constants follow
//! `A_m = A_{m−1} / (2 m p²)`, which makes `(∇² ± p²) u_m = u_{m−1}` and
//! `(∇² ± p²) u_0 = 0`.
//!
//! Derivatives are taken from `d/dz [z^−ν C_ν] = s · z · [z^−(ν+1) C_{ν+1}]`
//! (`s = +1` for `I`, `−1` otherwise), which keeps every expression a
//! polynomial in `z` times a scaled Bessel function and therefore finite at
//! the origin for the general family.

use serde::{Deserialize, Serialize};

use crate::error::{BkmError, Result};
use crate::point::Point;
use crate::scalar::Real;
use crate::specfun::{bessel_scaled, BesselKind, Order};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    /// `∇²u + γ²u`
    Helmholtz,
    /// `∇²u − τ²u`
    ModifiedHelmholtz,
}

/// A Helmholtz-type operator in two or three dimensions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorSpec<T> {
    kind: OperatorKind,
    param: T,
    dim: usize,
}

impl<T: Real> OperatorSpec<T> {
    pub fn new(kind: OperatorKind, param: T, dim: usize) -> Result<Self> {
        if !(param > T::zero()) || !param.is_finite() {
            return Err(BkmError::InvalidParameter(format!("operator parameter must be positive, got {param}")));
        }
        if dim != 2 && dim != 3 {
            return Err(BkmError::InvalidParameter(format!("dimension must be 2 or 3, got {dim}")));
        }
        Ok(OperatorSpec { kind, param, dim })
    }

    pub fn helmholtz(gamma: T, dim: usize) -> Result<Self> {
        Self::new(OperatorKind::Helmholtz, gamma, dim)
    }

    pub fn modified_helmholtz(tau: T, dim: usize) -> Result<Self> {
        Self::new(OperatorKind::ModifiedHelmholtz, tau, dim)
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn param(&self) -> T {
        self.param
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The zeroth-order coefficient `c` in `∇²u + c·u`.
    pub fn reaction_coefficient(&self) -> T {
        match self.kind {
            OperatorKind::Helmholtz => self.param * self.param,
            OperatorKind::ModifiedHelmholtz => -self.param * self.param,
        }
    }

    /// Applies the operator given the Laplacian and the value of a field.
    pub fn apply(&self, laplacian: T, value: T) -> T {
        laplacian + self.reaction_coefficient() * value
    }

    /// Converts the parameter to another scalar type.
    pub fn cast<U: Real>(&self) -> OperatorSpec<U> {
        OperatorSpec {
            kind: self.kind,
            param: U::lit(self.param.as_f64()),
            dim: self.dim,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelFamily {
    /// Nonsingular, built on `J` / `I`.
    General,
    /// Singular at the origin, built on `Y` / `K`.
    Fundamental,
}

/// One member of the kernel hierarchy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec<T> {
    op: OperatorSpec<T>,
    order: u32,
    family: KernelFamily,
    scale: T,
    coefficient: T,
}

impl<T: Real> KernelSpec<T> {
    /// Kernel with unit base constant `A_0 = B_0 = 1`.
    pub fn new(op: OperatorSpec<T>, order: u32, family: KernelFamily) -> Self {
        Self::with_scale(op, order, family, T::one()).expect("unit scale is valid")
    }

    pub fn general(op: OperatorSpec<T>, order: u32) -> Self {
        Self::new(op, order, KernelFamily::General)
    }

    pub fn fundamental(op: OperatorSpec<T>, order: u32) -> Self {
        Self::new(op, order, KernelFamily::Fundamental)
    }

    pub fn with_scale(op: OperatorSpec<T>, order: u32, family: KernelFamily, scale: T) -> Result<Self> {
        if !(scale > T::zero()) || !scale.is_finite() {
            return Err(BkmError::InvalidParameter(format!("kernel scale must be positive, got {scale}")));
        }
        let p2 = op.param * op.param;
        let mut coefficient = scale;
        for m in 1..=order {
            coefficient = coefficient / (T::of_usize(2 * m as usize) * p2);
        }
        Ok(KernelSpec {
            op,
            order,
            family,
            scale,
            coefficient,
        })
    }

    pub fn op(&self) -> &OperatorSpec<T> {
        &self.op
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn family(&self) -> KernelFamily {
        self.family
    }

    /// Base constant `A_0` (or `B_0`).
    pub fn scale(&self) -> T {
        self.scale
    }

    /// Recursive constant `A_m` (or `B_m`).
    pub fn coefficient(&self) -> T {
        self.coefficient
    }

    /// The kernel of order `m + 1` with the same base constant.
    pub fn raised(&self) -> Self {
        Self::with_scale(self.op, self.order + 1, self.family, self.scale).expect("validated scale")
    }

    /// The kernel of order `m − 1`, if any.
    pub fn lowered(&self) -> Option<Self> {
        self.order
            .checked_sub(1)
            .map(|m| Self::with_scale(self.op, m, self.family, self.scale).expect("validated scale"))
    }

    pub fn bessel_kind(&self) -> BesselKind {
        match (self.op.kind, self.family) {
            (OperatorKind::Helmholtz, KernelFamily::General) => BesselKind::J,
            (OperatorKind::Helmholtz, KernelFamily::Fundamental) => BesselKind::Y,
            (OperatorKind::ModifiedHelmholtz, KernelFamily::General) => BesselKind::I,
            (OperatorKind::ModifiedHelmholtz, KernelFamily::Fundamental) => BesselKind::K,
        }
    }

    /// `ν = n/2 − 1 + m`
    pub fn bessel_order(&self) -> Order {
        Order::from_twice(self.op.dim as u32 - 2 + 2 * self.order)
    }

    pub fn is_singular(&self) -> bool {
        self.family == KernelFamily::Fundamental
    }
}

/// Kernel value and radial derivatives at one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialDerivatives<T> {
    pub value: T,
    pub first: T,
    pub second: T,
    /// `g'(r) / r`, with its finite limit `g''(0)` at the origin.
    pub first_over_r: T,
}

/// `u_m^#(r)`
pub fn general_solution<T: Real>(ks: &KernelSpec<T>, r: T) -> Result<T> {
    if ks.family != KernelFamily::General {
        return Err(BkmError::InvalidParameter("expected a general-solution kernel".into()));
    }
    kernel_value(ks, r)
}

/// `u_m^*(r)`
pub fn fundamental_solution<T: Real>(ks: &KernelSpec<T>, r: T) -> Result<T> {
    if ks.family != KernelFamily::Fundamental {
        return Err(BkmError::InvalidParameter("expected a fundamental-solution kernel".into()));
    }
    kernel_value(ks, r)
}

/// Kernel value for either family.
pub fn kernel_value<T: Real>(ks: &KernelSpec<T>, r: T) -> Result<T> {
    check_radius(ks, r)?;
    let z = ks.op.param * r;
    let f0 = bessel_scaled(ks.bessel_kind(), ks.bessel_order(), z)?;
    Ok(ks.coefficient * z.powi(2 * ks.order as i32) * f0)
}

fn check_radius<T: Real>(ks: &KernelSpec<T>, r: T) -> Result<()> {
    if r.is_nan() || r < T::zero() {
        return Err(BkmError::Domain(format!("radius must be non-negative, got {r}")));
    }
    if r == T::zero() && ks.is_singular() {
        return Err(BkmError::Domain("fundamental solution is singular at r = 0".into()));
    }
    Ok(())
}

/// Closed-form `g`, `g'`, `g''` and `g'/r`.
pub fn radial_derivatives<T: Real>(ks: &KernelSpec<T>, r: T) -> Result<RadialDerivatives<T>> {
    check_radius(ks, r)?;
    let kind = ks.bessel_kind();
    let order = ks.bessel_order();
    let p = ks.op.param;
    let z = p * r;
    let f0 = bessel_scaled(kind, order, z)?;
    let f1 = bessel_scaled(kind, order.raised(1), z)?;
    let f2 = bessel_scaled(kind, order.raised(2), z)?;
    let s = T::lit(kind.lowering_sign() as f64);
    let m = ks.order as i32;
    let two_m = T::of_usize(2 * ks.order as usize);
    let z2m = z.powi(2 * m);

    // G(z) = z^2m F_ν, derivatives with respect to z
    let g = z2m * f0;
    let (g1, g1_over_z, g2) = if m == 0 {
        (s * z * f1, s * f1, s * f1 + z * z * f2)
    } else {
        let z2m1 = z.powi(2 * m - 1);
        let z2m2 = z.powi(2 * m - 2);
        (
            two_m * z2m1 * f0 + s * z2m * z * f1,
            two_m * z2m2 * f0 + s * z2m * f1,
            two_m * (two_m - T::one()) * z2m2 * f0
                + s * T::of_usize(4 * ks.order as usize + 1) * z2m * f1
                + z2m * z * z * f2,
        )
    };
    let a = ks.coefficient;
    Ok(RadialDerivatives {
        value: a * g,
        first: a * p * g1,
        second: a * p * p * g2,
        first_over_r: a * p * p * g1_over_z,
    })
}

/// Derivative of `g(‖x_field − x_src‖)` with respect to the source point
/// along `n_src`: `g'(r) · ((x_src − x_field)·n_src) / r`.
pub fn normal_derivative_source<T: Real>(
    ks: &KernelSpec<T>,
    x_field: &Point<T>,
    x_src: &Point<T>,
    n_src: &Point<T>,
) -> Result<T> {
    let d = *x_field - *x_src;
    let r = d.norm();
    if r == T::zero() && !ks.is_singular() {
        return Ok(T::zero());
    }
    let rd = radial_derivatives(ks, r)?;
    Ok(-rd.first_over_r * d.dot(n_src))
}

/// Derivative of `g(‖x_field − x_src‖)` with respect to the field point
/// along `n_field`: `g'(r) · ((x_field − x_src)·n_field) / r`.
pub fn normal_derivative_field<T: Real>(
    ks: &KernelSpec<T>,
    x_field: &Point<T>,
    n_field: &Point<T>,
    x_src: &Point<T>,
) -> Result<T> {
    let d = *x_field - *x_src;
    let r = d.norm();
    if r == T::zero() && !ks.is_singular() {
        return Ok(T::zero());
    }
    let rd = radial_derivatives(ks, r)?;
    Ok(rd.first_over_r * d.dot(n_field))
}

/// `n_fieldᵀ H n_src` where `H` differentiates `g(‖x_field − x_src‖)` once
/// in the field point and once in the source point.
pub fn mixed_normal_second_derivative<T: Real>(
    ks: &KernelSpec<T>,
    x_field: &Point<T>,
    n_field: &Point<T>,
    x_src: &Point<T>,
    n_src: &Point<T>,
) -> Result<T> {
    let d = *x_field - *x_src;
    let r = d.norm();
    let rd = radial_derivatives(ks, r)?;
    let nn = n_field.dot(n_src);
    if r == T::zero() {
        return Ok(-rd.first_over_r * nn);
    }
    let cf = d.dot(n_field) / r;
    let cs = d.dot(n_src) / r;
    Ok(-rd.second * cf * cs - rd.first_over_r * (nn - cf * cs))
}
