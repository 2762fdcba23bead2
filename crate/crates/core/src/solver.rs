//! Boundary knot collocation: assembly, solution and field evaluation.
//!
//! The homogeneous part `u_h` is expanded in the order-0 general solution
//! centred on the boundary knots. The unsymmetric scheme uses the kernel
//! itself for every column; the symmetric scheme replaces the columns of
//! Neumann knots with the kernel's source-normal derivative, which makes the
//! collocation matrix symmetric.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::drm::{particular_normal_derivative, particular_solution, DrmExpansion};
use crate::error::{BkmError, Result};
use crate::geometry::{check_distinct, BcKind, BoundaryKnot, KnotSet};
use crate::kernels::{
    kernel_value, mixed_normal_second_derivative, normal_derivative_field, normal_derivative_source, KernelFamily,
    KernelSpec,
};
use crate::linalg::{residual_inf, DenseMatrix, Lu};
use crate::point::Point;
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Scheme {
    #[serde(rename = "unsym", alias = "unsymmetric")]
    Unsymmetric,
    #[serde(rename = "sym", alias = "symmetric")]
    Symmetric,
}

impl Scheme {
    /// Short name used on the command line and in CSV output.
    pub fn short_name(self) -> &'static str {
        match self {
            Scheme::Unsymmetric => "unsym",
            Scheme::Symmetric => "sym",
        }
    }
}

impl FromStr for Scheme {
    type Err = BkmError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unsym" | "unsymmetric" => Ok(Scheme::Unsymmetric),
            "sym" | "symmetric" => Ok(Scheme::Symmetric),
            other => Err(BkmError::InvalidParameter(format!("unknown scheme `{other}`, expected unsym or sym"))),
        }
    }
}

/// Collocation matrix and right-hand side; rows and columns follow the
/// Dirichlet-then-Neumann order of the knot set.
#[derive(Clone, Debug)]
pub struct DenseSystem<T> {
    pub matrix: DenseMatrix<T>,
    pub rhs: Vec<T>,
    pub dirichlet_count: usize,
    pub neumann_count: usize,
}

#[derive(Clone, Debug)]
pub struct BkmSolution<T> {
    alpha: Vec<T>,
    scheme: Scheme,
    kernel: KernelSpec<T>,
    knots: Vec<BoundaryKnot<T>>,
    particular: Option<DrmExpansion<T>>,
    condition_estimate: T,
    residual: T,
}

fn check_kernel<T: Real>(kernel: &KernelSpec<T>) -> Result<()> {
    if kernel.family() != KernelFamily::General || kernel.order() != 0 {
        return Err(BkmError::InvalidParameter("collocation basis must be the order-0 general solution".into()));
    }
    Ok(())
}

fn check_knots<T: Real>(knots: &KnotSet<T>, kernel: &KernelSpec<T>) -> Result<()> {
    check_kernel(kernel)?;
    let boundary = knots.boundary();
    if boundary.is_empty() {
        return Err(BkmError::InvalidParameter("at least one boundary knot is required".into()));
    }
    let dim = kernel.op().dim();
    if let Some(k) = boundary.iter().find(|k| k.position.dim() != dim) {
        return Err(BkmError::DimensionMismatch { expected: dim, found: k.position.dim() });
    }
    check_distinct(boundary.iter().map(|k| &k.position))
}

fn boundary_rhs<T: Real>(knot: &BoundaryKnot<T>, particular: Option<&DrmExpansion<T>>) -> Result<T> {
    let correction = match (particular, knot.bc_kind) {
        (None, _) => T::zero(),
        (Some(e), BcKind::Dirichlet) => particular_solution(e, &knot.position)?,
        (Some(e), BcKind::Neumann) => particular_normal_derivative(e, &knot.position, &knot.normal)?,
    };
    Ok(knot.bc_value - correction)
}

fn assemble<T: Real>(
    knots: &KnotSet<T>,
    kernel: &KernelSpec<T>,
    particular: Option<&DrmExpansion<T>>,
    entry: impl Fn(&BoundaryKnot<T>, &BoundaryKnot<T>) -> Result<T> + Sync,
) -> Result<DenseSystem<T>> {
    check_knots(knots, kernel)?;
    let b = knots.boundary();
    let n = b.len();
    let matrix = DenseMatrix::try_from_fn_par(n, n, |i, j| entry(&b[i], &b[j]))?;
    let rhs = b.iter().map(|k| boundary_rhs(k, particular)).collect::<Result<Vec<T>>>()?;
    Ok(DenseSystem { matrix, rhs, dirichlet_count: knots.dirichlet_count(), neumann_count: knots.neumann_count() })
}

/// Every column is `u_0^#(‖x − x_k‖)`; Neumann rows take its normal
/// derivative at the response knot.
pub fn assemble_unsymmetric<T: Real>(
    knots: &KnotSet<T>,
    kernel: &KernelSpec<T>,
    particular: Option<&DrmExpansion<T>>,
) -> Result<DenseSystem<T>> {
    assemble(knots, kernel, particular, |row, col| match row.bc_kind {
        BcKind::Dirichlet => kernel_value(kernel, row.position.distance(&col.position)),
        BcKind::Neumann => normal_derivative_field(kernel, &row.position, &row.normal, &col.position),
    })
}

/// Dirichlet columns are `u_0^#`, Neumann columns its derivative along the
/// source normal; Neumann rows differentiate along the response normal.
pub fn assemble_symmetric<T: Real>(
    knots: &KnotSet<T>,
    kernel: &KernelSpec<T>,
    particular: Option<&DrmExpansion<T>>,
) -> Result<DenseSystem<T>> {
    assemble(knots, kernel, particular, |row, col| symmetric_entry(kernel, row, col))
}

fn symmetric_entry<T: Real>(kernel: &KernelSpec<T>, row: &BoundaryKnot<T>, col: &BoundaryKnot<T>) -> Result<T> {
    match (row.bc_kind, col.bc_kind) {
        (BcKind::Dirichlet, BcKind::Dirichlet) => kernel_value(kernel, row.position.distance(&col.position)),
        (BcKind::Dirichlet, BcKind::Neumann) => normal_derivative_source(kernel, &row.position, &col.position, &col.normal),
        (BcKind::Neumann, BcKind::Dirichlet) => normal_derivative_field(kernel, &row.position, &row.normal, &col.position),
        (BcKind::Neumann, BcKind::Neumann) => {
            mixed_normal_second_derivative(kernel, &row.position, &row.normal, &col.position, &col.normal)
        }
    }
}

/// Solves by LU with partial pivoting; returns the coefficients and a
/// 1-norm condition estimate.
pub fn solve<T: Real>(sys: &DenseSystem<T>) -> Result<(Vec<T>, T)> {
    let lu = Lu::factor(&sys.matrix)?;
    let alpha = lu.solve(&sys.rhs)?;
    Ok((alpha, lu.condition_estimate()))
}

/// Assembles the chosen scheme, solves it and packages the result.
pub fn solve_bkm<T: Real>(
    knots: &KnotSet<T>,
    kernel: &KernelSpec<T>,
    particular: Option<DrmExpansion<T>>,
    scheme: Scheme,
) -> Result<BkmSolution<T>> {
    let sys = match scheme {
        Scheme::Unsymmetric => assemble_unsymmetric(knots, kernel, particular.as_ref())?,
        Scheme::Symmetric => assemble_symmetric(knots, kernel, particular.as_ref())?,
    };
    let (alpha, condition_estimate) = solve(&sys)?;
    let residual = residual_inf(&sys.matrix, &alpha, &sys.rhs)?;
    Ok(BkmSolution {
        alpha,
        scheme,
        kernel: *kernel,
        knots: knots.boundary().to_vec(),
        particular,
        condition_estimate,
        residual,
    })
}

impl<T: Real> BkmSolution<T> {
    /// Builds a solution from given coefficients, e.g. for testing.
    pub fn from_coefficients(
        alpha: Vec<T>,
        scheme: Scheme,
        kernel: &KernelSpec<T>,
        knots: &KnotSet<T>,
        particular: Option<DrmExpansion<T>>,
    ) -> Result<Self> {
        check_kernel(kernel)?;
        if alpha.len() != knots.boundary().len() {
            return Err(BkmError::DimensionMismatch { expected: knots.boundary().len(), found: alpha.len() });
        }
        Ok(BkmSolution {
            alpha,
            scheme,
            kernel: *kernel,
            knots: knots.boundary().to_vec(),
            particular,
            condition_estimate: T::nan(),
            residual: T::nan(),
        })
    }

    pub fn alpha(&self) -> &[T] {
        &self.alpha
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn kernel(&self) -> &KernelSpec<T> {
        &self.kernel
    }

    pub fn knots(&self) -> &[BoundaryKnot<T>] {
        &self.knots
    }

    pub fn particular(&self) -> Option<&DrmExpansion<T>> {
        self.particular.as_ref()
    }

    pub fn condition_estimate(&self) -> T {
        self.condition_estimate
    }

    /// `‖A·α − b‖_∞` of the collocation system.
    pub fn residual(&self) -> T {
        self.residual
    }

    fn uses_derivative_basis(&self, knot: &BoundaryKnot<T>) -> bool {
        self.scheme == Scheme::Symmetric && knot.bc_kind == BcKind::Neumann
    }

    /// `u_h(x)`
    pub fn homogeneous(&self, x: &Point<T>) -> Result<T> {
        let mut total = T::zero();
        for (a, k) in self.alpha.iter().zip(&self.knots) {
            let basis = if self.uses_derivative_basis(k) {
                normal_derivative_source(&self.kernel, x, &k.position, &k.normal)?
            } else {
                kernel_value(&self.kernel, x.distance(&k.position))?
            };
            total = total + *a * basis;
        }
        Ok(total)
    }

    /// `∂u_h/∂n` at `x`.
    pub fn homogeneous_normal_derivative(&self, x: &Point<T>, n: &Point<T>) -> Result<T> {
        let mut total = T::zero();
        for (a, k) in self.alpha.iter().zip(&self.knots) {
            let basis = if self.uses_derivative_basis(k) {
                mixed_normal_second_derivative(&self.kernel, x, n, &k.position, &k.normal)?
            } else {
                normal_derivative_field(&self.kernel, x, n, &k.position)?
            };
            total = total + *a * basis;
        }
        Ok(total)
    }
}

/// `u(x) = u_h(x) + u_p(x)`.
pub fn evaluate<T: Real>(sol: &BkmSolution<T>, x: &Point<T>) -> Result<T> {
    let particular = match &sol.particular {
        Some(e) => particular_solution(e, x)?,
        None => T::zero(),
    };
    Ok(sol.homogeneous(x)? + particular)
}

/// `∂u/∂n` at `x`.
pub fn evaluate_normal_derivative<T: Real>(sol: &BkmSolution<T>, x: &Point<T>, n: &Point<T>) -> Result<T> {
    let particular = match &sol.particular {
        Some(e) => particular_normal_derivative(e, x, n)?,
        None => T::zero(),
    };
    Ok(sol.homogeneous_normal_derivative(x, n)? + particular)
}
