pub mod dd;
pub mod drm;
pub mod error;
pub mod geometry;
pub mod kernels;
pub mod linalg;
pub mod point;
pub mod qd;
pub mod scalar;
pub mod solver;
pub mod specfun;

pub use dd::DoubleDouble;
pub use drm::DrmExpansion;
pub use error::{BkmError, Result};
pub use geometry::{BcKind, BoundaryKnot, DomainSpec, KnotSet};
pub use kernels::{KernelFamily, KernelSpec, OperatorKind, OperatorSpec};
pub use linalg::{DenseMatrix, Lu};
pub use point::Point;
pub use qd::QuadDouble;
pub use scalar::Real;
pub use solver::{BkmSolution, DenseSystem, Scheme};

/// Double-double precision scalar.
pub type Dd = DoubleDouble;

/// Quad-double precision scalar.
pub type Qd = QuadDouble;
