//! Sparse linear regression on random supports, for arbitrary design
//! matrices.
//!
//! The crate is organized as a two-phase solver plus supporting machinery:
//!
//! * [`model`] — shared domain types (design matrices, supports,
//!   preconditioners, noise models) and elementary basis-change operations.
//! * [`subproblems`] — exact solvers for the small convex programs the
//!   pipeline relies on: per-coordinate max-coefficient programs, the
//!   k-sparse condition number by enumeration, and the two projections used
//!   by the constrained least-squares solver.
//! * [`precondition`] — the preconditioner search (row-rewriting improvement
//!   rounds with explicit incremental inverse maintenance) and a Monte Carlo
//!   verifier for the preconditioner contract.
//! * [`regression`] — the partially-l1-constrained least-squares solver and
//!   the fixed-design / Gaussian-design pipelines plus reference baselines.
//! * [`instances`] — synthetic instance generators (block-correlated
//!   covariances, duplicated-column designs, Gaussian designs) and bundle
//!   I/O.
//!
//! All numeric code is generic over the scalar type through
//! [`scalar::Scalar`]; `f64` is the intended precision and the one the
//! default tolerances are calibrated for.

pub mod error;
pub mod instances;
pub mod matrix_io;
pub mod model;
pub mod precondition;
pub mod regression;
pub mod scalar;
pub mod subproblems;

pub use error::SlrError;
pub use scalar::Scalar;

/// Concrete `f64` aliases for the main domain types.
pub type DesignMatrix64 = model::DesignMatrix<f64>;
pub type Preconditioner64 = model::Preconditioner<f64>;
pub type SlrInstance64 = model::SlrInstance<f64>;
pub type RegressionResult64 = regression::RegressionResult<f64>;
pub type SubproblemResult64 = subproblems::SubproblemResult<f64>;

/// Shared numeric tolerances, overridable where operations accept them.
pub mod tolerances {
    /// Relative rank tolerance: eigenvalues below `RANK_REL * lambda_max`
    /// are treated as zero.
    pub const RANK_REL: f64 = 1e-10;
    /// Absolute rank floor, scaled by the row count where applicable.
    pub const RANK_ABS_PER_ROW: f64 = 1e-14;
    /// Default tolerance for equality checks between matrices/vectors.
    pub const EQUALITY: f64 = 1e-8;
    /// Default iterative solver stopping tolerance.
    pub const SOLVER: f64 = 1e-9;
    /// Pivots smaller than this are treated as degenerate.
    pub const PIVOT_FLOOR: f64 = 1e-300;
}
