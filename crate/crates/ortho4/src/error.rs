//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The gamma arguments cannot be paired up with integer offsets.
    #[error("gamma ratio does not reduce to a rational: {0}")]
    UnreducibleRatio(String),

    /// A gamma factor was requested at a non-positive integer.
    #[error("gamma pole at non-positive integer argument {0}")]
    PoleInGamma(String),

    /// The leading factor 2j + mu - 1 vanishes, so the inductive
    /// construction in ell cannot be solved at this step.
    #[error("degenerate leading factor 2j+mu-1 = 0 at j = {j}, mu = {mu}")]
    DegenerateLeadingFactor { j: u32, mu: String },

    /// A floating-point kernel was called outside its supported range.
    #[error("argument outside supported domain: {0}")]
    DomainError(String),

    /// Doubling the panel count moved the quadrature result by more than
    /// the configured relative target.
    #[error("quadrature failed to converge: {0}")]
    ConvergenceFailure(String),

    /// Negative powers of x survived where the integral representation
    /// guarantees they cancel; signals an implementation error.
    #[error("negative powers of x fail to cancel: {0}")]
    NonPolynomialResidue(String),
}

pub type Result<T> = std::result::Result<T, Error>;
