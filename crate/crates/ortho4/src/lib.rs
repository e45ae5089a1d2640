//! Exact construction and mechanical verification of a two-parameter family
//! of orthogonal polynomials attached to a fourth-order differential
//! operator.
//!
//! The family `m_polynomial(j, ell, mu)` generalizes the Laguerre
//! polynomials (recovered at `ell = 0`): its members have degree `j + ell`,
//! are eigenfunctions of a fourth-order operator in the Euler variable
//! `theta = x d/dx`, and are orthogonal on the half-line against the weight
//! `x^(mu - 2 ell) e^(-x)`. Everything the crate asserts about them is
//! checked in exact rational arithmetic wherever the statement is algebraic,
//! and by convergence-gated quadrature for the two genuinely analytic
//! statements (the integral representation and the Hankel-transform
//! reproducing identity).
//!
//! Modules:
//! - [`exact`]: rational scalars, Pochhammer symbols, gamma-ratio reduction.
//! - [`poly`]: dense polynomials and sparse Laurent polynomials.
//! - [`mpoly`]: the polynomial family, closed forms, recurrence checks.
//! - [`ortho`]: moment functional, inner products, Gram matrices, norms.
//! - [`diffop`]: normal-ordered operator algebra in `(x, theta)`.
//! - [`genfun`]: truncated power series and the generating-function oracle.
//! - [`numint`]: float gamma, Bessel series, quadrature-based checks.
//! - [`report`]: structured verification reports shared by library and CLI.

pub mod diffop;
pub mod error;
pub mod exact;
pub mod genfun;
pub mod mpoly;
pub mod numint;
pub mod ortho;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
pub use exact::Rational;
pub use mpoly::MPolyKey;
pub use poly::{LaurentPolynomial, Polynomial};
