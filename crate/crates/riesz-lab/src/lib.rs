//! Riesz, inverse-Riesz and beta-Riesz matrix-variate distributions over
//! the real normed division algebras (beta = 1, 2, 4, with scalar-only
//! support at beta = 8), together with the log-domain special functions of
//! weight kappa that normalize them, exact Bartlett-decomposition samplers,
//! joint eigenvalue densities, and a brute-force verification harness.
//!
//! Module map:
//!
//! * [`division_algebra`] — scalars/matrices over R, C, H (and scalar-only
//!   octonions), Cholesky, determinants, minors, spectra.
//! * [`specfun`] — weighted gamma/beta functions, generalized Pochhammer,
//!   highest weight vector, Stiefel volumes; everything in log space.
//! * [`riesz`] — Riesz type I/II and inverse-Riesz densities, Bartlett
//!   samplers, generalized variance.
//! * [`beta_riesz`] — the four beta-Riesz densities (c/k family, type I/II)
//!   and their pairwise-construction samplers.
//! * [`spectral`] — joint eigenvalue densities and sampler bridges.
//! * [`verify`] — quadrature, goodness-of-fit statistics, and the registered
//!   normalization/identity check suites.
//! * [`json`] — the matrix interchange format used by the CLI and fixtures.
//!
//! Everything is deterministic given a seeded RNG; samplers accept any
//! `rand::Rng` and the verification suites derive their own ChaCha streams
//! from an explicit seed.

// Domain checks are written `!(x > bound)` on purpose: the negation also
// rejects NaN inputs, which a rewritten `x <= bound` would let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod beta_riesz;
pub mod division_algebra;
pub mod error;
pub mod json;
pub mod riesz;
pub mod specfun;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
