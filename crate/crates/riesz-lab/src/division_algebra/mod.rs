//! Scalars and dense matrices over the real normed division algebras.
//!
//! The four algebras are indexed by their real dimension `beta`:
//!
//! | beta | algebra     | matrix support            |
//! |------|-------------|---------------------------|
//! | 1    | reals       | full                      |
//! | 2    | complexes   | full                      |
//! | 4    | quaternions | full (via associativity)  |
//! | 8    | octonions   | scalars only              |
//!
//! Octonion multiplication is non-associative, so every matrix-valued
//! operation (`matmul`, Cholesky, determinants, inverses, eigenvalues)
//! rejects `beta = 8` with [`Error::OctonionMatrixOp`]. Scalar arithmetic
//! works for all four algebras through the Cayley–Dickson construction.
//!
//! All types are immutable after construction and all operations are pure
//! functions, so values can be shared freely across threads.

mod eigen;
mod matrix;
mod scalar;

pub use eigen::eigen_decomposition_hermitian;
pub use matrix::{
    log_jacobian_cholesky_gram, log_jacobian_congruence, log_jacobian_inversion, DivisionMatrix,
    HermitianPD, UpperTriangularPosDiag,
};
pub use scalar::{AlgebraTag, DivisionScalar};
