//! Exact-arithmetic verification and construction of generalized complex and
//! paracomplex structures compatible with a pseudo-Riemannian metric on a
//! finite-dimensional Lie algebra.
//!
//! Everything is computed over the rationals (or the quadratic extensions
//! `Q[i]` and the rational Lorentz numbers), so every verified identity is an
//! exact algebraic fact, not an approximation. The main objects:
//!
//! - [`liealg::LieAlgebra`]: structure constants, Jacobi verification, and
//!   the cotangent algebra g x_ad* g* whose Lie bracket realizes the Courant
//!   bracket of left-invariant sections.
//! - [`extended::ExtendedSpace`]: the split pairing b on g + g* and the
//!   canonical (para)complex operator I_k built from a metric.
//! - [`extended::GenStructure`]: 2m x 2m operators S with S^2 = lambda id,
//!   b-skew, anti-commuting with I_k; classical (A, B)-decomposition,
//!   extremal product/symplectic forms, Nijenhuis integrability and the
//!   Weierstrass-parameterized interpolation curve between extremals.
//! - [`twistor`]: the beta-form signature invariant, the C- and
//!   Lorentz-valued forms b_k, characterization of compatibility, model
//!   points and linearized fiber-dimension checks.
//! - [`catalog`]: built-in verified examples (five 6-dimensional nilpotent
//!   algebras and a 4-dimensional solvable one) reproducible from the CLI.

pub mod catalog;
pub mod error;
pub mod exactla;
pub mod extended;
pub mod io;
pub mod liealg;
pub mod random;
pub mod report;
pub mod twistor;

pub use error::{Error, Result};
pub use exactla::{Quad, Rational, Sign};

/// Matrices over the exact rationals.
pub type RatMatrix = exactla::Matrix<Rational>;
/// Matrices over a quadratic extension of Q (Gaussian or Lorentz entries).
pub type QuadMatrix = exactla::Matrix<Quad>;
