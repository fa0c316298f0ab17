//! Exact linear algebra over Q and over the quadratic extensions `Q[iota]`,
//! `iota^2 = kappa`: matrices, row reduction, kernels, congruence
//! diagonalization and signatures. No floating point anywhere.

mod matrix;
mod quad;
mod rref;
mod scalar;
mod signature;

pub use matrix::Matrix;
pub use quad::{quad_arith, Quad, QuadOp};
pub use rref::{in_span, invert, rank, rref, rref_kernel, Rref};
pub use scalar::{
    frac, parse_rational, rat, rational_sign, rational_to_string, Rational, Scalar, Sign,
};
pub use signature::{congruent_gram, signature_of_symmetric, Signature};
