//! The scalar-extension characterization of compatible involutions:
//! for S with S^2 = lambda id, membership in the (lambda, ell) class is
//! equivalent to b_k(Sx, Sy) = -lambda conj(b_k(x, y)) for all x, y.

use super::forms::bk_gram;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Quad};
use crate::extended::ExtendedSpace;
use crate::{RatMatrix, Sign};

/// Evaluates the identity entrywise over `Q[iota]` on all basis pairs.
/// Precondition (checked): S^2 = lambda id.
pub fn char_condition(
    s: &RatMatrix,
    lambda: Sign,
    ell: Sign,
    space: &ExtendedSpace,
) -> Result<bool> {
    let n = space.dim();
    if s.rows() != n || s.cols() != n {
        return Err(Error::DimensionMismatch(
            "structure matrix vs extended space".into(),
        ));
    }
    let k = -(lambda * ell);
    if space.k() != k {
        return Err(Error::DimensionMismatch(format!(
            "space built for k = {}, case requires k = {k}",
            space.k()
        )));
    }
    if &(s * s) != &RatMatrix::identity(n).scale(&lambda.rational()) {
        return Err(Error::NotInvolution);
    }
    let forms = bk_gram(space)?;
    // Gram of (x, y) -> b_k(Sx, Sy) is S^t * Gram * S over Q[iota].
    let s_quad = s.map(|v| Quad::new(v.clone(), crate::exactla::rat(0), k));
    let pushed = &(&s_quad.transpose() * &forms.gram) * &s_quad;
    let minus_lambda = (-lambda).rational();
    let expected = Matrix::from_fn(n, n, |r, c| forms.gram[(r, c)].conj().scale(&minus_lambda));
    Ok(pushed == expected)
}
