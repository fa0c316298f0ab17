//! Pseudo-Riemannian metrics as exact symmetric Gram matrices.

use crate::error::{Error, Result};
use crate::exactla::{congruent_gram, invert, signature_of_symmetric, Signature};
use crate::RatMatrix;

/// A nondegenerate symmetric bilinear form on g, together with its inverse
/// (the induced form on g*) and its signature.
#[derive(Debug, Clone, PartialEq)]
pub struct PseudoMetric {
    gram: RatMatrix,
    inv: RatMatrix,
    signature: Signature,
}

impl PseudoMetric {
    pub fn new(gram: RatMatrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::InvalidMetric("Gram matrix is not symmetric".into()));
        }
        let signature = signature_of_symmetric(&gram)?;
        if !signature.is_nondegenerate() {
            return Err(Error::InvalidMetric(format!(
                "Gram matrix is degenerate, signature {signature}"
            )));
        }
        let inv =
            invert(&gram).map_err(|_| Error::InvalidMetric("Gram matrix is singular".into()))?;
        Ok(PseudoMetric {
            gram,
            inv,
            signature,
        })
    }

    /// Metric whose Gram matrix is `c` with respect to the basis whose
    /// coordinate columns form `p`; stored in the standard basis.
    pub fn from_basis(c: RatMatrix, p: RatMatrix) -> Result<Self> {
        PseudoMetric::new(congruent_gram(&c, &p)?)
    }

    /// Standard diagonal metric of signature (p, q).
    pub fn standard(p: usize, q: usize) -> Self {
        let diag: Vec<_> = (0..p + q)
            .map(|i| {
                if i < p {
                    crate::exactla::rat(1)
                } else {
                    crate::exactla::rat(-1)
                }
            })
            .collect();
        PseudoMetric::new(RatMatrix::diagonal(diag)).expect("diagonal +/-1 metric is valid")
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn inverse_gram(&self) -> &RatMatrix {
        &self.inv
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    /// (p, q) = (positive, negative) counts.
    pub fn pq(&self) -> (usize, usize) {
        (self.signature.positive, self.signature.negative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, Matrix};

    #[test]
    fn rejects_degenerate_and_asymmetric() {
        let deg = Matrix::from_rows(vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]]);
        assert!(matches!(
            PseudoMetric::new(deg),
            Err(Error::InvalidMetric(_))
        ));
        let asym = Matrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(0), rat(1)]]);
        assert!(matches!(
            PseudoMetric::new(asym),
            Err(Error::InvalidMetric(_))
        ));
    }

    #[test]
    fn standard_signature() {
        let g = PseudoMetric::standard(2, 3);
        assert_eq!(g.pq(), (2, 3));
        assert_eq!(g.dim(), 5);
    }
}
