//! The signature invariant of (1,1)-structures via the symmetric form
//! beta_S(x, y) = b(S I_-1 x, y).

use crate::error::{Error, Result};
use crate::exactla::{signature_of_symmetric, Sign, Signature};
use crate::extended::{ExtendedSpace, GenStructure};
use crate::RatMatrix;

#[derive(Debug, Clone)]
pub struct BetaSignature {
    /// Gram of beta_S (symmetric; symmetry is asserted, being a consequence
    /// of S b-skew, I_-1 b-symmetric, and the anti-commutation).
    pub gram: RatMatrix,
    pub signature: Signature,
    /// The invariant n: half the time-like index of beta_S, so that the
    /// inertia has the shape (2m - 2n, 2n, 0). With this counting a product
    /// structure R gives n = p+ + q- (the space-like index of D(1) plus the
    /// time-like index of D(-1)) and a symplectic Q gives n = m/2.
    pub n: usize,
}

/// Computes beta_S and certifies the (2n, 2m-2n, 0) shape; the structure
/// must be a verified (1,1)-structure on a space with k = -1.
pub fn beta_signature(structure: &GenStructure, space: &ExtendedSpace) -> Result<BetaSignature> {
    if (structure.lambda, structure.ell) != (Sign::Plus, Sign::Plus) {
        return Err(Error::RequiresOneOne(structure.lambda, structure.ell));
    }
    let report = structure.verify_algebraic(space)?;
    if !report.passed() {
        return Err(Error::InvariantViolation(
            "beta is defined only for structures passing the algebraic checks".into(),
        ));
    }
    // beta(x, y) = b(S I_-1 x, y); as a Gram matrix (B S I_-1)^t, which must
    // equal B S I_-1 itself.
    let gram = &(space.bgram() * &structure.matrix) * space.ik();
    if !gram.is_symmetric() {
        return Err(Error::InvariantViolation(
            "beta_S failed to be symmetric".into(),
        ));
    }
    let signature = signature_of_symmetric(&gram)?;
    let m = space.m();
    if signature.zero != 0
        || signature.negative % 2 != 0
        || signature.positive + signature.negative != 2 * m
    {
        return Err(Error::InvariantViolation(format!(
            "beta_S signature {signature} is not of shape (2m-2n, 2n, 0)"
        )));
    }
    Ok(BetaSignature {
        gram,
        signature,
        n: signature.negative / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::extended::{build_extremal, ExtremalKind, PseudoMetric};

    #[test]
    fn reflection_signature_counts_mixed_eigenmetrics() {
        // r = diag(1,-1) on the Euclidean plane: the +1 eigenspace carries
        // signature (1,0), the -1 eigenspace (1,0); n = p+ + q- = 1.
        let metric = PseudoMetric::standard(2, 0);
        let r = build_extremal(
            ExtremalKind::Product,
            &RatMatrix::diagonal(vec![rat(1), rat(-1)]),
            Sign::Plus,
            Sign::Plus,
            &metric,
        )
        .unwrap();
        let space = ExtendedSpace::new(metric, Sign::Minus);
        let beta = beta_signature(&r, &space).unwrap();
        assert_eq!(
            beta.signature,
            Signature {
                positive: 2,
                negative: 2,
                zero: 0
            }
        );
        assert_eq!(beta.n, 1);
    }

    #[test]
    fn reflection_signature_on_mixed_metric() {
        // r = diag(1,1,-1,-1), G = diag(1,-1,1,-1): n = p+ + q- = 1 + 1 = 2.
        let metric =
            PseudoMetric::new(RatMatrix::diagonal(vec![rat(1), rat(-1), rat(1), rat(-1)])).unwrap();
        let r = build_extremal(
            ExtremalKind::Product,
            &RatMatrix::diagonal(vec![rat(1), rat(1), rat(-1), rat(-1)]),
            Sign::Plus,
            Sign::Plus,
            &metric,
        )
        .unwrap();
        let space = ExtendedSpace::new(metric, Sign::Minus);
        let beta = beta_signature(&r, &space).unwrap();
        assert_eq!(beta.n, 2);
        assert_eq!(
            beta.signature,
            Signature {
                positive: 4,
                negative: 4,
                zero: 0
            }
        );
    }

    #[test]
    fn symplectic_structure_has_half_signature() {
        // Para-Kahler omega on the split plane: n = m/2 = 1.
        let metric = PseudoMetric::standard(1, 1);
        let omega = RatMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]]);
        let q = build_extremal(
            ExtremalKind::Symplectic,
            &omega,
            Sign::Plus,
            Sign::Plus,
            &metric,
        )
        .unwrap();
        let space = ExtendedSpace::new(metric, Sign::Minus);
        let beta = beta_signature(&q, &space).unwrap();
        assert_eq!(beta.n, 1);
    }

    #[test]
    fn eigenspace_orthogonality_of_s_times_i() {
        // (S I_-1)^2 = id and b vanishes on D(1) x D(-1).
        let metric = PseudoMetric::standard(2, 0);
        let r = build_extremal(
            ExtremalKind::Product,
            &RatMatrix::diagonal(vec![rat(1), rat(-1)]),
            Sign::Plus,
            Sign::Plus,
            &metric,
        )
        .unwrap();
        let space = ExtendedSpace::new(metric, Sign::Minus);
        let si = &r.matrix * space.ik();
        assert_eq!(&si * &si, RatMatrix::identity(4));
        for delta in [rat(1), rat(-1)] {
            let shifted = &si - &RatMatrix::identity(4).scale(&delta);
            let (_, basis) = crate::exactla::rref_kernel(&shifted).unwrap();
            assert_eq!(basis.len(), 2);
        }
        let (_, plus) = crate::exactla::rref_kernel(&(&si - &RatMatrix::identity(4))).unwrap();
        let (_, minus) = crate::exactla::rref_kernel(&(&si + &RatMatrix::identity(4))).unwrap();
        for u in &plus {
            for v in &minus {
                assert_eq!(space.b(u, v), rat(0));
            }
        }
    }

    #[test]
    fn non_one_one_rejected() {
        let metric = PseudoMetric::standard(2, 0);
        let omega = RatMatrix::from_rows(vec![vec![rat(0), rat(-1)], vec![rat(1), rat(0)]]);
        let q = build_extremal(
            ExtremalKind::Symplectic,
            &omega,
            Sign::Plus,
            Sign::Minus,
            &metric,
        )
        .unwrap();
        let space = ExtendedSpace::new(metric, Sign::Plus);
        assert!(matches!(
            beta_signature(&q, &space),
            Err(Error::RequiresOneOne(Sign::Plus, Sign::Minus))
        ));
    }
}
