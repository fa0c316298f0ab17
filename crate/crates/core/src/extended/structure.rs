//! Generalized (para)complex structures on the extended space and the
//! algebraic axiom checks.

use num_traits::Zero;

use super::space::ExtendedSpace;
use crate::error::{Error, Result};
use crate::exactla::Sign;
use crate::report::{witness_of, Check, Report};
use crate::RatMatrix;

/// A candidate integrable (lambda, ell)-structure: a rational 2m x 2m
/// operator on E = g + g*. The parameters fix k = -lambda * ell and hence
/// which operator I_k the structure must anti-commute with.
#[derive(Debug, Clone, PartialEq)]
pub struct GenStructure {
    pub matrix: RatMatrix,
    pub lambda: Sign,
    pub ell: Sign,
}

impl GenStructure {
    pub fn new(matrix: RatMatrix, lambda: Sign, ell: Sign) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() % 2 != 0 {
            return Err(Error::DimensionMismatch(
                "structure matrix must be square of even dimension".into(),
            ));
        }
        Ok(GenStructure {
            matrix,
            lambda,
            ell,
        })
    }

    pub fn k(&self) -> Sign {
        -(self.lambda * self.ell)
    }

    /// m, half the matrix dimension.
    pub fn m(&self) -> usize {
        self.matrix.rows() / 2
    }

    /// The four algebraic membership checks, each with a witness on failure:
    /// (i) S^2 = lambda id, (ii) tr S = 0, (iii) S^t B + B S = 0,
    /// (iv) S I_k + I_k S = 0.
    pub fn verify_algebraic(&self, space: &ExtendedSpace) -> Result<AlgebraicReport> {
        if space.dim() != self.matrix.rows() {
            return Err(Error::DimensionMismatch(format!(
                "structure is {} x {} but the extended space has dimension {}",
                self.matrix.rows(),
                self.matrix.cols(),
                space.dim()
            )));
        }
        if space.k() != self.k() {
            return Err(Error::DimensionMismatch(format!(
                "space built for k = {} but structure has k = {}",
                space.k(),
                self.k()
            )));
        }
        let s = &self.matrix;
        let n = space.dim();
        let b = space.bgram();
        let ik = space.ik();

        let square_residual = &(s * s) - &RatMatrix::identity(n).scale(&self.lambda.rational());
        let trace = s.trace();
        let skew_residual = &(&s.transpose() * b) + &(b * s);
        let anti_residual = &(s * ik) + &(ik * s);

        Ok(AlgebraicReport {
            square: CheckOutcome::from_residual("S^2 = lambda id", square_residual),
            trace: CheckOutcome {
                name: "tr S = 0 (split)".into(),
                pass: trace.is_zero(),
                residual: if trace.is_zero() {
                    None
                } else {
                    Some(RatMatrix::from_rows(vec![vec![trace]]))
                },
            },
            b_skew: CheckOutcome::from_residual("S^t B + B S = 0 (b-skew)", skew_residual),
            anticommute: CheckOutcome::from_residual("S I_k + I_k S = 0", anti_residual),
        })
    }
}

/// A single named pass/fail with the nonzero residual as witness.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub residual: Option<RatMatrix>,
}

impl CheckOutcome {
    fn from_residual(name: &str, residual: RatMatrix) -> Self {
        let pass = residual.is_zero_matrix();
        CheckOutcome {
            name: name.into(),
            pass,
            residual: if pass { None } else { Some(residual) },
        }
    }

    pub fn to_check(&self) -> Check {
        Check {
            name: self.name.clone(),
            pass: self.pass,
            witness: self.residual.as_ref().map(witness_of),
            note: None,
        }
    }
}

/// Outcome of the four axiom checks.
#[derive(Debug, Clone)]
pub struct AlgebraicReport {
    pub square: CheckOutcome,
    pub trace: CheckOutcome,
    pub b_skew: CheckOutcome,
    pub anticommute: CheckOutcome,
}

impl AlgebraicReport {
    pub fn passed(&self) -> bool {
        self.square.pass && self.trace.pass && self.b_skew.pass && self.anticommute.pass
    }

    pub fn outcomes(&self) -> [&CheckOutcome; 4] {
        [&self.square, &self.trace, &self.b_skew, &self.anticommute]
    }

    pub fn to_report(&self, title: &str) -> Report {
        let mut report = Report::new(title);
        for c in self.outcomes() {
            report.checks.push(c.to_check());
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::extended::metric::PseudoMetric;

    #[test]
    fn block_diagonal_reflection_passes() {
        // r = diag(1,-1) on the Euclidean plane, (lambda, ell) = (1, 1)
        let space = ExtendedSpace::new(PseudoMetric::standard(2, 0), Sign::Minus);
        let s = RatMatrix::diagonal(vec![rat(1), rat(-1), rat(-1), rat(1)]);
        let st = GenStructure::new(s, Sign::Plus, Sign::Plus).unwrap();
        assert!(st.verify_algebraic(&space).unwrap().passed());
    }

    #[test]
    fn identity_fails_with_witnesses() {
        let space = ExtendedSpace::new(PseudoMetric::standard(2, 0), Sign::Plus);
        let st = GenStructure::new(RatMatrix::identity(4), Sign::Minus, Sign::Plus).unwrap();
        let report = st.verify_algebraic(&space).unwrap();
        assert!(!report.passed());
        assert!(!report.square.pass); // id^2 != -id
        assert!(!report.trace.pass);
        assert!(!report.b_skew.pass);
        assert!(report.square.residual.is_some());
    }

    #[test]
    fn k_mismatch_is_an_error() {
        // (lambda, ell) = (-1, 1) has k = +1; a space built with k = -1 must be rejected
        let space = ExtendedSpace::new(PseudoMetric::standard(2, 0), Sign::Minus);
        let st = GenStructure::new(RatMatrix::identity(4), Sign::Minus, Sign::Plus).unwrap();
        assert!(st.verify_algebraic(&space).is_err());
    }
}
