//! Classical block decomposition of a verified structure:
//! S = [[A, lambda ell B G^-1], [G B, -A^t]] with
//! lambda A^2 + ell B^2 = id, AB = BA, G A = A^t G.

use super::metric::PseudoMetric;
use super::space::ExtendedSpace;
use super::structure::GenStructure;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Sign};
use crate::RatMatrix;

/// The endomorphism pair (A, B) of a structure in classical terms. The
/// associated two-form and bivector are theta_flat = G B (skew) and
/// pi_sharp = lambda ell B G^-1 (skew).
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalForm {
    pub a: RatMatrix,
    pub b: RatMatrix,
}

impl ClassicalForm {
    pub fn new(a: RatMatrix, b: RatMatrix) -> Result<Self> {
        if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
            return Err(Error::DimensionMismatch(
                "A and B must be square of equal size".into(),
            ));
        }
        Ok(ClassicalForm { a, b })
    }

    pub fn theta_flat(&self, metric: &PseudoMetric) -> RatMatrix {
        metric.gram() * &self.b
    }

    pub fn pi_sharp(&self, lambda: Sign, ell: Sign, metric: &PseudoMetric) -> RatMatrix {
        (&self.b * metric.inverse_gram()).scale(&(lambda * ell).rational())
    }

    /// The three endomorphism identities plus skewness of theta and pi;
    /// names the first violated identity.
    pub fn validate(&self, lambda: Sign, ell: Sign, metric: &PseudoMetric) -> Result<()> {
        let m = self.a.rows();
        if metric.dim() != m {
            return Err(Error::DimensionMismatch("metric dimension".into()));
        }
        let g = metric.gram();
        let combo = &(&self.a * &self.a).scale(&lambda.rational())
            + &(&self.b * &self.b).scale(&ell.rational());
        if combo != RatMatrix::identity(m) {
            return Err(Error::ClassicalInvariant(
                "lambda A^2 + ell B^2 = id".into(),
            ));
        }
        if &self.a * &self.b != &self.b * &self.a {
            return Err(Error::ClassicalInvariant("AB = BA".into()));
        }
        if g * &self.a != &self.a.transpose() * g {
            return Err(Error::ClassicalInvariant("G A = A^t G".into()));
        }
        if !self.theta_flat(metric).is_skew() {
            return Err(Error::ClassicalInvariant("theta_flat = G B skew".into()));
        }
        if !self.pi_sharp(lambda, ell, metric).is_skew() {
            return Err(Error::ClassicalInvariant(
                "pi_sharp = lambda ell B G^-1 skew".into(),
            ));
        }
        Ok(())
    }
}

/// Splits a verified structure into blocks and certifies the block shape:
/// lower-right = -A^t and upper-right = lambda ell B G^-1.
pub fn to_classical(structure: &GenStructure, metric: &PseudoMetric) -> Result<ClassicalForm> {
    let m = structure.m();
    if metric.dim() != m {
        return Err(Error::DimensionMismatch("metric dimension".into()));
    }
    let s = &structure.matrix;
    let a = s.block(0, 0, m, m);
    let lower_left = s.block(m, 0, m, m);
    let upper_right = s.block(0, m, m, m);
    let lower_right = s.block(m, m, m, m);

    let b = metric.inverse_gram() * &lower_left;
    if lower_right != a.transpose().scale(&crate::exactla::rat(-1)) {
        return Err(Error::BlockMismatch("lower-right block is not -A^t".into()));
    }
    let expected_ur =
        (&b * metric.inverse_gram()).scale(&(structure.lambda * structure.ell).rational());
    if upper_right != expected_ur {
        return Err(Error::BlockMismatch(
            "upper-right block is not lambda ell B G^-1".into(),
        ));
    }
    let cf = ClassicalForm::new(a, b)?;
    cf.validate(structure.lambda, structure.ell, metric)?;
    Ok(cf)
}

/// The block matrix [[A, lambda ell B G^-1], [G B, -A^t]] of a classical
/// pair, with no validation beyond shapes. Callers that need a certified
/// structure go through [`from_classical`]; the file loader assembles
/// mechanically so that invalid data fails the axiom checks rather than
/// being rejected up front.
pub fn assemble_classical(
    cf: &ClassicalForm,
    lambda: Sign,
    ell: Sign,
    metric: &PseudoMetric,
) -> Result<GenStructure> {
    if metric.dim() != cf.a.rows() {
        return Err(Error::DimensionMismatch("metric vs classical pair".into()));
    }
    let upper_right = (&cf.b * metric.inverse_gram()).scale(&(lambda * ell).rational());
    let lower_left = metric.gram() * &cf.b;
    let lower_right = cf.a.transpose().scale(&crate::exactla::rat(-1));
    let s = Matrix::from_blocks(&cf.a, &upper_right, &lower_left, &lower_right);
    GenStructure::new(s, lambda, ell)
}

/// Assembles S = [[A, lambda ell B G^-1], [G B, -A^t]] after validating the
/// classical invariants; the result passes the four algebraic checks.
pub fn from_classical(
    cf: &ClassicalForm,
    lambda: Sign,
    ell: Sign,
    metric: &PseudoMetric,
) -> Result<GenStructure> {
    cf.validate(lambda, ell, metric)?;
    let structure = assemble_classical(cf, lambda, ell, metric)?;
    let space = ExtendedSpace::new(metric.clone(), structure.k());
    let report = structure.verify_algebraic(&space)?;
    if !report.passed() {
        let failed: Vec<_> = report
            .outcomes()
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.clone())
            .collect();
        return Err(Error::InvariantViolation(format!(
            "assembled structure fails {}",
            failed.join(", ")
        )));
    }
    Ok(structure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn pure_symplectic_round_trip() {
        // A = 0, B with -B^2 = id on the Euclidean plane: pseudo-Kahler j
        let metric = PseudoMetric::standard(2, 0);
        let b = RatMatrix::from_rows(vec![vec![rat(0), rat(-1)], vec![rat(1), rat(0)]]);
        let cf = ClassicalForm::new(RatMatrix::zeros(2, 2), b).unwrap();
        let s = from_classical(&cf, Sign::Minus, Sign::Minus, &metric).unwrap();
        let back = to_classical(&s, &metric).unwrap();
        assert_eq!(back, cf);
    }

    #[test]
    fn invalid_pair_rejected() {
        let metric = PseudoMetric::standard(2, 0);
        let cf = ClassicalForm::new(RatMatrix::identity(2), RatMatrix::identity(2)).unwrap();
        assert!(matches!(
            from_classical(&cf, Sign::Plus, Sign::Plus, &metric),
            Err(Error::ClassicalInvariant(_))
        ));
    }
}
