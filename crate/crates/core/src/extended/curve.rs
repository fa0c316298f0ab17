//! The interpolation curve cos(t) R + sin(t) Q between anti-commuting
//! extremal structures, evaluated at exact rational points via the
//! Weierstrass substitution cos t = (1-s^2)/(1+s^2), sin t = 2s/(1+s^2).

use num_traits::One;

use super::space::ExtendedSpace;
use super::structure::GenStructure;
use crate::error::{Error, Result};
use crate::exactla::Rational;

/// A point on the curve through the block-diagonal extremal `r` and the
/// off-diagonal extremal `q`, at Weierstrass parameter `s`.
#[derive(Debug, Clone)]
pub struct CurveSpec {
    pub r: GenStructure,
    pub q: GenStructure,
    pub s: Rational,
}

impl CurveSpec {
    pub fn new(r: GenStructure, q: GenStructure, s: Rational) -> Result<Self> {
        if (r.lambda, r.ell) != (q.lambda, q.ell) {
            return Err(Error::DimensionMismatch(
                "curve endpoints must share (lambda, ell)".into(),
            ));
        }
        if r.matrix.rows() != q.matrix.rows() {
            return Err(Error::DimensionMismatch(
                "curve endpoints must have equal size".into(),
            ));
        }
        Ok(CurveSpec { r, q, s })
    }

    /// (cos t, sin t) as exact rationals; cos^2 + sin^2 = 1 by construction.
    pub fn cos_sin(&self) -> (Rational, Rational) {
        let s2 = &self.s * &self.s;
        let denom = &s2 + Rational::one();
        let cos = (Rational::one() - &s2) / denom.clone();
        let sin = (&self.s + &self.s) / denom;
        (cos, sin)
    }
}

/// cos(t) R + sin(t) Q. Requires both endpoints to pass the algebraic
/// checks and to anti-commute; the result is re-verified rather than
/// trusted (S^2 = lambda id follows from cos^2 + sin^2 = 1 only together
/// with anti-commutation).
pub fn curve_point(spec: &CurveSpec, space: &ExtendedSpace) -> Result<GenStructure> {
    if !spec.r.verify_algebraic(space)?.passed() {
        return Err(Error::InvariantViolation(
            "curve endpoint R fails the axioms".into(),
        ));
    }
    if !spec.q.verify_algebraic(space)?.passed() {
        return Err(Error::InvariantViolation(
            "curve endpoint Q fails the axioms".into(),
        ));
    }
    let anti = &(&spec.r.matrix * &spec.q.matrix) + &(&spec.q.matrix * &spec.r.matrix);
    if !anti.is_zero_matrix() {
        return Err(Error::AntiCommutation("R Q + Q R != 0".into()));
    }
    let (cos, sin) = spec.cos_sin();
    let matrix = &spec.r.matrix.scale(&cos) + &spec.q.matrix.scale(&sin);
    let point = GenStructure::new(matrix, spec.r.lambda, spec.r.ell)?;
    let report = point.verify_algebraic(space)?;
    if !report.passed() {
        return Err(Error::InvariantViolation(
            "curve point fails the axioms".into(),
        ));
    }
    Ok(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{frac, rat, Sign};
    use crate::extended::extremal::{build_extremal, ExtremalKind};
    use crate::extended::metric::PseudoMetric;
    use crate::RatMatrix;

    fn endpoints() -> (PseudoMetric, GenStructure, GenStructure) {
        // Euclidean plane, (lambda, ell) = (1, -1): r = id and the Kahler
        // form omega = [[0,-1],[1,0]]; the resulting R and Q anti-commute.
        let metric = PseudoMetric::standard(2, 0);
        let r_data = RatMatrix::identity(2);
        let omega = RatMatrix::from_rows(vec![vec![rat(0), rat(-1)], vec![rat(1), rat(0)]]);
        let r = build_extremal(
            ExtremalKind::Product,
            &r_data,
            Sign::Plus,
            Sign::Minus,
            &metric,
        )
        .unwrap();
        let q = build_extremal(
            ExtremalKind::Symplectic,
            &omega,
            Sign::Plus,
            Sign::Minus,
            &metric,
        )
        .unwrap();
        (metric, r, q)
    }

    #[test]
    fn endpoints_of_the_curve() {
        let (metric, r, q) = endpoints();
        let space = ExtendedSpace::new(metric, Sign::Plus);
        let at0 = curve_point(
            &CurveSpec::new(r.clone(), q.clone(), rat(0)).unwrap(),
            &space,
        )
        .unwrap();
        assert_eq!(at0.matrix, r.matrix);
        let at1 = curve_point(
            &CurveSpec::new(r.clone(), q.clone(), rat(1)).unwrap(),
            &space,
        )
        .unwrap();
        assert_eq!(at1.matrix, q.matrix);
    }

    #[test]
    fn rational_midpoint() {
        let (metric, r, q) = endpoints();
        let space = ExtendedSpace::new(metric, Sign::Plus);
        let spec = CurveSpec::new(r.clone(), q.clone(), frac(1, 2)).unwrap();
        assert_eq!(spec.cos_sin(), (frac(3, 5), frac(4, 5)));
        let at = curve_point(&spec, &space).unwrap();
        let expected = &r.matrix.scale(&frac(3, 5)) + &q.matrix.scale(&frac(4, 5));
        assert_eq!(at.matrix, expected);
    }

    #[test]
    fn commuting_endpoints_rejected() {
        let (metric, r, _) = endpoints();
        let space = ExtendedSpace::new(metric, Sign::Plus);
        let spec = CurveSpec::new(r.clone(), r.clone(), rat(2)).unwrap();
        assert!(matches!(
            curve_point(&spec, &space),
            Err(Error::AntiCommutation(_))
        ));
    }

    #[test]
    fn weierstrass_identity_on_many_points() {
        let (metric, r, q) = endpoints();
        let space = ExtendedSpace::new(metric, Sign::Plus);
        for num in -10..=10i64 {
            for den in 1..=3i64 {
                let spec = CurveSpec::new(r.clone(), q.clone(), frac(num, den)).unwrap();
                let (c, s) = spec.cos_sin();
                assert_eq!(&c * &c + &s * &s, rat(1));
                assert!(curve_point(&spec, &space).is_ok());
            }
        }
    }
}
