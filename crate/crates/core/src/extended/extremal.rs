//! Extremal structures: block-diagonal operators built from a product or
//! complex structure s compatible with g, and block-off-diagonal operators
//! built from a compatible symplectic form omega.

use super::metric::PseudoMetric;
use super::structure::GenStructure;
use crate::error::{Error, Result};
use crate::exactla::{invert, rat, Matrix, Sign};
use crate::RatMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalKind {
    /// Data is an endomorphism s with s^2 = lambda id, symmetric for g.
    Product,
    /// Data is an invertible skew form omega_flat with
    /// (omega_flat)^-1 G = ell G^-1 omega_flat.
    Symplectic,
}

/// The pointwise datum recovered from an extremal structure.
#[derive(Debug, Clone, PartialEq)]
pub enum Extremal {
    /// s with s^2 = lambda id and G s = s^t G certified.
    Product(RatMatrix),
    /// omega_flat, skew with the ell-compatibility certified.
    Symplectic(RatMatrix),
}

/// R = [[s, 0], [0, -s^t]] or Q = [[0, lambda (omega)^-1], [omega, 0]],
/// after checking the compatibility preconditions by name.
pub fn build_extremal(
    kind: ExtremalKind,
    data: &RatMatrix,
    lambda: Sign,
    ell: Sign,
    metric: &PseudoMetric,
) -> Result<GenStructure> {
    let m = metric.dim();
    if !data.is_square() || data.rows() != m {
        return Err(Error::DimensionMismatch(
            "extremal data must be m x m".into(),
        ));
    }
    let g = metric.gram();
    let zero = RatMatrix::zeros(m, m);
    let s = match kind {
        ExtremalKind::Product => {
            if &(data * data) != &RatMatrix::identity(m).scale(&lambda.rational()) {
                return Err(Error::ExtremalIncompatible("s^2 = lambda id".into()));
            }
            if &(g * data) != &(&data.transpose() * g) {
                return Err(Error::ExtremalIncompatible(
                    "G s = s^t G (g-symmetry)".into(),
                ));
            }
            Matrix::from_blocks(data, &zero, &zero, &data.transpose().scale(&rat(-1)))
        }
        ExtremalKind::Symplectic => {
            if !data.is_skew() {
                return Err(Error::ExtremalIncompatible("omega_flat skew".into()));
            }
            let omega_inv = invert(data)
                .map_err(|_| Error::ExtremalIncompatible("omega_flat invertible".into()))?;
            let lhs = &omega_inv * g;
            let rhs = (metric.inverse_gram() * data).scale(&ell.rational());
            if lhs != rhs {
                return Err(Error::ExtremalIncompatible(
                    "(omega_flat)^-1 G = ell G^-1 omega_flat".into(),
                ));
            }
            Matrix::from_blocks(&zero, &omega_inv.scale(&lambda.rational()), data, &zero)
        }
    };
    GenStructure::new(s, lambda, ell)
}

/// Recognizes an extremal structure and certifies the recovered datum;
/// structures with both diagonal and off-diagonal content are rejected.
pub fn extract_extremal(structure: &GenStructure, metric: &PseudoMetric) -> Result<Extremal> {
    let m = structure.m();
    let s = &structure.matrix;
    let diag_zero = s.block(0, 0, m, m).is_zero_matrix() && s.block(m, m, m, m).is_zero_matrix();
    let off_zero = s.block(0, m, m, m).is_zero_matrix() && s.block(m, 0, m, m).is_zero_matrix();
    let g = metric.gram();
    match (off_zero, diag_zero) {
        (true, false) => {
            let part = s.block(0, 0, m, m);
            if &(&part * &part) != &RatMatrix::identity(m).scale(&structure.lambda.rational()) {
                return Err(Error::ExtremalIncompatible("s^2 = lambda id".into()));
            }
            if &(g * &part) != &(&part.transpose() * g) {
                return Err(Error::ExtremalIncompatible("G s = s^t G".into()));
            }
            Ok(Extremal::Product(part))
        }
        (false, true) => {
            let omega = s.block(m, 0, m, m);
            if !omega.is_skew() {
                return Err(Error::ExtremalIncompatible("omega_flat skew".into()));
            }
            let omega_inv = invert(&omega)
                .map_err(|_| Error::ExtremalIncompatible("omega_flat invertible".into()))?;
            let lhs = &omega_inv * g;
            let rhs = (metric.inverse_gram() * &omega).scale(&structure.ell.rational());
            if lhs != rhs {
                return Err(Error::ExtremalIncompatible(
                    "(omega_flat)^-1 G = ell G^-1 omega_flat".into(),
                ));
            }
            Ok(Extremal::Symplectic(omega))
        }
        _ => Err(Error::NotExtremal),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extended::space::ExtendedSpace;

    #[test]
    fn product_reflection() {
        let metric = PseudoMetric::standard(2, 0);
        let s = RatMatrix::diagonal(vec![rat(1), rat(-1)]);
        let r = build_extremal(ExtremalKind::Product, &s, Sign::Plus, Sign::Plus, &metric).unwrap();
        assert_eq!(
            r.matrix,
            RatMatrix::diagonal(vec![rat(1), rat(-1), rat(-1), rat(1)])
        );
        let space = ExtendedSpace::new(metric.clone(), r.k());
        assert!(r.verify_algebraic(&space).unwrap().passed());
        assert_eq!(extract_extremal(&r, &metric).unwrap(), Extremal::Product(s));
    }

    #[test]
    fn para_kahler_plane() {
        // omega = [[0,1],[-1,0]] against the split metric diag(1,-1):
        // r = G^-1 omega = [[0,1],[1,0]], r^2 = id
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
        let space = ExtendedSpace::new(metric.clone(), q.k());
        assert!(q.verify_algebraic(&space).unwrap().passed());
        let r = metric.inverse_gram() * &omega;
        assert_eq!(
            r,
            RatMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]])
        );
        assert_eq!(&r * &r, RatMatrix::identity(2));
        assert_eq!(
            extract_extremal(&q, &metric).unwrap(),
            Extremal::Symplectic(omega)
        );
    }

    #[test]
    fn pseudo_kahler_plane() {
        let metric = PseudoMetric::standard(2, 0);
        let omega = RatMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(-1), rat(0)]]);
        let q = build_extremal(
            ExtremalKind::Symplectic,
            &omega,
            Sign::Minus,
            Sign::Minus,
            &metric,
        )
        .unwrap();
        let space = ExtendedSpace::new(metric.clone(), q.k());
        assert!(q.verify_algebraic(&space).unwrap().passed());
        let j = metric.inverse_gram() * &omega;
        assert_eq!(&j * &j, RatMatrix::identity(2).scale(&rat(-1)));
    }

    #[test]
    fn incompatible_data_named() {
        let metric = PseudoMetric::standard(2, 0);
        let not_invol = RatMatrix::diagonal(vec![rat(2), rat(1)]);
        let err = build_extremal(
            ExtremalKind::Product,
            &not_invol,
            Sign::Plus,
            Sign::Plus,
            &metric,
        )
        .unwrap_err();
        assert!(err.to_string().contains("s^2 = lambda id"));
    }

    #[test]
    fn mixed_blocks_not_extremal() {
        let metric = PseudoMetric::standard(1, 1);
        let mixed = RatMatrix::from_rows(vec![
            vec![rat(1), rat(0), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(1), rat(0)],
            vec![rat(0), rat(1), rat(-1), rat(0)],
            vec![rat(1), rat(0), rat(0), rat(-1)],
        ]);
        let s = GenStructure::new(mixed, Sign::Plus, Sign::Plus).unwrap();
        assert!(matches!(
            extract_extremal(&s, &metric),
            Err(Error::NotExtremal)
        ));
    }
}
