//! Model points of the four (lambda, ell) classes over the standard
//! diagonal metrics, and the split-signature necessity for (-1, 1).

use super::charcond::char_condition;
use crate::error::{Error, Result};
use crate::exactla::{rat, Matrix, Sign};
use crate::extended::{ExtendedSpace, GenStructure, PseudoMetric};
use crate::RatMatrix;

/// A concrete structure realizing a (lambda, ell) class on the standard
/// metric of signature (p, q), transported to the basis (e_i, e_i*).
#[derive(Debug, Clone)]
pub struct ModelPoint {
    pub structure: GenStructure,
    pub metric: PseudoMetric,
    pub description: String,
}

impl ModelPoint {
    pub fn space(&self) -> ExtendedSpace {
        ExtendedSpace::new(self.metric.clone(), self.structure.k())
    }
}

/// Builds the canonical model point for each class:
///
/// - (1, -1): the Lorentz-number conjugation, which in standard coordinates
///   is +id on g and -id on g*; any signature.
/// - (-1, 1): the swap-based anti-isometry (requires p = q).
/// - (1, 1): the reflection with alternating +/-1 eigenbasis.
/// - (-1, -1): the block-rotation symplectic structure (requires p, q even).
pub fn model_point(lambda: Sign, ell: Sign, p: usize, q: usize) -> Result<ModelPoint> {
    let m = p + q;
    if m == 0 {
        return Err(Error::InadmissibleSignature(
            "p + q must be positive".into(),
        ));
    }
    let metric = PseudoMetric::standard(p, q);
    let g = metric.gram().clone();
    let zero = RatMatrix::zeros(m, m);
    let (matrix, description) = match (lambda, ell) {
        (Sign::Plus, Sign::Minus) => {
            let s = Matrix::from_blocks(
                &RatMatrix::identity(m),
                &zero,
                &zero,
                &RatMatrix::identity(m).scale(&rat(-1)),
            );
            (
                s,
                "conjugation in the Lorentz module: +id on g, -id on g*".to_string(),
            )
        }
        (Sign::Minus, Sign::Plus) => {
            if p != q {
                return Err(Error::InadmissibleSignature(format!(
                    "a (-1,1)-structure forces a split metric, got ({p},{q})"
                )));
            }
            // r swaps the two halves; S = [[0, r G^-1], [-G r, 0]]
            let mut r = RatMatrix::zeros(m, m);
            for i in 0..p {
                r[(i, p + i)] = rat(1);
                r[(p + i, i)] = rat(1);
            }
            let upper = &r * metric.inverse_gram();
            let lower = (&g * &r).scale(&rat(-1));
            let s = Matrix::from_blocks(&zero, &upper, &lower, &zero);
            (s, "swap-based anti-isometry on the null basis".to_string())
        }
        (Sign::Plus, Sign::Plus) => {
            let r = RatMatrix::diagonal(
                (0..m)
                    .map(|i| if i % 2 == 0 { rat(1) } else { rat(-1) })
                    .collect(),
            );
            let s = Matrix::from_blocks(&r, &zero, &zero, &r.scale(&rat(-1)));
            (s, "reflection with alternating eigenvalues".to_string())
        }
        (Sign::Minus, Sign::Minus) => {
            if p % 2 != 0 || q % 2 != 0 {
                return Err(Error::InadmissibleSignature(format!(
                    "the symplectic model needs even p and q, got ({p},{q})"
                )));
            }
            // omega = block-diagonal rotations; j = G^-1 omega, j^2 = -id
            let mut omega = RatMatrix::zeros(m, m);
            for b in 0..m / 2 {
                omega[(2 * b, 2 * b + 1)] = rat(-1);
                omega[(2 * b + 1, 2 * b)] = rat(1);
            }
            let omega_inv = crate::exactla::invert(&omega)?;
            let s = Matrix::from_blocks(&zero, &omega_inv.scale(&rat(-1)), &omega, &zero);
            (s, "block-rotation symplectic structure".to_string())
        }
    };
    let structure = GenStructure::new(matrix, lambda, ell)?;
    let point = ModelPoint {
        structure,
        metric,
        description,
    };
    let space = point.space();
    if !point.structure.verify_algebraic(&space)?.passed() {
        return Err(Error::InvariantViolation(
            "model point fails the algebraic checks".into(),
        ));
    }
    if !char_condition(&point.structure.matrix, lambda, ell, &space)? {
        return Err(Error::InvariantViolation(
            "model point fails the scalar-extension characterization".into(),
        ));
    }
    Ok(point)
}

/// Outcome of the split-necessity test for a class and metric signature.
#[derive(Debug, Clone)]
pub struct SplitAdmissibility {
    pub admissible: bool,
    pub reason: String,
}

/// Necessary condition: a (-1,1)-structure is an anti-isometry of the
/// imaginary part of b_1, whose signature is (2p, 2q); an anti-isometry
/// exists only when (2p, 2q) = (2q, 2p), i.e. the metric is split. All
/// other classes are unconstrained at this level (no sufficiency claimed).
pub fn split_admissibility(lambda: Sign, ell: Sign, p: usize, q: usize) -> SplitAdmissibility {
    if (lambda, ell) == (Sign::Minus, Sign::Plus) && p != q {
        SplitAdmissibility {
            admissible: false,
            reason: format!(
                "Im(b_1) has signature ({}, {}) and an anti-isometry of it requires ({}, {}) = ({}, {}); the metric must be split",
                2 * p, 2 * q, 2 * p, 2 * q, 2 * q, 2 * p
            ),
        }
    } else {
        SplitAdmissibility {
            admissible: true,
            reason: "no constraint from the anti-isometry of Im(b_1)".into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_model_any_signature() {
        for (p, q) in [(1, 1), (2, 0), (2, 2), (3, 1)] {
            let mp = model_point(Sign::Plus, Sign::Minus, p, q).unwrap();
            assert!(mp.structure.verify_algebraic(&mp.space()).unwrap().passed());
        }
    }

    #[test]
    fn swap_model_needs_split() {
        assert!(model_point(Sign::Minus, Sign::Plus, 2, 0).is_err());
        for p in 1..=3 {
            let mp = model_point(Sign::Minus, Sign::Plus, p, p).unwrap();
            let space = mp.space();
            assert!(char_condition(&mp.structure.matrix, Sign::Minus, Sign::Plus, &space).unwrap());
        }
    }

    #[test]
    fn symplectic_model_needs_even_blocks() {
        assert!(model_point(Sign::Minus, Sign::Minus, 1, 1).is_err());
        assert!(model_point(Sign::Minus, Sign::Minus, 2, 2).is_ok());
    }

    #[test]
    fn reflection_model_on_the_euclidean_plane_has_sig_one() {
        // the alternating reflection r = diag(1,-1) against G = I_2
        let mp = model_point(Sign::Plus, Sign::Plus, 2, 0).unwrap();
        let beta = crate::twistor::beta_signature(&mp.structure, &mp.space()).unwrap();
        assert_eq!(beta.n, 1);
    }

    #[test]
    fn split_admissibility_table() {
        assert!(!split_admissibility(Sign::Minus, Sign::Plus, 2, 0).admissible);
        assert!(split_admissibility(Sign::Minus, Sign::Plus, 2, 2).admissible);
        assert!(split_admissibility(Sign::Plus, Sign::Minus, 2, 0).admissible);
    }
}
