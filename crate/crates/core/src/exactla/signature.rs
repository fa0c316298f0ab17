//! Signatures of symmetric rational matrices by exact congruence diagonalization.

use num_traits::Zero;

use super::matrix::Matrix;
use super::scalar::{rat, rational_sign, Rational};
use crate::error::{Error, Result};

/// Inertia of a symmetric bilinear form: counts of positive, negative and
/// zero diagonal entries after congruence diagonalization. Sylvester's law
/// makes these independent of the reduction path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

/// Lagrange reduction: diagonalize by simultaneous row/column operations,
/// repairing zero pivots with an off-diagonal entry (add row/col j into i,
/// which puts 2*M_ij on the diagonal), then count signs.
pub fn signature_of_symmetric(m: &Matrix<Rational>) -> Result<Signature> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut sig = Signature {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for i in 0..n {
        if a[(i, i)].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                a.swap_rows(i, j);
                a.swap_cols(i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !a[(i, j)].is_zero()) {
                let one = rat(1);
                a.add_scaled_row(i, j, &one);
                a.add_scaled_col(i, j, &one);
            }
        }
        let pivot = a[(i, i)].clone();
        match rational_sign(&pivot) {
            0 => {
                sig.zero += 1;
                continue;
            }
            1 => sig.positive += 1,
            _ => sig.negative += 1,
        }
        for j in i + 1..n {
            if a[(j, i)].is_zero() {
                continue;
            }
            let f = -(&a[(j, i)] / &pivot);
            a.add_scaled_row(j, i, &f);
            a.add_scaled_col(j, i, &f);
        }
    }
    Ok(sig)
}

/// Gram matrix in the standard basis from a Gram matrix `c` given with
/// respect to a basis whose coordinate columns form `p`:
/// returns g with c = p^t g p, i.e. g = p^-t c p^-1.
pub fn congruent_gram(c: &Matrix<Rational>, p: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    if !c.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !p.is_square() || p.rows() != c.rows() {
        return Err(Error::DimensionMismatch("basis matrix shape".into()));
    }
    let p_inv = super::rref::invert(p)?;
    Ok(&(&p_inv.transpose() * c) * &p_inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::scalar::frac;

    fn diag(entries: Vec<i64>) -> Matrix<Rational> {
        Matrix::diagonal(entries.into_iter().map(rat).collect())
    }

    #[test]
    fn diagonal_signature() {
        let sig = signature_of_symmetric(&diag(vec![4, -4, 2, -2, -2, 2])).unwrap();
        assert_eq!(
            sig,
            Signature {
                positive: 3,
                negative: 3,
                zero: 0
            }
        );
    }

    #[test]
    fn identity_signature() {
        for m in 1..5 {
            let sig = signature_of_symmetric(&Matrix::identity(m)).unwrap();
            assert_eq!(
                sig,
                Signature {
                    positive: m,
                    negative: 0,
                    zero: 0
                }
            );
        }
    }

    #[test]
    fn hyperbolic_plane_needs_zero_pivot_repair() {
        let h = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);
        let sig = signature_of_symmetric(&h).unwrap();
        assert_eq!(
            sig,
            Signature {
                positive: 1,
                negative: 1,
                zero: 0
            }
        );
    }

    #[test]
    fn degenerate_form() {
        let m = Matrix::from_rows(vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]]);
        let sig = signature_of_symmetric(&m).unwrap();
        assert_eq!(
            sig,
            Signature {
                positive: 1,
                negative: 0,
                zero: 1
            }
        );
    }

    #[test]
    fn rejects_non_symmetric() {
        let m = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(2), rat(0)]]);
        assert!(matches!(
            signature_of_symmetric(&m),
            Err(Error::NotSymmetric)
        ));
    }

    #[test]
    fn congruent_gram_identity_basis() {
        let c = diag(vec![3, -5]);
        assert_eq!(congruent_gram(&c, &Matrix::identity(2)).unwrap(), c);
    }

    #[test]
    fn congruent_gram_scaling() {
        let g = congruent_gram(&Matrix::identity(2), &diag(vec![2, 1])).unwrap();
        assert_eq!(g, Matrix::diagonal(vec![frac(1, 4), rat(1)]));
    }

    #[test]
    fn congruent_gram_rejects_singular_basis() {
        let p = Matrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]);
        assert!(matches!(
            congruent_gram(&Matrix::identity(2), &p),
            Err(Error::Singular)
        ));
    }
}
