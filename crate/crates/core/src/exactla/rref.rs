//! Exact Gaussian elimination: reduced row echelon form, kernels, inverses.

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Reduced row echelon form together with its pivot columns.
pub struct Rref<T: Scalar> {
    pub reduced: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: Scalar> Rref<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn guard_entries<T: Scalar>(m: &Matrix<T>) -> Result<()> {
    for e in m.entries() {
        e.elimination_guard()?;
    }
    Ok(())
}

/// Reduced row echelon form over a field (Q or `Q[i]`; Lorentz entries rejected).
pub fn rref<T: Scalar>(m: &Matrix<T>) -> Result<Rref<T>> {
    guard_entries(m)?;
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, pr);
        let inv = a[(r, c)].inverse()?;
        a.scale_row(r, &inv);
        for i in 0..rows {
            if i != r && !a[(i, c)].is_zero() {
                let f = -a[(i, c)].clone();
                a.add_scaled_row(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(Rref { reduced: a, pivots })
}

pub fn rank<T: Scalar>(m: &Matrix<T>) -> Result<usize> {
    Ok(rref(m)?.rank())
}

/// Rank and an exact basis of the kernel (column vectors).
pub fn rref_kernel<T: Scalar>(m: &Matrix<T>) -> Result<(usize, Vec<Matrix<T>>)> {
    let red = rref(m)?;
    let cols = m.cols();
    let mut basis = Vec::new();
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (row, &c) in red.pivots.iter().enumerate() {
            v[c] = Some(row);
        }
        v
    };
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut vec = Matrix::zeros(cols, 1);
        vec[(free, 0)] = T::one();
        for (c, p) in pivot_of_col.iter().enumerate() {
            if let Some(row) = p {
                vec[(c, 0)] = -red.reduced[(*row, free)].clone();
            }
        }
        basis.push(vec);
    }
    Ok((red.rank(), basis))
}

/// Exact inverse; `Error::Singular` when not invertible.
pub fn invert<T: Scalar>(m: &Matrix<T>) -> Result<Matrix<T>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(
            "inverse of non-square matrix".into(),
        ));
    }
    let n = m.rows();
    let aug = Matrix::hstack(&[m, &Matrix::identity(n)]);
    let red = rref(&aug)?;
    // invertible iff the pivots are exactly the left-block columns 0..n
    let invertible = red.pivots.len() == n && red.pivots.iter().enumerate().all(|(i, &c)| c == i);
    if !invertible {
        return Err(Error::Singular);
    }
    Ok(red.reduced.block(0, n, n, n))
}

/// Whether v lies in the span of the given (column) vectors.
pub fn in_span<T: Scalar>(span: &[Matrix<T>], v: &Matrix<T>) -> Result<bool> {
    if span.is_empty() {
        return Ok(v.is_zero_matrix());
    }
    let refs: Vec<&Matrix<T>> = span.iter().collect();
    let base = Matrix::hstack(&refs);
    let r0 = rank(&base)?;
    let aug = Matrix::hstack(&[&base, v]);
    Ok(rank(&aug)? == r0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::scalar::{frac, rat, Rational, Sign};
    use crate::exactla::Quad;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat).collect())
                .collect(),
        )
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let (rank, basis) = rref_kernel(&Matrix::<Rational>::zeros(3, 3)).unwrap();
        assert_eq!(rank, 0);
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            assert_eq!(*v, Matrix::std_basis(3, i));
        }
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let (rank, basis) = rref_kernel(&Matrix::<Rational>::identity(4)).unwrap();
        assert_eq!(rank, 4);
        assert!(basis.is_empty());
    }

    #[test]
    fn rank_one_kernel() {
        let a = m(vec![vec![1, 2], vec![2, 4]]);
        let (rank, basis) = rref_kernel(&a).unwrap();
        assert_eq!(rank, 1);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], Matrix::column(vec![rat(-2), rat(1)]));
        assert!((&a * &basis[0]).is_zero_matrix());
    }

    #[test]
    fn gaussian_rational_elimination() {
        // (1+i) x + 2 y = 0 has kernel spanned by (-2/(1+i), 1) = (-(1-i), 1)
        let a = Matrix::from_rows(vec![vec![
            Quad::new(rat(1), rat(1), Sign::Minus),
            Quad::from_rational(rat(2), Sign::Minus),
        ]]);
        let (rank, basis) = rref_kernel(&a).unwrap();
        assert_eq!(rank, 1);
        assert_eq!(basis.len(), 1);
        assert!((&a * &basis[0]).is_zero_matrix());
        assert_eq!(basis[0][(0, 0)], Quad::new(rat(-1), rat(1), Sign::Minus));
    }

    #[test]
    fn lorentz_matrices_rejected() {
        let a = Matrix::from_rows(vec![vec![Quad::eps()]]);
        assert!(matches!(rref(&a), Err(Error::LorentzElimination)));
        // all-real entries tagged kappa = +1 are plain rationals and fine
        let b = Matrix::from_rows(vec![vec![Quad::from_rational(rat(2), Sign::Plus)]]);
        assert_eq!(rank(&b).unwrap(), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(vec![vec![2, 1], vec![1, 1]]);
        let inv = invert(&a).unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert_eq!(inv[(0, 0)], frac(1, 1));
        assert!(matches!(
            invert(&m(vec![vec![1, 2], vec![2, 4]])),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn zero_dimensional_edge_cases() {
        let empty = Matrix::<Rational>::zeros(0, 0);
        assert_eq!(invert(&empty).unwrap(), empty);
        let (rank, basis) = rref_kernel(&empty).unwrap();
        assert_eq!((rank, basis.len()), (0, 0));
    }

    #[test]
    fn span_membership() {
        let v1 = Matrix::column(vec![rat(1), rat(0), rat(1)]);
        let v2 = Matrix::column(vec![rat(0), rat(1), rat(1)]);
        let inside = Matrix::column(vec![rat(2), rat(3), rat(5)]);
        let outside = Matrix::column(vec![rat(0), rat(0), rat(1)]);
        assert!(in_span(&[v1.clone(), v2.clone()], &inside).unwrap());
        assert!(!in_span(&[v1, v2], &outside).unwrap());
    }
}
