//! Dense matrices over an exact scalar ring.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::Zero;

use super::scalar::Scalar;

/// Dense rows x cols matrix with exact entrywise equality.
#[derive(Clone, PartialEq)]
pub struct Matrix<T: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix::new(rows, cols, data)
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Diagonal square matrix from its diagonal entries.
    pub fn diagonal(diag: Vec<T>) -> Self {
        let n = diag.len();
        let mut m = Matrix::zeros(n, n);
        for (i, v) in diag.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    /// Column vector.
    pub fn column(entries: Vec<T>) -> Self {
        let n = entries.len();
        Matrix::new(n, 1, entries)
    }

    /// i-th standard basis column of dimension n.
    pub fn std_basis(n: usize, i: usize) -> Self {
        let mut v = Matrix::zeros(n, 1);
        v[(i, 0)] = T::one();
        v
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix::new(
            self.rows,
            self.cols,
            self.data.iter().map(|v| f(v)).collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|v| v.clone() * c.clone())
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && self.transpose() == -self.clone()
    }

    /// Extracts the block of the given shape with upper-left corner (r0, c0).
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        Matrix::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    /// Assembles [[a, b], [c, d]] from equally sized square blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let m = a.rows();
        for blk in [a, b, c, d] {
            assert!(
                blk.rows() == m && blk.cols() == m,
                "blocks must be square of equal size"
            );
        }
        Matrix::from_fn(2 * m, 2 * m, |r, cc| match (r < m, cc < m) {
            (true, true) => a[(r, cc)].clone(),
            (true, false) => b[(r, cc - m)].clone(),
            (false, true) => c[(r - m, cc)].clone(),
            (false, false) => d[(r - m, cc - m)].clone(),
        })
    }

    /// Horizontal concatenation of column-compatible matrices.
    pub fn hstack(parts: &[&Self]) -> Self {
        assert!(!parts.is_empty());
        let rows = parts[0].rows;
        assert!(parts.iter().all(|p| p.rows == rows));
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut off = 0;
        for p in parts {
            for r in 0..rows {
                for c in 0..p.cols {
                    m[(r, off + c)] = p[(r, c)].clone();
                }
            }
            off += p.cols;
        }
        m
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// `row[target] += factor * row[source]`
    pub fn add_scaled_row(&mut self, target: usize, source: usize, factor: &T) {
        for c in 0..self.cols {
            let v = self[(source, c)].clone() * factor.clone();
            self[(target, c)] = self[(target, c)].clone() + v;
        }
    }

    /// `col[target] += factor * col[source]`
    pub fn add_scaled_col(&mut self, target: usize, source: usize, factor: &T) {
        for r in 0..self.rows {
            let v = self[(r, source)].clone() * factor.clone();
            self[(r, target)] = self[(r, target)].clone() + v;
        }
    }

    pub fn scale_row(&mut self, row: usize, factor: &T) {
        for c in 0..self.cols {
            self[(row, c)] = self[(row, c)].clone() * factor.clone();
        }
    }
}

impl<T: Scalar> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch in +"
        );
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() + rhs[(r, c)].clone()
        })
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch in -"
        );
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() - rhs[(r, c)].clone()
        })
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert!(self.cols == rhs.rows, "shape mismatch in *");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                if self[(r, k)].is_zero() || rhs[(k, c)].is_zero() {
                    continue;
                }
                acc = acc + self[(r, k)].clone() * rhs[(k, c)].clone();
            }
            acc
        })
    }
}

impl<T: Scalar> Neg for Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|v| -v.clone())
    }
}

fn write_matrix<T: Scalar>(m: &Matrix<T>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "[")?;
    for r in 0..m.rows {
        if r > 0 {
            write!(f, "; ")?;
        }
        for c in 0..m.cols {
            if c > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", m[(r, c)])?;
        }
    }
    write!(f, "]")
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_matrix(self, f)
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_matrix(self, f)
    }
}
