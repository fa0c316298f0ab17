//! Lie algebras by structure constants: Jacobi verification, bracket
//! evaluation, subalgebra tests, and the cotangent Lie algebra
//! T*g = g x_ad* g* with its abelian dual part.

mod salamon;

pub use salamon::{parse_salamon, to_salamon};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{in_span, rank, Matrix, Rational};
use crate::RatMatrix;

/// One declared bracket: (i, j, terms) with [e_i, e_j] = sum of c * e_k
/// over the (k, c) terms; indices 1-based.
pub type BracketSpec = (usize, usize, Vec<(usize, Rational)>);

/// A finite-dimensional Lie algebra given by its structure constants
/// c^k_{ij} with [e_i, e_j] = sum_k c^k_{ij} e_k, stored as the full
/// bracket table of basis pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// table[i][j] = coordinates of [e_i, e_j] (0-based).
    table: Vec<Vec<Vec<Rational>>>,
}

/// A Jacobi failure, reported on the (1-based) basis triple where the
/// cyclic sum does not vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: RatMatrix,
}

/// Outcome of a subalgebra test on a spanning set.
#[derive(Debug, Clone)]
pub struct SubalgebraCheck {
    pub closed: bool,
    /// On failure: (a, b, [v_a, v_b]) with the bracket outside the span.
    pub witness: Option<(usize, usize, RatMatrix)>,
}

fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    /// Builds an algebra from a list of brackets `[e_i, e_j] = sum c e_k`
    /// with 1-based indices; antisymmetry is filled in, the Jacobi identity
    /// is verified before returning.
    pub fn from_brackets(dim: usize, brackets: &[BracketSpec]) -> Result<Self> {
        let mut table = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
        for &(i, j, ref terms) in brackets {
            for idx in [i, j] {
                if idx == 0 || idx > dim {
                    return Err(Error::IndexOutOfRange(idx, dim));
                }
            }
            if i == j {
                return Err(Error::Parse(format!("bracket [e{i}, e{i}] must vanish")));
            }
            for &(k, ref c) in terms {
                if k == 0 || k > dim {
                    return Err(Error::IndexOutOfRange(k, dim));
                }
                table[i - 1][j - 1][k - 1] += c;
                table[j - 1][i - 1][k - 1] -= c;
            }
        }
        let alg = LieAlgebra {
            dim,
            labels: default_labels(dim),
            table,
        };
        match alg.jacobi_check().first() {
            None => Ok(alg),
            Some(v) => Err(Error::JacobiFailure(v.i, v.j, v.k)),
        }
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            labels: default_labels(dim),
            table: vec![vec![vec![Rational::zero(); dim]; dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// [e_i, e_j] as a coordinate column (0-based indices).
    pub fn bracket_basis(&self, i: usize, j: usize) -> RatMatrix {
        Matrix::column(self.table[i][j].clone())
    }

    /// Bilinear expansion of the bracket on coordinate columns.
    pub fn bracket_eval(&self, x: &RatMatrix, y: &RatMatrix) -> Result<RatMatrix> {
        if x.rows() != self.dim || y.rows() != self.dim || x.cols() != 1 || y.cols() != 1 {
            return Err(Error::DimensionMismatch(format!(
                "bracket arguments must be {}-dimensional columns",
                self.dim
            )));
        }
        let mut out: RatMatrix = Matrix::zeros(self.dim, 1);
        for i in 0..self.dim {
            if x[(i, 0)].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[(j, 0)].is_zero() {
                    continue;
                }
                let coeff = &x[(i, 0)] * &y[(j, 0)];
                for k in 0..self.dim {
                    if !self.table[i][j][k].is_zero() {
                        let v = &coeff * &self.table[i][j][k];
                        out[(k, 0)] = out[(k, 0)].clone() + v;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exhaustive Jacobi test over basis triples i < j < k; empty = pass.
    pub fn jacobi_check(&self) -> Vec<JacobiViolation> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let ei = Matrix::std_basis(self.dim, i);
                    let ej = Matrix::std_basis(self.dim, j);
                    let ek = Matrix::std_basis(self.dim, k);
                    let s1 = self.bracket_eval(&self.bracket_basis(i, j), &ek).unwrap();
                    let s2 = self.bracket_eval(&self.bracket_basis(j, k), &ei).unwrap();
                    let s3 = self.bracket_eval(&self.bracket_basis(k, i), &ej).unwrap();
                    let residual = &(&s1 + &s2) + &s3;
                    if !residual.is_zero_matrix() {
                        out.push(JacobiViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            residual,
                        });
                    }
                }
            }
        }
        out
    }

    /// The cotangent Lie algebra on the ordered basis
    /// (e_1..e_m, e_1*..e_m*): [g, g] as here, [g*, g*] = 0, and
    /// [e_i, e_j*] = -(e_j* o ad_{e_i}) expanded in the dual basis.
    pub fn cotangent_algebra(&self) -> Result<LieAlgebra> {
        let m = self.dim;
        let d = 2 * m;
        let mut table = vec![vec![vec![Rational::zero(); d]; d]; d];
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    table[i][j][k] = self.table[i][j][k].clone();
                }
            }
        }
        // (e_j* o ad_{e_i})(e_z) = e_j*([e_i, e_z]) = c^j_{iz}
        for i in 0..m {
            for j in 0..m {
                for z in 0..m {
                    let coeff = -self.table[i][z][j].clone();
                    if !coeff.is_zero() {
                        table[i][m + j][m + z] = coeff.clone();
                        table[m + j][i][m + z] = -coeff;
                    }
                }
            }
        }
        let mut labels = default_labels(m);
        labels.extend((1..=m).map(|i| format!("e{i}*")));
        let alg = LieAlgebra {
            dim: d,
            labels,
            table,
        };
        match alg.jacobi_check().first() {
            None => Ok(alg),
            Some(v) => Err(Error::JacobiFailure(v.i, v.j, v.k)),
        }
    }

    /// Tests whether the span of the given independent columns is closed
    /// under the bracket; returns a witness pair on failure.
    pub fn subalgebra_check(&self, span: &[RatMatrix]) -> Result<SubalgebraCheck> {
        if span.is_empty() {
            return Ok(SubalgebraCheck {
                closed: true,
                witness: None,
            });
        }
        let refs: Vec<&RatMatrix> = span.iter().collect();
        let stacked = Matrix::hstack(&refs);
        if rank(&stacked)? != span.len() {
            return Err(Error::DependentSpan);
        }
        for a in 0..span.len() {
            for b in a + 1..span.len() {
                let w = self.bracket_eval(&span[a], &span[b])?;
                if !in_span(span, &w)? {
                    return Ok(SubalgebraCheck {
                        closed: false,
                        witness: Some((a, b, w)),
                    });
                }
            }
        }
        Ok(SubalgebraCheck {
            closed: true,
            witness: None,
        })
    }

    /// All brackets [e_i, e_j*] of a cotangent algebra, as the map
    /// (i, j) -> dual-part coordinates; used for table cross-checks.
    pub fn mixed_bracket(&self, i: usize, j: usize) -> RatMatrix {
        let m = self.dim / 2;
        self.bracket_basis(i, m + j).block(m, 0, m, 1)
    }
}
