//! Linearized fiber-dimension checks at model points: the tangent space of
//! the constraint variety must match the tangent space of the symmetry
//! group orbit. Both sides are computed from first principles as kernels of
//! exact linear systems on End(E); no external dimension formulas.

use super::model::ModelPoint;
use crate::error::Result;
use crate::exactla::{rref_kernel, Matrix};
use crate::RatMatrix;

/// Dimension data at a model point S:
///
/// - `constraint_tangent_dim`: solutions of { Sdot S + S Sdot = 0,
///   Sdot^t B + B Sdot = 0, Sdot I_k + I_k Sdot = 0 }.
/// - `symmetry_dim`: the I_k-commuting b_k-skew endomorphisms (the Lie
///   algebra of the group preserving the scalar-extended form).
/// - `stabilizer_dim`: those additionally commuting with S.
/// - `orbit_dim` = symmetry_dim - stabilizer_dim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitReport {
    pub constraint_tangent_dim: usize,
    pub symmetry_dim: usize,
    pub stabilizer_dim: usize,
    pub orbit_dim: usize,
}

impl OrbitReport {
    /// Local-transitivity evidence: the orbit fills the constraint variety.
    pub fn agrees(&self) -> bool {
        self.constraint_tangent_dim == self.orbit_dim
    }
}

/// Kernel dimension of a family of linear conditions on n x n matrices.
/// Each condition is a matrix-valued linear map, evaluated on the basis
/// E_ij to assemble the coefficient matrix column by column.
pub fn condition_kernel_dim(
    n: usize,
    conditions: &[&dyn Fn(&RatMatrix) -> RatMatrix],
) -> Result<usize> {
    Ok(condition_kernel_basis(n, conditions)?.len())
}

/// Basis of the solution space of the same system, reshaped to matrices.
pub fn condition_kernel_basis(
    n: usize,
    conditions: &[&dyn Fn(&RatMatrix) -> RatMatrix],
) -> Result<Vec<RatMatrix>> {
    let unknowns = n * n;
    let mut columns: Vec<Vec<crate::Rational>> = Vec::with_capacity(unknowns);
    for i in 0..n {
        for j in 0..n {
            let mut basis_ij = RatMatrix::zeros(n, n);
            basis_ij[(i, j)] = crate::exactla::rat(1);
            let mut col = Vec::new();
            for cond in conditions {
                let out = cond(&basis_ij);
                for r in 0..out.rows() {
                    for c in 0..out.cols() {
                        col.push(out[(r, c)].clone());
                    }
                }
            }
            columns.push(col);
        }
    }
    let total_rows: usize = columns.first().map_or(0, Vec::len);
    let system = Matrix::from_fn(total_rows, unknowns, |r, c| columns[c][r].clone());
    let (_, kernel) = rref_kernel(&system)?;
    Ok(kernel
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |i, j| v[(i * n + j, 0)].clone()))
        .collect())
}

/// Computes the three kernels at a model point and reports the dimensions.
pub fn orbit_dimension_check(point: &ModelPoint) -> Result<OrbitReport> {
    let space = point.space();
    let n = space.dim();
    let s = point.structure.matrix.clone();
    let b = space.bgram().clone();
    let ik = space.ik().clone();
    let b_im = &b * &ik; // Gram of the second component of b_k (up to the factor k)

    let anti_s = |x: &RatMatrix| -> RatMatrix { &(x * &s) + &(&s * x) };
    let b_skew = |x: &RatMatrix| -> RatMatrix { &(&x.transpose() * &b) + &(&b * x) };
    let ik_anti = |x: &RatMatrix| -> RatMatrix { &(x * &ik) + &(&ik * x) };
    let ik_comm = |x: &RatMatrix| -> RatMatrix { &(x * &ik) - &(&ik * x) };
    let bim_skew = |x: &RatMatrix| -> RatMatrix { &(&x.transpose() * &b_im) + &(&b_im * x) };
    let s_comm = |x: &RatMatrix| -> RatMatrix { &(x * &s) - &(&s * x) };

    let constraint_tangent_dim = condition_kernel_dim(n, &[&anti_s, &b_skew, &ik_anti])?;
    let symmetry_dim = condition_kernel_dim(n, &[&ik_comm, &b_skew, &bim_skew])?;
    let stabilizer_dim = condition_kernel_dim(n, &[&ik_comm, &b_skew, &bim_skew, &s_comm])?;

    Ok(OrbitReport {
        constraint_tangent_dim,
        symmetry_dim,
        stabilizer_dim,
        orbit_dim: symmetry_dim - stabilizer_dim,
    })
}
