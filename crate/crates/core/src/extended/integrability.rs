//! Integrability of a structure on a cotangent Lie algebra: the Nijenhuis
//! tensor N(x, y) = [Sx, Sy] - S[Sx, y] - S[x, Sy] + lambda [x, y] evaluated
//! over all basis pairs, and eigenspace involutivity for lambda = +1.

use super::structure::GenStructure;
use crate::error::{Error, Result};
use crate::exactla::{rref_kernel, Matrix, Sign};
use crate::liealg::LieAlgebra;
use crate::RatMatrix;

/// Nonzero Nijenhuis values, indexed by the (1-based) basis pair.
#[derive(Debug, Clone)]
pub struct NijenhuisReport {
    pub pairs_checked: usize,
    pub failures: Vec<(usize, usize, RatMatrix)>,
}

impl NijenhuisReport {
    pub fn vanishes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates the Nijenhuis tensor of `structure` on all basis pairs of the
/// cotangent algebra `t` (whose Lie bracket realizes the Courant bracket of
/// left-invariant sections). Integrable iff the report is empty.
pub fn nijenhuis_integrability(
    t: &LieAlgebra,
    structure: &GenStructure,
) -> Result<NijenhuisReport> {
    let d = t.dim();
    if d != structure.matrix.rows() {
        return Err(Error::DimensionMismatch(format!(
            "algebra has dimension {d}, structure is {} x {}",
            structure.matrix.rows(),
            structure.matrix.cols()
        )));
    }
    let s = &structure.matrix;
    let lambda = structure.lambda.rational();
    let mut failures = Vec::new();
    let mut pairs = 0;
    let basis: Vec<RatMatrix> = (0..d).map(|i| Matrix::std_basis(d, i)).collect();
    let images: Vec<RatMatrix> = basis.iter().map(|e| s * e).collect();
    for i in 0..d {
        for j in i + 1..d {
            pairs += 1;
            let term1 = t.bracket_eval(&images[i], &images[j])?;
            let term2 = s * &t.bracket_eval(&images[i], &basis[j])?;
            let term3 = s * &t.bracket_eval(&basis[i], &images[j])?;
            let term4 = t.bracket_basis(i, j).scale(&lambda);
            let n = &(&(&term1 - &term2) - &term3) + &term4;
            if !n.is_zero_matrix() {
                failures.push((i + 1, j + 1, n));
            }
        }
    }
    Ok(NijenhuisReport {
        pairs_checked: pairs,
        failures,
    })
}

/// An exact basis of the delta-eigenspace ker(S - delta id).
#[derive(Debug, Clone)]
pub struct EigenBasis {
    pub delta: Sign,
    pub vectors: Vec<RatMatrix>,
}

impl EigenBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Involutivity outcome for one eigenvalue of a paracomplex-type structure.
#[derive(Debug, Clone)]
pub struct InvolutivityReport {
    pub basis: EigenBasis,
    pub closed: bool,
    /// On failure, the offending pair and the escaping bracket value.
    pub witness: Option<(usize, usize, RatMatrix)>,
}

/// Kernel of (S - delta id) plus a subalgebra test of that eigenspace in
/// `t`. Only for lambda = +1; complex-type structures use the Nijenhuis
/// criterion instead of complexified eigenspaces.
pub fn eigenspace_involutivity(
    t: &LieAlgebra,
    structure: &GenStructure,
    delta: Sign,
) -> Result<InvolutivityReport> {
    if structure.lambda != Sign::Plus {
        return Err(Error::RequiresParacomplex);
    }
    let d = t.dim();
    if d != structure.matrix.rows() {
        return Err(Error::DimensionMismatch(
            "algebra vs structure dimension".into(),
        ));
    }
    let shifted = &structure.matrix - &RatMatrix::identity(d).scale(&delta.rational());
    let (_, vectors) = rref_kernel(&shifted)?;
    let basis = EigenBasis { delta, vectors };
    let check = t.subalgebra_check(&basis.vectors)?;
    Ok(InvolutivityReport {
        closed: check.closed,
        witness: check.witness,
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::extended::metric::PseudoMetric;
    use crate::extended::space::ExtendedSpace;

    #[test]
    fn abelian_algebra_everything_integrable() {
        let t = LieAlgebra::abelian(2).cotangent_algebra().unwrap();
        let s = RatMatrix::diagonal(vec![rat(1), rat(-1), rat(-1), rat(1)]);
        let st = GenStructure::new(s, Sign::Plus, Sign::Plus).unwrap();
        let report = nijenhuis_integrability(&t, &st).unwrap();
        assert!(report.vanishes());
        assert_eq!(report.pairs_checked, 6);
    }

    #[test]
    fn eigenspace_involutivity_requires_real_eigenvalues() {
        let t = LieAlgebra::abelian(2).cotangent_algebra().unwrap();
        let j = RatMatrix::from_rows(vec![
            vec![rat(0), rat(-1), rat(0), rat(0)],
            vec![rat(1), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(0), rat(-1)],
            vec![rat(0), rat(0), rat(1), rat(0)],
        ]);
        let st = GenStructure::new(j, Sign::Minus, Sign::Plus).unwrap();
        assert!(matches!(
            eigenspace_involutivity(&t, &st, Sign::Plus),
            Err(Error::RequiresParacomplex)
        ));
    }

    #[test]
    fn non_involutive_eigenspace_witnessed() {
        // On T*g for the Heisenberg algebra, pick the paracomplex reflection
        // whose +1 eigenspace is g itself: [e1, e2] = e3 stays in g, so g IS
        // a subalgebra; the -1 eigenspace g* is abelian. Both close.
        let h = crate::liealg::parse_salamon("(0,0,12)").unwrap();
        let t = h.cotangent_algebra().unwrap();
        let metric = PseudoMetric::standard(3, 0);
        let s = Matrix::from_blocks(
            &RatMatrix::identity(3),
            &RatMatrix::zeros(3, 3),
            &RatMatrix::zeros(3, 3),
            &RatMatrix::identity(3).scale(&rat(-1)),
        );
        let st = GenStructure::new(s, Sign::Plus, Sign::Minus).unwrap();
        let space = ExtendedSpace::new(metric, Sign::Plus);
        assert!(st.verify_algebraic(&space).unwrap().passed());
        for delta in [Sign::Plus, Sign::Minus] {
            let rep = eigenspace_involutivity(&t, &st, delta).unwrap();
            assert_eq!(rep.basis.dim(), 3);
            assert!(rep.closed);
        }
        // A mixed span template that is NOT closed: span{e1, e2} under a
        // rotated reflection exchanging e2 and e3 coordinates.
        let span = vec![Matrix::std_basis(6, 0), Matrix::std_basis(6, 1)];
        let check = t.subalgebra_check(&span).unwrap();
        assert!(!check.closed);
    }
}
