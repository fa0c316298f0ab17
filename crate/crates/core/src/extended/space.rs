//! The extended space E = g + g* with its split pairing and the canonical
//! complex/paracomplex operator built from a metric.

use super::metric::PseudoMetric;
use crate::exactla::{Matrix, Sign};
use crate::RatMatrix;

/// E = g + g* with basis ordered (e_1..e_m, e_1*..e_m*), carrying:
///
/// - the split pairing b(u+sigma, v+tau) = tau(u) + sigma(v), whose Gram
///   matrix in this ordering is [[0, I], [I, 0]] (signature (m, m));
/// - the operator I_k = [[0, k G^-1], [G, 0]] with I_k^2 = k id, symmetric
///   for b; complex for k = -1, paracomplex for k = +1.
#[derive(Debug, Clone)]
pub struct ExtendedSpace {
    metric: PseudoMetric,
    k: Sign,
    bgram: RatMatrix,
    ik: RatMatrix,
}

impl ExtendedSpace {
    pub fn new(metric: PseudoMetric, k: Sign) -> Self {
        let m = metric.dim();
        let zero = RatMatrix::zeros(m, m);
        let id = RatMatrix::identity(m);
        let bgram = Matrix::from_blocks(&zero, &id, &id, &zero);
        let ik = Matrix::from_blocks(
            &zero,
            &metric.inverse_gram().scale(&k.rational()),
            metric.gram(),
            &zero,
        );
        let space = ExtendedSpace {
            metric,
            k,
            bgram,
            ik,
        };
        debug_assert!(space.invariants_hold());
        space
    }

    fn invariants_hold(&self) -> bool {
        let n = 2 * self.m();
        let ik_sq = &self.ik * &self.ik;
        let scaled_id = RatMatrix::identity(n).scale(&self.k.rational());
        // I_k^2 = k id and I_k symmetric for b
        ik_sq == scaled_id && &self.ik.transpose() * &self.bgram == &self.bgram * &self.ik
    }

    pub fn m(&self) -> usize {
        self.metric.dim()
    }

    pub fn dim(&self) -> usize {
        2 * self.m()
    }

    pub fn metric(&self) -> &PseudoMetric {
        &self.metric
    }

    pub fn k(&self) -> Sign {
        self.k
    }

    pub fn bgram(&self) -> &RatMatrix {
        &self.bgram
    }

    pub fn ik(&self) -> &RatMatrix {
        &self.ik
    }

    /// b(x, y) for coordinate columns.
    pub fn b(&self, x: &RatMatrix, y: &RatMatrix) -> crate::Rational {
        (&(&x.transpose() * &self.bgram) * y)[(0, 0)].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, signature_of_symmetric, Signature};

    #[test]
    fn paracomplex_operator_for_split_metric() {
        let g = PseudoMetric::standard(1, 1);
        let e = ExtendedSpace::new(g, Sign::Plus);
        let expected = RatMatrix::from_rows(vec![
            vec![rat(0), rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(0), rat(-1)],
            vec![rat(1), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(-1), rat(0), rat(0)],
        ]);
        assert_eq!(*e.ik(), expected);
    }

    #[test]
    fn complex_operator_for_euclidean_metric() {
        let m = 3;
        let e = ExtendedSpace::new(PseudoMetric::standard(m, 0), Sign::Minus);
        let id = RatMatrix::identity(m);
        let expected = Matrix::from_blocks(
            &RatMatrix::zeros(m, m),
            &id.scale(&rat(-1)),
            &id,
            &RatMatrix::zeros(m, m),
        );
        assert_eq!(*e.ik(), expected);
        assert_eq!(e.ik() * e.ik(), RatMatrix::identity(2 * m).scale(&rat(-1)));
    }

    #[test]
    fn split_pairing_has_neutral_signature() {
        for (p, q) in [(2, 0), (1, 2)] {
            let e = ExtendedSpace::new(PseudoMetric::standard(p, q), Sign::Minus);
            let sig = signature_of_symmetric(e.bgram()).unwrap();
            let m = p + q;
            assert_eq!(
                sig,
                Signature {
                    positive: m,
                    negative: m,
                    zero: 0
                }
            );
        }
    }
}
