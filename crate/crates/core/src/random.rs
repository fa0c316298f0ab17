//! Seeded generators for the randomized verification suites. Structures in
//! a (lambda, ell) class are produced by transporting a model point along a
//! random change of basis and conjugating by Cayley transforms of the
//! symmetry algebra; both moves preserve the split pairing and I_k exactly,
//! so the results are verified members by construction.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{frac, invert, rat, Matrix, Rational, Sign};
use crate::extended::{ExtendedSpace, GenStructure, PseudoMetric};
use crate::twistor::{condition_kernel_basis, model_point};
use crate::RatMatrix;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational with numerator in [-max, max] and denominator in [1, den].
pub fn random_rational(rng: &mut impl Rng, max: i64, den: i64) -> Rational {
    frac(rng.gen_range(-max..=max), rng.gen_range(1..=den))
}

/// A random invertible matrix, built as (unit lower) * (unit upper) with a
/// random permutation and random +/-1 column signs; always invertible.
pub fn random_invertible(rng: &mut impl Rng, n: usize) -> RatMatrix {
    let mut lower = RatMatrix::identity(n);
    let mut upper = RatMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = random_rational(rng, 2, 2);
            upper[(j, i)] = random_rational(rng, 2, 2);
        }
    }
    let mut perm = RatMatrix::zeros(n, n);
    let mut cols: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        cols.swap(i, rng.gen_range(0..=i));
    }
    for (r, c) in cols.into_iter().enumerate() {
        perm[(r, c)] = if rng.gen_bool(0.5) { rat(1) } else { rat(-1) };
    }
    &(&lower * &upper) * &perm
}

/// A random metric of signature (p, q): a congruence transport of the
/// standard diagonal metric.
pub fn random_metric(rng: &mut impl Rng, p: usize, q: usize) -> PseudoMetric {
    let n = p + q;
    let g0 = PseudoMetric::standard(p, q);
    loop {
        let t = random_invertible(rng, n);
        let gram = &(&t.transpose() * g0.gram()) * &t;
        if let Ok(metric) = PseudoMetric::new(gram) {
            return metric;
        }
    }
}

/// The basis-change of E induced by the tangent substitution x -> P x:
/// block diag(P, P^-t); it preserves the split pairing and conjugates
/// I_k of G0 into I_k of G = P^t G0 P.
fn extended_transport(p: &RatMatrix) -> Result<RatMatrix> {
    let p_inv_t = invert(p)?.transpose();
    let m = p.rows();
    Ok(Matrix::from_blocks(
        p,
        &RatMatrix::zeros(m, m),
        &RatMatrix::zeros(m, m),
        &p_inv_t,
    ))
}

/// A rational element of the symmetry group of (b, I_k): the Cayley
/// transform (I - X)(I + X)^-1 of a random b-skew, I_k-commuting X.
pub fn symmetry_group_element(rng: &mut impl Rng, space: &ExtendedSpace) -> Result<RatMatrix> {
    let n = space.dim();
    let b = space.bgram().clone();
    let ik = space.ik().clone();
    let comm = |x: &RatMatrix| -> RatMatrix { &(x * &ik) - &(&ik * x) };
    let skew = |x: &RatMatrix| -> RatMatrix { &(&x.transpose() * &b) + &(&b * x) };
    let basis = condition_kernel_basis(n, &[&comm, &skew])?;
    if basis.is_empty() {
        return Ok(RatMatrix::identity(n));
    }
    loop {
        let mut x = RatMatrix::zeros(n, n);
        for gen in &basis {
            if rng.gen_bool(0.5) {
                continue;
            }
            x = &x + &gen.scale(&random_rational(rng, 1, 2));
        }
        let id = RatMatrix::identity(n);
        if let Ok(inv) = invert(&(&id + &x)) {
            return Ok(&(&id - &x) * &inv);
        }
    }
}

/// A random verified (lambda, ell)-structure over a random metric of
/// signature (p, q): model point, transported along a random basis change,
/// then conjugated inside the symmetry group.
pub fn random_verified_structure(
    rng: &mut impl Rng,
    lambda: Sign,
    ell: Sign,
    p: usize,
    q: usize,
) -> Result<(PseudoMetric, GenStructure)> {
    let mp = model_point(lambda, ell, p, q)?;
    let m = p + q;
    let t = random_invertible(rng, m);
    // transported metric: G = T^t G0 T
    let gram = &(&t.transpose() * mp.metric.gram()) * &t;
    let metric = PseudoMetric::new(gram)
        .map_err(|e| Error::InvariantViolation(format!("transported metric invalid: {e}")))?;
    let lift = extended_transport(&t)?;
    let lift_inv = invert(&lift)?;
    let transported = &(&lift_inv * &mp.structure.matrix) * &lift;

    let space = ExtendedSpace::new(metric.clone(), mp.structure.k());
    let c = symmetry_group_element(rng, &space)?;
    let conjugated = &(&c * &transported) * &invert(&c)?;
    Ok((metric, GenStructure::new(conjugated, lambda, ell)?))
}

/// A random matrix with S^2 = lambda id that is NOT required to satisfy any
/// compatibility: a conjugate of a diagonal reflection (lambda = +1) or of
/// a block rotation (lambda = -1) by an arbitrary invertible matrix.
pub fn random_involution(rng: &mut impl Rng, lambda: Sign, n: usize) -> RatMatrix {
    assert!(
        n % 2 == 0,
        "involutions here live on even-dimensional spaces"
    );
    let d = match lambda {
        Sign::Plus => RatMatrix::diagonal(
            (0..n)
                .map(|_| if rng.gen_bool(0.5) { rat(1) } else { rat(-1) })
                .collect(),
        ),
        Sign::Minus => {
            let mut d = RatMatrix::zeros(n, n);
            for b in 0..n / 2 {
                d[(2 * b, 2 * b + 1)] = rat(-1);
                d[(2 * b + 1, 2 * b)] = rat(1);
            }
            d
        }
    };
    let t = random_invertible(rng, n);
    &(&t * &d) * &invert(&t).expect("random_invertible is invertible")
}

/// A random two-step nilpotent algebra: n generators and c central
/// elements, with [e_i, e_j] landing in the center for i < j <= n. The
/// Jacobi identity holds for any choice of central coefficients, so this
/// samples a genuinely random family of valid algebras.
pub fn random_two_step_nilpotent(
    rng: &mut impl Rng,
    n: usize,
    c: usize,
) -> crate::liealg::LieAlgebra {
    let dim = n + c;
    let mut brackets = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let mut terms: Vec<(usize, Rational)> = Vec::new();
            for k in n + 1..=dim {
                if rng.gen_bool(0.5) {
                    terms.push((k, rat(rng.gen_range(-2..=2))));
                }
            }
            if !terms.is_empty() {
                brackets.push((i, j, terms));
            }
        }
    }
    crate::liealg::LieAlgebra::from_brackets(dim, &brackets)
        .expect("two-step nilpotent brackets always satisfy Jacobi")
}

/// Admissible (p, q) pairs for each class at total dimension m.
pub fn admissible_signatures(lambda: Sign, ell: Sign, m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 0..=m {
        let q = m - p;
        let ok = match (lambda, ell) {
            (Sign::Minus, Sign::Plus) => p == q,
            (Sign::Minus, Sign::Minus) => p % 2 == 0 && q % 2 == 0,
            _ => true,
        };
        if ok {
            out.push((p, q));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_invertible_is_invertible() {
        let mut rng = seeded_rng(7);
        for n in 1..6 {
            for _ in 0..5 {
                let m = random_invertible(&mut rng, n);
                assert!(invert(&m).is_ok());
            }
        }
    }

    #[test]
    fn random_metric_has_requested_signature() {
        let mut rng = seeded_rng(11);
        let g = random_metric(&mut rng, 2, 1);
        assert_eq!(g.pq(), (2, 1));
    }

    #[test]
    fn random_structures_verify() {
        let mut rng = seeded_rng(3);
        for (lambda, ell, p, q) in [
            (Sign::Plus, Sign::Plus, 2, 0),
            (Sign::Plus, Sign::Minus, 1, 1),
            (Sign::Minus, Sign::Plus, 1, 1),
            (Sign::Minus, Sign::Minus, 2, 0),
        ] {
            let (metric, s) = random_verified_structure(&mut rng, lambda, ell, p, q).unwrap();
            let space = ExtendedSpace::new(metric, s.k());
            assert!(
                s.verify_algebraic(&space).unwrap().passed(),
                "({lambda},{ell})"
            );
        }
    }

    #[test]
    fn symmetry_elements_preserve_the_data() {
        let mut rng = seeded_rng(5);
        let space = ExtendedSpace::new(PseudoMetric::standard(1, 1), Sign::Plus);
        for _ in 0..5 {
            let c = symmetry_group_element(&mut rng, &space).unwrap();
            assert_eq!(&(&c.transpose() * space.bgram()) * &c, *space.bgram());
            assert_eq!(&c * space.ik(), space.ik() * &c);
        }
    }

    #[test]
    fn involutions_square_correctly() {
        let mut rng = seeded_rng(13);
        for lambda in [Sign::Plus, Sign::Minus] {
            let s = random_involution(&mut rng, lambda, 4);
            assert_eq!(&s * &s, RatMatrix::identity(4).scale(&lambda.rational()));
        }
    }
}
