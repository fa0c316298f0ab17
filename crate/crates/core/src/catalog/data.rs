//! Raw data of the built-in examples: structure-constant strings, metric
//! Gram matrices, the sparse endomorphism tables (A, B) of each structure,
//! and the mixed cotangent bracket tables used as cross-checks.

use super::MixedTerm;
use crate::exactla::{frac, rat, Rational};
use crate::RatMatrix;

pub(super) fn salamon_string(name: &str) -> &'static str {
    match name {
        "g1" => "(0,0,12,13,14+23,34+52)",
        "g2" => "(0,0,12,13,14,34+52)",
        "g3" => "(0,0,0,12,13,14+35)",
        "g4" => "(0,0,0,12,23,14+35)",
        "g5" => "(0,0,0,0,12,15+34)",
        _ => unreachable!("unknown nilpotent entry"),
    }
}

pub(super) fn sparse(dim: usize, entries: &[(usize, usize, Rational)]) -> RatMatrix {
    let mut m = RatMatrix::zeros(dim, dim);
    for (i, j, v) in entries {
        m[(i - 1, j - 1)] = v.clone();
    }
    m
}

pub(super) fn a_table(name: &str) -> Vec<(usize, usize, Rational)> {
    let raw: &[(usize, usize, i64)] = match name {
        "g1" => &[
            (1, 2, 1),
            (4, 3, 1),
            (4, 4, 1),
            (5, 5, 1),
            (6, 5, 1),
            (2, 1, -1),
            (3, 2, -1),
            (3, 3, -1),
            (6, 6, -1),
        ],
        "g2" => &[
            (1, 1, 1),
            (3, 3, 1),
            (6, 6, 1),
            (1, 2, -1),
            (2, 2, -1),
            (2, 1, 2),
        ],
        "g3" => &[(1, 2, -1), (2, 1, 1)],
        "g4" => &[
            (1, 1, 1),
            (1, 2, -1),
            (2, 2, -1),
            (3, 3, -1),
            (6, 6, -1),
            (2, 1, 2),
        ],
        "g5" => &[(1, 2, 1), (4, 3, 1), (2, 1, -1), (3, 4, -1)],
        _ => unreachable!(),
    };
    raw.iter().map(|&(i, j, v)| (i, j, rat(v))).collect()
}

pub(super) fn b_table(name: &str) -> Vec<(usize, usize, Rational)> {
    let raw: &[(usize, usize, i64)] = match name {
        "g1" => &[
            (3, 5, -1),
            (4, 6, -1),
            (5, 2, -1),
            (6, 2, -1),
            (3, 6, 2),
            (5, 3, 2),
            (6, 4, 2),
            (5, 1, 1),
            (5, 4, 4),
        ],
        "g2" => &[(3, 6, -1), (4, 5, -1), (5, 4, 1), (6, 3, 2)],
        "g3" => &[(3, 6, -1), (4, 5, -1), (5, 4, 1), (6, 3, 1)],
        "g4" => &[(3, 6, -1), (4, 5, -1), (5, 4, 1), (6, 3, 2)],
        "g5" => &[(5, 6, -1), (6, 5, 1)],
        _ => unreachable!(),
    };
    raw.iter().map(|&(i, j, v)| (i, j, rat(v))).collect()
}

pub(super) fn metric_diag(name: &str) -> Vec<Rational> {
    match name {
        "g2" => vec![rat(-2), rat(1), rat(1), rat(1), rat(1), frac(1, 2)],
        "g3" => vec![rat(-1), rat(1), rat(1), rat(1), rat(1), rat(1)],
        "g4" => vec![rat(-2), rat(1), rat(2), rat(1), rat(1), rat(1)],
        "g5" => vec![rat(-1), rat(1), rat(-1), rat(1), rat(1), rat(1)],
        _ => unreachable!("g1 uses a basis presentation; see g1_metric_basis"),
    }
}

/// The first metric is presented by its Gram matrix diag(4,-4,2,-2,-2,2)
/// with respect to the ordered basis
/// {e4, -4e1+e4, -3e1-e2+e3, -e1+e2+e3, e6, 2e5+e6}.
pub(super) fn g1_metric_basis() -> (RatMatrix, RatMatrix) {
    let c = RatMatrix::diagonal(vec![rat(4), rat(-4), rat(2), rat(-2), rat(-2), rat(2)]);
    let cols: [[i64; 6]; 6] = [
        [0, 0, 0, 1, 0, 0],
        [-4, 0, 0, 1, 0, 0],
        [-3, -1, 1, 0, 0, 0],
        [-1, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 2, 1],
    ];
    let p = RatMatrix::from_fn(6, 6, |r, cc| rat(cols[cc][r]));
    (c, p)
}

/// Shorthand for mixed cotangent table rows: `V(a, b, slot)` encodes
/// [e_a, e_b*] = e_slot* and `D(a, b, slot)` encodes [e_a*, e_b] = e_slot*
/// (i.e. [e_b, e_a*] = -e_slot*).
#[derive(Clone, Copy)]
pub(super) enum Term {
    V(usize, usize, usize),
    D(usize, usize, usize),
}

impl Term {
    pub(super) fn to_mixed(self) -> MixedTerm {
        match self {
            Term::V(a, b, slot) => MixedTerm {
                i: a,
                j: b,
                k: slot,
                c: rat(1),
            },
            Term::D(a, b, slot) => MixedTerm {
                i: b,
                j: a,
                k: slot,
                c: rat(-1),
            },
        }
    }
}

pub(super) fn nil_mixed_table(name: &str) -> Vec<MixedTerm> {
    use Term::{D, V};
    let terms: &[Term] = match name {
        "g1" => &[
            V(2, 3, 1),
            V(3, 4, 1),
            V(4, 5, 1),
            D(3, 1, 2),
            V(3, 5, 2),
            D(6, 5, 2),
            D(4, 1, 3),
            D(5, 2, 3),
            V(4, 6, 3),
            D(5, 1, 4),
            D(6, 3, 4),
            V(2, 6, 5),
        ],
        "g2" => &[
            V(2, 3, 1),
            V(3, 4, 1),
            V(4, 5, 1),
            D(3, 1, 2),
            D(6, 5, 2),
            D(4, 1, 3),
            V(4, 6, 3),
            D(5, 1, 4),
            D(6, 3, 4),
            V(2, 6, 5),
        ],
        "g3" => &[
            V(2, 4, 1),
            V(3, 5, 1),
            V(4, 6, 1),
            D(4, 1, 2),
            D(5, 1, 3),
            V(5, 6, 3),
            D(6, 1, 4),
            D(6, 3, 5),
        ],
        "g4" => &[
            V(2, 4, 1),
            V(4, 6, 1),
            D(4, 1, 2),
            V(3, 5, 2),
            D(5, 2, 3),
            V(5, 6, 3),
            D(6, 1, 4),
            D(6, 3, 5),
        ],
        "g5" => &[
            V(2, 5, 1),
            V(5, 6, 1),
            D(5, 1, 2),
            V(4, 6, 3),
            D(6, 3, 4),
            D(6, 1, 5),
        ],
        _ => unreachable!(),
    };
    terms.iter().map(|t| t.to_mixed()).collect()
}

/// Brackets of the four-dimensional solvable algebra carrying the
/// homogeneous metric of the ellipse space: [e3,e4]=2e4, [e4,e2]=2e1,
/// [e3,e1]=e1, [e2,e3]=e2 (and [e1,e2]=[e1,e4]=0).
pub(super) fn ellipse_brackets() -> Vec<crate::liealg::BracketSpec> {
    vec![
        (3, 4, vec![(4, rat(2))]),
        (4, 2, vec![(1, rat(2))]),
        (3, 1, vec![(1, rat(1))]),
        (2, 3, vec![(2, rat(1))]),
    ]
}

/// [e1,e1*]=e3*, [e2,e1*]=2e4*, [e2,e2*]=-e3*, [e3,e1*]=-e1*,
/// [e3,e2*]=e2*, [e3,e4*]=-2e4*, [e4,e1*]=-2e2*, [e4,e4*]=2e3*.
pub(super) fn ellipse_mixed_table() -> Vec<MixedTerm> {
    let raw: [(usize, usize, usize, i64); 8] = [
        (1, 1, 3, 1),
        (2, 1, 4, 2),
        (2, 2, 3, -1),
        (3, 1, 1, -1),
        (3, 2, 2, 1),
        (3, 4, 4, -2),
        (4, 1, 2, -2),
        (4, 4, 3, 2),
    ];
    raw.iter()
        .map(|&(i, j, k, c)| MixedTerm { i, j, k, c: rat(c) })
        .collect()
}

/// The product structure r = diag(1,1,-1,-1) on the solvable algebra.
pub(super) fn ellipse_r_diag() -> Vec<Rational> {
    vec![rat(1), rat(1), rat(-1), rat(-1)]
}

/// omega_eps as a matrix: diag(j, eps j) with j = [[0,-1],[1,0]].
pub(super) fn ellipse_omega(eps: crate::Sign) -> RatMatrix {
    let mut w = RatMatrix::zeros(4, 4);
    w[(0, 1)] = rat(-1);
    w[(1, 0)] = rat(1);
    w[(2, 3)] = -eps.rational();
    w[(3, 2)] = eps.rational();
    w
}

/// Default rational curve samples: both endpoints and three generic points,
/// enough to pin every cleared-denominator polynomial identity degree.
pub(super) fn default_samples() -> Vec<Rational> {
    vec![rat(0), rat(1), frac(1, 2), rat(-3), frac(7, 5)]
}
