//! Digit-pair notation for nilpotent Lie algebras: "(0,0,12,13,14+23,34+52)"
//! lists, in slot i, the signed pairs jk with [e_j, e_k] = +/- e_i.
//!
//! Sign convention: a '+jk' term in slot i sets c^i_{jk} = +1. Descending
//! pairs like "52" are accepted and mean c^i_{52} = +1 (= -c^i_{25}).

use num_traits::{One, Signed, Zero};

use super::{BracketSpec, LieAlgebra};
use crate::error::{Error, Result};
use crate::exactla::rat;

/// Parses a digit-pair string into a Jacobi-verified Lie algebra.
pub fn parse_salamon(spec: &str) -> Result<LieAlgebra> {
    let inner = spec
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected parenthesized list, got '{spec}'")))?;
    let slots: Vec<&str> = inner.split(',').map(str::trim).collect();
    let dim = slots.len();
    if dim == 0 || dim > 9 {
        return Err(Error::Parse(format!(
            "digit-pair notation supports 1..=9 basis vectors, got {dim}"
        )));
    }
    let mut brackets: Vec<BracketSpec> = Vec::new();
    for (slot_idx, slot) in slots.iter().enumerate() {
        let target = slot_idx + 1;
        if *slot == "0" {
            continue;
        }
        if slot.is_empty() {
            return Err(Error::Parse(format!("empty slot {target} in '{spec}'")));
        }
        for (sign, term) in signed_terms(slot)? {
            let digits: Vec<u32> = term.chars().map(|c| c.to_digit(10).unwrap_or(0)).collect();
            if term.len() != 2 || digits.iter().any(|&d| d == 0) {
                return Err(Error::Parse(format!(
                    "malformed token '{term}' in slot {target}"
                )));
            }
            let (j, k) = (digits[0] as usize, digits[1] as usize);
            if j > dim || k > dim {
                return Err(Error::IndexOutOfRange(j.max(k), dim));
            }
            if j == k {
                return Err(Error::Parse(format!("repeated index in token '{term}'")));
            }
            brackets.push((j, k, vec![(target, rat(sign))]));
        }
    }
    LieAlgebra::from_brackets(dim, &brackets)
}

fn signed_terms(slot: &str) -> Result<Vec<(i64, String)>> {
    let mut out = Vec::new();
    let mut sign: i64 = 1;
    let mut cur = String::new();
    for ch in slot.chars() {
        match ch {
            '+' | '-' => {
                if !cur.is_empty() {
                    out.push((sign, std::mem::take(&mut cur)));
                }
                sign = if ch == '+' { 1 } else { -1 };
            }
            c if c.is_ascii_digit() => cur.push(c),
            c if c.is_whitespace() => {}
            other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
        }
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("dangling sign in '{slot}'")));
    }
    out.push((sign, cur));
    Ok(out)
}

/// Writes an algebra back to digit-pair notation. Requires dim <= 9 and
/// all structure constants in {0, +1, -1}; each unordered pair is emitted
/// in the orientation that carries the + sign.
pub fn to_salamon(alg: &LieAlgebra) -> Result<String> {
    let dim = alg.dim();
    if dim > 9 {
        return Err(Error::Parse("digit-pair notation needs dim <= 9".into()));
    }
    let mut slots = Vec::with_capacity(dim);
    for target in 0..dim {
        let mut terms: Vec<(usize, usize)> = Vec::new();
        for j in 0..dim {
            for k in j + 1..dim {
                let c = &alg.bracket_basis(j, k)[(target, 0)];
                if c.is_zero() {
                    continue;
                }
                if !c.abs().is_one() {
                    return Err(Error::Parse(format!(
                        "structure constant {} not expressible in digit-pair notation",
                        c
                    )));
                }
                if c.is_positive() {
                    terms.push((j + 1, k + 1));
                } else {
                    terms.push((k + 1, j + 1));
                }
            }
        }
        terms.sort_unstable();
        if terms.is_empty() {
            slots.push("0".to_string());
        } else {
            slots.push(
                terms
                    .iter()
                    .map(|(j, k)| format!("{j}{k}"))
                    .collect::<Vec<_>>()
                    .join("+"),
            );
        }
    }
    Ok(format!("({})", slots.join(",")))
}
