//! Scalar rings for exact linear algebra: Q and its quadratic extensions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar (arbitrary precision, always reduced, denominator > 0).
pub type Rational = num_rational::BigRational;

/// A sign, the value set {+1, -1} used for lambda, ell, k, kappa, delta and epsilon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn rational(self) -> Rational {
        Rational::from_integer(BigInt::from(self.int()))
    }

    pub fn from_int(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("expected +1 or -1, got {other}"))),
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

impl serde::Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_i64(self.int())
    }
}

impl<'de> serde::Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v = i64::deserialize(de)?;
        Sign::from_int(v).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction n/d. Panics on d = 0 (programming error).
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "n" or "n/d" exactly; rejects zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
    let d = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| Error::Parse(format!("bad rational '{s}'")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in '{s}'")));
    }
    Ok(Rational::new(n, d))
}

/// Formats a rational as "n" or "n/d" (exact, locale independent).
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Entries a matrix may carry: exact ring arithmetic plus the partial
/// inversion used by Gaussian elimination.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Multiplicative inverse. Errors on zero and on zero divisors.
    fn inverse(&self) -> Result<Self>;

    /// Whether this entry is admissible for Gaussian elimination over a field.
    /// Lorentz numbers with nonzero imaginary part are rejected (zero divisors).
    fn elimination_guard(&self) -> Result<()>;
}

impl Scalar for Rational {
    fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }

    fn elimination_guard(&self) -> Result<()> {
        Ok(())
    }
}

/// Sign of a rational as -1, 0, +1.
pub fn rational_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
