//! Quadratic extensions of Q: elements a + b*iota with iota^2 = kappa.
//!
//! kappa = -1 gives the Gaussian rationals (a subfield of C); kappa = +1
//! gives the rational Lorentz numbers, which are not a field: the null
//! elements e = (1 - eps)/2 and ebar = (1 + eps)/2 are idempotent zero
//! divisors. Real elements (b = 0) belong to both rings, so they carry an
//! inert kappa tag and mix freely; combining two genuinely imaginary
//! elements of different rings is an error.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::scalar::{rat, rational_to_string, Rational, Scalar, Sign};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Quad {
    pub re: Rational,
    pub im: Rational,
    pub kappa: Sign,
}

/// Binary operations exposed through [`quad_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Mul,
    /// Conjugation of the first operand; the second is ignored.
    Conj,
}

impl Quad {
    pub fn new(re: Rational, im: Rational, kappa: Sign) -> Self {
        Quad { re, im, kappa }
    }

    pub fn from_rational(re: Rational, kappa: Sign) -> Self {
        Quad::new(re, Rational::zero(), kappa)
    }

    /// The imaginary unit i (kappa = -1).
    pub fn i() -> Self {
        Quad::new(rat(0), rat(1), Sign::Minus)
    }

    /// The hyperbolic unit eps (kappa = +1).
    pub fn eps() -> Self {
        Quad::new(rat(0), rat(1), Sign::Plus)
    }

    /// Null Lorentz number e = (1 - eps)/2.
    pub fn null_e() -> Self {
        Quad::new(
            Rational::new(1.into(), 2.into()),
            Rational::new((-1).into(), 2.into()),
            Sign::Plus,
        )
    }

    /// Null Lorentz number ebar = (1 + eps)/2.
    pub fn null_ebar() -> Self {
        Quad::new(
            Rational::new(1.into(), 2.into()),
            Rational::new(1.into(), 2.into()),
            Sign::Plus,
        )
    }

    pub fn conj(&self) -> Self {
        Quad::new(self.re.clone(), -self.im.clone(), self.kappa)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Ring norm a^2 - kappa b^2 (= x * conj(x)).
    pub fn norm(&self) -> Rational {
        &self.re * &self.re - self.kappa.rational() * &self.im * &self.im
    }

    /// The kappa of the combined ring, or an error when two genuinely
    /// imaginary elements live in different rings.
    fn join_kappa(&self, other: &Quad) -> Result<Sign> {
        if self.is_real() {
            Ok(other.kappa)
        } else if other.is_real() || self.kappa == other.kappa {
            Ok(self.kappa)
        } else {
            Err(Error::MixedKappa(self.kappa, other.kappa))
        }
    }

    pub fn checked_add(&self, other: &Quad) -> Result<Quad> {
        let kappa = self.join_kappa(other)?;
        Ok(Quad::new(&self.re + &other.re, &self.im + &other.im, kappa))
    }

    pub fn checked_sub(&self, other: &Quad) -> Result<Quad> {
        self.checked_add(&(-other.clone()))
    }

    pub fn checked_mul(&self, other: &Quad) -> Result<Quad> {
        let kappa = self.join_kappa(other)?;
        // (a + b iota)(c + d iota) = (ac + kappa bd) + (ad + bc) iota
        let re = &self.re * &other.re + kappa.rational() * &self.im * &other.im;
        let im = &self.re * &other.im + &self.im * &other.re;
        Ok(Quad::new(re, im, kappa))
    }

    /// Scales by a rational.
    pub fn scale(&self, c: &Rational) -> Quad {
        Quad::new(&self.re * c, &self.im * c, self.kappa)
    }
}

/// Binary arithmetic surface with explicit mixed-kappa rejection.
pub fn quad_arith(a: &Quad, b: &Quad, op: QuadOp) -> Result<Quad> {
    match op {
        QuadOp::Add => a.checked_add(b),
        QuadOp::Mul => a.checked_mul(b),
        QuadOp::Conj => Ok(a.conj()),
    }
}

impl PartialEq for Quad {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re
            && self.im == other.im
            && (self.im.is_zero() || self.kappa == other.kappa)
    }
}

impl Add for Quad {
    type Output = Quad;
    fn add(self, rhs: Quad) -> Quad {
        self.checked_add(&rhs).expect("mixed kappa in +")
    }
}

impl Sub for Quad {
    type Output = Quad;
    fn sub(self, rhs: Quad) -> Quad {
        self.checked_sub(&rhs).expect("mixed kappa in -")
    }
}

impl Mul for Quad {
    type Output = Quad;
    fn mul(self, rhs: Quad) -> Quad {
        self.checked_mul(&rhs).expect("mixed kappa in *")
    }
}

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad::new(-self.re, -self.im, self.kappa)
    }
}

impl Zero for Quad {
    fn zero() -> Self {
        Quad::from_rational(Rational::zero(), Sign::Minus)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Quad {
    fn one() -> Self {
        Quad::from_rational(Rational::one(), Sign::Minus)
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = match self.kappa {
            Sign::Minus => "i",
            Sign::Plus => "eps",
        };
        if self.im.is_zero() {
            write!(f, "{}", rational_to_string(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}*{}", rational_to_string(&self.im), unit)
        } else if self.im.is_negative() {
            write!(
                f,
                "{}-{}*{}",
                rational_to_string(&self.re),
                rational_to_string(&-self.im.clone()),
                unit
            )
        } else {
            write!(
                f,
                "{}+{}*{}",
                rational_to_string(&self.re),
                rational_to_string(&self.im),
                unit
            )
        }
    }
}

impl Scalar for Quad {
    fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::ZeroDivisor(self.to_string()));
        }
        Ok(self.conj().scale(&n.recip()))
    }

    fn elimination_guard(&self) -> Result<()> {
        if self.kappa == Sign::Plus && !self.im.is_zero() {
            Err(Error::LorentzElimination)
        } else {
            Ok(())
        }
    }
}
