//! Exact polynomials in one variable `t` with rational coefficients.
//!
//! Polynomials are ordered lexicographically: `a < b` iff the leading
//! coefficient of `b - a` is positive. This is the order used to compare
//! stability parameters and reduced Hilbert polynomials.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Returns `q` as an `i64` when it is an integer that fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

/// Coefficients ascend by degree; the highest stored coefficient is nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `d*t + c`.
    pub fn linear(d: i64, c: i64) -> Self {
        Self::from_ints(&[c, d])
    }

    /// `binom(t + a, n)` as a polynomial in `t`.
    pub fn binomial(a: i64, n: u32) -> Self {
        let mut p = Self::one();
        for j in 0..n {
            let factor = Self::from_coeffs(vec![int(a - j as i64), Rational::one()]);
            p = &p * &factor;
        }
        let mut fact = Rational::one();
        for j in 1..=n {
            fact *= int(j as i64);
        }
        p.scalar_mul(&fact.recip())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lex-positive: `0 < self`.
    pub fn is_positive(&self) -> bool {
        self.leading().is_some_and(Signed::is_positive)
    }

    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let n = self.coeffs.len().max(other.coeffs.len());
        for i in (0..n).rev() {
            match self.coeff(i).cmp(&other.coeff(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// `q(t) = p(t + k)`.
    pub fn shift(&self, k: i64) -> Self {
        let step = Self::from_coeffs(vec![int(k), Rational::one()]);
        let mut q = Self::zero();
        for c in self.coeffs.iter().rev() {
            q = &(&q * &step) + &Self::constant(c.clone());
        }
        q
    }

    pub fn scalar_mul(&self, q: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * q).collect())
    }

    pub fn eval_at(&self, t0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t0 + c;
        }
        acc
    }

    pub fn eval_int(&self, t0: i64) -> Rational {
        self.eval_at(&int(t0))
    }

    /// `(d, chi)` when `self = d*t + chi` with integer coefficients.
    pub fn as_integer_linear(&self) -> Option<(i64, i64)> {
        if self.coeffs.len() > 2 {
            return None;
        }
        Some((to_i64(&self.coeff(1))?, to_i64(&self.coeff(0))?))
    }

    /// Parses the text produced by `Display`, e.g. `1/3*t^3+3*t^2+23/3*t+5`.
    /// Whitespace is ignored and `*` between a coefficient and `t` is optional.
    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let bytes = s.as_bytes();
        let mut start = 0;
        let mut negative = false;
        if bytes[0] == b'+' || bytes[0] == b'-' {
            negative = bytes[0] == b'-';
            start = 1;
        }
        let first = start;
        for i in first..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && i > start {
                terms.push((negative, &s[start..i]));
                negative = bytes[i] == b'-';
                start = i + 1;
            }
        }
        terms.push((negative, &s[start..]));

        let mut p = Self::zero();
        for (neg, term) in terms {
            let (coef, deg) = parse_term(term)?;
            let coef = if neg { -coef } else { coef };
            let mut cs = vec![Rational::zero(); deg + 1];
            cs[deg] = coef;
            p = &p + &Self::from_coeffs(cs);
        }
        Ok(p)
    }
}

const MAX_PARSE_DEGREE: usize = 64;

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad coefficient '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_term(term: &str) -> Result<(Rational, usize)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let Some(tpos) = term.find('t') else {
        return Ok((parse_rational(term)?, 0));
    };
    let coef_text = term[..tpos].strip_suffix('*').unwrap_or(&term[..tpos]);
    let coef = if coef_text.is_empty() {
        Rational::one()
    } else {
        parse_rational(coef_text)?
    };
    let rest = &term[tpos + 1..];
    let deg = if rest.is_empty() {
        1
    } else {
        let exp = rest
            .strip_prefix('^')
            .ok_or_else(|| Error::Parse(format!("bad term '{term}'")))?;
        exp.parse::<usize>()
            .ok()
            .filter(|&d| d <= MAX_PARSE_DEGREE)
            .ok_or_else(|| Error::Parse(format!("bad exponent in '{term}'")))?
    };
    Ok((coef, deg))
}

impl Ord for RatPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl PartialOrd for RatPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for RatPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPoly {
            type Output = RatPoly;

            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        -&self
    }
}
