//! Chern characters on P^3: twists, Chern classes, Hilbert polynomials by
//! Riemann-Roch, the collapsing wall and the curve polynomial.

use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ratpoly::{int, rat, RatPoly, Rational};

/// `(ch0, ch1, ch2, ch3)` with `ch2` in `(1/2)Z` and `ch3` in `(1/6)Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumClass {
    ch0: i64,
    ch1: i64,
    ch2: Rational,
    ch3: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernClasses {
    pub c1: i64,
    pub c2: Rational,
    pub c3: Rational,
}

impl NumClass {
    pub fn new(ch0: i64, ch1: i64, ch2: Rational, ch3: Rational) -> Result<Self> {
        let twice = &ch2 * int(2);
        let six = &ch3 * int(6);
        if !twice.is_integer() || !six.is_integer() {
            return Err(Error::NotInLattice);
        }
        Ok(NumClass { ch0, ch1, ch2, ch3 })
    }

    /// `ch(O)`.
    pub fn structure_sheaf() -> Self {
        NumClass {
            ch0: 1,
            ch1: 0,
            ch2: Rational::zero(),
            ch3: Rational::zero(),
        }
    }

    /// `ch(O_Z)` for a subscheme of dimension at most one with
    /// `P_{O_Z}(t) = degree*t + euler`.
    pub fn subscheme(degree: i64, euler: i64) -> Self {
        NumClass {
            ch0: 0,
            ch1: 0,
            ch2: int(degree),
            ch3: int(euler - 2 * degree),
        }
    }

    /// `ch(I_Z)`.
    pub fn ideal(degree: i64, euler: i64) -> Self {
        &Self::structure_sheaf() - &Self::subscheme(degree, euler)
    }

    pub fn ch0(&self) -> i64 {
        self.ch0
    }

    pub fn ch1(&self) -> i64 {
        self.ch1
    }

    pub fn ch2(&self) -> &Rational {
        &self.ch2
    }

    pub fn ch3(&self) -> &Rational {
        &self.ch3
    }

    pub fn rank(&self) -> i64 {
        self.ch0
    }

    pub fn c1(&self) -> i64 {
        self.ch1
    }

    /// `ch0 > 0` and `ch1/ch0` in `(-1, 0]`.
    pub fn is_normalized(&self) -> bool {
        self.ch0 > 0 && -self.ch0 < self.ch1 && self.ch1 <= 0
    }

    /// Multiplication by `exp(kH)`.
    pub fn twist(&self, k: i64) -> Self {
        let k_q = int(k);
        let half_k2 = rat(k * k, 2);
        let sixth_k3 = rat(k * k * k, 6);
        let ch1 = self.ch1 + k * self.ch0;
        let ch2 = &self.ch2 + &k_q * int(self.ch1) + &half_k2 * int(self.ch0);
        let ch3 = &self.ch3 + &k_q * &self.ch2 + &half_k2 * int(self.ch1) + sixth_k3 * int(self.ch0);
        NumClass {
            ch0: self.ch0,
            ch1,
            ch2,
            ch3,
        }
    }

    /// `chi(v(t))` via Riemann-Roch with Todd class `(1, 2, 11/6, 1)`.
    pub fn hilbert_poly(&self) -> RatPoly {
        let ch0 = int(self.ch0);
        let ch1 = int(self.ch1);
        RatPoly::from_coeffs(alloc::vec![
            &self.ch3 + int(2) * &self.ch2 + rat(11, 6) * &ch1 + &ch0,
            &self.ch2 + int(2) * &ch1 + rat(11, 6) * &ch0,
            &ch1 / int(2) + &ch0,
            &ch0 / int(6),
        ])
    }

    /// `chi(v(t))` at an integer twist.
    pub fn euler(&self, t: i64) -> Rational {
        self.hilbert_poly().eval_int(t)
    }
}

pub fn chern_from_ch(v: &NumClass) -> Result<ChernClasses> {
    if !(1..=2).contains(&v.ch0) {
        return Err(Error::UnsupportedRank(v.ch0));
    }
    let c1 = int(v.ch1);
    // ch2 = (c1^2 - 2 c2)/2, ch3 = (c1^3 - 3 c1 c2 + 3 c3)/6
    let c2 = &c1 * &c1 / int(2) - &v.ch2;
    let c3 = (int(6) * &v.ch3 - &c1 * &c1 * &c1 + int(3) * &c1 * &c2) / int(3);
    Ok(ChernClasses { c1: v.ch1, c2, c3 })
}

pub fn ch_from_chern(rank: i64, c: &ChernClasses) -> Result<NumClass> {
    if !(1..=2).contains(&rank) {
        return Err(Error::UnsupportedRank(rank));
    }
    let c1 = int(c.c1);
    let ch2 = (&c1 * &c1 - int(2) * &c.c2) / int(2);
    let ch3 = (&c1 * &c1 * &c1 - int(3) * &c1 * &c.c2 + int(3) * &c.c3) / int(6);
    NumClass::new(rank, c.c1, ch2, ch3)
}

/// `W_empty = (P_{v_k} - rk * P_O) / (rk - 1)`.
pub fn collapsing_wall(v: &NumClass, k: i64) -> Result<RatPoly> {
    let rk = v.rank();
    if rk < 2 {
        return Err(Error::RankTooSmall(rk));
    }
    let p = v.twist(k).hilbert_poly();
    let o = NumClass::structure_sheaf().hilbert_poly();
    let diff = &p - &o.scalar_mul(&int(rk));
    Ok(diff.scalar_mul(&rat(1, rk - 1)))
}

/// Hilbert polynomial of the curve cut out by a section of `v_k`:
/// `P(s) = P_O(s) + P_O(s - m) - P_{v_k}(s - m)` with `m = 2k + c1`.
pub fn curve_poly(v: &NumClass, k: i64) -> Result<RatPoly> {
    if v.rank() != 2 {
        return Err(Error::UnsupportedRank(v.rank()));
    }
    let m = 2 * k + v.c1();
    let o = NumClass::structure_sheaf().hilbert_poly();
    let pk = v.twist(k).hilbert_poly();
    Ok(&(&o + &o.shift(-m)) - &pk.shift(-m))
}

impl Add for &NumClass {
    type Output = NumClass;

    fn add(self, rhs: &NumClass) -> NumClass {
        NumClass {
            ch0: self.ch0 + rhs.ch0,
            ch1: self.ch1 + rhs.ch1,
            ch2: &self.ch2 + &rhs.ch2,
            ch3: &self.ch3 + &rhs.ch3,
        }
    }
}

impl Sub for &NumClass {
    type Output = NumClass;

    fn sub(self, rhs: &NumClass) -> NumClass {
        self + &(-rhs)
    }
}

impl Neg for &NumClass {
    type Output = NumClass;

    fn neg(self) -> NumClass {
        NumClass {
            ch0: -self.ch0,
            ch1: -self.ch1,
            ch2: -&self.ch2,
            ch3: -&self.ch3,
        }
    }
}

impl fmt::Display for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.ch0, self.ch1, self.ch2, self.ch3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(ch0: i64, ch1: i64, ch2: Rational, ch3: Rational) -> NumClass {
        NumClass::new(ch0, ch1, ch2, ch3).unwrap()
    }

    fn p(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    #[test]
    fn twist_examples() {
        let o = NumClass::structure_sheaf();
        assert_eq!(o.twist(1), class(1, 1, rat(1, 2), rat(1, 6)));
        let v = class(2, 0, int(-1), int(0));
        assert_eq!(v.twist(1), class(2, 2, int(0), rat(-2, 3)));
        let w = class(2, 0, int(-3), int(4));
        assert_eq!(w.twist(1).twist(-1), w);
    }

    #[test]
    fn lattice_is_enforced() {
        assert_eq!(NumClass::new(2, 0, rat(1, 3), int(0)), Err(Error::NotInLattice));
        assert_eq!(NumClass::new(2, 0, int(0), rat(1, 4)), Err(Error::NotInLattice));
    }

    #[test]
    fn chern_examples() {
        let c = chern_from_ch(&class(2, 0, int(-1), int(0))).unwrap();
        assert_eq!((c.c1, c.c2.clone(), c.c3.clone()), (0, int(1), int(0)));
        let c = chern_from_ch(&class(2, 0, int(-2), int(1))).unwrap();
        assert_eq!((c.c1, c.c2.clone(), c.c3.clone()), (0, int(2), int(2)));
        let c = chern_from_ch(&NumClass::structure_sheaf()).unwrap();
        assert_eq!((c.c1, c.c2, c.c3), (0, int(0), int(0)));
        assert_eq!(
            chern_from_ch(&class(3, 0, int(0), int(0))),
            Err(Error::UnsupportedRank(3))
        );
    }

    #[test]
    fn hilbert_poly_examples() {
        assert_eq!(NumClass::structure_sheaf().hilbert_poly(), RatPoly::binomial(3, 3));
        let v = class(2, 0, int(-1), int(0));
        assert_eq!(v.hilbert_poly(), p("1/3*t^3+2*t^2+8/3*t"));
        assert_eq!(v.euler(1), int(5));
        let w = class(2, 0, int(-2), int(0));
        assert_eq!((w.euler(1), w.euler(-1)), (int(2), int(-2)));
    }

    #[test]
    fn collapsing_wall_examples() {
        let v = class(2, 0, int(-1), int(0));
        assert_eq!(collapsing_wall(&v, 1).unwrap(), p("t^2+4*t+3"));
        let v = class(2, -1, rat(-1, 2), rat(5, 6));
        assert_eq!(collapsing_wall(&v, 1).unwrap(), p("1/2*t^2+3/2*t+1"));
        let v = class(2, 0, int(-3), int(4));
        assert_eq!(collapsing_wall(&v, 1).unwrap(), p("t^2+2*t+1"));
        assert_eq!(
            collapsing_wall(&NumClass::structure_sheaf(), 1),
            Err(Error::RankTooSmall(1))
        );
    }

    #[test]
    fn curve_poly_examples() {
        let cases = [
            (class(2, 0, int(-1), int(0)), "2t+2"),
            (class(2, 0, int(-3), int(4)), "4t"),
            (class(2, 0, int(-2), int(0)), "3t+3"),
            (class(2, 0, int(-2), int(1)), "3t+2"),
            (class(2, -1, rat(-1, 2), rat(5, 6)), "t+1"),
        ];
        for (v, expected) in cases {
            assert_eq!(curve_poly(&v, 1).unwrap(), p(expected), "{v}");
        }
    }

    #[test]
    fn ideal_and_subscheme_polys() {
        // a line has P = t+1, its ideal P_O - (t+1)
        assert_eq!(NumClass::subscheme(1, 1).hilbert_poly(), p("t+1"));
        assert_eq!(
            NumClass::ideal(1, 1).hilbert_poly(),
            &RatPoly::binomial(3, 3) - &p("t+1")
        );
        assert_eq!(NumClass::subscheme(0, 3).hilbert_poly(), p("3"));
    }
}
