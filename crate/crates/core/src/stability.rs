//! Reduced delta-Hilbert polynomials and sub-pair comparisons.

use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::numclass::NumClass;
use crate::ratpoly::{rat, RatPoly, Rational};

/// A coherent pair `(E, s)` up to numerical data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClass {
    pub cls: NumClass,
    pub has_section: bool,
}

impl PairClass {
    pub fn new(cls: NumClass, has_section: bool) -> Self {
        PairClass { cls, has_section }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub destabilizes: bool,
    /// Equality of reduced polynomials: the parameter sits on a wall.
    pub strictly: bool,
}

/// `(P + eps*delta) / rk`.
pub fn reduced_poly(p: &PairClass, delta: &RatPoly) -> Result<RatPoly> {
    let rk = p.cls.rank();
    if rk <= 0 {
        return Err(Error::RankTooSmall(rk));
    }
    let mut poly = p.cls.hilbert_poly();
    if p.has_section {
        poly = &poly + delta;
    }
    Ok(poly.scalar_mul(&rat(1, rk)))
}

pub fn compare(sub: &PairClass, whole: &PairClass, delta: &RatPoly) -> Result<Verdict> {
    let ord = reduced_poly(sub, delta)?.lex_cmp(&reduced_poly(whole, delta)?);
    Ok(Verdict {
        destabilizes: ord != Ordering::Less,
        strictly: ord == Ordering::Equal,
    })
}

/// `(1/(rank-1), 1/rank)`: below the first, delta-stable pairs have
/// semistable sheaves; below the second, stable sheaves give stable pairs.
pub fn chamber_thresholds(rank: i64) -> Result<(Rational, Rational)> {
    if rank < 2 {
        return Err(Error::RankTooSmall(rank));
    }
    Ok((rat(1, rank - 1), rat(1, rank)))
}

/// Whether a constant parameter lies below both thresholds for `rank`.
pub fn in_gieseker_regime(delta: &RatPoly, rank: i64) -> Result<bool> {
    let (_, converse) = chamber_thresholds(rank)?;
    Ok(delta.is_positive() && delta.degree() == Some(0) && delta.coeff(0) < converse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::int;

    fn p(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    fn whole() -> PairClass {
        let v = NumClass::new(2, 0, int(-1), int(0)).unwrap();
        PairClass::new(v.twist(1), true)
    }

    #[test]
    fn reduced_examples() {
        let o = PairClass::new(NumClass::structure_sheaf(), true);
        assert_eq!(
            reduced_poly(&o, &p("t+1")).unwrap(),
            &RatPoly::binomial(3, 3) + &p("t+1")
        );
        assert_eq!(
            reduced_poly(&whole(), &RatPoly::zero()).unwrap(),
            p("1/6*t^3+3/2*t^2+23/6*t+5/2")
        );
        let ideal = PairClass::new(NumClass::ideal(1, 1), false);
        assert_eq!(
            reduced_poly(&ideal, &p("t^2")).unwrap(),
            NumClass::ideal(1, 1).hilbert_poly()
        );
    }

    #[test]
    fn compare_examples() {
        let o = PairClass::new(NumClass::structure_sheaf(), true);
        let w = whole();
        let at = |d: &str| compare(&o, &w, &p(d)).unwrap();
        assert_eq!(
            at("t^2+4*t+3"),
            Verdict {
                destabilizes: true,
                strictly: true
            }
        );
        assert_eq!(
            at("t^2+4*t+4"),
            Verdict {
                destabilizes: true,
                strictly: false
            }
        );
        assert_eq!(
            at("t^2+4*t+2"),
            Verdict {
                destabilizes: false,
                strictly: false
            }
        );
    }

    #[test]
    fn thresholds() {
        assert_eq!(chamber_thresholds(2), Ok((int(1), rat(1, 2))));
        assert_eq!(chamber_thresholds(3), Ok((rat(1, 2), rat(1, 3))));
        assert_eq!(chamber_thresholds(1), Err(Error::RankTooSmall(1)));
        assert_eq!(in_gieseker_regime(&p("1/3"), 2), Ok(true));
        assert_eq!(in_gieseker_regime(&p("1/2"), 2), Ok(false));
        assert_eq!(in_gieseker_regime(&p("t"), 2), Ok(false));
    }
}
