//! Numerical subschemes of P^3 of dimension at most one: genus bounds,
//! planar decompositions, relative Hilbert scheme dimensions and the
//! strata `Z_i` of the planar curve family.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::numclass::NumClass;
use crate::ratpoly::RatPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemeDim {
    Empty,
    Zero,
    One,
}

/// `P_{O_Z}(t) = degree*t + euler`. For a curve, `points` is the length of
/// the 0-dimensional part in the decomposition whose pure part is a plane
/// curve, `euler - min_euler(degree)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchemeClass {
    pub dim: SchemeDim,
    pub degree: i64,
    pub euler: i64,
    pub planar_pure: bool,
    pub points: i64,
}

impl SchemeClass {
    pub fn empty() -> Self {
        SchemeClass {
            dim: SchemeDim::Empty,
            degree: 0,
            euler: 0,
            planar_pure: true,
            points: 0,
        }
    }

    /// `n` points; `n = 0` gives the empty scheme.
    pub fn points(n: i64) -> Self {
        Self::from_numbers(0, n, true)
    }

    /// Dispatches on `(degree, euler)`: empty, 0-dimensional or a curve.
    pub fn from_numbers(degree: i64, euler: i64, planar_pure: bool) -> Self {
        match (degree, euler) {
            (0, 0) => Self::empty(),
            (0, n) => SchemeClass {
                dim: SchemeDim::Zero,
                degree: 0,
                euler: n,
                planar_pure: true,
                points: n,
            },
            (d, e) => SchemeClass {
                dim: SchemeDim::One,
                degree: d,
                euler: e,
                planar_pure: planar_pure || d == 1,
                points: e - plane_curve_euler(d),
            },
        }
    }

    pub fn from_poly(p: &RatPoly, planar_pure: bool) -> Result<Self> {
        let (d, e) = p.as_integer_linear().ok_or(Error::NonLinear)?;
        if d < 0 {
            return Err(Error::InvalidDegree(d));
        }
        Ok(Self::from_numbers(d, e, planar_pure))
    }

    pub fn hilbert_poly(&self) -> RatPoly {
        RatPoly::linear(self.degree, self.euler)
    }

    /// `ch(O_Z)`.
    pub fn class(&self) -> NumClass {
        NumClass::subscheme(self.degree, self.euler)
    }

    pub fn is_empty(&self) -> bool {
        self.dim == SchemeDim::Empty
    }
}

impl fmt::Display for SchemeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hilbert_poly())
    }
}

fn plane_curve_euler(d: i64) -> i64 {
    (3 * d - d * d) / 2
}

/// Euler characteristic of a plane curve of degree `d`, the minimum over all
/// curves of that degree: `1 - binom(d-1, 2)`.
pub fn min_euler(d: i64) -> Result<i64> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    Ok(plane_curve_euler(d))
}

pub fn realizable(c: &SchemeClass) -> bool {
    match c.dim {
        SchemeDim::Empty => c.degree == 0 && c.euler == 0,
        SchemeDim::Zero => c.degree == 0 && c.euler >= 1,
        SchemeDim::One => c.degree >= 1 && c.euler >= plane_curve_euler(c.degree),
    }
}

/// Splits `d*t + chi` into a plane curve of degree `d` plus points:
/// `(d, min_euler(d), chi - min_euler(d))`.
pub fn split_planar(p: &RatPoly) -> Result<(i64, i64, i64)> {
    let (d, chi) = p.as_integer_linear().ok_or(Error::NonLinear)?;
    let e = min_euler(d)?;
    if chi < e {
        return Err(Error::Unrealizable { degree: d, euler: chi });
    }
    Ok((d, e, chi - e))
}

/// Dimension of the relative Hilbert scheme of a degree-`d` plane curve plus
/// `n` points in the moving plane, over the dual P^3.
pub fn planar_relhilb_dim(d: i64, n: i64) -> Result<i64> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    Ok(3 + (d + 2) * (d + 1) / 2 - 1 + 2 * n)
}

/// Dimension of the family of pairs `(I_A(1), 1)`, i.e. of `A` together with
/// a plane containing it.
pub fn section_family_dim(a: &SchemeClass) -> Result<i64> {
    if !realizable(a) {
        return Err(Error::Unrealizable {
            degree: a.degree,
            euler: a.euler,
        });
    }
    match a.dim {
        SchemeDim::One => planar_relhilb_dim(a.degree, a.points),
        _ => Ok(3 + 2 * a.points),
    }
}

/// Dimension of the family of a general member with the given numbers and
/// no plane attached: a plane curve (a line for degree 1) plus free points.
pub fn free_family_dim(b: &SchemeClass) -> Result<i64> {
    if !realizable(b) {
        return Err(Error::Unrealizable {
            degree: b.degree,
            euler: b.euler,
        });
    }
    Ok(match b.dim {
        SchemeDim::Empty => 0,
        SchemeDim::Zero => 3 * b.points,
        SchemeDim::One if b.degree == 1 => 4 + 3 * b.points,
        SchemeDim::One => 3 + (b.degree + 2) * (b.degree + 1) / 2 - 1 + 3 * b.points,
    })
}

/// JSON-facing description of a curve `Y` of a saturated pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveDescription {
    pub planar_d: i64,
    pub planar_chi: i64,
    pub off_plane_points: i64,
    pub nonplanar: bool,
}

impl CurveDescription {
    pub fn hilbert_poly(&self) -> RatPoly {
        RatPoly::linear(self.planar_d, self.planar_chi + self.off_plane_points)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StratumLabel {
    Z(i64),
    /// Nonplanar pure part: the curve survives every wall of the 0-dimensional family.
    OutsideFamily,
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StratumLabel::Z(i) => write!(f, "Z{i}"),
            StratumLabel::OutsideFamily => write!(f, "outside family (survives)"),
        }
    }
}

pub fn classify_stratum(y: &CurveDescription, curve: &RatPoly, l_v: i64) -> Result<StratumLabel> {
    if &y.hilbert_poly() != curve {
        return Err(Error::InconsistentPolynomial);
    }
    if y.off_plane_points < 0 {
        return Err(Error::Unrealizable {
            degree: 0,
            euler: y.off_plane_points,
        });
    }
    if y.nonplanar {
        return Ok(StratumLabel::OutsideFamily);
    }
    let e = min_euler(y.planar_d)?;
    if y.planar_chi < e {
        return Err(Error::Unrealizable {
            degree: y.planar_d,
            euler: y.planar_chi,
        });
    }
    if y.off_plane_points > l_v {
        return Err(Error::StratumOutOfRange {
            index: y.off_plane_points,
            l: l_v,
        });
    }
    Ok(StratumLabel::Z(y.off_plane_points))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub index: i64,
    pub degree: i64,
    pub in_plane_points: i64,
    pub off_plane_points: i64,
    pub dim: i64,
}

/// `Z_0, ..., Z_l` for plane curves of degree `d` with `l` points, `Z_i`
/// having `i` of them off the plane.
pub fn strata(d: i64, l: i64) -> Result<Vec<Stratum>> {
    let base = planar_relhilb_dim(d, l)?;
    Ok((0..=l)
        .map(|i| Stratum {
            index: i,
            degree: d,
            in_plane_points: l - i,
            off_plane_points: i,
            dim: base + i,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_euler_examples() {
        assert_eq!(min_euler(1), Ok(1));
        assert_eq!(min_euler(3), Ok(0));
        assert_eq!(min_euler(4), Ok(-2));
        assert_eq!(min_euler(0), Err(Error::InvalidDegree(0)));
    }

    #[test]
    fn realizable_examples() {
        assert!(!realizable(&SchemeClass::from_numbers(2, 0, true)));
        assert!(realizable(&SchemeClass::from_numbers(2, 1, true)));
        assert!(realizable(&SchemeClass::from_numbers(3, 2, true)));
        assert!(realizable(&SchemeClass::empty()));
        assert!(!realizable(&SchemeClass::from_numbers(0, -1, true)));
    }

    #[test]
    fn split_planar_examples() {
        assert_eq!(split_planar(&RatPoly::linear(2, 4)), Ok((2, 1, 3)));
        assert_eq!(split_planar(&RatPoly::linear(3, 2)), Ok((3, 0, 2)));
        assert_eq!(split_planar(&RatPoly::linear(1, 1)), Ok((1, 1, 0)));
        assert!(split_planar(&RatPoly::from_ints(&[0, 0, 1])).is_err());
        assert!(split_planar(&RatPoly::linear(2, 0)).is_err());
    }

    #[test]
    fn relhilb_examples() {
        assert_eq!(planar_relhilb_dim(3, 2), Ok(16));
        assert_eq!(planar_relhilb_dim(3, 1), Ok(14));
        assert_eq!(planar_relhilb_dim(2, 2), Ok(12));
    }

    #[test]
    fn classify_examples() {
        let curve = RatPoly::linear(4, 0);
        let quartic = |chi, off, nonplanar| CurveDescription {
            planar_d: 4,
            planar_chi: chi,
            off_plane_points: off,
            nonplanar,
        };
        assert_eq!(
            classify_stratum(&quartic(0, 0, false), &curve, 2),
            Ok(StratumLabel::Z(0))
        );
        assert_eq!(
            classify_stratum(&quartic(-1, 1, false), &curve, 2),
            Ok(StratumLabel::Z(1))
        );
        assert_eq!(
            classify_stratum(&quartic(0, 0, true), &curve, 2),
            Ok(StratumLabel::OutsideFamily)
        );
        assert_eq!(
            classify_stratum(&quartic(0, 1, false), &curve, 2),
            Err(Error::InconsistentPolynomial)
        );
    }

    #[test]
    fn strata_dims_step_by_one() {
        let z = strata(4, 2).unwrap();
        assert_eq!(z.iter().map(|s| s.dim).collect::<Vec<_>>(), [21, 22, 23]);
    }
}
