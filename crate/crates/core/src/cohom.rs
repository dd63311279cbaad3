//! Cohomology dimensions of the standard sheaves on P^3 and the Ext groups
//! that give fiber dimensions over strictly semistable loci.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::numclass::NumClass;
use crate::subscheme::{realizable, SchemeClass, SchemeDim};

/// `(h0, h1, h2, h3)`.
pub type HVector = [i64; 4];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StdSheaf {
    /// `O(a)`.
    LineBundle(i64),
    /// `O_H(a)` for a plane `H`.
    Plane(i64),
    /// `O_L(a)` for a line `L`.
    Line(i64),
    /// `O_C(a)` for a plane curve of degree `d`.
    PlanarCurve {
        d: i64,
        a: i64,
    },
    /// `O_C(a)` for a smooth connected curve of degree `d` and genus `genus`.
    SmoothCurve {
        d: i64,
        genus: i64,
        a: i64,
    },
    Points(i64),
    /// `I_Z(a)`, with `Z` a plane curve plus points in general position.
    IdealOf(SchemeClass, i64),
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: i64 = 1;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

fn line_bundle(a: i64) -> HVector {
    [binom(a + 3, 3), 0, 0, binom(-a - 1, 3)]
}

fn plane(a: i64) -> HVector {
    [binom(a + 2, 2), 0, binom(-a - 1, 2), 0]
}

fn line(a: i64) -> HVector {
    [(a + 1).max(0), (-a - 1).max(0), 0, 0]
}

pub fn h(f: &StdSheaf) -> Result<HVector> {
    match *f {
        StdSheaf::LineBundle(a) => Ok(line_bundle(a)),
        StdSheaf::Plane(a) => Ok(plane(a)),
        StdSheaf::Line(a) => Ok(line(a)),
        StdSheaf::PlanarCurve { d, a } => {
            if d < 1 {
                return Err(Error::InvalidDegree(d));
            }
            // 0 -> O_H(a-d) -> O_H(a) -> O_C(a) -> 0
            let (big, small) = (plane(a), plane(a - d));
            Ok([big[0] - small[0], small[2] - big[2], 0, 0])
        }
        StdSheaf::SmoothCurve { d, genus, a } => {
            if d < 1 {
                return Err(Error::InvalidDegree(d));
            }
            if genus < 0 {
                return Err(Error::UnsupportedComposite);
            }
            let deg = d * a;
            if genus == 0 {
                Ok(line(deg))
            } else if a == 0 {
                Ok([1, genus, 0, 0])
            } else if deg > 2 * genus - 2 {
                Ok([deg + 1 - genus, 0, 0, 0])
            } else if a < 0 {
                Ok([0, genus - 1 - deg, 0, 0])
            } else {
                Err(Error::UnsupportedComposite)
            }
        }
        StdSheaf::Points(n) => {
            if n < 0 {
                return Err(Error::UnsupportedComposite);
            }
            Ok([n, 0, 0, 0])
        }
        StdSheaf::IdealOf(ref z, a) => ideal_of(z, a),
    }
}

fn structure_of(z: &SchemeClass, a: i64) -> Result<HVector> {
    if !realizable(z) {
        return Err(Error::Unrealizable {
            degree: z.degree,
            euler: z.euler,
        });
    }
    match z.dim {
        SchemeDim::Empty => Ok([0; 4]),
        SchemeDim::Zero => h(&StdSheaf::Points(z.points)),
        SchemeDim::One => {
            if !z.planar_pure {
                return Err(Error::UnsupportedComposite);
            }
            let c = h(&StdSheaf::PlanarCurve { d: z.degree, a })?;
            Ok([c[0] + z.points, c[1], 0, 0])
        }
    }
}

// 0 -> I_Z(a) -> O(a) -> O_Z(a) -> 0, with H^0(O(a)) -> H^0(O_Z(a)) of maximal
// rank: plane curves are arithmetically Cohen-Macaulay, extra points are general.
fn ideal_of(z: &SchemeClass, a: i64) -> Result<HVector> {
    let o = line_bundle(a);
    let oz = structure_of(z, a)?;
    let rank = o[0].min(oz[0]);
    Ok([o[0] - rank, oz[0] - rank, oz[1], o[3]])
}

/// Numerical class of the sheaf, for Riemann-Roch cross-checks.
pub fn sheaf_class(f: &StdSheaf) -> Result<NumClass> {
    let o = NumClass::structure_sheaf();
    let o_h = &o - &o.twist(-1);
    Ok(match *f {
        StdSheaf::LineBundle(a) => o.twist(a),
        StdSheaf::Plane(a) => o_h.twist(a),
        StdSheaf::Line(a) => NumClass::subscheme(1, 1).twist(a),
        StdSheaf::PlanarCurve { d, a } => (&o_h - &o_h.twist(-d)).twist(a),
        StdSheaf::SmoothCurve { d, genus, a } => NumClass::subscheme(d, 1 - genus).twist(a),
        StdSheaf::Points(n) => NumClass::subscheme(0, n),
        StdSheaf::IdealOf(ref z, a) => (&o - &z.class()).twist(a),
    })
}

/// How the quotient's points meet the planar scheme `A` at a wall.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IncidenceConfig {
    Disjoint,
    PointOnPureCurve,
    PointEqualsEmbedded,
    PointEqualsEmbeddedOnCurve,
    EmbeddedOffPlane,
}

impl IncidenceConfig {
    pub fn name(self) -> &'static str {
        match self {
            IncidenceConfig::Disjoint => "disjoint",
            IncidenceConfig::PointOnPureCurve => "point_on_pure_curve",
            IncidenceConfig::PointEqualsEmbedded => "point_equals_embedded",
            IncidenceConfig::PointEqualsEmbeddedOnCurve => "point_equals_embedded_on_curve",
            IncidenceConfig::EmbeddedOffPlane => "embedded_off_plane",
        }
    }
}

impl fmt::Display for IncidenceConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_planar(a: &SchemeClass) -> Result<()> {
    if !realizable(a) {
        return Err(Error::Unrealizable {
            degree: a.degree,
            euler: a.euler,
        });
    }
    if a.dim != SchemeDim::One || !a.planar_pure {
        return Err(Error::NoFormula);
    }
    Ok(())
}

/// `ext^1((I_A(1),1), (I_P(l),0))` over the locus where `P` misses the plane
/// of `A`: `(l+2)(l+1)/2 + h^1(O_A(-3-l))`. The image of the connecting map
/// is taken to be zero, so the value is a lower bound in general.
pub fn ext_plus(a: &SchemeClass, l: i64) -> Result<i64> {
    if l < 1 {
        return Err(Error::InvalidTwist(l));
    }
    check_planar(a)?;
    let curve = h(&StdSheaf::PlanarCurve { d: a.degree, a: -3 - l })?;
    Ok((l + 2) * (l + 1) / 2 + curve[1])
}

struct ExtMinusEntry {
    pure_degree: i64,
    a_points: i64,
    p_length: i64,
    l: i64,
    config: IncidenceConfig,
    value: i64,
}

// Special positions of the quotient points, worked out case by case for the
// line with one point and the plane cubic walls.
const EXT_MINUS_TABLE: &[ExtMinusEntry] = &[
    ExtMinusEntry {
        pure_degree: 1,
        a_points: 0,
        p_length: 1,
        l: 1,
        config: IncidenceConfig::PointOnPureCurve,
        value: 1,
    },
    ExtMinusEntry {
        pure_degree: 3,
        a_points: 1,
        p_length: 1,
        l: 1,
        config: IncidenceConfig::PointEqualsEmbedded,
        value: 3,
    },
    ExtMinusEntry {
        pure_degree: 3,
        a_points: 1,
        p_length: 1,
        l: 1,
        config: IncidenceConfig::PointOnPureCurve,
        value: 1,
    },
    ExtMinusEntry {
        pure_degree: 3,
        a_points: 1,
        p_length: 1,
        l: 1,
        config: IncidenceConfig::PointEqualsEmbeddedOnCurve,
        value: 6,
    },
    ExtMinusEntry {
        pure_degree: 3,
        a_points: 0,
        p_length: 2,
        l: 1,
        config: IncidenceConfig::PointOnPureCurve,
        value: 1,
    },
    ExtMinusEntry {
        pure_degree: 3,
        a_points: 0,
        p_length: 2,
        l: 1,
        config: IncidenceConfig::EmbeddedOffPlane,
        value: 2,
    },
];

fn check_points(p: &SchemeClass) -> Result<()> {
    if p.dim == SchemeDim::One || !realizable(p) {
        return Err(Error::NoFormula);
    }
    Ok(())
}

/// `ext^1((I_P(l),0), (I_A(1),1))`. Disjoint position gives the length of the
/// 0-dimensional part of `A`; other positions come from a fixed table.
pub fn ext_minus(a: &SchemeClass, p: &SchemeClass, l: i64, cfg: IncidenceConfig) -> Result<i64> {
    if l < 1 {
        return Err(Error::InvalidTwist(l));
    }
    check_planar(a)?;
    check_points(p)?;
    if cfg == IncidenceConfig::Disjoint {
        return Ok(a.points);
    }
    EXT_MINUS_TABLE
        .iter()
        .find(|e| {
            e.pure_degree == a.degree && e.a_points == a.points && e.p_length == p.points && e.l == l && e.config == cfg
        })
        .map(|e| e.value)
        .ok_or(Error::NoFormula)
}

/// Every configuration with a known `ext_minus` value, disjoint first.
pub fn ext_minus_cases(a: &SchemeClass, p: &SchemeClass, l: i64) -> Result<Vec<(IncidenceConfig, i64)>> {
    let mut out = alloc::vec![(
        IncidenceConfig::Disjoint,
        ext_minus(a, p, l, IncidenceConfig::Disjoint)?
    )];
    for e in EXT_MINUS_TABLE {
        if e.pure_degree == a.degree && e.a_points == a.points && e.p_length == p.points && e.l == l {
            out.push((e.config, e.value));
        }
    }
    Ok(out)
}

/// `h^1(O_Y(m))`, additive over disjoint components.
pub fn hilbert_fiber_dim(y: &[CurvePiece], m: i64) -> Result<i64> {
    let mut total = 0;
    for piece in y {
        let sheaf = match *piece {
            CurvePiece::Planar { d } => StdSheaf::PlanarCurve { d, a: m },
            CurvePiece::Smooth { d, genus } => StdSheaf::SmoothCurve { d, genus, a: m },
            CurvePiece::Points(n) => StdSheaf::Points(n),
        };
        total += h(&sheaf)?[1];
    }
    Ok(total)
}

/// One connected piece of a curve `Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurvePiece {
    Planar { d: i64 },
    Smooth { d: i64, genus: i64 },
    Points(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtDirection {
    /// `ext^1(sub pair with section, quotient pair)`.
    Plus,
    /// `ext^1(quotient pair, sub pair with section)`.
    Minus,
}

struct IdealPairEntry {
    sub: (i64, i64),
    quot: (i64, i64),
    l: i64,
    /// `ext^1(I_sub(1), I_quot(l))`.
    ideal_ext: i64,
    /// `ext^1((I_quot(l),0), (I_sub(1),1))`.
    reverse: i64,
}

// Conic with section against a line, from the resolutions of both ideals.
const IDEAL_PAIR_TABLE: &[IdealPairEntry] = &[IdealPairEntry {
    sub: (2, 1),
    quot: (1, 1),
    l: 1,
    ideal_ext: 7,
    reverse: 3,
}];

/// Fiber dimension (plus one) of a group-1 wall between `(I_sub(1),1)` and
/// `(I_quot(l),0)`. A 0-dimensional quotient goes through `ext_plus` and
/// `ext_minus`; a curve quotient needs a table entry, and the forward value
/// is `h^0(I_quot(l)) + ext^1(I_sub(1), I_quot(l))`.
pub fn ext_group1_pair(sub: &SchemeClass, quot: &SchemeClass, l: i64, dir: ExtDirection) -> Result<i64> {
    if quot.dim != SchemeDim::One {
        return match dir {
            ExtDirection::Plus => ext_plus(sub, l),
            ExtDirection::Minus => ext_minus(sub, quot, l, IncidenceConfig::Disjoint),
        };
    }
    let entry = IDEAL_PAIR_TABLE
        .iter()
        .find(|e| e.sub == (sub.degree, sub.euler) && e.quot == (quot.degree, quot.euler) && e.l == l)
        .ok_or(Error::NoFormula)?;
    match dir {
        ExtDirection::Plus => {
            let h0 = h(&StdSheaf::IdealOf(quot.clone(), l))?[0];
            Ok(h0 + entry.ideal_ext)
        }
        ExtDirection::Minus => Ok(entry.reverse),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_examples() {
        assert_eq!(h(&StdSheaf::PlanarCurve { d: 3, a: -4 }).unwrap()[1], 12);
        assert_eq!(h(&StdSheaf::Line(-4)).unwrap()[1], 3);
        assert_eq!(h(&StdSheaf::Points(2)), Ok([2, 0, 0, 0]));
        assert_eq!(h(&StdSheaf::LineBundle(-4)), Ok([0, 0, 0, 1]));
        assert_eq!(h(&StdSheaf::Plane(-3)), Ok([0, 0, 1, 0]));
    }

    #[test]
    fn planar_line_matches_line() {
        for a in -8..8 {
            assert_eq!(h(&StdSheaf::PlanarCurve { d: 1, a }), h(&StdSheaf::Line(a)));
        }
    }

    #[test]
    fn ideal_of_line() {
        let l = SchemeClass::from_numbers(1, 1, true);
        assert_eq!(h(&StdSheaf::IdealOf(l, 1)), Ok([2, 0, 0, 0]));
    }

    #[test]
    fn ext_plus_examples() {
        let line = SchemeClass::from_numbers(1, 1, true);
        let cubic = SchemeClass::from_numbers(3, 2, true);
        let conic = SchemeClass::from_numbers(2, 1, true);
        assert_eq!(ext_plus(&line, 1), Ok(6));
        assert_eq!(ext_plus(&cubic, 1), Ok(15));
        assert_eq!(ext_plus(&conic, 1), Ok(10));
        assert_eq!(ext_plus(&line, 0), Err(Error::InvalidTwist(0)));
    }

    #[test]
    fn ext_minus_examples() {
        let cubic2 = SchemeClass::from_numbers(3, 2, true);
        let line = SchemeClass::from_numbers(1, 1, true);
        let cubic = SchemeClass::from_numbers(3, 0, true);
        let d = IncidenceConfig::Disjoint;
        assert_eq!(ext_minus(&cubic2, &SchemeClass::empty(), 1, d), Ok(2));
        assert_eq!(
            ext_minus(&line, &SchemeClass::points(1), 1, IncidenceConfig::PointOnPureCurve),
            Ok(1)
        );
        assert_eq!(ext_minus(&cubic, &SchemeClass::points(2), 1, d), Ok(0));
        assert_eq!(
            ext_minus(&line, &SchemeClass::points(1), 1, IncidenceConfig::EmbeddedOffPlane),
            Err(Error::NoFormula)
        );
    }

    #[test]
    fn hilbert_fiber_examples() {
        let quartic = [CurvePiece::Planar { d: 4 }, CurvePiece::Points(2)];
        assert_eq!(hilbert_fiber_dim(&quartic, -2), Ok(10));
        let conic = [CurvePiece::Planar { d: 2 }, CurvePiece::Points(1)];
        assert_eq!(hilbert_fiber_dim(&conic, -2), Ok(3));
        let skew = [CurvePiece::Planar { d: 1 }, CurvePiece::Planar { d: 1 }];
        assert_eq!(hilbert_fiber_dim(&skew, -2), Ok(2));
        let elliptic = [CurvePiece::Smooth { d: 4, genus: 1 }];
        assert_eq!(hilbert_fiber_dim(&elliptic, -2), Ok(8));
    }

    #[test]
    fn group1_pair_examples() {
        let conic = SchemeClass::from_numbers(2, 1, true);
        let line = SchemeClass::from_numbers(1, 1, true);
        let a0 = SchemeClass::from_numbers(3, 2, true);
        assert_eq!(ext_group1_pair(&conic, &line, 1, ExtDirection::Plus), Ok(9));
        assert_eq!(ext_group1_pair(&conic, &line, 1, ExtDirection::Minus), Ok(3));
        assert_eq!(
            ext_group1_pair(&a0, &SchemeClass::empty(), 1, ExtDirection::Plus),
            Ok(15)
        );
        assert_eq!(
            ext_group1_pair(&line, &conic, 1, ExtDirection::Plus),
            Err(Error::NoFormula)
        );
    }
}
