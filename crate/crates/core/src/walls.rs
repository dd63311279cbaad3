//! Walls for delta-stability of pairs `(E(k), s)` with `E` of rank 2.
//!
//! A wall of group `s` comes from a sequence
//! `0 -> (I_A(s),1) -> (E(k),s) -> (I_B(2k+c1-s),0) -> 0`, with critical value
//! `delta = P_{E(k)} - 2*P_{I_A(s)}`. The twist acts on the subscheme
//! polynomial as well: `P_{I_A(s)}(t) = P_O(t+s) - P_{O_A}(t+s)`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::cohom::{ext_group1_pair, ext_minus_cases, ExtDirection, IncidenceConfig};
use crate::error::{Error, Result};
use crate::numclass::{collapsing_wall, curve_poly, NumClass};
use crate::ratpoly::{int, RatPoly};
use crate::stability::PairClass;
use crate::subscheme::{
    free_family_dim, min_euler, realizable, section_family_dim, split_planar, SchemeClass, SchemeDim,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WallKind {
    Collapsing,
    Interior,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Actuality {
    /// Backed by an existence argument or a nonzero extension space.
    Verified,
    Numerical,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WallRecord {
    pub delta: RatPoly,
    pub group: i64,
    pub sub_a: SchemeClass,
    pub quot_b: SchemeClass,
    pub family_index: Option<i64>,
    pub actual: Actuality,
    pub kind: WallKind,
}

impl WallRecord {
    /// `(I_A(s), 1)`.
    pub fn sub_pair(&self) -> PairClass {
        let a = &self.sub_a;
        PairClass::new(NumClass::ideal(a.degree, a.euler).twist(self.group), true)
    }

    /// `(I_B(2k+c1-s), 0)`.
    pub fn quot_pair(&self, v: &NumClass, k: i64) -> PairClass {
        let b = &self.quot_b;
        let twist = 2 * k + v.c1() - self.group;
        PairClass::new(NumClass::ideal(b.degree, b.euler).twist(twist), false)
    }
}

struct Setup {
    pk: RatPoly,
    po: RatPoly,
    m: i64,
    w_empty: RatPoly,
    w0_exists: bool,
    quot_twist: i64,
}

impl Setup {
    fn new(v: &NumClass, k: i64) -> Result<Self> {
        if v.rank() != 2 {
            return Err(Error::UnsupportedRank(v.rank()));
        }
        Ok(Setup {
            pk: v.twist(k).hilbert_poly(),
            po: NumClass::structure_sheaf().hilbert_poly(),
            m: 2 * k + v.c1(),
            w_empty: collapsing_wall(v, k)?,
            w0_exists: w0_exists(v, k).is_ok_and(|w| w.exists),
            quot_twist: 2 * k - 1 + v.c1(),
        })
    }

    fn budget(&self, s: i64) -> RatPoly {
        &(&self.po.shift(s) + &self.po.shift(self.m - s)) - &self.pk
    }

    fn delta(&self, s: i64, a: &SchemeClass) -> RatPoly {
        let ideal = &self.po.shift(s) - &a.hilbert_poly().shift(s);
        &self.pk - &ideal.scalar_mul(&int(2))
    }

    fn record(&self, s: i64, a: SchemeClass, b: SchemeClass, kind: WallKind) -> WallRecord {
        let family_index = (s == 1 && b.dim != SchemeDim::One).then_some(b.points);
        let mut rec = WallRecord {
            delta: self.delta(s, &a),
            group: s,
            sub_a: a,
            quot_b: b,
            family_index,
            actual: Actuality::Numerical,
            kind,
        };
        rec.actual = self.actuality(&rec);
        rec
    }

    fn actuality(&self, rec: &WallRecord) -> Actuality {
        let certified = match (rec.kind, rec.group) {
            (WallKind::Collapsing, _) => true,
            (_, 1) => {
                (rec.family_index.is_some() && self.w0_exists)
                    || ext_group1_pair(&rec.sub_a, &rec.quot_b, self.quot_twist, ExtDirection::Plus)
                        .is_ok_and(|e| e > 0)
            }
            _ => false,
        };
        if certified {
            Actuality::Verified
        } else {
            Actuality::Numerical
        }
    }

    fn keeps(&self, delta: &RatPoly) -> bool {
        delta.is_positive() && delta < &self.w_empty
    }
}

/// `P_{O_A}(t+s) + P_{O_B}(t+2k+c1-s)`, forced by additivity in the sequence.
pub fn group_budget(v: &NumClass, k: i64, s: i64) -> Result<RatPoly> {
    Ok(Setup::new(v, k)?.budget(s))
}

/// `P_{E(k)} - 2*P_{I_A(s)}`.
pub fn critical_value(v: &NumClass, k: i64, s: i64, a: &SchemeClass) -> Result<RatPoly> {
    Ok(Setup::new(v, k)?.delta(s, a))
}

fn lowest_euler(d: i64) -> i64 {
    if d == 0 {
        0
    } else {
        min_euler(d).unwrap_or(0)
    }
}

fn group_walls(setup: &Setup, s: i64) -> Vec<WallRecord> {
    let budget = setup.budget(s);
    if s == 0 {
        // only A empty keeps delta <= W_empty; B is then the curve of the pair
        let Some((d, chi)) = budget.shift(-setup.m).as_integer_linear() else {
            return Vec::new();
        };
        let b = SchemeClass::from_numbers(d, chi, d <= 1);
        return alloc::vec![setup.record(0, SchemeClass::empty(), b, WallKind::Collapsing)];
    }
    let Some((total_d, total_c)) = budget.as_integer_linear() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for da in 0..=total_d {
        let db = total_d - da;
        let c = total_c - da * s - db * (setup.m - s);
        for chi_a in lowest_euler(da)..=c - lowest_euler(db) {
            let a = SchemeClass::from_numbers(da, chi_a, s <= 1);
            let b = SchemeClass::from_numbers(db, c - chi_a, db <= 1);
            if !realizable(&a) || !realizable(&b) {
                continue;
            }
            if setup.keeps(&setup.delta(s, &a)) {
                out.push(setup.record(s, a, b, WallKind::Interior));
            }
        }
    }
    out
}

/// Walls of one group, in the order of `sort_walls`. Empty when `W_empty`
/// is not positive.
pub fn enumerate_group(v: &NumClass, k: i64, s: i64) -> Result<Vec<WallRecord>> {
    let setup = Setup::new(v, k)?;
    if !setup.w_empty.is_positive() || s < 0 {
        return Ok(Vec::new());
    }
    let mut walls = group_walls(&setup, s);
    sort_walls(&mut walls);
    Ok(walls)
}

pub fn enumerate_walls(v: &NumClass, k: i64, max_group: i64) -> Result<Vec<WallRecord>> {
    let mut walls = Vec::new();
    for s in 0..=max_group {
        walls.extend(enumerate_group(v, k, s)?);
    }
    sort_walls(&mut walls);
    Ok(walls)
}

fn scheme_key(c: &SchemeClass) -> (i64, i64) {
    (c.degree, c.euler)
}

/// Descending by critical value; ties by group, then by decomposition.
pub fn wall_order(a: &WallRecord, b: &WallRecord) -> Ordering {
    b.delta
        .cmp(&a.delta)
        .then(a.group.cmp(&b.group))
        .then(scheme_key(&b.sub_a).cmp(&scheme_key(&a.sub_a)))
        .then(scheme_key(&a.quot_b).cmp(&scheme_key(&b.quot_b)))
}

pub fn sort_walls(walls: &mut [WallRecord]) {
    walls.sort_by(wall_order);
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDimFamily {
    /// Number of points of `A_0`.
    pub l: i64,
    pub a0: SchemeClass,
    /// `W_0, ..., W_l`, with `A_i = A_0` minus `i` points and `B_i` of length `i`.
    pub walls: Vec<WallRecord>,
}

pub fn zero_dim_family(v: &NumClass, k: i64) -> Result<ZeroDimFamily> {
    let setup = Setup::new(v, k)?;
    let o = &setup.po;
    let budget = &(o + &o.shift(2 * k - 2 + v.c1())) - &v.twist(k - 1).hilbert_poly();
    let (d, e, n) = split_planar(&budget)?;
    let a0 = SchemeClass::from_numbers(d, e + n, true);
    let mut walls = Vec::new();
    for i in 0..=n {
        let a = SchemeClass::from_numbers(d, e + n - i, true);
        let rec = setup.record(1, a, SchemeClass::points(i), WallKind::Interior);
        if !setup.keeps(&rec.delta) {
            return Err(Error::NoFamily);
        }
        walls.push(rec);
    }
    Ok(ZeroDimFamily { l: n, a0, walls })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct W0Existence {
    pub exists: bool,
    pub d_a: i64,
    pub chi_a: i64,
}

/// Numbers of the plane scheme `A` of the largest family wall, read off the
/// curve polynomial; the wall exists when `d_A > 0`.
pub fn w0_exists(v: &NumClass, k: i64) -> Result<W0Existence> {
    let (d_y, chi_y) = curve_poly(v, k)?.as_integer_linear().ok_or(Error::NonLinear)?;
    if d_y < 1 {
        return Err(Error::NonLinear);
    }
    let c1 = v.c1();
    let d_a = d_y - 2 * k + 1 - c1;
    let chi_a = d_y * (2 * k - 1 + c1) + chi_y - (2 * k + 1 + c1) * (2 * k + c1) / 2 + 1;
    Ok(W0Existence {
        exists: d_a > 0,
        d_a,
        chi_a,
    })
}

/// Indices into a sorted wall list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NamedWalls {
    pub collapse: usize,
    /// Largest wall below `W_empty`; the collapsing wall when there is none.
    pub top: usize,
    /// Smallest wall; the collapsing wall when there is no other.
    pub first: usize,
    /// For `c1 = -1`: whether `W_1` comes from `(O(k-1), 1)`.
    pub c1_minus_one_check: Option<bool>,
}

pub fn named_walls(walls: &[WallRecord], v: &NumClass, k: i64) -> Option<NamedWalls> {
    let collapse = walls.iter().position(|w| w.kind == WallKind::Collapsing)?;
    let interior: Vec<usize> = (0..walls.len()).filter(|&i| i != collapse).collect();
    let top = interior.first().copied().unwrap_or(collapse);
    let first = interior.last().copied().unwrap_or(collapse);
    let c1_minus_one_check = (v.c1() == -1).then(|| {
        let w = &walls[first];
        w.sub_a.is_empty() && w.group == k - 1
    });
    Some(NamedWalls {
        collapse,
        top,
        first,
        c1_minus_one_check,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Transition {
    Flip,
    DivisorialContraction,
    Removal,
    Unclassified,
}

impl Transition {
    pub fn name(self) -> &'static str {
        match self {
            Transition::Flip => "flip",
            Transition::DivisorialContraction => "divisorial_contraction",
            Transition::Removal => "removal",
            Transition::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What `classify_transition` needs to know about the class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyContext {
    /// Length `l` of the 0-dimensional family, if the class has one.
    pub l: Option<i64>,
    /// Twist `2k - 1 + c1` of the quotient at group-1 walls.
    pub quot_twist: i64,
}

impl FamilyContext {
    pub fn new(v: &NumClass, k: i64) -> Self {
        FamilyContext {
            l: zero_dim_family(v, k).ok().map(|f| f.l),
            quot_twist: 2 * k - 1 + v.c1(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionReport {
    pub kind: Transition,
    /// Dimension of the strictly semistable locus.
    pub ss_dim: Option<i64>,
    pub plus_dim: Option<i64>,
    pub minus_dim: Option<i64>,
    pub ext_plus: Option<i64>,
    pub ext_minus: Option<i64>,
    /// `ext_minus` over every special position with a known value.
    pub ext_minus_cases: Vec<(IncidenceConfig, i64)>,
}

pub fn classify_transition(w: &WallRecord, ctx: &FamilyContext) -> TransitionReport {
    let mut report = TransitionReport {
        kind: Transition::Unclassified,
        ss_dim: None,
        plus_dim: None,
        minus_dim: None,
        ext_plus: None,
        ext_minus: None,
        ext_minus_cases: Vec::new(),
    };
    if w.group != 1 || w.kind == WallKind::Collapsing {
        return report;
    }
    let (a, b, l) = (&w.sub_a, &w.quot_b, ctx.quot_twist);
    report.ext_plus = ext_group1_pair(a, b, l, ExtDirection::Plus).ok();
    report.ext_minus = ext_group1_pair(a, b, l, ExtDirection::Minus).ok();
    if b.dim != SchemeDim::One {
        report.ext_minus_cases = ext_minus_cases(a, b, l).unwrap_or_default();
    }
    report.ss_dim = match (section_family_dim(a), free_family_dim(b)) {
        (Ok(x), Ok(y)) => Some(x + y),
        _ => None,
    };
    report.plus_dim = report.ss_dim.zip(report.ext_plus).map(|(s, e)| s + e - 1);
    report.minus_dim = report.ss_dim.zip(report.ext_minus).map(|(s, e)| s + e - 1);

    report.kind = match (w.family_index, ctx.l) {
        (Some(i), Some(l)) if i <= l - 2 => Transition::Flip,
        (Some(i), Some(l)) if i == l - 1 => Transition::DivisorialContraction,
        (Some(i), Some(l)) if i == l => Transition::Removal,
        (Some(_), Some(_)) => Transition::Unclassified,
        _ => match (report.ext_plus, report.ext_minus) {
            (_, Some(0)) => Transition::Removal,
            (Some(p), Some(m)) if p > 1 && m > 1 => Transition::Flip,
            _ => Transition::Unclassified,
        },
    };
    report
}
