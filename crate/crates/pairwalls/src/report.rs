//! The chamber report: walls, chambers and everything known about them for
//! one class, in a form that serializes losslessly.

use std::fmt;

use num_bigint::BigInt;
use pairwalls_core::cohom::{hilbert_fiber_dim, CurvePiece};
use pairwalls_core::numclass::{chern_from_ch, collapsing_wall, curve_poly};
use pairwalls_core::spectrum::{h0_lower_bound, h2_twist};
use pairwalls_core::stability::{compare, PairClass};
use pairwalls_core::subscheme::{split_planar, strata, SchemeDim};
use pairwalls_core::walls::{
    classify_transition, named_walls, w0_exists, wall_order, zero_dim_family, Actuality, FamilyContext, Transition,
    WallKind,
};
use pairwalls_core::{NumClass, RatPoly, Rational, SchemeClass, WallRecord};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CliError, CliResult};
use crate::parallel;
use crate::presets::{self, Preset};

pub const SCHEMA: &str = "pairwalls/1";

/// A polynomial in its JSON form: ascending `{"num", "den"}` objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonPoly(pub RatPoly);

#[derive(Serialize, Deserialize)]
struct JsonCoeff {
    num: String,
    den: String,
}

impl Serialize for JsonPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<JsonCoeff> = self
            .0
            .coeffs()
            .iter()
            .map(|c| JsonCoeff {
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<JsonCoeff>::deserialize(d)?;
        let mut out = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            let num: BigInt = c.num.parse().map_err(D::Error::custom)?;
            let den: BigInt = c.den.parse().map_err(D::Error::custom)?;
            if den == BigInt::from(0) {
                return Err(D::Error::custom("zero denominator"));
            }
            out.push(Rational::new(num, den));
        }
        Ok(JsonPoly(RatPoly::from_coeffs(out)))
    }
}

impl fmt::Display for JsonPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<RatPoly> for JsonPoly {
    fn from(p: RatPoly) -> Self {
        JsonPoly(p)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub ch: [String; 4],
    pub c1: i64,
    pub c2: String,
    pub c3: String,
}

impl ClassEntry {
    pub fn new(v: &NumClass) -> CliResult<Self> {
        let c = chern_from_ch(v)?;
        Ok(ClassEntry {
            ch: [
                v.ch0().to_string(),
                v.ch1().to_string(),
                v.ch2().to_string(),
                v.ch3().to_string(),
            ],
            c1: c.c1,
            c2: c.c2.to_string(),
            c3: c.c3.to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchemeEntry {
    pub dim: String,
    pub degree: i64,
    pub euler: i64,
    pub points: i64,
    pub planar: bool,
    pub hilbert_poly: JsonPoly,
}

impl From<&SchemeClass> for SchemeEntry {
    fn from(c: &SchemeClass) -> Self {
        let dim = match c.dim {
            SchemeDim::Empty => "empty",
            SchemeDim::Zero => "points",
            SchemeDim::One => "curve",
        };
        SchemeEntry {
            dim: dim.into(),
            degree: c.degree,
            euler: c.euler,
            points: c.points,
            planar: c.planar_pure,
            hilbert_poly: c.hilbert_poly().into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransitionEntry {
    pub kind: String,
    pub ss_dim: Option<i64>,
    pub plus_dim: Option<i64>,
    pub minus_dim: Option<i64>,
    pub ext_plus: Option<i64>,
    pub ext_minus: Option<i64>,
    pub ext_minus_cases: Vec<(String, i64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WallEntry {
    pub label: String,
    pub delta: JsonPoly,
    /// The value with the twist acting on the ideal only, `delta - 2*d_A*s`.
    pub alt_delta: Option<JsonPoly>,
    /// Value printed next to the matching golden row.
    pub printed_delta: Option<JsonPoly>,
    pub group: i64,
    pub kind: String,
    pub sub_a: SchemeEntry,
    pub quot_b: SchemeEntry,
    pub family_index: Option<i64>,
    /// "verified" or "numerical".
    pub actuality: String,
    /// Matches a row of a built-in chart.
    pub golden: bool,
    pub transition: TransitionEntry,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    /// `None` is `0`.
    pub lower: Option<JsonPoly>,
    pub upper: JsonPoly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChamberEntry {
    pub lower: Option<JsonPoly>,
    pub upper: JsonPoly,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub l: i64,
    pub a0: SchemeEntry,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct W0Entry {
    pub exists: bool,
    pub d_a: i64,
    pub chi_a: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StratumEntry {
    pub label: String,
    pub degree: i64,
    pub in_plane_points: i64,
    pub off_plane_points: i64,
    pub dim: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiberEntry {
    pub description: String,
    /// `h^1(O_Y(2k+c1-4))`, the dimension of the extension space over `Y`.
    pub dim: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub ks: Vec<i64>,
    pub s: i64,
    pub h2: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub t: i64,
    pub spectra: Vec<SpectrumRow>,
    pub h0_bound: Option<i64>,
    pub proven_positive: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EulerEntry {
    pub t: i64,
    pub chi: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChamberReport {
    pub schema: String,
    pub class: ClassEntry,
    pub twist: i64,
    pub max_group: i64,
    pub preset: Option<String>,
    pub collapsing_wall: JsonPoly,
    pub curve_poly: JsonPoly,
    /// Descending by critical value.
    pub walls: Vec<WallEntry>,
    /// Ascending, partitioning `(0, W_empty)`.
    pub chambers: Vec<ChamberEntry>,
    /// `(W_T, W_empty)`; the lower end is `0` when no wall lies below `W_empty`.
    pub hilbert_chamber: Interval,
    /// `(0, W_1)`.
    pub gieseker_chamber: Interval,
    pub family: Option<FamilyEntry>,
    pub w0: Option<W0Entry>,
    pub strata: Vec<StratumEntry>,
    pub hilbert_fibers: Vec<FiberEntry>,
    pub spectrum: Option<SpectrumEntry>,
    pub euler: Vec<EulerEntry>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    /// Highest wall group; defaults to the twist.
    pub max_group: Option<i64>,
}

fn check(ok: bool, what: impl FnOnce() -> String) -> CliResult<()> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Inconsistent(what()))
    }
}

/// Full wall set of `v(k)`, checked against the stability comparator and
/// the ordering contract.
pub fn checked_walls(v: &NumClass, k: i64, max_group: i64) -> CliResult<Vec<WallRecord>> {
    let walls = parallel::enumerate_walls(v, k, max_group)?;
    let w_empty = collapsing_wall(v, k)?;
    let whole = PairClass::new(v.twist(k), true);
    for pair in walls.windows(2) {
        check(wall_order(&pair[0], &pair[1]).is_lt(), || "walls out of order".into())?;
    }
    for w in &walls {
        let inside = match w.kind {
            WallKind::Collapsing => w.delta == w_empty,
            WallKind::Interior => w.delta.is_positive() && w.delta < w_empty,
        };
        check(inside, || format!("wall {} outside (0, W_empty]", w.delta))?;
        let verdict = compare(&w.sub_pair(), &whole, &w.delta)?;
        check(verdict.strictly, || {
            format!("wall {} is not strictly semistable at its own value", w.delta)
        })?;
    }
    Ok(walls)
}

fn labels(walls: &[WallRecord], l: Option<i64>) -> Vec<String> {
    let mut next = l.map_or(0, |l| l + 1);
    walls
        .iter()
        .map(|w| match (w.kind, w.family_index) {
            (WallKind::Collapsing, _) => "W_empty".to_string(),
            (_, Some(i)) if l.is_some() => format!("W{i}"),
            _ => {
                next += 1;
                format!("W{}", next - 1)
            }
        })
        .collect()
}

fn alt_delta(w: &WallRecord) -> Option<JsonPoly> {
    let shift = 2 * w.sub_a.degree * w.group;
    (w.kind == WallKind::Interior && shift != 0)
        .then(|| JsonPoly(&w.delta - &RatPoly::constant(Rational::from_integer(shift.into()))))
}

fn distinct_deltas(walls: &[WallRecord]) -> Vec<RatPoly> {
    let mut out: Vec<RatPoly> = walls.iter().map(|w| w.delta.clone()).collect();
    out.sort();
    out.dedup();
    out
}

fn fibers(v: &NumClass, k: i64, curve: &RatPoly, preset: Option<&Preset>) -> CliResult<Vec<FiberEntry>> {
    let m = 2 * k + v.c1() - 4;
    let mut seen: Vec<Vec<CurvePiece>> = Vec::new();
    let mut out = Vec::new();
    let mut push = |description: String, pieces: Vec<CurvePiece>| -> CliResult<()> {
        if !seen.contains(&pieces) {
            out.push(FiberEntry {
                description,
                dim: hilbert_fiber_dim(&pieces, m)?,
            });
            seen.push(pieces);
        }
        Ok(())
    };
    for ct in preset.map_or(&[][..], |p| p.curve_types) {
        push(ct.description.to_string(), ct.pieces.to_vec())?;
    }
    if let Ok((d, _, n)) = split_planar(curve) {
        let mut pieces = vec![CurvePiece::Planar { d }];
        if n > 0 {
            pieces.push(CurvePiece::Points(n));
        }
        push(format!("plane curve of degree {d} with {n} points"), pieces)?;
    }
    Ok(out)
}

pub fn build_report(v: &NumClass, k: i64, opts: &ReportOptions) -> CliResult<ChamberReport> {
    if v.rank() != 2 {
        return Err(CliError::Input(format!(
            "rank {} is not supported; rank 2 only",
            v.rank()
        )));
    }
    if k < 1 {
        return Err(CliError::Input(format!("twist must be at least 1, got {k}")));
    }
    let max_group = opts.max_group.unwrap_or(k);
    if max_group < 0 {
        return Err(CliError::Input("max group must be nonnegative".into()));
    }
    let preset = presets::lookup(v, k);
    let golden = preset.map(|p| p.golden()).transpose()?.unwrap_or_default();

    let w_empty = collapsing_wall(v, k)?;
    if !w_empty.is_positive() {
        return Err(CliError::Input(format!(
            "collapsing wall {w_empty} is not positive; no pair is semistable"
        )));
    }
    let curve = curve_poly(v, k)?;
    let walls = checked_walls(v, k, max_group)?;
    let family = zero_dim_family(v, k).ok();
    let ctx = FamilyContext::new(v, k);
    let named = named_walls(&walls, v, k).ok_or_else(|| CliError::Inconsistent("no collapsing wall".into()))?;

    if let Some(f) = &family {
        for pair in f.walls.windows(2) {
            check(pair[1].delta < pair[0].delta, || "family walls not decreasing".into())?;
        }
    }

    let wall_labels = labels(&walls, family.as_ref().map(|f| f.l));
    let mut entries = Vec::with_capacity(walls.len());
    for (w, label) in walls.iter().zip(wall_labels) {
        let t = classify_transition(w, &ctx);
        if t.kind == Transition::Removal && w.family_index.is_some() {
            check(w.family_index == ctx.l, || {
                format!("removal at family index {:?}", w.family_index)
            })?;
        }
        let row = golden
            .iter()
            .find(|(g, a, b, _)| *g == w.group && a == &w.sub_a.hilbert_poly() && b == &w.quot_b.hilbert_poly());
        entries.push(WallEntry {
            label,
            delta: w.delta.clone().into(),
            alt_delta: alt_delta(w),
            printed_delta: row.and_then(|r| r.3.clone()).map(JsonPoly),
            group: w.group,
            kind: match w.kind {
                WallKind::Collapsing => "collapsing",
                WallKind::Interior => "interior",
            }
            .into(),
            sub_a: (&w.sub_a).into(),
            quot_b: (&w.quot_b).into(),
            family_index: w.family_index,
            actuality: match w.actual {
                Actuality::Verified => "verified",
                Actuality::Numerical => "numerical",
            }
            .into(),
            golden: row.is_some(),
            transition: TransitionEntry {
                kind: t.kind.name().into(),
                ss_dim: t.ss_dim,
                plus_dim: t.plus_dim,
                minus_dim: t.minus_dim,
                ext_plus: t.ext_plus,
                ext_minus: t.ext_minus,
                ext_minus_cases: t
                    .ext_minus_cases
                    .iter()
                    .map(|(c, n)| (c.name().to_string(), *n))
                    .collect(),
            },
        });
    }

    let has_top = named.top != named.collapse;
    let hilbert_chamber = Interval {
        lower: has_top.then(|| walls[named.top].delta.clone().into()),
        upper: w_empty.clone().into(),
    };
    let gieseker_upper = walls[named.first].delta.clone();
    let gieseker_chamber = Interval {
        lower: None,
        upper: gieseker_upper.clone().into(),
    };

    let deltas = distinct_deltas(&walls);
    let mut chambers = Vec::with_capacity(deltas.len());
    let mut lower: Option<RatPoly> = None;
    for upper in &deltas {
        let mut tags = Vec::new();
        if upper <= &gieseker_upper {
            tags.push("gieseker".to_string());
        }
        if upper == &w_empty && lower.as_ref() == hilbert_chamber.lower.as_ref().map(|p| &p.0) {
            tags.push("hilbert".to_string());
        }
        chambers.push(ChamberEntry {
            lower: lower.clone().map(JsonPoly),
            upper: upper.clone().into(),
            labels: tags,
        });
        lower = Some(upper.clone());
    }
    check(
        chambers.last().is_some_and(|c| c.upper.0 == w_empty)
            && chambers
                .iter()
                .filter(|c| c.labels.iter().any(|l| l == "hilbert"))
                .count()
                == 1,
        || "chambers do not partition (0, W_empty)".into(),
    )?;

    let strata_entries = match split_planar(&curve) {
        Ok((d, _, n)) if d >= 1 => strata(d, n)?
            .into_iter()
            .map(|s| StratumEntry {
                label: format!("Z{}", s.index),
                degree: s.degree,
                in_plane_points: s.in_plane_points,
                off_plane_points: s.off_plane_points,
                dim: s.dim,
            })
            .collect(),
        _ => Vec::new(),
    };

    let spectrum = if v.c1() == 0 {
        let b = h0_lower_bound(v, k)?;
        Some(SpectrumEntry {
            t: k,
            spectra: b
                .spectra
                .iter()
                .map(|sp| SpectrumRow {
                    ks: sp.ks.clone(),
                    s: sp.s,
                    h2: h2_twist(sp, k),
                })
                .collect(),
            h0_bound: b.bound,
            proven_positive: b.proven_positive,
        })
    } else {
        None
    };

    let mut notes: Vec<String> = preset.map_or(Vec::new(), |p| p.notes.iter().map(|n| n.to_string()).collect());
    if entries.iter().any(|e| e.alt_delta.is_some()) {
        notes.push(
            "critical values twist the subscheme polynomial along with the ideal; alt_delta gives the value when only the ideal is twisted".into(),
        );
    }
    if entries.iter().any(|e| e.actuality == "numerical") {
        notes.push("numerical walls have no existence certificate and may not be actual".into());
    }
    if let Some(ok) = named.c1_minus_one_check {
        notes.push(format!("first wall comes from (O(k-1), 1): {ok}"));
    }

    Ok(ChamberReport {
        schema: SCHEMA.into(),
        class: ClassEntry::new(v)?,
        twist: k,
        max_group,
        preset: preset.map(|p| p.name.to_string()),
        collapsing_wall: w_empty.into(),
        curve_poly: curve.clone().into(),
        walls: entries,
        chambers,
        hilbert_chamber,
        gieseker_chamber,
        family: family.map(|f| FamilyEntry {
            l: f.l,
            a0: (&f.a0).into(),
            labels: (0..=f.l).map(|i| format!("W{i}")).collect(),
        }),
        w0: w0_exists(v, k).ok().map(|w| W0Entry {
            exists: w.exists,
            d_a: w.d_a,
            chi_a: w.chi_a,
        }),
        strata: strata_entries,
        hilbert_fibers: fibers(v, k, &curve, preset)?,
        spectrum,
        euler: (-1..=1)
            .map(|t| EulerEntry {
                t,
                chi: v.euler(t).to_string(),
            })
            .collect(),
        notes,
    })
}
