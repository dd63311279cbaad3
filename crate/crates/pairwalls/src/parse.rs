//! Text forms accepted on the command line.

use pairwalls_core::numclass::{ch_from_chern, ChernClasses};
use pairwalls_core::ratpoly::to_i64;
use pairwalls_core::stability::PairClass;
use pairwalls_core::subscheme::CurveDescription;
use pairwalls_core::{NumClass, RatPoly, Rational};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

fn bad(what: &str, text: &str) -> CliError {
    CliError::Input(format!("{what}: {text:?}"))
}

fn rational(text: &str) -> CliResult<Rational> {
    text.trim().parse().map_err(|_| bad("not a rational number", text))
}

fn integer(text: &str) -> CliResult<i64> {
    text.trim().parse().map_err(|_| bad("not an integer", text))
}

fn fields(text: &str, n: usize) -> CliResult<Vec<&str>> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != n {
        return Err(bad(&format!("expected {n} comma-separated fields"), text));
    }
    Ok(parts)
}

/// `ch0,ch1,ch2,ch3`, e.g. `2,-1,-1/2,5/6`.
pub fn parse_class(text: &str) -> CliResult<NumClass> {
    let parts = fields(text, 4)?;
    let ch: Vec<Rational> = parts.iter().map(|p| rational(p)).collect::<CliResult<_>>()?;
    let ch0 = to_i64(&ch[0]).ok_or_else(|| bad("rank must be an integer", text))?;
    let ch1 = to_i64(&ch[1]).ok_or_else(|| bad("ch1 must be an integer", text))?;
    Ok(NumClass::new(ch0, ch1, ch[2].clone(), ch[3].clone())?)
}

/// `rank:c1,c2,c3`, e.g. `2:0,2,2`.
pub fn parse_chern(text: &str) -> CliResult<NumClass> {
    let (rank, rest) = text
        .split_once(':')
        .ok_or_else(|| bad("expected rank:c1,c2,c3", text))?;
    let parts = fields(rest, 3)?;
    let c = ChernClasses {
        c1: integer(parts[0])?,
        c2: rational(parts[1])?,
        c3: rational(parts[2])?,
    };
    Ok(ch_from_chern(integer(rank)?, &c)?)
}

/// `ideal:d,chi,twist,section`, the pair `(I_Z(twist), section)`.
pub fn parse_sub(text: &str) -> CliResult<PairClass> {
    let rest = text
        .strip_prefix("ideal:")
        .ok_or_else(|| bad("expected ideal:d,chi,twist,section", text))?;
    let parts = fields(rest, 4)?;
    let has_section = match parts[3].trim() {
        "1" | "true" => true,
        "0" | "false" => false,
        other => return Err(bad("section flag must be 0 or 1", other)),
    };
    let cls = NumClass::ideal(integer(parts[0])?, integer(parts[1])?).twist(integer(parts[2])?);
    Ok(PairClass::new(cls, has_section))
}

pub fn parse_delta(text: &str) -> CliResult<RatPoly> {
    let p: RatPoly = text.parse()?;
    if !p.is_positive() {
        return Err(bad("stability parameter must be positive", text));
    }
    Ok(p)
}

#[derive(Deserialize)]
struct PlanarPart {
    d: i64,
    chi: i64,
}

#[derive(Deserialize)]
struct CurveJson {
    planar: PlanarPart,
    off_plane_points: i64,
    nonplanar: bool,
}

/// `{"planar": {"d": .., "chi": ..}, "off_plane_points": .., "nonplanar": ..}`.
pub fn parse_curve(text: &str) -> CliResult<CurveDescription> {
    let c: CurveJson = serde_json::from_str(text)?;
    if c.planar.d < 1 || c.off_plane_points < 0 {
        return Err(bad("curve description out of range", text));
    }
    Ok(CurveDescription {
        planar_d: c.planar.d,
        planar_chi: c.planar.chi,
        off_plane_points: c.off_plane_points,
        nonplanar: c.nonplanar,
    })
}
