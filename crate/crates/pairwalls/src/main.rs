use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pairwalls::parse::{parse_chern, parse_class, parse_curve, parse_delta, parse_sub};
use pairwalls::presets;
use pairwalls::render::{color_from_env, render, wall_table, Format};
use pairwalls::report::{build_report, ClassEntry, JsonPoly, ReportOptions, SCHEMA};
use pairwalls::{CliError, CliResult};
use pairwalls_core::numclass::{chern_from_ch, curve_poly};
use pairwalls_core::ratpoly::to_i64;
use pairwalls_core::spectrum::{enumerate_spectra, h0_lower_bound, h2_twist};
use pairwalls_core::stability::{compare, reduced_poly, PairClass};
use pairwalls_core::subscheme::{classify_stratum, split_planar, strata};
use pairwalls_core::walls::zero_dim_family;
use pairwalls_core::NumClass;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "pairwalls",
    version,
    about = "Walls and chambers for delta-stable pairs of rank 2 on P^3"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Chern character ch0,ch1,ch2,ch3; rationals as a/b.
    #[arg(long, global = true, allow_hyphen_values = true)]
    class: Option<String>,
    /// Chern classes rank:c1,c2,c3.
    #[arg(long, global = true, allow_hyphen_values = true)]
    chern: Option<String>,
    /// Built-in class, e.g. null-correlation.
    #[arg(long, global = true)]
    preset: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    twist: Option<i64>,
    /// table, json or dot.
    #[arg(long, global = true, default_value = "table")]
    format: String,
    #[arg(long, global = true, allow_hyphen_values = true)]
    max_group: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Every wall of the twisted class.
    Walls,
    /// The full chamber report.
    Chambers,
    /// Admissible spectra and the resulting bound on h0(E(t)), t = twist.
    Spectrum,
    /// Compare a rank-1 sub-pair against (E(k), s) at a given delta.
    Stability {
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        /// ideal:d,chi,twist,section
        #[arg(long, allow_hyphen_values = true)]
        sub: String,
    },
    /// Strata Z_0..Z_l of the Hilbert chamber, optionally locating a curve.
    Strata {
        /// JSON curve description.
        #[arg(long)]
        curve: Option<String>,
    },
    /// List the built-in classes.
    Presets,
}

impl Global {
    fn class_and_twist(&self) -> CliResult<(NumClass, i64)> {
        let given = [self.class.is_some(), self.chern.is_some(), self.preset.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(CliError::Input("give exactly one of --class, --chern, --preset".into()));
        }
        if let Some(name) = &self.preset {
            let p = presets::by_name(name).ok_or_else(|| CliError::Input(format!("unknown preset {name:?}")))?;
            return Ok((p.class(), self.twist.unwrap_or(p.twist)));
        }
        let v = match (&self.class, &self.chern) {
            (Some(c), _) => parse_class(c)?,
            (_, Some(c)) => parse_chern(c)?,
            _ => unreachable!(),
        };
        Ok((v, self.twist.unwrap_or(1)))
    }
}

fn json_out(value: serde_json::Value) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(&value)?;
    s.push('\n');
    Ok(s)
}

fn no_dot(format: Format) -> CliResult<()> {
    if format == Format::Dot {
        return Err(CliError::Input("dot output is only available for chambers".into()));
    }
    Ok(())
}

fn run(cli: &Cli) -> CliResult<String> {
    let g = &cli.global;
    let format: Format = g.format.parse()?;
    let color = color_from_env();
    if let Command::Presets = cli.command {
        no_dot(format)?;
        let rows: Vec<_> = presets::PRESETS
            .iter()
            .map(|p| json!({"name": p.name, "class": p.class, "twist": p.twist}))
            .collect();
        if format == Format::Json {
            return json_out(json!({"schema": SCHEMA, "presets": rows}));
        }
        return Ok(presets::PRESETS
            .iter()
            .map(|p| format!("{:<18} {}  twist {}\n", p.name, p.class, p.twist))
            .collect());
    }
    let (v, k) = g.class_and_twist()?;
    let opts = ReportOptions { max_group: g.max_group };
    match &cli.command {
        Command::Walls => {
            no_dot(format)?;
            let r = build_report(&v, k, &opts)?;
            match format {
                Format::Json => json_out(json!({
                    "schema": SCHEMA,
                    "class": r.class,
                    "twist": r.twist,
                    "walls": r.walls,
                })),
                _ => Ok(wall_table(&r.walls, color)),
            }
        }
        Command::Chambers => render(&build_report(&v, k, &opts)?, format, color),
        Command::Spectrum => {
            no_dot(format)?;
            let c = chern_from_ch(&v)?;
            let (c2, c3) = match (to_i64(&c.c2), to_i64(&c.c3)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(CliError::Input("c2 and c3 must be integers".into())),
            };
            let bound = h0_lower_bound(&v, k)?;
            let spectra = enumerate_spectra(c2, c3);
            let h2: Vec<i64> = spectra.iter().map(|sp| h2_twist(sp, k)).collect();
            if format == Format::Json {
                let rows: Vec<_> = spectra.iter().map(|sp| json!({"ks": sp.ks, "s": sp.s})).collect();
                return json_out(json!({
                    "schema": SCHEMA,
                    "c2": c2,
                    "c3": c3,
                    "t": k,
                    "spectra": rows,
                    "h2": h2,
                    "h0_bound": bound.bound,
                    "proven_positive": bound.proven_positive,
                }));
            }
            let mut out: String = spectra
                .iter()
                .zip(&h2)
                .map(|(sp, h)| format!("{:?} s={} h2(E({k}))={h}\n", sp.ks, sp.s))
                .collect();
            let b = bound.bound.map_or_else(|| "none".to_string(), |b| b.to_string());
            out.push_str(&format!("h0(E({k})) >= {b}  positive: {}\n", bound.proven_positive));
            Ok(out)
        }
        Command::Stability { delta, sub } => {
            no_dot(format)?;
            let delta = parse_delta(delta)?;
            let sub = parse_sub(sub)?;
            let whole = PairClass::new(v.twist(k), true);
            let verdict = compare(&sub, &whole, &delta)?;
            if format == Format::Json {
                return json_out(json!({
                    "schema": SCHEMA,
                    "class": ClassEntry::new(&v)?,
                    "twist": k,
                    "delta": JsonPoly(delta.clone()),
                    "reduced_sub": JsonPoly(reduced_poly(&sub, &delta)?),
                    "reduced_whole": JsonPoly(reduced_poly(&whole, &delta)?),
                    "destabilizes": verdict.destabilizes,
                    "strictly": verdict.strictly,
                }));
            }
            let word = match (verdict.destabilizes, verdict.strictly) {
                (_, true) => "on a wall (strictly semistable)",
                (true, false) => "destabilizing",
                (false, false) => "not destabilizing",
            };
            Ok(format!("at delta = {delta}: {word}\n"))
        }
        Command::Strata { curve } => {
            no_dot(format)?;
            let y = curve_poly(&v, k)?;
            let (d, _, n) = split_planar(&y)?;
            let l = zero_dim_family(&v, k).map(|f| f.l).unwrap_or(n);
            let list = strata(d, n)?;
            let located = curve
                .as_deref()
                .map(|text| -> CliResult<String> { Ok(classify_stratum(&parse_curve(text)?, &y, l)?.to_string()) })
                .transpose()?;
            if format == Format::Json {
                let rows: Vec<_> = list
                    .iter()
                    .map(|s| {
                        json!({
                            "label": format!("Z{}", s.index),
                            "degree": s.degree,
                            "in_plane_points": s.in_plane_points,
                            "off_plane_points": s.off_plane_points,
                            "dim": s.dim,
                        })
                    })
                    .collect();
                return json_out(json!({
                    "schema": SCHEMA,
                    "curve_poly": JsonPoly(y),
                    "l": l,
                    "strata": rows,
                    "stratum": located,
                }));
            }
            let mut out = format!("curve {y}, l = {l}\n");
            for s in &list {
                out.push_str(&format!(
                    "Z{}: degree {} with {} points in the plane, {} off it, dim {}\n",
                    s.index, s.degree, s.in_plane_points, s.off_plane_points, s.dim
                ));
            }
            if let Some(z) = located {
                out.push_str(&format!("curve lies in {z}\n"));
            }
            Ok(out)
        }
        Command::Presets => unreachable!(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("pairwalls: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
