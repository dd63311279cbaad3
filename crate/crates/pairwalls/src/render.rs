use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{CliError, CliResult};
use crate::report::{ChamberReport, JsonPoly, WallEntry};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Dot,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            other => Err(CliError::Input(format!("unknown format {other:?}"))),
        }
    }
}

/// Color unless `PAIRWALLS_NO_COLOR` is set.
pub fn color_from_env() -> bool {
    std::env::var_os("PAIRWALLS_NO_COLOR").is_none()
}

struct Style {
    on: bool,
}

impl Style {
    fn wrap(&self, code: &str, text: &str) -> String {
        if self.on {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    fn bold(&self, text: &str) -> String {
        self.wrap("1", text)
    }
}

fn lower(p: &Option<JsonPoly>) -> String {
    p.as_ref().map_or_else(|| "0".to_string(), |p| p.to_string())
}

fn wall_cells(w: &WallEntry) -> Vec<String> {
    let status = if w.golden {
        "golden".to_string()
    } else {
        w.actuality.clone()
    };
    vec![
        w.label.clone(),
        w.delta.to_string(),
        w.group.to_string(),
        w.sub_a.hilbert_poly.to_string(),
        w.quot_b.hilbert_poly.to_string(),
        w.family_index.map_or_else(|| "-".to_string(), |i| i.to_string()),
        w.transition.kind.clone(),
        status,
    ]
}

/// Aligned `|`-separated rows under a header.
pub fn wall_table(walls: &[WallEntry], color: bool) -> String {
    let style = Style { on: color };
    let header: Vec<String> = ["wall", "delta", "s", "P_A", "P_B", "i", "transition", "status"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let rows: Vec<Vec<String>> = walls.iter().map(wall_cells).collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().chain([&header]).map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let line = |r: &[String]| {
        r.iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect::<Vec<_>>()
            .join(" | ")
            .trim_end()
            .to_string()
    };
    let mut out = style.bold(&line(&header));
    out.push('\n');
    out.push_str(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("-+-"));
    out.push('\n');
    for r in &rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

fn table(r: &ChamberReport, color: bool) -> String {
    let style = Style { on: color };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} ({}) twist {}{}",
        style.bold("class"),
        r.class.ch.join(","),
        r.twist,
        r.preset.as_ref().map_or_else(String::new, |p| format!("  [{p}]"))
    );
    let _ = writeln!(out, "chern c1={} c2={} c3={}", r.class.c1, r.class.c2, r.class.c3);
    let _ = writeln!(out, "W_empty = {}", r.collapsing_wall);
    let _ = writeln!(out, "curve   = {}", r.curve_poly);
    out.push('\n');
    out.push_str(&wall_table(&r.walls, color));

    let alts: Vec<_> = r.walls.iter().filter(|w| w.alt_delta.is_some()).collect();
    if !alts.is_empty() {
        out.push('\n');
        for w in alts {
            let alt = w.alt_delta.as_ref().map(|a| a.to_string()).unwrap_or_default();
            let printed = w
                .printed_delta
                .as_ref()
                .map_or_else(String::new, |p| format!(" (printed {p})"));
            let _ = writeln!(out, "{}: alt_delta {alt}{printed}", w.label);
        }
    }

    let dims: Vec<_> = r.walls.iter().filter(|w| w.transition.ss_dim.is_some()).collect();
    if !dims.is_empty() {
        out.push('\n');
        let _ = writeln!(out, "{}", style.bold("fibers"));
        for w in dims {
            let t = &w.transition;
            let show = |x: Option<i64>| x.map_or_else(|| "?".to_string(), |x| x.to_string());
            let cases = t
                .ext_minus_cases
                .iter()
                .map(|(c, n)| format!("{c}={n}"))
                .collect::<Vec<_>>()
                .join(", ");
            let _ = writeln!(
                out,
                "{}: ss {} plus {} minus {} ext+ {} ext- {}{}",
                w.label,
                show(t.ss_dim),
                show(t.plus_dim),
                show(t.minus_dim),
                show(t.ext_plus),
                show(t.ext_minus),
                if cases.is_empty() {
                    String::new()
                } else {
                    format!(" [{cases}]")
                }
            );
        }
    }

    out.push('\n');
    let _ = writeln!(out, "{}", style.bold("chambers"));
    for c in &r.chambers {
        let tags = if c.labels.is_empty() {
            String::new()
        } else {
            format!("  {}", c.labels.join(", "))
        };
        let _ = writeln!(out, "({}, {}){tags}", lower(&c.lower), c.upper);
    }

    if let Some(f) = &r.family {
        out.push('\n');
        let _ = writeln!(out, "family l = {}  A0 = {}", f.l, f.a0.hilbert_poly);
    }
    if let Some(w) = &r.w0 {
        let _ = writeln!(out, "W0 exists: {} (d_A = {}, chi_A = {})", w.exists, w.d_a, w.chi_a);
    }
    for s in &r.strata {
        let _ = writeln!(
            out,
            "{}: degree {} with {} points in the plane, {} off it, dim {}",
            s.label, s.degree, s.in_plane_points, s.off_plane_points, s.dim
        );
    }
    if !r.hilbert_fibers.is_empty() {
        out.push('\n');
        for f in &r.hilbert_fibers {
            let _ = writeln!(out, "fiber over {}: {}", f.description, f.dim);
        }
    }
    if let Some(sp) = &r.spectrum {
        out.push('\n');
        for row in &sp.spectra {
            let _ = writeln!(out, "spectrum {:?} s={} h2(E({}))={}", row.ks, row.s, sp.t, row.h2);
        }
        let bound = sp.h0_bound.map_or_else(|| "none".to_string(), |b| b.to_string());
        let _ = writeln!(out, "h0(E({})) >= {bound}  positive: {}", sp.t, sp.proven_positive);
    }
    let chis: Vec<String> = r.euler.iter().map(|e| format!("chi(E({})) = {}", e.t, e.chi)).collect();
    let _ = writeln!(out, "{}", chis.join("  "));
    if !r.notes.is_empty() {
        out.push('\n');
        for n in &r.notes {
            let _ = writeln!(out, "note: {n}");
        }
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Chambers and walls along the positive axis, one chamber node past `W_empty`.
fn dot(r: &ChamberReport) -> String {
    let mut out = String::from("digraph chambers {\n  rankdir=LR;\n");
    let n = r.chambers.len();
    for (i, c) in r.chambers.iter().enumerate() {
        let tags = if c.labels.is_empty() {
            String::new()
        } else {
            format!("\\n{}", c.labels.join(", "))
        };
        let _ = writeln!(
            out,
            "  c{i} [shape=box, label=\"({}, {}){}\"];",
            dot_escape(&lower(&c.lower)),
            dot_escape(&c.upper.to_string()),
            tags
        );
    }
    let _ = writeln!(
        out,
        "  c{n} [shape=box, label=\"({}, inf)\\nempty\"];",
        dot_escape(&r.collapsing_wall.to_string())
    );
    for (i, c) in r.chambers.iter().enumerate() {
        let at: Vec<&WallEntry> = r.walls.iter().filter(|w| w.delta == c.upper).collect();
        let names: Vec<&str> = at.iter().map(|w| w.label.as_str()).collect();
        let kinds: Vec<&str> = at.iter().map(|w| w.transition.kind.as_str()).collect();
        let _ = writeln!(
            out,
            "  w{i} [shape=diamond, label=\"{}\\n{}\"];",
            dot_escape(&names.join(", ")),
            dot_escape(&c.upper.to_string())
        );
        let _ = writeln!(out, "  c{i} -> w{i} [label=\"{}\"];", dot_escape(&kinds.join(", ")));
        let _ = writeln!(out, "  w{i} -> c{};", i + 1);
    }
    out.push_str("}\n");
    out
}

pub fn render(r: &ChamberReport, format: Format, color: bool) -> CliResult<String> {
    Ok(match format {
        Format::Table => table(r, color),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r)?;
            s.push('\n');
            s
        }
        Format::Dot => dot(r),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_class;
    use crate::report::{build_report, ReportOptions};

    fn report(class: &str) -> ChamberReport {
        build_report(&parse_class(class).unwrap(), 1, &ReportOptions::default()).unwrap()
    }

    #[test]
    fn formats() {
        assert_eq!("dot".parse::<Format>().unwrap(), Format::Dot);
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn plain_table_has_no_escapes() {
        let r = report("2,0,-1,0");
        assert!(!render(&r, Format::Table, false).unwrap().contains('\x1b'));
        assert!(render(&r, Format::Table, true).unwrap().contains('\x1b'));
    }

    #[test]
    fn dot_nodes() {
        let r = report("2,0,-3,4");
        let d = render(&r, Format::Dot, false).unwrap();
        let chambers = d
            .lines()
            .filter(|l| l.trim_start().starts_with('c') && l.contains("shape=box"))
            .count();
        assert_eq!(chambers, r.walls.len() + 1);
    }
}
