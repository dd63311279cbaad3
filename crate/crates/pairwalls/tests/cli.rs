use std::process::{Command, Output};

use pairwalls::parse::parse_class;
use pairwalls::render::{render, Format};
use pairwalls::report::{build_report, ChamberReport, ReportOptions};
use pairwalls::{parallel, presets};

fn run(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pairwalls"))
        .args(args)
        .env("PAIRWALLS_NO_COLOR", "1")
        .env("RAYON_NUM_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args, "2");
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["walls", "--class", "2,0,-1,0"], "1").status.code(), Some(0));
    assert_eq!(run(&["walls", "--class", "2,0,-1"], "1").status.code(), Some(2));
    assert_eq!(run(&["walls", "--class", "2,0,1/3,0"], "1").status.code(), Some(2));
    assert_eq!(run(&["walls", "--chern", "3:0,1,0"], "1").status.code(), Some(2));
    assert_eq!(run(&["walls", "--preset", "nope"], "1").status.code(), Some(2));
    assert_eq!(
        run(&["walls", "--class", "2,0,-1,0", "--twist", "0"], "1")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["walls", "--class", "2,0,-1,0", "--format", "xml"], "1")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["walls", "--class", "2,0,-1,0", "--preset", "null-correlation"], "1")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["spectrum", "--preset", "rank2-m1-1-1"], "1").status.code(),
        Some(2)
    );
    assert_eq!(run(&["bogus"], "1").status.code(), Some(2));
}

#[test]
fn json_round_trips() {
    for p in presets::PRESETS {
        let r = build_report(&p.class(), p.twist, &ReportOptions::default()).unwrap();
        let text = render(&r, Format::Json, false).unwrap();
        let back: ChamberReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r, "{}", p.name);
        let from_cli: ChamberReport =
            serde_json::from_str(&stdout(&["chambers", "--preset", p.name, "--format", "json"])).unwrap();
        assert_eq!(from_cli, r, "{}", p.name);
    }
}

#[test]
fn byte_identical_across_runs_and_threads() {
    for args in [
        &["chambers", "--preset", "rank2-0-2-0", "--format", "json"][..],
        &["chambers", "--class", "2,0,-3,4", "--twist", "2", "--format", "table"][..],
        &["walls", "--chern", "2:0,2,2", "--max-group", "3", "--format", "json"][..],
    ] {
        let one = run(args, "1");
        let again = run(args, "1");
        let many = run(args, "8");
        assert!(one.status.success());
        assert_eq!(one.stdout, again.stdout);
        assert_eq!(one.stdout, many.stdout);
    }
}

#[test]
fn parallel_matches_serial() {
    let pools: Vec<rayon::ThreadPool> = [1, 4]
        .iter()
        .map(|&n| rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap())
        .collect();
    for p in presets::PRESETS {
        let v = p.class();
        for k in 1..=3 {
            let serial = pairwalls_core::walls::enumerate_walls(&v, k, k + 1).unwrap();
            for pool in &pools {
                assert_eq!(
                    pool.install(|| parallel::enumerate_walls(&v, k, k + 1)).unwrap(),
                    serial
                );
            }
        }
    }
}

/// `(P_A, P_B)` cells of the interior rows of a wall table.
fn chart_rows(table: &str) -> Vec<(String, String)> {
    table
        .lines()
        .filter(|l| l.starts_with('W') && !l.starts_with("W_empty"))
        .filter_map(|l| {
            let cells: Vec<&str> = l.split('|').map(str::trim).collect();
            (cells.len() >= 5).then(|| (cells[3].to_string(), cells[4].to_string()))
        })
        .collect()
}

#[test]
fn cubic_class_table() {
    let table = stdout(&["walls", "--class", "2,0,-3,4", "--twist", "1"]);
    let rows = chart_rows(&table);
    let want = [("3*t+2", "0"), ("3*t+1", "1"), ("3*t", "2"), ("2*t+1", "t+1")];
    let want: Vec<(String, String)> = want.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    assert_eq!(rows, want);
    assert!(!table.contains('\x1b'));
}

#[test]
fn dot_has_one_more_chamber_than_walls() {
    for p in presets::PRESETS {
        let dot = stdout(&["chambers", "--preset", p.name, "--format", "dot"]);
        let chambers = dot.lines().filter(|l| l.contains("shape=box")).count();
        let walls = dot.lines().filter(|l| l.contains("shape=diamond")).count();
        assert_eq!(chambers, walls + 1, "{}", p.name);
    }
    assert_eq!(
        run(&["walls", "--preset", "null-correlation", "--format", "dot"], "1")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn spectrum_json() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["spectrum", "--chern", "2:0,2,2", "--format", "json"])).unwrap();
    assert_eq!(v["schema"], "pairwalls/1");
    assert_eq!(v["h0_bound"], 3);
    assert_eq!(v["proven_positive"], true);
    assert_eq!(v["spectra"].as_array().unwrap().len(), 3);
    assert!(v["h2"].as_array().unwrap().iter().all(|h| h == 0));
}

#[test]
fn stability_verdicts() {
    let verdict = |delta: &str| -> serde_json::Value {
        let args = [
            "stability",
            "--class",
            "2,0,-1,0",
            "--delta",
            delta,
            "--sub",
            "ideal:1,2,1,1",
            "--format",
            "json",
        ];
        serde_json::from_str(&stdout(&args)).unwrap()
    };
    let on = verdict("t+3");
    assert_eq!(
        (on["destabilizes"].as_bool(), on["strictly"].as_bool()),
        (Some(true), Some(true))
    );
    let below = verdict("t+2");
    assert_eq!(
        (below["destabilizes"].as_bool(), below["strictly"].as_bool()),
        (Some(false), Some(false))
    );
    let above = verdict("t+4");
    assert_eq!(
        (above["destabilizes"].as_bool(), above["strictly"].as_bool()),
        (Some(true), Some(false))
    );
}

#[test]
fn strata_locates_curves() {
    let curve = r#"{"planar":{"d":4,"chi":-1},"off_plane_points":1,"nonplanar":false}"#;
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "strata",
        "--preset",
        "rank2-0-3-8",
        "--curve",
        curve,
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v["stratum"], "Z1");
    assert_eq!(v["l"], 2);
    let elliptic = r#"{"planar":{"d":4,"chi":0},"off_plane_points":0,"nonplanar":true}"#;
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "strata",
        "--preset",
        "rank2-0-3-8",
        "--curve",
        elliptic,
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v["stratum"], "outside family (survives)");
    let wrong = r#"{"planar":{"d":3,"chi":0},"off_plane_points":0,"nonplanar":false}"#;
    assert_eq!(
        run(&["strata", "--preset", "rank2-0-3-8", "--curve", wrong], "1")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn every_wall_is_flagged() {
    for class in ["2,0,-1,0", "2,0,-5,6", "2,-1,-5/2,17/6"] {
        let r = build_report(&parse_class(class).unwrap(), 2, &ReportOptions::default()).unwrap();
        for w in &r.walls {
            assert!(w.golden || w.actuality == "verified" || w.actuality == "numerical");
        }
    }
}
