//! The worked classes, stored as data. Rows here are never recomputed; the
//! report compares the enumerator against them.

use pairwalls_core::cohom::CurvePiece;
use pairwalls_core::{NumClass, RatPoly};

use crate::error::CliResult;
use crate::parse::parse_class;

/// One row of a published wall chart: the group and the Hilbert
/// polynomials of `O_A` and `O_B`.
#[derive(Clone, Copy, Debug)]
pub struct GoldenRow {
    pub group: i64,
    pub sub_a: &'static str,
    pub quot_b: &'static str,
    /// Critical value as printed next to the row, when one is printed.
    pub printed_delta: Option<&'static str>,
}

/// `(group, P_A, P_B, printed delta)`.
pub type GoldenPolys = (i64, RatPoly, RatPoly, Option<RatPoly>);

#[derive(Clone, Copy, Debug)]
pub struct CurveType {
    pub description: &'static str,
    pub pieces: &'static [CurvePiece],
}

#[derive(Clone, Copy, Debug)]
pub struct Preset {
    pub name: &'static str,
    pub class: &'static str,
    pub twist: i64,
    pub rows: &'static [GoldenRow],
    pub curve_types: &'static [CurveType],
    pub notes: &'static [&'static str],
}

const fn row(group: i64, sub_a: &'static str, quot_b: &'static str) -> GoldenRow {
    GoldenRow {
        group,
        sub_a,
        quot_b,
        printed_delta: None,
    }
}

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "rank2-m1-1-1",
        class: "2,-1,-1/2,5/6",
        twist: 1,
        rows: &[row(0, "0", "t+1")],
        curve_types: &[CurveType {
            description: "line",
            pieces: &[CurvePiece::Planar { d: 1 }],
        }],
        notes: &[
            "no wall inside (0, W_empty): every stable pair is a point on a line, and the sheaf side and the curve side are the same chamber",
        ],
    },
    Preset {
        name: "null-correlation",
        class: "2,0,-1,0",
        twist: 1,
        rows: &[
            row(0, "0", "2t+2"),
            GoldenRow { group: 1, sub_a: "t+2", quot_b: "0", printed_delta: Some("t+1") },
            GoldenRow { group: 1, sub_a: "t+1", quot_b: "1", printed_delta: Some("t-1") },
        ],
        curve_types: &[
            CurveType {
                description: "two skew lines",
                pieces: &[CurvePiece::Planar { d: 1 }, CurvePiece::Planar { d: 1 }],
            },
            CurveType {
                description: "conic and a point",
                pieces: &[CurvePiece::Planar { d: 2 }, CurvePiece::Points(1)],
            },
        ],
        notes: &[
            "two components over the Hilbert scheme of 2t+2, of dimensions 9 and 11",
            "planar curves with an extra point are removed on the way down to the sheaf chamber",
        ],
    },
    Preset {
        name: "rank2-0-3-8",
        class: "2,0,-3,4",
        twist: 1,
        rows: &[
            row(0, "0", "4t"),
            row(1, "3t+2", "0"),
            row(1, "3t+1", "1"),
            row(1, "3t", "2"),
            row(1, "2t+1", "t+1"),
        ],
        curve_types: &[
            CurveType {
                description: "plane quartic with two points",
                pieces: &[CurvePiece::Planar { d: 4 }, CurvePiece::Points(2)],
            },
            CurveType {
                description: "elliptic quartic",
                pieces: &[CurvePiece::Smooth { d: 4, genus: 1 }],
            },
        ],
        notes: &[
            "the Hilbert scheme of 4t has a plane quartic component and an elliptic quartic component",
            "smoothness and irreducibility of the sheaf-side moduli are recorded here only, not checked",
        ],
    },
    Preset {
        name: "rank2-0-2-0",
        class: "2,0,-2,0",
        twist: 1,
        rows: &[
            row(0, "0", "3t+3"),
            row(1, "2t+4", "0"),
            row(1, "2t+3", "1"),
            row(1, "2t+2", "2"),
            row(1, "2t+1", "3"),
            row(1, "t+3", "t+1"),
        ],
        curve_types: &[
            CurveType {
                description: "plane cubic with three points",
                pieces: &[CurvePiece::Planar { d: 3 }, CurvePiece::Points(3)],
            },
            CurveType {
                description: "twisted cubic with two points",
                pieces: &[CurvePiece::Smooth { d: 3, genus: 0 }, CurvePiece::Points(2)],
            },
            CurveType {
                description: "conic, disjoint line and a point",
                pieces: &[CurvePiece::Planar { d: 2 }, CurvePiece::Planar { d: 1 }, CurvePiece::Points(1)],
            },
            CurveType {
                description: "three disjoint lines",
                pieces: &[CurvePiece::Planar { d: 1 }, CurvePiece::Planar { d: 1 }, CurvePiece::Planar { d: 1 }],
            },
        ],
        notes: &[
            "five components over the Hilbert scheme of 3t+3; the double-line component is removed at the line wall",
            "only three components survive to the sheaf chamber",
        ],
    },
    Preset {
        name: "rank2-0-2-2",
        class: "2,0,-2,1",
        twist: 1,
        rows: &[
            row(0, "0", "3t+2"),
            row(1, "2t+3", "0"),
            row(1, "2t+2", "1"),
            row(1, "2t+1", "2"),
            row(1, "t+2", "t+1"),
        ],
        curve_types: &[
            CurveType {
                description: "plane cubic with two points",
                pieces: &[CurvePiece::Planar { d: 3 }, CurvePiece::Points(2)],
            },
            CurveType {
                description: "twisted cubic with a point",
                pieces: &[CurvePiece::Smooth { d: 3, genus: 0 }, CurvePiece::Points(1)],
            },
            CurveType {
                description: "conic and a disjoint line",
                pieces: &[CurvePiece::Planar { d: 2 }, CurvePiece::Planar { d: 1 }],
            },
        ],
        notes: &["the Gieseker moduli space has two generically saturated components"],
    },
];

impl Preset {
    pub fn class(&self) -> NumClass {
        parse_class(self.class).expect("preset class is valid")
    }

    /// Golden rows parsed into polynomials.
    pub fn golden(&self) -> CliResult<Vec<GoldenPolys>> {
        self.rows
            .iter()
            .map(|r| {
                let printed = r.printed_delta.map(str::parse).transpose()?;
                Ok((r.group, r.sub_a.parse()?, r.quot_b.parse()?, printed))
            })
            .collect()
    }
}

pub fn by_name(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}

/// The preset with this class and twist, if any.
pub fn lookup(v: &NumClass, k: i64) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.twist == k && &p.class() == v)
}
