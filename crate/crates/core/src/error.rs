use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Coordinates outside `Z x Z x (1/2)Z x (1/6)Z`.
    NotInLattice,
    UnsupportedRank(i64),
    RankTooSmall(i64),
    InvalidDegree(i64),
    InvalidTwist(i64),
    /// Expected a polynomial of the form `d*t + chi` with integer coefficients.
    NonLinear,
    Unrealizable {
        degree: i64,
        euler: i64,
    },
    InconsistentPolynomial,
    StratumOutOfRange {
        index: i64,
        l: i64,
    },
    /// No recipe covers this sheaf or configuration.
    NoFormula,
    UnsupportedComposite,
    /// The class has no 0-dimensional wall family with positive critical values.
    NoFamily,
    C1Nonzero,
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInLattice => write!(f, "class is not in the lattice Z x Z x 1/2 Z x 1/6 Z"),
            Error::UnsupportedRank(r) => write!(f, "unsupported rank {r}"),
            Error::RankTooSmall(r) => write!(f, "rank {r} is too small"),
            Error::InvalidDegree(d) => write!(f, "invalid degree {d}"),
            Error::InvalidTwist(l) => write!(f, "invalid twist {l}"),
            Error::NonLinear => write!(f, "expected an integer polynomial d*t + chi"),
            Error::Unrealizable { degree, euler } => {
                write!(f, "no subscheme with degree {degree} and euler characteristic {euler}")
            }
            Error::InconsistentPolynomial => {
                write!(f, "curve description does not match the curve polynomial")
            }
            Error::StratumOutOfRange { index, l } => {
                write!(f, "stratum index {index} exceeds the family length {l}")
            }
            Error::NoFormula => write!(f, "no formula for this configuration"),
            Error::UnsupportedComposite => write!(f, "unsupported composite sheaf"),
            Error::NoFamily => write!(f, "class has no 0-dimensional wall family"),
            Error::C1Nonzero => write!(f, "only c1 = 0 is supported"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
