use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Schema(String),
    OpenComponent(String),
    NotPlanar { pieces: usize },
    UnknownComponent(String),
    SharedArc(String),
    MissingColor(usize),
    InvalidColoring(String),
    ColorOutOfRange(u32),
    NotSquare,
    NotSymmetric,
    DimensionMismatch,
    BadExponent,
    LiftDoesNotClose { component: String, sheet: u8 },
    InfiniteOrder,
    NotRationalHomologySphere,
    ArcNotOnAlpha(usize),
    MissingMonodromy(String),
    MissingBlock { row: String, col: String },
    NotCharacteristic,
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Schema(m) => write!(f, "schema violation: {m}"),
            Error::OpenComponent(c) => write!(f, "open component: {c}"),
            Error::NotPlanar { pieces } => {
                write!(
                    f,
                    "planar code is not realizable ({pieces} piece(s) fail V - E + F = 2)"
                )
            }
            Error::UnknownComponent(c) => write!(f, "unknown component: {c}"),
            Error::SharedArc(c) => write!(f, "components share an arc: {c}"),
            Error::MissingColor(a) => write!(f, "missing coloring entry for arc {a}"),
            Error::InvalidColoring(m) => write!(f, "invalid coloring: {m}"),
            Error::ColorOutOfRange(c) => write!(f, "color out of range: {c}"),
            Error::NotSquare => write!(f, "matrix is not square"),
            Error::NotSymmetric => write!(f, "matrix is not symmetric"),
            Error::DimensionMismatch => write!(f, "dimension mismatch"),
            Error::BadExponent => write!(f, "root of unity exponent is divisible by p"),
            Error::LiftDoesNotClose { component, sheet } => {
                write!(f, "lift does not close: {component} from sheet {sheet}")
            }
            Error::InfiniteOrder => write!(f, "cycle has infinite order in H1"),
            Error::NotRationalHomologySphere => {
                write!(f, "cover is not a rational homology sphere")
            }
            Error::ArcNotOnAlpha(a) => write!(f, "arc {a} is not an arc of alpha"),
            Error::MissingMonodromy(c) => write!(f, "missing monodromy for {c}"),
            Error::MissingBlock { row, col } => write!(f, "missing block ({row}, {col}+)"),
            Error::NotCharacteristic => write!(f, "vector is not a characteristic class"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
        }
    }
}

impl core::error::Error for Error {}
