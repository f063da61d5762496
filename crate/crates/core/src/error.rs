use thiserror::Error;

use crate::graph::Color;
use crate::pattern::PatternKind;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("color {color} is outside the palette 1..={k}")]
    ColorOutOfRange { color: Color, k: u8 },

    #[error("palette mismatch: graph uses {graph} colors but r + s + t = {params}")]
    PaletteMismatch { graph: u8, params: u32 },

    #[error("r + s + t must be at least 1")]
    EmptyPalette,

    #[error("palette of {0} colors exceeds the supported maximum of 255")]
    PaletteTooLarge(u32),

    #[error("no classical Ramsey constant is tabulated for ({0}, {1})")]
    UnsupportedPair(PatternKind, PatternKind),

    #[error("routing maps onto color {0}, which the inner graph already uses")]
    RoutingCollision(Color),

    #[error("invalid routing: {0}")]
    InvalidRouting(String),

    #[error("construction produced an invalid witness: {0}")]
    Construction(String),

    #[error("lower-bound witness of order {0} exceeds the construction limit of {1}")]
    TooLarge(String, u64),

    #[error("no Gallai partition exists (the coloring has a rainbow triangle)")]
    NoPartition,

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("exhaustive search proved that no witness of order {n} exists for ({a}, {b})")]
    SearchExhausted { a: PatternKind, b: PatternKind, n: usize },

    #[error("search budget exhausted before the result was certain")]
    Inconclusive,

    #[error("sharpness example for ({a}, {b}) failed certification: {reason}")]
    Certification {
        a: PatternKind,
        b: PatternKind,
        reason: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
