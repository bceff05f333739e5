use thiserror::Error;

/// Errors produced by geometric constructions and scalar functions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("erosion by {eps} empties the body (inradius {inradius})")]
    EmptyErosion { eps: f64, inradius: f64 },

    #[error("expected a triangle, got {0} vertices")]
    NotATriangle(usize),

    #[error("indisk has no three contact points in acute configuration")]
    NotThreeContact,

    #[error("requested width {requested} exceeds triangle width {max}")]
    InvalidWidth { requested: f64, max: f64 },

    #[error("placement width {got} does not match body width {expected}")]
    WidthMismatch { expected: f64, got: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
