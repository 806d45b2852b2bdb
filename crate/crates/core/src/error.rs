use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("gap parameter mismatch: {left} vs {right}")]
    GapMismatch { left: u32, right: u32 },

    #[error("gap parameter must be at least 2, got {0}")]
    GapTooSmall(i64),

    #[error("F must be {rows}x{cols}, got {got}")]
    Dimension { rows: usize, cols: usize, got: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
