//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("divergence: {0}")]
    Divergence(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("range error: {0}")]
    Range(String),

    #[error("point lies on the curve (within tolerance)")]
    OnCurve,

    #[error("center is not admissible for this curve (winding number != 1)")]
    InvalidCenter,

    #[error("ring degenerates: {0}")]
    DegenerateRing(String),

    #[error("no admissible center found for roundness optimization")]
    NoCenter,

    #[error("circle map is not bilipschitz: min f' = {min_fprime}")]
    NotBilipschitz { min_fprime: f64 },

    #[error("insufficient regularity: {0}")]
    InsufficientRegularity(String),

    #[error("degenerate derivative |G_z| < 1e-10 at node (r={r}, theta={theta})")]
    DegenerateDerivative { r: f64, theta: f64 },

    #[error("infinite distortion |mu| >= 1 at node (r={r}, theta={theta})")]
    InfiniteDistortion { r: f64, theta: f64 },

    #[error("domain mask is not doubly connected: {0}")]
    Topology(String),

    #[error("grid too coarse: {0}")]
    Resolution(String),

    #[error("gluing seam mismatch: max jump {max_jump:.3e} exceeds tolerance")]
    Gluing { max_jump: f64 },

    #[error("solver failed: {0}")]
    Solver(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
