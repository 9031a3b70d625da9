use thiserror::Error;

pub type Result<T, E = HhError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HhError {
    #[error("invalid interval [{a}, {b}]: need finite a < b")]
    InvalidInterval { a: f64, b: f64 },

    #[error("conjugate undefined for q = {q} (need q > 1)")]
    ConjugateUndefined { q: f64 },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { name: String, offset: usize },

    #[error("domain error: {op} undefined at x = {at}")]
    Domain { op: &'static str, at: f64 },

    #[error("convexity guard failed for {what} on [{lo}, {hi}]: midpoint test violated at ({x}, {y})")]
    NotConvex {
        what: String,
        lo: f64,
        hi: f64,
        x: f64,
        y: f64,
    },

    #[error("guard failed on panel {index}: {source}")]
    Panel {
        index: usize,
        #[source]
        source: Box<HhError>,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no convergence: {0}")]
    NoConvergence(String),
}

impl HhError {
    /// True for failures of a hypothesis check (domain, convexity or
    /// precondition) as opposed to malformed input.
    pub fn is_guard(&self) -> bool {
        match self {
            HhError::Domain { .. } | HhError::NotConvex { .. } | HhError::Precondition(_) => true,
            HhError::Panel { source, .. } => source.is_guard(),
            _ => false,
        }
    }
}
