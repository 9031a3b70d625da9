use serde::Serialize;

/// Truncated series (or truncated integral) value with a bound on the
/// discarded remainder.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesResult<T> {
    pub value: T,
    pub terms_used: usize,
    pub tail_bound: T,
}
