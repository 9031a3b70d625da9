use serde::Serialize;

use crate::scalar::Real;

/// One evaluated inequality instance `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport<T> {
    pub label: String,
    pub lhs: T,
    pub rhs: T,
    pub margin: T,
    pub satisfied: bool,
    /// Set for inequalities known to fail as printed for some inputs.
    pub fragile: bool,
    pub inputs: String,
}

impl<T: Real> BoundReport<T> {
    pub fn new(label: impl Into<String>, lhs: T, rhs: T, abs_tol: T, inputs: impl Into<String>) -> Self {
        let label = label.into();
        assert!(!label.is_empty(), "report label must be nonempty");
        let margin = rhs - lhs;
        Self {
            label,
            lhs,
            rhs,
            margin,
            // NaN margins compare false and so count as violations.
            satisfied: margin >= -abs_tol,
            fragile: false,
            inputs: inputs.into(),
        }
    }

    pub fn fragile(mut self) -> Self {
        self.fragile = true;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn satisfied_within_tolerance() {
        let r = BoundReport::new("t", 1.0 + 5e-13, 1.0, 1e-12, "");
        assert!(r.satisfied);
        let r = BoundReport::<f64>::new("t", 1.0 + 5e-12, 1.0, 1e-12, "");
        assert!(!r.satisfied);
        assert!((r.margin + 5e-12).abs() < 1e-15);
        let r = BoundReport::new("t", f64::NAN, 1.0, 1e-12, "");
        assert!(!r.satisfied);
    }
}
