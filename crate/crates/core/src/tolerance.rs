use serde::Serialize;

use crate::scalar::Real;

/// Numeric policy shared by the integrators, series and bound comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ToleranceConfig<T> {
    pub abs_tol: T,
    pub rel_tol: T,
    pub max_series_terms: usize,
    pub max_refine_depth: usize,
}

impl<T: Real> Default for ToleranceConfig<T> {
    /// `abs_tol = 1e-12`, `rel_tol = 1e-10`, 500 series terms, depth 40.
    /// For `f32` the tolerances are floored at 64 ulp so equality cases
    /// still compare as satisfied.
    fn default() -> Self {
        let floor = T::lit(64.0) * T::epsilon();
        Self {
            abs_tol: T::lit(1e-12).max(floor),
            rel_tol: T::lit(1e-10).max(floor),
            max_series_terms: 500,
            max_refine_depth: 40,
        }
    }
}

impl<T: Real> ToleranceConfig<T> {
    pub fn with_abs_tol(mut self, abs_tol: T) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    /// Returns `None` unless every field is strictly positive.
    pub fn validated(self) -> Option<Self> {
        let ok = self.abs_tol > T::zero()
            && self.rel_tol > T::zero()
            && self.max_series_terms > 0
            && self.max_refine_depth > 0;
        ok.then_some(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let t = ToleranceConfig::<f64>::default();
        assert_eq!(t.abs_tol, 1e-12);
        assert_eq!(t.rel_tol, 1e-10);
        assert_eq!(t.max_series_terms, 500);
        assert_eq!(t.max_refine_depth, 40);
        assert!(t.validated().is_some());
        assert!(t.with_abs_tol(0.0).validated().is_none());
        let t32 = ToleranceConfig::<f32>::default();
        assert!(t32.abs_tol > 1e-12);
    }
}
