//! Base interval `[a, b]` and the widened interval `[(3a-b)/2, (3b-a)/2]`
//! on which every derivative hypothesis is imposed.

use serde::Serialize;

use crate::error::{HhError, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval<T> {
    a: T,
    b: T,
}

impl<T: Real> Interval<T> {
    /// Rejects non-finite endpoints and `a >= b`.
    pub fn new(a: T, b: T) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || a >= b {
            return Err(HhError::InvalidInterval {
                a: a.as_f64(),
                b: b.as_f64(),
            });
        }
        Ok(Self { a, b })
    }

    #[inline]
    pub fn a(&self) -> T {
        self.a
    }

    #[inline]
    pub fn b(&self) -> T {
        self.b
    }

    #[inline]
    pub fn width(&self) -> T {
        self.b - self.a
    }

    #[inline]
    pub fn mid(&self) -> T {
        (self.a + self.b) / T::lit(2.0)
    }

    pub fn extend(&self) -> ExtendedInterval<T> {
        extend(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtendedInterval<T> {
    pub lo: T,
    pub hi: T,
    pub mid: T,
}

impl<T: Real> ExtendedInterval<T> {
    pub fn width(&self) -> T {
        self.hi - self.lo
    }

    pub fn contains(&self, x: T) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// `((3a-b)/2, (3b-a)/2, (a+b)/2)`, evaluated exactly as written.
pub fn extend<T: Real>(iv: &Interval<T>) -> ExtendedInterval<T> {
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    ExtendedInterval {
        lo: (three * iv.a - iv.b) / two,
        hi: (three * iv.b - iv.a) / two,
        mid: (iv.a + iv.b) / two,
    }
}

/// Hölder conjugate `p = q / (q - 1)`; only defined for `q > 1`.
pub fn conjugate_exponent<T: Real>(q: T) -> Result<T> {
    if !(q > T::one()) || !q.is_finite() {
        return Err(HhError::ConjugateUndefined { q: q.as_f64() });
    }
    Ok(q / (q - T::one()))
}
