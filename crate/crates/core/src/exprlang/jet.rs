//! Third-order forward-mode jets: value plus the first three derivatives.

use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::Serialize;

use crate::scalar::Real;

/// `(f, f', f'', f''')` at a point. Arithmetic follows the truncated
/// Leibniz rule and Faà di Bruno's formula for composition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Jet3<T> {
    pub v0: T,
    pub v1: T,
    pub v2: T,
    pub v3: T,
}

impl<T: Real> Jet3<T> {
    pub fn new(v0: T, v1: T, v2: T, v3: T) -> Self {
        Self { v0, v1, v2, v3 }
    }

    pub fn constant(c: T) -> Self {
        Self::new(c, T::zero(), T::zero(), T::zero())
    }

    /// The identity function seeded at `x`.
    pub fn variable(x: T) -> Self {
        Self::new(x, T::one(), T::zero(), T::zero())
    }

    pub fn scale(self, c: T) -> Self {
        Self::new(self.v0 * c, self.v1 * c, self.v2 * c, self.v3 * c)
    }

    /// Applies an outer function given its value and derivatives
    /// `d = [g(u), g'(u), g''(u), g'''(u)]` at `u = self.v0`.
    pub fn compose(self, d: [T; 4]) -> Self {
        let (u1, u2, u3) = (self.v1, self.v2, self.v3);
        let three = T::lit(3.0);
        Self::new(
            d[0],
            d[1] * u1,
            d[2] * u1 * u1 + d[1] * u2,
            d[3] * u1 * u1 * u1 + three * d[2] * u1 * u2 + d[1] * u3,
        )
    }

    pub fn recip(self) -> Self {
        let u = self.v0;
        let r = u.recip();
        let r2 = r * r;
        self.compose([r, -r2, T::lit(2.0) * r2 * r, T::lit(-6.0) * r2 * r2])
    }

    /// Integer power by binary exponentiation (exact for polynomials).
    pub fn powi(self, n: i64) -> Self {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut acc = Self::constant(T::one());
        let mut base = self;
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            k >>= 1;
            if k > 0 {
                base = base * base;
            }
        }
        acc
    }

    /// Real power; caller guarantees `self.v0 > 0`.
    pub fn powf(self, r: T) -> Self {
        let u = self.v0;
        let one = T::one();
        let two = T::lit(2.0);
        let three = T::lit(3.0);
        let p0 = u.powf(r);
        let p1 = r * u.powf(r - one);
        let p2 = r * (r - one) * u.powf(r - two);
        let p3 = r * (r - one) * (r - two) * u.powf(r - three);
        self.compose([p0, p1, p2, p3])
    }

    pub fn exp(self) -> Self {
        let e = self.v0.exp();
        self.compose([e, e, e, e])
    }

    /// Caller guarantees `self.v0 > 0`.
    pub fn ln(self) -> Self {
        let r = self.v0.recip();
        self.compose([self.v0.ln(), r, -r * r, T::lit(2.0) * r * r * r])
    }

    /// Caller guarantees `self.v0 > 0`.
    pub fn sqrt(self) -> Self {
        let s = self.v0.sqrt();
        let r = self.v0.recip();
        let half = T::lit(0.5);
        let d1 = half / s;
        let d2 = -half * d1 * r;
        let d3 = T::lit(-1.5) * d2 * r;
        self.compose([s, d1, d2, d3])
    }

    pub fn sinh(self) -> Self {
        let (s, c) = (self.v0.sinh(), self.v0.cosh());
        self.compose([s, c, s, c])
    }

    pub fn cosh(self) -> Self {
        let (s, c) = (self.v0.sinh(), self.v0.cosh());
        self.compose([c, s, c, s])
    }

    /// Caller guarantees `self.v0 != 0`.
    pub fn abs(self) -> Self {
        let sg = self.v0.signum();
        self.compose([self.v0.abs(), sg, T::zero(), T::zero()])
    }
}

impl<T: Real> Add for Jet3<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.v0 + o.v0, self.v1 + o.v1, self.v2 + o.v2, self.v3 + o.v3)
    }
}

impl<T: Real> Sub for Jet3<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.v0 - o.v0, self.v1 - o.v1, self.v2 - o.v2, self.v3 - o.v3)
    }
}

impl<T: Real> Neg for Jet3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.v0, -self.v1, -self.v2, -self.v3)
    }
}

impl<T: Real> Mul for Jet3<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let three = T::lit(3.0);
        let two = T::lit(2.0);
        Self::new(
            self.v0 * o.v0,
            self.v1 * o.v0 + self.v0 * o.v1,
            self.v2 * o.v0 + two * self.v1 * o.v1 + self.v0 * o.v2,
            self.v3 * o.v0 + three * (self.v2 * o.v1 + self.v1 * o.v2) + self.v0 * o.v3,
        )
    }
}

impl<T: Real> Div for Jet3<T> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.recip()
    }
}
