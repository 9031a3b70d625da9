//! Log-gamma by the Lanczos approximation (g = 7, nine terms) and the
//! Beta function built on it.

use crate::error::{HhError, Result};
use crate::scalar::Real;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn nonpositive(name: &str, x: impl Real) -> HhError {
    HhError::InvalidArgument(format!("{name} needs a positive argument, got {}", x.as_f64()))
}

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(nonpositive("log_gamma", x));
    }
    if x < T::lit(0.5) {
        // Γ(x) = Γ(x + 1) / x keeps the series in its accurate range.
        return Ok(lanczos(x + T::one()) - x.ln());
    }
    Ok(lanczos(x))
}

fn lanczos<T: Real>(x: T) -> T {
    let z = x - T::one();
    let mut sum = T::lit(LANCZOS[0]);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        sum = sum + T::lit(*c) / (z + T::from_usize_lossy(i));
    }
    let half = T::lit(0.5);
    let t = z + T::lit(LANCZOS_G) + half;
    half * (T::lit(2.0) * T::PI()).ln() + (z + half) * t.ln() - t + sum.ln()
}

pub fn gamma<T: Real>(x: T) -> Result<T> {
    log_gamma(x).map(T::exp)
}

/// `B(x, y) = exp(ln Γ(x) + ln Γ(y) - ln Γ(x + y))`.
pub fn beta<T: Real>(x: T, y: T) -> Result<T> {
    if !(y > T::zero()) {
        return Err(nonpositive("beta", y));
    }
    Ok((log_gamma(x)? + log_gamma(y)? - log_gamma(x + y)?).exp())
}
