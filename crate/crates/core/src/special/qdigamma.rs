//! q-digamma `ψ_q` and its derivatives for `q > 0`, `q != 1`.
//!
//! For `0 < q < 1`:
//! `ψ_q(x) = -ln(1-q) + ln q Σ_{k>=1} q^{kx} / (1 - q^k)`.
//! The argument is first shifted to `X = x + M` with `q^X <= 1/2` so the
//! series converges geometrically, and brought back with the exact
//! recurrence `ψ_q(x) = ψ_q(x+1) + ln q · q^x / (1 - q^x)`.
//!
//! For `q > 1`, `ψ_q(x) = ln q (x - 3/2) + ψ_{1/q}(x)`, which is the
//! reflected series `-ln(q-1) + ln q [x - 1/2 - Σ_{k>=1} q^{-kx}/(1-q^{-k})]`.

use crate::error::{HhError, Result};
use crate::scalar::Real;
use crate::tolerance::ToleranceConfig;

use super::series::SeriesResult;

const MAX_SHIFT: usize = 10_000_000;

/// `1 - e^{y}` for `y < 0`, accurate near 0.
fn one_minus_exp<T: Real>(y: T) -> T {
    -y.exp_m1()
}

/// m-th derivative of `y -> u/(1-u)` with `u = q^y`, `log_q = ln q`.
fn shift_term<T: Real>(log_q: T, y: T, order: u32) -> T {
    let u = (y * log_q).exp();
    let w = one_minus_exp(y * log_q);
    let one = T::one();
    match order {
        0 => u / w,
        1 => log_q * u / (w * w),
        2 => log_q * log_q * u * (one + u) / (w * w * w),
        _ => log_q.powi(3) * u * (one + T::lit(4.0) * u + u * u) / (w * w * w * w),
    }
}

fn below_one<T: Real>(q: T, x: T, order: u32, cfg: &ToleranceConfig<T>) -> Result<SeriesResult<T>> {
    let log_q = q.ln();
    // Shift so that q^X <= 1/2.
    let shift = {
        let need = (T::lit(0.5).ln() / log_q - x).ceil();
        if need <= T::zero() {
            0
        } else {
            need.to_usize().filter(|&m| m <= MAX_SHIFT).ok_or_else(|| {
                HhError::NoConvergence(format!(
                    "q_digamma: argument shift too large for q = {}, x = {}",
                    q.as_f64(),
                    x.as_f64()
                ))
            })?
        }
    };
    let big_x = x + T::from_usize_lossy(shift);
    let abs_log = log_q.abs();
    let m = order as i32;
    let mut sum = T::zero();
    let mut tail = T::infinity();
    let mut used = 0;
    for k in 1..=cfg.max_series_terms {
        let kk = T::from_usize_lossy(k);
        let qk = (kk * big_x * log_q).exp();
        let denom = one_minus_exp(kk * log_q);
        sum = sum + (kk * log_q).powi(m) * qk / denom;
        used = k;
        // Majorant of terms k' > k: |ln q|^{m+1} k'^m q^{k'X} / (1 - q^{k+1}).
        let k1 = T::from_usize_lossy(k + 1);
        let k2 = T::from_usize_lossy(k + 2);
        let ratio = (k2 / k1).powi(m) * (big_x * log_q).exp();
        if ratio < T::one() {
            let next = abs_log.powi(m + 1) * k1.powi(m) * (k1 * big_x * log_q).exp()
                / one_minus_exp(k1 * log_q);
            tail = next / (T::one() - ratio);
            if tail <= cfg.abs_tol {
                break;
            }
        }
    }
    if !(tail <= cfg.abs_tol) {
        return Err(HhError::NoConvergence(format!(
            "q_digamma: remainder above {} after {} terms (q = {}, x = {})",
            cfg.abs_tol.as_f64(),
            cfg.max_series_terms,
            q.as_f64(),
            x.as_f64()
        )));
    }
    let mut value = log_q * sum;
    if order == 0 {
        value = value - one_minus_exp(log_q).ln();
    }
    // Walk back from X to x.
    let mut back = T::zero();
    for j in (0..shift).rev() {
        back = back + shift_term(log_q, x + T::from_usize_lossy(j), order);
    }
    Ok(SeriesResult {
        value: value + log_q * back,
        terms_used: used,
        tail_bound: tail,
    })
}

fn check<T: Real>(q: T, x: T) -> Result<()> {
    if !(q > T::zero()) || q == T::one() || !q.is_finite() {
        return Err(HhError::InvalidArgument(format!("q-digamma needs q > 0, q != 1, got {}", q.as_f64())));
    }
    if !(x > T::zero()) || !x.is_finite() {
        return Err(HhError::InvalidArgument(format!("q-digamma needs x > 0, got {}", x.as_f64())));
    }
    Ok(())
}

fn eval<T: Real>(q: T, x: T, order: u32, cfg: &ToleranceConfig<T>) -> Result<SeriesResult<T>> {
    check(q, x)?;
    if q < T::one() {
        return below_one(q, x, order, cfg);
    }
    let mut s = below_one(q.recip(), x, order, cfg)?;
    let log_q = q.ln();
    match order {
        0 => s.value = s.value + log_q * (x - T::lit(1.5)),
        1 => s.value = s.value + log_q,
        _ => {}
    }
    Ok(s)
}

pub fn q_digamma<T: Real>(q: T, x: T, cfg: &ToleranceConfig<T>) -> Result<SeriesResult<T>> {
    eval(q, x, 0, cfg)
}

/// Derivative of order 1, 2 or 3 by term-wise differentiation.
pub fn q_digamma_deriv<T: Real>(q: T, x: T, order: u32, cfg: &ToleranceConfig<T>) -> Result<SeriesResult<T>> {
    if !(1..=3).contains(&order) {
        return Err(HhError::InvalidArgument(format!("q-digamma derivative order {order} not in 1..=3")));
    }
    eval(q, x, order, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> ToleranceConfig<f64> {
        ToleranceConfig::default()
    }

    /// Direct partial sums of the defining series, no shift.
    fn brute(q: f64, x: f64) -> f64 {
        let lq = q.ln();
        let s: f64 = (1..200_000).map(|k| q.powf(k as f64 * x) / (1.0 - q.powi(k))).sum();
        -(1.0 - q).ln() + lq * s
    }

    #[test]
    fn matches_unshifted_series() {
        for (q, x) in [(0.5, 1.0), (0.5, 0.1), (0.9, 0.3), (0.3, 4.0)] {
            let v = q_digamma(q, x, &cfg()).unwrap().value;
            assert!((v - brute(q, x)).abs() < 1e-11, "q = {q}, x = {x}");
        }
    }

    #[test]
    fn q_above_one_uses_reflected_series() {
        // -ln(q-1) + ln q [x - 1/2 - Σ_{k>=0} q^{-(k+x)} / (1 - q^{-(k+x)})]
        let (q, x) = (2.0f64, 1.7);
        let s: f64 = (0..400).map(|k| {
            let t = q.powf(-(k as f64 + x));
            t / (1.0 - t)
        }).sum();
        let want = -(q - 1.0).ln() + q.ln() * (x - 0.5 - s);
        assert!((q_digamma(q, x, &cfg()).unwrap().value - want).abs() < 1e-12);
    }

    #[test]
    fn derivatives_match_finite_differences() {
        for (q, x) in [(0.5, 1.5), (0.8, 0.7), (3.0, 2.0)] {
            let f = |y: f64| q_digamma(q, y, &cfg()).unwrap().value;
            let h = 1e-4;
            let d1 = (f(x - 2.0 * h) - f(x + 2.0 * h) + 8.0 * (f(x + h) - f(x - h))) / (12.0 * h);
            let got = q_digamma_deriv(q, x, 1, &cfg()).unwrap().value;
            assert!((got - d1).abs() < 1e-8 * (1.0 + d1.abs()), "q = {q}: {got} vs {d1}");
            let g = |y: f64| q_digamma_deriv(q, y, 2, &cfg()).unwrap().value;
            let d3 = (g(x - 2.0 * h) - g(x + 2.0 * h) + 8.0 * (g(x + h) - g(x - h))) / (12.0 * h);
            let got3 = q_digamma_deriv(q, x, 3, &cfg()).unwrap().value;
            assert!((got3 - d3).abs() < 1e-7 * (1.0 + d3.abs()), "q = {q}: {got3} vs {d3}");
        }
    }

    #[test]
    fn examples() {
        assert!(q_digamma(0.5, 2.0, &cfg()).unwrap().value > q_digamma(0.5, 1.0, &cfg()).unwrap().value);
        let gamma_e = 0.577_215_664_901_532_9;
        assert!((q_digamma(0.999, 1.0, &cfg()).unwrap().value + gamma_e).abs() < 5e-3);
        let d1 = q_digamma_deriv(0.5, 1.5, 1, &cfg()).unwrap();
        let d3 = q_digamma_deriv(0.5, 1.5, 3, &cfg()).unwrap();
        assert!(d1.value > 0.0 && d3.value > 0.0);
        assert!(d1.tail_bound <= 1e-12 && d3.tail_bound <= 1e-12);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(q_digamma(1.0, 1.0, &cfg()).is_err());
        assert!(q_digamma(-0.5, 1.0, &cfg()).is_err());
        assert!(q_digamma(0.5, 0.0, &cfg()).is_err());
        assert!(q_digamma_deriv(0.5, 1.0, 4, &cfg()).is_err());
    }
}
