//! Modified Bessel functions: `I_p` and its normalized form by power
//! series, `K_p` by its Laplace-type integral.

use crate::error::{HhError, Result};
use crate::oracle::integrate_range;
use crate::scalar::Real;
use crate::tolerance::ToleranceConfig;

use super::gamma::log_gamma;
use super::series::SeriesResult;

/// Sums `Σ t_n` where `t_0 = first` and `t_{n+1} = t_n * ratio(n)`, with
/// `ratio` positive and eventually decreasing. Stops once the geometric
/// majorant `t_{n+1} / (1 - ratio(n+1))` of the remainder is below
/// `abs_tol`.
fn ratio_series<T: Real>(
    first: T,
    ratio: impl Fn(usize) -> T,
    cfg: &ToleranceConfig<T>,
    what: &str,
) -> Result<SeriesResult<T>> {
    let mut sum = T::zero();
    let mut term = first;
    for n in 0..cfg.max_series_terms {
        sum = sum + term;
        let next = term * ratio(n);
        let r = ratio(n + 1);
        if r < T::one() {
            let tail = next.abs() / (T::one() - r);
            if tail <= cfg.abs_tol {
                return Ok(SeriesResult {
                    value: sum,
                    terms_used: n + 1,
                    tail_bound: tail,
                });
            }
        }
        term = next;
    }
    Err(HhError::NoConvergence(format!(
        "{what}: remainder above {} after {} terms",
        cfg.abs_tol.as_f64(),
        cfg.max_series_terms
    )))
}

fn check_order<T: Real>(p: T) -> Result<()> {
    if !(p > -T::one()) || !p.is_finite() {
        return Err(HhError::InvalidArgument(format!("Bessel order must exceed -1, got {}", p.as_f64())));
    }
    Ok(())
}

/// `I_p(x) = Σ (x/2)^{p+2n} / (n! Γ(p+n+1))` for `p > -1`, `x >= 0`.
pub fn bessel_i<T: Real>(p: T, x: T, cfg: &ToleranceConfig<T>) -> Result<SeriesResult<T>> {
    check_order(p)?;
    if !(x >= T::zero()) || !x.is_finite() {
        return Err(HhError::InvalidArgument(format!("bessel_i needs x >= 0, got {}", x.as_f64())));
    }
    let half = x / T::lit(2.0);
    if x == T::zero() {
        let value = if p == T::zero() { T::one() } else { T::zero() };
        return Ok(SeriesResult { value, terms_used: 1, tail_bound: T::zero() });
    }
    let first = (p * half.ln() - log_gamma(p + T::one())?).exp();
    let q = half * half;
    ratio_series(
        first,
        |n| {
            let n1 = T::from_usize_lossy(n + 1);
            q / (n1 * (p + n1))
        },
        cfg,
        "bessel_i",
    )
}

/// Series of `𝓘_p(x) = 2^p Γ(p+1) x^{-p} I_p(x)`, summed directly as
/// `Σ Γ(p+1) / (n! Γ(p+n+1)) (x/2)^{2n}`. Even in `x`, equal to 1 at 0.
pub fn normalized_i_series<T: Real>(p: T, x: T, cfg: &ToleranceConfig<T>) -> Result<SeriesResult<T>> {
    check_order(p)?;
    if !x.is_finite() {
        return Err(HhError::InvalidArgument("normalized_i needs finite x".into()));
    }
    let q = x * x / T::lit(4.0);
    ratio_series(
        T::one(),
        |n| {
            let n1 = T::from_usize_lossy(n + 1);
            q / (n1 * (p + n1))
        },
        cfg,
        "normalized_i",
    )
}

pub fn normalized_i<T: Real>(p: T, x: T, cfg: &ToleranceConfig<T>) -> Result<T> {
    normalized_i_series(p, x, cfg).map(|s| s.value)
}

/// `e^{-x cosh t} cosh(p t)` without overflowing for large `t`.
fn k_integrand<T: Real>(p: T, x: T, t: T) -> T {
    let ap = p.abs();
    let e = (-x * t.cosh() + ap * t).exp();
    e * (T::one() + (T::lit(-2.0) * ap * t).exp()) / T::lit(2.0)
}

/// Bound on `∫_T^∞ e^{-x cosh t} cosh(p t) dt`, using
/// `cosh t >= cosh T + sinh T (t - T)` and `cosh(pt) <= e^{|p| t}`.
fn k_tail<T: Real>(p: T, x: T, cut: T) -> Option<T> {
    let slope = x * cut.sinh() - p.abs();
    if slope <= T::zero() {
        return None;
    }
    Some((-x * cut.cosh() + p.abs() * cut).exp() / slope)
}

/// `K_p(x) = ∫_0^∞ e^{-x cosh t} cosh(p t) dt` for `x > 0`. The range is
/// cut at the first `T` (in steps of 1/4) whose tail bound is below
/// `abs_tol / 2`; the finite part goes to the reference integrator at
/// `abs_tol / 2`. `tail_bound` is the sum of both error terms.
pub fn bessel_k<T: Real>(p: T, x: T, cfg: &ToleranceConfig<T>) -> Result<SeriesResult<T>> {
    if !(x > T::zero()) || !x.is_finite() || !p.is_finite() {
        return Err(HhError::InvalidArgument(format!(
            "bessel_k needs x > 0, got p = {}, x = {}",
            p.as_f64(),
            x.as_f64()
        )));
    }
    let half_tol = cfg.abs_tol / T::lit(2.0);
    let step = T::lit(0.25);
    let mut cut = step;
    let tail = loop {
        if let Some(tail) = k_tail(p, x, cut) {
            if tail <= half_tol {
                break tail;
            }
        }
        cut = cut + step;
        if cut > T::lit(200.0) {
            return Err(HhError::NoConvergence(format!(
                "bessel_k: tail of K_{}({}) not boundable",
                p.as_f64(),
                x.as_f64()
            )));
        }
    };
    let body = integrate_range(|t| Ok(k_integrand(p, x, t)), T::zero(), cut, half_tol, cfg)?;
    Ok(SeriesResult {
        value: body.value,
        terms_used: (cut / step).to_usize().unwrap_or(0),
        tail_bound: tail + body.err_est,
    })
}
