//! Three-point inequalities instantiated for normalized Bessel `𝓘_p`,
//! `K_p` and the q-digamma function.

use crate::error::{HhError, Result};
use crate::interval::Interval;
use crate::oracle::diff_ref;
use crate::report::BoundReport;
use crate::scalar::Real;
use crate::tolerance::ToleranceConfig;

use super::bessel::{bessel_k, normalized_i};
use super::qdigamma::{q_digamma, q_digamma_deriv};

fn positive_interval<T: Real>(a: T, b: T) -> Result<Interval<T>> {
    if !(a > T::zero()) {
        return Err(HhError::Precondition(format!("need 0 < a < b, got a = {}", a.as_f64())));
    }
    Interval::new(a, b)
}

fn require_3a_gt_b<T: Real>(a: T, b: T, what: &str) -> Result<()> {
    let gap = T::lit(3.0) * a - b;
    if gap > T::zero() {
        Ok(())
    } else {
        Err(HhError::Precondition(format!(
            "{what} needs 3a - b > 0, got 3a - b = {}",
            gap.as_f64()
        )))
    }
}

/// `|(𝓘_p(b) - 𝓘_p(a)) / (b - a)|` against
/// `[lo 𝓘_{p+1}(lo) + hi 𝓘_{p+1}(hi) + (a+b) 𝓘_{p+1}(mid)] / (8(p+1))`.
/// `lo` may be negative; `𝓘` is even so it is evaluated there as is.
pub fn normalized_bessel_check<T: Real>(p: T, a: T, b: T, cfg: &ToleranceConfig<T>) -> Result<BoundReport<T>> {
    let iv = positive_interval(a, b)?;
    if !(p > -T::one()) {
        return Err(HhError::Precondition(format!("need p > -1, got {}", p.as_f64())));
    }
    let e = iv.extend();
    let p1 = p + T::one();
    let lhs = ((normalized_i(p, b, cfg)? - normalized_i(p, a, cfg)?) / iv.width()).abs();
    let rhs = (e.lo * normalized_i(p1, e.lo, cfg)?
        + e.hi * normalized_i(p1, e.hi, cfg)?
        + (a + b) * normalized_i(p1, e.mid, cfg)?)
        / (T::lit(8.0) * p1);
    Ok(BoundReport::new(
        "prop6_I1",
        lhs,
        rhs,
        cfg.abs_tol,
        format!("p = {}, a = {}, b = {}", p.as_f64(), a.as_f64(), b.as_f64()),
    ))
}

/// The hyperbolic special case:
/// `|(cosh b - cosh a)/(b - a)| <= [sinh lo + sinh hi + 2 sinh mid] / 4`.
pub fn hyperbolic_check<T: Real>(a: T, b: T, cfg: &ToleranceConfig<T>) -> Result<BoundReport<T>> {
    let iv = positive_interval(a, b)?;
    let e = iv.extend();
    let lhs = ((b.cosh() - a.cosh()) / iv.width()).abs();
    let rhs = (e.lo.sinh() + e.hi.sinh() + T::lit(2.0) * e.mid.sinh()) / T::lit(4.0);
    Ok(BoundReport::new(
        "prop6_I11",
        lhs,
        rhs,
        cfg.abs_tol,
        format!("a = {}, b = {}", a.as_f64(), b.as_f64()),
    ))
}

/// Relative discrepancy of `𝓘_p'(x) = x 𝓘_{p+1}(x) / (2(p+1))`, with the
/// left side from central differences; reported against `1e-6`.
pub fn derivative_formula_check<T: Real>(p: T, x: T, cfg: &ToleranceConfig<T>) -> Result<BoundReport<T>> {
    let fd = diff_ref(|y| normalized_i(p, y, cfg), x, 1)?;
    let formula = x * normalized_i(p + T::one(), x, cfg)? / (T::lit(2.0) * (p + T::one()));
    let rel = (fd - formula).abs() / fd.abs().max(T::min_positive_value());
    Ok(BoundReport::new(
        "prop6_eq_mm",
        rel,
        T::lit(1e-6),
        T::zero(),
        format!("p = {}, x = {}", p.as_f64(), x.as_f64()),
    ))
}

/// `F_p(a, b)` as displayed, built from three `K_{p+1}` evaluations.
pub fn f_p<T: Real>(p: T, a: T, b: T, cfg: &ToleranceConfig<T>) -> Result<T> {
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let (s, l, h) = ((a + b), three * a - b, three * b - a);
    let k = |x: T| bessel_k(p + T::one(), x, cfg).map(|r| r.value);
    Ok(two.powf(p + T::one()) * (l * h).powf(p) * k(s / two)?
        + (two * s * h).powf(p) * k(l / two)?
        + (two * s * l).powf(p) * k(h / two)?)
}

/// `|(a^p K_p(b) - b^p K_p(a)) / ((ab)^p (b-a))|` against
/// `F_p(a,b) / [(a+b)(3a-b)(3b-a)]^p`, for `p > 1` and `3a > b`.
pub fn bessel_k_check<T: Real>(p: T, a: T, b: T, cfg: &ToleranceConfig<T>) -> Result<BoundReport<T>> {
    let iv = positive_interval(a, b)?;
    if !(p > T::one()) {
        return Err(HhError::Precondition(format!("need p > 1, got {}", p.as_f64())));
    }
    require_3a_gt_b(a, b, "K_p inequality")?;
    let three = T::lit(3.0);
    let kp = |x: T| bessel_k(p, x, cfg).map(|r| r.value);
    let lhs = ((a.powf(p) * kp(b)? - b.powf(p) * kp(a)?) / ((a * b).powf(p) * iv.width())).abs();
    let denom = ((a + b) * (three * a - b) * (three * b - a)).powf(p);
    let rhs = f_p(p, a, b, cfg)? / denom;
    Ok(BoundReport::new(
        "prop7_II",
        lhs,
        rhs,
        cfg.abs_tol,
        format!("p = {}, a = {}, b = {}", p.as_f64(), a.as_f64(), b.as_f64()),
    ))
}

/// All Bessel checks that apply to `(p, a, b)`: the normalized-Bessel
/// inequality, its hyperbolic case, the derivative formula at the
/// midpoint, and, when `p > 1`, the `K_p` inequality.
pub fn bessel_prop_checks<T: Real>(p: T, a: T, b: T, cfg: &ToleranceConfig<T>) -> Result<Vec<BoundReport<T>>> {
    let iv = positive_interval(a, b)?;
    let mut out = vec![
        normalized_bessel_check(p, a, b, cfg)?,
        hyperbolic_check(a, b, cfg)?,
        derivative_formula_check(p, iv.mid(), cfg)?,
    ];
    if p > T::one() {
        out.push(bessel_k_check(p, a, b, cfg)?);
    }
    Ok(out)
}

/// Three-point bound for `f = ψ_q'` (first report) and its second-order
/// refinement with `ψ_q'''` (second report). Requires `3a > b`.
pub fn qdigamma_prop_checks<T: Real>(q: T, a: T, b: T, cfg: &ToleranceConfig<T>) -> Result<Vec<BoundReport<T>>> {
    let iv = positive_interval(a, b)?;
    require_3a_gt_b(a, b, "q-digamma inequalities")?;
    let e = iv.extend();
    let d = |x: T, order: u32| q_digamma_deriv(q, x, order, cfg).map(|s| s.value);
    let slope = (q_digamma(q, b, cfg)?.value - q_digamma(q, a, cfg)?.value) / iv.width();
    let avg = (d(e.lo, 1)? + d(e.hi, 1)? + T::lit(2.0) * d(e.mid, 1)?) / T::lit(4.0);
    let w = iv.width();
    let rhs9 = w * w * (d(e.lo, 3)? + d(e.hi, 3)?) / T::lit(6.0);
    let inputs = format!("q = {}, a = {}, b = {}", q.as_f64(), a.as_f64(), b.as_f64());
    Ok(vec![
        BoundReport::new("prop8", slope.abs(), avg, cfg.abs_tol, inputs.clone()),
        BoundReport::new("prop9", (slope - avg).abs(), rhs9, cfg.abs_tol, inputs),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> ToleranceConfig<f64> {
        ToleranceConfig::default()
    }

    #[test]
    fn hyperbolic_case_matches_normalized_form() {
        // 𝓘_{-1/2} = cosh and x 𝓘_{1/2}(x) = sinh x.
        for (a, b) in [(1.0, 2.0), (0.5, 0.9), (2.0, 7.0)] {
            let gen = normalized_bessel_check(-0.5, a, b, &cfg()).unwrap();
            let hyp = hyperbolic_check(a, b, &cfg()).unwrap();
            assert!((gen.lhs - hyp.lhs).abs() <= 1e-10 * (1.0 + hyp.lhs));
            assert!((gen.rhs - hyp.rhs).abs() <= 1e-10 * (1.0 + hyp.rhs));
        }
        let r = hyperbolic_check(1.0, 2.0, &cfg()).unwrap();
        assert!((r.lhs - (2f64.cosh() - 1f64.cosh())).abs() < 1e-15);
        let want = (0.5f64.sinh() + 2.5f64.sinh() + 2.0 * 1.5f64.sinh()) / 4.0;
        assert!((r.rhs - want).abs() < 1e-15);
        assert!(r.satisfied);
    }

    #[test]
    fn k_inequality_example() {
        let r = bessel_k_check(2.0, 1.0, 1.5, &cfg()).unwrap();
        assert!(r.lhs.is_finite() && r.rhs.is_finite());
        assert!(r.satisfied, "{r:?}");
        assert!(matches!(bessel_k_check(2.0, 1.0, 3.0, &cfg()), Err(HhError::Precondition(_))));
        assert!(matches!(bessel_k_check(1.0, 1.0, 1.5, &cfg()), Err(HhError::Precondition(_))));
    }

    #[test]
    fn bessel_bundle() {
        let rs = bessel_prop_checks(2.0, 1.0, 1.5, &cfg()).unwrap();
        assert_eq!(rs.len(), 4);
        assert!(rs.iter().all(|r| r.satisfied), "{rs:?}");
        let rs = bessel_prop_checks(0.5, 1.0, 4.0, &cfg()).unwrap();
        assert_eq!(rs.len(), 3);
    }

    #[test]
    fn qdigamma_examples() {
        for (q, a, b) in [(0.5, 1.0, 2.0), (2.0, 2.0, 3.0)] {
            let rs = qdigamma_prop_checks(q, a, b, &cfg()).unwrap();
            assert_eq!(rs.len(), 2);
            assert!(rs.iter().all(|r| r.satisfied), "{rs:?}");
        }
        assert!(matches!(qdigamma_prop_checks(0.5, 1.0, 4.0, &cfg()), Err(HhError::Precondition(_))));
    }
}
