//! Hermite-Hadamard type inequalities evaluated as `(lhs, rhs)` pairs.
//!
//! Every left side is a mean integral from the reference integrator; every
//! right side is a closed-form expression in `f`, `f'` or `f''` at the
//! points of the extended interval `[(3a-b)/2, (3b-a)/2]`.

use serde::Serialize;

use crate::convexity::{require_convex, sample_convexity, GUARD_SAMPLES};
use crate::error::{HhError, Result};
use crate::exprlang::Expr;
use crate::interval::{conjugate_exponent, ExtendedInterval, Interval};
use crate::oracle::{integrate_range, integrate_ref};
use crate::report::BoundReport;
use crate::scalar::Real;
use crate::special::log_gamma;
use crate::tolerance::ToleranceConfig;

/// `(1/(b-a)) ∫_a^b f` from the reference integrator at `abs_tol`.
pub fn mean_integral<T: Real>(f: &Expr<T>, iv: &Interval<T>, cfg: &ToleranceConfig<T>) -> Result<T> {
    let r = integrate_ref(|x| f.eval(x), iv, cfg.abs_tol, cfg)?;
    Ok(r.value / iv.width())
}

fn echo<T: Real>(f: &Expr<T>, iv: &Interval<T>, q: Option<T>) -> String {
    match q {
        Some(q) => format!("f = {f}, a = {}, b = {}, q = {}", iv.a().as_f64(), iv.b().as_f64(), q.as_f64()),
        None => format!("f = {f}, a = {}, b = {}", iv.a().as_f64(), iv.b().as_f64()),
    }
}

/// Domain scan plus midpoint-convexity probe of `f` on `[lo, hi]`.
fn guard_convex<T: Real>(f: &Expr<T>, lo: T, hi: T, cfg: &ToleranceConfig<T>) -> Result<()> {
    f.check_domain(lo, hi)?;
    require_convex(|x| f.eval(x), lo, hi, cfg, &f.to_string())
}

/// Guard that `|f^(order)|^q` is convex on the extended interval.
fn guard_derivative_power<T: Real>(
    f: &Expr<T>,
    e: &ExtendedInterval<T>,
    order: usize,
    q: T,
    cfg: &ToleranceConfig<T>,
) -> Result<()> {
    f.check_domain(e.lo, e.hi)?;
    let what = format!("|d^{order}/dx^{order} {f}|^{}", q.as_f64());
    require_convex(|x| Ok(f.derivative(x, order)?.abs().powf(q)), e.lo, e.hi, cfg, &what)
}

fn check_q<T: Real>(q: T) -> Result<Option<T>> {
    if !(q >= T::one()) || !q.is_finite() {
        return Err(HhError::InvalidArgument(format!("need q >= 1, got {}", q.as_f64())));
    }
    Ok(if q > T::one() { Some(conjugate_exponent(q)?) } else { None })
}

/// Classical inequality on `[a, b]`: `f(mid) <= mean` and
/// `mean <= (f(a) + f(b))/2`, after a convexity probe on `[a, b]`.
pub fn hh_classic_check<T: Real>(
    f: &Expr<T>,
    iv: &Interval<T>,
    cfg: &ToleranceConfig<T>,
) -> Result<(BoundReport<T>, BoundReport<T>)> {
    guard_convex(f, iv.a(), iv.b(), cfg)?;
    let mean = mean_integral(f, iv, cfg)?;
    let fm = f.eval(iv.mid())?;
    let ends = (f.eval(iv.a())? + f.eval(iv.b())?) / T::lit(2.0);
    let inputs = echo(f, iv, None);
    Ok((
        BoundReport::new("eq1_left", fm, mean, cfg.abs_tol, inputs.clone()),
        BoundReport::new("eq1_right", mean, ends, cfg.abs_tol, inputs),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Lemma {
    /// `(f(a)+f(b))/2 - mean = (b-a)^2/2 ∫_0^1 t(1-t) f''(ta+(1-t)b) dt`.
    Lemma1,
    /// `mean - f(mid) = (b-a)[∫_0^{1/2} t f'(b+(a-b)t) dt + ∫_{1/2}^1 (t-1) f'(b+(a-b)t) dt]`.
    Lemma2,
}

/// `|LHS - RHS|` of the chosen identity, every integral from the
/// reference integrator.
pub fn lemma_identity_residual<T: Real>(
    which: Lemma,
    f: &Expr<T>,
    iv: &Interval<T>,
    cfg: &ToleranceConfig<T>,
) -> Result<T> {
    f.check_domain(iv.a(), iv.b())?;
    let (a, b) = (iv.a(), iv.b());
    let w = iv.width();
    let mean = mean_integral(f, iv, cfg)?;
    let tol = cfg.abs_tol;
    let one = T::one();
    let half = T::lit(0.5);
    match which {
        Lemma::Lemma1 => {
            let lhs = (f.eval(a)? + f.eval(b)?) / T::lit(2.0) - mean;
            let inner = integrate_range(
                |t| Ok(t * (one - t) * f.derivative(t * a + (one - t) * b, 2)?),
                T::zero(),
                one,
                tol,
                cfg,
            )?;
            let rhs = w * w / T::lit(2.0) * inner.value;
            Ok((lhs - rhs).abs())
        }
        Lemma::Lemma2 => {
            let lhs = mean - f.eval(iv.mid())?;
            let at = |t: T| b + (a - b) * t;
            let left = integrate_range(|t| Ok(t * f.derivative(at(t), 1)?), T::zero(), half, tol, cfg)?;
            let right = integrate_range(|t| Ok((t - one) * f.derivative(at(t), 1)?), half, one, tol, cfg)?;
            let rhs = w * (left.value + right.value);
            Ok((lhs - rhs).abs())
        }
    }
}

/// Three-point bound on the extended interval:
/// `f(mid) <= mean <= [2 f(mid) + f(hi) + f(lo)] / 4`.
pub fn three_point_check<T: Real>(
    f: &Expr<T>,
    iv: &Interval<T>,
    cfg: &ToleranceConfig<T>,
) -> Result<(BoundReport<T>, BoundReport<T>)> {
    let e = iv.extend();
    guard_convex(f, e.lo, e.hi, cfg)?;
    let mean = mean_integral(f, iv, cfg)?;
    let fm = f.eval(e.mid)?;
    let upper = (T::lit(2.0) * fm + f.eval(e.hi)? + f.eval(e.lo)?) / T::lit(4.0);
    let inputs = echo(f, iv, None);
    Ok((
        BoundReport::new("k1_left", fm, mean, cfg.abs_tol, inputs.clone()),
        BoundReport::new("k1_right", mean, upper, cfg.abs_tol, inputs),
    ))
}

/// `|mean - f(mid)/2| <= |f(hi) + f(lo)| / 4`, evaluated as printed. Not
/// invariant under adding a constant to `f`, so it is flagged fragile and
/// violations are findings rather than errors.
pub fn abs_half_check<T: Real>(f: &Expr<T>, iv: &Interval<T>, cfg: &ToleranceConfig<T>) -> Result<BoundReport<T>> {
    let e = iv.extend();
    guard_convex(f, e.lo, e.hi, cfg)?;
    let mean = mean_integral(f, iv, cfg)?;
    let lhs = (mean - f.eval(e.mid)? / T::lit(2.0)).abs();
    let rhs = (f.eval(e.hi)? + f.eval(e.lo)?).abs() / T::lit(4.0);
    Ok(BoundReport::new("k2", lhs, rhs, cfg.abs_tol, echo(f, iv, None)).fragile())
}

/// `(1/((p+1) 2^{p+1+1/(pq)}))^{1/p}`, never smaller than [`k2_derived`].
pub fn k2_printed<T: Real>(p: T, q: T) -> T {
    let one = T::one();
    (one / ((p + one) * T::lit(2.0).powf(p + one + one / (p * q)))).powf(one / p)
}

/// `(1/((p+1) 2^{2p}))^{1/p}`, the first-order Hölder constant rewritten
/// so that `rhs = K (b-a) (|f'(lo)|^q + |f'(hi)|^q)^{1/q}`.
pub fn k2_derived<T: Real>(p: T) -> T {
    let one = T::one();
    (one / ((p + one) * T::lit(2.0).powf(T::lit(2.0) * p))).powf(one / p)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FirstOrderBounds<T> {
    pub q: T,
    pub p: Option<T>,
    /// `|mean - f(mid)|`.
    pub lhs: T,
    pub rhs_thm2: T,
    pub rhs_thm3: Option<T>,
    pub k1: T,
    pub k2_printed: Option<T>,
    pub k2_derived: Option<T>,
    /// `min(K1, K2) (b-a) (|f'(lo)|^q + |f'(hi)|^q)^{1/q}` with the derived K2.
    pub rhs_cor1: T,
    pub rhs_min: T,
    pub inputs: String,
}

impl<T: Real> FirstOrderBounds<T> {
    pub fn reports(&self, cfg: &ToleranceConfig<T>) -> Vec<BoundReport<T>> {
        let mut out = vec![BoundReport::new("thm2", self.lhs, self.rhs_thm2, cfg.abs_tol, self.inputs.clone())];
        if let Some(r) = self.rhs_thm3 {
            out.push(BoundReport::new("thm3", self.lhs, r, cfg.abs_tol, self.inputs.clone()));
        }
        out.push(BoundReport::new("cor1", self.lhs, self.rhs_cor1, cfg.abs_tol, self.inputs.clone()));
        out
    }
}

pub fn first_order_bounds<T: Real>(
    f: &Expr<T>,
    iv: &Interval<T>,
    q: T,
    cfg: &ToleranceConfig<T>,
) -> Result<FirstOrderBounds<T>> {
    let p = check_q(q)?;
    let e = iv.extend();
    guard_derivative_power(f, &e, 1, q, cfg)?;
    let one = T::one();
    let two = T::lit(2.0);
    let w = iv.width();
    let lhs = (mean_integral(f, iv, cfg)? - f.eval(e.mid)?).abs();
    let d_lo = f.derivative(e.lo, 1)?.abs().powf(q);
    let d_hi = f.derivative(e.hi, 1)?.abs().powf(q);
    let inv_q = one / q;
    let k1 = T::lit(0.125);
    let rhs_thm2 = w * k1 * (d_lo + d_hi).powf(inv_q);
    let rhs_thm3 = p.map(|p| {
        w * (one / (two.powf(p + one) * (p + one))).powf(one / p) * ((d_lo + d_hi) / two).powf(inv_q)
    });
    let k2p = p.map(|p| k2_printed(p, q));
    let k2d = p.map(k2_derived);
    let k_min = k2d.map_or(k1, |k| k.min(k1));
    let rhs_cor1 = k_min * w * (d_lo + d_hi).powf(inv_q);
    let rhs_min = [Some(rhs_thm2), rhs_thm3, Some(rhs_cor1)]
        .into_iter()
        .flatten()
        .fold(T::infinity(), T::min);
    Ok(FirstOrderBounds {
        q,
        p,
        lhs,
        rhs_thm2,
        rhs_thm3,
        k1,
        k2_printed: k2p,
        k2_derived: k2d,
        rhs_cor1,
        rhs_min,
        inputs: echo(f, iv, Some(q)),
    })
}

/// `√π Γ(p+1) / (2 Γ(p+3/2))`.
pub fn gamma_ratio_constant<T: Real>(p: T) -> Result<T> {
    let lr = log_gamma(p + T::one())? - log_gamma(p + T::lit(1.5))?;
    Ok(T::PI().sqrt() / T::lit(2.0) * lr.exp())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SecondOrderBounds<T> {
    pub q: T,
    pub p: Option<T>,
    /// `|mean - [f(lo) + f(hi) + 2 f(mid)] / 4|`.
    pub lhs: T,
    pub rhs_k3: T,
    pub rhs_k4: Option<T>,
    pub rhs_k5: Option<T>,
    pub rhs_k6: T,
    pub rhs_min: T,
    pub inputs: String,
}

impl<T: Real> SecondOrderBounds<T> {
    pub fn reports(&self, cfg: &ToleranceConfig<T>) -> Vec<BoundReport<T>> {
        let r = |label: &str, rhs: T| BoundReport::new(label, self.lhs, rhs, cfg.abs_tol, self.inputs.clone());
        let mut out = vec![r("thm4", self.rhs_k3)];
        if let Some(v) = self.rhs_k4 {
            out.push(r("thm5", v));
        }
        if let Some(v) = self.rhs_k5 {
            out.push(r("thm6", v));
        }
        out.push(r("thm7", self.rhs_k6));
        out.push(r("cor2", self.rhs_min));
        out
    }
}

pub fn second_order_bounds<T: Real>(
    f: &Expr<T>,
    iv: &Interval<T>,
    q: T,
    cfg: &ToleranceConfig<T>,
) -> Result<SecondOrderBounds<T>> {
    let p = check_q(q)?;
    let e = iv.extend();
    guard_derivative_power(f, &e, 2, q, cfg)?;
    let one = T::one();
    let two = T::lit(2.0);
    let w2 = iv.width() * iv.width();
    let three_point = (f.eval(e.lo)? + f.eval(e.hi)? + two * f.eval(e.mid)?) / T::lit(4.0);
    let lhs = (mean_integral(f, iv, cfg)? - three_point).abs();
    let s_lo = f.derivative(e.lo, 2)?.abs().powf(q);
    let s_hi = f.derivative(e.hi, 2)?.abs().powf(q);
    let inv_q = one / q;
    let avg = ((s_lo + s_hi) / two).powf(inv_q);
    let rhs_k3 = w2 / T::lit(3.0) * avg;
    let (rhs_k4, rhs_k5) = match p {
        Some(p) => {
            let k4 = two * w2 * gamma_ratio_constant(p)?.powf(one / p) * avg;
            let k5 = w2
                * two
                * (one / (p + one)).powf(one / p)
                * (one / ((q + one) * (q + two))).powf(inv_q)
                * (s_lo + (q + one) * s_hi).powf(inv_q);
            (Some(k4), Some(k5))
        }
        None => (None, None),
    };
    let rhs_k6 = w2
        * (two / ((q + one) * (q + two) * (q + T::lit(3.0)))).powf(inv_q)
        * (two * s_lo + (q + one) * s_hi).powf(inv_q);
    let rhs_min = [Some(rhs_k3), rhs_k4, rhs_k5, Some(rhs_k6)]
        .into_iter()
        .flatten()
        .fold(T::infinity(), T::min);
    Ok(SecondOrderBounds {
        q,
        p,
        lhs,
        rhs_k3,
        rhs_k4,
        rhs_k5,
        rhs_k6,
        rhs_min,
        inputs: echo(f, iv, Some(q)),
    })
}

/// Bounds under `|f''| <= K`: `(K(b-a)^2/3, K(b-a)^2/2 · c(p)^{1/p})` with
/// `c(p) = √π Γ(p+1) / (2 Γ(p+3/2))`.
pub fn uniform_bound_remarks<T: Real>(k: T, iv: &Interval<T>, p: T) -> Result<(T, T)> {
    if !(k >= T::zero()) {
        return Err(HhError::InvalidArgument(format!("need K >= 0, got {}", k.as_f64())));
    }
    if !(p > T::one()) {
        return Err(HhError::InvalidArgument(format!("need p > 1, got {}", p.as_f64())));
    }
    let w2 = iv.width() * iv.width();
    let first = k * w2 / T::lit(3.0);
    let second = k * w2 / T::lit(2.0) * gamma_ratio_constant(p)?.powf(T::one() / p);
    Ok((first, second))
}

/// Midpoint-convexity report of `f` on the extended interval of `iv`.
pub fn extended_convexity<T: Real>(f: &Expr<T>, iv: &Interval<T>, cfg: &ToleranceConfig<T>) -> Result<BoundReport<T>> {
    sample_convexity(f, &iv.extend(), GUARD_SAMPLES, cfg)
}
