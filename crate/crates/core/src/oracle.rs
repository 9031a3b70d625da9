//! Reference integration and differentiation used as ground truth.
//!
//! The integrator is adaptive 21-point Gauss-Kronrod, a different rule
//! family from the composite midpoint sums it audits.

use serde::Serialize;

use crate::error::{HhError, Result};
use crate::interval::Interval;
use crate::scalar::Real;
use crate::tolerance::ToleranceConfig;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077600525478580,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

// Gauss-Legendre 10-point weights for the odd-indexed Kronrod nodes.
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Integral<T> {
    pub value: T,
    pub err_est: T,
}

#[derive(Clone, Copy)]
struct Panel<T> {
    a: T,
    b: T,
    value: T,
    err: T,
    floor: T,
    depth: usize,
}

fn kronrod21<T: Real, F>(f: &F, a: T, b: T, depth: usize) -> Result<Panel<T>>
where
    F: Fn(T) -> Result<T>,
{
    let two = T::lit(2.0);
    let center = (a + b) / two;
    let half = (b - a) / two;
    let fc = f(center)?;
    let mut res_k = fc * T::lit(WGK[10]);
    let mut res_g = T::zero();
    let mut res_abs = res_k.abs();
    let mut fv = [(T::zero(), T::zero()); 10];
    for j in 0..10 {
        let dx = half * T::lit(XGK[j]);
        let f1 = f(center - dx)?;
        let f2 = f(center + dx)?;
        fv[j] = (f1, f2);
        let w = T::lit(WGK[j]);
        res_k = res_k + w * (f1 + f2);
        res_abs = res_abs + w * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g = res_g + T::lit(WG[j / 2]) * (f1 + f2);
        }
    }
    let mean = res_k / two;
    let mut res_asc = T::lit(WGK[10]) * (fc - mean).abs();
    for j in 0..10 {
        res_asc = res_asc + T::lit(WGK[j]) * ((fv[j].0 - mean).abs() + (fv[j].1 - mean).abs());
    }
    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != T::zero() && err != T::zero() {
        let scale = (T::lit(200.0) * err / res_asc).powf(T::lit(1.5));
        err = if scale < T::one() { res_asc * scale } else { res_asc };
    }
    let floor = T::lit(50.0) * T::epsilon() * res_abs;
    Ok(Panel {
        a,
        b,
        value,
        err: err.max(floor),
        floor,
        depth,
    })
}

const MAX_PANELS: usize = 4000;

/// Adaptive integral of `f` over `iv` with `err_est <= tol` (or at the
/// floating-point floor `50 eps ∫|f|` when that is larger).
pub fn integrate_ref<T, F>(f: F, iv: &Interval<T>, tol: T, cfg: &ToleranceConfig<T>) -> Result<Integral<T>>
where
    T: Real,
    F: Fn(T) -> Result<T>,
{
    integrate_range(f, iv.a(), iv.b(), tol, cfg)
}

/// As [`integrate_ref`] but on raw bounds `a < b`.
pub fn integrate_range<T, F>(f: F, a: T, b: T, tol: T, cfg: &ToleranceConfig<T>) -> Result<Integral<T>>
where
    T: Real,
    F: Fn(T) -> Result<T>,
{
    if !(tol > T::zero()) {
        return Err(HhError::InvalidArgument("integration tolerance must be positive".into()));
    }
    if !(a < b) {
        return Err(HhError::InvalidInterval { a: a.as_f64(), b: b.as_f64() });
    }
    let mut panels = vec![kronrod21(&f, a, b, 0)?];
    loop {
        let err: T = panels.iter().fold(T::zero(), |s, p| s + p.err);
        let floor: T = panels.iter().fold(T::zero(), |s, p| s + p.floor);
        if err <= tol || err <= T::lit(2.0) * floor {
            let value = panels.iter().fold(T::zero(), |s, p| s + p.value);
            return Ok(Integral { value, err_est: err });
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .fold((0, T::neg_infinity()), |(bi, be), (i, p)| {
                if p.err > be {
                    (i, p.err)
                } else {
                    (bi, be)
                }
            });
        let p = panels[worst];
        if p.depth >= cfg.max_refine_depth || panels.len() >= MAX_PANELS {
            return Err(HhError::NoConvergence(format!(
                "reference integral on [{}, {}] stalled at error {} (tol {})",
                a.as_f64(),
                b.as_f64(),
                err.as_f64(),
                tol.as_f64()
            )));
        }
        let m = (p.a + p.b) / T::lit(2.0);
        panels[worst] = kronrod21(&f, p.a, m, p.depth + 1)?;
        panels.push(kronrod21(&f, m, p.b, p.depth + 1)?);
    }
}

/// Five-point central difference of order 1 or 2.
///
/// Step `h = max(1e-5, 1e-5 |x|)` for the first derivative and
/// `h = max(1e-3, 1e-3 |x|)` for the second, where a 1e-5 step would be
/// dominated by cancellation.
pub fn diff_ref<T, F>(f: F, x: T, order: usize) -> Result<T>
where
    T: Real,
    F: Fn(T) -> Result<T>,
{
    let base = match order {
        1 => T::lit(1e-5).max(T::epsilon().cbrt()),
        2 => T::lit(1e-3).max(T::epsilon().powf(T::lit(0.25))),
        _ => return Err(HhError::InvalidArgument(format!("diff_ref order {order} not in {{1, 2}}"))),
    };
    let h = base.max(base * x.abs());
    let two = T::lit(2.0);
    let twelve = T::lit(12.0);
    let (fm2, fm1, fp1, fp2) = (f(x - two * h)?, f(x - h)?, f(x + h)?, f(x + two * h)?);
    Ok(if order == 1 {
        (fm2 - fp2 + T::lit(8.0) * (fp1 - fm1)) / (twelve * h)
    } else {
        let f0 = f(x)?;
        (-fm2 - fp2 + T::lit(16.0) * (fp1 + fm1) - T::lit(30.0) * f0) / (twelve * h * h)
    })
}
