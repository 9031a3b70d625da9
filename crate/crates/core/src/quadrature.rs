//! Composite trapezoid and midpoint rules with midpoint-error
//! certificates built from the first-order and three-point bounds.

use serde::Serialize;

use crate::convexity::require_convex;
use crate::error::{HhError, Result};
use crate::exprlang::Expr;
use crate::hh_bounds::k2_derived;
use crate::interval::{conjugate_exponent, Interval};
use crate::oracle::integrate_ref;
use crate::report::BoundReport;
use crate::scalar::Real;
use crate::tolerance::ToleranceConfig;

/// Ascending grid `a = x_0 < x_1 < ... < x_m = b`, `m >= 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Partition<T> {
    points: Vec<T>,
}

impl<T: Real> Partition<T> {
    pub fn new(points: Vec<T>) -> Result<Self> {
        if points.len() < 2 {
            return Err(HhError::InvalidArgument("partition needs at least two points".into()));
        }
        if points.iter().any(|x| !x.is_finite()) || points.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(HhError::InvalidArgument("partition points must be finite and strictly increasing".into()));
        }
        Ok(Self { points })
    }

    /// `m` equal panels over `iv`.
    pub fn uniform(iv: &Interval<T>, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(HhError::InvalidArgument("need at least one panel".into()));
        }
        let mf = T::from_usize_lossy(m);
        let mut points: Vec<T> = (0..m)
            .map(|i| iv.a() + iv.width() * T::from_usize_lossy(i) / mf)
            .collect();
        points.push(iv.b());
        Self::new(points)
    }

    pub fn points(&self) -> &[T] {
        &self.points
    }

    pub fn panels(&self) -> usize {
        self.points.len() - 1
    }

    pub fn interval(&self) -> Interval<T> {
        Interval::new(self.points[0], *self.points.last().expect("nonempty")).expect("validated partition")
    }

    fn iter_panels(&self) -> impl Iterator<Item = (usize, T, T)> + '_ {
        self.points.windows(2).enumerate().map(|(i, w)| (i, w[0], w[1]))
    }
}

/// Extended panel ends `((3x_i - x_{i+1})/2, (3x_{i+1} - x_i)/2)`.
fn extended_ends<T: Real>(x0: T, x1: T) -> (T, T) {
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    ((three * x0 - x1) / two, (three * x1 - x0) / two)
}

fn panel_err(index: usize) -> impl Fn(HhError) -> HhError {
    move |e| HhError::Panel { index, source: Box::new(e) }
}

pub fn trapezoid_t1<T: Real>(f: &Expr<T>, part: &Partition<T>) -> Result<T> {
    let two = T::lit(2.0);
    part.iter_panels().try_fold(T::zero(), |acc, (_, x0, x1)| {
        Ok(acc + (f.eval(x0)? + f.eval(x1)?) / two * (x1 - x0))
    })
}

pub fn midpoint_t2<T: Real>(f: &Expr<T>, part: &Partition<T>) -> Result<T> {
    let two = T::lit(2.0);
    part.iter_panels()
        .try_fold(T::zero(), |acc, (_, x0, x1)| Ok(acc + f.eval((x0 + x1) / two)? * (x1 - x0)))
}

/// `min(K1, K2)` for the midpoint certificate; `K1 = 1/8` alone at `q = 1`.
pub fn certificate_constant<T: Real>(q: T) -> Result<T> {
    if !(q >= T::one()) {
        return Err(HhError::InvalidArgument(format!("need q >= 1, got {}", q.as_f64())));
    }
    let k1 = T::lit(0.125);
    Ok(if q > T::one() { k1.min(k2_derived(conjugate_exponent(q)?)) } else { k1 })
}

fn certificate_sum<T: Real>(f: &Expr<T>, part: &Partition<T>, q: T) -> Result<T> {
    let k = certificate_constant(q)?;
    let inv_q = T::one() / q;
    let mut sum = T::zero();
    for (i, x0, x1) in part.iter_panels() {
        let (lo, hi) = extended_ends(x0, x1);
        let d_lo = f.derivative(lo, 1).map_err(panel_err(i))?.abs().powf(q);
        let d_hi = f.derivative(hi, 1).map_err(panel_err(i))?.abs().powf(q);
        let dx = x1 - x0;
        sum = sum + dx * dx * (d_lo + d_hi).powf(inv_q);
    }
    Ok(k * sum)
}

fn guard_panel<T: Real>(f: &Expr<T>, q: T, lo: T, hi: T, cfg: &ToleranceConfig<T>) -> Result<()> {
    f.check_domain(lo, hi)?;
    let what = format!("|d/dx {f}|^{}", q.as_f64());
    require_convex(|x| Ok(f.derivative(x, 1)?.abs().powf(q)), lo, hi, cfg, &what)
}

/// `min(K1, K2) Σ_i Δx_i² (|f'(lo_i)|^q + |f'(hi_i)|^q)^{1/q}` over all
/// panels, after guarding domain and convexity of `|f'|^q` on each
/// panel's extended interval.
pub fn midpoint_error_bound<T: Real>(f: &Expr<T>, part: &Partition<T>, q: T, cfg: &ToleranceConfig<T>) -> Result<T> {
    certificate_constant(q)?;
    for (i, x0, x1) in part.iter_panels() {
        let (lo, hi) = extended_ends(x0, x1);
        guard_panel(f, q, lo, hi, cfg).map_err(panel_err(i))?;
    }
    certificate_sum(f, part, q)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Prop4Check<T> {
    /// `|2∫f - T2|` against `Σ Δx_i |f(lo_i) + f(hi_i)| / 2`.
    pub report: BoundReport<T>,
    /// `Σ Δx_i max(|f(lo_i)|, |f(hi_i)|)` over all panels.
    pub max_form_rhs: T,
}

/// The midpoint chain `|∫f + E2| = |2∫f - T2| <= Σ Δx_i |f(lo_i)+f(hi_i)|/2`,
/// flagged fragile because it inherits the absolute three-point bound.
pub fn prop4_check<T: Real>(f: &Expr<T>, part: &Partition<T>, cfg: &ToleranceConfig<T>) -> Result<Prop4Check<T>> {
    let two = T::lit(2.0);
    let mut middle = T::zero();
    let mut upper = T::zero();
    for (i, x0, x1) in part.iter_panels() {
        let (lo, hi) = extended_ends(x0, x1);
        f.check_domain(lo, hi).map_err(panel_err(i))?;
        require_convex(|x| f.eval(x), lo, hi, cfg, &f.to_string()).map_err(panel_err(i))?;
        let (fl, fh) = (f.eval(lo)?, f.eval(hi)?);
        middle = middle + (x1 - x0) * (fl + fh).abs() / two;
        upper = upper + (x1 - x0) * fl.abs().max(fh.abs());
    }
    let iv = part.interval();
    let integral = integrate_ref(|x| f.eval(x), &iv, cfg.abs_tol, cfg)?.value;
    let lhs = (two * integral - midpoint_t2(f, part)?).abs();
    let inputs = format!("f = {f}, a = {}, b = {}, panels = {}", iv.a().as_f64(), iv.b().as_f64(), part.panels());
    Ok(Prop4Check {
        report: BoundReport::new("prop4", lhs, middle, cfg.abs_tol, inputs).fragile(),
        max_form_rhs: upper,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureResult<T> {
    pub t1: T,
    pub t2: T,
    pub e2_bound: T,
    /// `false` when refinement stopped before reaching the target.
    pub certified: bool,
    pub depth: usize,
    pub oracle_value: Option<T>,
    /// `|oracle_value - t2|`, recorded for audit.
    pub oracle_error: Option<T>,
    #[serde(skip)]
    pub partition: Partition<T>,
}

/// Domain failure at a point outside `[a, b]`, which finer panels avoid.
fn is_outer_domain_failure<T: Real>(e: &HhError, iv: &Interval<T>) -> bool {
    match e {
        HhError::Domain { at, .. } => *at < iv.a().as_f64() || *at > iv.b().as_f64(),
        HhError::Panel { source, .. } => is_outer_domain_failure(source, iv),
        _ => false,
    }
}

/// Bisection depth cap independent of `max_refine_depth`, so a target the
/// certificate cannot reach does not allocate `2^40` panels.
pub const MAX_PANEL_DEPTH: usize = 20;

/// Uniformly bisects `iv` until the midpoint certificate is at most
/// `target`, or the depth limit is hit (result flagged non-certified).
///
/// Every panel's extended interval lies inside the extended interval of
/// `iv`, so one guard on that hull covers every refinement. If the hull
/// guard fails the per-panel guards decide; panels whose extended
/// interval leaves the domain of `f` outside `[a, b]` are refined further.
pub fn adaptive_midpoint<T: Real>(
    f: &Expr<T>,
    iv: &Interval<T>,
    target: T,
    q: T,
    cfg: &ToleranceConfig<T>,
) -> Result<QuadratureResult<T>> {
    if !(target > T::zero()) {
        return Err(HhError::InvalidArgument(format!("target must be positive, got {}", target.as_f64())));
    }
    certificate_constant(q)?;
    let e = iv.extend();
    let hull_ok = guard_panel(f, q, e.lo, e.hi, cfg).is_ok();
    let max_depth = cfg.max_refine_depth.min(MAX_PANEL_DEPTH);
    let mut depth = 0;
    loop {
        let part = Partition::uniform(iv, 1usize << depth)?;
        let bound = if hull_ok {
            certificate_sum(f, &part, q)?
        } else {
            match midpoint_error_bound(f, &part, q, cfg) {
                Ok(b) => b,
                // Extended panels shrink with the mesh, so a domain failure
                // outside [a, b] clears after enough bisection.
                Err(e) if depth < max_depth && is_outer_domain_failure(&e, iv) => {
                    depth += 1;
                    continue;
                }
                Err(e) => return Err(e),
            }
        };
        let certified = bound <= target;
        if certified || depth >= max_depth {
            let t2 = midpoint_t2(f, &part)?;
            let t1 = trapezoid_t1(f, &part)?;
            let oracle = integrate_ref(|x| f.eval(x), iv, cfg.abs_tol, cfg).ok().map(|r| r.value);
            return Ok(QuadratureResult {
                t1,
                t2,
                e2_bound: bound,
                certified,
                depth,
                oracle_value: oracle,
                oracle_error: oracle.map(|v| (v - t2).abs()),
                partition: part,
            });
        }
        depth += 1;
    }
}
