//! Randomized midpoint-convexity guard.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{HhError, Result};
use crate::exprlang::Expr;
use crate::interval::ExtendedInterval;
use crate::report::BoundReport;
use crate::scalar::Real;
use crate::tolerance::ToleranceConfig;

/// Seed for the guard's sample pairs; fixed so runs are reproducible.
pub const CONVEXITY_SEED: u64 = 0x4848_0001;

/// Pairs drawn by the theorem guards.
pub const GUARD_SAMPLES: usize = 64;

/// Checks `g((x+y)/2) <= (g(x)+g(y))/2` on `n` seeded random pairs in
/// `[lo, hi]` plus the endpoint pair. The slack is
/// `abs_tol + max(rel_tol, 16 eps) * max(|g(x)|, |g(y)|)`.
///
/// The report's `lhs`/`rhs` are those of the worst pair found.
pub fn sample_convexity_fn<T, G>(
    g: G,
    lo: T,
    hi: T,
    n: usize,
    seed: u64,
    cfg: &ToleranceConfig<T>,
    what: &str,
) -> Result<BoundReport<T>>
where
    T: Real,
    G: Fn(T) -> Result<T>,
{
    probe(g, lo, hi, n, seed, cfg, what).map(|(r, _, _)| r)
}

fn probe<T, G>(
    g: G,
    lo: T,
    hi: T,
    n: usize,
    seed: u64,
    cfg: &ToleranceConfig<T>,
    what: &str,
) -> Result<(BoundReport<T>, T, T)>
where
    T: Real,
    G: Fn(T) -> Result<T>,
{
    if n < 3 {
        return Err(HhError::InvalidArgument(format!("need at least 3 convexity samples, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rel = cfg.rel_tol.max(T::lit(16.0) * T::epsilon());
    let two = T::lit(2.0);
    let mut worst: Option<(T, T, T, T, T)> = None; // (excess, lhs, rhs, x, y)
    for k in 0..=n {
        let (x, y) = if k == n {
            (lo, hi)
        } else {
            let u = T::lit(rng.gen::<f64>());
            let v = T::lit(rng.gen::<f64>());
            (lo + (hi - lo) * u, lo + (hi - lo) * v)
        };
        let (gx, gy) = (g(x)?, g(y)?);
        let gm = g((x + y) / two)?;
        let chord = (gx + gy) / two;
        let slack = cfg.abs_tol + rel * gx.abs().max(gy.abs());
        let excess = gm - chord - slack;
        if worst.is_none_or(|w| excess > w.0) {
            worst = Some((excess, gm, chord, x, y));
        }
    }
    let (excess, lhs, rhs, x, y) = worst.expect("at least one pair sampled");
    let inputs = format!("{what} on [{}, {}], n = {n}", lo.as_f64(), hi.as_f64());
    let mut report = BoundReport::new("convexity", lhs, rhs, cfg.abs_tol, inputs);
    report.satisfied = excess <= T::zero();
    if !report.satisfied {
        report.inputs = format!("{} (violated at x = {}, y = {})", report.inputs, x.as_f64(), y.as_f64());
    }
    Ok((report, x, y))
}

/// Midpoint-convexity probe of `f` over the extended interval. A domain
/// scan runs first so poles between samples are reported by location.
pub fn sample_convexity<T: Real>(
    f: &Expr<T>,
    iv: &ExtendedInterval<T>,
    n: usize,
    cfg: &ToleranceConfig<T>,
) -> Result<BoundReport<T>> {
    f.check_domain(iv.lo, iv.hi)?;
    sample_convexity_fn(|x| f.eval(x), iv.lo, iv.hi, n, CONVEXITY_SEED, cfg, &f.to_string())
}

/// Turns a failed probe into a [`HhError::NotConvex`] guard error.
pub(crate) fn require_convex<T, G>(g: G, lo: T, hi: T, cfg: &ToleranceConfig<T>, what: &str) -> Result<()>
where
    T: Real,
    G: Fn(T) -> Result<T>,
{
    let (r, x, y) = probe(g, lo, hi, GUARD_SAMPLES, CONVEXITY_SEED, cfg, what)?;
    if r.satisfied {
        return Ok(());
    }
    Err(HhError::NotConvex {
        what: what.to_string(),
        lo: lo.as_f64(),
        hi: hi.as_f64(),
        x: x.as_f64(),
        y: y.as_f64(),
    })
}
