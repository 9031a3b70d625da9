//! Special means of two positive reals and the inequalities obtained by
//! feeding `x^n`, `x^-2` and `x^-1` through the three-point and
//! first-order bounds.

use serde::Serialize;

use crate::error::{HhError, Result};
use crate::hh_bounds::k2_derived;
use crate::interval::{conjugate_exponent, Interval};
use crate::report::BoundReport;
use crate::scalar::Real;
use crate::tolerance::ToleranceConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MeanKind {
    Arithmetic,
    Geometric,
    Logarithmic,
    /// `L_n` for integer `n ∉ {-1, 0}`.
    GeneralizedLog(i32),
}

fn positive_pair<T: Real>(a: T, b: T) -> Result<()> {
    if !(a > T::zero()) || !(a < b) || !b.is_finite() {
        return Err(HhError::InvalidArgument(format!(
            "means need 0 < a < b, got a = {}, b = {}",
            a.as_f64(),
            b.as_f64()
        )));
    }
    Ok(())
}

pub fn mean<T: Real>(kind: MeanKind, a: T, b: T) -> Result<T> {
    positive_pair(a, b)?;
    Ok(match kind {
        MeanKind::Arithmetic => (a + b) / T::lit(2.0),
        MeanKind::Geometric => (a * b).sqrt(),
        MeanKind::Logarithmic => (b - a) / (b.ln() - a.ln()),
        MeanKind::GeneralizedLog(n) => {
            if n == 0 || n == -1 {
                return Err(HhError::InvalidArgument(format!("L_n undefined for n = {n}")));
            }
            let n1 = T::from_i32(n + 1).expect("small integer");
            let ratio = (b.powi(n + 1) - a.powi(n + 1)) / ((b - a) * n1);
            ratio.powf(T::one() / T::from_i32(n).expect("small integer"))
        }
    })
}

/// `L_n^n` without the final root: the mean value of `x^n` on `[a, b]`.
fn power_mean_value<T: Real>(n: i32, a: T, b: T) -> T {
    let n1 = T::from_i32(n + 1).expect("small integer");
    (b.powi(n + 1) - a.powi(n + 1)) / ((b - a) * n1)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "prop", rename_all = "lowercase")]
pub enum MeanProposition<T> {
    /// `f(x) = x^n`.
    P1 { n: i32, q: T },
    /// `f(x) = x^-2`.
    P2 { q: T },
    /// `f(x) = x^-1`.
    P3 { q: T },
}

impl<T: Real> MeanProposition<T> {
    pub fn q(&self) -> T {
        match *self {
            MeanProposition::P1 { q, .. } | MeanProposition::P2 { q } | MeanProposition::P3 { q } => q,
        }
    }

    /// Function text for the direct route through `hh_bounds`.
    pub fn function_text(&self) -> String {
        match self {
            MeanProposition::P1 { n, .. } => format!("x^{n}"),
            MeanProposition::P2 { .. } => "x^-2".into(),
            MeanProposition::P3 { .. } => "x^-1".into(),
        }
    }

    fn label(&self) -> &'static str {
        match self {
            MeanProposition::P1 { .. } => "prop1",
            MeanProposition::P2 { .. } => "prop2",
            MeanProposition::P3 { .. } => "prop3",
        }
    }

    /// Exponent `n` of the underlying power function.
    fn power(&self) -> i32 {
        match *self {
            MeanProposition::P1 { n, .. } => n,
            MeanProposition::P2 { .. } => -2,
            MeanProposition::P3 { .. } => -1,
        }
    }
}

/// Evaluates both displays of the chosen proposition.
///
/// First report: `|2 M - f(A)| <= (|f(hi)| + |f(lo)|)/2` where `M` is the
/// closed-form mean value of `f` (`L_n^n`, `G^-2` or `L^-1`). It is the
/// fragile absolute three-point bound scaled by two.
///
/// Second report: `|M - f(A)| <= min(K1, K2) (b-a) (|f'(lo)|^q + |f'(hi)|^q)^{1/q}`
/// with `K2 = (1/((p+1) 2^{2p}))^{1/p}` for `q > 1`.
///
/// Negative powers need the extended interval inside `(0, ∞)`, i.e.
/// `b < 3a`; otherwise a precondition error naming `3a - b` is returned.
pub fn means_proposition_check<T: Real>(
    prop: MeanProposition<T>,
    a: T,
    b: T,
    cfg: &ToleranceConfig<T>,
) -> Result<(BoundReport<T>, BoundReport<T>)> {
    positive_pair(a, b)?;
    let n = prop.power();
    if n == 0 || (n == -1 && matches!(prop, MeanProposition::P1 { .. })) {
        return Err(HhError::InvalidArgument(format!("power n = {n} excluded")));
    }
    let q = prop.q();
    if !(q >= T::one()) {
        return Err(HhError::InvalidArgument(format!("need q >= 1, got {}", q.as_f64())));
    }
    let three = T::lit(3.0);
    let gap = three * a - b;
    if n < 0 && !(gap > T::zero()) {
        return Err(HhError::Precondition(format!(
            "extended interval leaves (0, inf): 3a - b = {} <= 0",
            gap.as_f64()
        )));
    }
    let iv = Interval::new(a, b)?;
    let e = iv.extend();
    let am = iv.mid();
    let mean_value = match prop {
        MeanProposition::P1 { n, .. } => power_mean_value(n, a, b),
        MeanProposition::P2 { .. } => mean(MeanKind::Geometric, a, b)?.powi(-2),
        MeanProposition::P3 { .. } => mean(MeanKind::Logarithmic, a, b)?.recip(),
    };
    let f_at_mean = am.powi(n);
    let two = T::lit(2.0);
    let nn = T::from_i32(n).expect("small integer");
    let inputs = format!("n = {n}, a = {}, b = {}, q = {}", a.as_f64(), b.as_f64(), q.as_f64());

    let first = BoundReport::new(
        format!("{}_first", prop.label()),
        (two * mean_value - f_at_mean).abs(),
        (e.hi.abs().powi(n) + e.lo.abs().powi(n)) / two,
        cfg.abs_tol,
        inputs.clone(),
    )
    .fragile();

    // |f'(x)|^q = |n|^q |x|^{(n-1)q}
    let inv_q = T::one() / q;
    let deriv_pow = |x: T| (nn.abs() * x.abs().powi(n - 1)).powf(q);
    let k = if q > T::one() {
        k2_derived(conjugate_exponent(q)?).min(T::lit(0.125))
    } else {
        T::lit(0.125)
    };
    let second = BoundReport::new(
        format!("{}_second", prop.label()),
        (mean_value - f_at_mean).abs(),
        k * iv.width() * (deriv_pow(e.lo) + deriv_pow(e.hi)).powf(inv_q),
        cfg.abs_tol,
        inputs,
    );
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn mean_examples() {
        assert_eq!(mean(MeanKind::Arithmetic, 2.0, 8.0).unwrap(), 5.0);
        assert_eq!(mean(MeanKind::Geometric, 2.0, 8.0).unwrap(), 4.0);
        let l = mean(MeanKind::Logarithmic, 1.0, std::f64::consts::E).unwrap();
        assert!((l - (std::f64::consts::E - 1.0)).abs() < 1e-15);
        assert!(mean(MeanKind::Arithmetic, 2.0, 2.0).is_err());
        assert!(mean(MeanKind::Geometric, -1.0, 2.0).is_err());
        assert!(mean(MeanKind::GeneralizedLog(0), 1.0, 2.0).is_err());
        assert!(mean(MeanKind::GeneralizedLog(-1), 1.0, 2.0).is_err());
        let l2: f64 = mean(MeanKind::GeneralizedLog(2), 1.0, 2.0).unwrap();
        assert!((l2 * l2 - 7.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn proposition_examples() {
        let cfg = ToleranceConfig::<f64>::default();
        let (first, _) = means_proposition_check(MeanProposition::P1 { n: 2, q: 1.0 }, 1.0, 2.0, &cfg).unwrap();
        assert!((first.lhs - 29.0 / 12.0).abs() < 1e-14);
        assert!((first.rhs - 13.0 / 4.0).abs() < 1e-14);
        assert!(first.satisfied && first.fragile);

        let (first, second) = means_proposition_check(MeanProposition::P3 { q: 1.0 }, 1.0, 2.0, &cfg).unwrap();
        let l = 1.0 / 2f64.ln();
        assert!((first.lhs - (2.0 / 3.0 - 2.0 / l).abs()).abs() < 1e-15);
        assert!((first.rhs - 1.2).abs() < 1e-15);
        assert!(second.rhs > 0.0);

        match means_proposition_check(MeanProposition::P2 { q: 1.0 }, 1.0, 4.0, &cfg) {
            Err(HhError::Precondition(msg)) => assert!(msg.contains("3a - b = -1")),
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    proptest! {
        #[test]
        fn classical_ordering(a in 0.01f64..100.0, w in 1e-3f64..100.0) {
            let b = a + w;
            let g = mean(MeanKind::Geometric, a, b).unwrap();
            let l = mean(MeanKind::Logarithmic, a, b).unwrap();
            let am = mean(MeanKind::Arithmetic, a, b).unwrap();
            let slack = 1e-12 * am;
            prop_assert!(g <= l + slack && l <= am + slack);
            let l1 = mean(MeanKind::GeneralizedLog(1), a, b).unwrap();
            prop_assert!((l1 - am).abs() <= 1e-12 * am);
        }
    }
}
