//! Domain scan: confirms an expression is defined on a whole closed
//! interval before any bound formula samples it.

use crate::error::{HhError, Result};
use crate::scalar::Real;

use super::ast::{Expr, Func};

const GRID: usize = 256;

/// Subexpressions that must stay nonzero for the parent to be defined.
fn nonzero_guards<'a, T: Real>(e: &'a Expr<T>, out: &mut Vec<(&'static str, &'a Expr<T>)>) {
    match e {
        Expr::Const(_) | Expr::Var => {}
        Expr::Neg(a) | Expr::Call(_, a) => {
            if let Expr::Call(Func::Log, _) = e {
                out.push(("log", a));
            }
            nonzero_guards(a, out);
        }
        Expr::Pow(a, r) => {
            if *r < T::zero() || *r != r.round() {
                out.push(("power", a));
            }
            nonzero_guards(a, out);
        }
        Expr::Div(l, r) => {
            out.push(("division", r));
            nonzero_guards(l, out);
            nonzero_guards(r, out);
        }
        Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) => {
            nonzero_guards(l, out);
            nonzero_guards(r, out);
        }
    }
}

fn bisect_root<T: Real>(g: &Expr<T>, mut a: T, mut b: T, ga: T) -> T {
    let two = T::lit(2.0);
    let sa = ga.signum();
    for _ in 0..200 {
        let m = (a + b) / two;
        if m <= a || m >= b {
            break;
        }
        match g.eval(m) {
            Ok(v) if v == T::zero() => return m,
            Ok(v) if v.signum() == sa => a = m,
            _ => b = m,
        }
    }
    (a + b) / two
}

/// Ternary search for the minimum of `|g|` on `[a, b]`.
fn min_abs<T: Real>(g: &Expr<T>, mut a: T, mut b: T) -> (T, T) {
    let three = T::lit(3.0);
    for _ in 0..200 {
        let m1 = a + (b - a) / three;
        let m2 = b - (b - a) / three;
        if !(m1 < m2) {
            break;
        }
        let f1 = g.eval(m1).map(|v| v.abs()).unwrap_or(T::zero());
        let f2 = g.eval(m2).map(|v| v.abs()).unwrap_or(T::zero());
        if f1 <= f2 {
            b = m2;
        } else {
            a = m1;
        }
    }
    let m = (a + b) / T::lit(2.0);
    (m, g.eval(m).map(|v| v.abs()).unwrap_or(T::zero()))
}

impl<T: Real> Expr<T> {
    /// Fails with a [`HhError::Domain`] naming the offending point if the
    /// expression is undefined anywhere in `[lo, hi]`, including poles that
    /// fall strictly between sample points.
    pub fn check_domain(&self, lo: T, hi: T) -> Result<()> {
        let n = GRID;
        let xs: Vec<T> = (0..=n)
            .map(|i| {
                if i == n {
                    hi
                } else {
                    lo + (hi - lo) * T::from_usize_lossy(i) / T::from_usize_lossy(n)
                }
            })
            .collect();
        for &x in &xs {
            self.eval(x)?;
        }
        let mut guards = Vec::new();
        nonzero_guards(self, &mut guards);
        for (op, g) in guards {
            let vals: Vec<T> = xs.iter().map(|&x| g.eval(x)).collect::<Result<_>>()?;
            let scale = vals.iter().fold(T::zero(), |m, v| m.max(v.abs()));
            for i in 0..n {
                let (va, vb) = (vals[i], vals[i + 1]);
                if va.signum() != vb.signum() {
                    let root = bisect_root(g, xs[i], xs[i + 1], va);
                    return Err(HhError::Domain { op, at: root.as_f64() });
                }
            }
            for i in 1..n {
                let v = vals[i].abs();
                if v <= vals[i - 1].abs() && v <= vals[i + 1].abs() {
                    let (at, m) = min_abs(g, xs[i - 1], xs[i + 1]);
                    if m <= T::lit(16.0) * T::epsilon() * scale {
                        return Err(HhError::Domain { op, at: at.as_f64() });
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::exprlang::parse;
    use crate::error::HhError;

    fn fails_at(s: &str, lo: f64, hi: f64) -> f64 {
        match parse::<f64>(s).unwrap().check_domain(lo, hi) {
            Err(HhError::Domain { at, .. }) => at,
            other => panic!("{s}: expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn finds_poles_between_grid_points() {
        assert!(fails_at("1/x", -1.0, 3.0).abs() < 1e-9);
        assert!((fails_at("1/(x - 0.7)", 0.0, 3.0) - 0.7).abs() < 1e-9);
        assert!(fails_at("1/x^2", -1.0, 3.0).abs() < 1e-6);
        assert!(fails_at("x^-2", -1.0, 3.0).abs() < 1e-6);
        assert_eq!(fails_at("log(x)", -1.0, 3.0), -1.0);
    }

    #[test]
    fn accepts_defined_functions() {
        for s in ["x^2", "exp(x)", "1/x", "x*log(x)", "sqrt(x)", "1/(1 + x^2)"] {
            parse::<f64>(s).unwrap().check_domain(0.5, 8.0).unwrap();
        }
        parse::<f64>("x^3").unwrap().check_domain(-2.0, 2.0).unwrap();
    }
}
