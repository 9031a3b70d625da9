use std::fmt;

use crate::error::{HhError, Result};
use crate::scalar::Real;

use super::jet::Jet3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Exp,
    Log,
    Sqrt,
    Sinh,
    Cosh,
    Abs,
}

impl Func {
    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "exp" => Func::Exp,
            "log" | "ln" => Func::Log,
            "sqrt" => Func::Sqrt,
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            "abs" => Func::Abs,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Abs => "abs",
        }
    }
}

/// Expression tree in the single variable `x`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr<T> {
    Const(T),
    Var,
    Neg(Box<Expr<T>>),
    Add(Box<Expr<T>>, Box<Expr<T>>),
    Sub(Box<Expr<T>>, Box<Expr<T>>),
    Mul(Box<Expr<T>>, Box<Expr<T>>),
    Div(Box<Expr<T>>, Box<Expr<T>>),
    /// Power with a constant exponent.
    Pow(Box<Expr<T>>, T),
    Call(Func, Box<Expr<T>>),
}

fn integer_exponent<T: Real>(r: T) -> Option<i64> {
    if r == r.round() && r.abs() <= T::lit(1e9) {
        r.to_i64()
    } else {
        None
    }
}

fn domain(op: &'static str, at: impl Real) -> HhError {
    HhError::Domain { op, at: at.as_f64() }
}

impl<T: Real> Expr<T> {
    pub fn contains_var(&self) -> bool {
        match self {
            Expr::Const(_) => false,
            Expr::Var => true,
            Expr::Neg(e) | Expr::Pow(e, _) | Expr::Call(_, e) => e.contains_var(),
            Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) | Expr::Div(l, r) => {
                l.contains_var() || r.contains_var()
            }
        }
    }

    /// Value of the expression at `x`; domain violations name the
    /// operator and the point `x`.
    pub fn eval(&self, x: T) -> Result<T> {
        let v = match self {
            Expr::Const(c) => *c,
            Expr::Var => x,
            Expr::Neg(e) => -e.eval(x)?,
            Expr::Add(l, r) => l.eval(x)? + r.eval(x)?,
            Expr::Sub(l, r) => l.eval(x)? - r.eval(x)?,
            Expr::Mul(l, r) => l.eval(x)? * r.eval(x)?,
            Expr::Div(l, r) => {
                let d = r.eval(x)?;
                if d == T::zero() {
                    return Err(domain("division", x));
                }
                l.eval(x)? / d
            }
            Expr::Pow(e, r) => {
                let u = e.eval(x)?;
                match integer_exponent(*r) {
                    Some(n) if n < 0 && u == T::zero() => return Err(domain("power", x)),
                    Some(n) => u.powi(n as i32),
                    None if u > T::zero() => u.powf(*r),
                    None => return Err(domain("power", x)),
                }
            }
            Expr::Call(f, e) => {
                let u = e.eval(x)?;
                match f {
                    Func::Exp => u.exp(),
                    Func::Log if u > T::zero() => u.ln(),
                    Func::Log => return Err(domain("log", x)),
                    Func::Sqrt if u >= T::zero() => u.sqrt(),
                    Func::Sqrt => return Err(domain("sqrt", x)),
                    Func::Sinh => u.sinh(),
                    Func::Cosh => u.cosh(),
                    Func::Abs => u.abs(),
                }
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(domain("overflow", x))
        }
    }

    /// Value and first three derivatives at `x`.
    pub fn eval_jet(&self, x: T) -> Result<Jet3<T>> {
        self.jet_at(Jet3::variable(x), x)
    }

    fn jet_at(&self, seed: Jet3<T>, x: T) -> Result<Jet3<T>> {
        let j = match self {
            Expr::Const(c) => Jet3::constant(*c),
            Expr::Var => seed,
            Expr::Neg(e) => -e.jet_at(seed, x)?,
            Expr::Add(l, r) => l.jet_at(seed, x)? + r.jet_at(seed, x)?,
            Expr::Sub(l, r) => l.jet_at(seed, x)? - r.jet_at(seed, x)?,
            Expr::Mul(l, r) => l.jet_at(seed, x)? * r.jet_at(seed, x)?,
            Expr::Div(l, r) => {
                let d = r.jet_at(seed, x)?;
                if d.v0 == T::zero() {
                    return Err(domain("division", x));
                }
                l.jet_at(seed, x)? / d
            }
            Expr::Pow(e, r) => {
                let u = e.jet_at(seed, x)?;
                match integer_exponent(*r) {
                    Some(n) if n < 0 && u.v0 == T::zero() => return Err(domain("power", x)),
                    Some(n) => u.powi(n),
                    None if u.v0 > T::zero() => u.powf(*r),
                    None => return Err(domain("power", x)),
                }
            }
            Expr::Call(f, e) => {
                let u = e.jet_at(seed, x)?;
                match f {
                    Func::Exp => u.exp(),
                    Func::Log if u.v0 > T::zero() => u.ln(),
                    Func::Log => return Err(domain("log", x)),
                    Func::Sqrt if u.v0 > T::zero() => u.sqrt(),
                    Func::Sqrt => return Err(domain("sqrt", x)),
                    Func::Sinh => u.sinh(),
                    Func::Cosh => u.cosh(),
                    Func::Abs if u.v0 != T::zero() => u.abs(),
                    Func::Abs => return Err(domain("abs", x)),
                }
            }
        };
        if j.v0.is_finite() && j.v1.is_finite() && j.v2.is_finite() && j.v3.is_finite() {
            Ok(j)
        } else {
            Err(domain("overflow", x))
        }
    }

    pub fn derivative(&self, x: T, order: usize) -> Result<T> {
        let j = self.eval_jet(x)?;
        Ok(match order {
            0 => j.v0,
            1 => j.v1,
            2 => j.v2,
            3 => j.v3,
            _ => {
                return Err(HhError::InvalidArgument(format!(
                    "derivative order {order} exceeds 3"
                )))
            }
        })
    }
}

impl<T: Real> fmt::Display for Expr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) if *c < T::zero() => write!(f, "({c})"),
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Var => write!(f, "x"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Add(l, r) => write!(f, "({l} + {r})"),
            Expr::Sub(l, r) => write!(f, "({l} - {r})"),
            Expr::Mul(l, r) => write!(f, "({l} * {r})"),
            Expr::Div(l, r) => write!(f, "({l} / {r})"),
            Expr::Pow(e, r) => {
                // ^ is right-associative, so a power base needs parentheses
                if matches!(**e, Expr::Pow(..)) {
                    write!(f, "({e})")?;
                } else {
                    write!(f, "{e}")?;
                }
                if *r < T::zero() {
                    write!(f, "^({r})")
                } else {
                    write!(f, "^{r}")
                }
            }
            Expr::Call(func, e) => write!(f, "{}({e})", func.name()),
        }
    }
}
