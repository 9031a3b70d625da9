//! One-variable expression language with third-order forward-mode
//! differentiation.
//!
//! Grammar (loosest binding first):
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := primary ("^" unary)?        exponent must be constant
//! primary := number | "x" | "pi" | "e" | func "(" expr ")" | "(" expr ")"
//! func    := exp | log | ln | sqrt | sinh | cosh | abs
//! ```
//!
//! Implicit multiplication is not accepted: write `2*x`, not `2x`.

mod ast;
mod domain;
mod jet;
mod parser;

pub use ast::{Expr, Func};
pub use jet::Jet3;
pub use parser::parse;

use crate::error::Result;
use crate::scalar::Real;

/// Free-function form of [`Expr::eval_jet`].
pub fn eval_jet<T: Real>(e: &Expr<T>, x: T) -> Result<Jet3<T>> {
    e.eval_jet(x)
}
