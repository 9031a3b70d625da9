//! Extended Hermite-Hadamard inequalities: three-point bounds, first- and
//! second-derivative error constants, certified midpoint quadrature,
//! special means, and Bessel / q-digamma instances, each checked against
//! an independent reference integrator.
//!
//! Everything numeric is generic over [`Real`] (`f32` or `f64`); the
//! `*64` aliases below fix the scalar to `f64`.

// `!(x > y)` comparisons also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod convexity;
pub mod error;
pub mod exprlang;
pub mod hh_bounds;
pub mod interval;
pub mod means;
pub mod oracle;
pub mod quadrature;
pub mod report;
pub mod scalar;
pub mod special;
pub mod tolerance;

pub use convexity::{sample_convexity, sample_convexity_fn};
pub use error::{HhError, Result};
pub use exprlang::{eval_jet, parse, Expr, Jet3};
pub use interval::{conjugate_exponent, extend, ExtendedInterval, Interval};
pub use report::BoundReport;
pub use scalar::Real;
pub use tolerance::ToleranceConfig;

pub type Expr64 = Expr<f64>;
pub type Jet64 = Jet3<f64>;
pub type Interval64 = Interval<f64>;
pub type ExtendedInterval64 = ExtendedInterval<f64>;
pub type Tolerance64 = ToleranceConfig<f64>;
pub type Report64 = BoundReport<f64>;
pub type FirstOrder64 = hh_bounds::FirstOrderBounds<f64>;
pub type SecondOrder64 = hh_bounds::SecondOrderBounds<f64>;
pub type Partition64 = quadrature::Partition<f64>;
pub type Quadrature64 = quadrature::QuadratureResult<f64>;
pub type Series64 = special::SeriesResult<f64>;

pub type Expr32 = Expr<f32>;
pub type Interval32 = Interval<f32>;
pub type Tolerance32 = ToleranceConfig<f32>;
