//! Gamma/Beta, modified Bessel functions, q-digamma, and the inequality
//! checks built on them.

mod bessel;
mod gamma;
mod props;
mod qdigamma;
mod series;

pub use bessel::{bessel_i, bessel_k, normalized_i, normalized_i_series};
pub use gamma::{beta, gamma, log_gamma};
pub use props::{
    bessel_k_check, bessel_prop_checks, derivative_formula_check, f_p, hyperbolic_check,
    normalized_bessel_check, qdigamma_prop_checks,
};
pub use qdigamma::{q_digamma, q_digamma_deriv};
pub use series::SeriesResult;
