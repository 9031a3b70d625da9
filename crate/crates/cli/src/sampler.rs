//! Seeded random intervals: `a ~ U(0.5, 5)`, `b = a + w` with
//! `w ~ U(0.1, 2)`, redrawn while the extended interval leaves the
//! domain of the function under test.

use hh_core::{Expr64, Interval64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::CliError;

/// Redraws allowed per interval before giving up.
pub const MAX_REJECTIONS: usize = 1000;

pub fn random_intervals(seed: u64, n: usize, f: Option<&Expr64>) -> Result<Vec<Interval64>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            for _ in 0..MAX_REJECTIONS {
                let a = rng.gen_range(0.5..5.0);
                let b = a + rng.gen_range(0.1..2.0);
                let iv = Interval64::new(a, b).map_err(CliError::from)?;
                let e = iv.extend();
                if f.is_none_or(|f| f.check_domain(e.lo, e.hi).is_ok()) {
                    return Ok(iv);
                }
            }
            Err(CliError::Usage(format!(
                "no interval for trial {i} keeps the extended interval in the domain after {MAX_REJECTIONS} draws"
            )))
        })
        .collect()
}
