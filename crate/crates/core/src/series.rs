//! Power-series summation in double-double arithmetic.

use crate::dd::{CDd, Dd};
use crate::error::{Error, Result};
use crate::logpoint::{term_cap, C64};

/// Stop once this many consecutive terms are negligible.
const QUIET_RUN: usize = 3;
const REL_TOL: f64 = 1e-20;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Summed {
    pub sum: CDd,
    /// `sum_k k c_k t_k`, the sensitivity of the sum to a relative change of
    /// the expansion variable.
    pub dsum: CDd,
    pub abs_sum: f64,
    pub terms: usize,
}

impl Summed {
    pub fn value(&self) -> C64 {
        self.sum.to_c64()
    }

    /// Absolute error of `sum` given that the expansion variable carries a
    /// relative error `rel_var`.
    pub fn err(&self, rel_var: f64) -> f64 {
        self.dsum.abs() * rel_var + 1e-30 * self.abs_sum + 2.0 * f64::EPSILON * self.sum.abs()
    }
}

/// Sums `sum_k c_k t_k`, where `step(k)` returns `(c_k, t_{k+1}/t_k)` and
/// `t_0 = first`.
pub(crate) fn sum_series<F>(first: CDd, mut step: F) -> Result<Summed>
where
    F: FnMut(usize) -> (CDd, CDd),
{
    let cap = term_cap();
    let mut t = first;
    let mut sum = CDd::ZERO;
    let mut dsum = CDd::ZERO;
    let mut abs_sum = 0.0;
    let mut quiet = 0;
    for k in 0..cap {
        let (c, r) = step(k);
        let term = c * t;
        sum = sum + term;
        dsum = dsum + term.scale(Dd::new(k as f64));
        let a = term.abs();
        abs_sum += a;
        let ratio = r.abs();
        if (a <= REL_TOL * sum.abs() || a == 0.0) && ratio < 1.0 {
            quiet += 1;
            if quiet >= QUIET_RUN {
                return Ok(Summed { sum, dsum, abs_sum, terms: k + 1 });
            }
        } else {
            quiet = 0;
        }
        if !a.is_finite() {
            return Err(Error::Overflow("series term".into()));
        }
        t = t * r;
    }
    Err(Error::Nonconvergence { terms: cap })
}
