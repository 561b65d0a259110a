//! Summation, quadrature and extrapolation engines shared by every other
//! module.
//!
//! Everything works in `f64`. Infinite sums go through [`sum_series`] or
//! [`sum_alternating`], which accumulate with Neumaier compensation and stop
//! only once a tail bound is below tolerance. Integrals over `[0, ∞)` with an
//! exponentially decaying integrand go through [`integrate_decaying`].

mod extrapolate;
mod quad;
mod sum;

pub use extrapolate::{richardson_extrapolate, richardson_table, Extrapolation};
pub use quad::{integrate_decaying, QuadratureResult};
pub use sum::{sum_alternating, sum_series, CompensatedSum, SeriesResult};

use serde::Serialize;

use crate::error::{Error, Result};

/// Stopping rules for the series engines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SumOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: usize,
    /// Number of successive small terms required before the tail test is
    /// consulted. Sine-weighted terms can vanish at isolated indices.
    pub consecutive_small: usize,
}

impl Default for SumOptions {
    fn default() -> Self {
        SumOptions {
            rel_tol: 1e-12,
            abs_tol: 1e-14,
            max_terms: 100_000,
            consecutive_small: 3,
        }
    }
}

impl SumOptions {
    pub fn with_tolerances(abs_tol: f64, rel_tol: f64) -> Self {
        SumOptions {
            abs_tol,
            rel_tol,
            ..SumOptions::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_tol > 0.0) {
            return Err(Error::InvalidOptions(format!(
                "tolerances must be positive (abs_tol={}, rel_tol={})",
                self.abs_tol, self.rel_tol
            )));
        }
        if self.consecutive_small < 1 || self.max_terms < self.consecutive_small {
            return Err(Error::InvalidOptions(format!(
                "need max_terms >= consecutive_small >= 1 (max_terms={}, consecutive_small={})",
                self.max_terms, self.consecutive_small
            )));
        }
        Ok(())
    }

    /// Absolute tolerance at a given magnitude: `abs_tol + rel_tol·|value|`.
    #[inline]
    pub fn tolerance(&self, value: f64) -> f64 {
        self.abs_tol + self.rel_tol * value.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_options_are_valid() {
        SumOptions::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_options() {
        let mut o = SumOptions::default();
        o.rel_tol = 0.0;
        assert!(o.validate().is_err());
        let mut o = SumOptions::default();
        o.consecutive_small = 0;
        assert!(o.validate().is_err());
        let mut o = SumOptions::default();
        o.max_terms = 2;
        assert!(o.validate().is_err());
        let mut o = SumOptions::default();
        o.abs_tol = f64::NAN;
        assert!(o.validate().is_err());
    }
}
