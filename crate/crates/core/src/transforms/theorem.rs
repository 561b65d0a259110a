use std::f64::consts::PI;

use serde::Serialize;

use super::abel::abel_estimate;
use super::descriptor::{FunctionDescriptor, Parity};
use super::{csch, sech};
use crate::error::{Error, Result};
use crate::numerics::{sum_alternating, sum_series, SeriesResult, SumOptions};

/// Lattice spacing `a` and its dual `b = 2π/a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransformParams {
    pub a: f64,
    pub b: f64,
}

impl TransformParams {
    pub fn new(a: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::Parameter(format!("a must be positive and finite, got {a}")));
        }
        Ok(TransformParams { a, b: 2.0 * PI / a })
    }
}

/// Both sides of a transform identity with their residuals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransformReport {
    pub params: TransformParams,
    pub lhs: SeriesResult,
    pub rhs: SeriesResult,
    pub abs_residual: f64,
    /// `abs_residual / max(|lhs|, |rhs|, 1)`.
    pub rel_residual: f64,
    pub warnings: Vec<String>,
}

impl TransformReport {
    fn new(params: TransformParams, lhs: SeriesResult, rhs: SeriesResult, warnings: Vec<String>) -> Self {
        let abs_residual = (lhs.value - rhs.value).abs();
        let rel_residual = abs_residual / lhs.value.abs().max(rhs.value.abs()).max(1.0);
        TransformReport { params, lhs, rhs, abs_residual, rel_residual, warnings }
    }
}

/// The dual series decays like `e^{(c−b)y}`; refuse it when `c ≥ b`.
fn check_dual_rate(d: &FunctionDescriptor, b: f64) -> Result<()> {
    if d.imag_growth_rate() >= b {
        return Err(Error::NotConverged {
            what: format!(
                "dual series for {}: growth rate {} is not damped by b = {b}",
                d.label(),
                d.imag_growth_rate()
            ),
            terms: 0,
        });
    }
    Ok(())
}

fn converged(s: SeriesResult, what: &str, d: &FunctionDescriptor) -> Result<SeriesResult> {
    if s.converged {
        Ok(s)
    } else {
        Err(Error::NotConverged { what: format!("{what} for {}", d.label()), terms: s.terms_used })
    }
}

/// Even `f`:
/// `√a (f(0)/2 + Σ_{k≥1} f(ka) sech(πka))` against
/// `√(2b/π) (c_e/2 + Σ_{k≥0} (−1)^k f(i(k+½)) / (e^{b(k+½)} − 1))`.
pub fn theorem1_sides(d: &FunctionDescriptor, a: f64, opts: &SumOptions) -> Result<TransformReport> {
    d.require(Parity::Even)?;
    let p = TransformParams::new(a)?;
    check_dual_rate(d, p.b)?;
    let mut warnings = d.growth_warnings();

    let lattice = sum_series(1, |k| d.real(k as f64 * a) * sech(PI * k as f64 * a), opts)?;
    let lhs = converged(lattice, "lattice sum", d)?
        .offset(0.5 * d.value_at_zero().unwrap_or(0.0))
        .scale(a.sqrt());

    let abel = abel_estimate(d)?;
    warnings.extend(abel.warnings.iter().cloned());
    let b = p.b;
    let dual = sum_alternating(
        0,
        |k| {
            let y = k as f64 + 0.5;
            d.imag(y) / (b * y).exp_m1()
        },
        opts,
    )?;
    let mut rhs = converged(dual, "dual sum", d)?.offset(0.5 * abel.value);
    rhs.tail_estimate += 0.5 * abel.error_estimate;
    let rhs = rhs.scale((2.0 * b / PI).sqrt());

    Ok(TransformReport::new(p, lhs, rhs, warnings))
}

/// Odd `f` with `f(iy) = i·r(y)`:
/// `√a (f'(0)/(2π) + Σ_{k≥1} f(ka) / sinh(πka))` against
/// `√(2b/π) (c_o/2 + Σ_{k≥1} (−1)^{k+1} r(k) / (e^{bk} − 1))`.
pub fn theorem2_sides(d: &FunctionDescriptor, a: f64, opts: &SumOptions) -> Result<TransformReport> {
    d.require(Parity::Odd)?;
    let p = TransformParams::new(a)?;
    check_dual_rate(d, p.b)?;
    let mut warnings = d.growth_warnings();

    let lattice = sum_series(1, |k| d.real(k as f64 * a) * csch(PI * k as f64 * a), opts)?;
    let lhs = converged(lattice, "lattice sum", d)?
        .offset(d.deriv_at_zero().unwrap_or(0.0) / (2.0 * PI))
        .scale(a.sqrt());

    let abel = abel_estimate(d)?;
    warnings.extend(abel.warnings.iter().cloned());
    let b = p.b;
    let dual = sum_alternating(
        1,
        |k| {
            let y = k as f64;
            d.imag(y) / (b * y).exp_m1()
        },
        opts,
    )?;
    let mut rhs = converged(dual, "dual sum", d)?.offset(0.5 * abel.value);
    rhs.tail_estimate += 0.5 * abel.error_estimate;
    let rhs = rhs.scale((2.0 * b / PI).sqrt());

    Ok(TransformReport::new(p, lhs, rhs, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::builtin;

    fn opts() -> SumOptions {
        SumOptions::with_tolerances(1e-16, 1e-15)
    }

    #[test]
    fn constant_function_at_unit_spacing() {
        let r = theorem1_sides(&builtin("one").unwrap(), 1.0, &opts()).unwrap();
        // direct oracle: 1/2 + Σ sech(πk) and 2(1/4 + Σ(−1)^k/(e^{π(2k+1)} − 1))
        let lhs: f64 = 0.5 + (1..40).map(|k| 1.0 / (PI * k as f64).cosh()).sum::<f64>();
        let rhs: f64 = 2.0
            * (0.25
                + (0..40)
                    .map(|k| (-1f64).powi(k) / ((PI * (2 * k + 1) as f64).exp() - 1.0))
                    .sum::<f64>());
        assert!((r.lhs.value - lhs).abs() < 1e-14);
        // the rhs carries c_e = 1/2 through the extrapolation ladder
        assert!((r.rhs.value - rhs).abs() < 1e-12, "{} vs {rhs}", r.rhs.value);
        assert!(r.abs_residual < 1e-9);
        assert!((lhs - 0.590170299508048).abs() < 1e-14);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn identity_function() {
        for a in [0.5, 1.0, 2.0] {
            let r = theorem2_sides(&builtin("t").unwrap(), a, &opts()).unwrap();
            assert!(r.abs_residual < 1e-9, "a={a}: {r:?}");
        }
        let r = theorem2_sides(&builtin("t").unwrap(), 1.0, &opts()).unwrap();
        assert!((r.lhs.value - 0.253727962756657).abs() < 1e-13);
    }

    #[test]
    fn zero_function() {
        let r = theorem1_sides(&builtin("zero").unwrap(), 1.3, &opts()).unwrap();
        assert_eq!(r.lhs.value, 0.0);
        assert_eq!(r.rhs.value, 0.0);
    }

    #[test]
    fn parity_and_parameter_errors() {
        assert!(matches!(
            theorem1_sides(&builtin("t").unwrap(), 1.0, &opts()),
            Err(Error::ParityMismatch { .. })
        ));
        assert!(matches!(
            theorem2_sides(&builtin("one").unwrap(), 1.0, &opts()),
            Err(Error::ParityMismatch { .. })
        ));
        assert!(theorem1_sides(&builtin("one").unwrap(), 0.0, &opts()).is_err());
    }
}
