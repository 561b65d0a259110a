use std::f64::consts::PI;

use super::descriptor::{FunctionDescriptor, Parity};
use super::{sech, t_over_sinh_pi};
use crate::error::{Error, Result};
use crate::numerics::{integrate_decaying, sum_alternating, QuadratureResult, SeriesResult, SumOptions};

fn check_gamma(gamma: f64, strict: bool) -> Result<()> {
    let ok = gamma.is_finite() && if strict { gamma > 0.0 } else { gamma >= 0.0 };
    if ok {
        Ok(())
    } else {
        let bound = if strict { "positive" } else { "non-negative" };
        Err(Error::Parameter(format!("γ must be finite and {bound}, got {gamma}")))
    }
}

fn integral_rate(d: &FunctionDescriptor) -> Result<f64> {
    let rate = d.weighted_decay_rate();
    if rate > 0.0 {
        Ok(rate)
    } else {
        Err(Error::Domain(format!(
            "{}: growth rate reaches π, the weighted integral diverges",
            d.label()
        )))
    }
}

/// Rejects damped series whose terms grow like `e^{(c−γ)y}` with `c ≥ γ`.
fn check_series_rate(d: &FunctionDescriptor, gamma: f64) -> Result<()> {
    if d.imag_growth_rate() >= gamma {
        return Err(Error::NotConverged {
            what: format!(
                "{}: imaginary-axis growth {} is not damped by e^(-{gamma} y)",
                d.label(),
                d.imag_growth_rate()
            ),
            terms: 0,
        });
    }
    Ok(())
}

fn require_converged(s: SeriesResult, what: impl FnOnce() -> String) -> Result<SeriesResult> {
    if s.converged {
        Ok(s)
    } else {
        Err(Error::NotConverged { what: what(), terms: s.terms_used })
    }
}

/// `∫₀^∞ f(t) cos(γt) sech(πt) dt` for even `f`.
pub fn lemma1_integral(d: &FunctionDescriptor, gamma: f64, opts: &SumOptions) -> Result<QuadratureResult> {
    d.require(Parity::Even)?;
    check_gamma(gamma, false)?;
    integrate_decaying(|t| d.real(t) * (gamma * t).cos() * sech(PI * t), integral_rate(d)?, opts)
}

/// `Σ_{k≥0} (−1)^k f(i(k+½)) e^{−(k+½)γ}` for even `f`.
pub fn lemma1_series(d: &FunctionDescriptor, gamma: f64, opts: &SumOptions) -> Result<SeriesResult> {
    d.require(Parity::Even)?;
    check_gamma(gamma, true)?;
    check_series_rate(d, gamma)?;
    let s = sum_alternating(
        0,
        |k| {
            let y = k as f64 + 0.5;
            d.imag(y) * (-y * gamma).exp()
        },
        opts,
    )?;
    require_converged(s, || format!("lemma1 series for {} at γ = {gamma}", d.label()))
}

/// `∫₀^∞ g(t) t cos(γt) / sinh(πt) dt` for even `g`.
pub fn lemma2_integral(g: &FunctionDescriptor, gamma: f64, opts: &SumOptions) -> Result<QuadratureResult> {
    g.require(Parity::Even)?;
    check_gamma(gamma, false)?;
    integrate_decaying(|t| g.real(t) * (gamma * t).cos() * t_over_sinh_pi(t), integral_rate(g)?, opts)
}

/// `Σ_{k≥1} (−1)^{k−1} k g(ik) e^{−kγ}` for even `g`.
pub fn lemma2_series(g: &FunctionDescriptor, gamma: f64, opts: &SumOptions) -> Result<SeriesResult> {
    g.require(Parity::Even)?;
    check_gamma(gamma, true)?;
    check_series_rate(g, gamma)?;
    let s = sum_alternating(
        1,
        |k| {
            let y = k as f64;
            y * g.imag(y) * (-y * gamma).exp()
        },
        opts,
    )?;
    require_converged(s, || format!("lemma2 series for {} at γ = {gamma}", g.label()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::builtin;

    fn opts() -> SumOptions {
        SumOptions::with_tolerances(1e-14, 1e-13)
    }

    #[test]
    fn lemma1_closed_forms() {
        let one = builtin("one").unwrap();
        let i0 = lemma1_integral(&one, 0.0, &opts()).unwrap();
        assert!((i0.value - 0.5).abs() < 1e-12);
        let i2 = lemma1_integral(&one, 2.0, &opts()).unwrap();
        let s2 = lemma1_series(&one, 2.0, &opts()).unwrap();
        let closed = 0.5 / 1f64.cosh();
        assert!((i2.value - closed).abs() < 1e-12);
        assert!((s2.value - closed).abs() < 1e-14);
        assert!((closed - 0.3240271368319427).abs() < 1e-15);
    }

    #[test]
    fn lemma1_cosh_series_matches_two_geometric_series() {
        // cosh(y)e^{-2y} = (e^{-y} + e^{-3y})/2 and Σ(−1)^k q^{k+½} = q^{½}/(1+q).
        let d = builtin("cos:1").unwrap();
        let s = lemma1_series(&d, 2.0, &opts()).unwrap();
        let geo = |q: f64| q.sqrt() / (1.0 + q);
        let closed = 0.5 * (geo((-1f64).exp()) + geo((-3f64).exp()));
        assert!((s.value - closed).abs() < 1e-12);
        let i = lemma1_integral(&d, 2.0, &opts()).unwrap();
        assert!((i.value - closed).abs() < 1e-11);
    }

    #[test]
    fn lemma1_tsq_both_sides() {
        let d = builtin("tsq").unwrap();
        let i = lemma1_integral(&d, 0.3, &opts()).unwrap();
        let s = lemma1_series(&d, 0.3, &opts()).unwrap();
        assert!((i.value - s.value).abs() < 1e-9, "{} vs {}", i.value, s.value);
    }

    #[test]
    fn lemma2_closed_forms() {
        let one = builtin("one").unwrap();
        for (gamma, closed) in [(2.0f64, 0.1049935854035065), (1.0, 0.19661193324148185)] {
            let x = (-gamma).exp();
            assert!((x / (1.0 + x).powi(2) - closed).abs() < 1e-15);
            let i = lemma2_integral(&one, gamma, &opts()).unwrap();
            let s = lemma2_series(&one, gamma, &opts()).unwrap();
            assert!((i.value - closed).abs() < 1e-12, "{gamma}: {}", i.value);
            assert!((s.value - closed).abs() < 1e-13);
        }
        let zero = builtin("zero").unwrap();
        assert_eq!(lemma2_series(&zero, 1.0, &opts()).unwrap().value, 0.0);
        assert_eq!(lemma2_integral(&zero, 1.0, &opts()).unwrap().value, 0.0);
    }

    #[test]
    fn large_gamma_vanishes() {
        let one = builtin("one").unwrap();
        assert!(lemma1_series(&one, 800.0, &opts()).unwrap().value.abs() < 1e-150);
        assert!(lemma2_series(&one, 800.0, &opts()).unwrap().value.abs() < 1e-150);
    }

    #[test]
    fn errors() {
        let t = builtin("t").unwrap();
        assert!(matches!(lemma1_integral(&t, 1.0, &opts()), Err(Error::ParityMismatch { .. })));
        assert!(matches!(lemma2_series(&t, 1.0, &opts()), Err(Error::ParityMismatch { .. })));
        let one = builtin("one").unwrap();
        assert!(lemma1_series(&one, 0.0, &opts()).is_err());
        assert!(lemma1_integral(&one, -1.0, &opts()).is_err());
        let c = builtin("cos:2").unwrap();
        assert!(matches!(lemma1_series(&c, 1.0, &opts()), Err(Error::NotConverged { .. })));
    }
}
