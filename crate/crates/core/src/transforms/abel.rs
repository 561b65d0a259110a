use std::f64::consts::PI;

use serde::Serialize;

use super::descriptor::{FunctionDescriptor, Parity};
use super::{csch, sech};
use crate::error::{Error, Result};
use crate::numerics::{integrate_decaying, richardson_table, sum_alternating, SumOptions};

/// Default extrapolation nodes `x_j = 0.8·2^{−j}`, `j = 0..7`.
pub const ABEL_LADDER: [f64; 8] = [0.8, 0.4, 0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625];

/// Ladder results whose estimated error exceeds this are discarded in
/// favour of the integral representation.
const LADDER_ACCEPT: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AbelMethod {
    ClosedForm,
    Ladder,
    LemmaIntegral,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AbelEstimate {
    pub value: f64,
    pub error_estimate: f64,
    pub method: AbelMethod,
    pub warnings: Vec<String>,
}

/// Abel-regularised boundary constant of `f`:
///
/// * even: `c_e = lim_{x→0⁺} Σ_{k≥0} (−1)^k f(i(k+½)) e^{−(k+½)x}`
/// * odd: `c_o = lim_{x→0⁺} Σ_{k≥1} (−1)^{k+1} r(k) e^{−kx}`, `f(ik) = i·r(k)`
pub fn abel_constant(f: &FunctionDescriptor) -> Result<f64> {
    abel_estimate(f).map(|e| e.value)
}

/// [`abel_constant`] with provenance: the closed form when the descriptor
/// carries one, otherwise the extrapolation ladder, falling back to the
/// integral representation when the ladder is not accurate enough.
pub fn abel_estimate(f: &FunctionDescriptor) -> Result<AbelEstimate> {
    if let Some(value) = f.abel_closed_form() {
        return Ok(AbelEstimate {
            value,
            error_estimate: 0.0,
            method: AbelMethod::ClosedForm,
            warnings: Vec::new(),
        });
    }
    let smallest = ABEL_LADDER[ABEL_LADDER.len() - 1];
    let reason = if f.imag_growth_rate() >= smallest {
        format!(
            "imaginary-axis growth rate {} defeats the damped sums at x = {smallest}",
            f.imag_growth_rate()
        )
    } else {
        match abel_ladder(f, &ABEL_LADDER) {
            Ok(est) if est.error_estimate <= LADDER_ACCEPT => return Ok(est),
            Ok(est) => format!("ladder error estimate {:.1e} too large", est.error_estimate),
            Err(e) => format!("ladder failed: {e}"),
        }
    };
    let mut est = abel_integral(f)?;
    est.warnings
        .push(format!("{}: Abel constant from integral representation ({reason})", f.label()));
    Ok(est)
}

/// Damped sum `S(x)` for one ladder node.
fn damped_sum(f: &FunctionDescriptor, x: f64, opts: &SumOptions) -> Result<crate::SeriesResult> {
    let s = match f.parity() {
        Parity::Even => sum_alternating(
            0,
            |k| {
                let y = k as f64 + 0.5;
                f.imag(y) * (-y * x).exp()
            },
            opts,
        )?,
        Parity::Odd => sum_alternating(
            1,
            |k| {
                let y = k as f64;
                f.imag(y) * (-y * x).exp()
            },
            opts,
        )?,
    };
    if !s.converged {
        return Err(Error::NotConverged {
            what: format!("damped sum for {} at x = {x}", f.label()),
            terms: s.terms_used,
        });
    }
    Ok(s)
}

/// Polynomial extrapolation of the damped sums at `nodes` to `x = 0`.
///
/// The error estimate adds the last Neville correction to the propagated
/// rounding and truncation error of the samples.
pub fn abel_ladder(f: &FunctionDescriptor, nodes: &[f64]) -> Result<AbelEstimate> {
    let opts = SumOptions {
        max_terms: 1_000_000,
        ..SumOptions::with_tolerances(1e-18, 1e-16)
    };
    let smallest = nodes.iter().copied().fold(f64::INFINITY, f64::min);
    if f.imag_growth_rate() >= smallest {
        return Err(Error::Domain(format!(
            "{}: imaginary-axis growth rate {} is not damped at x = {smallest}",
            f.label(),
            f.imag_growth_rate()
        )));
    }
    let mut samples = Vec::with_capacity(nodes.len());
    let mut sample_noise = 0.0f64;
    for &x in nodes {
        let s = damped_sum(f, x, &opts)?;
        sample_noise = sample_noise.max(s.tail_estimate + 4.0 * f64::EPSILON * s.abs_sum);
        samples.push((x, s.value));
    }
    let table = richardson_table(&samples)?;
    Ok(AbelEstimate {
        value: table.value,
        error_estimate: table.error_estimate + table.noise_gain * sample_noise,
        method: AbelMethod::Ladder,
        warnings: Vec::new(),
    })
}

/// Integral representation of the Abel constant:
/// `c_e = ∫₀^∞ f(t) sech(πt) dt`, `c_o = ∫₀^∞ f(t) csch(πt) dt`.
pub fn abel_integral(f: &FunctionDescriptor) -> Result<AbelEstimate> {
    let opts = SumOptions::with_tolerances(1e-15, 1e-13);
    let rate = f.weighted_decay_rate();
    if rate <= 0.0 {
        return Err(Error::Domain(format!(
            "{}: real-axis growth is too fast for the integral representation",
            f.label()
        )));
    }
    let q = match f.parity() {
        Parity::Even => integrate_decaying(|t| f.real(t) * sech(PI * t), rate, &opts)?,
        Parity::Odd => {
            let origin = f.deriv_at_zero().unwrap_or(0.0) / PI;
            integrate_decaying(
                |t| if t == 0.0 { origin } else { f.real(t) * csch(PI * t) },
                rate,
                &opts,
            )?
        }
    };
    Ok(AbelEstimate {
        value: q.value,
        error_estimate: q.error_estimate,
        method: AbelMethod::LemmaIntegral,
        warnings: Vec::new(),
    })
}
