use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Advisory growth data `|f(z)| ≤ C (1+|z|)^N e^{b|Re z|}` in the closed
/// upper half-plane. Only checked for `b < π`, never enforced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Growth {
    pub degree: f64,
    pub rate: f64,
}

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A real-analytic function of definite parity, seen on the real and the
/// imaginary axis.
#[derive(Clone)]
pub struct FunctionDescriptor {
    label: String,
    parity: Parity,
    real_eval: RealFn,
    imag_eval: RealFn,
    /// f(0) when even, f'(0) when odd.
    origin: f64,
    abel_closed_form: Option<f64>,
    growth: Option<Growth>,
    /// c such that r(y) = O(poly(y)·e^{c·y}).
    imag_growth_rate: f64,
}

impl fmt::Debug for FunctionDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FunctionDescriptor")
            .field("label", &self.label)
            .field("parity", &self.parity)
            .field("origin", &self.origin)
            .field("abel_closed_form", &self.abel_closed_form)
            .field("growth", &self.growth)
            .field("imag_growth_rate", &self.imag_growth_rate)
            .finish_non_exhaustive()
    }
}

impl FunctionDescriptor {
    /// Even `f` with `f(0) = value_at_zero`; `imag` returns `f(iy)`.
    pub fn even<R, I>(label: impl Into<String>, value_at_zero: f64, real: R, imag: I) -> Self
    where
        R: Fn(f64) -> f64 + Send + Sync + 'static,
        I: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        FunctionDescriptor {
            label: label.into(),
            parity: Parity::Even,
            real_eval: Arc::new(real),
            imag_eval: Arc::new(imag),
            origin: value_at_zero,
            abel_closed_form: None,
            growth: None,
            imag_growth_rate: 0.0,
        }
    }

    /// Odd `f` with `f'(0) = deriv_at_zero`; `imag` returns `r(y)` where
    /// `f(iy) = i·r(y)`.
    pub fn odd<R, I>(label: impl Into<String>, deriv_at_zero: f64, real: R, imag: I) -> Self
    where
        R: Fn(f64) -> f64 + Send + Sync + 'static,
        I: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        FunctionDescriptor {
            parity: Parity::Odd,
            ..FunctionDescriptor::even(label, deriv_at_zero, real, imag)
        }
    }

    pub fn with_abel_constant(mut self, value: f64) -> Self {
        self.abel_closed_form = Some(value);
        self
    }

    pub fn with_growth(mut self, degree: f64, rate: f64) -> Self {
        self.growth = Some(Growth { degree, rate });
        self
    }

    pub fn with_imag_growth_rate(mut self, rate: f64) -> Self {
        self.imag_growth_rate = rate;
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    #[inline]
    pub fn real(&self, t: f64) -> f64 {
        (self.real_eval)(t)
    }

    #[inline]
    pub fn imag(&self, y: f64) -> f64 {
        (self.imag_eval)(y)
    }

    pub fn value_at_zero(&self) -> Option<f64> {
        (self.parity == Parity::Even).then_some(self.origin)
    }

    pub fn deriv_at_zero(&self) -> Option<f64> {
        (self.parity == Parity::Odd).then_some(self.origin)
    }

    pub fn abel_closed_form(&self) -> Option<f64> {
        self.abel_closed_form
    }

    pub fn growth(&self) -> Option<Growth> {
        self.growth
    }

    pub fn imag_growth_rate(&self) -> f64 {
        self.imag_growth_rate
    }

    /// Decay rate of `f(t)·sech(πt)` or `f(t)/sinh(πt)` on the real axis.
    pub(crate) fn weighted_decay_rate(&self) -> f64 {
        PI - self.growth.map(|g| g.rate).unwrap_or(0.0)
    }

    pub(crate) fn require(&self, parity: Parity) -> Result<()> {
        if self.parity == parity {
            Ok(())
        } else {
            Err(Error::ParityMismatch {
                label: self.label.clone(),
                expected: parity.as_str(),
                actual: self.parity.as_str(),
            })
        }
    }

    /// Advisory checks on the growth metadata.
    pub(crate) fn growth_warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if let Some(g) = self.growth {
            if g.rate >= PI {
                w.push(format!(
                    "{}: growth rate b = {} is not below π; the transform hypotheses are not met",
                    self.label, g.rate
                ));
            }
        }
        if self.imag_growth_rate >= PI {
            w.push(format!(
                "{}: imaginary-axis growth rate {} reaches π; result is outside the proven range",
                self.label, self.imag_growth_rate
            ));
        }
        w
    }
}

/// `t^m`, whose value on the imaginary axis is `i^m y^m`.
fn power(m: u32) -> FunctionDescriptor {
    let label = match m {
        0 => "one".to_string(),
        1 => "t".to_string(),
        2 => "tsq".to_string(),
        _ => format!("t{m}"),
    };
    let exp = m as i32;
    let real = move |t: f64| t.powi(exp);
    if m.is_multiple_of(2) {
        let sign = if (m / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
        let origin = if m == 0 { 1.0 } else { 0.0 };
        FunctionDescriptor::even(label, origin, real, move |y: f64| sign * y.powi(exp))
            .with_growth(m as f64, 0.0)
    } else {
        let sign = if ((m - 1) / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
        let origin = if m == 1 { 1.0 } else { 0.0 };
        FunctionDescriptor::odd(label, origin, real, move |y: f64| sign * y.powi(exp))
            .with_growth(m as f64, 0.0)
    }
}

fn parse_parameter(name: &str, raw: &str) -> Result<f64> {
    let v: f64 = raw
        .parse()
        .map_err(|_| Error::Parameter(format!("{name}: cannot parse `{raw}` as a number")))?;
    if !(v > 0.0) || !v.is_finite() {
        return Err(Error::Parameter(format!("{name}: parameter must be positive, got {v}")));
    }
    Ok(v)
}

/// Names accepted by [`builtin`].
pub fn builtin_names() -> &'static [&'static str] {
    &[
        "zero", "one", "t", "tsq", "t3", "t4", "t5", "t7", "cos:C", "sin:C", "sinc-pi:NU",
    ]
}

/// Looks up a builtin descriptor.
///
/// `tN` is `t^N`; `cos:C` is `cos(Ct)`; `sin:C` is `sin(Ct)`; `sinc-pi:NU` is
/// `sin(πNUt)/t`.
pub fn builtin(name: &str) -> Result<FunctionDescriptor> {
    let unknown = || {
        Error::Parameter(format!(
            "unknown function `{name}`; builtins are {}",
            builtin_names().join(", ")
        ))
    };
    if let Some((head, arg)) = name.split_once(':') {
        let c = parse_parameter(name, arg)?;
        return match head {
            "cos" => Ok(FunctionDescriptor::even(
                name,
                1.0,
                move |t: f64| (c * t).cos(),
                move |y: f64| (c * y).cosh(),
            )
            .with_abel_constant(0.5 / (0.5 * c).cosh())
            .with_growth(0.0, 0.0)
            .with_imag_growth_rate(c)),
            "sin" => Ok(FunctionDescriptor::odd(
                name,
                c,
                move |t: f64| (c * t).sin(),
                move |y: f64| (c * y).sinh(),
            )
            .with_abel_constant(0.5 * (0.5 * c).tanh())
            .with_growth(0.0, 0.0)
            .with_imag_growth_rate(c)),
            "sinc-pi" => {
                let w = PI * c;
                let abel = (0.5 * w).exp().atan() - (-0.5 * w).exp().atan();
                Ok(FunctionDescriptor::even(
                    name,
                    w,
                    move |t: f64| if t == 0.0 { w } else { (w * t).sin() / t },
                    move |y: f64| if y == 0.0 { w } else { (w * y).sinh() / y },
                )
                .with_abel_constant(abel)
                .with_growth(0.0, 0.0)
                .with_imag_growth_rate(w))
            }
            _ => Err(unknown()),
        };
    }
    match name {
        "zero" => Ok(FunctionDescriptor::even("zero", 0.0, |_| 0.0, |_| 0.0).with_growth(0.0, 0.0)),
        "one" => Ok(power(0)),
        "t" => Ok(power(1)),
        "tsq" => Ok(power(2)),
        _ => {
            let m: u32 = name
                .strip_prefix('t')
                .and_then(|d| d.parse().ok())
                .filter(|&m| m <= 15)
                .ok_or_else(unknown)?;
            Ok(power(m))
        }
    }
}
