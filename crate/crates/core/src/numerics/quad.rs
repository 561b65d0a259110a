use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::Serialize;

use super::SumOptions;
use crate::error::{Error, Result};

/// Outcome of a quadrature over `[0, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

// Gauss–Kronrod 7/15 abscissae and weights on [-1, 1] (QUADPACK qk15).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_3,
    0.949_107_912_342_758_524_526_189_684_047_9,
    0.864_864_423_359_769_072_789_712_788_640_9,
    0.741_531_185_599_394_439_863_864_773_280_8,
    0.586_087_235_467_691_130_294_144_845_693_0,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_2,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_5,
    0.140_653_259_715_525_918_745_189_590_510_2,
    0.169_004_726_639_267_902_826_583_426_598_6,
    0.190_350_578_064_785_409_913_256_402_421_0,
    0.204_432_940_075_298_892_414_161_999_234_6,
    0.209_482_141_084_727_828_012_999_174_891_7,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_1,
    0.279_705_391_489_276_667_901_467_771_423_8,
    0.381_830_050_505_118_944_950_369_775_488_98,
    0.417_959_183_673_469_387_755_102_040_816_3,
];

const MAX_PANELS: usize = 4000;

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn eval<F: Fn(f64) -> f64>(f: &F, t: f64) -> Result<f64> {
    let y = f(t);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::NonFinite { at: t, value: y })
    }
}

/// One 15-point Kronrod panel. The error is |K15 − G7| plus a rounding floor
/// proportional to ∫|f|, which keeps it an upper estimate once the two rules
/// agree to the last bit.
fn gk15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Result<Panel> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = eval(f, center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs = kronrod.abs();
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(f, center - dx)?;
        let f2 = eval(f, center + dx)?;
        kronrod += WGK[j] * (f1 + f2);
        abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let value = kronrod * half;
    let rounding = 50.0 * f64::EPSILON * abs * half;
    Ok(Panel {
        lo,
        hi,
        value,
        error: ((kronrod - gauss) * half).abs() + rounding,
    })
}

/// Integrates `f` over `[0, ∞)` assuming `|f(t)| ≤ M·e^{−λt}` for large `t`.
///
/// The envelope constant `M` is estimated by sampling `|f(t)|·e^{λt}`; the
/// range is truncated where the tail bound `M·e^{−λT}/λ` drops below a tenth
/// of `abs_tol`, and `[0, T]` is handled by globally adaptive Gauss–Kronrod
/// bisection. The returned error estimate includes the tail bound.
pub fn integrate_decaying<F>(f: F, decay_rate: f64, opts: &SumOptions) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    opts.validate()?;
    if !(decay_rate > 0.0) || !decay_rate.is_finite() {
        return Err(Error::Domain(format!(
            "decay rate must be positive and finite, got {decay_rate}"
        )));
    }
    let lambda = decay_rate;
    let tail_target = 0.1 * opts.abs_tol;
    let step = 0.5 / lambda;
    let mut evaluations = 0usize;

    // Envelope scan: extend until the truncation point lies inside it.
    let mut envelope = 0.0f64;
    let mut scanned = 0usize;
    let mut scan_end = 40.0 / lambda;
    let truncation = loop {
        while (scanned as f64) * step <= scan_end {
            let t = scanned as f64 * step;
            let y = eval(&f, t)?;
            evaluations += 1;
            envelope = envelope.max(y.abs() * (lambda * t).exp());
            scanned += 1;
        }
        let m_hat = 10.0 * envelope;
        if m_hat == 0.0 {
            break scan_end;
        }
        let t = ((m_hat / (lambda * tail_target)).ln() / lambda).max(step);
        if t <= scan_end || scan_end * lambda > 700.0 {
            break t;
        }
        scan_end = (2.0 * scan_end).min(700.0 / lambda).max(t.min(700.0 / lambda));
    };
    let tail_bound = 10.0 * envelope * (-lambda * truncation).exp() / lambda;

    let initial_panels = ((truncation * lambda / 2.0).ceil() as usize).clamp(4, 256);
    let width = truncation / initial_panels as f64;
    let mut heap = BinaryHeap::with_capacity(2 * initial_panels);
    for i in 0..initial_panels {
        let lo = i as f64 * width;
        let hi = if i + 1 == initial_panels {
            truncation
        } else {
            (i + 1) as f64 * width
        };
        heap.push(gk15(&f, lo, hi)?);
        evaluations += 15;
    }

    let totals = |heap: &BinaryHeap<Panel>| -> (f64, f64) {
        let mut value = super::CompensatedSum::new();
        let mut error = 0.0;
        for p in heap.iter() {
            value.add(p.value);
            error += p.error;
        }
        (value.value(), error)
    };

    let (mut value, mut error) = totals(&heap);
    while error > opts.tolerance(value) && heap.len() < MAX_PANELS {
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            heap.push(worst);
            break;
        }
        heap.push(gk15(&f, worst.lo, mid)?);
        heap.push(gk15(&f, mid, worst.hi)?);
        evaluations += 30;
        let t = totals(&heap);
        value = t.0;
        error = t.1;
    }

    Ok(QuadratureResult {
        value,
        error_estimate: error + tail_bound,
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn sech(x: f64) -> f64 {
        1.0 / x.cosh()
    }

    #[test]
    fn sech_integral() {
        let r = integrate_decaying(|t| sech(PI * t), PI, &SumOptions::default()).unwrap();
        assert!((r.value - 0.5).abs() < 1e-10);
        assert!(r.error_estimate >= (r.value - 0.5).abs());
        assert!(r.evaluations > 0);
    }

    #[test]
    fn exponential_integrals() {
        let opts = SumOptions::default();
        let r = integrate_decaying(|t| (-t).exp(), 1.0, &opts).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        assert!(r.error_estimate >= (r.value - 1.0).abs());
        let r = integrate_decaying(|t| t * (-t).exp(), 1.0, &opts).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        assert!(r.error_estimate >= (r.value - 1.0).abs());
    }

    #[test]
    fn csch_weighted_cosine() {
        // ∫ t cos(2t)/sinh(πt) dt = Σ (−1)^{k−1} k e^{−2k} = x/(1+x)², x = e^{−2}
        let f = |t: f64| {
            if t == 0.0 {
                1.0 / PI
            } else {
                t * (2.0 * t).cos() / (PI * t).sinh()
            }
        };
        let r = integrate_decaying(f, PI, &SumOptions::default()).unwrap();
        let x = (-2.0f64).exp();
        let exact = x / (1.0 + x).powi(2);
        assert!((r.value - exact).abs() < 1e-12, "{} vs {}", r.value, exact);
        assert!((exact - 0.104_993_585_403_506_52).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_decay_rate() {
        let opts = SumOptions::default();
        assert!(integrate_decaying(|t| (-t).exp(), 0.0, &opts).is_err());
        assert!(integrate_decaying(|t| (-t).exp(), -1.0, &opts).is_err());
    }

    #[test]
    fn non_finite_integrand() {
        let r = integrate_decaying(|t| 1.0 / (t - 1.0) * (-t).exp(), 1.0, &SumOptions::default());
        // The sampling grid hits t = 1 exactly.
        assert!(matches!(r, Err(Error::NonFinite { .. })));
    }

    #[test]
    fn zero_integrand() {
        let r = integrate_decaying(|_| 0.0, 1.0, &SumOptions::default()).unwrap();
        assert_eq!(r.value, 0.0);
    }
}
