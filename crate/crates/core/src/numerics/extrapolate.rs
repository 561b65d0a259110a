use crate::error::{Error, Result};

/// Limit estimate at `x = 0` and the size of the last Neville correction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrapolation {
    pub value: f64,
    /// `|T_{0,n} − T_{0,n−1}|`, the change contributed by the last sample.
    pub error_estimate: f64,
    /// Σ|ℓ_j(0)|, the Lagrange weights at zero; multiplies sample noise.
    pub noise_gain: f64,
}

/// Polynomial extrapolation of `samples` to `x = 0` (Neville's scheme).
pub fn richardson_extrapolate(samples: &[(f64, f64)]) -> Result<f64> {
    richardson_table(samples).map(|e| e.value)
}

/// Like [`richardson_extrapolate`] but also reports the diagonal difference.
pub fn richardson_table(samples: &[(f64, f64)]) -> Result<Extrapolation> {
    let n = samples.len();
    if n < 2 {
        return Err(Error::TooFewSamples(n));
    }
    for (i, (xi, yi)) in samples.iter().enumerate() {
        if !xi.is_finite() || !yi.is_finite() {
            return Err(Error::NonFinite { at: *xi, value: *yi });
        }
        if samples[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DuplicateAbscissa(*xi));
        }
    }

    // p[i] holds the interpolant through samples i..=i+j evaluated at 0.
    let mut p: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let mut previous_top = p[0];
    let mut top = p[0];
    for j in 1..n {
        for i in 0..n - j {
            let (xi, xk) = (samples[i].0, samples[i + j].0);
            p[i] = (xk * p[i] - xi * p[i + 1]) / (xk - xi);
        }
        previous_top = top;
        top = p[0];
    }

    let noise_gain = (0..n)
        .map(|j| {
            let xj = samples[j].0;
            samples
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != j)
                .map(|(_, (xi, _))| xi / (xi - xj))
                .product::<f64>()
                .abs()
        })
        .sum();

    Ok(Extrapolation {
        value: top,
        error_estimate: (top - previous_top).abs(),
        noise_gain,
    })
}
