use super::eulerian_row;
use crate::error::{Error, Result};
use crate::numerics::{integrate_decaying, CompensatedSum, SumOptions};

/// Catalan's constant to 30 significant digits.
pub const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932;

/// Number of terms used by [`alternating_accelerated`] inside this module;
/// the error factor is (3+√8)^−40 ≈ 3e-31.
const ACCEL_TERMS: usize = 40;

/// `Σ_{k≥0} (−1)^k a(k)` by the Cohen–Rodriguez Villegas–Zagier acceleration.
///
/// Exact in the limit for moment sequences `a(k) = ∫₀¹ t^k dμ(t)` with
/// positive μ; the relative error after `n` terms is about `2·(3+√8)^{−n}`.
pub fn alternating_accelerated<F: Fn(usize) -> f64>(a: F, n: usize) -> f64 {
    let nf = n as f64;
    let d = (3.0 + 8f64.sqrt()).powi(n as i32);
    let d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = CompensatedSum::new();
    for k in 0..n {
        let kf = k as f64;
        c = b - c;
        s.add(c * a(k));
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    s.value() / d
}

/// Riemann ζ at an integer `s ≥ 2`, via η(s) = (1 − 2^{1−s}) ζ(s).
pub fn zeta_int(s: u32) -> Result<f64> {
    if s < 2 {
        return Err(Error::Domain(format!("zeta_int needs s ≥ 2, got {s}")));
    }
    let eta = alternating_accelerated(|k| ((k + 1) as f64).powi(-(s as i32)), ACCEL_TERMS);
    Ok(eta / (1.0 - 2f64.powi(1 - s as i32)))
}

/// Catalan's constant `G = Σ (−1)^k / (2k+1)²`, by accelerated summation.
pub fn catalan() -> f64 {
    alternating_accelerated(|k| 1.0 / ((2 * k + 1) as f64).powi(2), ACCEL_TERMS)
}

/// Trilogarithm `Σ_{k≥1} x^k/k³` on `−1 ≤ x ≤ 0`.
pub fn li3(x: f64) -> Result<f64> {
    if !(-1.0..=0.0).contains(&x) {
        return Err(Error::Domain(format!("li3 is implemented on [−1, 0], got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    // |x|^{k+1}/(k+1)³ is a moment sequence, so the accelerated alternating
    // sum applies with full effect even at x = −1.
    let y = -x;
    Ok(-alternating_accelerated(|k| y.powi(k as i32 + 1) / ((k + 1) as f64).powi(3), ACCEL_TERMS))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let z = s - a;
    (s, (a - (s - z)) + (b - z))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Horner evaluation with error-free transformations; `coeffs` are in
/// ascending order of degree.
fn compensated_horner(coeffs: &[f64], x: f64) -> f64 {
    let mut iter = coeffs.iter().rev();
    let mut s = match iter.next() {
        Some(&c) => c,
        None => return 0.0,
    };
    let mut c = 0.0;
    for &a in iter {
        let (p, pi) = two_prod(s, x);
        let (t, sigma) = two_sum(p, a);
        s = t;
        c = c * x + (pi + sigma);
    }
    s + c
}

/// Polylogarithm of negative order, `Li_{−n}(x) = Σ_k A(n,k) x^{k+1} / (1−x)^{n+1}`.
///
/// For `|x| < 1` this equals `Σ_{k≥1} k^n x^k`; elsewhere it is the rational
/// continuation of that series.
pub fn li_negative_order(n: usize, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("li_negative_order needs n ≥ 1".into()));
    }
    if !x.is_finite() || (1.0 - x).abs() < 1e-8 {
        return Err(Error::Domain(format!("Li_−{n}(x) has a pole at x = 1, got x = {x}")));
    }
    let coeffs: Vec<f64> = eulerian_row(n)?.iter().map(|&a| a as f64).collect();
    let numerator = x * compensated_horner(&coeffs, x);
    Ok(numerator / (1.0 - x).powi(n as i32 + 1))
}

/// Lerch transcendent `Φ(z, s, a) = Σ_{k≥0} z^k/(a+k)^s` for `z < 1`, continued
/// to `z ≤ −1` through
/// `Φ(z,s,a) = (1/Γ(s)) ∫₀^∞ t^{s−1} e^{−at} / (1 − z e^{−t}) dt`.
pub fn lerch_phi(z: f64, s: u32, a: f64) -> Result<f64> {
    if !(z < 1.0) || !z.is_finite() {
        return Err(Error::Domain(format!("lerch_phi needs z < 1, got {z}")));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain(format!("lerch_phi needs a > 0, got {a}")));
    }
    if s < 1 {
        return Err(Error::Domain("lerch_phi needs s ≥ 1".into()));
    }
    let gamma: f64 = (1..s).map(|i| i as f64).product();
    let power = s as i32 - 1;
    let integrand = |t: f64| {
        let e = (-t).exp();
        t.powi(power) * (-a * t).exp() / (1.0 - z * e)
    };
    let opts = SumOptions {
        abs_tol: 1e-16 * gamma * a.powi(-(s as i32)).min(1.0),
        rel_tol: 1e-14,
        ..SumOptions::default()
    };
    let r = integrate_decaying(integrand, a, &opts)?;
    Ok(r.value / gamma)
}

/// `Li₂(x) = x·Φ(x, 2, 1)` for `x < 1`.
#[cfg(test)]
fn li2(x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(x * lerch_phi(x, 2, 1.0)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;
    use crate::numerics::{sum_alternating, sum_series};

    #[test]
    fn acceleration_on_log2() {
        let v = alternating_accelerated(|k| 1.0 / (k + 1) as f64, 40);
        assert!((v - std::f64::consts::LN_2).abs() < 1e-15);
    }

    /// Brute-force partial sum plus Euler–Maclaurin tail.
    fn zeta_oracle(s: i32) -> f64 {
        let n = 1000usize;
        let head: CompensatedSum = (1..=n).rev().map(|k| (k as f64).powi(-s)).collect();
        let nf = n as f64;
        let sf = s as f64;
        head.value() + nf.powf(1.0 - sf) / (sf - 1.0) - 0.5 * nf.powi(-s)
            + sf / 12.0 * nf.powi(-s - 1)
    }

    #[test]
    fn zeta_values() {
        assert!((zeta_int(2).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((zeta_int(3).unwrap() - 1.202_056_903_159_594_3).abs() < 1e-15);
        assert!((zeta_int(5).unwrap() - 1.036_927_755_143_369_9).abs() < 1e-15);
        for s in 2..=12 {
            assert!((zeta_int(s).unwrap() - zeta_oracle(s as i32)).abs() < 1e-13, "s={s}");
        }
        assert!(zeta_int(1).is_err());
    }

    #[test]
    fn catalan_constant() {
        assert!((catalan() - CATALAN).abs() < 1e-15);
        // Defining partial sums bracket G within the first omitted term.
        let n = 10_000usize;
        let partial: CompensatedSum = (0..=n)
            .map(|k| {
                let s = if k % 2 == 0 { 1.0 } else { -1.0 };
                s / ((2 * k + 1) as f64).powi(2)
            })
            .collect();
        let first_omitted = 1.0 / ((2 * n + 3) as f64).powi(2);
        assert!((partial.value() - catalan()).abs() <= first_omitted);
    }

    #[test]
    fn trilogarithm() {
        assert_eq!(li3(0.0).unwrap(), 0.0);
        let z3 = zeta_int(3).unwrap();
        assert!((li3(-1.0).unwrap() + 0.75 * z3).abs() < 1e-15);
        assert!((li3(-1.0).unwrap() + 0.901_542_677_369_695_7).abs() < 1e-15);
        let x = -(-1.0f64).exp();
        let brute: CompensatedSum = (1..=40).map(|k| x.powi(k) / (k as f64).powi(3)).collect();
        assert!((li3(x).unwrap() - brute.value()).abs() < 1e-15);
        assert!((li3(x).unwrap() + 0.352_564_879_297_807_76).abs() < 1e-15);
        for &x in &[-0.9f64, -0.5, -0.1] {
            let tight = SumOptions::with_tolerances(1e-18, 1e-16);
            let direct = sum_alternating(1, |k| x.abs().powi(k as i32) / (k as f64).powi(3), &tight)
                .unwrap();
            assert!((li3(x).unwrap() + direct.value).abs() < 1e-13);
        }
        assert!(li3(0.5).is_err());
        assert!(li3(-1.5).is_err());
    }

    #[test]
    fn negative_order_polylog() {
        assert!((li_negative_order(1, 0.5).unwrap() - 2.0).abs() < 1e-15);
        assert!((li_negative_order(5, -1.0).unwrap() + 0.25).abs() < 1e-15);
        let brute: CompensatedSum = (1..=40).map(|k| (k as f64).powi(5) * 0.1f64.powi(k)).collect();
        assert!((li_negative_order(5, 0.1).unwrap() - brute.value()).abs() < 1e-14);
        for n in 1..=9 {
            for &x in &[-0.7f64, 0.3, 0.6] {
                let tight = SumOptions::with_tolerances(1e-18, 1e-16);
                let direct = sum_series(1, |k| (k as f64).powi(n as i32) * x.powi(k as i32), &tight)
                    .unwrap();
                let v = li_negative_order(n, x).unwrap();
                assert!((v - direct.value).abs() < 1e-13 * direct.abs_sum, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn negative_order_inversion() {
        for &n in &[1usize, 3, 5, 9] {
            for &x in &[-PI.exp(), -2.0, -0.5] {
                let direct = li_negative_order(n, x).unwrap();
                let inverted = li_negative_order(n, 1.0 / x).unwrap();
                let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                let rel = (inverted - sign * direct).abs() / direct.abs();
                assert!(rel < 1e-12, "n={n} x={x} rel={rel}");
            }
        }
    }

    #[test]
    fn negative_order_pole() {
        assert!(li_negative_order(3, 1.0).is_err());
        assert!(li_negative_order(3, 1.0 + 1e-9).is_err());
        assert!(li_negative_order(0, 0.5).is_err());
    }

    #[test]
    fn lerch_special_values() {
        for &(s, a) in &[(1u32, 0.5), (2, 1.0), (3, 2.5)] {
            let v = lerch_phi(0.0, s, a).unwrap();
            let exact = a.powi(-(s as i32));
            assert!(((v - exact) / exact).abs() < 1e-13);
        }
        let ln2 = std::f64::consts::LN_2;
        let li2_half = PI * PI / 12.0 - ln2 * ln2 / 2.0;
        assert!((lerch_phi(0.5, 2, 1.0).unwrap() - 2.0 * li2_half).abs() < 1e-13);
        assert!((lerch_phi(-1.0, 2, 0.5).unwrap() - 4.0 * CATALAN).abs() < 1e-12);
        assert!((li2(0.5).unwrap() - li2_half).abs() < 1e-13);
    }

    #[test]
    fn lerch_matches_series_in_disc() {
        for &z in &[0.1f64, 0.5, 0.9] {
            for &(s, a) in &[(1u32, 0.5), (2, 0.5), (2, 1.0), (3, 1.5)] {
                let direct = sum_series(0, |k| z.powi(k as i32) / (a + k as f64).powi(s as i32), &SumOptions::default())
                    .unwrap();
                let v = lerch_phi(z, s, a).unwrap();
                assert!((v - direct.value).abs() < 1e-11, "z={z} s={s} a={a}: {v} vs {}", direct.value);
            }
        }
    }

    #[test]
    fn lerch_continuation_against_inversion() {
        // Li₃(−e^c) from the continuation versus the inversion formula
        // Li₃(−e^c) = Li₃(−e^{−c}) − (c³ + π²c)/6.
        for &c in &[0.25, 0.5, 1.0, 2.0] {
            let z = -(c as f64).exp();
            let continued = z * lerch_phi(z, 3, 1.0).unwrap();
            let inverted = li3(-(-c as f64).exp()).unwrap() - (c * c * c + PI * PI * c) / 6.0;
            assert!((continued - inverted).abs() < 1e-12, "c={c}");
        }
    }

    #[test]
    fn lerch_domain() {
        assert!(lerch_phi(1.0, 2, 1.0).is_err());
        assert!(lerch_phi(-1.0, 2, 0.0).is_err());
        assert!(lerch_phi(-1.0, 0, 1.0).is_err());
    }
}
