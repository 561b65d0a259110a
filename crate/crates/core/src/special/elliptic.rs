//! Complete elliptic integrals by the arithmetic–geometric mean, and the
//! inversion from a period ratio `K'/K` to the modulus through theta series.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

const AGM_MAX_ITER: usize = 64;

/// Complete elliptic integrals at a modulus and at its complement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EllipticPair {
    /// k
    pub modulus: f64,
    /// k' = √(1 − k²)
    pub complementary_modulus: f64,
    /// K(k)
    pub k_first: f64,
    /// E(k)
    pub e_second: f64,
    /// K'(k) = K(k')
    pub k_first_complementary: f64,
    /// E'(k) = E(k')
    pub e_second_complementary: f64,
    /// q = exp(−π K'/K)
    pub nome: f64,
}

impl EllipticPair {
    /// `K'/K`.
    pub fn period_ratio(&self) -> f64 {
        self.k_first_complementary / self.k_first
    }

    /// `E K' + E' K − K K'`, which equals π/2.
    pub fn legendre_relation(&self) -> f64 {
        self.e_second * self.k_first_complementary + self.e_second_complementary * self.k_first
            - self.k_first * self.k_first_complementary
    }
}

/// Arithmetic–geometric mean of two positive numbers.
pub fn agm(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) || !x.is_finite() || !y.is_finite() {
        return Err(Error::Domain(format!("agm needs positive finite arguments, got ({x}, {y})")));
    }
    let (mut a, mut b) = (x, y);
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= 1e-15 * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    Ok(0.5 * (a + b))
}

/// `(K, E)` for modulus `k` with complement `kp`, by the AGM with the
/// difference terms `c_n` accumulated for E.
fn complete_integrals(k: f64, kp: f64) -> (f64, f64) {
    let (mut a, mut b) = (1.0f64, kp);
    let mut c = k;
    let mut weight = 0.5;
    let mut sum = weight * c * c;
    for _ in 0..AGM_MAX_ITER {
        let c_next = 0.5 * (a - b);
        if c_next.abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        c = c_next;
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
        weight *= 2.0;
        sum += weight * c * c;
    }
    let big_k = PI / (2.0 * a);
    (big_k, big_k * (1.0 - sum))
}

fn pair_from_moduli(k: f64, kp: f64) -> EllipticPair {
    let (big_k, big_e) = complete_integrals(k, kp);
    let (big_kp, big_ep) = complete_integrals(kp, k);
    EllipticPair {
        modulus: k,
        complementary_modulus: kp,
        k_first: big_k,
        e_second: big_e,
        k_first_complementary: big_kp,
        e_second_complementary: big_ep,
        nome: (-PI * big_kp / big_k).exp(),
    }
}

/// `K`, `E`, `K'`, `E'` and the nome for a modulus `0 < k < 1`.
pub fn elliptic_from_modulus(k: f64) -> Result<EllipticPair> {
    if !(k > 0.0 && k < 1.0) {
        return Err(Error::Domain(format!("modulus must lie in (0, 1), got {k}")));
    }
    let kp = ((1.0 - k) * (1.0 + k)).sqrt();
    Ok(pair_from_moduli(k, kp))
}

/// Theta series at nome `exp(−π·ratio)`: returns `(θ₂, θ₃, θ₄)`.
fn thetas(ratio: f64) -> (f64, f64, f64) {
    let mut t2 = 0.0;
    let mut t3 = 1.0;
    let mut t4 = 1.0;
    for n in 0.. {
        let half = (-PI * ratio * (n as f64 + 0.5).powi(2)).exp();
        t2 += 2.0 * half;
        let whole = if n >= 1 { (-PI * ratio * (n as f64).powi(2)).exp() } else { 0.0 };
        t3 += 2.0 * whole;
        t4 += if n % 2 == 1 { -2.0 * whole } else { 2.0 * whole };
        if n >= 1 && half < 1e-17 * t2 && whole < 1e-17 {
            break;
        }
    }
    (t2, t3, t4)
}

/// Modulus `k` with `K'(k)/K(k) = ratio`, via `k = (θ₂/θ₃)²`, `k' = (θ₄/θ₃)²`
/// at nome `q = e^{−π·ratio}`.
pub fn modulus_from_ratio(ratio: f64) -> Result<EllipticPair> {
    if !(0.1..=10.0).contains(&ratio) {
        return Err(Error::Domain(format!(
            "period ratio must lie in [0.1, 10] for double-precision theta series, got {ratio}"
        )));
    }
    let (t2, t3, t4) = thetas(ratio);
    let k = (t2 / t3).powi(2);
    let kp = (t4 / t3).powi(2);
    Ok(pair_from_moduli(k, kp))
}
