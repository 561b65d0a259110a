//! Special functions used by the identity catalog.
//!
//! Exact tables ([`bernoulli`], [`q_number`], [`eta_negative`], [`eulerian`])
//! are built once on first use and are read-only afterwards. Floating-point
//! functions target ~1e-13 absolute accuracy in `f64`.

mod elliptic;
mod numbers;
mod polylog;
mod rational;

pub use elliptic::{agm, elliptic_from_modulus, modulus_from_ratio, EllipticPair};
pub use numbers::{
    bernoulli, eta_negative, eulerian, eulerian_row, q_number, BERNOULLI_CAP, EULERIAN_CAP,
};
pub use polylog::{
    alternating_accelerated, catalan, lerch_phi, li3, li_negative_order, zeta_int, CATALAN,
};
pub use rational::Rational;
