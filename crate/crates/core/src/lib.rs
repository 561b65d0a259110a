//! Lattice sums weighted by `sech`/`csch`, their Poisson-dual exponential
//! sums, and a catalog of closed-form identities built on them.
//!
//! The crate is organised bottom-up:
//!
//! - [`numerics`]: compensated series summation with tail bounds, quadrature
//!   for exponentially decaying integrands, polynomial extrapolation to zero.
//! - [`special`]: exact Bernoulli / Q / η / Eulerian tables, elliptic
//!   integrals via the AGM, ζ, Catalan's constant, Li₃, Li₋ₙ and Lerch Φ.
//! - [`transforms`]: function descriptors and the integral/series dual pairs
//!   and lattice-sum transforms acting on them.
//! - [`catalog`]: the identity registry, verification and discrepancy ledger.

pub mod catalog;
pub mod error;
pub mod numerics;
pub mod special;
pub mod transforms;

pub use error::{Error, Result};
pub use numerics::{QuadratureResult, SeriesResult, SumOptions};
pub use special::{EllipticPair, Rational};
pub use catalog::{
    Expected, IdentityRecord, Ledger, LedgerRecord, Params, Status, Tolerances, Variant, VariantKind,
    VerificationOutcome,
};
pub use transforms::{FunctionDescriptor, Parity, TransformParams, TransformReport};
