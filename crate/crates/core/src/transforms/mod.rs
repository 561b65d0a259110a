//! Function descriptors and the lattice-sum transforms acting on them.
//!
//! A descriptor carries a real-analytic function of definite parity through
//! two real maps: its values on the real axis, and the real function `r(y)`
//! with `f(iy) = r(y)` (even `f`) or `f(iy) = i·r(y)` (odd `f`). All
//! arithmetic stays real; the factor `i` of the odd case is absorbed into
//! the sign conventions of [`theorem2_sides`] and [`abel_constant`].

mod abel;
mod descriptor;
mod lemma;
mod theorem;

pub use abel::{
    abel_constant, abel_estimate, abel_integral, abel_ladder, AbelEstimate, AbelMethod,
    ABEL_LADDER,
};
pub use descriptor::{builtin, builtin_names, FunctionDescriptor, Growth, Parity};
pub use lemma::{lemma1_integral, lemma1_series, lemma2_integral, lemma2_series};
pub use theorem::{theorem1_sides, theorem2_sides, TransformParams, TransformReport};

/// `sech(x)` without overflow for large `|x|`.
#[inline]
pub(crate) fn sech(x: f64) -> f64 {
    let e = (-x.abs()).exp();
    2.0 * e / (1.0 + e * e)
}

/// `csch(x)` for `x > 0` without overflow.
#[inline]
pub(crate) fn csch(x: f64) -> f64 {
    let e = (-x).exp();
    -2.0 * e / (-2.0 * x).exp_m1()
}

/// `t / sinh(πt)`, continued by `1/π` at `t = 0`.
#[inline]
pub(crate) fn t_over_sinh_pi(t: f64) -> f64 {
    if t == 0.0 {
        std::f64::consts::FRAC_1_PI
    } else {
        t * csch(std::f64::consts::PI * t.abs()) * t.signum()
    }
}
