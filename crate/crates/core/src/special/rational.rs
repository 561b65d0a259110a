use std::fmt;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational with 128-bit numerator and denominator, always reduced and
/// with a positive denominator. Arithmetic is checked: overflow is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    pub fn new(numer: i128, denom: i128) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        if numer == i128::MIN || denom == i128::MIN {
            return Err(Error::Overflow("rational normalisation".into()));
        }
        Ok(Rational(Ratio::new(numer, denom)))
    }

    pub fn integer(n: i128) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn abs(&self) -> Self {
        Rational(num_traits::Signed::abs(&self.0))
    }

    pub fn neg(&self) -> Self {
        Rational(-self.0)
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    pub fn add(&self, other: &Rational) -> Result<Rational> {
        self.0
            .checked_add(&other.0)
            .map(Rational)
            .ok_or_else(|| Error::Overflow(format!("{self} + {other}")))
    }

    pub fn sub(&self, other: &Rational) -> Result<Rational> {
        self.0
            .checked_sub(&other.0)
            .map(Rational)
            .ok_or_else(|| Error::Overflow(format!("{self} - {other}")))
    }

    pub fn mul(&self, other: &Rational) -> Result<Rational> {
        self.0
            .checked_mul(&other.0)
            .map(Rational)
            .ok_or_else(|| Error::Overflow(format!("{self} * {other}")))
    }

    pub fn div(&self, other: &Rational) -> Result<Rational> {
        if other.is_zero() {
            return Err(Error::Domain(format!("{self} / 0")));
        }
        self.0
            .checked_div(&other.0)
            .map(Rational)
            .ok_or_else(|| Error::Overflow(format!("{self} / {other}")))
    }

    pub fn mul_int(&self, n: i128) -> Result<Rational> {
        self.mul(&Rational::integer(n))
    }

    pub fn div_int(&self, n: i128) -> Result<Rational> {
        self.div(&Rational::integer(n))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalises_sign_and_gcd() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!((r.numer(), r.denom()), (-3, 2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::new(4, 2).unwrap().to_string(), "2");
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = Rational::integer(i128::MAX / 2 + 1);
        assert!(matches!(big.mul_int(2), Err(Error::Overflow(_))));
        assert!(matches!(big.add(&big), Err(Error::Overflow(_))));
    }

    #[test]
    fn division_by_zero() {
        assert!(Rational::ONE.div(&Rational::ZERO).is_err());
    }

    proptest! {
        #[test]
        fn results_are_reduced(a in -10_000i128..10_000, b in 1i128..10_000,
                               c in -10_000i128..10_000, d in 1i128..10_000) {
            let x = Rational::new(a, b).unwrap();
            let y = Rational::new(c, d).unwrap();
            for r in [x.add(&y).unwrap(), x.sub(&y).unwrap(), x.mul(&y).unwrap()] {
                prop_assert!(r.denom() > 0);
                prop_assert_eq!(num_integer_gcd(r.numer().abs(), r.denom()), 1);
            }
            let sum = x.add(&y).unwrap().to_f64();
            prop_assert!((sum - (a as f64 / b as f64 + c as f64 / d as f64)).abs() < 1e-9);
        }
    }

    fn num_integer_gcd(mut a: i128, mut b: i128) -> i128 {
        if a == 0 {
            return b;
        }
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
}
