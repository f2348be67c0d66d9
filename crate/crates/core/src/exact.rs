//! Exact integers and rationals.
//!
//! Every statistic in this crate is carried as a [`Rational`] over
//! arbitrary-precision integers so identities are checked as equalities.
//! Floating point only shows up when a value is formatted for people.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Returns `2^n` exactly.
pub fn pow2(n: u32) -> BigInt {
    BigInt::one() << n
}

/// `(-1)^n` as a small signed integer.
pub fn neg_one_pow(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// An always-reduced fraction with a positive denominator.
///
/// Equality is structural on the reduced form, so `rat(2, 4) == rat(1, 2)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

/// Builds `num/den`, reducing and moving the sign onto the numerator.
pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    Rational::new(num.into(), den.into())
}

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self(BigRational::new(num, den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    /// Exact division; fails on a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    /// Lossy conversion for display only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    /// Always `num/den`, including integers (`1/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Rational::new(n, d)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Panics on a zero divisor, like integer division; use
/// [`Rational::checked_div`] when the divisor is not known to be nonzero.
impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.checked_div(&rhs).expect("division by zero rational")
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero rational")
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

/// Serializes a big integer as a JSON number when it fits in 64 bits and as
/// a decimal string otherwise.
pub(crate) mod bigint_json {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match n.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.collect_str(n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        rat(n, d).unwrap()
    }

    #[test]
    fn construction_reduces_and_normalizes_sign() {
        assert_eq!(r(6, 36).to_string(), "1/6");
        assert_eq!(r(3, -4).to_string(), "-3/4");
        assert_eq!(r(0, 7).to_string(), "0/1");
        assert_eq!(r(-2, -8).to_string(), "1/4");
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(matches!(rat(1, 0), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(r(3, 4) + r(1, 12), r(5, 6));
        // c/4 + 1/12 + eps(3) for c = 3
        assert_eq!(r(5, 6) + r(1, 6), r(1, 1));
        assert_eq!(r(1, 2) * r(1, 3), r(1, 6));
        assert_eq!(r(1, 2) - r(3, 4), r(-1, 4));
        assert_eq!(r(1, 2) / r(1, 4), r(2, 1));
        assert!(matches!(r(1, 2).checked_div(&Rational::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(pow2(0), BigInt::from(1));
        assert_eq!(pow2(10), BigInt::from(1024));
        assert_eq!(pow2(61), BigInt::from(2305843009213693952u64));
        assert_eq!(pow2(100).to_string(), "1267650600228229401496703205376");
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/2".parse::<Rational>().unwrap(), r(3, 2));
        assert_eq!("-5".parse::<Rational>().unwrap(), r(-5, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
        let json = serde_json::to_string(&r(-3, 4)).unwrap();
        assert_eq!(json, "\"-3/4\"");
        assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), r(-3, 4));
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..50).prop_map(|(n, d)| r(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small(), b in small(), c in small()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &(-a.clone()), Rational::zero());
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
            }
        }

        #[test]
        fn reduction_is_idempotent(p in -200i64..200, q in 1i64..200, k in 1i64..40, neg in any::<bool>()) {
            let k = if neg { -k } else { k };
            prop_assert_eq!(r(k * p, k * q), r(p, q));
            let x = r(p, q);
            prop_assert!(x.denom() > &BigInt::zero());
            prop_assert_eq!(num_integer::Integer::gcd(x.numer(), x.denom()), BigInt::one());
        }
    }
}
