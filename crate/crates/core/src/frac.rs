//! Exact rational numbers.
//!
//! [`Frac`] wraps an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. It serializes as `"p/q"`, or `"p"` when `q = 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Failure to parse a [`Frac`] from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid fraction literal `{0}`")]
pub struct ParseFracError(pub String);

/// An exact rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Frac(BigRational);

impl Frac {
    /// `num / den`; panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Frac(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The integer `n` as a fraction.
    pub fn int(n: i64) -> Self {
        Frac(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Frac(BigRational::zero())
    }

    pub fn one() -> Self {
        Frac(BigRational::one())
    }

    /// Builds from arbitrary-precision parts; panics when `den == 0`.
    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Frac(BigRational::new(num, den))
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// True when the value is an integer `>= 0`.
    pub fn is_nonneg_integer(&self) -> bool {
        self.is_integer() && !self.is_negative()
    }

    pub fn abs(&self) -> Self {
        Frac(self.0.abs())
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Smallest integer not less than the value.
    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// `self - floor(self)`, in `[0, 1)`.
    pub fn fract_part(&self) -> Frac {
        Frac(&self.0 - self.0.floor())
    }

    /// The value as `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// `self * k` for an integer `k`.
    pub fn scale(&self, k: i64) -> Frac {
        Frac(&self.0 * BigRational::from_integer(BigInt::from(k)))
    }

    /// Integer value of `self * k` when it is integral and fits in `i64`.
    pub fn times_int(&self, k: i64) -> Option<i64> {
        self.scale(k).to_i64()
    }

    /// Residue of an integer value modulo `m > 0`, in `0..m`.
    pub fn int_mod(&self, m: i64) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        let r = self.0.numer().mod_floor(&BigInt::from(m));
        r.to_i64()
    }
}

impl From<i64> for Frac {
    fn from(n: i64) -> Self {
        Frac::int(n)
    }
}

impl From<BigInt> for Frac {
    fn from(n: BigInt) -> Self {
        Frac(BigRational::from_integer(n))
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Frac {
    type Err = ParseFracError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().replace('\u{2212}', "-");
        let err = || ParseFracError(s.to_string());
        match t.split_once('/') {
            None => t.parse::<BigInt>().map(Frac::from).map_err(|_| err()),
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| err())?;
                let q: BigInt = q.trim().parse().map_err(|_| err())?;
                if q.is_zero() {
                    return Err(err());
                }
                Ok(Frac::from_big(p, q))
            }
        }
    }
}

impl Serialize for Frac {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Frac {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<Frac> for Frac {
            type Output = Frac;
            fn $m(self, o: Frac) -> Frac {
                Frac(self.0 $op o.0)
            }
        }
        impl<'a> $tr<&'a Frac> for Frac {
            type Output = Frac;
            fn $m(self, o: &'a Frac) -> Frac {
                Frac(self.0 $op &o.0)
            }
        }
        impl<'a> $tr<Frac> for &'a Frac {
            type Output = Frac;
            fn $m(self, o: Frac) -> Frac {
                Frac(&self.0 $op o.0)
            }
        }
        impl<'a, 'b> $tr<&'b Frac> for &'a Frac {
            type Output = Frac;
            fn $m(self, o: &'b Frac) -> Frac {
                Frac(&self.0 $op &o.0)
            }
        }
        impl $tr<i64> for Frac {
            type Output = Frac;
            fn $m(self, o: i64) -> Frac {
                Frac(self.0 $op BigRational::from_integer(BigInt::from(o)))
            }
        }
        impl<'a> $tr<i64> for &'a Frac {
            type Output = Frac;
            fn $m(self, o: i64) -> Frac {
                Frac(&self.0 $op BigRational::from_integer(BigInt::from(o)))
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl AddAssign<&Frac> for Frac {
    fn add_assign(&mut self, o: &Frac) {
        self.0 += &o.0;
    }
}

impl AddAssign<Frac> for Frac {
    fn add_assign(&mut self, o: Frac) {
        self.0 += o.0;
    }
}

impl SubAssign<&Frac> for Frac {
    fn sub_assign(&mut self, o: &Frac) {
        self.0 -= &o.0;
    }
}

impl SubAssign<Frac> for Frac {
    fn sub_assign(&mut self, o: Frac) {
        self.0 -= o.0;
    }
}

impl MulAssign<&Frac> for Frac {
    fn mul_assign(&mut self, o: &Frac) {
        self.0 *= &o.0;
    }
}

impl Neg for Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac(-self.0)
    }
}

impl Neg for &Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac(-&self.0)
    }
}

impl PartialEq<i64> for Frac {
    fn eq(&self, o: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*o))
    }
}

impl PartialOrd<i64> for Frac {
    fn partial_cmp(&self, o: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*o)))
    }
}

impl std::iter::Sum for Frac {
    fn sum<I: Iterator<Item = Frac>>(it: I) -> Frac {
        it.fold(Frac::zero(), |a, b| a + b)
    }
}

impl<'a> std::iter::Sum<&'a Frac> for Frac {
    fn sum<I: Iterator<Item = &'a Frac>>(it: I) -> Frac {
        it.fold(Frac::zero(), |a, b| a + b)
    }
}

/// Shorthand for [`Frac::new`].
pub fn q(num: i64, den: i64) -> Frac {
    Frac::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let f = q(6, -4);
        assert_eq!(f.to_string(), "-3/2");
        assert_eq!(f.denom(), &BigInt::from(2));
        assert_eq!(q(4, 2), Frac::int(2));
        assert_eq!(q(4, 2).to_string(), "2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-1", "5/2", "-3/2", "16/3", "123456789012345678901234567891/7"] {
            let f: Frac = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert_eq!("2/4".parse::<Frac>().unwrap(), q(1, 2));
        assert_eq!("\u{2212}1/3".parse::<Frac>().unwrap(), q(-1, 3));
        assert!("1/0".parse::<Frac>().is_err());
        assert!("x".parse::<Frac>().is_err());
    }

    #[test]
    fn serde_is_string() {
        let v = vec![q(1, 2), Frac::int(3)];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["1/2","3"]"#);
        let back: Vec<Frac> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn floor_fract_mod() {
        assert_eq!(q(-1, 3).floor(), BigInt::from(-1));
        assert_eq!(q(-1, 3).fract_part(), q(2, 3));
        assert_eq!(q(7, 3).fract_part(), q(1, 3));
        assert_eq!(Frac::int(-4).int_mod(3), Some(2));
        assert_eq!(q(1, 2).int_mod(3), None);
        assert_eq!(q(4, 3).times_int(3), Some(4));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(1, 2) * 4, Frac::int(2));
        assert_eq!(&q(3, 4) - &q(1, 4), q(1, 2));
        assert!(q(1, 3) < q(1, 2));
        assert!(q(5, 2) > 2);
    }
}
