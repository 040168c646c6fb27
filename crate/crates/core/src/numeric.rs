//! Exact scalars: quarter-denominator rationals, Gaussian integers and binomial
//! coefficients. Nothing in here rounds.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A rational number whose reduced denominator divides 4.
///
/// Stored as a count of quarters, so `numer()/denom()` is always in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational4 {
    quarters: i64,
}

impl Rational4 {
    pub const ZERO: Rational4 = Rational4 { quarters: 0 };
    pub const HALF: Rational4 = Rational4 { quarters: 2 };
    pub const QUARTER: Rational4 = Rational4 { quarters: 1 };

    pub const fn from_quarters(quarters: i64) -> Self {
        Rational4 { quarters }
    }

    pub const fn from_integer(n: i64) -> Self {
        Rational4 { quarters: 4 * n }
    }

    /// Builds `numer/denom`, rejecting values whose reduced denominator does not divide 4.
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ParseRational(format!("{numer}/{denom}")));
        }
        let g = numer.gcd(&denom);
        let (mut n, mut d) = (numer / g, denom / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if 4 % d != 0 {
            return Err(Error::UnsupportedDenominator(format!("{numer}/{denom}")));
        }
        Ok(Rational4 {
            quarters: n * (4 / d),
        })
    }

    pub fn quarters(self) -> i64 {
        self.quarters
    }

    pub fn numer(self) -> i64 {
        self.quarters / (4 / self.denom())
    }

    pub fn denom(self) -> i64 {
        if self.quarters % 4 == 0 {
            1
        } else if self.quarters % 2 == 0 {
            2
        } else {
            4
        }
    }

    /// Representative in `[0, 1)`.
    pub fn reduce_mod1(self) -> Self {
        Rational4 {
            quarters: self.quarters.rem_euclid(4),
        }
    }

    pub fn is_integer(self) -> bool {
        self.quarters % 4 == 0
    }

    /// True when the value lies in ½ℤ.
    pub fn is_half_integer(self) -> bool {
        self.quarters % 2 == 0
    }

    pub fn scale(self, k: i64) -> Self {
        Rational4 {
            quarters: self.quarters * k,
        }
    }
}

impl Add for Rational4 {
    type Output = Rational4;
    fn add(self, rhs: Self) -> Self {
        Rational4 {
            quarters: self.quarters + rhs.quarters,
        }
    }
}

impl Sub for Rational4 {
    type Output = Rational4;
    fn sub(self, rhs: Self) -> Self {
        Rational4 {
            quarters: self.quarters - rhs.quarters,
        }
    }
}

impl Neg for Rational4 {
    type Output = Rational4;
    fn neg(self) -> Self {
        Rational4 {
            quarters: -self.quarters,
        }
    }
}

impl fmt::Display for Rational4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.denom() {
            1 => write!(f, "{}", self.numer()),
            d => write!(f, "{}/{}", self.numer(), d),
        }
    }
}

impl FromStr for Rational4 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::ParseRational(s.to_string()))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational4::new(parse(n)?, parse(d)?),
            None => Ok(Rational4::from_integer(parse(s)?)),
        }
    }
}

impl Serialize for Rational4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational4 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(n) => Ok(Rational4::from_integer(n)),
            Repr::Text(s) => s.parse().map_err(de::Error::custom),
        }
    }
}

/// An exact Gaussian integer `re + im·i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        GaussianInt {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianInt::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl Zero for GaussianInt {
    fn zero() -> Self {
        GaussianInt::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianInt {
    fn one() -> Self {
        GaussianInt::new(1, 0)
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: Self) -> Self {
        GaussianInt {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl AddAssign<&GaussianInt> for GaussianInt {
    fn add_assign(&mut self, rhs: &GaussianInt) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> Self {
        GaussianInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl<'a> Mul<&'a GaussianInt> for &'a GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.sign() == num_bigint::Sign::Minus {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Serialize for GaussianInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GaussianInt", 2)?;
        st.serialize_field("re", &json_int(&self.re))?;
        st.serialize_field("im", &json_int(&self.im))?;
        st.end()
    }
}

/// JSON rendering of an exact integer: a number when it fits in `i64`, a
/// decimal string otherwise.
pub fn json_int(value: &BigInt) -> serde_json::Value {
    match value.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(value.to_string()),
    }
}

pub fn json_uint(value: &BigUint) -> serde_json::Value {
    match value.to_u64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(value.to_string()),
    }
}

/// Exact `C(n, k)`; zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `e^{-2πi q/4}` as a Gaussian integer.
pub fn quarter_root_power(q: i64) -> GaussianInt {
    match q.rem_euclid(4) {
        0 => GaussianInt::new(1, 0),
        1 => GaussianInt::new(0, -1),
        2 => GaussianInt::new(-1, 0),
        _ => GaussianInt::new(0, 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_small_cases() {
        assert_eq!(binomial(3, 2), BigUint::from(3u32));
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(5, -1), BigUint::zero());
        assert_eq!(binomial(5, 6), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn binomial_is_arbitrary_precision() {
        // C(200, 100) has 59 decimal digits.
        let c = binomial(200, 100);
        assert_eq!(
            c.to_string(),
            "90548514656103281165404177077484163874504589675413336841320"
        );
    }

    #[test]
    fn quarter_roots() {
        assert_eq!(quarter_root_power(0), GaussianInt::new(1, 0));
        assert_eq!(quarter_root_power(2), GaussianInt::new(-1, 0));
        assert_eq!(quarter_root_power(1), GaussianInt::new(0, -1));
        assert_eq!(quarter_root_power(3), GaussianInt::new(0, 1));
        assert_eq!(quarter_root_power(-1), GaussianInt::new(0, 1));
    }

    #[test]
    fn rational_parsing_and_display() {
        assert_eq!("1/2".parse::<Rational4>().unwrap(), Rational4::HALF);
        assert_eq!("2/4".parse::<Rational4>().unwrap(), Rational4::HALF);
        assert_eq!("-3/4".parse::<Rational4>().unwrap().to_string(), "-3/4");
        assert_eq!("6/4".parse::<Rational4>().unwrap().to_string(), "3/2");
        assert_eq!("0".parse::<Rational4>().unwrap(), Rational4::ZERO);
        assert_eq!("2/6".parse::<Rational4>().unwrap_err().to_string(),
            "unsupported rational \"2/6\": denominators must divide 4");
        assert!(matches!(
            "1/3".parse::<Rational4>(),
            Err(Error::UnsupportedDenominator(_))
        ));
        assert!(matches!("x".parse::<Rational4>(), Err(Error::ParseRational(_))));
        assert!(matches!("1/0".parse::<Rational4>(), Err(Error::ParseRational(_))));
    }

    #[test]
    fn rational_serde() {
        let v: Vec<Rational4> = serde_json::from_str(r#"["1/2", 0, "3/4", 1]"#).unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"["1/2","0","3/4","1"]"#
        );
        assert!(serde_json::from_str::<Rational4>(r#""1/5""#).is_err());
    }

    #[test]
    fn rational_reduction_mod1() {
        assert_eq!(Rational4::from_quarters(-1).reduce_mod1(), Rational4::from_quarters(3));
        assert_eq!(Rational4::from_quarters(4).reduce_mod1(), Rational4::ZERO);
        assert!(Rational4::HALF.is_half_integer());
        assert!(!Rational4::QUARTER.is_half_integer());
    }

    #[test]
    fn gaussian_json() {
        let z = GaussianInt::new(-8, 0);
        assert_eq!(serde_json::to_string(&z).unwrap(), r#"{"re":-8,"im":0}"#);
        assert_eq!(GaussianInt::new(2, -3).to_string(), "2-3i");
    }

    proptest! {
        #[test]
        fn quarter_root_is_a_character(a in -1000i64..1000, b in -1000i64..1000) {
            prop_assert_eq!(
                &quarter_root_power(a) * &quarter_root_power(b),
                quarter_root_power(a + b)
            );
            prop_assert_eq!(quarter_root_power(a).pow(4), GaussianInt::one());
        }

        #[test]
        fn pascal_rule(n in 2u64..120, k in 1i64..119) {
            prop_assume!((k as u64) < n);
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}
