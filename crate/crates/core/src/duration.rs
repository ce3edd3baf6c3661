//! Exact nonnegative rational durations.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonnegative exact rational number.
///
/// Subtraction that would go below zero panics; callers compare first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Duration(BigRational);

impl Duration {
    pub fn zero() -> Self {
        Duration(BigRational::zero())
    }

    pub fn one() -> Self {
        Duration(BigRational::one())
    }

    /// Wraps a rational, rejecting negative values.
    pub fn new(value: BigRational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeDuration(value.to_string()));
        }
        Ok(Duration(value))
    }

    pub fn from_integer(n: u64) -> Self {
        Duration(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`; panics when `denom == 0`.
    pub fn from_ratio(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "zero denominator");
        Duration(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// `self - rhs` if nonnegative.
    pub fn checked_sub(&self, rhs: &Duration) -> Option<Duration> {
        if rhs.0 > self.0 {
            None
        } else {
            Some(Duration(&self.0 - &rhs.0))
        }
    }

    /// `max(self - rhs, 0)`.
    pub fn saturating_sub(&self, rhs: &Duration) -> Duration {
        self.checked_sub(rhs).unwrap_or_else(Duration::zero)
    }

    pub fn min_of<'a>(&'a self, other: &'a Duration) -> &'a Duration {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact decimal text when the denominator has only factors 2 and 5,
    /// otherwise `p/q`.
    pub fn to_exact_string(&self) -> String {
        let numer = self.0.numer();
        let denom = self.0.denom();
        if denom.is_one() {
            return numer.to_string();
        }
        let mut rest = denom.clone();
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        let (mut twos, mut fives) = (0u32, 0u32);
        while rest.is_multiple_of(&two) {
            rest /= &two;
            twos += 1;
        }
        while rest.is_multiple_of(&five) {
            rest /= &five;
            fives += 1;
        }
        if !rest.is_one() {
            return format!("{}/{}", numer, denom);
        }
        let digits = twos.max(fives);
        let scaled = numer * BigInt::from(10).pow(digits) / denom;
        let text = scaled.to_string();
        let digits = digits as usize;
        let (int_part, frac_part) = if text.len() > digits {
            let (a, b) = text.split_at(text.len() - digits);
            (a.to_string(), b.to_string())
        } else {
            (
                "0".to_string(),
                format!("{:0>width$}", text, width = digits),
            )
        };
        let frac_part = frac_part.trim_end_matches('0');
        if frac_part.is_empty() {
            int_part
        } else {
            format!("{}.{}", int_part, frac_part)
        }
    }
}

/// Parses `"12"`, `"0.75"`, `".5"`, `"3/8"`; decimals are read exactly.
impl FromStr for Duration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            position: 0,
            message: format!("invalid duration `{}`", s),
        };
        if s.is_empty() {
            return Err(bad());
        }
        if s.starts_with('-') {
            return Err(Error::NegativeDuration(s.to_string()));
        }
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = parse_digits(p).ok_or_else(bad)?;
            let q: BigInt = parse_digits(q).ok_or_else(bad)?;
            if q.is_zero() {
                return Err(bad());
            }
            return Ok(Duration(BigRational::new(p, q)));
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((a, b)) => (a, b),
            None => (s, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let int_value = if int_part.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(int_part).ok_or_else(bad)?
        };
        let frac_value = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(frac_part).ok_or_else(bad)?
        };
        let scale = BigInt::from(10).pow(frac_part.len() as u32);
        Ok(Duration(BigRational::new(
            int_value * &scale + frac_value,
            scale,
        )))
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for Duration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exact_string())
    }
}

impl fmt::Debug for Duration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_exact_string())
    }
}

impl Serialize for Duration {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_exact_string())
    }
}

impl<'de> Deserialize<'de> for Duration {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for Duration {
    type Output = Duration;
    fn add(self, rhs: Duration) -> Duration {
        Duration(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Duration> for &'a Duration {
    type Output = Duration;
    fn add(self, rhs: &'a Duration) -> Duration {
        Duration(&self.0 + &rhs.0)
    }
}

impl<'a> Add<&'a Duration> for Duration {
    type Output = Duration;
    fn add(self, rhs: &'a Duration) -> Duration {
        Duration(self.0 + &rhs.0)
    }
}

impl AddAssign<&Duration> for Duration {
    fn add_assign(&mut self, rhs: &Duration) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Duration {
    fn add_assign(&mut self, rhs: Duration) {
        self.0 += rhs.0;
    }
}

impl Sub for Duration {
    type Output = Duration;
    fn sub(self, rhs: Duration) -> Duration {
        assert!(rhs.0 <= self.0, "negative duration: {} - {}", self, rhs);
        Duration(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a Duration> for &'a Duration {
    type Output = Duration;
    fn sub(self, rhs: &'a Duration) -> Duration {
        assert!(rhs.0 <= self.0, "negative duration: {} - {}", self, rhs);
        Duration(&self.0 - &rhs.0)
    }
}

impl<'a> Sub<&'a Duration> for Duration {
    type Output = Duration;
    fn sub(self, rhs: &'a Duration) -> Duration {
        assert!(rhs.0 <= self.0, "negative duration: {} - {}", self, rhs);
        Duration(self.0 - &rhs.0)
    }
}

impl SubAssign<&Duration> for Duration {
    fn sub_assign(&mut self, rhs: &Duration) {
        assert!(rhs.0 <= self.0, "negative duration: {} - {}", self, rhs);
        self.0 -= &rhs.0;
    }
}

impl<'a> Mul<&'a Duration> for &'a Duration {
    type Output = Duration;
    fn mul(self, rhs: &'a Duration) -> Duration {
        Duration(&self.0 * &rhs.0)
    }
}

impl Mul for Duration {
    type Output = Duration;
    fn mul(self, rhs: Duration) -> Duration {
        Duration(self.0 * rhs.0)
    }
}

impl Sum for Duration {
    fn sum<I: Iterator<Item = Duration>>(iter: I) -> Duration {
        iter.fold(Duration::zero(), |acc, d| acc + d)
    }
}

impl<'a> Sum<&'a Duration> for Duration {
    fn sum<I: Iterator<Item = &'a Duration>>(iter: I) -> Duration {
        iter.fold(Duration::zero(), |acc, d| acc + d)
    }
}

impl PartialEq<u64> for Duration {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<u64> for Duration {
    fn partial_cmp(&self, other: &u64) -> Option<Ordering> {
        self.0
            .partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

/// Shorthand used throughout the tests: `d("0.7")`.
pub fn d(text: &str) -> Duration {
    text.parse()
        .unwrap_or_else(|e| panic!("bad duration literal {:?}: {}", text, e))
}
