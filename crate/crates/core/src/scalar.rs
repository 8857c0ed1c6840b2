use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, Signed, ToPrimitive, Zero};

/// Ordered field used for coordinates, normals and thresholds.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    /// Whether arithmetic is exact.
    const EXACT: bool;

    /// Largest integer not exceeding `self`.
    fn floor_i64(&self) -> i64;

    /// Parses `num/den`, a plain integer, or a decimal such as `-1.25`.
    fn parse_scalar(s: &str) -> Option<Self>;

    fn to_f64_lossy(&self) -> f64;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num).unwrap() / Self::from_i64(den).unwrap()
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn floor_i64(&self) -> i64 {
        self.floor().to_integer().to_i64().expect("coordinate out of i64 range")
    }

    fn parse_scalar(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            return Some(BigRational::new(n, d));
        }
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return None;
        }
        let digits = format!("{int_part}{frac_part}");
        let num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits }).ok()?;
        let den = num_traits::pow(BigInt::from(10), frac_part.len());
        let r = BigRational::new(num, den);
        Some(if neg { -r } else { r })
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn floor_i64(&self) -> i64 {
                Float::floor(*self) as i64
            }

            fn parse_scalar(s: &str) -> Option<Self> {
                let s = s.trim();
                if let Some((n, d)) = s.split_once('/') {
                    let n: $t = n.trim().parse().ok()?;
                    let d: $t = d.trim().parse().ok()?;
                    if d == 0.0 {
                        return None;
                    }
                    return Some(n / d);
                }
                s.parse().ok()
            }

            fn to_f64_lossy(&self) -> f64 {
                *self as f64
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

/// Integer power of two as a scalar, `2^e` for any sign of `e`.
pub fn pow2<T: Scalar>(e: i32) -> T {
    let two = T::one() + T::one();
    let mut r = T::one();
    for _ in 0..e.unsigned_abs() {
        r = r * two.clone();
    }
    if e < 0 {
        T::one() / r
    } else {
        r
    }
}

pub(crate) fn sign_of<T: Scalar>(x: &T) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
