//! Scalar abstractions.
//!
//! Probability masses and polymatroid ranks live in an [`Exact`] field
//! (arbitrary-precision rationals by default, `Ratio<i64>` for small tables).
//! Information measures are computed in a floating type implementing
//! [`Real`].

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact ordered field used for probability masses and ranks.
pub trait Exact:
    Clone + Ord + Hash + Debug + Display + Num + Signed + ToPrimitive + Send + Sync + 'static
{
    fn from_big(r: &BigRational) -> Option<Self>;
    fn to_big(&self) -> BigRational;

    fn from_i64(v: i64) -> Self {
        Self::from_big(&BigRational::from_integer(BigInt::from(v)))
            .expect("small integers are representable")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// Lossy conversion, used only to feed entropy computations.
    fn to_real<F: Real>(&self) -> F {
        F::from_f64(self.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan)
    }

    fn is_integer_valued(&self) -> bool {
        self.to_big().is_integer()
    }
}

impl Exact for BigRational {
    fn from_big(r: &BigRational) -> Option<Self> {
        Some(r.clone())
    }

    fn to_big(&self) -> BigRational {
        self.clone()
    }
}

impl Exact for Ratio<i64> {
    fn from_big(r: &BigRational) -> Option<Self> {
        let n = r.numer().to_i64()?;
        let d = r.denom().to_i64()?;
        Some(Ratio::new(n, d))
    }

    fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

/// Floating type for entropies.
pub trait Real: Float + FromPrimitive + Debug + Display + Default + Send + Sync + 'static {}

impl<T: Float + FromPrimitive + Debug + Display + Default + Send + Sync + 'static> Real for T {}

/// Parses `"a/b"`, an integer, or a decimal literal (optionally with an
/// exponent) into an exact rational. Decimals are converted digit by digit,
/// never through a binary float.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((n, d)) = s.split_once('/') {
        let num = BigInt::from_str(n.trim()).map_err(|_| bad_number(text))?;
        let den = BigInt::from_str(d.trim()).map_err(|_| bad_number(text))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in '{text}'")));
        }
        return Ok(BigRational::new(num, den));
    }
    parse_decimal(s).ok_or_else(|| bad_number(text))
}

fn bad_number(text: &str) -> Error {
    Error::Parse(format!("'{text}' is neither a fraction a/b nor a decimal literal"))
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(BigInt::from_str(&all_digits).ok()?);
    let scale = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let power = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= power;
    } else {
        value /= power;
    }
    Some(if negative { -value } else { value })
}

/// Renders a rational as `"a/b"`, or `"a"` when integral.
pub fn format_rational<Q: Exact>(q: &Q) -> String {
    let big = q.to_big();
    if big.denom().is_one() {
        big.numer().to_string()
    } else {
        format!("{}/{}", big.numer(), big.denom())
    }
}
