//! Exact rational helpers shared by the codec and the gravity estimates.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn pow10(exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), exp as usize)
}

/// `10^exp` as a rational, for any sign of `exp`.
pub fn pow10_rational(exp: i64) -> Rational {
    let p = pow10(exp.unsigned_abs() as u32);
    if exp >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Parses a decimal literal such as `6.67430e-11`, `-0.25` or `1E9` exactly.
pub fn parse_decimal(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(text.to_string());
    let s = text.trim();
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let all: String = [int_part, frac_part].concat();
    let mut value = BigInt::parse_bytes(all.as_bytes(), 10).ok_or_else(bad)?;
    if negative {
        value = -value;
    }
    let scale = exponent - frac_part.len() as i64;
    Ok(Rational::from_integer(value) * pow10_rational(scale))
}

/// Parses `p/q`, an integer, or a decimal literal.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| Error::Parse(text.to_string()))?;
        let q: BigInt = q.trim().parse().map_err(|_| Error::Parse(text.to_string()))?;
        if q.is_zero() {
            return Err(Error::Parse(text.to_string()));
        }
        return Ok(Rational::new(p, q));
    }
    parse_decimal(s)
}

fn decimal_digits(n: &BigInt) -> i64 {
    if n.is_zero() {
        1
    } else {
        n.magnitude().to_str_radix(10).len() as i64
    }
}

/// `floor(log10(|x|))` for non-zero `x`, computed exactly.
pub fn floor_log10(x: &Rational) -> i64 {
    assert!(!x.is_zero(), "log of zero");
    let num = x.numer().abs();
    let den = x.denom().clone();
    let mut e = decimal_digits(&num) - decimal_digits(&den);
    // |x| / 10^e lies in (0.1, 10); fix up by one step either way.
    let scaled = Rational::new(num, den) / pow10_rational(e);
    if scaled >= Rational::from_integer(BigInt::from(10)) {
        e += 1;
    } else if scaled < Rational::one() {
        e -= 1;
    }
    e
}

/// Base-10 logarithm of `|x|` as a float; exact in the exponent, ~1e-15 relative in the mantissa.
pub fn log10(x: &Rational) -> f64 {
    let e = floor_log10(x);
    let mantissa = x.abs() / pow10_rational(e);
    e as f64 + rational_to_f64(&mantissa).log10()
}

pub fn log2(x: &Rational) -> f64 {
    log10(x) / std::f64::consts::LOG10_2
}

pub fn log10_int(n: &BigUint) -> f64 {
    log10(&Rational::from_integer(BigInt::from(n.clone())))
}

/// Nearest `f64`, with magnitudes beyond the `f64` range saturating to 0 or ±inf.
pub fn rational_to_f64(x: &Rational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    if let (Some(n), Some(d)) = (x.numer().to_f64(), x.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            let q = n / d;
            if q.is_normal() {
                return q;
            }
        }
    }
    let e = floor_log10(x);
    let m = rational_to_f64(&(x / pow10_rational(e)));
    // Two factors so that 10^e itself never over- or underflows for subnormal results.
    let e = e.clamp(-700, 700) as i32;
    m * 10f64.powi(e / 2) * 10f64.powi(e - e / 2)
}

/// Rounds `x` to `digits` significant decimal digits, ties to even.
pub fn round_significant(x: &Rational, digits: u32) -> Rational {
    if x.is_zero() {
        return x.clone();
    }
    let shift = floor_log10(x) - i64::from(digits) + 1;
    let scaled = x / pow10_rational(shift);
    round_half_even(&scaled) * pow10_rational(shift)
}

fn round_half_even(x: &Rational) -> Rational {
    let floor = x.floor();
    let frac = x - &floor;
    let half = ratio(1, 2);
    let up = match frac.cmp(&half) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => floor.to_integer().is_odd(),
    };
    if up {
        floor + Rational::one()
    } else {
        floor
    }
}

/// Ceiling of a rational as a signed big integer.
pub fn ceil_int(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// Scientific rendering with `digits` significant digits, e.g. `1.803e-184`.
pub fn to_scientific(x: &Rational, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let rounded = round_significant(x, digits);
    let e = floor_log10(&rounded);
    let mantissa = (rounded.abs() / pow10_rational(e - i64::from(digits) + 1)).to_integer();
    let text = mantissa.to_str_radix(10);
    let sign = if x.numer().sign() == Sign::Minus { "-" } else { "" };
    let (head, tail) = text.split_at(1);
    let tail = tail.trim_end_matches('0');
    if tail.is_empty() {
        format!("{sign}{head}e{e}")
    } else {
        format!("{sign}{head}.{tail}e{e}")
    }
}
