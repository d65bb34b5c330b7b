//! Exact rational scalars and their textual forms.
//!
//! All values in this crate are `Rat` (arbitrary-precision rationals kept in
//! lowest terms with positive denominator). Decimal strings are produced for
//! display only and never feed back into computation.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `a`, `-a`, or `a/b` with an arbitrary-precision numerator and a
/// positive denominator.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::InvalidInput("empty rational literal".into()));
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad integer `{num_str}`")))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad integer `{d}`")))?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(Error::InvalidInput(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(num, den))
}

/// Canonical exact form: `a` for integers, `a/b` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fixed-point decimal rendering with `digits` places after the point,
/// rounded half to even. Display-only.
pub fn format_decimal(r: &Rat, digits: usize) -> String {
    let neg = r.is_negative();
    let abs = r.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled_num = abs.numer() * &scale;
    let den = abs.denom();
    let mut q = &scaled_num / den;
    let rem = &scaled_num % den;
    let twice = &rem * 2;
    if twice > *den || (twice == *den && (&q % 2) == BigInt::from(1)) {
        q += 1;
    }
    let digits_str = q.to_string();
    let mut out = String::new();
    if neg && !q.is_zero() {
        out.push('-');
    }
    if digits == 0 {
        out.push_str(&digits_str);
        return out;
    }
    if digits_str.len() > digits {
        let (int_part, frac_part) = digits_str.split_at(digits_str.len() - digits);
        out.push_str(int_part);
        out.push('.');
        out.push_str(frac_part);
    } else {
        out.push_str("0.");
        for _ in 0..(digits - digits_str.len()) {
            out.push('0');
        }
        out.push_str(&digits_str);
    }
    out
}
