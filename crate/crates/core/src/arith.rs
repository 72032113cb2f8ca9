//! Exact rational helpers shared by every module.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number used for all weights, expectations and bounds.
pub type Rational = BigRational;

/// `C(n, k)` as a big integer, with `C(n, k) = 0` when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// `true` when `-1 <= v <= 1`.
pub fn in_unit_interval(v: &Rational) -> bool {
    v.abs() <= Rational::one()
}

/// Canonical `"p/q"` form: reduced, positive denominator, denominator always written.
pub fn format_ratio(v: &Rational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`; the result is always reduced.
pub fn parse_ratio(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).ok()?;
            let q = BigInt::from_str(q.trim()).ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
    }
}

pub fn to_f64(v: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(f64::NAN)
}
