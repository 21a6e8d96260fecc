//! Exact rational arithmetic helpers shared by the solver and geometry modules.
//!
//! All solver-facing quantities (weights, powers, coordinates, budgets) are
//! [`BigRational`]. Floating point appears only in circle placement and in
//! report output, never in a comparison that decides anything.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Parses a number token: a decimal integer or a `p/q` rational.
pub fn parse_rational(tok: &str) -> Result<Rational, String> {
    let parse_int = |s: &str| -> Result<BigInt, String> {
        BigInt::from_str(s).map_err(|_| format!("invalid number `{tok}`"))
    };
    match tok.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(tok)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(format!("zero denominator in `{tok}`"));
            }
            Ok(Rational::new(parse_int(p)?, den))
        }
    }
}

/// Formats a rational as a bare integer when possible, `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if is_integer(q) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Floor of the square root of a nonnegative rational.
///
/// Uses `floor(sqrt(x)) = isqrt(floor(x))`, valid because `isqrt` is the
/// integer square root and `x >= floor(x)`.
pub fn floor_sqrt(x: &Rational) -> BigInt {
    assert!(!x.is_negative(), "floor_sqrt of negative value");
    x.to_integer().sqrt()
}

/// Rounds `x` up to the next multiple of `2^-bits`.
pub fn ceil_to_dyadic(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = x * Rational::from_integer(scale.clone());
    let k = scaled.ceil().to_integer();
    Rational::new(k, scale)
}

/// Smallest integer `k` with `k >= a - sqrt(m)`, for rational `a` and
/// nonnegative rational `m`. Exact; used to round `r + r' - |c - c'|`
/// style quantities upward onto a dyadic grid.
pub fn ceil_minus_sqrt(a: &Rational, m: &Rational) -> BigInt {
    assert!(!m.is_negative());
    // a - sqrt(m) lies in (a - fs - 1, a - fs] where fs = floor(sqrt(m)).
    let fs = Rational::from_integer(floor_sqrt(m));
    let mut k = (a - &fs).ceil().to_integer();
    // k is an upper candidate; walk down while k-1 still dominates a - sqrt(m),
    // i.e. while sqrt(m) >= a - (k-1). At most two steps.
    loop {
        let next = &k - BigInt::one();
        let gap = a - Rational::from_integer(next.clone());
        let ok = if gap.is_negative() || gap.is_zero() {
            true
        } else {
            &gap * &gap <= *m
        };
        if ok {
            k = next;
        } else {
            break;
        }
    }
    k
}

/// Exact comparison of `sqrt(m)` against a rational `t` (`m >= 0`).
pub fn cmp_sqrt(m: &Rational, t: &Rational) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    if t.is_negative() {
        return Ordering::Greater;
    }
    let t2 = t * t;
    match m.cmp(&t2) {
        Ordering::Less => Ordering::Less,
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => Ordering::Greater,
    }
}

/// Ceiling of a rational as a BigInt.
pub fn ceil_int(q: &Rational) -> BigInt {
    q.ceil().to_integer()
}

pub fn to_i128(q: &Rational) -> Option<i128> {
    if is_integer(q) {
        q.numer().to_i128()
    } else {
        None
    }
}

/// Euclidean gcd-based exactness check used by scaling: `q * factor` must be
/// an integer.
pub fn scaled_is_integer(q: &Rational, factor: &Rational) -> bool {
    is_integer(&(q * factor))
}
