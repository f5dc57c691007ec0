//! Exact rational arithmetic and decimal rendering.
//!
//! `BigRational` is `num_rational::Ratio<BigInt>`, which keeps every value in
//! canonical form (positive denominator, gcd 1) after each operation. The
//! helpers here add the checked division entry point and the decimal
//! conversions the rest of the crate needs.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

pub use num_rational::BigRational;

/// Default number of significant digits for decimal rendering.
pub const DEFAULT_SIG_DIGITS: u32 = 12;

/// Shorthand for `n/d` used heavily in tests.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked rational arithmetic. Division by zero is reported, never a panic.
pub fn rat_arith(op: RatOp, x: &BigRational, y: &BigRational) -> Result<BigRational> {
    match op {
        RatOp::Add => Ok(x + y),
        RatOp::Sub => Ok(x - y),
        RatOp::Mul => Ok(x * y),
        RatOp::Div => {
            if y.is_zero() {
                Err(Error::DivisionByZero)
            } else {
                Ok(x / y)
            }
        }
    }
}

/// True when the value is stored in canonical form: positive denominator and
/// coprime components (zero is 0/1).
pub fn is_canonical(x: &BigRational) -> bool {
    x.denom().is_positive() && x.numer().gcd(x.denom()).is_one()
}

/// `base^exp` by binary exponentiation.
pub fn rat_pow(base: &BigRational, exp: u32) -> BigRational {
    let mut result = BigRational::one();
    let mut acc = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= &acc;
        }
        e >>= 1;
        if e > 0 {
            acc = &acc * &acc;
        }
    }
    result
}

/// Parse a plain decimal literal (`-3`, `0.25`, `1e-8`, `2.5E3`) into an
/// exact rational.
pub fn parse_decimal(text: &str) -> Option<BigRational> {
    let s = text.trim();
    if s.is_empty() {
        return None;
    }
    let (sign, rest) = match s.as_bytes()[0] {
        b'+' => (1, &s[1..]),
        b'-' => (-1, &s[1..]),
        _ => (1, s),
    };
    let (mantissa, exponent) = match rest.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = rest[pos + 1..].parse().ok()?;
            (&rest[..pos], exp)
        }
        None => (rest, 0),
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(pos) => (&mantissa[..pos], &mantissa[pos + 1..]),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits: String = [int_part, frac_part].concat();
    let numer: BigInt = digits.parse().ok()?;
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * ten.pow(scale as u32))
    } else {
        BigRational::new(numer, ten.pow((-scale) as u32))
    };
    Some(if sign < 0 { -value } else { value })
}

/// Render `x` to `sig` significant digits, rounding half away from zero.
///
/// The printed string differs from the exact value by at most one unit in
/// the last digit; callers that need certainty keep the exact rational
/// alongside. Very small or very large magnitudes switch to `d.dd...e±k`
/// notation.
pub fn to_decimal(x: &BigRational, sig: u32) -> String {
    assert!(sig >= 1);
    if x.is_zero() {
        return "0".to_string();
    }
    let negative = x.is_negative();
    let a = x.numer().magnitude().clone();
    let b = x.denom().magnitude().clone();

    // Scale so the integer t carries sig digits plus guard digits.
    let guard: u32 = 4;
    let da = count_digits(&a);
    let db = count_digits(&b);
    let mut shift = sig as i64 + guard as i64 - (da as i64 - db as i64);
    let mut t = scaled_quotient(&a, &b, shift);
    // da - db estimates the exponent within one digit; correct if needed.
    let want = (sig + guard) as u64;
    let mut dt = count_digits(&t);
    while dt < want {
        shift += 1;
        t = scaled_quotient(&a, &b, shift);
        dt = count_digits(&t);
    }
    while dt > want {
        shift -= 1;
        t = scaled_quotient(&a, &b, shift);
        dt = count_digits(&t);
    }

    // Round to sig digits, half away from zero.
    let ten = BigUint::from(10u32);
    let down = ten.pow(guard);
    let (mut r, rem) = t.div_rem(&down);
    if rem * 2u32 >= down {
        r += 1u32;
    }
    let mut digits = r.to_str_radix(10);
    if digits.len() as u32 > sig {
        // 999.. rounded up to a longer string; renormalize.
        digits.truncate(sig as usize);
        shift -= 1;
    }
    // Exponent of the leading digit: value ~ digits * 10^(dt - shift - sig).
    let exp_first = dt as i64 - shift - 1;

    let body = format_digits(&digits, exp_first);
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn format_digits(digits: &str, exp_first: i64) -> String {
    let sig = digits.len() as i64;
    if exp_first >= -8 && exp_first < sig + 6 {
        if exp_first >= sig - 1 {
            // Integer with possible trailing zeros.
            let mut s = digits.to_string();
            s.push_str(&"0".repeat((exp_first - sig + 1) as usize));
            s
        } else if exp_first >= 0 {
            let split = (exp_first + 1) as usize;
            format!("{}.{}", &digits[..split], &digits[split..])
        } else {
            let zeros = (-exp_first - 1) as usize;
            format!("0.{}{}", "0".repeat(zeros), digits)
        }
    } else {
        let head = &digits[..1];
        let tail = &digits[1..];
        if tail.is_empty() {
            format!("{head}e{exp_first}")
        } else {
            format!("{head}.{tail}e{exp_first}")
        }
    }
}

fn count_digits(n: &BigUint) -> u64 {
    if n.is_zero() {
        return 1;
    }
    // bits/log2(10) estimate, corrected by comparison.
    let bits = n.bits();
    let mut estimate = ((bits as f64) * 0.30102999566398119) as u64;
    let ten = BigUint::from(10u32);
    while ten.pow(estimate as u32) > *n {
        estimate -= 1;
    }
    while ten.pow((estimate + 1) as u32) <= *n {
        estimate += 1;
    }
    estimate + 1
}

fn scaled_quotient(a: &BigUint, b: &BigUint, shift: i64) -> BigUint {
    let ten = BigUint::from(10u32);
    if shift >= 0 {
        a * ten.pow(shift as u32) / b
    } else {
        a / (b * ten.pow((-shift) as u32))
    }
}

/// Magnitude accessor used when converting signed rationals to unsigned parts.
pub(crate) fn bigint_magnitude(x: &BigInt) -> BigUint {
    x.magnitude().clone()
}

pub(crate) fn bigint_from_biguint(x: BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_examples() {
        // 1/2 + 1/3 = 5/6, the two leading terms that combine in the
        // shift-two telescoping family.
        assert_eq!(rat_arith(RatOp::Add, &ratio(1, 2), &ratio(1, 3)).unwrap(), ratio(5, 6));
        let x = ratio(-7, 13);
        assert_eq!(rat_arith(RatOp::Mul, &x, &int(1)).unwrap(), x);
        assert_eq!(rat_arith(RatOp::Div, &ratio(1, 3), &ratio(1, 3)).unwrap(), int(1));
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(rat_arith(RatOp::Div, &int(1), &int(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_after_ops() {
        let x = ratio(6, -4);
        assert!(is_canonical(&x));
        assert_eq!(x, ratio(-3, 2));
        assert!(is_canonical(&rat_arith(RatOp::Add, &ratio(1, 6), &ratio(1, 3)).unwrap()));
    }

    #[test]
    fn decimal_parsing() {
        assert_eq!(parse_decimal("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_decimal("1e-8").unwrap(), ratio(1, 100_000_000));
        assert_eq!(parse_decimal("-2.5e3").unwrap(), int(-2500));
        assert_eq!(parse_decimal("3").unwrap(), int(3));
        assert!(parse_decimal("abc").is_none());
        assert!(parse_decimal("").is_none());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&ratio(1, 2), 12), "0.500000000000");
        assert_eq!(to_decimal(&ratio(2, 3), 6), "0.666667");
        assert_eq!(to_decimal(&ratio(-1, 6), 4), "-0.1667");
        assert_eq!(to_decimal(&int(0), 12), "0");
        assert_eq!(to_decimal(&int(832040), 12), "832040.000000");
        assert_eq!(to_decimal(&ratio(1, 1_000_000_000_000), 3), "1.00e-12");
        // round-half-away: 0.15 at 1 digit -> 0.2
        assert_eq!(to_decimal(&ratio(15, 100), 1), "0.2");
    }

    #[test]
    fn rat_pow_small_cases() {
        assert_eq!(rat_pow(&ratio(2, 3), 0), int(1));
        assert_eq!(rat_pow(&ratio(2, 3), 3), ratio(8, 27));
    }
}
