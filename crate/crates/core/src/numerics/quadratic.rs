//! Exact arithmetic in the quadratic field `Q[sqrt(5)]`.
//!
//! A value is stored as `p + q*sqrt(5)` with rational `p`, `q`. Because
//! `sqrt(5)` is irrational the representation is unique, so structural
//! equality is value equality, and comparisons against rationals can be
//! decided exactly by sign analysis and squaring. The golden ratio
//! `phi = (1 + sqrt(5))/2` and every limit the engine recognizes live here.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use super::rational::{ratio, to_decimal, BigRational, DEFAULT_SIG_DIGITS};
use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticValue {
    p: BigRational,
    q: BigRational,
}

impl QuadraticValue {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        QuadraticValue { p, q }
    }

    pub fn from_rational(p: BigRational) -> Self {
        QuadraticValue { p, q: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(super::rational::int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt5() -> Self {
        QuadraticValue { p: BigRational::zero(), q: BigRational::one() }
    }

    /// The golden ratio `(1 + sqrt(5)) / 2`.
    pub fn phi() -> Self {
        QuadraticValue { p: ratio(1, 2), q: ratio(1, 2) }
    }

    /// Rational part `p` of `p + q*sqrt(5)`.
    pub fn p(&self) -> &BigRational {
        &self.p
    }

    /// Coefficient `q` of `sqrt(5)`.
    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// True when the value lies in Q (no sqrt(5) component).
    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadraticValue { p: self.p.clone(), q: -self.q.clone() }
    }

    /// Field norm `p^2 - 5 q^2`; zero only for the zero element.
    pub fn norm(&self) -> BigRational {
        &self.p * &self.p - super::rational::int(5) * &self.q * &self.q
    }

    /// Exact multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInversion);
        }
        let norm = self.norm();
        Ok(QuadraticValue { p: &self.p / &norm, q: -&self.q / &norm })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut acc = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &acc;
            }
            e >>= 1;
            if e > 0 {
                acc = &acc * &acc;
            }
        }
        result
    }

    /// Exact sign of the value.
    pub fn sign(&self) -> Ordering {
        let ps = rational_sign(&self.p);
        let qs = rational_sign(&self.q);
        match (ps, qs) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // Opposite signs: compare p^2 against 5 q^2; they can never be
            // equal for nonzero parts since sqrt(5) is irrational.
            (Ordering::Greater, Ordering::Less) => {
                let p2 = &self.p * &self.p;
                let q25 = super::rational::int(5) * &self.q * &self.q;
                p2.cmp(&q25)
            }
            (Ordering::Less, Ordering::Greater) => {
                let p2 = &self.p * &self.p;
                let q25 = super::rational::int(5) * &self.q * &self.q;
                q25.cmp(&p2)
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        (self - &Self::from_rational(r.clone())).sign()
    }

    /// Default decimal rendering (enclosure midpoint at 12 digits).
    pub fn decimal(&self) -> String {
        if self.q.is_zero() {
            return to_decimal(&self.p, DEFAULT_SIG_DIGITS);
        }
        let enc = quad_approx(self, 64);
        to_decimal(&enc.midpoint(), DEFAULT_SIG_DIGITS)
    }
}

fn rational_sign(x: &BigRational) -> Ordering {
    if x.is_zero() {
        Ordering::Equal
    } else if x.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl PartialOrd for QuadraticValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign()
    }
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        if self.p.is_zero() {
            return write!(f, "{}*sqrt(5)", self.q);
        }
        if self.q.is_negative() {
            write!(f, "{} - {}*sqrt(5)", self.p, -self.q.clone())
        } else {
            write!(f, "{} + {}*sqrt(5)", self.p, self.q)
        }
    }
}

impl Add for &QuadraticValue {
    type Output = QuadraticValue;
    fn add(self, rhs: &QuadraticValue) -> QuadraticValue {
        QuadraticValue { p: &self.p + &rhs.p, q: &self.q + &rhs.q }
    }
}

impl Sub for &QuadraticValue {
    type Output = QuadraticValue;
    fn sub(self, rhs: &QuadraticValue) -> QuadraticValue {
        QuadraticValue { p: &self.p - &rhs.p, q: &self.q - &rhs.q }
    }
}

impl Mul for &QuadraticValue {
    type Output = QuadraticValue;
    fn mul(self, rhs: &QuadraticValue) -> QuadraticValue {
        // (p + q*sqrt5)(p' + q'*sqrt5) = (pp' + 5qq') + (pq' + p'q)*sqrt5
        let five = super::rational::int(5);
        QuadraticValue {
            p: &self.p * &rhs.p + five * &self.q * &rhs.q,
            q: &self.p * &rhs.q + &rhs.p * &self.q,
        }
    }
}

impl Neg for QuadraticValue {
    type Output = QuadraticValue;
    fn neg(self) -> QuadraticValue {
        QuadraticValue { p: -self.p, q: -self.q }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for QuadraticValue {
            type Output = QuadraticValue;
            fn $method(self, rhs: QuadraticValue) -> QuadraticValue {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
    Inv,
}

/// Operation dispatch over `Q[sqrt(5)]`; `Inv` is unary and ignores `y`.
pub fn quad_arith(op: QuadOp, x: &QuadraticValue, y: &QuadraticValue) -> Result<QuadraticValue> {
    match op {
        QuadOp::Add => Ok(x + y),
        QuadOp::Sub => Ok(x - y),
        QuadOp::Mul => Ok(x * y),
        QuadOp::Inv => x.inv(),
    }
}

/// A closed rational interval guaranteed to contain some exact value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    lo: BigRational,
    hi: BigRational,
}

impl Enclosure {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        if a <= b {
            Enclosure { lo: a, hi: b }
        } else {
            Enclosure { lo: b, hi: a }
        }
    }

    pub fn point(x: BigRational) -> Self {
        Enclosure { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / super::rational::int(2)
    }

    pub fn contains_rational(&self, x: &BigRational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains(&self, x: &QuadraticValue) -> bool {
        x.cmp_rational(&self.lo) != Ordering::Less && x.cmp_rational(&self.hi) != Ordering::Greater
    }

    /// Smallest enclosure containing both `self` and `x`.
    pub fn hull_with(&self, x: &BigRational) -> Self {
        Enclosure {
            lo: self.lo.clone().min(x.clone()),
            hi: self.hi.clone().max(x.clone()),
        }
    }
}

/// Rational enclosure of `sqrt(5)` with width `2^-frac_bits`, from the
/// integer square root of `5 * 4^frac_bits`.
pub fn sqrt5_enclosure(frac_bits: u64) -> Enclosure {
    let scaled = BigUint::from(5u32) << (2 * frac_bits);
    let root = scaled.sqrt();
    let denom = super::rational::bigint_from_biguint(BigUint::one() << frac_bits);
    let lo = BigRational::new(super::rational::bigint_from_biguint(root.clone()), denom.clone());
    let hi = BigRational::new(super::rational::bigint_from_biguint(root + BigUint::one()), denom);
    Enclosure { lo, hi }
}

/// Certified decimal approximation: a rational interval of width at most
/// `2^-bits` that provably contains `x`.
pub fn quad_approx(x: &QuadraticValue, bits: u64) -> Enclosure {
    assert!(bits >= 8, "quad_approx needs at least 8 bits");
    if x.q().is_zero() {
        return Enclosure::point(x.p().clone());
    }
    // Width of the result is |q| * width(sqrt5 enclosure); pad the sqrt(5)
    // precision by the magnitude of q.
    let q = x.q();
    let q_mag_bits = q.numer().magnitude().bits().saturating_sub(q.denom().magnitude().bits());
    let frac_bits = bits + q_mag_bits + 2;
    let r5 = sqrt5_enclosure(frac_bits);
    let (lo, hi) = if q.is_positive() {
        (x.p() + q * r5.lo(), x.p() + q * r5.hi())
    } else {
        (x.p() + q * r5.hi(), x.p() + q * r5.lo())
    };
    Enclosure { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::int;

    #[test]
    fn inverse_of_phi() {
        let phi = QuadraticValue::phi();
        let inv = phi.inv().unwrap();
        // Oracle: the product must be exactly 1 in the field.
        assert_eq!(&inv * &phi, QuadraticValue::one());
        assert_eq!(inv, QuadraticValue::new(ratio(-1, 2), ratio(1, 2)));
    }

    #[test]
    fn multiplicative_identity() {
        let x = QuadraticValue::new(ratio(3, 7), ratio(-2, 5));
        assert_eq!(&x * &QuadraticValue::one(), x);
    }

    #[test]
    fn two_minus_phi() {
        let v = &QuadraticValue::from_int(2) - &QuadraticValue::phi();
        assert_eq!(v, QuadraticValue::new(ratio(3, 2), ratio(-1, 2)));
    }

    #[test]
    fn inverting_zero_fails() {
        assert_eq!(QuadraticValue::zero().inv(), Err(Error::ZeroInversion));
    }

    #[test]
    fn ordering_is_exact() {
        let phi = QuadraticValue::phi();
        assert_eq!(phi.cmp_rational(&ratio(161803, 100000)), Ordering::Greater);
        assert_eq!(phi.cmp_rational(&ratio(161804, 100000)), Ordering::Less);
        let phi_inv = phi.inv().unwrap();
        assert!(phi_inv < phi);
        assert_eq!(phi.sign(), Ordering::Greater);
        assert_eq!((&phi_inv - &phi).sign(), Ordering::Less);
    }

    #[test]
    fn approx_zero_is_a_point() {
        let enc = quad_approx(&QuadraticValue::zero(), 40);
        assert_eq!(enc.lo(), &int(0));
        assert_eq!(enc.hi(), &int(0));
    }

    #[test]
    fn approx_phi_40_bits() {
        let phi = QuadraticValue::phi();
        let enc = quad_approx(&phi, 40);
        let two_pow_40 = ratio(1, 1 << 40);
        assert!(enc.width() <= two_pow_40);
        assert!(enc.contains(&phi));
        // Independent digits: phi = 1.6180339887498948...
        let lo = crate::numerics::parse_decimal("1.6180339887").unwrap();
        let hi = crate::numerics::parse_decimal("1.6180339888").unwrap();
        assert!(*enc.lo() > lo && *enc.hi() < hi);
    }

    #[test]
    fn approx_two_minus_phi_40_bits() {
        let v = &QuadraticValue::from_int(2) - &QuadraticValue::phi();
        let enc = quad_approx(&v, 40);
        assert!(enc.width() <= ratio(1, 1 << 40));
        assert!(enc.contains(&v));
        // 2 - phi = 0.3819660112501051...
        let lo = crate::numerics::parse_decimal("0.3819660112").unwrap();
        let hi = crate::numerics::parse_decimal("0.3819660113").unwrap();
        assert!(*enc.lo() > lo && *enc.hi() < hi);
    }

    #[test]
    fn decimal_rendering_of_phi() {
        assert_eq!(QuadraticValue::phi().decimal(), "1.61803398875");
    }
}
