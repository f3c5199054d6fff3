//! Exact scalars over the rationals or a prime field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// The base field of every object in a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    /// A prime field, rejecting composite or oversized moduli.
    pub fn prime(p: u32) -> Result<Self, LinalgError> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(LinalgError::BadModulus(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rat(Rational::ZERO),
            FieldSpec::Prime(p) => Scalar::Mod { value: 0, modulus: p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rat(Rational::small(n as i128, 1)),
            FieldSpec::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// `num / den` as a field element; `None` when `den` vanishes in the field.
    pub fn fraction(&self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.from_i64(den).inv()?;
        Some(&self.from_i64(num) * &d)
    }

    /// Parses a canonical literal: `a` or `a/b` (b > 1, gcd 1) over Q,
    /// an integer in `0..p` over F_p.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, LinalgError> {
        let bad = || LinalgError::BadScalar(text.to_string());
        match *self {
            FieldSpec::Rational => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (parse_int(n).ok_or_else(bad)?, parse_int(d).ok_or_else(bad)?),
                    None => (parse_int(text).ok_or_else(bad)?, BigInt::one()),
                };
                if !den.is_positive() || (text.contains('/') && den.is_one()) {
                    return Err(bad());
                }
                if !num.gcd(&den).is_one() {
                    return Err(bad());
                }
                Ok(Scalar::Rat(Rational::from_big(BigRational::new_raw(num, den))))
            }
            FieldSpec::Prime(p) => {
                if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                if text.len() > 1 && text.starts_with('0') {
                    return Err(bad());
                }
                let v: u64 = text.parse().map_err(|_| bad())?;
                if v >= p as u64 {
                    return Err(bad());
                }
                Ok(Scalar::Mod { value: v as u32, modulus: p })
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rational => "Q".to_string(),
            FieldSpec::Prime(p) => format!("F_{p}"),
        }
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if s.starts_with('-') && digits == "0" {
        return None;
    }
    s.parse().ok()
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A reduced rational with positive denominator. Values that fit in
/// machine words stay unboxed, so equality and hashing are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
}

fn fits(x: i128) -> bool {
    x > i64::MIN as i128 && x <= i64::MAX as i128
}

impl Rational {
    pub const ZERO: Rational = Rational(Repr::Small(0, 1));

    fn small(num: i128, den: i128) -> Rational {
        let (mut num, mut den) = (num, den);
        if den != 1 {
            let g = num.gcd(&den);
            if den < 0 {
                num = -num / g;
                den = -den / g;
            } else {
                num /= g;
                den /= g;
            }
        }
        if fits(num) && fits(den) {
            Rational(Repr::Small(num as i64, den as i64))
        } else {
            Rational(Repr::Big(BigRational::new(BigInt::from(num), BigInt::from(den))))
        }
    }

    pub fn from_big(r: BigRational) -> Rational {
        use num_traits::ToPrimitive;
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(r)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    fn add(&self, other: &Rational) -> Rational {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Rational::small(a + c, b)
                } else {
                    Rational::small(a * d + c * b, b * d)
                }
            }
            _ => Rational::from_big(self.to_big() + other.to_big()),
        }
    }

    fn mul(&self, other: &Rational) -> Rational {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Rational::small(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * other.to_big()),
        }
    }

    fn neg(&self) -> Rational {
        match &self.0 {
            Repr::Small(a, b) => Rational(Repr::Small(-a, *b)),
            Repr::Big(r) => Rational::from_big(-r),
        }
    }

    fn recip(&self) -> Rational {
        match &self.0 {
            Repr::Small(a, b) => Rational::small(*b as i128, *a as i128),
            Repr::Big(r) => Rational::from_big(r.recip()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// A field element. Mixing elements of different fields is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Mod { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rational,
            Scalar::Mod { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    pub fn add_assign_ref(&mut self, other: &Scalar) {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => *a = a.add(b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                assert_eq!(p, q, "scalars from different prime fields");
                *a = ((*a as u64 + *b as u64) % *p as u64) as u32;
            }
            _ => panic!("scalars from different fields"),
        }
    }

    /// `self += a * b`, the inner loop of every product.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::Rat(acc), Scalar::Rat(x), Scalar::Rat(y)) => *acc = acc.add(&x.mul(y)),
            (Scalar::Mod { value: acc, modulus: p }, Scalar::Mod { value: x, .. }, Scalar::Mod { value: y, .. }) => {
                let p64 = *p as u64;
                *acc = ((*acc as u64 + (*x as u64 * *y as u64) % p64) % p64) as u32;
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $modular:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat($rat(a, b)),
                    (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                        assert_eq!(p, q, "scalars from different prime fields");
                        Scalar::Mod {
                            value: $modular(*a as u64, *b as u64, *p as u64) as u32,
                            modulus: *p,
                        }
                    }
                    _ => panic!("scalars from different fields"),
                }
            }
        }

        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Rational, b: &Rational| a.add(b), |a: u64, b: u64, p: u64| (a + b) % p);
binop!(Sub, sub, |a: &Rational, b: &Rational| a.add(&b.neg()), |a: u64, b: u64, p: u64| (a + p - b) % p);
binop!(Mul, mul, |a: &Rational, b: &Rational| a.mul(b), |a: u64, b: u64, p: u64| (a * b) % p);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.neg()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rationals_only() {
        let q = FieldSpec::Rational;
        assert_eq!(q.parse_scalar("1/2").unwrap(), q.fraction(1, 2).unwrap());
        assert_eq!(q.parse_scalar("-3").unwrap(), q.from_i64(-3));
        for bad in ["2/4", "1/-2", "3/1", "-0", "007", "1/0", "x", "", "1.5"] {
            assert!(q.parse_scalar(bad).is_err(), "{bad} accepted");
        }
    }

    #[test]
    fn prime_field_literals() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.parse_scalar("4").unwrap(), f5.from_i64(-1));
        assert!(f5.parse_scalar("5").is_err());
        assert!(f5.parse_scalar("-1").is_err());
        assert!(FieldSpec::prime(6).is_err());
        assert!(FieldSpec::prime(1).is_err());
    }

    #[test]
    fn arithmetic_and_inverses() {
        let f7 = FieldSpec::prime(7).unwrap();
        for v in 1..7 {
            let x = f7.from_i64(v);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        let q = FieldSpec::Rational;
        let x = q.fraction(-2, 3).unwrap();
        assert_eq!(x.to_string(), "-2/3");
        assert_eq!((&x * &x.inv().unwrap()).to_string(), "1");
        assert_eq!((&q.from_i64(1) - &q.fraction(1, 3).unwrap()).to_string(), "2/3");
        assert!(q.zero().inv().is_none());
        let mut acc = f7.from_i64(3);
        acc.add_product(&f7.from_i64(4), &f7.from_i64(5));
        assert_eq!(acc, f7.from_i64(23));
    }

    #[test]
    #[should_panic]
    fn mixing_fields_panics() {
        let _ = FieldSpec::Rational.one() + FieldSpec::Prime(5).one();
    }
}
