//! Exact field elements over Q and GF(p).
//!
//! Rationals are kept in lowest terms with a positive denominator. Values that
//! fit in a pair of `i64` stay in an inline representation and only spill to
//! `BigRational` when an intermediate result no longer fits, so the common
//! small-constant case never allocates. Residues are kept in `[0, p)`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// The base field of every computation: Q or GF(p) with `p >= 5` prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is below 5; characteristic 2 and 3 are excluded")]
    SmallCharacteristic(u64),
    #[error("cannot parse scalar {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p < 5 {
            return Err(FieldError::SmallCharacteristic(p));
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar(Repr::Small(n, 1)),
            Field::Prime(p) => Scalar(Repr::Mod(n.rem_euclid(p as i64) as u64, p)),
        }
    }

    /// `num / den` in this field. Panics if `den` is zero in the field.
    pub fn ratio(&self, num: i64, den: i64) -> Scalar {
        self.from_i64(num) / self.from_i64(den)
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            Field::Rational => Scalar::from_big(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar(Repr::Mod(r.to_u64().expect("residue fits"), p))
            }
        }
    }

    /// Parses `"n"` or `"n/d"` with decimal integers of any length.
    pub fn parse(&self, text: &str) -> Result<Scalar, FieldError> {
        let err = |reason: &str| FieldError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
        let d = self.from_bigint(&den);
        if d.is_zero() {
            return Err(err("denominator vanishes in this field"));
        }
        Ok(self.from_bigint(&num) / d)
    }

    /// Maps a rational constant into this field (reduction mod p for GF(p)).
    pub fn embed(&self, q: &Scalar) -> Scalar {
        match (&q.0, *self) {
            (Repr::Mod(..), _) => q.clone(),
            (_, Field::Rational) => q.clone(),
            (_, Field::Prime(_)) => {
                let r = q.to_big_rational();
                self.from_bigint(r.numer()) / self.from_bigint(r.denom())
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

// Canonical: `Big` only holds values that do not fit `Small`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
    Mod(u64, u64),
}

impl Scalar {
    fn from_big(r: BigRational) -> Scalar {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(r)),
        }
    }

    fn from_i128(num: i128, den: i128) -> Scalar {
        debug_assert!(den != 0);
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn to_big_rational(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
            Repr::Mod(..) => panic!("residue has no rational value"),
        }
    }

    pub fn field(&self) -> Field {
        match self.0 {
            Repr::Mod(_, p) => Field::Prime(p),
            _ => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n == 0,
            Repr::Big(r) => r.is_zero(),
            Repr::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(n, d) => *n == 1 && *d == 1,
            Repr::Big(_) => false,
            Repr::Mod(v, _) => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Scalar::from_i128(*d as i128, *n as i128),
            Repr::Big(r) => Scalar::from_big(r.recip()),
            Repr::Mod(v, p) => Scalar(Repr::Mod(pow_mod(*v, p - 2, *p), *p)),
        })
    }

    /// Numerator and denominator of a rational value.
    pub fn as_ratio(&self) -> Option<(BigInt, BigInt)> {
        match &self.0 {
            Repr::Mod(..) => None,
            _ => {
                let r = self.to_big_rational();
                Some((r.numer().clone(), r.denom().clone()))
            }
        }
    }

    /// Integer residue in `[0, p)` for GF(p) values.
    pub fn as_residue(&self) -> Option<u64> {
        match self.0 {
            Repr::Mod(v, _) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {:?} vs {:?}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        return Scalar(Repr::Small(s, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Scalar::from_i128(a * d + c * b, b * d)
            }
            (Repr::Mod(a, p), Repr::Mod(b, q)) if p == q => {
                Scalar(Repr::Mod(((*a as u128 + *b as u128) % *p as u128) as u64, *p))
            }
            (Repr::Mod(..), _) | (_, Repr::Mod(..)) => mismatch(self, rhs),
            _ => Scalar::from_big(self.to_big_rational() + rhs.to_big_rational()),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_mul(*c) {
                        return Scalar(Repr::Small(s, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Scalar::from_i128(a * c, b * d)
            }
            (Repr::Mod(a, p), Repr::Mod(b, q)) if p == q => {
                Scalar(Repr::Mod(((*a as u128 * *b as u128) % *p as u128) as u64, *p))
            }
            (Repr::Mod(..), _) | (_, Repr::Mod(..)) => mismatch(self, rhs),
            _ => Scalar::from_big(self.to_big_rational() * rhs.to_big_rational()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Scalar(Repr::Small(m, *d)),
                None => Scalar::from_big(-self.to_big_rational()),
            },
            Repr::Big(r) => Scalar::from_big(-r.clone()),
            Repr::Mod(0, p) => Scalar(Repr::Mod(0, *p)),
            Repr::Mod(v, p) => Scalar(Repr::Mod(p - v, *p)),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        if let (Repr::Small(a, 1), Repr::Small(c, 1)) = (&self.0, &rhs.0) {
            if let Some(s) = a.checked_sub(*c) {
                return Scalar(Repr::Small(s, 1));
            }
        }
        self + &(-rhs)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    if a == 0 {
        1
    } else {
        a
    }
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let m = p as u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n) as u128;
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n as u128;
            if x == (n - 1) as u128 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Sign helper used by permutation and boundary code.
pub fn sign_scalar(field: Field, negative: bool) -> Scalar {
    if negative {
        field.from_i64(-1)
    } else {
        field.one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rational;
        let x = q.ratio(2, 4);
        assert_eq!(x, q.ratio(1, 2));
        assert_eq!(x.to_string(), "1/2");
        assert_eq!(q.ratio(3, -6).to_string(), "-1/2");
        assert!((q.ratio(1, 3) * q.from_i64(3)).is_one());
    }

    #[test]
    fn overflow_spills_to_bigint_and_back() {
        let q = Field::Rational;
        let big = q.from_i64(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        let min = q.from_i64(i64::MIN);
        assert_eq!(-(-&min), min);
    }

    #[test]
    fn one_third_mod_five() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.parse("1/3").unwrap(), f.from_i64(2));
        assert_eq!(f.parse("-1").unwrap(), f.from_i64(4));
        assert!(f.parse("1/5").is_err());
    }

    #[test]
    fn prime_checks() {
        assert!(Field::prime(7).is_ok());
        assert_eq!(Field::prime(3), Err(FieldError::SmallCharacteristic(3)));
        assert_eq!(Field::prime(9), Err(FieldError::NotPrime(9)));
        assert!(Field::prime(1_000_000_007).is_ok());
        assert!(Field::prime(1_000_000_007 * 3).is_err());
    }

    #[test]
    fn parse_big_rational() {
        let q = Field::Rational;
        let x = q.parse("123456789012345678901234567890/2").unwrap();
        assert_eq!(x.to_string(), "61728394506172839450617283945");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn embed_rational_into_prime_field() {
        let f = Field::prime(7).unwrap();
        let half = Field::Rational.ratio(1, 2);
        assert_eq!(f.embed(&half), f.from_i64(4));
    }

    #[test]
    fn small_values_use_big_path_when_mixed() {
        let q = Field::Rational;
        let a = q.parse("100000000000000000000").unwrap();
        let b = q.from_i64(-2);
        let s = &a + &b;
        assert_eq!(s.to_string(), "99999999999999999998");
        assert!(!s.is_zero());
    }
}
