//! Arbitrary-precision rationals with an inline fast path for word-sized values.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::FieldError;

/// An exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in an `i64` are kept inline;
/// everything else spills into a [`BigRational`]. The two representations
/// never overlap, so derived equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(n))
    }

    /// `n / d`, reduced. Panics if `d == 0`.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_i128(n as i128, d as i128)
    }

    pub fn from_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN && d != i64::MIN {
                return Rational(Repr::Small(n, d));
            }
        }
        Rational(Repr::Big(Box::new(r)))
    }

    fn from_i128(n: i128, d: i128) -> Self {
        let (mut n, mut d) = (n, d);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) if a != i64::MIN => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
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
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        match &self.0 {
            Repr::Small(0, _) => Err(FieldError::DivisionByZero),
            Repr::Small(n, d) => Ok(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(b) => Ok(Self::from_big(b.recip())),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Rational::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power with a possibly negative exponent.
    pub fn powi(&self, e: i32) -> Result<Self, FieldError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            self.inv().map(|r| r.pow(e.unsigned_abs()))
        }
    }

    /// Residue of this value modulo the prime `p`; `None` if `p` divides the denominator.
    pub fn mod_prime(&self, p: u64) -> Option<u64> {
        match &self.0 {
            Repr::Small(n, d) => {
                let dm = (*d as i128).rem_euclid(p as i128) as u64;
                if dm == 0 {
                    return None;
                }
                let nm = (*n as i128).rem_euclid(p as i128) as u64;
                if *d == 1 {
                    Some(nm)
                } else {
                    Some(super::modp::mul(nm, super::modp::inv(dm, p), p))
                }
            }
            Repr::Big(b) => {
                let pb = BigInt::from(p);
                let dm = b.denom().mod_floor(&pb).to_u64().unwrap();
                if dm == 0 {
                    return None;
                }
                let nm = b.numer().mod_floor(&pb).to_u64().unwrap();
                Some(super::modp::mul(nm, super::modp::inv(dm, p), p))
            }
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_int(n as i64)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, 1), Repr::Small(b, 1)) => match a.checked_add(*b) {
                Some(s) if s != i64::MIN => Rational(Repr::Small(s, 1)),
                _ => Rational::from_i128(*a as i128 + *b as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + c * b, b * d)
            }
            _ => Rational::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, 1), Repr::Small(b, 1)) => match a.checked_mul(*b) {
                Some(s) if s != i64::MIN => Rational(Repr::Small(s, 1)),
                _ => Rational::from_i128(*a as i128 * *b as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let g1 = gcd_u64(a.unsigned_abs(), *d as u64).max(1) as i128;
                let g2 = gcd_u64(c.unsigned_abs(), *b as u64).max(1) as i128;
                let n = (*a as i128 / g1) * (*c as i128 / g2);
                let dd = (*b as i128 / g2) * (*d as i128 / g1);
                Rational::from_i128(n, dd)
            }
            _ => Rational::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        self * &rhs.inv().expect("division by zero rational")
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $f(self, rhs: Rational) -> Rational {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $f(self, rhs: &'a Rational) -> Rational {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        *self = &*self * rhs;
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = FieldError;

    /// Accepts `P`, `-P`, `P/Q`; no decimal points or exponents.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FieldError::Parse(s.to_string());
        let s_trim = s.trim();
        let (n, d) = match s_trim.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s_trim, None),
        };
        let valid = |t: &str, signed: bool| {
            let digits = if signed {
                t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t)
            } else {
                t
            };
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid(n, true) {
            return Err(bad());
        }
        let num: BigInt = n.trim_start_matches('+').parse().map_err(|_| bad())?;
        let den: BigInt = match d {
            Some(d) => {
                if !valid(d, false) {
                    return Err(bad());
                }
                d.parse().map_err(|_| bad())?
            }
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Rational::from_big(BigRational::new(num, den)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_reduces() {
        let a = Rational::new(1, 6);
        let b = Rational::new(1, 3);
        assert_eq!(&a + &b, Rational::new(1, 2));
        assert_eq!(&a * &b, Rational::new(1, 18));
        assert_eq!(&a - &a, Rational::zero());
        assert_eq!(Rational::new(4, -6), Rational::new(-2, 3));
    }

    #[test]
    fn overflow_spills_to_big_and_back() {
        let big = Rational::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
    }

    #[test]
    fn parse_literals() {
        assert_eq!("3/4".parse::<Rational>().unwrap(), Rational::new(3, 4));
        assert_eq!("-12".parse::<Rational>().unwrap(), Rational::from_int(-12));
        assert!(" 6/-3".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
        assert!("1e3".parse::<Rational>().is_err());
        assert_eq!("1/0".parse::<Rational>(), Err(FieldError::DivisionByZero));
        assert_eq!("10/4".parse::<Rational>().unwrap().to_string(), "5/2");
    }

    #[test]
    fn mod_prime_matches_inverse() {
        let p = 1_000_000_007u64;
        let r = Rational::new(3, 7);
        let v = r.mod_prime(p).unwrap();
        assert_eq!(super::super::modp::mul(v, 7, p), 3);
    }
}
