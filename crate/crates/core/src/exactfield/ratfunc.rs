//! Rational functions in canonical form.
//!
//! A nonzero value is stored as `num / den` where
//! - `num` and `den` have integer coefficients whose contents are coprime,
//! - `num` and `den` share no nonunit polynomial factor,
//! - the leading coefficient of `den` is positive,
//! - under trig semantics `den` is an ordinary polynomial without monomial content
//!   in `t1, t2` (such factors are units and live in `num`).
//!
//! Zero is `0 / 1`. Equal functions therefore have identical representations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::gcd::poly_gcd;
use super::mpoly::{Exponent, MPoly, Semantics, Var};
use super::rational::Rational;
use super::FieldError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn zero(sem: Semantics) -> Self {
        RatFunc { num: MPoly::zero(sem), den: MPoly::one(sem) }
    }

    pub fn one(sem: Semantics) -> Self {
        RatFunc { num: MPoly::one(sem), den: MPoly::one(sem) }
    }

    pub fn constant(sem: Semantics, c: &Rational) -> Self {
        Self::from_poly(MPoly::constant(sem, c.clone()))
    }

    pub fn int(sem: Semantics, c: i64) -> Self {
        Self::constant(sem, &Rational::from_int(c))
    }

    pub fn var(sem: Semantics, v: Var) -> Self {
        Self::from_poly(MPoly::var(sem, v))
    }

    pub fn from_poly(p: MPoly) -> Self {
        let sem = p.semantics();
        finish(p, MPoly::one(sem))
    }

    /// `num / den` brought to canonical form.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self, FieldError> {
        if num.semantics() != den.semantics() {
            return Err(FieldError::SemanticsMismatch);
        }
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(reduce(num, den))
    }

    pub fn semantics(&self) -> Semantics {
        self.num.semantics()
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(&n / &d)
    }

    /// Total number of stored terms, a rough size measure.
    pub fn size(&self) -> usize {
        self.num.len() + self.den.len()
    }

    pub fn checked_add(&self, o: &RatFunc) -> Result<RatFunc, FieldError> {
        self.same(o)?;
        Ok(self.add_impl(o, false))
    }

    pub fn checked_sub(&self, o: &RatFunc) -> Result<RatFunc, FieldError> {
        self.same(o)?;
        Ok(self.add_impl(o, true))
    }

    pub fn checked_mul(&self, o: &RatFunc) -> Result<RatFunc, FieldError> {
        self.same(o)?;
        Ok(self.mul_impl(o))
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<RatFunc, FieldError> {
        self.same(o)?;
        Ok(self.mul_impl(&o.inv()?))
    }

    fn same(&self, o: &RatFunc) -> Result<(), FieldError> {
        if self.semantics() == o.semantics() {
            Ok(())
        } else {
            Err(FieldError::SemanticsMismatch)
        }
    }

    fn add_impl(&self, o: &RatFunc, negate: bool) -> RatFunc {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -o } else { o.clone() };
        }
        let onum = if negate { -&o.num } else { o.num.clone() };
        if self.den == o.den {
            let n = &self.num + &onum;
            if self.den.is_constant() {
                return finish(n, self.den.clone());
            }
            return reduce(n, self.den.clone());
        }
        if self.den.is_constant() || o.den.is_constant() {
            // Coprime denominators: only integer content can cancel.
            let n = &(&self.num * &o.den) + &(&onum * &self.den);
            return finish(n, &self.den * &o.den);
        }
        let g = poly_gcd(&self.den, &o.den);
        if g.is_one() {
            let n = &(&self.num * &o.den) + &(&onum * &self.den);
            return finish(n, &self.den * &o.den);
        }
        let da = self.den.div_exact(&g).expect("gcd divides");
        let db = o.den.div_exact(&g).expect("gcd divides");
        let n = &(&self.num * &db) + &(&onum * &da);
        if n.is_zero() {
            return RatFunc::zero(self.semantics());
        }
        let h = poly_gcd(&n, &g);
        let (n, g) = if h.is_one() {
            (n, g)
        } else {
            (n.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides"))
        };
        finish(n, &(&da * &db) * &g)
    }

    fn mul_impl(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero(self.semantics());
        }
        let cancel = |n: &MPoly, d: &MPoly| -> (MPoly, MPoly) {
            if d.is_constant() || n.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = poly_gcd(n, d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).expect("gcd divides"), d.div_exact(&g).expect("gcd divides"))
            }
        };
        let (n1, d2) = cancel(&self.num, &o.den);
        let (n2, d1) = cancel(&o.num, &self.den);
        finish(&n1 * &n2, &d1 * &d2)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.semantics());
        }
        finish(self.num.scale(c), self.den.clone())
    }

    pub fn inv(&self) -> Result<RatFunc, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(finish(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: u32) -> RatFunc {
        // Powers of coprime polynomials stay coprime.
        finish(self.num.pow(n), self.den.pow(n))
    }

    pub fn powi(&self, n: i32) -> Result<RatFunc, FieldError> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inv()?.pow(n.unsigned_abs()))
        }
    }

    /// Ordinary partial derivative in one variable.
    pub fn partial(&self, v: Var) -> RatFunc {
        self.derive(|p| p.partial(v))
    }

    /// Derivative in the flat coordinate `y_i` (`i` is 1 or 2): the Euler operator
    /// `z_i ∂_{z_i}` under trig semantics, `∂_{w_i}` under rational semantics.
    pub fn dy(&self, i: usize) -> RatFunc {
        let v = match i {
            1 => Var::T1,
            2 => Var::T2,
            _ => panic!("coordinate index must be 1 or 2"),
        };
        match self.semantics() {
            Semantics::Trig => self.derive(|p| p.euler(v)),
            Semantics::Rational => self.derive(|p| p.partial(v)),
        }
    }

    fn derive<F: Fn(&MPoly) -> MPoly>(&self, d: F) -> RatFunc {
        let sem = self.semantics();
        if self.is_zero() {
            return self.clone();
        }
        let dn = d(&self.num);
        if self.den.is_constant() {
            return finish(dn, self.den.clone());
        }
        let dd = d(&self.den);
        if dd.is_zero() {
            return reduce(dn, self.den.clone());
        }
        // (n/d)' = (n' (d/g) - n (d'/g)) / (d (d/g)) with g = gcd(d, d').
        let g = poly_gcd(&self.den, &dd);
        let (dg, ddg) = if g.is_one() {
            (self.den.clone(), dd)
        } else {
            (self.den.div_exact(&g).expect("gcd divides"), dd.div_exact(&g).expect("gcd divides"))
        };
        let n = &(&dn * &dg) - &(&self.num * &ddg);
        if n.is_zero() {
            return RatFunc::zero(sem);
        }
        reduce(n, &self.den * &dg)
    }

    /// Substitutes `m = value`; fails if the denominator vanishes identically.
    pub fn substitute_m(&self, value: &Rational) -> Result<RatFunc, FieldError> {
        let d = self.den.substitute_m(value);
        if d.is_zero() {
            return Err(FieldError::Pole);
        }
        Ok(reduce(self.num.substitute_m(value), d))
    }

    /// Exact evaluation at `m = m0`, `t = (t1, t2)`.
    pub fn eval(&self, m0: &Rational, t1: &Rational, t2: &Rational) -> Result<Rational, FieldError> {
        let d = self.den.eval(m0, t1, t2)?;
        if d.is_zero() {
            return Err(FieldError::Pole);
        }
        let n = self.num.eval(m0, t1, t2)?;
        Ok(&n / &d)
    }

    /// Reinterprets the stored polynomials under another semantics.
    pub fn with_semantics(&self, sem: Semantics) -> Result<RatFunc, FieldError> {
        Ok(reduce(self.num.with_semantics(sem)?, self.den.with_semantics(sem)?))
    }
}

/// Full canonicalization including the polynomial gcd.
fn reduce(num: MPoly, den: MPoly) -> RatFunc {
    if num.is_zero() {
        return RatFunc::zero(num.semantics());
    }
    if den.is_constant() || num.is_constant() {
        return finish(num, den);
    }
    let g = poly_gcd(&num, &den);
    if g.is_one() {
        finish(num, den)
    } else {
        finish(num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
    }
}

/// Canonicalization assuming `num` and `den` have no common nonunit factor
/// apart from integer content and, under trig semantics, monomials.
fn finish(num: MPoly, den: MPoly) -> RatFunc {
    let sem = num.semantics();
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        return RatFunc::zero(sem);
    }
    let (mut num, mut den) = (num, den);
    if sem == Semantics::Trig {
        let e = den.min_exponent();
        if e.t1 != 0 || e.t2 != 0 {
            let s = Exponent::new(0, -e.t1, -e.t2);
            num = num.shift(&s);
            den = den.shift(&s);
        }
    }
    if let Some(c) = den.constant_value() {
        if c.is_one() && num_integral_content_free(&num) {
            return RatFunc { num, den };
        }
    }
    let l = num.denominator_lcm().lcm(&den.denominator_lcm());
    if !l.is_one() {
        let s = Rational::from_bigint(l);
        num = num.scale(&s);
        den = den.scale(&s);
    }
    let g: BigInt = num.integer_content().gcd(&den.integer_content());
    let mut s = Rational::from_bigint(g).inv().expect("nonzero content");
    if den.leading_coeff().signum() < 0 {
        s = -s;
    }
    if !s.is_one() {
        num = num.scale(&s);
        den = den.scale(&s);
    }
    RatFunc { num, den }
}

fn num_integral_content_free(p: &MPoly) -> bool {
    p.terms().iter().all(|(_, c)| c.is_integer())
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        self.checked_add(rhs).expect("semantics mismatch in rational-function add")
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self.checked_sub(rhs).expect("semantics mismatch in rational-function sub")
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        self.checked_mul(rhs).expect("semantics mismatch in rational-function mul")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[{}]({})", self.semantics().name(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize) -> RatFunc {
        RatFunc::var(Semantics::Trig, if i == 1 { Var::T1 } else { Var::T2 })
    }

    fn k(n: i64) -> RatFunc {
        RatFunc::int(Semantics::Trig, n)
    }

    #[test]
    fn cancellation_is_canonical() {
        // (z^2 - 1)/(z - 1) == z + 1
        let a = RatFunc::new(
            (&(&z(1) * &z(1)) - &k(1)).num().clone(),
            (&z(1) - &k(1)).num().clone(),
        )
        .unwrap();
        assert_eq!(a, &z(1) + &k(1));
    }

    #[test]
    fn trig_monomials_move_to_numerator() {
        let a = k(1).checked_div(&(&z(1) * &z(2))).unwrap();
        assert!(a.den().is_one());
        assert_eq!(a.num().min_exponent(), Exponent::new(0, -1, -1));
    }

    #[test]
    fn integer_contents_are_coprime() {
        let half = RatFunc::constant(Semantics::Trig, &Rational::new(1, 2));
        let a = (&half * &z(1)).checked_div(&(&z(1) + &k(3))).unwrap();
        let a = a.scale(&Rational::new(4, 6));
        assert_eq!(a.num().integer_content(), BigInt::one());
        assert_eq!(a.den().leading_coeff(), Rational::from_int(3));
    }

    #[test]
    fn euler_derivative_of_coth_like_expression() {
        // f = (z^2+1)/(z^2-1); z d/dz f = -4 z^2 / (z^2-1)^2
        let z2 = &z(1) * &z(1);
        let f = (&z2 + &k(1)).checked_div(&(&z2 - &k(1))).unwrap();
        let expect = (&z2 * &k(-4)).checked_div(&(&z2 - &k(1)).pow(2)).unwrap();
        assert_eq!(f.dy(1), expect);
        assert!(f.dy(2).is_zero());
    }

    #[test]
    fn pole_and_domain_errors() {
        let f = k(1).checked_div(&(&z(1) - &k(2))).unwrap();
        let two = Rational::from_int(2);
        assert_eq!(f.eval(&Rational::zero(), &two, &two), Err(FieldError::Pole));
        let g = k(1).checked_div(&z(1)).unwrap();
        assert_eq!(g.eval(&Rational::zero(), &Rational::zero(), &two), Err(FieldError::Domain));
    }

    #[test]
    fn mixed_semantics_rejected() {
        let a = RatFunc::var(Semantics::Rational, Var::T1);
        assert_eq!(a.checked_add(&z(1)), Err(FieldError::SemanticsMismatch));
    }
}
