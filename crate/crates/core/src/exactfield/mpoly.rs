//! Sparse polynomials in `m, t1, t2` with rational coefficients.
//!
//! Under [`Semantics::Trig`] the `t` variables stand for `z_i = e^{y_i}` and may carry
//! negative exponents (Laurent polynomials); under [`Semantics::Rational`] they are
//! the ordinary coordinates `w_i` and exponents are nonnegative. `m` is always an
//! ordinary polynomial variable.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::FieldError;

/// Meaning of the two geometric variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semantics {
    /// `t_i = z_i = e^{y_i}`, Laurent.
    Trig,
    /// `t_i = w_i`, ordinary.
    Rational,
}

impl Semantics {
    pub fn name(self) -> &'static str {
        match self {
            Semantics::Trig => "trig",
            Semantics::Rational => "rational",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    M,
    T1,
    T2,
}

/// Exponent vector `m^m t1^t1 t2^t2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Exponent {
    pub m: i32,
    pub t1: i32,
    pub t2: i32,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent { m: 0, t1: 0, t2: 0 };

    pub fn new(m: i32, t1: i32, t2: i32) -> Self {
        Exponent { m, t1, t2 }
    }

    pub fn total(&self) -> i32 {
        self.m + self.t1 + self.t2
    }

    pub fn get(&self, v: Var) -> i32 {
        match v {
            Var::M => self.m,
            Var::T1 => self.t1,
            Var::T2 => self.t2,
        }
    }

    fn set(&mut self, v: Var, e: i32) {
        match v {
            Var::M => self.m = e,
            Var::T1 => self.t1 = e,
            Var::T2 => self.t2 = e,
        }
    }

    pub fn plus(&self, o: &Exponent) -> Exponent {
        Exponent::new(self.m + o.m, self.t1 + o.t1, self.t2 + o.t2)
    }

    pub fn minus(&self, o: &Exponent) -> Exponent {
        Exponent::new(self.m - o.m, self.t1 - o.t1, self.t2 - o.t2)
    }

    fn meet(&self, o: &Exponent) -> Exponent {
        Exponent::new(self.m.min(o.m), self.t1.min(o.t1), self.t2.min(o.t2))
    }
}

/// Graded lexicographic order with `m < t1 < t2`.
impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.t2.cmp(&other.t2))
            .then(self.t1.cmp(&other.t1))
            .then(self.m.cmp(&other.m))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial; terms strictly increasing in the canonical order,
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    sem: Semantics,
    terms: Vec<(Exponent, Rational)>,
}

impl MPoly {
    pub fn zero(sem: Semantics) -> Self {
        MPoly { sem, terms: Vec::new() }
    }

    pub fn one(sem: Semantics) -> Self {
        Self::constant(sem, Rational::one())
    }

    pub fn constant(sem: Semantics, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero(sem)
        } else {
            MPoly { sem, terms: vec![(Exponent::ZERO, c)] }
        }
    }

    pub fn int(sem: Semantics, c: i64) -> Self {
        Self::constant(sem, Rational::from_int(c))
    }

    /// `c * m^e.m t1^e.t1 t2^e.t2`.
    pub fn monomial(sem: Semantics, e: Exponent, c: Rational) -> Result<Self, FieldError> {
        check_exponent(sem, &e)?;
        if c.is_zero() {
            return Ok(Self::zero(sem));
        }
        Ok(MPoly { sem, terms: vec![(e, c)] })
    }

    pub fn var(sem: Semantics, v: Var) -> Self {
        let mut e = Exponent::ZERO;
        e.set(v, 1);
        MPoly { sem, terms: vec![(e, Rational::one())] }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(sem: Semantics, terms: I) -> Result<Self, FieldError>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut acc: HashMap<Exponent, Rational> = HashMap::new();
        for (e, c) in terms {
            check_exponent(sem, &e)?;
            if c.is_zero() {
                continue;
            }
            acc.entry(e)
                .and_modify(|x| *x += &c)
                .or_insert(c);
        }
        Ok(Self::from_map(sem, acc))
    }

    fn from_map(sem: Semantics, acc: HashMap<Exponent, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        MPoly { sem, terms }
    }

    /// Internal constructor for term lists already known to be sorted and nonzero.
    pub(crate) fn from_sorted(sem: Semantics, terms: Vec<(Exponent, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        MPoly { sem, terms }
    }

    pub fn semantics(&self) -> Semantics {
        self.sem
    }

    pub fn terms(&self) -> &[(Exponent, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Exponent::ZERO)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Exponent::ZERO && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(e, c)] if *e == Exponent::ZERO => Some(c.clone()),
            _ => None,
        }
    }

    /// Leading term under the canonical order.
    pub fn leading(&self) -> Option<&(Exponent, Rational)> {
        self.terms.last()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn degree(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(e, _)| e.get(v)).max()
    }

    pub fn min_degree(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(e, _)| e.get(v)).min()
    }

    /// Componentwise minimum exponent (the monomial content); zero for the zero polynomial.
    pub fn min_exponent(&self) -> Exponent {
        let mut it = self.terms.iter();
        match it.next() {
            None => Exponent::ZERO,
            Some((e0, _)) => it.fold(*e0, |acc, (e, _)| acc.meet(e)),
        }
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.iter().any(|(e, _)| e.t1 < 0 || e.t2 < 0)
    }

    fn require_same(&self, other: &MPoly) -> Result<(), FieldError> {
        if self.sem != other.sem {
            Err(FieldError::SemanticsMismatch)
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly, FieldError> {
        self.require_same(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly, FieldError> {
        self.require_same(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly, FieldError> {
        self.require_same(other)?;
        Ok(self.mul_impl(other))
    }

    fn merge(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MPoly { sem: self.sem, terms: out }
    }

    fn mul_impl(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(self.sem);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Exponent, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(ea.plus(eb)) {
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += &c;
                    }
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                }
            }
        }
        MPoly::from_map(self.sem, acc)
    }

    /// Multiplies by the single term `c * x^e` (order preserving).
    pub fn mul_term(&self, e: &Exponent, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.sem);
        }
        let terms = self.terms.iter().map(|(ea, ca)| (ea.plus(e), ca * c)).collect();
        MPoly { sem: self.sem, terms }
    }

    /// Shifts every exponent by `e` (multiplication by a monomial).
    pub fn shift(&self, e: &Exponent) -> MPoly {
        let terms = self.terms.iter().map(|(ea, ca)| (ea.plus(e), ca.clone())).collect();
        MPoly { sem: self.sem, terms }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.sem);
        }
        if c.is_one() {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(e, x)| (*e, x * c)).collect();
        MPoly { sem: self.sem, terms }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::one(self.sem);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to one variable.
    pub fn partial(&self, v: Var) -> MPoly {
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter(|(e, _)| e.get(v) != 0)
            .map(|(e, c)| {
                let k = e.get(v);
                let mut ne = *e;
                ne.set(v, k - 1);
                (ne, c * &Rational::from_int(k as i64))
            })
            .collect();
        let mut acc = HashMap::new();
        for (e, c) in terms {
            acc.insert(e, c);
        }
        MPoly::from_map(self.sem, acc)
    }

    /// The Euler operator `t ∂_t`: scales each term by its exponent in `v`.
    pub fn euler(&self, v: Var) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.get(v) != 0)
            .map(|(e, c)| (*e, c * &Rational::from_int(e.get(v) as i64)))
            .collect();
        MPoly { sem: self.sem, terms }
    }

    /// Substitutes `m = value`.
    pub fn substitute_m(&self, value: &Rational) -> MPoly {
        if self.degree(Var::M).unwrap_or(0) == 0 {
            return self.clone();
        }
        let mut acc: HashMap<Exponent, Rational> = HashMap::new();
        for (e, c) in &self.terms {
            let mut ne = *e;
            ne.m = 0;
            let v = c * &value.pow(e.m as u32);
            if v.is_zero() {
                continue;
            }
            acc.entry(ne).and_modify(|x| *x += &v).or_insert(v);
        }
        MPoly::from_map(self.sem, acc)
    }

    /// Exact evaluation at `m = m0, t = (t1, t2)`.
    pub fn eval(&self, m0: &Rational, t1: &Rational, t2: &Rational) -> Result<Rational, FieldError> {
        let mut acc = Rational::zero();
        let mut cache: HashMap<(u8, i32), Rational> = HashMap::new();
        let mut power = |which: u8, base: &Rational, e: i32| -> Result<Rational, FieldError> {
            if let Some(v) = cache.get(&(which, e)) {
                return Ok(v.clone());
            }
            let v = base.powi(e).map_err(|_| FieldError::Domain)?;
            cache.insert((which, e), v.clone());
            Ok(v)
        };
        for (e, c) in &self.terms {
            let mut v = c.clone();
            if e.m != 0 {
                v = &v * &power(0, m0, e.m)?;
            }
            if e.t1 != 0 {
                v = &v * &power(1, t1, e.t1)?;
            }
            if e.t2 != 0 {
                v = &v * &power(2, t2, e.t2)?;
            }
            acc += &v;
        }
        Ok(acc)
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            if !c.is_integer() {
                l = l.lcm(&c.denom());
            }
        }
        l
    }

    /// Gcd of the integer coefficients (assumes integer coefficients), positive.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(&c.numer());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Scales to integer coefficients with unit content and positive leading coefficient.
    pub fn primitive_integer(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.denominator_lcm();
        let p = if l.is_one() { self.clone() } else { self.scale(&Rational::from_bigint(l)) };
        let g = p.integer_content();
        let mut s = Rational::from_bigint(g).inv().expect("nonzero content");
        if p.leading_coeff().signum() < 0 {
            s = -s;
        }
        p.scale(&s)
    }

    /// Exact division; `None` when `d` does not divide `self` in the polynomial ring
    /// of this semantics (Laurent in `t` for trig semantics).
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(self.clone());
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.inv().ok()?));
        }
        if d.terms.len() == 1 {
            let (e, c) = &d.terms[0];
            let inv_c = c.inv().ok()?;
            let neg = Exponent::new(-e.m, -e.t1, -e.t2);
            let out = self.mul_term(&neg, &inv_c);
            if out.terms.iter().any(|(x, _)| check_exponent(self.sem, x).is_err()) {
                return None;
            }
            return Some(out);
        }
        let (lt_e, lt_c) = d.leading().unwrap().clone();
        let lt_inv = lt_c.inv().ok()?;
        let low = self.terms[0].0.minus(&d.terms[0].0);
        let mut rem: BTreeMap<Exponent, Rational> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Exponent, Rational)> = Vec::new();
        while let Some((&re, rc)) = rem.iter().next_back() {
            let qe = re.minus(&lt_e);
            if qe < low || check_exponent(self.sem, &qe).is_err() {
                return None;
            }
            let qc = rc * &lt_inv;
            for (de, dc) in &d.terms {
                let key = de.plus(&qe);
                let delta = dc * &qc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let v = o.get() - &delta;
                        if v.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = v;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                }
            }
            quot.push((qe, qc));
        }
        quot.reverse();
        Some(MPoly { sem: self.sem, terms: quot })
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `v` (index = degree);
    /// requires nonnegative exponents in `v`.
    pub fn to_univariate(&self, v: Var) -> Vec<MPoly> {
        let deg = self.degree(v).unwrap_or(-1);
        assert!(self.min_degree(v).unwrap_or(0) >= 0);
        let mut buckets: Vec<Vec<(Exponent, Rational)>> = vec![Vec::new(); (deg + 1).max(0) as usize];
        for (e, c) in &self.terms {
            let k = e.get(v);
            let mut ne = *e;
            ne.set(v, 0);
            buckets[k as usize].push((ne, c.clone()));
        }
        buckets.into_iter().map(|t| MPoly::from_sorted(self.sem, t)).collect()
    }

    pub fn from_univariate(sem: Semantics, v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut acc = MPoly::zero(sem);
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = Exponent::ZERO;
            e.set(v, k as i32);
            acc = &acc + &c.shift(&e);
        }
        acc
    }

    /// The same terms reinterpreted under another semantics.
    pub fn with_semantics(&self, sem: Semantics) -> Result<MPoly, FieldError> {
        for (e, _) in &self.terms {
            check_exponent(sem, e)?;
        }
        Ok(MPoly { sem, terms: self.terms.clone() })
    }

    pub fn max_coeff_bits(&self) -> u64 {
        self.terms
            .iter()
            .map(|(_, c)| c.numer().abs().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

pub(crate) fn check_exponent(sem: Semantics, e: &Exponent) -> Result<(), FieldError> {
    if e.m < 0 {
        return Err(FieldError::NegativeExponent);
    }
    if sem == Semantics::Rational && (e.t1 < 0 || e.t2 < 0) {
        return Err(FieldError::NegativeExponent);
    }
    Ok(())
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        self.checked_add(rhs).expect("semantics mismatch in polynomial add")
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        self.checked_sub(rhs).expect("semantics mismatch in polynomial sub")
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        self.checked_mul(rhs).expect("semantics mismatch in polynomial mul")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            sem: self.sem,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let (n1, n2) = match self.sem {
            Semantics::Trig => ("z1", "z2"),
            Semantics::Rational => ("w1", "w2"),
        };
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.signum() < 0;
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            let mut parts: Vec<String> = Vec::new();
            for (name, k) in [("m", e.m), (n1, e.t1), (n2, e.t2)] {
                match k {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{k}")),
                }
            }
            if parts.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", parts.join("*"))?;
            } else {
                write!(f, "{a}*{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.sem.name(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z1() -> MPoly {
        MPoly::var(Semantics::Trig, Var::T1)
    }

    fn zinv() -> MPoly {
        MPoly::monomial(Semantics::Trig, Exponent::new(0, -1, 0), Rational::one()).unwrap()
    }

    #[test]
    fn add_cancels_to_monomial() {
        let one = MPoly::one(Semantics::Trig);
        let p = &(&z1() * &z1()) - &one;
        assert_eq!(&p + &one, &z1() * &z1());
    }

    #[test]
    fn mul_by_zero_annihilates() {
        let p = &z1() + &MPoly::int(Semantics::Trig, 3);
        assert!((&p * &MPoly::zero(Semantics::Trig)).is_zero());
    }

    #[test]
    fn laurent_difference_of_squares() {
        // (z - 1/z)(z + 1/z) = z^2 - z^-2, checked against a brute-force term product
        let a = &z1() - &zinv();
        let b = &z1() + &zinv();
        let prod = &a * &b;
        let mut brute: HashMap<Exponent, Rational> = HashMap::new();
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                let c = ca * cb;
                brute.entry(ea.plus(eb)).and_modify(|x| *x += &c).or_insert(c);
            }
        }
        let expect = MPoly::from_terms(Semantics::Trig, brute).unwrap();
        assert_eq!(prod, expect);
        assert_eq!(prod.len(), 2);
        assert_eq!(prod.degree(Var::T1), Some(2));
        assert_eq!(prod.min_degree(Var::T1), Some(-2));
    }

    #[test]
    fn mixed_semantics_is_usage_error() {
        let a = MPoly::var(Semantics::Trig, Var::T1);
        let b = MPoly::var(Semantics::Rational, Var::T1);
        assert_eq!(a.checked_add(&b), Err(FieldError::SemanticsMismatch));
        assert_eq!(a.checked_mul(&b), Err(FieldError::SemanticsMismatch));
    }

    #[test]
    fn rational_semantics_rejects_negative_exponents() {
        let r = MPoly::monomial(Semantics::Rational, Exponent::new(0, -1, 0), Rational::one());
        assert_eq!(r, Err(FieldError::NegativeExponent));
    }

    #[test]
    fn exact_division_and_failure() {
        let x = MPoly::var(Semantics::Rational, Var::T1);
        let y = MPoly::var(Semantics::Rational, Var::T2);
        let one = MPoly::one(Semantics::Rational);
        let a = &(&x + &y) * &(&x - &one);
        assert_eq!(a.div_exact(&(&x + &y)), Some(&x - &one));
        assert_eq!(a.div_exact(&(&x + &one)), None);
        // Laurent: z^2 - z^-2 divided by z - z^-1
        let p = &(&z1() - &zinv()) * &(&z1() + &zinv());
        assert_eq!(p.div_exact(&(&z1() - &zinv())), Some(&z1() + &zinv()));
        assert_eq!(p.div_exact(&(&z1() - &MPoly::int(Semantics::Trig, 2))), None);
    }

    #[test]
    fn euler_operator_is_eigen_on_monomials() {
        let p = MPoly::monomial(Semantics::Trig, Exponent::new(1, -3, 2), Rational::new(1, 2)).unwrap();
        assert_eq!(p.euler(Var::T1), p.scale(&Rational::from_int(-3)));
        assert_eq!(p.euler(Var::T2), p.scale(&Rational::from_int(2)));
    }

    #[test]
    fn evaluation_domain_error_at_zero() {
        assert_eq!(
            zinv().eval(&Rational::zero(), &Rational::zero(), &Rational::one()),
            Err(FieldError::Domain)
        );
    }
}
