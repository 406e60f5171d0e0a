//! Differential operators `Σ a_{ij}(z) ∂_{y1}^i ∂_{y2}^j` with rational-function
//! coefficients, written with coefficients on the left.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::exactfield::{FieldError, RatFunc, Rational, Semantics};

/// Multi-index `(i, j)` standing for `∂_{y1}^i ∂_{y2}^j`.
pub type MultiIndex = (u32, u32);

#[derive(Clone, PartialEq, Eq)]
pub struct DiffOp {
    sem: Semantics,
    terms: BTreeMap<MultiIndex, RatFunc>,
}

fn binom(n: u32, k: u32) -> i64 {
    let mut r: i64 = 1;
    for i in 0..k as i64 {
        r = r * (n as i64 - i) / (i + 1);
    }
    r
}

/// Sums with a balanced reduction tree so operand sizes stay comparable.
fn sum_all(sem: Semantics, mut items: Vec<RatFunc>) -> RatFunc {
    if items.is_empty() {
        return RatFunc::zero(sem);
    }
    while items.len() > 1 {
        items = items
            .par_chunks(2)
            .map(|c| if c.len() == 2 { &c[0] + &c[1] } else { c[0].clone() })
            .collect();
    }
    items.pop().unwrap()
}

impl DiffOp {
    pub fn zero(sem: Semantics) -> Self {
        DiffOp { sem, terms: BTreeMap::new() }
    }

    pub fn identity(sem: Semantics) -> Self {
        Self::multiplication(RatFunc::one(sem))
    }

    /// The operator of multiplication by `f`.
    pub fn multiplication(f: RatFunc) -> Self {
        Self::monomial(f, (0, 0))
    }

    /// `f ∂^α`.
    pub fn monomial(f: RatFunc, alpha: MultiIndex) -> Self {
        let sem = f.semantics();
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(alpha, f);
        }
        DiffOp { sem, terms }
    }

    /// `∂_{y_i}` for `i` in `{1, 2}`.
    pub fn dy(sem: Semantics, i: usize) -> Self {
        let alpha = match i {
            1 => (1, 0),
            2 => (0, 1),
            _ => panic!("coordinate index must be 1 or 2"),
        };
        Self::monomial(RatFunc::one(sem), alpha)
    }

    pub fn from_terms<I>(sem: Semantics, terms: I) -> Result<Self, FieldError>
    where
        I: IntoIterator<Item = (MultiIndex, RatFunc)>,
    {
        let mut op = DiffOp::zero(sem);
        for (alpha, f) in terms {
            if f.semantics() != sem {
                return Err(FieldError::SemanticsMismatch);
            }
            op.add_term(alpha, f);
        }
        Ok(op)
    }

    fn add_term(&mut self, alpha: MultiIndex, f: RatFunc) {
        if f.is_zero() {
            return;
        }
        match self.terms.get(&alpha) {
            None => {
                self.terms.insert(alpha, f);
            }
            Some(old) => {
                let s = old + &f;
                if s.is_zero() {
                    self.terms.remove(&alpha);
                } else {
                    self.terms.insert(alpha, s);
                }
            }
        }
    }

    pub fn semantics(&self) -> Semantics {
        self.sem
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest `|α|` with a nonzero coefficient; `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn coeff(&self, alpha: MultiIndex) -> RatFunc {
        self.terms.get(&alpha).cloned().unwrap_or_else(|| RatFunc::zero(self.sem))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &RatFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The homogeneous part of order exactly `k`.
    pub fn order_part(&self, k: u32) -> DiffOp {
        DiffOp {
            sem: self.sem,
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| i + j == k)
                .map(|(a, f)| (*a, f.clone()))
                .collect(),
        }
    }

    fn same(&self, o: &DiffOp) -> Result<(), FieldError> {
        if self.sem == o.sem {
            Ok(())
        } else {
            Err(FieldError::SemanticsMismatch)
        }
    }

    pub fn checked_add(&self, o: &DiffOp) -> Result<DiffOp, FieldError> {
        self.same(o)?;
        Ok(self.combine(o, false))
    }

    pub fn checked_sub(&self, o: &DiffOp) -> Result<DiffOp, FieldError> {
        self.same(o)?;
        Ok(self.combine(o, true))
    }

    fn combine(&self, o: &DiffOp, negate: bool) -> DiffOp {
        let mut keys: Vec<MultiIndex> = self.terms.keys().chain(o.terms.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        let terms: BTreeMap<MultiIndex, RatFunc> = keys
            .par_iter()
            .filter_map(|k| {
                let v = match (self.terms.get(k), o.terms.get(k)) {
                    (Some(a), Some(b)) => if negate { a - b } else { a + b },
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => if negate { -b } else { b.clone() },
                    (None, None) => unreachable!(),
                };
                (!v.is_zero()).then_some((*k, v))
            })
            .collect();
        DiffOp { sem: self.sem, terms }
    }

    /// `f ∘ self` (left multiplication of every coefficient).
    pub fn left_mul(&self, f: &RatFunc) -> DiffOp {
        assert_eq!(f.semantics(), self.sem, "semantics mismatch");
        let terms = self
            .terms
            .par_iter()
            .map(|(a, c)| (*a, f * c))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        DiffOp { sem: self.sem, terms }
    }

    pub fn scale(&self, c: &Rational) -> DiffOp {
        if c.is_zero() {
            return DiffOp::zero(self.sem);
        }
        DiffOp {
            sem: self.sem,
            terms: self.terms.iter().map(|(a, f)| (*a, f.scale(c))).collect(),
        }
    }

    /// Composition `self ∘ other`.
    pub fn checked_compose(&self, other: &DiffOp) -> Result<DiffOp, FieldError> {
        self.same(other)?;
        Ok(self.compose_impl(other))
    }

    fn compose_impl(&self, other: &DiffOp) -> DiffOp {
        if self.is_zero() || other.is_zero() {
            return DiffOp::zero(self.sem);
        }
        let max1 = self.terms.keys().map(|a| a.0).max().unwrap();
        let max2 = self.terms.keys().map(|a| a.1).max().unwrap();
        // Derivatives ∂^γ b_β for every γ that can occur.
        let derivs: BTreeMap<MultiIndex, BTreeMap<MultiIndex, RatFunc>> = other
            .terms
            .par_iter()
            .map(|(beta, b)| (*beta, derivative_table(b, max1, max2)))
            .collect();
        // a_α C(α,γ) ∂^γ b_β contributes to ∂^{α-γ+β}.
        let mut jobs: Vec<(MultiIndex, &RatFunc, i64, &RatFunc)> = Vec::new();
        for (alpha, a) in &self.terms {
            for (beta, table) in &derivs {
                for g1 in 0..=alpha.0 {
                    for g2 in 0..=alpha.1 {
                        if let Some(db) = table.get(&(g1, g2)) {
                            let c = binom(alpha.0, g1) * binom(alpha.1, g2);
                            let key = (alpha.0 - g1 + beta.0, alpha.1 - g2 + beta.1);
                            jobs.push((key, a, c, db));
                        }
                    }
                }
            }
        }
        let products: Vec<(MultiIndex, RatFunc)> = jobs
            .par_iter()
            .map(|(key, a, c, db)| {
                let p = *a * *db;
                let p = if *c == 1 { p } else { p.scale(&Rational::from_int(*c)) };
                (*key, p)
            })
            .collect();
        let mut grouped: BTreeMap<MultiIndex, Vec<RatFunc>> = BTreeMap::new();
        for (k, p) in products {
            if !p.is_zero() {
                grouped.entry(k).or_default().push(p);
            }
        }
        let sem = self.sem;
        let terms = grouped
            .into_par_iter()
            .map(|(k, v)| (k, sum_all(sem, v)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        DiffOp { sem, terms }
    }

    /// `[self, other] = self ∘ other - other ∘ self`.
    pub fn commutator(&self, other: &DiffOp) -> Result<DiffOp, FieldError> {
        self.same(other)?;
        let (ab, ba) = rayon::join(|| self.compose_impl(other), || other.compose_impl(self));
        Ok(ab.combine(&ba, true))
    }

    /// Formal adjoint with respect to `dy1 dy2`: `(a ∂^α)* = (-1)^{|α|} ∂^α ∘ a`.
    pub fn adjoint(&self) -> DiffOp {
        let pieces: Vec<(MultiIndex, RatFunc)> = self
            .terms
            .par_iter()
            .flat_map_iter(|(alpha, a)| {
                let table = derivative_table(a, alpha.0, alpha.1);
                let sign = if (alpha.0 + alpha.1) % 2 == 0 { 1 } else { -1 };
                let mut out = Vec::new();
                for g1 in 0..=alpha.0 {
                    for g2 in 0..=alpha.1 {
                        if let Some(da) = table.get(&(g1, g2)) {
                            let c = sign * binom(alpha.0, g1) * binom(alpha.1, g2);
                            out.push(((alpha.0 - g1, alpha.1 - g2), da.scale(&Rational::from_int(c))));
                        }
                    }
                }
                out
            })
            .collect();
        let mut grouped: BTreeMap<MultiIndex, Vec<RatFunc>> = BTreeMap::new();
        for (k, p) in pieces {
            grouped.entry(k).or_default().push(p);
        }
        let sem = self.sem;
        let terms = grouped
            .into_par_iter()
            .map(|(k, v)| (k, sum_all(sem, v)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        DiffOp { sem, terms }
    }

    /// Applies the operator to a function.
    pub fn apply(&self, f: &RatFunc) -> Result<RatFunc, FieldError> {
        if f.semantics() != self.sem {
            return Err(FieldError::SemanticsMismatch);
        }
        let max1 = self.terms.keys().map(|a| a.0).max().unwrap_or(0);
        let max2 = self.terms.keys().map(|a| a.1).max().unwrap_or(0);
        let table = derivative_table(f, max1, max2);
        let parts: Vec<RatFunc> = self
            .terms
            .par_iter()
            .filter_map(|(alpha, a)| table.get(alpha).map(|d| a * d))
            .collect();
        Ok(sum_all(self.sem, parts))
    }

    /// Substitutes a value for `m` in every coefficient.
    pub fn substitute_m(&self, value: &Rational) -> Result<DiffOp, FieldError> {
        let mut terms = BTreeMap::new();
        for (a, f) in &self.terms {
            let v = f.substitute_m(value)?;
            if !v.is_zero() {
                terms.insert(*a, v);
            }
        }
        Ok(DiffOp { sem: self.sem, terms })
    }

    /// Total stored size of all coefficients.
    pub fn size(&self) -> usize {
        self.terms.values().map(|f| f.size()).sum()
    }
}

/// `∂^γ f` for all `γ ≤ (max1, max2)`, zero entries omitted.
fn derivative_table(f: &RatFunc, max1: u32, max2: u32) -> BTreeMap<MultiIndex, RatFunc> {
    let mut out = BTreeMap::new();
    let mut row = f.clone();
    for i in 0..=max1 {
        let mut cur = row.clone();
        for j in 0..=max2 {
            if cur.is_zero() {
                break;
            }
            out.insert((i, j), cur.clone());
            if j < max2 {
                cur = cur.dy(2);
            }
        }
        if i < max1 {
            row = row.dy(1);
            if row.is_zero() {
                break;
            }
        }
    }
    out
}

impl std::ops::Add for &DiffOp {
    type Output = DiffOp;
    fn add(self, rhs: &DiffOp) -> DiffOp {
        self.checked_add(rhs).expect("semantics mismatch in operator add")
    }
}

impl std::ops::Sub for &DiffOp {
    type Output = DiffOp;
    fn sub(self, rhs: &DiffOp) -> DiffOp {
        self.checked_sub(rhs).expect("semantics mismatch in operator sub")
    }
}

/// Composition.
impl std::ops::Mul for &DiffOp {
    type Output = DiffOp;
    fn mul(self, rhs: &DiffOp) -> DiffOp {
        self.checked_compose(rhs).expect("semantics mismatch in operator composition")
    }
}

impl std::ops::Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        DiffOp {
            sem: self.sem,
            terms: self.terms.iter().map(|(a, f)| (*a, -f)).collect(),
        }
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "DiffOp[{}](0)", self.sem.name());
        }
        write!(f, "DiffOp[{}](", self.sem.name())?;
        for (n, ((i, j), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}] d1^{i} d2^{j}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Var;

    const T: Semantics = Semantics::Trig;

    fn z1() -> RatFunc {
        RatFunc::var(T, Var::T1)
    }

    #[test]
    fn derivative_commutes_with_multiplication_up_to_its_derivative() {
        // [∂1, f] = ∂1 f
        let f = z1().checked_div(&(&z1() + &RatFunc::int(T, 1))).unwrap();
        let d = DiffOp::dy(T, 1);
        let mf = DiffOp::multiplication(f.clone());
        let c = d.commutator(&mf).unwrap();
        assert_eq!(c, DiffOp::multiplication(f.dy(1)));
    }

    #[test]
    fn adjoint_of_first_order() {
        // (f ∂1)* = -∂1 ∘ f = -f ∂1 - f'
        let f = z1();
        let op = DiffOp::monomial(f.clone(), (1, 0));
        let expect = &DiffOp::monomial(-&f, (1, 0)) - &DiffOp::multiplication(f.dy(1));
        assert_eq!(op.adjoint(), expect);
        assert_eq!(op.adjoint().adjoint(), op);
    }

    #[test]
    fn order_is_none_for_zero() {
        assert_eq!(DiffOp::zero(T).order(), None);
        assert_eq!(DiffOp::identity(T).order(), Some(0));
        let l = &DiffOp::dy(T, 1) * &DiffOp::dy(T, 2);
        assert_eq!(l.order(), Some(2));
        assert_eq!(l.coeff((1, 1)), RatFunc::one(T));
    }

    #[test]
    fn apply_matches_composition_on_functions() {
        let f = z1().checked_div(&(&z1() - &RatFunc::int(T, 2))).unwrap();
        let g = &(&z1() * &z1()) + &RatFunc::var(T, Var::T2);
        let l = &DiffOp::monomial(f.clone(), (2, 1)) + &DiffOp::dy(T, 2);
        let lhs = l.apply(&g).unwrap();
        let rhs = &(&f * &g.dy(1).dy(1).dy(2)) + &g.dy(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_semantics_rejected() {
        let a = DiffOp::dy(Semantics::Trig, 1);
        let b = DiffOp::dy(Semantics::Rational, 1);
        assert_eq!(a.checked_compose(&b), Err(FieldError::SemanticsMismatch));
    }
}
