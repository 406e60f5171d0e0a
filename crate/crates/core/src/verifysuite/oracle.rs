//! Operator expressions and an evaluation oracle that never normal-orders.
//!
//! The oracle applies an expression tree to a test function by working with
//! truncated Taylor jets at a rational point: `z_i = z0_i e^{s_i}` in trig
//! semantics and `w_i = w0_i + s_i` in rational semantics, so `∂_{y_i} = ∂_{s_i}`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactfield::{Exponent, FieldError, MPoly, RatFunc, Rational, Semantics};
use crate::weylops::DiffOp;

/// An unevaluated operator expression.
#[derive(Clone, Debug)]
pub enum OpExpr {
    Leaf(DiffOp),
    Mul(RatFunc),
    /// Formal adjoint of a normal-ordered operator, kept unexpanded.
    Adjoint(DiffOp),
    Sum(Vec<OpExpr>),
    /// `Compose([a, b, c])` is `a ∘ b ∘ c`.
    Compose(Vec<OpExpr>),
    Scale(Rational, Box<OpExpr>),
    /// `a ∘ b − b ∘ a`, each side normalized once.
    Commutator(Box<OpExpr>, Box<OpExpr>),
}

impl OpExpr {
    pub fn leaf(op: &DiffOp) -> Self {
        OpExpr::Leaf(op.clone())
    }

    pub fn mul(f: RatFunc) -> Self {
        OpExpr::Mul(f)
    }

    pub fn scale(self, c: i64) -> Self {
        OpExpr::Scale(Rational::from_int(c), Box::new(self))
    }

    pub fn scale_q(self, c: Rational) -> Self {
        OpExpr::Scale(c, Box::new(self))
    }

    pub fn neg(self) -> Self {
        self.scale(-1)
    }

    pub fn sub(self, other: OpExpr) -> Self {
        OpExpr::Sum(vec![self, other.neg()])
    }

    pub fn commutator(a: OpExpr, b: OpExpr) -> Self {
        OpExpr::Commutator(Box::new(a), Box::new(b))
    }

    pub fn zero() -> Self {
        OpExpr::Sum(Vec::new())
    }

    /// Upper bound for the order of the expression.
    pub fn max_order(&self) -> u32 {
        match self {
            OpExpr::Leaf(op) | OpExpr::Adjoint(op) => op.order().unwrap_or(0),
            OpExpr::Mul(_) => 0,
            OpExpr::Sum(v) => v.iter().map(|e| e.max_order()).max().unwrap_or(0),
            OpExpr::Compose(v) => v.iter().map(|e| e.max_order()).sum(),
            OpExpr::Scale(_, e) => e.max_order(),
            OpExpr::Commutator(a, b) => a.max_order() + b.max_order(),
        }
    }

    /// Normal-ordered form.
    pub fn normalize(&self, sem: Semantics) -> Result<DiffOp, FieldError> {
        Ok(match self {
            OpExpr::Leaf(op) => op.clone(),
            OpExpr::Adjoint(op) => op.adjoint(),
            OpExpr::Mul(f) => DiffOp::multiplication(f.clone()),
            OpExpr::Sum(v) => {
                let mut acc = DiffOp::zero(sem);
                for e in v {
                    acc = acc.checked_add(&e.normalize(sem)?)?;
                }
                acc
            }
            OpExpr::Compose(v) => {
                let mut acc: Option<DiffOp> = None;
                for e in v {
                    let n = e.normalize(sem)?;
                    acc = Some(match acc {
                        None => n,
                        Some(a) => a.checked_compose(&n)?,
                    });
                }
                acc.unwrap_or_else(|| DiffOp::identity(sem))
            }
            OpExpr::Scale(c, e) => e.normalize(sem)?.scale(c),
            OpExpr::Commutator(a, b) => {
                let (x, y) = rayon::join(|| a.normalize(sem), || b.normalize(sem));
                x?.commutator(&y?)?
            }
        })
    }
}

/// Truncated bivariate power series in `(s1, s2)` of total degree `≤ n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    n: usize,
    c: Vec<Rational>,
}

fn idx(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + j
}

impl Jet {
    pub fn zero(n: usize) -> Self {
        Jet { n, c: vec![Rational::zero(); (n + 1) * (n + 2) / 2] }
    }

    pub fn constant(n: usize, r: Rational) -> Self {
        let mut j = Jet::zero(n);
        j.c[0] = r;
        j
    }

    pub fn value(&self) -> &Rational {
        &self.c[0]
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        &self.c[idx(i, j)]
    }

    fn outer(n: usize, a: &[Rational], b: &[Rational], k: &Rational) -> Self {
        let mut out = Jet::zero(n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let kx = k * x;
            for (j, y) in b.iter().enumerate().take(n + 1 - i) {
                if !y.is_zero() {
                    out.c[idx(i, j)] = &kx * y;
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Jet) -> Jet {
        Jet { n: self.n, c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, k: &Rational) -> Jet {
        Jet { n: self.n, c: self.c.iter().map(|a| a * k).collect() }
    }

    pub fn mul(&self, o: &Jet) -> Jet {
        let n = self.n;
        let mut out = Jet::zero(n);
        for d1 in 0..=n {
            for j1 in 0..=d1 {
                let a = &self.c[idx(d1 - j1, j1)];
                if a.is_zero() {
                    continue;
                }
                for d2 in 0..=(n - d1) {
                    for j2 in 0..=d2 {
                        let b = &o.c[idx(d2 - j2, j2)];
                        if !b.is_zero() {
                            let k = idx(d1 - j1 + d2 - j2, j1 + j2);
                            out.c[k] = &out.c[k] + &(a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn inv(&self) -> Result<Jet, FieldError> {
        let a0 = self.c[0].inv().map_err(|_| FieldError::Pole)?;
        let n = self.n;
        let mut out = Jet::zero(n);
        out.c[0] = a0.clone();
        for d in 1..=n {
            for j in 0..=d {
                let i = d - j;
                let mut s = Rational::zero();
                for i1 in 0..=i {
                    for j1 in 0..=j {
                        if i1 + j1 == 0 {
                            continue;
                        }
                        let a = &self.c[idx(i1, j1)];
                        if !a.is_zero() {
                            s = &s + &(a * &out.c[idx(i - i1, j - j1)]);
                        }
                    }
                }
                out.c[idx(i, j)] = -&(&s * &a0);
            }
        }
        Ok(out)
    }

    /// `∂_{s_var}`; the top-degree coefficients become zero.
    pub fn deriv(&self, var: usize) -> Jet {
        let n = self.n;
        let mut out = Jet::zero(n);
        for d in 0..n {
            for j in 0..=d {
                let i = d - j;
                let (src, k) = if var == 1 { (idx(i + 1, j), i + 1) } else { (idx(i, j + 1), j + 1) };
                out.c[idx(i, j)] = &self.c[src] * &Rational::from_int(k as i64);
            }
        }
        out
    }

    pub fn deriv_multi(&self, a: u32, b: u32) -> Jet {
        let mut j = self.clone();
        for _ in 0..a {
            j = j.deriv(1);
        }
        for _ in 0..b {
            j = j.deriv(2);
        }
        j
    }
}

/// A rational evaluation point.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    pub m: Rational,
    pub z1: Rational,
    pub z2: Rational,
}

fn series_1d(sem: Semantics, z0: &Rational, e: i32, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    match sem {
        Semantics::Trig => {
            // z0^e · exp(e s)
            let mut term = z0.powi(e).expect("nonzero point");
            let ee = Rational::from_int(e as i64);
            for k in 0..=n {
                out.push(term.clone());
                term = &(&term * &ee) / &Rational::from_int(k as i64 + 1);
            }
        }
        Semantics::Rational => {
            // (z0 + s)^e, e ≥ 0
            let mut binom = Rational::one();
            for k in 0..=n {
                if k as i32 > e {
                    out.push(Rational::zero());
                    continue;
                }
                out.push(&binom * &z0.pow((e - k as i32) as u32));
                binom = &(&binom * &Rational::from_int((e - k as i32) as i64)) / &Rational::from_int(k as i64 + 1);
            }
        }
    }
    out
}

/// Jet of a polynomial at a point.
pub fn poly_jet(p: &MPoly, pt: &Point, n: usize) -> Jet {
    let mut grouped: HashMap<(i32, i32), Rational> = HashMap::new();
    for (e, c) in p.terms() {
        let k = c * &pt.m.pow(e.m as u32);
        let slot = grouped.entry((e.t1, e.t2)).or_insert_with(Rational::zero);
        *slot = &*slot + &k;
    }
    let mut out = Jet::zero(n);
    for ((t1, t2), k) in grouped {
        if k.is_zero() {
            continue;
        }
        let a = series_1d(p.semantics(), &pt.z1, t1, n);
        let b = series_1d(p.semantics(), &pt.z2, t2, n);
        out = out.add(&Jet::outer(n, &a, &b, &k));
    }
    out
}

/// Jet of a rational function; fails at a pole.
pub fn ratfunc_jet(f: &RatFunc, pt: &Point, n: usize) -> Result<Jet, FieldError> {
    let num = poly_jet(f.num(), pt, n);
    let den = poly_jet(f.den(), pt, n);
    Ok(num.mul(&den.inv()?))
}

/// Applies expression trees to jets, caching coefficient jets per point.
pub struct JetEvaluator<'a> {
    pt: &'a Point,
    n: usize,
    cache: HashMap<*const RatFunc, Jet>,
}

impl<'a> JetEvaluator<'a> {
    pub fn new(pt: &'a Point, n: usize) -> Self {
        JetEvaluator { pt, n, cache: HashMap::new() }
    }

    fn coeff(&mut self, f: &RatFunc) -> Result<Jet, FieldError> {
        let key = f as *const RatFunc;
        if let Some(j) = self.cache.get(&key) {
            return Ok(j.clone());
        }
        let j = ratfunc_jet(f, self.pt, self.n)?;
        self.cache.insert(key, j.clone());
        Ok(j)
    }

    pub fn apply(&mut self, e: &OpExpr, phi: &Jet) -> Result<Jet, FieldError> {
        Ok(match e {
            OpExpr::Leaf(op) => {
                let mut acc = Jet::zero(self.n);
                for ((a, b), c) in op.terms() {
                    let cj = self.coeff(c)?;
                    acc = acc.add(&cj.mul(&phi.deriv_multi(*a, *b)));
                }
                acc
            }
            OpExpr::Adjoint(op) => {
                let mut acc = Jet::zero(self.n);
                for ((a, b), c) in op.terms() {
                    let cj = self.coeff(c)?;
                    let t = cj.mul(phi).deriv_multi(*a, *b);
                    let t = if (a + b) % 2 == 1 { t.scale(&Rational::from_int(-1)) } else { t };
                    acc = acc.add(&t);
                }
                acc
            }
            OpExpr::Mul(f) => self.coeff(f)?.mul(phi),
            OpExpr::Sum(v) => {
                let mut acc = Jet::zero(self.n);
                for x in v {
                    acc = acc.add(&self.apply(x, phi)?);
                }
                acc
            }
            OpExpr::Compose(v) => {
                let mut cur = phi.clone();
                for x in v.iter().rev() {
                    cur = self.apply(x, &cur)?;
                }
                cur
            }
            OpExpr::Scale(c, x) => self.apply(x, phi)?.scale(c),
            OpExpr::Commutator(a, b) => {
                let bphi = self.apply(b, phi)?;
                let ab = self.apply(a, &bphi)?;
                let aphi = self.apply(a, phi)?;
                let ba = self.apply(b, &aphi)?;
                ab.add(&ba.scale(&Rational::from_int(-1)))
            }
        })
    }
}

/// Result of comparing two expressions by evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOutcome {
    pub equal: bool,
    pub comparisons: usize,
}

/// Number of test monomials and evaluation points.
pub const ORACLE_MONOMIALS: usize = 10;
pub const ORACLE_POINTS: usize = 3;

fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    loop {
        let r = Rational::new(rng.gen_range(lo..=hi), rng.gen_range(1..=7));
        if !r.is_zero() {
            return r;
        }
    }
}

/// Applies both sides to random Laurent monomials at random non-pole points.
pub fn oracle_compare(lhs: &OpExpr, rhs: &OpExpr, sem: Semantics, seed: u64) -> Result<OracleOutcome, FieldError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = lhs.max_order().max(rhs.max_order()) as usize;
    let lo = if sem == Semantics::Trig { -3 } else { 0 };
    let monomials: Vec<(i32, i32)> =
        (0..ORACLE_MONOMIALS).map(|_| (rng.gen_range(lo..=3), rng.gen_range(lo..=3))).collect();
    let mut equal = true;
    let mut comparisons = 0;
    let mut points = 0;
    let mut attempts = 0;
    while points < ORACLE_POINTS {
        attempts += 1;
        if attempts > 200 {
            return Err(FieldError::Pole);
        }
        let pt = Point {
            m: random_rational(&mut rng, -9, 9),
            z1: random_rational(&mut rng, 1, 19),
            z2: random_rational(&mut rng, 1, 19),
        };
        let mut ev = JetEvaluator::new(&pt, n);
        let mut row = Vec::with_capacity(monomials.len());
        let mut pole = false;
        for &(a, b) in &monomials {
            let mono = MPoly::monomial(sem, Exponent::new(0, a, b), Rational::one())?;
            let phi = poly_jet(&mono, &pt, n);
            match (ev.apply(lhs, &phi), ev.apply(rhs, &phi)) {
                (Ok(l), Ok(r)) => row.push(l.value() == r.value()),
                (Err(FieldError::Pole), _) | (_, Err(FieldError::Pole)) => {
                    pole = true;
                    break;
                }
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        }
        if pole {
            continue;
        }
        points += 1;
        comparisons += row.len();
        equal &= row.iter().all(|&x| x);
    }
    Ok(OracleOutcome { equal, comparisons })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Var;

    fn pt() -> Point {
        Point { m: Rational::new(1, 2), z1: Rational::from_int(2), z2: Rational::from_int(3) }
    }

    #[test]
    fn jet_inverse_round_trip() {
        let f = RatFunc::var(Semantics::Trig, Var::T1);
        let one = RatFunc::one(Semantics::Trig);
        let g = &f + &one;
        let j = ratfunc_jet(&g, &pt(), 4).unwrap();
        let prod = j.mul(&j.inv().unwrap());
        assert_eq!(prod, Jet::constant(4, Rational::one()));
    }

    #[test]
    fn jet_derivative_matches_symbolic() {
        let sem = Semantics::Trig;
        let z1 = RatFunc::var(sem, Var::T1);
        let z2 = RatFunc::var(sem, Var::T2);
        let f = (&(&z1 * &z2) + &RatFunc::one(sem)).inv().unwrap();
        let j = ratfunc_jet(&f, &pt(), 3).unwrap();
        let d = j.deriv(1).deriv(2);
        let sym = f.dy(1).dy(2).eval(&pt().m, &pt().z1, &pt().z2).unwrap();
        assert_eq!(d.value(), &sym);
    }

    #[test]
    fn adjoint_tree_matches_normal_form() {
        let sem = Semantics::Trig;
        let z1 = RatFunc::var(sem, Var::T1);
        let op = &DiffOp::dy(sem, 1).left_mul(&z1) + &DiffOp::monomial(z1.clone(), (1, 1));
        let lhs = OpExpr::Adjoint(op.clone());
        let rhs = OpExpr::Leaf(op.adjoint());
        assert!(oracle_compare(&lhs, &rhs, sem, 7).unwrap().equal);
        let wrong = OpExpr::Leaf(op);
        assert!(!oracle_compare(&lhs, &wrong, sem, 7).unwrap().equal);
    }

    #[test]
    fn commutator_of_derivative_and_z1() {
        let sem = Semantics::Trig;
        let z1 = RatFunc::var(sem, Var::T1);
        let e = OpExpr::commutator(OpExpr::Leaf(DiffOp::dy(sem, 1)), OpExpr::Mul(z1.clone()));
        assert_eq!(e.normalize(sem).unwrap(), DiffOp::multiplication(z1.clone()));
        assert!(oracle_compare(&e, &OpExpr::Mul(z1), sem, 1).unwrap().equal);
    }

    #[test]
    fn rational_semantics_series() {
        let sem = Semantics::Rational;
        let w = RatFunc::var(sem, Var::T1);
        let f = w.pow(3);
        let j = ratfunc_jet(&f, &pt(), 3).unwrap();
        assert_eq!(j.coeff(2, 0), &Rational::from_int(6));
        assert_eq!(j.coeff(3, 0), &Rational::one());
    }
}
