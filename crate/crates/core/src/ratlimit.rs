//! The rational limit: `H^r`, `H0^r`, `𝒟^r` in the polynomial coordinates
//! `w_i = <β_i, x>` and their intertwining and integrals.

use crate::ag2config::{dir_derivative, laplacian, linear, Frame, CYCLIC};
use crate::cmsbuild::Mutation;
use crate::exactfield::{RatFunc, Rational, Semantics, Var};
use crate::verifysuite::{Check, Identity, Model, OpExpr, Suite, VerificationReport};
use crate::weylops::DiffOp;

const RAT: Semantics = Semantics::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct RationalModel {
    pub hr: DiffOp,
    pub h0r: DiffOp,
    pub dr: DiffOp,
}

struct Builder {
    m: RatFunc,
    fr: Frame,
}

impl Builder {
    fn mp(&self, c: &[i64]) -> RatFunc {
        c.iter().rev().fold(RatFunc::zero(RAT), |acc, &k| &(&acc * &self.m) + &RatFunc::int(RAT, k))
    }

    fn lb(&self, i: usize) -> RatFunc {
        linear(self.fr.b[i])
    }

    fn la(&self, i: usize) -> RatFunc {
        linear(self.fr.a[i])
    }

    fn db(&self, i: usize) -> DiffOp {
        dir_derivative(RAT, self.fr.b[i])
    }

    fn dbp(&self, idx: &[usize]) -> DiffOp {
        idx.iter().fold(DiffOp::identity(RAT), |acc, &i| &acc * &self.db(i))
    }

    fn inv(f: &RatFunc) -> RatFunc {
        f.inv().expect("nonzero linear form")
    }

    fn ab_prod(&self, i: usize) -> Rational {
        (0..3).filter(|&k| k != i).fold(Rational::one(), |acc, k| &acc * &self.fr.ab(i, k))
    }

    fn bb_prod(&self, i: usize, skip_self: bool) -> Rational {
        (0..3).filter(|&k| !skip_self || k != i).fold(Rational::one(), |acc, k| &acc * &self.fr.bb(i, k))
    }

    fn hamiltonian(&self, short: &RatFunc) -> DiffOp {
        let mut pot = RatFunc::zero(RAT);
        for i in 0..3 {
            let la2 = Self::inv(&self.la(i).pow(2));
            let lb2 = Self::inv(&self.lb(i).pow(2));
            pot = &pot + &(&self.mp(&[0, 1, 1]) * &la2).scale(&self.fr.aa(i, i));
            pot = &pot + &(short * &lb2).scale(&self.fr.bb(i, i));
        }
        &(-&laplacian(RAT)) + &DiffOp::multiplication(pot)
    }

    fn intertwiner(&self, with_constant: bool) -> DiffOp {
        let fr = &self.fr;
        let mut d = self.dbp(&[0, 1, 2]);
        for s in CYCLIC {
            let c = (&self.mp(&[1, 3]) * &Self::inv(&self.lb(s[0]))).scale(&-fr.bb(s[0], s[0]));
            d = &d + &self.dbp(&[s[1], s[2]]).left_mul(&c);
            let den = &self.lb(s[1]) * &self.lb(s[2]);
            let c = (&self.mp(&[1, 6, 9]) * &Self::inv(&den)).scale(&fr.bb(s[0], s[0]).pow(2));
            d = &d + &self.db(s[0]).left_mul(&c);
        }
        let mut h = RatFunc::zero(RAT);
        for i in 0..3 {
            let (la, lb) = (self.la(i), self.lb(i));
            let a = (&self.mp(&[0, 1, 1]) * &Self::inv(&la.pow(2))).scale(&self.ab_prod(i));
            let b = (&self.mp(&[0, 3, 9]) * &Self::inv(&lb.pow(2))).scale(&self.bb_prod(i, true));
            d = &d - &self.db(i).left_mul(&(&a + &b));
            let c = (&self.mp(&[0, 9, 36, 27]) * &Self::inv(&lb.pow(3))).scale(&self.bb_prod(i, false));
            let e = (&self.mp(&[0, 1, 4, 3]) * &Self::inv(&(&lb * &la.pow(2))))
                .scale(&(&fr.bb(i, i) * &self.ab_prod(i)));
            h = &(&h + &c) + &e;
        }
        if with_constant {
            let norms = (0..3).fold(Rational::one(), |acc, i| &acc * &fr.bb(i, i));
            let den = &(&self.lb(0) * &self.lb(1)) * &self.lb(2);
            let c = (&self.mp(&[3, 27, 72, 54]) * &Self::inv(&den)).scale(&(&norms * &Rational::new(-1, 2)));
            h = &h + &c;
        }
        &d + &DiffOp::multiplication(h)
    }
}

impl RationalModel {
    /// Builds the three operators; `m = None` keeps the coupling symbolic.
    pub fn build(m: Option<Rational>, mutation: Mutation) -> Self {
        let m = match m {
            Some(v) => RatFunc::constant(RAT, &v),
            None => RatFunc::var(RAT, Var::M),
        };
        let b = Builder { m, fr: Frame::base() };
        RationalModel {
            hr: b.hamiltonian(&b.mp(&[2, 9, 9])),
            h0r: b.hamiltonian(&b.mp(&[0, 3, 9])),
            dr: b.intertwiner(mutation != Mutation::DropDrConstant),
        }
    }

    /// `∂β1∂β2∂β3` in rational semantics.
    pub fn leading(&self) -> DiffOp {
        Builder { m: RatFunc::zero(RAT), fr: Frame::base() }.dbp(&[0, 1, 2])
    }
}

pub fn rational_operators() -> RationalModel {
    RationalModel::build(None, Mutation::None)
}

fn leaf(d: &DiffOp) -> OpExpr {
    OpExpr::leaf(d)
}

fn intertwining(m: &Model) -> Vec<Identity> {
    let r = m.rational();
    vec![Identity::op_in(
        RAT,
        OpExpr::Compose(vec![leaf(&r.hr), leaf(&r.dr)]),
        OpExpr::Compose(vec![leaf(&r.dr), leaf(&r.h0r)]),
    )]
}

fn structure(m: &Model) -> Vec<Identity> {
    let r = m.rational();
    let diff = &r.hr - &r.h0r;
    let b = Builder { m: RatFunc::zero(RAT), fr: Frame::base() };
    let mut pot = RatFunc::zero(RAT);
    for i in 0..3 {
        pot = &pot + &Builder::inv(&b.lb(i).pow(2)).scale(&Rational::from_int(2));
    }
    let mc = if let Some(v) = m.cms.m_value() { RatFunc::constant(RAT, v) } else { RatFunc::var(RAT, Var::M) };
    let k = &(&mc.scale(&Rational::from_int(3)) + &RatFunc::one(RAT)) * &RatFunc::int(RAT, 2);
    vec![
        Identity::op_in(RAT, OpExpr::Leaf(r.dr.order_part(3)), leaf(&r.leading())),
        Identity::op_in(RAT, OpExpr::Leaf(diff), OpExpr::Mul(&k * &pot)),
    ]
}

fn integral_i6(m: &Model) -> Vec<Identity> {
    let r = m.rational();
    let i6 = OpExpr::Compose(vec![leaf(&r.dr), OpExpr::Adjoint(r.dr.clone())]);
    vec![Identity::op_in(RAT, OpExpr::commutator(leaf(&r.hr), i6), OpExpr::zero())]
}

fn integral_j6(m: &Model) -> Vec<Identity> {
    let r = m.rational();
    let j6 = OpExpr::Compose(vec![OpExpr::Adjoint(r.dr.clone()), leaf(&r.dr)]);
    vec![Identity::op_in(RAT, OpExpr::commutator(leaf(&r.h0r), j6), OpExpr::zero())]
}

pub fn checks() -> Vec<Check> {
    vec![
        Check::new("rat.intertwining", Suite::Rational, intertwining),
        Check::new("rat.order", Suite::Rational, structure),
        Check::new("rat.I6", Suite::Rational, integral_i6),
        Check::new("rat.J6", Suite::Rational, integral_j6),
    ]
}

pub fn check_rational_intertwining(model: &Model) -> VerificationReport {
    checks().remove(0).run(model)
}

pub fn check_rational_integrals(model: &Model) -> Vec<VerificationReport> {
    checks().into_iter().skip(2).map(|c| c.run(model)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_term_matches_display() {
        let r = rational_operators();
        let w = |v: Var| RatFunc::var(RAT, v);
        let den = &(&w(Var::T1) * &w(Var::T2)) * &(&w(Var::T2) - &w(Var::T1));
        let m = RatFunc::var(RAT, Var::M);
        let poly = &(&(&m.scale(&Rational::from_int(3)) + &RatFunc::one(RAT))
            * &(&(&m.pow(2).scale(&Rational::from_int(6)) + &m.scale(&Rational::from_int(6))) + &RatFunc::one(RAT)))
            * &RatFunc::int(RAT, -24);
        let expect_const = &poly * &den.scale(&Rational::from_int(2)).inv().unwrap();
        let with = r.dr.coeff((0, 0));
        let without = RationalModel::build(None, Mutation::DropDrConstant).dr.coeff((0, 0));
        assert_eq!(&with - &without, expect_const);
    }

    #[test]
    fn leading_part_is_triple_derivative() {
        let r = rational_operators();
        assert_eq!(r.dr.order(), Some(3));
        assert_eq!(r.dr.order_part(3), r.leading());
    }
}
