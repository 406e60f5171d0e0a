//! Gradients and Laplacians of the coefficient functions `f`, `g`, `h`.

use super::{Check, Identity, Model, OpExpr, Suite};
use crate::ag2config::{grad_dot, grad_op, laplacian_apply, CYCLIC};
use crate::exactfield::{RatFunc, Rational, Semantics};

const TRIG: Semantics = Semantics::Trig;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn half() -> Rational {
    Rational::new(1, 2)
}

fn mul(f: RatFunc) -> OpExpr {
    OpExpr::Mul(f)
}

fn comp(v: Vec<OpExpr>) -> OpExpr {
    OpExpr::Compose(v)
}

fn sum(v: Vec<OpExpr>) -> OpExpr {
    OpExpr::Sum(v)
}

impl Model {
    fn leaf_db(&self, i: usize) -> OpExpr {
        OpExpr::Leaf(self.db(i))
    }

    /// `ψ ∂_{β_i}` as an expression.
    fn coef_db(&self, psi: RatFunc, i: usize) -> OpExpr {
        comp(vec![mul(psi), self.leaf_db(i)])
    }

    /// `ψ ∂_{β_i} ∂_{β_j}`.
    fn coef_dbdb(&self, psi: RatFunc, i: usize, j: usize) -> OpExpr {
        comp(vec![mul(psi), self.leaf_db(i), self.leaf_db(j)])
    }

    /// `Σσ (∂βσ2(φσ1) ∂βσ3 + ∂βσ3(φσ1) ∂βσ2) ∂βσ1`.
    fn cross_term(&self, phi: &[RatFunc; 3]) -> OpExpr {
        sum(CYCLIC
            .iter()
            .flat_map(|s| {
                [
                    self.coef_dbdb(self.dbf(s[1], &phi[s[0]]), s[2], s[0]),
                    self.coef_dbdb(self.dbf(s[2], &phi[s[0]]), s[1], s[0]),
                ]
            })
            .collect())
    }

    /// `Σσ ∂βσ1(ψσ) ∂βσ2 ∂βσ3`.
    fn outer_term(&self, psi: impl Fn([usize; 3]) -> RatFunc) -> OpExpr {
        sum(CYCLIC.iter().map(|s| self.coef_dbdb(self.dbf(s[0], &psi(*s)), s[1], s[2])).collect())
    }

    /// `Σσ <βσ2,βσ3> ûσ2 ûσ3 · φ(σ)`.
    pub(super) fn uhat_pairs(&self, phi: impl Fn([usize; 3]) -> RatFunc) -> RatFunc {
        let uh = &self.pots.u_hat;
        CYCLIC.iter().fold(RatFunc::zero(TRIG), |acc, s| {
            &acc + &(&(&uh[s[1]] * &uh[s[2]]) * &phi(*s)).scale(&self.bb(s[1], s[2]))
        })
    }
}

fn f_forms(m: &Model) -> Vec<Identity> {
    (0..3).map(|j| Identity::func(m.parts.f[j].clone(), m.cms.f_alt(j))).collect()
}

fn u_forms(m: &Model) -> Vec<Identity> {
    let mut out = Vec::new();
    for i in 0..3 {
        out.push(Identity::func(m.pots.u_tilde[i].clone(), m.cms.u_tilde_alt(i)));
        out.push(Identity::func(m.pots.u_hat[i].clone(), &m.pots.u_tilde[i] - &m.pots.u[i]));
    }
    out
}

fn g_explicit(m: &Model) -> Vec<Identity> {
    let e = m.cms.coeff_g_explicit();
    (0..3).map(|j| Identity::func(m.parts.g(j), e[j].clone())).collect()
}

fn h_forms(m: &Model) -> Vec<Identity> {
    vec![
        Identity::func(m.cms.h_iii_sum(), m.parts.h_iii.clone()),
        Identity::func(m.cms.h_iii_from_u(), m.parts.h_iii.clone()),
    ]
}

fn f1(m: &Model) -> Vec<Identity> {
    (0..3)
        .map(|j| {
            let rhs = m.coef_db(m.pots.u_hat[j].scale(&half()), j);
            Identity::op(OpExpr::Leaf(grad_op(&m.parts.f[j])), rhs)
        })
        .collect()
}

fn f2(m: &Model) -> Vec<Identity> {
    (0..3)
        .map(|j| {
            let f = &m.parts.f[j];
            let lhs = &(&m.pots.u_hat[j] * f) - &laplacian_apply(f);
            Identity::func(lhs, m.dbf(j, &m.pots.u[j]))
        })
        .collect()
}

fn g0(m: &Model, g: &[RatFunc; 3], pot: &[RatFunc; 3]) -> Vec<Identity> {
    CYCLIC
        .iter()
        .map(|s| {
            let lhs = OpExpr::Leaf(grad_op(&g[s[0]])).scale(2);
            let rhs = sum(vec![
                m.coef_db(m.dbf(s[1], &pot[s[0]]), s[2]),
                m.coef_db(m.dbf(s[2], &pot[s[0]]), s[1]),
            ])
            .neg();
            Identity::op(lhs, rhs)
        })
        .collect()
}

fn two_grad_db(m: &Model, g: &[RatFunc; 3]) -> OpExpr {
    sum((0..3).map(|i| comp(vec![OpExpr::Leaf(grad_op(&g[i])), m.leaf_db(i)])).collect()).scale(2)
}

fn g1a(m: &Model) -> Vec<Identity> {
    let uh = &m.pots.u_hat;
    let rhs = sum(CYCLIC
        .iter()
        .map(|s| m.coef_dbdb(&m.sum_except(s[0], |j| uh[j].clone()) * &m.parts.f[s[0]], s[1], s[2]))
        .collect());
    vec![Identity::op(two_grad_db(m, &m.parts.g_i), rhs)]
}

fn g1b(m: &Model) -> Vec<Identity> {
    let v = &m.pots.v;
    let lhs = two_grad_db(m, &m.parts.g_ii);
    let e1 = m.cross_term(v).neg();
    let e2 = m.outer_term(|s| m.sum_except(s[0], |j| v[j].clone())).neg();
    let e3 = m.outer_term(|_| m.sum(|j| v[j].clone())).neg();
    vec![Identity::op(lhs, e1.clone()), Identity::op(e1, e2.clone()), Identity::op(e2, e3)]
}

fn g1c(m: &Model) -> Vec<Identity> {
    let u = &m.pots.u;
    let lhs = two_grad_db(m, &m.parts.g_iii);
    let e1 = m.cross_term(u).neg();
    let e2 = m.outer_term(|s| m.sum_except(s[0], |j| u[j].clone())).neg();
    vec![Identity::op(lhs, e1.clone()), Identity::op(e1, e2)]
}

fn g2a(m: &Model) -> Vec<Identity> {
    let lhs = m.sum(|i| grad_dot(&m.parts.f[i], &m.parts.g_i[i]));
    let rhs = m.uhat_pairs(|s| m.parts.f[s[0]].clone()).scale(&half());
    vec![Identity::func(lhs, rhs)]
}

fn g2b(m: &Model) -> Vec<Identity> {
    let lhs = m.sum(|i| grad_dot(&m.parts.f[i], &m.parts.g_ii[i]));
    vec![Identity::func(lhs, RatFunc::zero(TRIG))]
}

fn g2c(m: &Model) -> Vec<Identity> {
    let lhs = m.sum(|i| grad_dot(&m.parts.f[i], &m.parts.g_iii[i])).scale(&q(2));
    let rhs = m.sum(|i| &m.pots.u_hat[i] * &m.dbf(i, &m.parts.g_iii[i]));
    vec![Identity::func(lhs, rhs)]
}

fn others(i: usize) -> [usize; 2] {
    [(i + 1) % 3, (i + 2) % 3]
}

fn g3m_a(m: &Model) -> Vec<Identity> {
    let mut out = Vec::new();
    let total = m.sum(|j| m.pots.v[j].clone());
    for i in 0..3 {
        let lhs = laplacian_apply(&m.parts.g_ii[i]);
        let r1 = m.dbfs(&others(i), &m.pots.v[i]).scale(&q(-1));
        let r2 = m.dbfs(&others(i), &total).scale(&q(-1));
        out.push(Identity::func(lhs, r1.clone()));
        out.push(Identity::func(r1, r2));
    }
    out
}

fn g3m_b(m: &Model) -> Vec<Identity> {
    (0..3)
        .map(|i| {
            let lhs = laplacian_apply(&m.parts.g_iii[i]);
            Identity::func(lhs, m.dbfs(&others(i), &m.pots.u[i]).scale(&q(-1)))
        })
        .collect()
}

fn lap_db(m: &Model, g: &[RatFunc; 3]) -> OpExpr {
    sum((0..3).map(|i| m.coef_db(laplacian_apply(&g[i]), i)).collect())
}

fn g3a(m: &Model) -> Vec<Identity> {
    let uh = &m.pots.u_hat;
    let u = &m.pots.u;
    let f = &m.parts.f;
    let mut terms: Vec<OpExpr> =
        (0..3).map(|i| m.coef_db(&m.sum_except(i, |j| uh[j].clone()) * &m.parts.g_i[i], i)).collect();
    for s in CYCLIC {
        let c = (&uh[s[1]] * &uh[s[2]]).scale(&(&half() * &m.bb(s[1], s[2])));
        terms.push(m.coef_db(c, s[0]));
        terms.push(m.coef_db(&f[s[0]] * &m.dbf(s[1], &u[s[1]]), s[2]).neg());
        terms.push(m.coef_db(&f[s[0]] * &m.dbf(s[2], &u[s[2]]), s[1]).neg());
    }
    vec![Identity::op(lap_db(m, &m.parts.g_i), sum(terms))]
}

fn g3b(m: &Model) -> Vec<Identity> {
    let total = m.sum(|j| m.pots.v[j].clone());
    let rhs = sum(CYCLIC.iter().map(|s| m.coef_db(m.dbfs(&[s[1], s[2]], &total), s[0]).neg()).collect());
    vec![Identity::op(lap_db(m, &m.parts.g_ii), rhs)]
}

fn g3c(m: &Model) -> Vec<Identity> {
    let rhs =
        sum(CYCLIC.iter().map(|s| m.coef_db(m.dbfs(&[s[1], s[2]], &m.pots.u[s[0]]), s[0]).neg()).collect());
    vec![Identity::op(lap_db(m, &m.parts.g_iii), rhs)]
}

fn h1a(m: &Model) -> Vec<Identity> {
    let p = &m.parts;
    let lhs = OpExpr::Leaf(grad_op(&(&p.h_i + &p.h_ii))).scale(2);
    let mut terms: Vec<OpExpr> = (0..3).map(|i| m.coef_db(&m.pots.u_hat[i] * &p.g(i), i)).collect();
    for s in CYCLIC {
        let vu = m.vu(s[0]);
        terms.push(m.coef_db(&p.f[s[0]] * &m.dbf(s[1], &vu), s[2]).neg());
        terms.push(m.coef_db(&p.f[s[0]] * &m.dbf(s[2], &vu), s[1]).neg());
    }
    vec![Identity::op(lhs, sum(terms))]
}

fn h1b(m: &Model) -> Vec<Identity> {
    let lhs = OpExpr::Leaf(grad_op(&m.parts.h_iii)).scale(2);
    let rhs = sum(CYCLIC
        .iter()
        .map(|s| {
            let c = m.dbfs(&[s[1], s[2]], &m.sum_except(s[0], |j| m.pots.u[j].clone()));
            m.coef_db(c, s[0]).neg()
        })
        .collect());
    vec![Identity::op(lhs, rhs)]
}

fn h2a(m: &Model) -> Vec<Identity> {
    let p = &m.parts;
    let (uh, u) = (&m.pots.u_hat, &m.pots.u);
    let lhs = laplacian_apply(&(&p.h_i + &p.h_ii));
    let mut rhs = m.sum(|i| &(&uh[i] * &p.f[i]) * &p.g(i));
    rhs = &rhs - &m.sum(|i| &m.dbf(i, &u[i]) * &p.g(i));
    rhs = &rhs + &m.uhat_pairs(|s| p.f[s[0]].clone()).scale(&half());
    rhs = &rhs + &m.sum(|i| &uh[i] * &m.dbf(i, &p.g_iii[i]));
    for s in CYCLIC {
        rhs = &rhs - &(&p.f[s[0]] * &m.dbfs(&[s[1], s[2]], &m.vu(s[0])));
    }
    vec![Identity::func(lhs, rhs)]
}

fn h2b(m: &Model) -> Vec<Identity> {
    let lhs = laplacian_apply(&m.parts.h_iii);
    let rhs = m.dbfs(&[0, 1, 2], &m.sum(|j| m.pots.u[j].clone())).scale(&q(-1));
    vec![Identity::func(lhs, rhs)]
}

pub fn checks() -> Vec<Check> {
    let s = Suite::Section3;
    vec![
        Check::new("F0", s, f_forms),
        Check::new("U0", s, u_forms),
        Check::new("F1", s, f1),
        Check::new("F2", s, f2),
        Check::new("G0a", s, |m| g0(m, &m.parts.g_ii, &m.pots.v)),
        Check::new("G0b", s, |m| g0(m, &m.parts.g_iii, &m.pots.u)),
        Check::new("G1a", s, g1a),
        Check::new("G1b", s, g1b),
        Check::new("G1c", s, g1c),
        Check::new("G2a", s, g2a),
        Check::new("G2b", s, g2b),
        Check::new("G2c", s, g2c),
        Check::new("G3m-a", s, g3m_a),
        Check::new("G3m-b", s, g3m_b),
        Check::new("G3a", s, g3a),
        Check::new("G3b", s, g3b),
        Check::new("G3c", s, g3c),
        Check::new("Gx", s, g_explicit),
        Check::new("H0", s, h_forms),
        Check::new("H1a", s, h1a),
        Check::new("H1b", s, h1b),
        Check::new("H2a", s, h2a),
        Check::new("H2b", s, h2b),
    ]
}
