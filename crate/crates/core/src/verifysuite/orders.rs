//! `H∘𝒟 − 𝒟∘H0` split by derivative order, with the displayed forms of each
//! order and the rearrangements of the zero-order part.

use super::{Check, Identity, Model, OpExpr, Suite};
use crate::ag2config::{grad_op, laplacian_apply, Hyper, CYCLIC, SYMMETRIC};
use crate::exactfield::{RatFunc, Rational, Semantics};
use crate::weylops::DiffOp;

const TRIG: Semantics = Semantics::Trig;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn half() -> Rational {
    Rational::new(1, 2)
}

fn comp(v: Vec<OpExpr>) -> OpExpr {
    OpExpr::Compose(v)
}

fn sum(v: Vec<OpExpr>) -> OpExpr {
    OpExpr::Sum(v)
}

fn leaf(d: DiffOp) -> OpExpr {
    OpExpr::Leaf(d)
}

impl Model {
    fn part(&self, k: u32) -> OpExpr {
        leaf(self.intertwining_residual().order_part(k))
    }

    fn order0(&self) -> RatFunc {
        self.intertwining_residual().coeff((0, 0))
    }

    fn c_db(&self, psi: RatFunc, idx: &[usize]) -> OpExpr {
        let mut v = vec![OpExpr::Mul(psi)];
        v.extend(idx.iter().map(|&i| leaf(self.db(i))));
        comp(v)
    }

    fn sum_vu(&self) -> RatFunc {
        self.sum(|j| self.vu(j))
    }

    fn sum_u(&self) -> RatFunc {
        self.sum(|j| self.pots.u[j].clone())
    }

    fn coth(&self, i: usize) -> RatFunc {
        self.hb(i, Hyper::Coth)
    }

    fn tanh(&self, i: usize) -> RatFunc {
        self.hb(i, Hyper::Tanh)
    }

    fn isa(&self, i: usize) -> RatFunc {
        self.frame().ha(i, Hyper::InvSinhSq)
    }

    fn acoth(&self, i: usize) -> RatFunc {
        self.frame().ha(i, Hyper::Coth)
    }

    fn g23(&self, i: usize) -> RatFunc {
        &self.parts.g_ii[i] + &self.parts.g_iii[i]
    }

    /// `(f_a ∂_b + f_b ∂_a)(φ)`.
    fn f_cross(&self, a: usize, b: usize, phi: &RatFunc) -> RatFunc {
        &(&self.parts.f[a] * &self.dbf(b, phi)) + &(&self.parts.f[b] * &self.dbf(a, phi))
    }

    fn uh_except(&self, i: usize) -> RatFunc {
        self.sum_except(i, |j| self.pots.u_hat[j].clone())
    }

    fn cyc(&self, f: impl Fn([usize; 3]) -> RatFunc) -> RatFunc {
        CYCLIC.iter().fold(RatFunc::zero(TRIG), |acc, s| &acc + &f(*s))
    }

    fn sum_isq(&self) -> RatFunc {
        self.sum(|j| self.isq(j))
    }

    fn sum_icq(&self) -> RatFunc {
        self.sum(|j| self.icq(j))
    }

    fn sum_isq2(&self) -> RatFunc {
        self.sum(|j| self.isq2(j))
    }

    /// `Σσ <βσ2,βσ3> coth βσ1 · a(σ2) b(σ3)`.
    fn coth_pairs(&self, a: impl Fn(usize) -> RatFunc, b: impl Fn(usize) -> RatFunc) -> RatFunc {
        self.cyc(|s| (&(&self.coth(s[0]) * &a(s[1])) * &b(s[2])).scale(&self.bb(s[1], s[2])))
    }
}

fn order_zero(k: u32) -> impl Fn(&Model) -> Vec<Identity> {
    move |m| vec![Identity::op(m.part(k), OpExpr::zero())]
}

fn p3(m: &Model) -> Vec<Identity> {
    let grads = sum(CYCLIC.iter().map(|s| comp(vec![leaf(grad_op(&m.parts.f[s[0]])), leaf(m.dbp(&[s[1], s[2]]))])).collect());
    let full = sum(vec![grads.clone().scale(-2), m.c_db(m.sum_uh(), &[0, 1, 2])]);
    let half_sum = m.c_db(m.sum_uh().scale(&half()), &[0, 1, 2]);
    vec![Identity::op(m.part(3), full.clone()), Identity::op(grads, half_sum), Identity::op(full, OpExpr::zero())]
}

fn p2(m: &Model) -> Vec<Identity> {
    let mut t = Vec::new();
    for s in CYCLIC {
        let f = &m.parts.f[s[0]];
        t.push(m.c_db(laplacian_apply(f), &[s[1], s[2]]).neg());
        t.push(m.c_db(&m.sum_uh() * f, &[s[1], s[2]]));
        t.push(m.c_db(m.dbf(s[0], &m.sum_vu()), &[s[1], s[2]]).neg());
    }
    for i in 0..3 {
        t.push(comp(vec![leaf(grad_op(&m.parts.g(i))), leaf(m.db(i))]).scale(-2));
    }
    vec![Identity::op(m.part(2), sum(t))]
}

fn p1(m: &Model) -> Vec<Identity> {
    let p = &m.parts;
    let vu = m.sum_vu();
    let mut t = Vec::new();
    for i in 0..3 {
        t.push(m.c_db(laplacian_apply(&p.g(i)), &[i]).neg());
        t.push(m.c_db(&m.sum_uh() * &p.g(i), &[i]));
    }
    t.push(leaf(grad_op(&p.h())).scale(-2));
    for s in CYCLIC {
        t.push(m.c_db(m.dbfs(&[s[1], s[2]], &vu), &[s[0]]).neg());
        t.push(m.c_db(&p.f[s[0]] * &m.dbf(s[1], &vu), &[s[2]]).neg());
        t.push(m.c_db(&p.f[s[0]] * &m.dbf(s[2], &vu), &[s[1]]).neg());
    }
    vec![Identity::op(m.part(1), sum(t))]
}

fn p1r(m: &Model) -> Vec<Identity> {
    let mut t = Vec::new();
    for s in CYCLIC {
        let uh = &m.pots.u_hat;
        let a = (&uh[s[1]] * &uh[s[2]]).scale(&(&Rational::new(-1, 2) * &m.bb(s[1], s[2])));
        let b = &m.uh_except(s[0]) * &m.g23(s[0]);
        let c = m.f_cross(s[1], s[2], &m.vu(s[0])).scale(&q(-1));
        t.push(m.c_db(&(&a + &b) + &c, &[s[0]]));
    }
    t.push(leaf(grad_op(&m.parts.h_iv)).scale(-2));
    vec![Identity::op(m.part(1), sum(t))]
}

/// Left side of the per-`σ` first/zero order identity.
fn nl_lhs(m: &Model, s: [usize; 3]) -> RatFunc {
    let uh = &m.pots.u_hat;
    let a = (&uh[s[1]] * &uh[s[2]]).scale(&(&Rational::new(-1, 2) * &m.bb(s[1], s[2])));
    let b = &m.uh_except(s[0]) * &m.g23(s[0]);
    &(&a + &b) - &m.f_cross(s[1], s[2], &m.vu(s[0]))
}

fn nl(m: &Model) -> Vec<Identity> {
    CYCLIC
        .iter()
        .map(|&s| {
            let pr = &m.isq(s[1]) * &m.isq(s[2]);
            let pr2 = &m.isq2(s[1]) * &m.isq2(s[2]);
            let rhs = &(&m.mp(&[0, -48, -144]) * &pr) + &(&m.mp(&[-128, -384]) * &pr2);
            Identity::func(nl_lhs(m, s), rhs.scale(&m.bb(s[1], s[2])))
        })
        .collect()
}

fn nl_db1(m: &Model) -> Vec<Identity> {
    let br = &(&m.mp(&[1, 3]) * &(&m.isq(1) * &m.isq(2))) + &(&m.icq(1) * &m.icq(2));
    let lhs1 = &(&m.uh_except(0) * &m.parts.g_ii[0]) - &m.f_cross(1, 2, &m.pots.v[0]);
    let lhs2 = &(&m.uh_except(0) * &m.parts.g_iii[0]) - &m.f_cross(1, 2, &m.pots.u[0]);
    vec![
        Identity::func(lhs1, &m.mp(&[0, -36, -36]) * &br),
        Identity::func(lhs2, &m.mp(&[0, 12, 36]) * &br),
    ]
}

struct Zero {
    a: RatFunc,
    b: RatFunc,
    c: RatFunc,
    d: RatFunc,
    d1: RatFunc,
    d2: RatFunc,
}

fn zero_terms(m: &Model) -> Zero {
    let p = &m.parts;
    let (u, uh) = (&m.pots.u, &m.pots.u_hat);
    let mut a = m.sum(|i| &m.uh_except(i) * &m.dbf(i, &p.g_iii[i]));
    a = &a - &m.cyc(|s| &p.f[s[0]] * &m.dbfs(&[s[1], s[2]], &m.sum_except(s[0], |j| u[j].clone())));
    let b1 = m.uhat_pairs(|s| p.f[s[0]].clone()).scale(&Rational::new(-1, 2));
    let b2 = m.cyc(|s| &(&m.uh_except(s[0]) * &m.g23(s[0])) * &p.f[s[0]]);
    let b = &b1 + &b2;
    let c = &(&m.sum(|j| uh[j].clone()) * &p.h_iv) - &laplacian_apply(&p.h_iv);
    let vu_except = |i: usize| m.sum_except(i, |j| m.vu(j));
    let d = m.sum(|i| &p.g(i) * &m.dbf(i, &vu_except(i))).scale(&q(-1));
    let d1 = m.sum(|i| &m.g23(i) * &m.dbf(i, &vu_except(i))).scale(&q(-1));
    let d2 = m.cyc(|s| &p.f[s[0]] * &m.f_cross(s[1], s[2], &m.vu(s[0]))).scale(&q(-1));
    Zero { a, b, c, d, d1, d2 }
}

fn zero_split(m: &Model) -> Vec<Identity> {
    let p = &m.parts;
    let z = zero_terms(m);
    let su = m.sum_u();
    let mut direct = &(&m.sum_uh() * &p.h()) - &laplacian_apply(&p.h());
    direct = &direct - &m.dbfs(&[0, 1, 2], &su);
    direct = &direct - &m.cyc(|s| &p.f[s[0]] * &m.dbfs(&[s[1], s[2]], &(&m.pots.v[s[0]] + &su)));
    direct = &direct
        - &m.sum(|i| {
            let arg = &m.sum_except(i, |j| m.pots.v[j].clone()) + &su;
            &p.g(i) * &m.dbf(i, &arg)
        });
    let total = &(&(&z.a + &z.b) + &z.c) + &z.d;
    let d_alt = &z.d1 - &m.cyc(|s| &(&p.f[s[1]] * &p.f[s[2]]) * &m.dbf(s[0], &m.sum_except(s[0], |j| m.vu(j))));
    vec![
        Identity::func(m.order0(), direct),
        Identity::func(m.order0(), total),
        Identity::func(z.d.clone(), &z.d1 + &z.d2),
        Identity::func(z.d, d_alt),
    ]
}

fn zero_a(m: &Model) -> Vec<Identity> {
    let z = zero_terms(m);
    let (x, y) = (&m.parts.x, &m.parts.y);
    let mut rhs = &m.mp(&[0, 2, 12, 18]) * x;
    rhs = &rhs - &(&m.mp(&[0, 1, 3]) * &m.coth_pairs(|i| m.icq(i), |i| m.icq(i)));
    rhs = &rhs + &(&(&m.mp(&[0, 0, 3, 9]) * &m.sum_isq()) * x);
    rhs = &rhs + &(&(&m.mp(&[0, 8, 24]) * &m.sum_isq()) * y);
    rhs = &rhs + &(&m.mp(&[0, 24, 72]) * y);
    // the pieces coming from gIII_1 and u_1
    let (g3, u0, f) = (&m.parts.g_iii[0], &m.pots.u[0], &m.parts.f);
    let m31 = m.mp(&[0, 1, 3]);
    let m31s = m.mp(&[0, 1, 6, 9]);
    let c0s = &m.coth(0) * &m.isq(0);
    let c00s = &(&m.coth(0) * &m.coth(0)) * &m.isq(0);
    let i_lhs = &m.uh_except(0) * &m.dbf(0, g3);
    let i_rhs = &(&(&m31s * &(&m.isq(1) + &m.isq(2))) * &c0s).scale(&q(-1)) + &(&(&m31 * &(&m.icq(1) + &m.icq(2))) * &c0s);
    let ii_lhs = (&(&f[1] * &m.dbfs(&[2, 0], u0)) + &(&f[2] * &m.dbfs(&[0, 1], u0))).scale(&q(-1));
    let ii_a = (&(&m31s * &(&m.coth(1) - &m.coth(2))) * &c00s).scale(&q(-2));
    let ii_b = (&(&m31 * &(&m.tanh(1) - &m.tanh(2))) * &c00s).scale(&q(-2));
    let ii_c = {
        let inner = &(&m.mp(&[1, 3]) * &(&m.coth(2) - &m.coth(1))) + &(&m.tanh(2) - &m.tanh(1));
        &(&m31 * &inner) * &(&m.isq(0) * &m.isq(0))
    };
    let iii = &(&m31s * &(&m.coth(0) * &(&m.isq(1) * &m.isq(2)))).scale(&q(-1))
        - &(&m31 * &(&m.coth(0) * &(&m.icq(1) * &m.icq(2))));
    let iv = &(&(&(&m.mp(&[0, 0, 3, 9]) * &m.isq(0)) * x) + &(&(&m.mp(&[0, 8, 24]) * &m.isq(0)) * y))
        + &(&m.mp(&[0, 8, 24]) * y);
    vec![
        Identity::func(z.a, rhs.scale(&q(48))),
        Identity::func(i_lhs, i_rhs.scale(&q(48))),
        Identity::func(ii_lhs, (&(&ii_a + &ii_b) + &ii_c).scale(&q(48))),
        Identity::func(&i_rhs + &(&ii_a + &ii_b), iii),
        Identity::func(ii_c, iv),
    ]
}

fn zero_bd2(m: &Model) -> Vec<Identity> {
    let z = zero_terms(m);
    let (x, y) = (&m.parts.x, &m.parts.y);
    let f = &m.parts.f;
    let pre = m.cyc(|s| {
        let a = (&m.mp(&[0, 3, 9]) * &(&m.isq(s[1]) * &m.isq(s[2]))).scale(&Rational::new(-1, 4));
        let b = (&m.mp(&[1, 3]) * &(&m.isq2(s[1]) * &m.isq2(s[2]))).scale(&q(-2));
        (&(&a + &b) * &f[s[0]]).scale(&m.bb(s[1], s[2]))
    });
    let mut fin = &m.mp(&[0, -6, -27, -27]) * x;
    fin = &fin - &(&m.mp(&[0, 12, 36]) * y);
    fin = &fin - &(&m.mp(&[16, 48]) * y);
    fin = &fin + &(&m.mp(&[0, 12, 36]) * &m.coth_pairs(|i| m.isq2(i), |i| m.isq2(i)));
    let bd2 = &z.b + &z.d2;
    vec![Identity::func(bd2.clone(), pre.scale(&q(64))), Identity::func(bd2, fin.scale(&q(64)))]
}

fn zero_c(m: &Model) -> Vec<Identity> {
    let z = zero_terms(m);
    let (x, y) = (&m.parts.x, &m.parts.y);
    let two = RatFunc::int(TRIG, 2);
    let mut rhs = &(&m.mp(&[0, 0, -9, -27]) * &m.sum_isq()) * x;
    rhs = &rhs + &(&(&m.mp(&[0, 3, 9]) * &(&two + &m.sum_icq())) * x);
    rhs = &rhs - &(&(&m.mp(&[0, 12, 36]) * &m.sum_isq()) * y);
    rhs = &rhs + &(&m.mp(&[32, 96]) * y);
    let lap = &(&(&m.mp(&[0, 3, 9]) * &(&two + &m.sum_isq())) * x) + &(&(&m.mp(&[16, 48]) * &(&two + &m.sum_isq2())) * y);
    let prod = {
        let a = &(&(&m.mp(&[0, 3]) * &m.sum_isq()) + &m.sum_isq()) - &m.sum_icq();
        let b = &(&m.mp(&[0, 3]) * &m.sum_isq()) + &m.sum_isq2().scale(&q(4));
        &(&(&a * &m.mp(&[0, 3, 9])) * x).scale(&q(-1)) - &(&(&b * &m.mp(&[4, 12])) * y)
    };
    let hiv = &m.parts.h_iv;
    vec![
        Identity::func(z.c, rhs.scale(&q(32))),
        Identity::func(laplacian_apply(hiv).scale(&q(-1)), lap.scale(&q(32))),
        Identity::func(&m.sum_uh() * hiv, prod.scale(&q(32))),
    ]
}

fn zero_d1(m: &Model) -> Vec<Identity> {
    let z = zero_terms(m);
    let p = &m.parts;
    let (v, u) = (&m.pots.v, &m.pots.u);
    let x = &p.x;
    let two = RatFunc::int(TRIG, 2);
    let rhs = &(&m.mp(&[0, 0, 144, 432]) * &(&two + &m.sum_isq())) * x;
    let gii_v = m.sum(|i| &p.g_ii[i] * &m.dbf(i, &m.sum_except(i, |j| v[j].clone())));
    let k108 = m.mp(&[0, 0, 108, 432, 324]);
    let term_i = (&(&p.g_iii[1] * &m.dbf(1, &v[0])) + &(&p.g_iii[2] * &m.dbf(2, &v[0]))).scale(&q(-1));
    let term_i_rhs = &k108 * &(&(&(&m.isq(2) - &m.isq(1)) * &m.acoth(0)) * &m.isa(0));
    let term_ii = (&p.g_ii[0] * &m.dbf(0, &(&u[1] + &u[2]))).scale(&q(-1));
    let term_ii_rhs = &k108 * &(&(&(&m.coth(2) * &m.isq(2)) - &(&m.coth(1) * &m.isq(1))) * &m.isa(0));
    let term_iii = m.sum(|i| &p.g_iii[i] * &m.dbf(i, &m.sum_except(i, |j| u[j].clone()))).scale(&q(-1));
    let pair = |a: RatFunc, i: usize, j: usize| &a * &(&m.isq(i) * &m.isq(j));
    let br = &(&pair(&m.coth(1) - &m.coth(2), 1, 2) - &pair(&m.coth(0) + &m.coth(2), 0, 2))
        + &pair(&m.coth(1) - &m.coth(0), 0, 1);
    let term_iii_rhs = &m.mp(&[0, 0, 36, 216, 324]) * &br;
    vec![
        Identity::func(z.d1, rhs),
        Identity::func(gii_v, RatFunc::zero(TRIG)),
        Identity::func(term_i, term_i_rhs),
        Identity::func(term_ii, term_ii_rhs),
        Identity::func(term_iii, term_iii_rhs),
    ]
}

/// The bracket multiplying `48m(3m+1)` in the zero-order part.
fn zero_bracket(m: &Model) -> RatFunc {
    let (x, y) = (&m.parts.x, &m.parts.y);
    let mut br = (&m.sum_icq() * x).scale(&q(2));
    br = &br - &x.scale(&q(2));
    br = &br + &y.scale(&q(8));
    br = &br - &m.coth_pairs(|i| m.icq(i), |i| m.icq(i));
    &br + &m.coth_pairs(|i| m.isq2(i), |i| m.isq2(i)).scale(&q(16))
}

fn zero_sum(m: &Model) -> Vec<Identity> {
    vec![Identity::func(m.order0(), &m.mp(&[0, 48, 144]) * &zero_bracket(m))]
}

fn zero_ef(m: &Model) -> Vec<Identity> {
    let (x, y) = (&m.parts.x, &m.parts.y);
    let e = &x.scale(&q(-4)) + &y.scale(&q(8));
    let s3 = SYMMETRIC.iter().fold(RatFunc::zero(TRIG), |acc, s| {
        &acc + &(&(&m.coth(s[0]) * &m.isq(s[1])) * &m.icq(s[2])).scale(&m.bb(s[1], s[2]))
    });
    let f = &(&m.sum_icq() * x).scale(&q(2)) - &s3;
    let tanh_form = &m.cyc(|s| (&(&m.tanh(s[0]) * &m.isq(s[1])) * &m.isq(s[2])).scale(&m.bb(s[1], s[2]))) + &x.scale(&q(6));
    let cosh_lhs = &(&(&x.scale(&q(2)) + &(&m.coth(1) * &m.isq(2))) - &(&m.coth(2) * &m.isq(1))) * &m.icq(0);
    let cosh_mid = &(&(&m.isq(1) + &m.isq(2)) * &m.tanh(0)) * &m.isq(0);
    let cosh_rhs = &(&(&m.tanh(0) * &m.isq(1)) * &m.isq(2)) + &x.scale(&q(2));
    vec![
        Identity::func(zero_bracket(m), &e + &f),
        Identity::func(cosh_lhs, cosh_mid.clone()),
        Identity::func(cosh_mid, cosh_rhs),
        Identity::func(f.clone(), tanh_form),
        Identity::func(f.clone(), &x.scale(&q(4)) - &y.scale(&q(8))),
        Identity::func(&e + &f, RatFunc::zero(TRIG)),
    ]
}

pub fn checks() -> Vec<Check> {
    let s = Suite::Orders;
    let mut out: Vec<Check> = (0..=5).rev().map(|k| Check::new(format!("order{k}"), s, order_zero(k))).collect();
    out.extend([
        Check::new("P3", s, p3),
        Check::new("P2", s, p2),
        Check::new("NL", s, nl),
        Check::new("NL.Db1", s, nl_db1),
        Check::new("P1", s, p1),
        Check::new("P1r", s, p1r),
        Check::new("zero.split", s, zero_split),
        Check::new("zero.A", s, zero_a),
        Check::new("zero.BD2", s, zero_bd2),
        Check::new("zero.C", s, zero_c),
        Check::new("zero.D1", s, zero_d1),
        Check::new("zero.sum", s, zero_sum),
        Check::new("zero.EF", s, zero_ef),
    ]);
    out
}
