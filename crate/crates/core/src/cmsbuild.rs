//! The potentials, Hamiltonians and the third-order intertwiner of the deformed
//! `AG2` system at `ω = 1`, with the coupling `m` symbolic or specialized.

use crate::ag2config::{dir_apply, dir_derivative, laplacian, Frame, Hyper, CYCLIC};
use crate::exactfield::{RatFunc, Rational, Semantics, Var};
use crate::weylops::DiffOp;

const TRIG: Semantics = Semantics::Trig;

/// Single-constant perturbations of the intertwiner, used to show that the checks
/// actually constrain every printed constant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mutation {
    #[default]
    None,
    /// `f1 = +2(3m+1) coth β1 − 2 tanh β1`.
    FlipF1Sign,
    /// The `tanh` coefficient of every `f_j` becomes `−1`.
    FTanhCoeff,
    /// The prefactor `3/2` of `gII_1` becomes `1`.
    GiiPrefactor,
    /// The `Y` coefficient of `hIV` becomes `−16(3m+1)`.
    HivYCoeff,
    /// The `hIII` coefficient `12m(3m+1)` becomes `24m(3m+1)`.
    HiiiCoeff,
    /// `h = hI + hII + hIII`.
    DropHiv,
    /// The constant term of the rational-limit intertwiner is omitted.
    DropDrConstant,
}

impl Mutation {
    /// The five single-constant mutations.
    pub const CONSTANTS: [Mutation; 5] = [
        Mutation::FlipF1Sign,
        Mutation::FTanhCoeff,
        Mutation::GiiPrefactor,
        Mutation::HivYCoeff,
        Mutation::HiiiCoeff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::None => "none",
            Mutation::FlipF1Sign => "f1-sign",
            Mutation::FTanhCoeff => "f-tanh-coeff",
            Mutation::GiiPrefactor => "gII-prefactor",
            Mutation::HivYCoeff => "hIV-Y-coeff",
            Mutation::HiiiCoeff => "hIII-coeff",
            Mutation::DropHiv => "drop-hIV",
            Mutation::DropDrConstant => "drop-Dr-constant",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PotentialSet {
    pub v: [RatFunc; 3],
    pub u: [RatFunc; 3],
    pub u_tilde: [RatFunc; 3],
    pub u_hat: [RatFunc; 3],
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntertwinerParts {
    pub f: [RatFunc; 3],
    pub g_i: [RatFunc; 3],
    pub g_ii: [RatFunc; 3],
    pub g_iii: [RatFunc; 3],
    pub h_i: RatFunc,
    pub h_ii: RatFunc,
    pub h_iii: RatFunc,
    pub h_iv: RatFunc,
    pub x: RatFunc,
    pub y: RatFunc,
}

impl IntertwinerParts {
    pub fn g(&self, j: usize) -> RatFunc {
        &(&self.g_i[j] + &self.g_ii[j]) + &self.g_iii[j]
    }

    pub fn h(&self) -> RatFunc {
        &(&(&self.h_i + &self.h_ii) + &self.h_iii) + &self.h_iv
    }
}

/// Builder for every named function and operator; `m` is symbolic unless specialized.
#[derive(Clone, Debug, PartialEq)]
pub struct Cms {
    m: Option<Rational>,
    mutation: Mutation,
    frame: Frame,
}

impl Default for Cms {
    fn default() -> Self {
        Cms::new()
    }
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

impl Cms {
    pub fn new() -> Self {
        Cms { m: None, mutation: Mutation::None, frame: Frame::base() }
    }

    pub fn specialize(mut self, m: Rational) -> Self {
        self.m = Some(m);
        self
    }

    pub fn mutate(mut self, mutation: Mutation) -> Self {
        self.mutation = mutation;
        self
    }

    pub fn m_value(&self) -> Option<&Rational> {
        self.m.as_ref()
    }

    pub fn mutation(&self) -> Mutation {
        self.mutation
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// `c0 + c1 m + c2 m² + …`.
    pub fn mpoly(&self, c: &[i64]) -> RatFunc {
        let m = match &self.m {
            Some(v) => RatFunc::constant(TRIG, v),
            None => RatFunc::var(TRIG, Var::M),
        };
        let mut acc = RatFunc::zero(TRIG);
        for &k in c.iter().rev() {
            acc = &(&acc * &m) + &RatFunc::int(TRIG, k);
        }
        acc
    }

    fn sb2(&self, i: usize) -> RatFunc {
        self.frame.hb(i, Hyper::InvSinhSq)
    }

    fn cb2(&self, i: usize) -> RatFunc {
        self.frame.hb(i, Hyper::InvCoshSq)
    }

    fn sa2(&self, i: usize) -> RatFunc {
        self.frame.ha(i, Hyper::InvSinhSq)
    }

    /// `v_i = 6m(m+1)/sinh²α_i`.
    pub fn v(&self, i: usize) -> RatFunc {
        &self.mpoly(&[0, 6, 6]) * &self.sa2(i)
    }

    /// `u_i = 6m(3m+1)/sinh²β_i`.
    pub fn u(&self, i: usize) -> RatFunc {
        &self.mpoly(&[0, 6, 18]) * &self.sb2(i)
    }

    /// `ũ_i = 2(3m+1)(3m+2)/sinh²β_i − 4/cosh²β_i`.
    pub fn u_tilde(&self, i: usize) -> RatFunc {
        &(&self.mpoly(&[4, 18, 18]) * &self.sb2(i)) - &self.cb2(i).scale(&q(4))
    }

    /// `ũ_i = 18m(m+1)/sinh²β_i + 16/sinh²2β_i`.
    pub fn u_tilde_alt(&self, i: usize) -> RatFunc {
        &(&self.mpoly(&[0, 18, 18]) * &self.sb2(i)) + &self.frame.h2b(i, Hyper::InvSinhSq).scale(&q(16))
    }

    /// `û_i = 4(3m+1)/sinh²β_i − 4/cosh²β_i`.
    pub fn u_hat(&self, i: usize) -> RatFunc {
        &(&self.mpoly(&[4, 12]) * &self.sb2(i)) - &self.cb2(i).scale(&q(4))
    }

    pub fn potentials(&self) -> PotentialSet {
        PotentialSet {
            v: [0, 1, 2].map(|i| self.v(i)),
            u: [0, 1, 2].map(|i| self.u(i)),
            u_tilde: [0, 1, 2].map(|i| self.u_tilde(i)),
            u_hat: [0, 1, 2].map(|i| self.u_hat(i)),
        }
    }

    /// `(H, H0)` with `H = −Δ + Σ(v_i + ũ_i)` and `H0 = −Δ + Σ(v_i + u_i)`.
    pub fn hamiltonians(&self) -> (DiffOp, DiffOp) {
        let p = self.potentials();
        let mut pot = RatFunc::zero(TRIG);
        let mut pot0 = RatFunc::zero(TRIG);
        for i in 0..3 {
            pot = &(&pot + &p.v[i]) + &p.u_tilde[i];
            pot0 = &(&pot0 + &p.v[i]) + &p.u[i];
        }
        let lap = laplacian(TRIG);
        (&DiffOp::multiplication(pot) - &lap, &DiffOp::multiplication(pot0) - &lap)
    }

    pub fn xy(&self) -> (RatFunc, RatFunc) {
        (self.frame.x(), self.frame.y())
    }

    /// `f_j = −2(3m+1) coth β_j − 2 tanh β_j`.
    pub fn f(&self, j: usize) -> RatFunc {
        let mut c = self.mpoly(&[-2, -6]);
        if self.mutation == Mutation::FlipF1Sign && j == 0 {
            c = c.scale(&q(-1));
        }
        let t = if self.mutation == Mutation::FTanhCoeff { -1 } else { -2 };
        &(&c * &self.frame.hb(j, Hyper::Coth)) + &self.frame.hb(j, Hyper::Tanh).scale(&q(t))
    }

    /// `f_j = −2(3m coth β_j + 2 coth 2β_j)`.
    pub fn f_alt(&self, j: usize) -> RatFunc {
        let a = &self.mpoly(&[0, -6]) * &self.frame.hb(j, Hyper::Coth);
        &a + &self.frame.h2b(j, Hyper::Coth).scale(&q(-4))
    }

    pub fn coeff_f(&self) -> [RatFunc; 3] {
        [0, 1, 2].map(|j| self.f(j))
    }

    /// `(gI, gII, gIII)` with the prefactors taken from the Gram table.
    pub fn coeff_g(&self) -> ([RatFunc; 3], [RatFunc; 3], [RatFunc; 3]) {
        let f = self.coeff_f();
        let fr = &self.frame;
        let g_i = [0, 1, 2].map(|j| &f[(j + 1) % 3] * &f[(j + 2) % 3]);
        let g_ii = [0, 1, 2].map(|j| {
            let (k, l) = ((j + 1) % 3, (j + 2) % 3);
            let mut pre = &(&fr.ab(j, k) * &fr.ab(j, l)) / &fr.aa(j, j);
            if self.mutation == Mutation::GiiPrefactor && j == 0 {
                pre = &pre * &Rational::new(2, 3);
            }
            self.v(j).scale(&-pre)
        });
        let g_iii = [0, 1, 2].map(|j| {
            let (k, l) = ((j + 1) % 3, (j + 2) % 3);
            let pre = &(&fr.bb(j, k) * &fr.bb(j, l)) / &fr.bb(j, j);
            self.u(j).scale(&-pre)
        });
        (g_i, g_ii, g_iii)
    }

    /// The printed explicit `g_j` with constants `9m(m+1)` and `3m(3m+1)`.
    pub fn coeff_g_explicit(&self) -> [RatFunc; 3] {
        let f = self.coeff_f();
        let sign = [1, -1, 1];
        [0, 1, 2].map(|j| {
            let ff = &f[(j + 1) % 3] * &f[(j + 2) % 3];
            let a = (&self.mpoly(&[0, 9, 9]) * &self.sa2(j)).scale(&q(-sign[j]));
            let b = (&self.mpoly(&[0, 3, 9]) * &self.sb2(j)).scale(&q(sign[j]));
            &(&ff + &a) + &b
        })
    }

    /// `Σ_i ∂_{β_i}(gIII_i)`.
    pub fn h_iii_sum(&self) -> RatFunc {
        let (_, _, g_iii) = self.coeff_g();
        let mut acc = RatFunc::zero(TRIG);
        for (i, g) in g_iii.iter().enumerate() {
            acc = &acc + &dir_apply(self.frame.b[i], g);
        }
        acc
    }

    /// `−Σ_i (Π_{k≠i}<β_i,β_k> / <β_i,β_i>) ∂_{β_i}(u_i)`.
    pub fn h_iii_from_u(&self) -> RatFunc {
        let fr = &self.frame;
        let mut acc = RatFunc::zero(TRIG);
        for i in 0..3 {
            let (k, l) = ((i + 1) % 3, (i + 2) % 3);
            let pre = &(&fr.bb(i, k) * &fr.bb(i, l)) / &fr.bb(i, i);
            acc = &acc - &dir_apply(fr.b[i], &self.u(i)).scale(&pre);
        }
        acc
    }

    /// The printed expansion `∓12m(3m+1) coth β_i / sinh²β_i`.
    pub fn h_iii_explicit(&self) -> RatFunc {
        let k = if self.mutation == Mutation::HiiiCoeff { 24 } else { 12 };
        let sign = [-1, 1, -1];
        let mut acc = RatFunc::zero(TRIG);
        for i in 0..3 {
            let t = &self.sb2(i) * &self.frame.hb(i, Hyper::Coth);
            acc = &acc + &t.scale(&q(sign[i] * k));
        }
        &self.mpoly(&[0, 1, 3]) * &acc
    }

    /// `hIV = −24m(3m+1) X − 32(3m+1) Y`.
    pub fn h_iv(&self) -> RatFunc {
        let (x, y) = self.xy();
        let cy = if self.mutation == Mutation::HivYCoeff { -16 } else { -32 };
        &(&self.mpoly(&[0, -24, -72]) * &x) + &(&self.mpoly(&[1, 3]) * &y).scale(&q(cy))
    }

    pub fn coeff_h(&self) -> (RatFunc, RatFunc, RatFunc, RatFunc) {
        let f = self.coeff_f();
        let (_, g_ii, g_iii) = self.coeff_g();
        let h_i = &(&f[0] * &f[1]) * &f[2];
        let mut h_ii = RatFunc::zero(TRIG);
        for i in 0..3 {
            h_ii = &h_ii + &(&f[i] * &(&g_ii[i] + &g_iii[i]));
        }
        let h_iv = if self.mutation == Mutation::DropHiv { RatFunc::zero(TRIG) } else { self.h_iv() };
        (h_i, h_ii, self.h_iii_explicit(), h_iv)
    }

    pub fn parts(&self) -> IntertwinerParts {
        let f = self.coeff_f();
        let (g_i, g_ii, g_iii) = self.coeff_g();
        let (h_i, h_ii, h_iii, h_iv) = self.coeff_h();
        let (x, y) = self.xy();
        IntertwinerParts { f, g_i, g_ii, g_iii, h_i, h_ii, h_iii, h_iv, x, y }
    }

    pub fn dbeta(&self, i: usize) -> DiffOp {
        dir_derivative(TRIG, self.frame.b[i])
    }

    /// `∂_{β_i} ∘ ∂_{β_j} ∘ …` for the listed indices.
    pub fn dbeta_prod(&self, idx: &[usize]) -> DiffOp {
        idx.iter().fold(DiffOp::identity(TRIG), |acc, &i| &acc * &self.dbeta(i))
    }

    /// `𝒟` assembled from already built parts.
    pub fn intertwiner_from(&self, p: &IntertwinerParts) -> DiffOp {
        let mut d = self.dbeta_prod(&[0, 1, 2]);
        for s in CYCLIC {
            d = &d + &self.dbeta_prod(&[s[1], s[2]]).left_mul(&p.f[s[0]]);
        }
        for i in 0..3 {
            d = &d + &self.dbeta(i).left_mul(&p.g(i));
        }
        &d + &DiffOp::multiplication(p.h())
    }

    /// `𝒟 = ∂β1∂β2∂β3 + Σ_{A3} f_{σ1} ∂β_{σ2}∂β_{σ3} + Σ g_i ∂β_i + h`.
    pub fn intertwiner(&self) -> DiffOp {
        self.intertwiner_from(&self.parts())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ag2config::laplacian_apply;

    fn at(f: &RatFunc, m: i64) -> Rational {
        f.eval(&q(m), &q(2), &q(3)).unwrap()
    }

    #[test]
    fn potential_forms_agree() {
        let c = Cms::new();
        for i in 0..3 {
            assert_eq!(c.u_tilde(i), c.u_tilde_alt(i));
            assert_eq!(c.u_hat(i), &c.u_tilde(i) - &c.u(i));
            assert_eq!(c.f(i), c.f_alt(i));
        }
    }

    #[test]
    fn hamiltonian_difference_is_multiplication() {
        let c = Cms::new();
        let (h, h0) = c.hamiltonians();
        let diff = &h - &h0;
        let s = &(&c.u_hat(0) + &c.u_hat(1)) + &c.u_hat(2);
        assert_eq!(diff, DiffOp::multiplication(s));
        assert!(h.order_part(1).is_zero());
        assert_eq!(h.order_part(2), -&laplacian(TRIG));
    }

    #[test]
    fn x_value_and_laplacian() {
        let c = Cms::new();
        let (x, _) = c.xy();
        assert_eq!(at(&x, 0), Rational::new(12, 5));
        let mut s = RatFunc::int(TRIG, 2);
        for j in 0..3 {
            s = &s + &c.sb2(j);
        }
        assert_eq!(laplacian_apply(&x), (&s * &x).scale(&q(4)));
    }

    #[test]
    fn g_matches_the_explicit_list() {
        let c = Cms::new();
        let p = c.parts();
        let e = c.coeff_g_explicit();
        for j in 0..3 {
            assert_eq!(p.g(j), e[j]);
        }
    }

    #[test]
    fn h_iii_forms_agree() {
        let c = Cms::new();
        assert_eq!(c.h_iii_sum(), c.h_iii_explicit());
        assert_eq!(c.h_iii_from_u(), c.h_iii_explicit());
    }

    #[test]
    fn h_iv_at_m_zero() {
        let c = Cms::new().specialize(Rational::zero());
        let (_, y) = c.xy();
        assert_eq!(c.h_iv(), y.scale(&q(-32)));
    }

    #[test]
    fn intertwiner_shape() {
        let c = Cms::new();
        let d = c.intertwiner();
        assert_eq!(d.order(), Some(3));
        assert_eq!(d.order_part(3), c.dbeta_prod(&[0, 1, 2]));
        assert_eq!(d.order_part(0), DiffOp::multiplication(c.parts().h()));
    }

    #[test]
    fn specialization_commutes_with_construction() {
        let sym = Cms::new().u_tilde(1);
        let spec = Cms::new().specialize(Rational::new(2, 5)).u_tilde(1);
        assert_eq!(sym.substitute_m(&Rational::new(2, 5)).unwrap(), spec);
    }
}
