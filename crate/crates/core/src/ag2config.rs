//! The `AG2` configuration in lattice coordinates `y_j = <β_j, x>` with `ω = 1`.
//!
//! Every vector of the configuration is an integer combination of `β1, β2`, so its
//! pairing with `x` is an integer linear form in `(y1, y2)`. Inner products come
//! from the base Gram matrix `[[2, 1], [1, 2]]`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exactfield::{Exponent, MPoly, RatFunc, Rational, Semantics, Var};
use crate::weylops::DiffOp;

/// Gram matrix of `β1, β2`.
pub const BASE_GRAM: [[i64; 2]; 2] = [[2, 1], [1, 2]];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unknown vector id `{0}`")]
    UnknownVector(String),
}

/// The linear form `c1*y1 + c2*y2`, i.e. the vector `c1*β1 + c2*β2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec2Form {
    pub c1: i64,
    pub c2: i64,
}

impl Vec2Form {
    pub const fn new(c1: i64, c2: i64) -> Self {
        Vec2Form { c1, c2 }
    }

    pub fn scale(self, k: i64) -> Self {
        Vec2Form::new(self.c1 * k, self.c2 * k)
    }

    /// `<self, other>` from the base Gram matrix.
    pub fn dot(self, other: Vec2Form) -> i64 {
        let a = [self.c1, self.c2];
        let b = [other.c1, other.c2];
        let mut s = 0;
        for i in 0..2 {
            for j in 0..2 {
                s += a[i] * BASE_GRAM[i][j] * b[j];
            }
        }
        s
    }

    pub fn inner(self, other: Vec2Form) -> Rational {
        Rational::from_int(self.dot(other))
    }

    /// Image under the linear map sending `β1 ↦ img1`, `β2 ↦ img2`.
    pub fn map(self, img1: Vec2Form, img2: Vec2Form) -> Vec2Form {
        Vec2Form::new(self.c1 * img1.c1 + self.c2 * img2.c1, self.c1 * img1.c2 + self.c2 * img2.c2)
    }
}

impl std::ops::Neg for Vec2Form {
    type Output = Vec2Form;
    fn neg(self) -> Vec2Form {
        Vec2Form::new(-self.c1, -self.c2)
    }
}

impl std::ops::Add for Vec2Form {
    type Output = Vec2Form;
    fn add(self, o: Vec2Form) -> Vec2Form {
        Vec2Form::new(self.c1 + o.c1, self.c2 + o.c2)
    }
}

impl std::ops::Sub for Vec2Form {
    type Output = Vec2Form;
    fn sub(self, o: Vec2Form) -> Vec2Form {
        Vec2Form::new(self.c1 - o.c1, self.c2 - o.c2)
    }
}

/// The nine positive vectors of the configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VecId {
    B1,
    B2,
    B3,
    A1,
    A2,
    A3,
    B1x2,
    B2x2,
    B3x2,
}

impl VecId {
    pub const ALL: [VecId; 9] = [
        VecId::B1,
        VecId::B2,
        VecId::B3,
        VecId::A1,
        VecId::A2,
        VecId::A3,
        VecId::B1x2,
        VecId::B2x2,
        VecId::B3x2,
    ];

    pub fn beta(i: usize) -> VecId {
        [VecId::B1, VecId::B2, VecId::B3][i]
    }

    pub fn alpha(i: usize) -> VecId {
        [VecId::A1, VecId::A2, VecId::A3][i]
    }

    pub fn double_beta(i: usize) -> VecId {
        [VecId::B1x2, VecId::B2x2, VecId::B3x2][i]
    }

    fn name(self) -> &'static str {
        match self {
            VecId::B1 => "b1",
            VecId::B2 => "b2",
            VecId::B3 => "b3",
            VecId::A1 => "a1",
            VecId::A2 => "a2",
            VecId::A3 => "a3",
            VecId::B1x2 => "2b1",
            VecId::B2x2 => "2b2",
            VecId::B3x2 => "2b3",
        }
    }
}

impl fmt::Display for VecId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VecId {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VecId::ALL
            .iter()
            .copied()
            .find(|v| v.name() == s)
            .ok_or_else(|| ConfigError::UnknownVector(s.to_string()))
    }
}

/// The pairing `<γ, x>` of a configuration vector as a linear form.
pub fn linear_form(id: VecId) -> Vec2Form {
    match id {
        VecId::B1 => Vec2Form::new(1, 0),
        VecId::B2 => Vec2Form::new(0, 1),
        VecId::B3 => Vec2Form::new(-1, 1),
        VecId::A1 => Vec2Form::new(-1, 2),
        VecId::A2 => Vec2Form::new(-2, 1),
        VecId::A3 => Vec2Form::new(1, 1),
        VecId::B1x2 => Vec2Form::new(2, 0),
        VecId::B2x2 => Vec2Form::new(0, 2),
        VecId::B3x2 => Vec2Form::new(-2, 2),
    }
}

/// Tabulated inner products among `β`'s and `α`'s; doubled vectors scale by 2.
pub fn inner(a: VecId, b: VecId) -> Rational {
    fn base(v: VecId) -> (VecId, i64) {
        match v {
            VecId::B1x2 => (VecId::B1, 2),
            VecId::B2x2 => (VecId::B2, 2),
            VecId::B3x2 => (VecId::B3, 2),
            other => (other, 1),
        }
    }
    let ((a, ka), (b, kb)) = (base(a), base(b));
    use VecId::*;
    let v = match (a, b) {
        (B1, B1) | (B2, B2) | (B3, B3) => 2,
        (B1, B2) | (B2, B1) | (B2, B3) | (B3, B2) => 1,
        (B1, B3) | (B3, B1) => -1,
        (A1, A1) | (A2, A2) | (A3, A3) => 6,
        (A1, B1) | (B1, A1) | (A2, B2) | (B2, A2) | (A3, B3) | (B3, A3) => 0,
        (A1, B2) | (B2, A1) | (A1, B3) | (B3, A1) => 3,
        (A2, B1) | (B1, A2) => -3,
        (A2, B3) | (B3, A2) => 3,
        (A3, B1) | (B1, A3) | (A3, B2) | (B2, A3) => 3,
        (A1, A2) | (A2, A1) => 3,
        (A1, A3) | (A3, A1) => 3,
        (A2, A3) | (A3, A2) => -3,
        _ => unreachable!("all pairs covered"),
    };
    Rational::from_int(v * ka * kb)
}

/// Symmetry substitutions of the configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `β1 → -β3, β2 → β1, β3 → β2, α1 → α3, α2 → α1, α3 → -α2`.
    Cw,
    /// `β1 → β2, β2 → β3, β3 → -β1, α1 → α2, α2 → -α3, α3 → α1`.
    Ccw,
    /// Every vector is doubled.
    Double,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Cw, Variant::Ccw, Variant::Double];

    pub fn suffix(self) -> &'static str {
        match self {
            Variant::Cw => "cw",
            Variant::Ccw => "ccw",
            Variant::Double => "x2",
        }
    }

    /// Images of `β1, β2` under the substitution.
    pub fn basis_images(self) -> (Vec2Form, Vec2Form) {
        match self {
            Variant::Cw => (-linear_form(VecId::B3), linear_form(VecId::B1)),
            Variant::Ccw => (linear_form(VecId::B2), linear_form(VecId::B3)),
            Variant::Double => (Vec2Form::new(2, 0), Vec2Form::new(0, 2)),
        }
    }

    pub fn apply(self, v: Vec2Form) -> Vec2Form {
        let (i1, i2) = self.basis_images();
        v.map(i1, i2)
    }
}

/// Applies a substitution to a vector id: `(sign, image)`, or `None` when the image
/// is not one of the nine stored vectors (doubling an `α` or a `2β`).
pub fn rotate_variant(id: VecId, dir: Variant) -> Option<(i64, VecId)> {
    let img = dir.apply(linear_form(id));
    for cand in VecId::ALL {
        let f = linear_form(cand);
        if f == img {
            return Some((1, cand));
        }
        if -f == img {
            return Some((-1, cand));
        }
    }
    None
}

/// Substitutes `z^c ↦ z^{R c}` for the substitution `R` (trig semantics), which is
/// the effect of the substitution on any expression built from hyperbolic functions.
pub fn substitute_variant(f: &RatFunc, dir: Variant) -> RatFunc {
    assert_eq!(f.semantics(), Semantics::Trig);
    let (i1, i2) = dir.basis_images();
    let map = |p: &MPoly| -> MPoly {
        MPoly::from_terms(
            Semantics::Trig,
            p.terms().iter().map(|(e, c)| {
                let img = Vec2Form::new(e.t1 as i64, e.t2 as i64).map(i1, i2);
                (Exponent::new(e.m, img.c1 as i32, img.c2 as i32), c.clone())
            }),
        )
        .expect("trig semantics admits Laurent exponents")
    };
    RatFunc::new(map(f.num()), map(f.den())).expect("nonzero denominator")
}

/// `∂_γ = <β1,γ> ∂_{y1} + <β2,γ> ∂_{y2}`.
pub fn dir_derivative(sem: Semantics, v: Vec2Form) -> DiffOp {
    let b1 = Vec2Form::new(1, 0);
    let b2 = Vec2Form::new(0, 1);
    let d1 = DiffOp::dy(sem, 1).scale(&b1.inner(v));
    let d2 = DiffOp::dy(sem, 2).scale(&b2.inner(v));
    &d1 + &d2
}

/// `∂_γ φ` for a function.
pub fn dir_apply(v: Vec2Form, phi: &RatFunc) -> RatFunc {
    let b1 = Vec2Form::new(1, 0);
    let b2 = Vec2Form::new(0, 1);
    let (k1, k2) = (b1.dot(v), b2.dot(v));
    let mut acc = RatFunc::zero(phi.semantics());
    if k1 != 0 {
        acc = &acc + &phi.dy(1).scale(&Rational::from_int(k1));
    }
    if k2 != 0 {
        acc = &acc + &phi.dy(2).scale(&Rational::from_int(k2));
    }
    acc
}

/// `Δ = Σ_{jk} <β_j, β_k> ∂_{y_j} ∂_{y_k} = 2∂1² + 2∂1∂2 + 2∂2²`.
pub fn laplacian(sem: Semantics) -> DiffOp {
    let two = RatFunc::int(sem, 2);
    DiffOp::from_terms(sem, [((2, 0), two.clone()), ((1, 1), two.clone()), ((0, 2), two)])
        .expect("same semantics")
}

/// `Δ φ` for a function.
pub fn laplacian_apply(phi: &RatFunc) -> RatFunc {
    let d1 = phi.dy(1);
    let d2 = phi.dy(2);
    let s = &(&d1.dy(1) + &d2.dy(2)) + &d1.dy(2);
    s.scale(&Rational::from_int(2))
}

/// `∂_{∇φ} = Σ_{jk} <β_j, β_k> (∂_{y_j} φ) ∂_{y_k}`.
pub fn grad_op(phi: &RatFunc) -> DiffOp {
    let sem = phi.semantics();
    let (d1, d2) = (phi.dy(1), phi.dy(2));
    let two = Rational::from_int(2);
    let c1 = &d1.scale(&two) + &d2;
    let c2 = &d1 + &d2.scale(&two);
    DiffOp::from_terms(sem, [((1, 0), c1), ((0, 1), c2)]).expect("same semantics")
}

/// `<∇φ, ∇ψ> = Σ_{jk} <β_j, β_k> ∂_{y_j}φ ∂_{y_k}ψ`.
pub fn grad_dot(phi: &RatFunc, psi: &RatFunc) -> RatFunc {
    let (a1, a2) = (phi.dy(1), phi.dy(2));
    let (b1, b2) = (psi.dy(1), psi.dy(2));
    let two = Rational::from_int(2);
    
    &(&(&a1 * &b1).scale(&two) + &(&a2 * &b2).scale(&two)) + &(&(&a1 * &b2) + &(&a2 * &b1))
}

/// Hyperbolic building blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hyper {
    Sinh,
    Cosh,
    Coth,
    Tanh,
    InvSinhSq,
    InvCoshSq,
}

/// The named hyperbolic function of the form `v` in `z_i = e^{y_i}` (trig semantics).
pub fn hyper(v: Vec2Form, kind: Hyper) -> RatFunc {
    let sem = Semantics::Trig;
    let e = |k: i64| -> MPoly {
        MPoly::monomial(sem, Exponent::new(0, (v.c1 * k) as i32, (v.c2 * k) as i32), Rational::one())
            .expect("Laurent exponents allowed")
    };
    let one = MPoly::one(sem);
    let rf = |n: MPoly, d: MPoly| RatFunc::new(n, d).expect("nonzero denominator");
    let e2 = e(2);
    match kind {
        Hyper::Sinh => rf(&e2 - &one, e(1).scale(&Rational::from_int(2))),
        Hyper::Cosh => rf(&e2 + &one, e(1).scale(&Rational::from_int(2))),
        Hyper::Coth => rf(&e2 + &one, &e2 - &one),
        Hyper::Tanh => rf(&e2 - &one, &e2 + &one),
        Hyper::InvSinhSq => rf(e2.scale(&Rational::from_int(4)), (&e2 - &one).pow(2)),
        Hyper::InvCoshSq => rf(e2.scale(&Rational::from_int(4)), (&e2 + &one).pow(2)),
    }
}

/// The linear function `c1*w1 + c2*w2` (rational semantics).
pub fn linear(v: Vec2Form) -> RatFunc {
    let sem = Semantics::Rational;
    let w1 = MPoly::var(sem, Var::T1).scale(&Rational::from_int(v.c1));
    let w2 = MPoly::var(sem, Var::T2).scale(&Rational::from_int(v.c2));
    RatFunc::from_poly(&w1 + &w2)
}

/// A labelled copy of the configuration: the three `β`'s and three `α`'s, possibly
/// rotated or doubled. `omega_sq` plays the role of `ω²`, namely `<b1, b2>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frame {
    pub b: [Vec2Form; 3],
    pub a: [Vec2Form; 3],
}

impl Frame {
    pub fn base() -> Self {
        Frame {
            b: [VecId::B1, VecId::B2, VecId::B3].map(linear_form),
            a: [VecId::A1, VecId::A2, VecId::A3].map(linear_form),
        }
    }

    /// The frame after one substitution, expressed through the current frame.
    pub fn variant(&self, dir: Variant) -> Self {
        let [b1, b2, b3] = self.b;
        let [a1, a2, a3] = self.a;
        match dir {
            Variant::Cw => Frame { b: [-b3, b1, b2], a: [a3, a1, -a2] },
            Variant::Ccw => Frame { b: [b2, b3, -b1], a: [a2, -a3, a1] },
            Variant::Double => Frame { b: self.b.map(|v| v.scale(2)), a: self.a.map(|v| v.scale(2)) },
        }
    }

    pub fn omega_sq(&self) -> Rational {
        self.b[0].inner(self.b[1])
    }

    pub fn bb(&self, i: usize, j: usize) -> Rational {
        self.b[i].inner(self.b[j])
    }

    pub fn ab(&self, i: usize, j: usize) -> Rational {
        self.a[i].inner(self.b[j])
    }

    pub fn aa(&self, i: usize, j: usize) -> Rational {
        self.a[i].inner(self.a[j])
    }

    pub fn hb(&self, i: usize, k: Hyper) -> RatFunc {
        hyper(self.b[i], k)
    }

    pub fn h2b(&self, i: usize, k: Hyper) -> RatFunc {
        hyper(self.b[i].scale(2), k)
    }

    pub fn ha(&self, i: usize, k: Hyper) -> RatFunc {
        hyper(self.a[i], k)
    }

    pub fn db(&self, i: usize) -> DiffOp {
        dir_derivative(Semantics::Trig, self.b[i])
    }

    /// `X = ω² / (sinh b1 sinh b2 sinh b3)`.
    pub fn x(&self) -> RatFunc {
        let p = &(&self.hb(0, Hyper::Sinh) * &self.hb(1, Hyper::Sinh)) * &self.hb(2, Hyper::Sinh);
        p.inv().expect("nonzero").scale(&self.omega_sq())
    }

    /// `Y = ω² / (sinh 2b1 sinh 2b2 sinh 2b3)`.
    pub fn y(&self) -> RatFunc {
        let p = &(&self.h2b(0, Hyper::Sinh) * &self.h2b(1, Hyper::Sinh)) * &self.h2b(2, Hyper::Sinh);
        p.inv().expect("nonzero").scale(&self.omega_sq())
    }
}

/// The cyclic permutations `(σ(1), σ(2), σ(3))`, zero-based.
pub const CYCLIC: [[usize; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];

/// All permutations of `{0, 1, 2}`.
pub const SYMMETRIC: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_table_matches_bilinear_expansion() {
        for a in VecId::ALL {
            for b in VecId::ALL {
                assert_eq!(inner(a, b), linear_form(a).inner(linear_form(b)), "{a} {b}");
            }
        }
        assert_eq!(inner(VecId::A1, VecId::A1), &Rational::from_int(3) * &inner(VecId::B1, VecId::B1));
    }

    #[test]
    fn vector_relations_hold() {
        let f = linear_form;
        use VecId::*;
        assert_eq!(f(B2).scale(2) - f(A1), f(B1));
        assert_eq!(f(A1) - f(B3).scale(2), f(B1));
        assert_eq!(f(B3).scale(2) - f(A2), f(B2));
        assert_eq!(f(A2) + f(B1).scale(2), f(B2));
        assert_eq!(f(B2).scale(2) - f(A3), f(B3));
        assert_eq!(f(A3) - f(B1).scale(2), f(B3));
        assert_eq!(f(A1) - f(B2), f(B3));
    }

    #[test]
    fn rotations_follow_the_stated_rules() {
        use VecId::*;
        assert_eq!(rotate_variant(B2, Variant::Cw), Some((1, B1)));
        assert_eq!(rotate_variant(B1, Variant::Cw), Some((-1, B3)));
        assert_eq!(rotate_variant(A3, Variant::Cw), Some((-1, A2)));
        assert_eq!(rotate_variant(A2, Variant::Ccw), Some((-1, A3)));
        assert_eq!(rotate_variant(B3, Variant::Ccw), Some((-1, B1)));
        assert_eq!(rotate_variant(B1, Variant::Double), Some((1, B1x2)));
        assert_eq!(rotate_variant(A1, Variant::Double), None);
        let f = Frame::base();
        assert_eq!(f.variant(Variant::Cw).variant(Variant::Ccw), f);
    }

    #[test]
    fn hyper_values() {
        let z = (Rational::from_int(2), Rational::from_int(3));
        let m = Rational::zero();
        let coth = hyper(linear_form(VecId::B1), Hyper::Coth);
        assert_eq!(coth.eval(&m, &z.0, &z.1).unwrap(), Rational::new(5, 3));
        let x = Frame::base().x();
        assert_eq!(x.eval(&m, &z.0, &z.1).unwrap(), Rational::new(12, 5));
    }

    #[test]
    fn laplacian_of_sinh_is_eigen() {
        for id in VecId::ALL {
            let v = linear_form(id);
            let s = hyper(v, Hyper::Sinh);
            assert_eq!(laplacian_apply(&s), s.scale(&v.inner(v)));
            assert_eq!(laplacian(Semantics::Trig).apply(&s).unwrap(), s.scale(&v.inner(v)));
        }
    }

    #[test]
    fn directional_derivative_of_beta1() {
        let d = dir_derivative(Semantics::Trig, linear_form(VecId::B1));
        assert_eq!(d.coeff((1, 0)), RatFunc::int(Semantics::Trig, 2));
        assert_eq!(d.coeff((0, 1)), RatFunc::int(Semantics::Trig, 1));
        let v = linear_form(VecId::B1);
        let s = hyper(v, Hyper::Sinh);
        assert_eq!(d.apply(&s).unwrap(), hyper(v, Hyper::Cosh).scale(&Rational::from_int(2)));
    }
}
