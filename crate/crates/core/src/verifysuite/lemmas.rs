//! Trigonometric identities among the `β`'s and `α`'s, stated on a frame so that
//! rotated and doubled variants come from the same code.

use super::{Check, Identity, OpExpr, Suite};
use crate::ag2config::{grad_op, laplacian_apply, Frame, Hyper, Variant, CYCLIC};
use crate::exactfield::{RatFunc, Rational, Semantics};

const TRIG: Semantics = Semantics::Trig;

pub const LEMMA_IDS: [&str; 15] =
    ["L1", "L2", "L3", "L4", "C5a", "C5b", "L6a", "L6b", "L7a", "L7b", "L7c", "L7d", "L8", "L9", "L10"];

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn k(c: &Rational) -> RatFunc {
    RatFunc::constant(TRIG, c)
}

struct F<'a>(&'a Frame);

impl F<'_> {
    fn coth(&self, i: usize) -> RatFunc {
        self.0.hb(i, Hyper::Coth)
    }
    fn tanh(&self, i: usize) -> RatFunc {
        self.0.hb(i, Hyper::Tanh)
    }
    fn isq(&self, i: usize) -> RatFunc {
        self.0.hb(i, Hyper::InvSinhSq)
    }
    fn icq(&self, i: usize) -> RatFunc {
        self.0.hb(i, Hyper::InvCoshSq)
    }
    fn isq2(&self, i: usize) -> RatFunc {
        self.0.h2b(i, Hyper::InvSinhSq)
    }
    fn acoth(&self, i: usize) -> RatFunc {
        self.0.ha(i, Hyper::Coth)
    }
    fn aisq(&self, i: usize) -> RatFunc {
        self.0.ha(i, Hyper::InvSinhSq)
    }
    fn bb(&self, i: usize, j: usize) -> Rational {
        self.0.bb(i, j)
    }
    fn sum(&self, f: impl Fn(usize) -> RatFunc) -> RatFunc {
        (0..3).fold(RatFunc::zero(TRIG), |acc, i| &acc + &f(i))
    }
    fn cyc(&self, f: impl Fn([usize; 3]) -> RatFunc) -> RatFunc {
        CYCLIC.iter().fold(RatFunc::zero(TRIG), |acc, s| &acc + &f(*s))
    }
    /// `Σσ <bσ2, bσ3> / (sinh² bσ2 sinh² bσ3) ∂_{bσ1}`.
    fn x_gradient(&self) -> OpExpr {
        OpExpr::Sum(
            CYCLIC
                .iter()
                .map(|s| {
                    let c = (&self.isq(s[1]) * &self.isq(s[2])).scale(&self.bb(s[1], s[2]));
                    OpExpr::Compose(vec![OpExpr::Mul(c), OpExpr::Leaf(self.0.db(s[0]))])
                })
                .collect(),
        )
    }
}

/// The identities of one lemma on a frame; `None` for an unknown id.
pub fn lemma_identities(id: &str, fr: &Frame) -> Option<Vec<Identity>> {
    let f = F(fr);
    let w2 = fr.omega_sq();
    let x = fr.x();
    let y = fr.y();
    let out = match id {
        "L1" => {
            let mut lhs = RatFunc::zero(TRIG);
            for (j, kk) in [(0, 1), (0, 2), (1, 2)] {
                lhs = &lhs + &(&f.coth(j) * &f.coth(kk)).scale(&f.bb(j, kk));
            }
            vec![Identity::func(lhs, k(&w2))]
        }
        "L2" => {
            let lhs = f.cyc(|s| (&(&f.coth(s[0]) * &f.isq(s[1])) * &f.isq(s[2])).scale(&f.bb(s[1], s[2])));
            vec![Identity::func(lhs, x.scale(&q(-2)))]
        }
        "L3" => {
            let s = f.cyc(|s| (&(&f.tanh(s[0]) * &f.isq(s[1])) * &f.isq(s[2])).scale(&f.bb(s[1], s[2])));
            vec![Identity::func(s.scale(&Rational::new(-1, 2)), &x + &y.scale(&q(4)))]
        }
        "L4" => {
            let inner = OpExpr::Sum((0..3).map(|i| OpExpr::Compose(vec![OpExpr::Mul(f.coth(i)), OpExpr::Leaf(fr.db(i))])).collect());
            let lhs = OpExpr::Compose(vec![OpExpr::Mul(x.scale(&q(-1))), inner]);
            vec![Identity::op(lhs, f.x_gradient())]
        }
        "C5a" => vec![Identity::op(OpExpr::Leaf(grad_op(&x)), f.x_gradient())],
        "C5b" => {
            let rhs = OpExpr::Sum(
                CYCLIC
                    .iter()
                    .map(|s| {
                        let c = (&f.isq2(s[1]) * &f.isq2(s[2])).scale(&(&q(2) * &f.bb(s[1], s[2])));
                        OpExpr::Compose(vec![OpExpr::Mul(c), OpExpr::Leaf(fr.db(s[0]))])
                    })
                    .collect(),
            );
            vec![Identity::op(OpExpr::Leaf(grad_op(&y)), rhs)]
        }
        "L6a" => {
            let br = &RatFunc::int(TRIG, 2) + &f.sum(|j| f.isq(j));
            vec![Identity::func(laplacian_apply(&x), (&br * &x).scale(&(&q(4) * &w2)))]
        }
        "L6b" => {
            let br = &RatFunc::int(TRIG, 2) + &f.sum(|j| f.isq2(j));
            vec![Identity::func(laplacian_apply(&y), (&br * &y).scale(&(&q(16) * &w2)))]
        }
        "L7a" | "L7b" | "L7c" | "L7d" => {
            let on_alpha = id == "L7a" || id == "L7b";
            let (isq0, coth0) = if on_alpha { (f.aisq(0), f.acoth(0)) } else { (f.isq(0), f.coth(0)) };
            let sign = if on_alpha { 1 } else { -1 };
            let lhs = if id == "L7a" || id == "L7c" {
                let a = (&(&f.icq(1) + &f.icq(2)) * &isq0).scale(&q(-1));
                let t = &f.tanh(1) + &f.tanh(2).scale(&q(sign));
                &a + &(&(&t * &coth0) * &isq0).scale(&q(2))
            } else {
                let a = &(&f.isq(1) + &f.isq(2)) * &isq0;
                let t = &f.coth(1) + &f.coth(2).scale(&q(sign));
                &a + &(&(&t * &coth0) * &isq0).scale(&q(2))
            };
            let rhs = if id == "L7a" || id == "L7c" { &f.icq(1) * &f.icq(2) } else { &f.isq(1) * &f.isq(2) };
            vec![Identity::func(lhs, rhs)]
        }
        "L8" => {
            let a = &(&f.coth(2) * &f.isq(2)) - &(&f.coth(1) * &f.isq(1));
            let b = &f.isq(2) - &f.isq(1);
            let lhs = &(&a * &f.aisq(0)) + &(&(&b * &f.acoth(0)) * &f.aisq(0));
            let rhs = &(&(&f.coth(2) - &f.coth(1)) * &f.isq(1)) * &f.isq(2);
            vec![Identity::func(lhs, rhs)]
        }
        "L9" => {
            let lhs = f.cyc(|s| {
                let p = &f.isq(s[1]) + &f.isq(s[2]);
                (&(&p * &f.coth(s[0])) * &f.isq(s[0])).scale(&f.bb(s[1], s[2]))
            });
            let br = &RatFunc::int(TRIG, 2) + &f.sum(|j| f.isq(j));
            vec![Identity::func(lhs, (&br * &x).scale(&q(2)))]
        }
        "L10" => {
            let lhs = f.cyc(|s| {
                let p = &f.aisq(s[1]) - &f.aisq(s[2]);
                (&(&p * &f.acoth(s[0])) * &f.aisq(s[0])).scale(&fr.aa(s[1], s[2]))
            });
            vec![Identity::func(lhs, RatFunc::zero(TRIG))]
        }
        _ => return None,
    };
    Some(out)
}

/// The base frame and its rotated and doubled variants with their id suffixes.
pub fn frames() -> Vec<(Option<Variant>, Frame)> {
    let base = Frame::base();
    let mut out = vec![(None, base)];
    for v in Variant::ALL {
        out.push((Some(v), base.variant(v)));
    }
    out
}

pub fn checks() -> Vec<Check> {
    let mut out = Vec::new();
    for id in LEMMA_IDS {
        for (v, fr) in frames() {
            let name = match v {
                None => id.to_string(),
                Some(v) => format!("{id}.{}", v.suffix()),
            };
            out.push(Check::new(name, Suite::Lemmas, move |_| lemma_identities(id, &fr).expect("catalogued id")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ag2config::substitute_variant;

    #[test]
    fn variants_are_substitutions_of_the_base_identity() {
        let base = Frame::base();
        for v in Variant::ALL {
            for id in ["L2", "L3", "L9", "L7b"] {
                let b = lemma_identities(id, &base).unwrap();
                let r = lemma_identities(id, &base.variant(v)).unwrap();
                match (&b[0], &r[0]) {
                    (Identity::Func { lhs: l0, .. }, Identity::Func { lhs: l1, .. }) => {
                        // Inner products rescale under doubling, so compare up to that factor.
                        let s = substitute_variant(l0, v);
                        let factor = if v == Variant::Double && id != "L7b" { q(4) } else { q(1) };
                        assert_eq!(s.scale(&factor), *l1, "{id} {v:?}");
                    }
                    _ => unreachable!(),
                }
            }
        }
    }

    #[test]
    fn l1_at_a_point() {
        let ids = lemma_identities("L1", &Frame::base()).unwrap();
        if let Identity::Func { lhs, .. } = &ids[0] {
            assert_eq!(lhs.eval(&q(0), &q(2), &q(3)).unwrap(), q(1));
        }
    }
}
