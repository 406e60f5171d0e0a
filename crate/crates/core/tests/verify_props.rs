use std::collections::HashSet;

use ag2_core::ag2config::{grad_dot, grad_op, laplacian, laplacian_apply, Frame};
use ag2_core::cmsbuild::{Cms, Mutation};
use ag2_core::exactfield::{Exponent, MPoly, RatFunc, Rational, Semantics, Var};
use ag2_core::ratlimit::RationalModel;
use ag2_core::verifysuite::{catalog, find_check, oracle_compare, run_suite, Model, OpExpr, Suite};
use ag2_core::weylops::DiffOp;
use proptest::prelude::*;

const TRIG: Semantics = Semantics::Trig;

fn laurent() -> impl Strategy<Value = RatFunc> {
    let poly = || {
        prop::collection::vec(((-2..3i32, -2..3i32), -4i64..=4), 1..4).prop_map(|ts| {
            MPoly::from_terms(TRIG, ts.into_iter().map(|((a, b), c)| (Exponent::new(0, a, b), Rational::from_int(c))))
                .unwrap()
        })
    };
    (poly(), poly().prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn small_op() -> impl Strategy<Value = DiffOp> {
    prop::collection::vec(((0..3u32, 0..3u32), laurent()), 1..4)
        .prop_map(|ts| DiffOp::from_terms(TRIG, ts).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gradient_operator_applies_as_inner_product(phi in laurent(), psi in laurent()) {
        prop_assert_eq!(grad_op(&phi).apply(&psi).unwrap(), grad_dot(&phi, &psi));
    }

    #[test]
    fn laplacian_product_rule(phi in laurent(), psi in laurent()) {
        prop_assert_eq!(laplacian(TRIG).apply(&phi).unwrap(), laplacian_apply(&phi));
        let lhs = laplacian_apply(&(&phi * &psi));
        let rhs = &(&(&phi * &laplacian_apply(&psi)) + &(&psi * &laplacian_apply(&phi)))
            + &grad_dot(&phi, &psi).scale(&Rational::from_int(2));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn oracle_agrees_with_normal_ordering(a in small_op(), b in small_op()) {
        let tree = OpExpr::Compose(vec![OpExpr::leaf(&a), OpExpr::Adjoint(b.clone())]);
        let flat = OpExpr::Leaf(&a * &b.adjoint());
        prop_assert!(oracle_compare(&tree, &flat, TRIG, 5).unwrap().equal);
        let comm = OpExpr::commutator(OpExpr::leaf(&a), OpExpr::leaf(&b));
        prop_assert!(oracle_compare(&comm, &OpExpr::Leaf(a.commutator(&b).unwrap()), TRIG, 6).unwrap().equal);
    }

    #[test]
    fn x_matches_direct_sinh_product(p in 2i64..9, q in 1i64..4, r in 2i64..9, s in 1i64..4) {
        let (z1, z2) = (Rational::new(p, q), Rational::new(r, s));
        prop_assume!(z1 != z2 && !z1.is_one() && !z2.is_one());
        let half = Rational::new(1, 2);
        let sinh = |z: &Rational| &(z - &z.inv().unwrap()) * &half;
        let z3 = &z2 / &z1;
        let expect = (&(&sinh(&z1) * &sinh(&z2)) * &sinh(&z3)).inv().unwrap();
        let x = Frame::base().x().eval(&Rational::zero(), &z1, &z2).unwrap();
        prop_assert_eq!(x, expect);
    }
}

#[test]
fn catalog_ids_are_unique() {
    let ids: Vec<String> = catalog().into_iter().map(|c| c.id).collect();
    let set: HashSet<&String> = ids.iter().collect();
    assert_eq!(set.len(), ids.len());
    assert!(find_check("no-such-check").is_err());
    assert!("bogus".parse::<Suite>().is_err());
}

#[test]
fn specializations_of_m_pass() {
    for m in [Rational::zero(), Rational::one(), Rational::new(-1, 3), Rational::new(2, 5)] {
        let model = Model::new(Cms::new().specialize(m.clone()));
        for id in ["intertwining", "zero.sum", "zero.EF", "rat.intertwining", "rat.order", "H2a"] {
            let r = find_check(id).unwrap().run(&model);
            assert!(r.pass, "{id} at m = {m}");
        }
    }
}

#[test]
fn specialized_mutation_still_detected() {
    let model = Model::new(Cms::new().specialize(Rational::new(2, 5)).mutate(Mutation::HiiiCoeff));
    assert!(!find_check("intertwining").unwrap().run(&model).pass);
}

#[test]
fn parallel_and_serial_runs_agree() {
    let model = Model::new(Cms::new());
    for suite in [Suite::Lemmas, Suite::Section3, Suite::Rational] {
        let a = run_suite(&model, suite, true);
        let b = run_suite(&model, suite, false);
        let key = |r: &ag2_core::verifysuite::VerificationReport| (r.check_id.clone(), r.pass, r.residual.clone());
        assert_eq!(a.iter().map(key).collect::<Vec<_>>(), b.iter().map(key).collect::<Vec<_>>());
    }
}

fn homogeneous_degree(p: &MPoly) -> Option<i32> {
    let mut degs = p.terms().iter().map(|(e, _)| e.t1 + e.t2);
    let d = degs.next()?;
    degs.all(|x| x == d).then_some(d)
}

#[test]
fn rational_intertwiner_is_homogeneous() {
    let r = RationalModel::build(None, Mutation::None);
    for (&(a, b), c) in r.dr.terms() {
        let dn = homogeneous_degree(c.num()).expect("homogeneous numerator");
        let dd = homogeneous_degree(c.den()).expect("homogeneous denominator");
        assert_eq!(dn - dd, (a + b) as i32 - 3, "term {:?}", (a, b));
    }
    for op in [&r.hr, &r.h0r] {
        let c = op.coeff((0, 0));
        assert_eq!(homogeneous_degree(c.num()).unwrap() - homogeneous_degree(c.den()).unwrap(), -2);
    }
}

#[test]
fn rational_hamiltonians_differ_by_short_root_potential() {
    let r = RationalModel::build(None, Mutation::None);
    let m = RatFunc::var(Semantics::Rational, Var::M);
    let k = (&m.scale(&Rational::from_int(3)) + &RatFunc::one(Semantics::Rational)).scale(&Rational::from_int(4));
    let w = |v| RatFunc::var(Semantics::Rational, v);
    let l3 = &w(Var::T2) - &w(Var::T1);
    let inv_sq = |l: RatFunc| l.pow(2).inv().unwrap();
    let pot = &(&inv_sq(w(Var::T1)) + &inv_sq(w(Var::T2))) + &inv_sq(l3);
    let diff = &r.hr - &r.h0r;
    assert_eq!(diff, DiffOp::multiplication(&k * &pot));
}
