use ag2_core::exactfield::{poly_gcd, prs_gcd, Exponent, MPoly, RatFunc, Rational, Semantics};
use proptest::prelude::*;

fn poly(sem: Semantics, lo: i32) -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0..3i32, lo..3i32, lo..3i32), -5i64..=5), 1..5).prop_map(move |ts| {
        MPoly::from_terms(
            sem,
            ts.into_iter()
                .map(|((m, a, b), c)| (Exponent::new(m, a, b), Rational::from_int(c))),
        )
        .unwrap()
    })
}

fn nonzero_poly(sem: Semantics, lo: i32) -> impl Strategy<Value = MPoly> {
    poly(sem, lo).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc(sem: Semantics) -> impl Strategy<Value = RatFunc> {
    let lo = if sem == Semantics::Trig { -2 } else { 0 };
    (poly(sem, lo), nonzero_poly(sem, lo)).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn point() -> impl Strategy<Value = (Rational, Rational, Rational)> {
    let r = || (-7i64..=7, 1i64..=5).prop_map(|(n, d)| Rational::new(n, d));
    (r(), r(), r())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in ratfunc(Semantics::Trig), b in ratfunc(Semantics::Trig), c in ratfunc(Semantics::Trig)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_after_round_trip(a in ratfunc(Semantics::Rational), b in ratfunc(Semantics::Rational)) {
        prop_assume!(!b.is_zero());
        let q = a.checked_div(&b).unwrap();
        prop_assert_eq!(&q * &b, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(Semantics::Trig), b in ratfunc(Semantics::Trig), (m, x, y) in point()) {
        let (ea, eb) = (a.eval(&m, &x, &y), b.eval(&m, &x, &y));
        if let (Ok(ea), Ok(eb)) = (ea, eb) {
            prop_assert_eq!((&a + &b).eval(&m, &x, &y).unwrap(), &ea + &eb);
            prop_assert_eq!((&a * &b).eval(&m, &x, &y).unwrap(), &ea * &eb);
        }
    }

    #[test]
    fn derivatives_commute_and_obey_leibniz(a in ratfunc(Semantics::Trig), b in ratfunc(Semantics::Trig)) {
        prop_assert_eq!(a.dy(1).dy(2), a.dy(2).dy(1));
        prop_assert_eq!((&a * &b).dy(1), &(&a.dy(1) * &b) + &(&a * &b.dy(1)));
    }

    #[test]
    fn modular_gcd_agrees_with_prs(f in nonzero_poly(Semantics::Rational, 0), g in nonzero_poly(Semantics::Rational, 0), h in nonzero_poly(Semantics::Rational, 0)) {
        let a = &f * &g;
        let b = &f * &h;
        let fast = poly_gcd(&a, &b);
        prop_assert_eq!(&fast, &prs_gcd(&a, &b));
        prop_assert!(a.div_exact(&fast).is_some());
        prop_assert!(b.div_exact(&fast).is_some());
        prop_assert!(fast.div_exact(&f.primitive_integer()).is_some() || f.is_constant());
    }
}
