use contactkit::algebra::{Monomial, Poly, Rat, RatFn};
use contactkit::cli::{parse_ratfn, print};
use proptest::prelude::*;

const N: usize = 2;

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Rat::new(p, q))
}

fn poly() -> impl Strategy<Value = Poly> {
    let term = (prop::collection::vec(0u32..=2, 2 * N + 1), rat())
        .prop_map(|(e, c)| (Monomial::from_exponents(&e), c));
    prop::collection::vec(term, 0..5).prop_map(|t| Poly::from_terms(N, t))
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfn() -> impl Strategy<Value = RatFn> {
    (poly(), nonzero_poly()).prop_map(|(a, b)| RatFn::new(a, b).unwrap())
}

fn point() -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(rat(), 2 * N + 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(N), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), p in point()) {
        prop_assert_eq!((&a * &b).eval(&p), &a.eval(&p) * &b.eval(&p));
        prop_assert_eq!((&a + &b).eval(&p), &a.eval(&p) + &b.eval(&p));
    }

    #[test]
    fn mixed_partials_commute(f in ratfn(), i in 0..2 * N + 1, j in 0..2 * N + 1) {
        let fij = f.partial(i).unwrap().partial(j).unwrap();
        let fji = f.partial(j).unwrap().partial(i).unwrap();
        prop_assert_eq!(fij, fji);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn ratfn_equality_is_an_equivalence(f in ratfn(), g in ratfn(), k in nonzero_poly()) {
        // Same value, different representation.
        let scaled = RatFn::new(f.num() * &k, f.den() * &k).unwrap();
        prop_assert!(f.ratfn_eq(&f));
        prop_assert!(f.ratfn_eq(&scaled) && scaled.ratfn_eq(&f));
        if f.ratfn_eq(&g) {
            prop_assert!(scaled.ratfn_eq(&g));
        }
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
    }

    #[test]
    fn field_operations(f in ratfn(), g in ratfn().prop_filter("nonzero", |g| !g.is_zero())) {
        prop_assert_eq!(&(&f / &g) * &g, f.clone());
        prop_assert!((&g * &g.recip().unwrap()).is_one());
    }

    #[test]
    fn parse_print_roundtrip(f in ratfn()) {
        let text = print::ratfn(&f);
        prop_assert_eq!(parse_ratfn(&text, N).unwrap(), f);
    }

    #[test]
    fn poly_roundtrip(p in poly()) {
        let f = RatFn::from_poly(p);
        let text = print::ratfn(&f);
        let back = parse_ratfn(&text, N).unwrap();
        // Polynomials print without a denominator and re-parse to the same terms.
        prop_assert!(back.den().is_one());
        prop_assert_eq!(back.num(), f.num());
    }
}
