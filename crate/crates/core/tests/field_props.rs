use num_rational::BigRational;
use proptest::prelude::*;
use qgarnier::field::{Bindings, Monomial, ParamSymbol, Poly, RatFunc};
use qgarnier::parse::parse_ratfunc;

const SYMS: [ParamSymbol; 4] = [ParamSymbol::H, ParamSymbol::A1, ParamSymbol::T1, ParamSymbol::T2];

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..=3, 0u16..=2, 0usize..4, 0u16..=1, 0usize..4), 1..4).prop_map(|terms| {
        let mut p = Poly::zero();
        for (c, e1, s1, e2, s2) in terms {
            let m = Monomial::var_pow(SYMS[s1], e1).mul(&Monomial::var_pow(SYMS[s2], e2));
            p = p.add(&Poly::term(m, BigRational::from_integer(c.into())));
        }
        p
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn r(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, rng_seed: proptest::test_runner::RngSeed::Fixed(7), ..ProptestConfig::default() })]

    #[test]
    fn addition_is_associative(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn multiplication_distributes(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn inverse_gives_one(a in ratfunc()) {
        prop_assume!(!a.is_zero());
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn normalization_is_canonical(n in poly(), d in nonzero_poly(), f in nonzero_poly()) {
        // the same fraction built with a planted common factor
        let plain = RatFunc::new(n.clone(), d.clone()).unwrap();
        let padded = RatFunc::new(n.mul(&f), d.mul(&f)).unwrap();
        prop_assert_eq!(&plain, &padded);
        let again = RatFunc::new(plain.numer().clone(), plain.denom().clone()).unwrap();
        prop_assert_eq!(plain, again);
    }

    #[test]
    fn leibniz_rule(f in ratfunc(), g in ratfunc()) {
        let v = ParamSymbol::T1;
        prop_assert_eq!(f.mul(&g).diff(v), f.diff(v).mul(&g).add(&f.mul(&g.diff(v))));
    }

    #[test]
    fn specialization_commutes_with_arithmetic(a in ratfunc(), b in ratfunc(), x in 2i64..9, y in -9i64..-1) {
        let mut at = Bindings::new();
        at.insert(ParamSymbol::T1, RatFunc::from_int(x));
        at.insert(ParamSymbol::T2, RatFunc::from_int(y));
        let (sa, sb) = match (a.specialize(&at), b.specialize(&at)) {
            (Ok(sa), Ok(sb)) => (sa, sb),
            _ => return Ok(()),
        };
        if let Ok(s) = a.add(&b).specialize(&at) {
            prop_assert_eq!(s, sa.add(&sb));
        }
        if let Ok(s) = a.mul(&b).specialize(&at) {
            prop_assert_eq!(s, sa.mul(&sb));
        }
    }
}

#[test]
fn canonical_text_survives_reparse() {
    for s in ["(t1 + t2)/(t1 - t2)", "h/2", "(a1*h - 3)/(2*t1^2*t2)", "0", "-7/3"] {
        let v = r(s);
        assert_eq!(r(&v.to_text()), v);
    }
}

#[test]
fn normalized_denominator_is_primitive_and_positive() {
    let v = r("(2*h)/(-4*t1 + 6*t2)");
    let (content, _) = v.denom().primitive();
    assert!(content == BigRational::from_integer(1.into()));
    assert!(v.denom().leading_coeff() > BigRational::from_integer(0.into()));
    assert_eq!(v, r("h/(3*t2 - 2*t1)"));
}
