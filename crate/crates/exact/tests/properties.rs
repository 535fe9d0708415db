use std::sync::Arc;

use cherednik_exact::groebner::{groebner, normal_form, MonomialOrder};
use cherednik_exact::{factor_irreducible, Cyclo, MPoly, Mono, Ring, UPoly};
use proptest::prelude::*;

fn ring() -> Arc<Ring> {
    Ring::plain(&["a", "b", "c"])
}

fn scalar() -> impl Strategy<Value = Cyclo> {
    (-5i64..=5, 1i64..=3, prop::option::of((0i64..6, -2i64..=2))).prop_map(|(n, d, z)| {
        let r = Cyclo::frac(n, d);
        match z {
            Some((k, m)) => &r + &(&Cyclo::zeta(3, k) * &Cyclo::from_i64(m)),
            None => r,
        }
    })
}

fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), scalar()), 0..5).prop_map(|ts| {
        let r = ring();
        let terms = ts
            .into_iter()
            .map(|((i, j, k), c)| (Mono::from_exps(&[i, j, k]), c))
            .collect();
        MPoly::from_terms(&r, terms)
    })
}

fn upoly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-6i64..=6, 1..4).prop_map(|c| {
        let mut c = c;
        c.push(1);
        UPoly::from_i64(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn cyclo_field(a in scalar(), b in scalar()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a / &b) * &b, a.clone());
        prop_assert_eq!(a.galois(2).galois(2), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factors_multiply_back(fs in prop::collection::vec(upoly(), 1..4)) {
        let f = fs.iter().fold(UPoly::one(), |acc, g| acc.mul(g));
        let fac = factor_irreducible(&f, 1);
        let back = fac.iter().fold(UPoly::one(), |acc, (g, m)| acc.mul(&g.pow(*m as u32)));
        prop_assert_eq!(back, f.monic());
        prop_assert!(!fac.is_empty());
    }

    #[test]
    fn factors_over_zeta3(fs in prop::collection::vec(upoly(), 1..3)) {
        let f = fs.iter().fold(UPoly::one(), |acc, g| acc.mul(g));
        let fac = factor_irreducible(&f, 3);
        let back = fac.iter().fold(UPoly::one(), |acc, (g, m)| acc.mul(&g.pow(*m as u32)));
        prop_assert_eq!(back, f.monic());
        // t^2 + t + 1 always splits once ζ3 is adjoined
        if fs.iter().any(|g| g == &UPoly::from_i64(&[1, 1, 1])) {
            prop_assert!(fac.iter().all(|(g, _)| g != &UPoly::from_i64(&[1, 1, 1])));
        }
    }

    #[test]
    fn groebner_contains_generators(gs in prop::collection::vec(poly(), 1..3)) {
        let order = MonomialOrder::Grevlex;
        let basis = groebner(&gs, &order).unwrap();
        for g in &gs {
            prop_assert!(normal_form(g, &basis, &order).is_zero());
        }
    }
}
