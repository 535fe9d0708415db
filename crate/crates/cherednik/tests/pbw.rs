//! Properties of PBW normal forms and the truncation inverse.

mod common;

use std::sync::Arc;

use cherednik::center::InvariantSystem;
use cherednik::pbw::{trunc_inverse, Algebra};
use cherednik::ReflectionGroup;
use cherednik_exact::{Cyclo, MPoly};
use common::{c_order, small_pbw};
use proptest::prelude::*;

fn b2() -> Arc<Algebra> {
    Algebra::new(ReflectionGroup::builtin("B2").unwrap(), false)
}

fn terms() -> impl Strategy<Value = Vec<(i8, [u8; 4], usize)>> {
    prop::collection::vec((-3i8..=3, [0u8..=1, 0u8..=1, 0u8..=1, 0u8..=1], 0usize..8), 1..3)
}

fn homogeneous(d: [u8; 4]) -> impl Strategy<Value = Vec<(i8, [u8; 4], usize)>> {
    prop::collection::vec((1i8..=3, Just(d), 0usize..8), 1..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplication_is_associative(a in terms(), b in terms(), c in terms()) {
        let alg = b2();
        let (a, b, c) = (small_pbw(&alg, &a), small_pbw(&alg, &b), small_pbw(&alg, &c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn bidegree_is_additive(a in homogeneous([1, 0, 0, 1]), b in homogeneous([0, 1, 1, 1])) {
        let alg = b2();
        let (a, b) = (small_pbw(&alg, &a), small_pbw(&alg, &b));
        let p = a.mul(&b);
        prop_assume!(!p.is_zero());
        let (da, db) = (a.bidegree().unwrap(), b.bidegree().unwrap());
        prop_assert_eq!(p.bidegree(), Some((da.0 + db.0, da.1 + db.1)));
    }

    #[test]
    fn trunc_is_equivariant(a in terms(), w in 0usize..8) {
        let alg = b2();
        let g = &alg.group;
        let a = small_pbw(&alg, &a);
        let conj = alg.group_element(w).mul(&a).mul(&alg.group_element(g.inv(w)));
        prop_assert_eq!(conj.trunc(), &alg.act(w, a.trunc()));
    }
}

fn check_trunc_inverse(name: &str) {
    let alg = Algebra::new(ReflectionGroup::builtin(name).unwrap(), false);
    let inv = InvariantSystem::compute(&alg, None).unwrap();
    let y0 = alg.group.regular_vector(0);
    let y1 = alg.group.regular_vector(17);
    for f in &inv.gens {
        let z = trunc_inverse(&alg, f, &y0).unwrap();
        assert_eq!(z.trunc(), f, "{name}: trunc ∘ trunc_inverse");
        assert!(z.is_central());
        // independent of the regular vector
        assert_eq!(trunc_inverse(&alg, f, &y1).unwrap(), z, "{name}: y_reg dependence");
        // every correction term lies in C₀·H
        for (w, h) in z.support() {
            if w != 0 {
                assert!(c_order(&alg, h).unwrap() >= 1, "{name}: coefficient of w{w} not in C₀");
            }
        }
        // C₀^m·Z: scaling by a degree-m monomial in C pushes the corrections to C₀^(m+1)
        let m = alg.c(0).mul(&alg.c(alg.num_params() - 1));
        let zm = z.mul_poly_left(&m);
        for (w, h) in zm.support() {
            if w != 0 {
                assert!(c_order(&alg, h).unwrap() >= 3);
            }
        }
    }
}

#[test]
fn trunc_inverse_b2() {
    check_trunc_inverse("B2");
}

#[test]
fn trunc_inverse_dihedral() {
    check_trunc_inverse("dih10");
}

#[test]
fn non_invariant_rejected() {
    let alg = b2();
    let y = alg.group.regular_vector(0);
    assert!(trunc_inverse(&alg, &alg.x(0), &y).is_err());
    assert!(trunc_inverse(&alg, &MPoly::zero(alg.ring()), &y).unwrap().is_zero());
    assert!(trunc_inverse(&alg, &alg.x(0).mul(&alg.y(0)).add(&alg.x(1).mul(&alg.y(1))), &[Cyclo::one(), Cyclo::one()]).is_err());
}
