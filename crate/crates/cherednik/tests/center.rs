//! Center generators, preimages, presentations and Poisson brackets.

use std::sync::OnceLock;

use cherednik::center::Center;
use cherednik::pbw::Pbw;
use cherednik::ReflectionGroup;
use cherednik_exact::groebner::GbOptions;
use cherednik_exact::{Cyclo, MPoly};
use proptest::prelude::*;

fn b2() -> &'static Center {
    static C: OnceLock<Center> = OnceLock::new();
    C.get_or_init(|| Center::new(ReflectionGroup::builtin("B2").unwrap(), 0, None).unwrap())
}

#[test]
fn reduction_mod_c0_gives_invariants() {
    let c = b2();
    let zero: Vec<(usize, Cyclo)> = (0..c.r()).map(|s| (c.alg.c_var(s), Cyclo::zero())).collect();
    for (z, f) in c.gens.iter().zip(&c.invariants.gens) {
        assert_eq!(&z.trunc().eval_partial(&zero), f);
    }
}

#[test]
fn preimage_of_products() {
    let c = b2();
    let p = c.gens[0].mul(&c.gens[2]).mul(&c.gens[5]);
    let f = c.preimage(&p).unwrap();
    assert_eq!(c.pi(&f), p);
}

#[test]
fn dihedral_presentation_hilbert_series() {
    let c = Center::new(ReflectionGroup::builtin("dih6").unwrap(), 0, None).unwrap();
    let p = c.presentation(&GbOptions::default()).unwrap();
    assert_eq!(p.relations.len(), 5);
    for r in &p.relations {
        assert!(c.pi(r).is_zero(), "π(ρ) ≠ 0 for {r}");
    }
    let zero: Vec<(usize, Cyclo)> = (0..c.r()).map(|s| (s, Cyclo::zero())).collect();
    let at0: Vec<MPoly> = p.relations.iter().map(|r| r.eval_partial(&zero)).collect();
    let h = c.quotient_hilbert(&at0, 6);
    for (deg, n) in &c.invariants.molien {
        if deg.0 + deg.1 <= 6 {
            assert_eq!(h.get(deg).copied().unwrap_or(0), *n, "bidegree {deg:?}");
        }
    }
}

#[test]
fn resource_limit_is_reported() {
    let c = b2();
    let err = c
        .presentation(&GbOptions {
            max_degree: None,
            max_pairs: Some(2),
        })
        .unwrap_err();
    assert!(err.is_resource_limit());
}

fn euler_grading(name: &str) {
    let c = Center::new(ReflectionGroup::builtin(name).unwrap(), 0, None).unwrap();
    let eu = c.alg.euler();
    let zdeg = c.invariants.z_degrees();
    for (i, z) in c.gens.iter().enumerate() {
        let b = c.poisson_bracket(&eu, z).unwrap();
        assert_eq!(b, z.scale(&Cyclo::from_i64(zdeg[i])), "{name}: {{eu, z{}}}", i + 1);
    }
}

#[test]
fn euler_grades_b2() {
    euler_grading("B2");
}

#[test]
fn euler_grades_g4() {
    euler_grading("G4");
}

/// A random central element: Σ k·z_i·z_j over a few pairs, plus a C-multiple.
fn central(c: &Center, picks: &[(i8, usize, usize)]) -> Pbw {
    let mut acc = c.alg.zero();
    for &(k, i, j) in picks {
        let m = c.gens.len();
        let t = if j % (m + 1) == m {
            c.gens[i % m].mul_poly_left(&c.alg.c(j % c.r()))
        } else {
            c.gens[i % m].mul(&c.gens[j % (m + 1)])
        };
        acc = acc.add(&t.scale(&Cyclo::from_i64(k as i64)));
    }
    acc
}

fn picks() -> impl Strategy<Value = Vec<(i8, usize, usize)>> {
    prop::collection::vec((-2i8..=2, 0usize..3, 0usize..9), 1..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn poisson_axioms(a in picks(), b in picks(), d in picks()) {
        let c = b2();
        let (a, b, d) = (central(c, &a), central(c, &b), central(c, &d));
        let br = |u: &Pbw, v: &Pbw| c.poisson_bracket(u, v).unwrap();
        let ab = br(&a, &b);
        prop_assert!(ab.is_central());
        prop_assert_eq!(&ab, &br(&b, &a).neg());
        // Leibniz
        prop_assert_eq!(br(&a, &b.mul(&d)), ab.mul(&d).add(&b.mul(&br(&a, &d))));
        // Jacobi
        let j = br(&a, &br(&b, &d)).add(&br(&b, &br(&d, &a))).add(&br(&d, &ab));
        prop_assert!(j.is_zero());
        // C[C]-linear
        let c1 = c.alg.c(0);
        prop_assert_eq!(br(&a.mul_poly_left(&c1), &b), ab.mul_poly_left(&c1));
    }

    #[test]
    fn bracket_bidegree(i in 0usize..8, j in 0usize..8) {
        let c = b2();
        let (a, b) = (&c.gens[i], &c.gens[j]);
        let ab = c.poisson_bracket(a, b).unwrap();
        prop_assume!(!ab.is_zero());
        let (da, db) = (a.bidegree().unwrap(), b.bidegree().unwrap());
        prop_assert_eq!(ab.bidegree(), Some((da.0 + db.0 - 1, da.1 + db.1 - 1)));
    }
}

#[test]
fn poisson_matrix_is_antisymmetric() {
    let c = b2();
    let m = c.poisson_matrix().unwrap();
    for i in 0..m.len() {
        for j in 0..m.len() {
            assert_eq!(m[i][j], m[j][i].neg());
        }
    }
    // every entry lies in C[C][z] and maps to the bracket itself
    let z = c.pi(&m[0][6]);
    assert_eq!(z, c.poisson_bracket(&c.gens[0], &c.gens[6]).unwrap());
}
