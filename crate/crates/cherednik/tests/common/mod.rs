//! Shared fixtures and oracles for the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use cherednik::center::Center;
use cherednik::pbw::trunc_inverse;
use cherednik::ReflectionGroup;
use cherednik_exact::MPoly;

/// B2 fundamental invariants in the normalization of the reference
/// computation, in our variables.
pub const B2_REFERENCE_INVARIANTS: [&str; 8] = [
    "1/2*y1^2 + 1/2*y2^2",
    "x1*y1 + x2*y2",
    "x1^2 + x2^2",
    "1/8*y1^4 + 1/8*y2^4 + 3/4*y1^2*y2^2",
    "x1*y1*y2^2 + x2*y1^2*y2",
    "x1^2*y2^2 + x2^2*y1^2",
    "x1^3*y1 + x2^3*y2",
    "x1^4 + x2^4",
];

/// First relation of the reference B2 presentation, in the reference
/// generators and parameters.
pub const B2_REFERENCE_RELATION: &str = "3*z1^2*z3 - z1*z2^2 - z1*z6 + 2*C1^2*z1 + z2*z5 - 2*z3*z4";

/// Rewrites a polynomial in reference generators as one in ours, once for
/// each way of matching the reference parameters with ours.
pub fn match_reference(center: &Center, invariants: &[&str], relation: &str) -> Vec<MPoly> {
    let alg = &center.alg;
    let g: &Arc<ReflectionGroup> = center.group();
    let y_reg = g.regular_vector(1);
    let images: Vec<MPoly> = invariants
        .iter()
        .map(|s| {
            let f = MPoly::parse(alg.ring(), s).expect("fixture parses");
            let z = trunc_inverse(alg, &f, &y_reg).expect("invariant");
            center.preimage(&z).expect("central")
        })
        .collect();
    let zring = &center.zring;
    let rel = MPoly::parse(zring, relation).expect("relation parses");
    let r = center.r();
    let mut out = Vec::new();
    // every bijection of parameter names (r ≤ 2 here, so a swap at most)
    let perms: Vec<Vec<usize>> = if r == 2 { vec![vec![0, 1], vec![1, 0]] } else { vec![(0..r).collect()] };
    for p in perms {
        let mut subst: Vec<Option<MPoly>> = (0..r).map(|i| Some(MPoly::var(zring, p[i]))).collect();
        subst.extend(images.iter().cloned().map(Some));
        out.push(rel.substitute(zring, &subst));
    }
    out
}

use cherednik::pbw::{Algebra, Pbw};
use cherednik_exact::{Cyclo, Mono};

/// A small element Σ coef·x^a y^b w built from raw integers.
pub fn small_pbw(alg: &Arc<Algebra>, terms: &[(i8, [u8; 4], usize)]) -> Pbw {
    let n = alg.dim();
    let mut acc = alg.zero();
    for &(c, e, w) in terms {
        let mut m = Mono::ONE;
        for i in 0..n.min(2) {
            m = m.with(alg.x_var(i), e[i] as u32).with(alg.y_var(i), e[2 + i] as u32);
        }
        let p = MPoly::monomial(alg.ring(), m, Cyclo::from_i64(c as i64));
        let w = w % alg.group.order();
        acc = acc.add(&alg.poly(p).mul(&alg.group_element(w)));
    }
    acc
}

/// Lowest total degree in the parameter variables among the terms of f.
pub fn c_order(alg: &Algebra, f: &MPoly) -> Option<u32> {
    f.terms()
        .iter()
        .map(|(m, _)| (0..alg.num_params()).map(|s| m.exp(alg.c_var(s))).sum::<u32>())
        .min()
}
