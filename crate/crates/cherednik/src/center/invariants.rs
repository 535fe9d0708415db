//! Bi-graded invariants of the doubled action on V × V*.

use std::collections::BTreeMap;
use std::sync::Arc;

use cherednik_exact::{Cyclo, MPoly, Mono, Rational};

use crate::error::{Error, Result};
use crate::pbw::Algebra;

pub type Bidegree = (u32, u32);

/// Bi-graded Molien series coefficients dim C[V×V*]^W_(d,e), for d + e ≤ bound.
pub fn molien_series(alg: &Algebra, bound: u32) -> BTreeMap<Bidegree, usize> {
    let g = &alg.group;
    let b = bound as usize;
    let mut acc: BTreeMap<Bidegree, Cyclo> = BTreeMap::new();
    for class in g.classes() {
        let w = class[0];
        let size = Cyclo::from_i64(class.len() as i64);
        // x-variables span V* (matrix M⁻¹), y-variables span V (matrix M)
        let sx = inverse_det_series(g.x_action(w), b);
        let sy = inverse_det_series(g.element(w), b);
        for d in 0..=b {
            for e in 0..=(b - d) {
                let v = &(&sx[d] * &sy[e]) * &size;
                let slot = acc.entry((d as u32, e as u32)).or_insert_with(Cyclo::zero);
                *slot += &v;
            }
        }
    }
    let order = Rational::from(g.order() as u64);
    acc.into_iter()
        .map(|(k, v)| {
            let q = v.to_rational().expect("Molien coefficient is rational") / &order;
            let n = usize::try_from(&q).expect("Molien coefficient is a natural number");
            (k, n)
        })
        .collect()
}

/// Coefficients of 1/det(1 − q·M) up to q^bound.
fn inverse_det_series(m: &cherednik_exact::Mat, bound: usize) -> Vec<Cyclo> {
    let p = m.charpoly().expect("square matrix");
    let n = m.rows();
    // det(1 − qM) = Σ_i p_i q^(n−i)
    let a: Vec<Cyclo> = (0..=n).map(|k| p.coeff(n - k)).collect();
    let mut r = vec![Cyclo::zero(); bound + 1];
    r[0] = Cyclo::one();
    for k in 1..=bound {
        let mut s = Cyclo::zero();
        for i in 1..=k.min(n) {
            s += &(&a[i] * &r[k - i]);
        }
        r[k] = -s;
    }
    r
}

/// Minimal bi-homogeneous generators of C[V×V*]^W, found degree by degree.
#[derive(Clone, Debug)]
pub struct InvariantSystem {
    pub gens: Vec<MPoly>,
    pub bidegrees: Vec<Bidegree>,
    pub molien: BTreeMap<Bidegree, usize>,
    pub bound: u32,
}

fn to_vec(f: &MPoly) -> BTreeMap<Mono, Cyclo> {
    f.terms().iter().cloned().collect()
}

/// Reynolds average of a polynomial.
pub fn reynolds(alg: &Algebra, f: &MPoly) -> MPoly {
    let order = alg.group.order();
    let mut acc = MPoly::zero(alg.ring());
    for w in 0..order {
        acc = acc.add(&alg.act(w, f));
    }
    acc.scale(&Cyclo::from_i64(order as i64).inv())
}

/// All x^a y^b with |a| = d, |b| = e, in a fixed order.
fn monomials(alg: &Algebra, d: u32, e: u32) -> Vec<Mono> {
    let n = alg.dim();
    let xs = compositions(d, n);
    let ys = compositions(e, n);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for a in &xs {
        for b in &ys {
            let mut m = Mono::ONE;
            for i in 0..n {
                m = m.with(alg.x_var(i), a[i]).with(alg.y_var(i), b[i]);
            }
            out.push(m);
        }
    }
    out
}

/// Exponent vectors of length n summing to d, lexicographically decreasing.
pub(crate) fn compositions(d: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(d - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl InvariantSystem {
    /// Generators up to total degree `bound` (|W| when `None`, by Noether's bound).
    pub fn compute(alg: &Arc<Algebra>, bound: Option<u32>) -> Result<InvariantSystem> {
        let bound = bound.unwrap_or(alg.group.order() as u32);
        let molien = molien_series(alg, bound);
        let mut gens: Vec<MPoly> = Vec::new();
        let mut bidegrees: Vec<Bidegree> = Vec::new();
        // a spanning set of each invariant space found so far
        let mut spaces: BTreeMap<Bidegree, Vec<MPoly>> = BTreeMap::new();
        for total in 1..=bound {
            for d in (0..=total).rev() {
                let e = total - d;
                let want = molien[&(d, e)];
                if want == 0 {
                    continue;
                }
                let mut ech = cherednik_exact::Echelon::new();
                let mut basis = Vec::new();
                for (gi, gb) in gens.iter().zip(&bidegrees) {
                    if gb.0 > d || gb.1 > e {
                        continue;
                    }
                    let rest = (d - gb.0, e - gb.1);
                    let Some(space) = spaces.get(&rest) else { continue };
                    for b in space {
                        if ech.rank() == want {
                            break;
                        }
                        let p = gi.mul(b);
                        if ech.insert(&to_vec(&p)) {
                            basis.push(p);
                        }
                    }
                }
                if ech.rank() < want {
                    for m in monomials(alg, d, e) {
                        let r = reynolds(alg, &MPoly::monomial(alg.ring(), m, Cyclo::one()));
                        if r.is_zero() {
                            continue;
                        }
                        let r = r.scale(&r.coeff(m).inv());
                        if ech.insert(&to_vec(&r)) {
                            gens.push(r.clone());
                            bidegrees.push((d, e));
                            basis.push(r);
                            if ech.rank() == want {
                                break;
                            }
                        }
                    }
                }
                if ech.rank() != want {
                    return Err(Error::Domain(format!(
                        "invariant space of bidegree ({d},{e}) has dimension {} but Molien predicts {want}",
                        ech.rank()
                    )));
                }
                spaces.insert((d, e), basis);
            }
        }
        // order generators by total degree, then by decreasing y-degree
        let mut idx: Vec<usize> = (0..gens.len()).collect();
        idx.sort_by_key(|&i| (bidegrees[i].0 + bidegrees[i].1, bidegrees[i].0));
        Ok(InvariantSystem {
            gens: idx.iter().map(|&i| gens[i].clone()).collect(),
            bidegrees: idx.iter().map(|&i| bidegrees[i]).collect(),
            molien,
            bound,
        })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Z-degree d − e of each generator.
    pub fn z_degrees(&self) -> Vec<i64> {
        self.bidegrees
            .iter()
            .map(|&(d, e)| d as i64 - e as i64)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reflection::ReflectionGroup;

    #[test]
    fn mu2_invariants() {
        let alg = Algebra::new(ReflectionGroup::builtin("mu2").unwrap(), false);
        let inv = InvariantSystem::compute(&alg, None).unwrap();
        assert_eq!(inv.bidegrees, vec![(0, 2), (1, 1), (2, 0)]);
        let x = alg.x(0);
        let y = alg.y(0);
        assert_eq!(inv.gens, vec![y.mul(&y), x.mul(&y), x.mul(&x)]);
    }

    #[test]
    fn molien_b2() {
        let alg = Algebra::new(ReflectionGroup::builtin("B2").unwrap(), false);
        let m = molien_series(&alg, 4);
        // C[V]^W has degrees 2 and 4
        assert_eq!(m[&(2, 0)], 1);
        assert_eq!(m[&(4, 0)], 2);
        assert_eq!(m[&(3, 0)], 0);
        assert_eq!(m[&(1, 1)], 1);
        assert_eq!(m[&(0, 0)], 1);
    }

    #[test]
    fn b2_invariants() {
        let alg = Algebra::new(ReflectionGroup::builtin("B2").unwrap(), false);
        let inv = InvariantSystem::compute(&alg, None).unwrap();
        assert_eq!(
            inv.bidegrees,
            vec![(0, 2), (1, 1), (2, 0), (0, 4), (1, 3), (2, 2), (3, 1), (4, 0)]
        );
        let eu0 = alg.x(0).mul(&alg.y(0)).add(&alg.x(1).mul(&alg.y(1)));
        assert_eq!(inv.gens[1], eu0);
        for f in &inv.gens {
            assert_eq!(&reynolds(&alg, f), f);
        }
    }
}
