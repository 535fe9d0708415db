//! Real central hyperplane arrangements: intersection lattice, Poincaré
//! polynomial, chambers and the count of Q-factorial terminalizations.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use cherednik_exact::{Cyclo, Mat, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Families;
use crate::params::normalize_form;

/// A central arrangement in Q^dim given by linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealArrangement {
    pub dim: usize,
    /// Pairwise non-proportional nonzero forms.
    pub forms: Vec<Vec<Rational>>,
    /// e_Ω for each orbit of reflecting hyperplanes of the group.
    pub orbit_orders: Vec<usize>,
}

/// A flat, identified by the set of hyperplanes containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub hyperplanes: BTreeSet<usize>,
    pub codim: usize,
    pub mobius: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub dim: usize,
    #[serde(default)]
    pub orbit_orders: Vec<usize>,
    pub forms: Vec<Vec<serde_json::Value>>,
}

fn parse_number(v: &serde_json::Value) -> Result<Rational> {
    let s = match v {
        serde_json::Value::Number(n) => n.to_string(),
        serde_json::Value::String(s) => s.clone(),
        _ => return Err(Error::Parameter(format!("bad coefficient {v}"))),
    };
    let c = cherednik_exact::parse_cyclo(&s).map_err(|e| Error::Parameter(format!("bad coefficient {s}: {e}")))?;
    c.to_rational()
        .cloned()
        .ok_or_else(|| Error::Parameter(format!("coefficient {s} is not rational")))
}

fn to_cyclo(v: &[Rational]) -> Vec<Cyclo> {
    v.iter().map(|r| Cyclo::from(r.clone())).collect()
}

fn rank_of(forms: &[&Vec<Rational>]) -> usize {
    if forms.is_empty() {
        return 0;
    }
    Mat::from_rows(forms.iter().map(|f| to_cyclo(f)).collect()).rank()
}

impl RealArrangement {
    /// Normalizes and deduplicates the forms.
    pub fn new(dim: usize, forms: Vec<Vec<Rational>>, orbit_orders: Vec<usize>) -> Result<RealArrangement> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for f in forms {
            if f.len() != dim {
                return Err(Error::Parameter(format!("form of length {} in dimension {dim}", f.len())));
            }
            if f.iter().all(|x| *x == 0u32) {
                return Err(Error::Parameter("zero form".into()));
            }
            let n: Vec<Rational> = normalize_form(&to_cyclo(&f))
                .into_iter()
                .map(|c| c.to_rational().cloned().unwrap())
                .collect();
            if seen.insert(n.clone()) {
                out.push(n);
            }
        }
        Ok(RealArrangement {
            dim,
            forms: out,
            orbit_orders,
        })
    }

    pub fn from_json(text: &str) -> Result<RealArrangement> {
        let f: ArrangementFile =
            serde_json::from_str(text).map_err(|e| Error::Parameter(format!("arrangement file: {e}")))?;
        let forms = f
            .forms
            .iter()
            .map(|row| row.iter().map(parse_number).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        RealArrangement::new(f.dim, forms, f.orbit_orders)
    }

    pub fn to_file(&self) -> ArrangementFile {
        ArrangementFile {
            dim: self.dim,
            orbit_orders: self.orbit_orders.clone(),
            forms: self
                .forms
                .iter()
                .map(|f| f.iter().map(|r| serde_json::Value::String(r.to_string())).collect())
                .collect(),
        }
    }

    /// The Calogero–Moser arrangement of a group in K coordinates.
    pub fn from_families(f: &Families) -> Result<RealArrangement> {
        let g = f.center.group();
        let forms = f
            .hyperplanes
            .iter()
            .map(|h| {
                h.coeffs
                    .iter()
                    .map(|c| {
                        c.to_rational()
                            .cloned()
                            .ok_or_else(|| Error::Domain("hyperplane with irrational coefficients".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let orders = g.orbits.iter().map(|o| o.order).collect();
        RealArrangement::new(g.num_params(), forms, orders)
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    fn closure(&self, set: &BTreeSet<usize>) -> (BTreeSet<usize>, usize) {
        let base: Vec<&Vec<Rational>> = set.iter().map(|&i| &self.forms[i]).collect();
        let r = rank_of(&base);
        let mut out = set.clone();
        for j in 0..self.forms.len() {
            if out.contains(&j) {
                continue;
            }
            let mut with = base.clone();
            with.push(&self.forms[j]);
            if rank_of(&with) == r {
                out.insert(j);
            }
        }
        (out, r)
    }

    /// All flats, the ambient space first, ordered by codimension.
    pub fn flats(&self) -> Vec<Flat> {
        let mut by_key: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        by_key.insert(BTreeSet::new(), 0);
        let mut frontier: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
        while let Some(x) = frontier.pop() {
            for j in 0..self.forms.len() {
                if x.contains(&j) {
                    continue;
                }
                let mut s = x.clone();
                s.insert(j);
                let (c, r) = self.closure(&s);
                if !by_key.contains_key(&c) {
                    by_key.insert(c.clone(), r);
                    frontier.push(c);
                }
            }
        }
        let mut flats: Vec<(BTreeSet<usize>, usize)> = by_key.into_iter().collect();
        flats.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        // μ(V) = 1, μ(X) = −Σ_{Y ⊋ X} μ(Y)
        let mut mobius: Vec<i64> = Vec::with_capacity(flats.len());
        for (i, (x, _)) in flats.iter().enumerate() {
            let m = if i == 0 {
                1
            } else {
                -flats[..i]
                    .iter()
                    .zip(&mobius)
                    .filter(|((y, _), _)| y.is_subset(x) && y != x)
                    .map(|(_, m)| *m)
                    .sum::<i64>()
            };
            mobius.push(m);
        }
        flats
            .into_iter()
            .zip(mobius)
            .map(|((hyperplanes, codim), mobius)| Flat {
                hyperplanes,
                codim,
                mobius,
            })
            .collect()
    }

    /// Coefficients of Σ_X |μ(X)| t^codim X, constant term first.
    pub fn poincare_polynomial(&self) -> Vec<u64> {
        let flats = self.flats();
        let top = flats.iter().map(|f| f.codim).max().unwrap_or(0);
        let mut p = vec![0u64; top + 1];
        for f in &flats {
            p[f.codim] += f.mobius.unsigned_abs();
        }
        p
    }

    /// Number of chambers of the complement (Zaslavsky).
    pub fn chamber_count(&self) -> u64 {
        self.poincare_polynomial().iter().sum()
    }

    /// Chambers modulo the Namikawa Weyl group Π S_{e_Ω}.
    pub fn qft_count(&self) -> Result<u64> {
        let den: u64 = self
            .orbit_orders
            .iter()
            .map(|&e| (1..=e as u64).product::<u64>())
            .product();
        let ch = self.chamber_count();
        if !ch.is_multiple_of(den) {
            return Err(Error::Domain(format!("{ch} chambers not divisible by {den}")));
        }
        Ok(ch / den)
    }

    /// Chambers counted as distinct sign vectors, for dimension ≤ 3.
    ///
    /// Works in the span of the normals (so the arrangement is essential);
    /// every chamber is then a pointed cone and the sum of any d of its
    /// extreme rays lies in its interior.
    pub fn chamber_count_by_signs(&self) -> Result<u64> {
        if self.dim > 3 {
            return Err(Error::Parameter("sign-vector count needs dimension ≤ 3".into()));
        }
        if self.forms.is_empty() {
            return Ok(1);
        }
        let all: Vec<Vec<Cyclo>> = self.forms.iter().map(|f| to_cyclo(f)).collect();
        let (rref, piv) = Mat::from_rows(all.clone()).rref();
        let basis: Vec<Vec<Cyclo>> = (0..piv.len()).map(|i| rref.row(i).to_vec()).collect();
        let d = basis.len();
        // forms restricted to the span of the normals, in that basis
        let forms: Vec<Vec<Cyclo>> = all
            .iter()
            .map(|f| basis.iter().map(|b| dot(f, b)).collect())
            .collect();
        if d == 1 {
            return Ok(2);
        }
        let flats = RealArrangement {
            dim: d,
            forms: forms
                .iter()
                .map(|f| f.iter().map(|c| c.to_rational().unwrap().clone()).collect())
                .collect(),
            orbit_orders: vec![],
        }
        .flats();
        let mut rays: Vec<Vec<Cyclo>> = Vec::new();
        for f in flats.iter().filter(|f| f.codim == d - 1) {
            let m = Mat::from_rows(f.hyperplanes.iter().map(|&i| forms[i].clone()).collect());
            let k = m.kernel_basis();
            debug_assert_eq!(k.len(), 1);
            rays.push(k[0].clone());
            rays.push(k[0].iter().map(|x| -x.clone()).collect());
        }
        let mut signs: HashSet<Vec<bool>> = HashSet::new();
        let mut idx: Vec<usize> = (0..d).collect();
        loop {
            let p: Vec<Cyclo> = (0..d)
                .map(|c| idx.iter().fold(Cyclo::zero(), |a, &i| &a + &rays[i][c]))
                .collect();
            let vals: Vec<Cyclo> = forms.iter().map(|f| dot(f, &p)).collect();
            if vals.iter().all(|v| !v.is_zero()) {
                signs.insert(vals.iter().map(|v| *v.to_rational().unwrap() > 0u32).collect());
            }
            if !next_combination(&mut idx, rays.len()) {
                break;
            }
        }
        Ok(signs.len() as u64)
    }
}

fn dot(a: &[Cyclo], b: &[Cyclo]) -> Cyclo {
    a.iter().zip(b).fold(Cyclo::zero(), |s, (x, y)| &s + &(x * y))
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Data files shipped with the crate.
pub fn builtin(name: &str) -> Result<RealArrangement> {
    let text = match name {
        "G4" => include_str!("../arrangements/G4.json"),
        "G28" => include_str!("../arrangements/G28.json"),
        _ => return Err(Error::GroupNotFound(format!("no arrangement data for {name}"))),
    };
    RealArrangement::from_json(text)
}

pub fn builtin_names() -> &'static [&'static str] {
    &["G4", "G28"]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(dim: usize, forms: &[&[i64]], orders: &[usize]) -> RealArrangement {
        RealArrangement::new(
            dim,
            forms
                .iter()
                .map(|f| f.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
            orders.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn b2_arrangement() {
        let a = arr(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]], &[2, 2]);
        assert_eq!(a.poincare_polynomial(), vec![1, 4, 3]);
        assert_eq!(a.chamber_count(), 8);
        assert_eq!(a.chamber_count_by_signs().unwrap(), 8);
        assert_eq!(a.qft_count().unwrap(), 2);
    }

    #[test]
    fn dedup_and_coordinate_planes() {
        let a = arr(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1], &[-2, 0, 0]], &[]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.poincare_polynomial(), vec![1, 3, 3, 1]);
        assert_eq!(a.chamber_count_by_signs().unwrap(), 8);
    }

    #[test]
    fn braid_arrangement() {
        // A3 in R^3 (coordinates e1−e4, ..): 24 chambers
        let a = arr(
            3,
            &[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
            &[],
        );
        assert_eq!(a.poincare_polynomial(), vec![1, 6, 11, 6]);
        assert_eq!(a.chamber_count_by_signs().unwrap(), 24);
    }

    #[test]
    fn non_essential() {
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]], &[]);
        assert_eq!(a.chamber_count(), 6);
        assert_eq!(a.chamber_count_by_signs().unwrap(), 6);
    }

    #[test]
    fn shipped() {
        let g4 = builtin("G4").unwrap();
        assert_eq!(g4.poincare_polynomial(), vec![1, 6, 5]);
        assert_eq!(g4.qft_count().unwrap(), 2);
        let g28 = builtin("G28").unwrap();
        assert_eq!(g28.poincare_polynomial(), vec![1, 8, 7]);
        assert_eq!(g28.qft_count().unwrap(), 4);
        assert_eq!(g28.chamber_count_by_signs().unwrap(), 16);
        let back = RealArrangement::from_json(&serde_json::to_string(&g28.to_file()).unwrap()).unwrap();
        assert_eq!(back, g28);
    }
}
