//! Calogero–Moser families, hyperplanes and cuspidal families via central
//! characters.

use std::collections::BTreeMap;
use std::sync::Arc;

use cherednik_exact::{Cyclo, MPoly, Mono, Ring};
use serde::{Deserialize, Serialize};

use crate::center::Center;
use crate::error::{Error, Result};
use crate::params::{form_to_string, normalize_form, parse_form, ParamPoint};
use crate::pbw::Pbw;
use crate::reflection::ReflectionGroup;

/// Set partition of the irreducible characters (by index).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyPartition {
    pub parts: Vec<Vec<usize>>,
}

impl FamilyPartition {
    /// Canonical form: each part sorted, parts sorted by first element.
    pub fn new(mut parts: Vec<Vec<usize>>) -> FamilyPartition {
        for p in &mut parts {
            p.sort_unstable();
        }
        parts.retain(|p| !p.is_empty());
        parts.sort();
        FamilyPartition { parts }
    }

    pub fn singletons(n: usize) -> FamilyPartition {
        FamilyPartition::new((0..n).map(|i| vec![i]).collect())
    }

    /// Fibers of a map given by keys.
    pub fn fibers<K: Ord>(keys: &[K]) -> FamilyPartition {
        let mut m: BTreeMap<&K, Vec<usize>> = BTreeMap::new();
        for (i, k) in keys.iter().enumerate() {
            m.entry(k).or_default().push(i);
        }
        FamilyPartition::new(m.into_values().collect())
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    fn support(&self) -> usize {
        self.parts.iter().map(|p| p.len()).sum()
    }

    pub fn part_of(&self, i: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&i))
    }

    /// Sizes, decreasing.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.parts.iter().map(|p| p.len()).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// Finest partition coarser than both (overlapping parts merged).
    pub fn meet(&self, o: &FamilyPartition) -> Result<FamilyPartition> {
        let n = self.support();
        if n != o.support() {
            return Err(Error::Domain("partitions of different sets".into()));
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            let mut r = i;
            while p[r] != r {
                r = p[r];
            }
            p[i] = r;
            r
        }
        for part in self.parts.iter().chain(&o.parts) {
            for w in part.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a.max(b)] = a.min(b);
            }
        }
        let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        Ok(FamilyPartition::fibers(&roots))
    }

    /// Every part of `fine` lies inside a part of `self`.
    pub fn is_union_of(&self, fine: &FamilyPartition) -> Result<bool> {
        if self.support() != fine.support() {
            return Err(Error::Domain("partitions of different sets".into()));
        }
        Ok(fine.parts.iter().all(|p| {
            let k = self.part_of(p[0]);
            p.iter().all(|&i| self.part_of(i) == k)
        }))
    }

    pub fn labels(&self, g: &ReflectionGroup) -> Result<Vec<Vec<String>>> {
        let chars = g.characters()?;
        Ok(self
            .parts
            .iter()
            .map(|p| p.iter().map(|&i| chars[i].label.clone()).collect())
            .collect())
    }

    pub fn from_labels(g: &ReflectionGroup, parts: &[Vec<String>]) -> Result<FamilyPartition> {
        let mut out = Vec::new();
        for p in parts {
            let mut q = Vec::new();
            for l in p {
                q.push(
                    g.character_index(l)
                        .ok_or_else(|| Error::Domain(format!("unknown character label '{l}'")))?,
                );
            }
            out.push(q);
        }
        let fp = FamilyPartition::new(out);
        let n = g.characters()?.len();
        let mut seen = vec![false; n];
        for &i in fp.parts.iter().flatten() {
            if seen[i] {
                return Err(Error::Domain("character listed twice".into()));
            }
            seen[i] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Domain("partition does not cover all characters".into()));
        }
        Ok(fp)
    }
}

/// Ω(z) = Σ_w a_w w: the coefficients of z with x = y = 0.
pub fn omega(z: &Pbw) -> Vec<(usize, MPoly)> {
    let alg = z.algebra();
    let zero: Vec<(usize, Cyclo)> = (0..alg.dim())
        .flat_map(|i| [(alg.x_var(i), Cyclo::zero()), (alg.y_var(i), Cyclo::zero())])
        .collect();
    z.support()
        .map(|(w, h)| (w, h.eval_partial(&zero)))
        .filter(|(_, h)| !h.is_zero())
        .collect()
}

/// ω_χ(Ω(z)) = Σ_w a_w χ(w)/χ(1), as a polynomial in the K variables.
pub fn omega_chi(g: &ReflectionGroup, om: &[(usize, MPoly)], chi: usize, k_ring: &Arc<Ring>) -> Result<MPoly> {
    let ch = &g.characters()?[chi];
    let inv_deg = Cyclo::from_i64(ch.degree as i64).inv();
    let mut acc = MPoly::zero(k_ring);
    for (w, a) in om {
        let v = &ch.values[*w] * &inv_deg;
        if v.is_zero() {
            continue;
        }
        acc = acc.add(&g.c_poly_to_k(a, k_ring).scale(&v));
    }
    Ok(acc)
}

/// Values Ω_χ(z_i) for the Z-degree-0 generators, in K coordinates.
#[derive(Clone, Debug)]
pub struct CentralCharTable {
    pub group: Arc<ReflectionGroup>,
    pub k_ring: Arc<Ring>,
    /// Generator indices of the columns.
    pub columns: Vec<usize>,
    /// rows[χ][j] = Ω_χ(z_columns[j]).
    pub rows: Vec<Vec<MPoly>>,
    /// Ω_χ(eu), linear forms.
    pub euler: Vec<MPoly>,
}

impl CentralCharTable {
    pub fn new(center: &Center) -> Result<CentralCharTable> {
        let g = center.group().clone();
        let k_ring = g.k_ring();
        let nchars = g.characters()?.len();
        let columns = center.degree_zero();
        let omegas: Vec<Vec<(usize, MPoly)>> = columns.iter().map(|&i| omega(&center.gens[i])).collect();
        let eu = omega(&center.alg.euler());
        let mut rows = Vec::with_capacity(nchars);
        let mut euler = Vec::with_capacity(nchars);
        for chi in 0..nchars {
            rows.push(
                omegas
                    .iter()
                    .map(|om| omega_chi(&g, om, chi, &k_ring))
                    .collect::<Result<Vec<_>>>()?,
            );
            euler.push(omega_chi(&g, &eu, chi, &k_ring)?);
        }
        Ok(CentralCharTable {
            group: g,
            k_ring,
            columns,
            rows,
            euler,
        })
    }

    pub fn nchars(&self) -> usize {
        self.rows.len()
    }

    fn partition_of(&self, rows: &[Vec<MPoly>]) -> FamilyPartition {
        let keys: Vec<Vec<String>> = rows
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect())
            .collect();
        FamilyPartition::fibers(&keys)
    }

    pub fn generic_families(&self) -> FamilyPartition {
        self.partition_of(&self.rows)
    }

    /// Families after substituting the hyperplane equation into the table.
    pub fn families_on_hyperplane(&self, form: &[Cyclo]) -> Result<FamilyPartition> {
        let n = self.k_ring.nvars();
        if form.len() != n || form.iter().all(|c| c.is_zero()) {
            return Err(Error::Parameter("hyperplane form must be nonzero".into()));
        }
        // pivot: largest coefficient (by norm), first on ties
        let mut p = 0;
        for i in 0..n {
            if form[p].is_zero() || (!form[i].is_zero() && size(&form[i]) > size(&form[p])) {
                p = i;
            }
        }
        let inv = form[p].inv();
        let mut image = MPoly::zero(&self.k_ring);
        for (j, a) in form.iter().enumerate() {
            if j != p && !a.is_zero() {
                image = image.sub(&MPoly::var(&self.k_ring, j).scale(&(a * &inv)));
            }
        }
        let mut images: Vec<Option<MPoly>> = vec![None; n];
        images[p] = Some(image);
        let rows: Vec<Vec<MPoly>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.substitute(&self.k_ring, &images)).collect())
            .collect();
        Ok(self.partition_of(&rows))
    }

    /// Families obtained by specializing the table directly at a point.
    pub fn families_at_point_direct(&self, p: &ParamPoint) -> FamilyPartition {
        let keys: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.eval(&p.k).to_string()).collect())
            .collect();
        FamilyPartition::fibers(&keys)
    }

    /// Candidate hyperplanes: normalized Euler differences.
    pub fn euler_candidates(&self) -> Vec<Vec<Cyclo>> {
        let n = self.k_ring.nvars();
        let mut out: Vec<Vec<Cyclo>> = Vec::new();
        for a in 0..self.nchars() {
            for b in a + 1..self.nchars() {
                let d = self.euler[a].sub(&self.euler[b]);
                if d.is_zero() {
                    continue;
                }
                let v: Vec<Cyclo> = (0..n).map(|i| d.coeff(Mono::var(i))).collect();
                let v = normalize_form(&v);
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }
}

fn size(c: &Cyclo) -> cherednik_exact::Rational {
    match c.to_rational() {
        Some(r) => r * r,
        None => c.norm(),
    }
}

/// A Calogero–Moser hyperplane in K coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneForm {
    pub coeffs: Vec<Cyclo>,
    pub families: FamilyPartition,
}

/// Families, hyperplanes and cuspidality for one group.
pub struct Families {
    pub center: Arc<Center>,
    pub table: CentralCharTable,
    pub generic: FamilyPartition,
    pub hyperplanes: Vec<HyperplaneForm>,
}

impl Families {
    pub fn new(center: Arc<Center>) -> Result<Families> {
        let table = CentralCharTable::new(&center)?;
        let generic = table.generic_families();
        let mut hyperplanes = Vec::new();
        for cand in table.euler_candidates() {
            let fam = table.families_on_hyperplane(&cand)?;
            if fam != generic {
                hyperplanes.push(HyperplaneForm {
                    coeffs: cand,
                    families: fam,
                });
            }
        }
        let g = center.group().clone();
        hyperplanes.sort_by_cached_key(|h| {
            let nz = h.coeffs.iter().filter(|c| !c.is_zero()).count();
            (nz, form_to_string(&g, &h.coeffs))
        });
        Ok(Families {
            center,
            table,
            generic,
            hyperplanes,
        })
    }

    pub fn group(&self) -> &Arc<ReflectionGroup> {
        self.center.group()
    }

    pub fn hyperplane_strings(&self) -> Vec<String> {
        self.hyperplanes
            .iter()
            .map(|h| form_to_string(self.group(), &h.coeffs))
            .collect()
    }

    pub fn families_on_hyperplane(&self, form: &[Cyclo]) -> Result<FamilyPartition> {
        self.table.families_on_hyperplane(form)
    }

    pub fn families_on(&self, form: &str) -> Result<FamilyPartition> {
        self.families_on_hyperplane(&parse_form(self.group(), form)?)
    }

    /// Hyperplanes through a point.
    pub fn hyperplanes_through(&self, p: &ParamPoint) -> Vec<usize> {
        (0..self.hyperplanes.len())
            .filter(|&i| {
                self.hyperplanes[i]
                    .coeffs
                    .iter()
                    .zip(&p.k)
                    .fold(Cyclo::zero(), |acc, (a, b)| &acc + &(a * b))
                    .is_zero()
            })
            .collect()
    }

    /// Families at a point by the semicontinuity (meet) formula.
    pub fn families_at_point(&self, p: &ParamPoint) -> Result<FamilyPartition> {
        if p.is_zero() {
            return Ok(FamilyPartition::new(vec![(0..self.table.nchars()).collect()]));
        }
        let mut out = self.generic.clone();
        for i in self.hyperplanes_through(p) {
            out = out.meet(&self.hyperplanes[i].families)?;
        }
        Ok(out)
    }

    /// Ω_χ^c of every generator: 0 off Z-degree 0, table values otherwise.
    fn z_values(&self, chi: usize, p: &ParamPoint) -> Vec<Cyclo> {
        let m = self.center.len();
        let mut v = vec![Cyclo::zero(); m];
        for (j, &i) in self.table.columns.iter().enumerate() {
            v[i] = self.table.rows[chi][j].eval(&p.k);
        }
        v
    }

    /// Cuspidal families at c ≠ 0, given the Poisson matrix in C[C][z].
    pub fn cuspidal_families(&self, p: &ParamPoint, poisson: &[Vec<MPoly>]) -> Result<Vec<Vec<usize>>> {
        if p.is_zero() {
            return Err(Error::Parameter("cuspidal families are not defined at c = 0".into()));
        }
        let center = &self.center;
        let zdeg = center.invariants.z_degrees();
        let m = center.len();
        let fams = self.families_at_point(p)?;
        let mut out = Vec::new();
        for part in &fams.parts {
            let mut vals = p.c.clone();
            vals.extend(self.z_values(part[0], p));
            let cusp = (0..m).all(|i| {
                (i + 1..m)
                    .filter(|&j| zdeg[i] + zdeg[j] == 0)
                    .all(|j| poisson[i][j].eval(&vals).is_zero())
            });
            if cusp {
                out.push(part.clone());
            }
        }
        Ok(out)
    }

    /// Runs the refinement test against Rouquier families.
    pub fn martino(&self, data: &RouquierData) -> Result<MartinoReport> {
        let g = self.group().clone();
        let twist = data.convention == Convention::Sharp;
        let rouquier_generic = FamilyPartition::from_labels(&g, &data.generic)?;
        let mut essential: Vec<(Vec<Cyclo>, FamilyPartition)> = Vec::new();
        for h in &data.hyperplanes {
            essential.push((
                normalize_form(&parse_form(&g, &h.form)?),
                FamilyPartition::from_labels(&g, &h.families)?,
            ));
        }
        let generic_ok = self.generic.is_union_of(&rouquier_generic)?;
        let mut checks = Vec::new();
        for h in &self.hyperplanes {
            let hs = if twist { sharp(&g, &h.coeffs) } else { h.coeffs.clone() };
            let hs = normalize_form(&hs);
            let (essential_match, rou) = match essential.iter().find(|(f, _)| *f == hs) {
                Some((_, r)) => (true, r.clone()),
                None => (false, rouquier_generic.clone()),
            };
            checks.push(MartinoCheck {
                hyperplane: form_to_string(&g, &h.coeffs),
                twisted: form_to_string(&g, &hs),
                essential: essential_match,
                holds: h.families.is_union_of(&rou)?,
            });
        }
        let holds = generic_ok && checks.iter().all(|c| c.holds);
        Ok(MartinoReport {
            generic: generic_ok,
            hyperplanes: checks,
            holds,
        })
    }
}

/// k_{Ω,j} ↦ k_{Ω,−j} on a form in the basis (K_{Ω,j})_{j≥1}.
pub fn sharp(g: &ReflectionGroup, form: &[Cyclo]) -> Vec<Cyclo> {
    let mut out = vec![Cyclo::zero(); form.len()];
    for (i, &(o, j)) in g.k_basis.iter().enumerate() {
        let e = g.orbits[o].order;
        let jj = (e - j) % e;
        if jj == 0 {
            // K_{Ω,0} = −Σ_{j≥1} K_{Ω,j}
            for (t, &(o2, _)) in g.k_basis.iter().enumerate() {
                if o2 == o {
                    out[t] = &out[t] - &form[i];
                }
            }
        } else {
            let t = g.k_basis.iter().position(|&b| b == (o, jj)).unwrap();
            out[t] = &out[t] + &form[i];
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Hyperplanes given in the same k coordinates as ours.
    K,
    /// Hyperplanes given in k♯ coordinates (k_{Ω,j} ↔ k_{Ω,−j}).
    #[default]
    Sharp,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RouquierHyperplane {
    pub form: String,
    pub families: Vec<Vec<String>>,
}

/// User-supplied Rouquier families: generic ones and those on essential hyperplanes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RouquierData {
    #[serde(default)]
    pub convention: Convention,
    pub generic: Vec<Vec<String>>,
    #[serde(default)]
    pub hyperplanes: Vec<RouquierHyperplane>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MartinoCheck {
    pub hyperplane: String,
    pub twisted: String,
    pub essential: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MartinoReport {
    pub generic: bool,
    pub hyperplanes: Vec<MartinoCheck>,
    pub holds: bool,
}
