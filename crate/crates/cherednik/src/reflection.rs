//! Finite complex reflection groups: enumeration, reflections, hyperplane
//! orbits, characters and the two parameter coordinate systems.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::sync::Arc;

use cherednik_exact::{parse_cyclo, Cyclo, MPoly, Mat, Rational, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the enumerated group order.
pub const MAX_ORDER: usize = 20_000;

/// Raw group description as stored in the data files.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub name: String,
    pub dim: usize,
    pub conductor: u32,
    pub generators: Vec<Mat>,
    /// Class representatives as words in the generators (indices into `generators`).
    pub class_representatives: Option<Vec<Vec<usize>>>,
    /// Rows are irreducible characters, columns follow `class_representatives`.
    pub character_table: Option<Vec<Vec<Cyclo>>>,
}

#[derive(Serialize, Deserialize)]
struct GroupFile {
    name: String,
    dim: usize,
    conductor: u32,
    generators: Vec<Vec<Vec<Vec<String>>>>,
    #[serde(default)]
    class_representatives: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    character_table: Option<Vec<Vec<String>>>,
}

macro_rules! builtin {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../groups/", $name, ".json")))),*]
    };
}

static BUILTIN: &[(&str, &str)] = builtin!(
    "mu2", "mu3", "mu4", "mu5", "mu6", "mu7", "mu8", "mu9", "mu10", "mu11", "mu12", "dih6",
    "dih8", "dih10", "dih12", "dih14", "dih16", "B2", "G4",
);

/// Names of the shipped groups.
pub fn builtin_names() -> Vec<&'static str> {
    BUILTIN.iter().map(|(n, _)| *n).collect()
}

fn parse_rational(s: &str) -> Result<Rational> {
    let c = parse_cyclo(s).map_err(|e| Error::InvalidGroup(e.to_string()))?;
    c.to_rational()
        .cloned()
        .ok_or_else(|| Error::InvalidGroup(format!("expected a rational, got {s}")))
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<GroupSpec> {
        let f: GroupFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidGroup(e.to_string()))?;
        if f.dim == 0 || f.conductor == 0 {
            return Err(Error::InvalidGroup("dim and conductor must be positive".into()));
        }
        let mut gens = Vec::new();
        for g in &f.generators {
            if g.len() != f.dim || g.iter().any(|r| r.len() != f.dim) {
                return Err(Error::InvalidGroup("generator has wrong shape".into()));
            }
            let mut rows = Vec::new();
            for r in g {
                let mut row = Vec::new();
                for e in r {
                    let c = e.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
                    if c.len() > f.conductor as usize && f.conductor > 1 {
                        return Err(Error::InvalidGroup("coefficient vector too long".into()));
                    }
                    row.push(Cyclo::from_coeffs(f.conductor, c));
                }
                rows.push(row);
            }
            gens.push(Mat::from_rows(rows));
        }
        let table = match &f.character_table {
            None => None,
            Some(t) => Some(
                t.iter()
                    .map(|row| {
                        row.iter()
                            .map(|s| parse_cyclo(s).map_err(|e| Error::InvalidGroup(e.to_string())))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        Ok(GroupSpec {
            name: f.name,
            dim: f.dim,
            conductor: f.conductor,
            generators: gens,
            class_representatives: f.class_representatives,
            character_table: table,
        })
    }

    /// Loads a shipped group; `G2` is accepted as an alias of `dih12`.
    pub fn builtin(name: &str) -> Result<GroupSpec> {
        let key = match name {
            "G2" => "dih12",
            other => other,
        };
        BUILTIN
            .iter()
            .find(|(n, _)| *n == key)
            .ok_or_else(|| Error::GroupNotFound(name.to_string()))
            .and_then(|(_, text)| GroupSpec::from_json(text))
    }

    /// Canonical JSON text (used for content hashing).
    pub fn to_json(&self) -> String {
        let f = GroupFile {
            name: self.name.clone(),
            dim: self.dim,
            conductor: self.conductor,
            generators: self
                .generators
                .iter()
                .map(|g| {
                    g.to_rows()
                        .iter()
                        .map(|r| {
                            r.iter()
                                .map(|c| {
                                    c.lift_to(self.conductor)
                                        .iter()
                                        .map(|q| q.to_string())
                                        .collect()
                                })
                                .collect()
                        })
                        .collect()
                })
                .collect(),
            class_representatives: self.class_representatives.clone(),
            character_table: self
                .character_table
                .as_ref()
                .map(|t| t.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect()),
        };
        serde_json::to_string(&f).expect("serializable")
    }
}

#[derive(Clone, Debug)]
pub struct Reflection {
    /// Index into the element list.
    pub element: usize,
    /// α_s ∈ V*, coordinates in the dual basis (first nonzero entry 1).
    pub root: Vec<Cyclo>,
    /// α_s^∨ ∈ V, eigenvector for ε(s) (first nonzero entry 1).
    pub coroot: Vec<Cyclo>,
    /// ε(s) = det(s).
    pub eps: Cyclo,
    /// Conjugacy class of reflections, i.e. the C-variable index.
    pub class: usize,
    pub hyperplane: usize,
}

#[derive(Clone, Debug)]
pub struct Hyperplane {
    pub root: Vec<Cyclo>,
    pub coroot: Vec<Cyclo>,
    /// e_H = |W_H|.
    pub order: usize,
    pub orbit: usize,
    /// Elements of W_H (identity first).
    pub stabilizer: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub hyperplanes: Vec<usize>,
    pub order: usize,
}

#[derive(Clone, Debug)]
pub struct Character {
    pub label: String,
    pub degree: usize,
    /// Value on every group element.
    pub values: Vec<Cyclo>,
}

#[derive(Debug)]
pub struct ReflectionGroup {
    pub name: String,
    pub dim: usize,
    pub conductor: u32,
    pub spec: GroupSpec,
    elements: Vec<Mat>,
    inverse_mats: Vec<Mat>,
    index: FxHashMap<Mat, usize>,
    words: Vec<Vec<usize>>,
    mult: Vec<u32>,
    inverse: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    det: Vec<Cyclo>,
    pub reflections: Vec<Reflection>,
    /// Reflection indices per conjugacy class.
    pub refl_classes: Vec<Vec<usize>>,
    pub hyperplanes: Vec<Hyperplane>,
    pub orbits: Vec<Orbit>,
    /// (orbit, j) for j = 1..e_Ω-1: the K basis.
    pub k_basis: Vec<(usize, usize)>,
    /// C_s = Σ gamma[s][k] K_k over `k_basis`.
    gamma: Mat,
    gamma_inv: Mat,
    characters: Option<Vec<Character>>,
}

fn normalize_vec(v: &[Cyclo]) -> Vec<Cyclo> {
    let lead = v.iter().find(|c| !c.is_zero()).expect("nonzero vector").inv();
    v.iter().map(|c| c * &lead).collect()
}

/// Total order on scalars: coefficients over the common power basis.
pub fn cmp_cyclo(a: &Cyclo, b: &Cyclo, n: u32) -> Ordering {
    a.lift_to(n).cmp(&b.lift_to(n))
}

impl ReflectionGroup {
    pub fn builtin(name: &str) -> Result<Arc<ReflectionGroup>> {
        Ok(Arc::new(ReflectionGroup::build(GroupSpec::builtin(name)?)?))
    }

    pub fn build(spec: GroupSpec) -> Result<ReflectionGroup> {
        let n = spec.dim;
        if spec.generators.is_empty() {
            return Err(Error::InvalidGroup("no generators".into()));
        }
        for g in &spec.generators {
            if g.rows() != n || g.cols() != n {
                return Err(Error::InvalidGroup("generator has wrong shape".into()));
            }
            if g.det().map(|d| d.is_zero()).unwrap_or(true) {
                return Err(Error::InvalidGroup("generator is singular".into()));
            }
        }
        // breadth-first closure
        let id = Mat::identity(n);
        let mut elements = vec![id.clone()];
        let mut words = vec![Vec::new()];
        let mut index = FxHashMap::default();
        index.insert(id, 0usize);
        let mut i = 0;
        while i < elements.len() {
            for (k, s) in spec.generators.iter().enumerate() {
                let h = elements[i].mul(s);
                if !index.contains_key(&h) {
                    if elements.len() >= MAX_ORDER {
                        return Err(Error::InvalidGroup(format!(
                            "closure exceeds {MAX_ORDER} elements"
                        )));
                    }
                    index.insert(h.clone(), elements.len());
                    let mut w = words[i].clone();
                    w.push(k);
                    words.push(w);
                    elements.push(h);
                }
            }
            i += 1;
        }
        let order = elements.len();
        let mut mult = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                mult[a * order + b] = index[&elements[a].mul(&elements[b])] as u32;
            }
        }
        let inverse: Vec<usize> = (0..order)
            .map(|a| (0..order).find(|&b| mult[a * order + b] == 0).unwrap())
            .collect();
        let inverse_mats = inverse.iter().map(|&b| elements[b].clone()).collect();
        // conjugacy classes
        let mut class_of = vec![usize::MAX; order];
        let mut classes = Vec::new();
        for g in 0..order {
            if class_of[g] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut cl = Vec::new();
            for h in 0..order {
                let x = mult[mult[inverse[h] * order + g] as usize * order + h] as usize;
                if class_of[x] == usize::MAX {
                    class_of[x] = c;
                    cl.push(x);
                }
            }
            cl.sort_unstable();
            classes.push(cl);
        }
        let det: Vec<Cyclo> = elements.iter().map(|m| m.det().unwrap()).collect();

        let mut g = ReflectionGroup {
            name: spec.name.clone(),
            dim: n,
            conductor: spec.conductor,
            spec,
            elements,
            inverse_mats,
            index,
            words,
            mult,
            inverse,
            classes,
            class_of,
            det,
            reflections: Vec::new(),
            refl_classes: Vec::new(),
            hyperplanes: Vec::new(),
            orbits: Vec::new(),
            k_basis: Vec::new(),
            gamma: Mat::zero(0, 0),
            gamma_inv: Mat::zero(0, 0),
            characters: None,
        };
        g.find_reflections()?;
        g.build_parameters()?;
        if g.spec.character_table.is_some() {
            g.characters = Some(g.load_characters()?);
        }
        Ok(g)
    }

    fn find_reflections(&mut self) -> Result<()> {
        let n = self.dim;
        let id = Mat::identity(n);
        let mut refl = Vec::new();
        for (e, m) in self.elements.iter().enumerate() {
            let d = m.sub(&id);
            if d.rank() != 1 {
                continue;
            }
            let row = (0..n).find(|&i| d.row(i).iter().any(|c| !c.is_zero())).unwrap();
            let col = (0..n).find(|&j| (0..n).any(|i| !d.at(i, j).is_zero())).unwrap();
            let root = normalize_vec(d.row(row));
            let coroot = normalize_vec(&(0..n).map(|i| d.at(i, col).clone()).collect::<Vec<_>>());
            refl.push(Reflection {
                element: e,
                root,
                coroot,
                eps: self.det[e].clone(),
                class: 0,
                hyperplane: 0,
            });
        }
        if refl.is_empty() {
            return Err(Error::InvalidGroup("group contains no reflections".into()));
        }
        // generated by reflections?
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(a) = queue.pop_front() {
            for r in &refl {
                let b = self.mul(a, r.element);
                if !seen[b] {
                    seen[b] = true;
                    count += 1;
                    queue.push_back(b);
                }
            }
        }
        if count != self.order() {
            return Err(Error::InvalidGroup("group is not generated by reflections".into()));
        }
        // hyperplanes
        let mut hyps: Vec<Hyperplane> = Vec::new();
        for r in refl.iter_mut() {
            let h = match hyps.iter().position(|h| h.root == r.root) {
                Some(h) => h,
                None => {
                    hyps.push(Hyperplane {
                        root: r.root.clone(),
                        coroot: r.coroot.clone(),
                        order: 1,
                        orbit: 0,
                        stabilizer: vec![0],
                    });
                    hyps.len() - 1
                }
            };
            hyps[h].order += 1;
            hyps[h].stabilizer.push(r.element);
            r.hyperplane = h;
        }
        // hyperplane orbits under W: w(H) has root α·M⁻¹
        let mut orbit_of = vec![usize::MAX; hyps.len()];
        let mut orbits = Vec::new();
        for h in 0..hyps.len() {
            if orbit_of[h] != usize::MAX {
                continue;
            }
            let o = orbits.len();
            let mut members = Vec::new();
            for w in 0..self.order() {
                let mi = &self.inverse_mats[w];
                let img: Vec<Cyclo> = (0..self.dim)
                    .map(|j| {
                        (0..self.dim).fold(Cyclo::zero(), |acc, i| &acc + &(&hyps[h].root[i] * mi.at(i, j)))
                    })
                    .collect();
                let img = normalize_vec(&img);
                let k = hyps.iter().position(|x| x.root == img).ok_or_else(|| {
                    Error::InvalidGroup("hyperplane set not W-stable".into())
                })?;
                if orbit_of[k] == usize::MAX {
                    orbit_of[k] = o;
                    members.push(k);
                }
            }
            members.sort_unstable();
            let e = hyps[h].order;
            orbits.push(Orbit {
                hyperplanes: members,
                order: e,
            });
        }
        for (h, hy) in hyps.iter_mut().enumerate() {
            hy.orbit = orbit_of[h];
            if hy.order != orbits[hy.orbit].order {
                return Err(Error::InvalidGroup("orbit with unequal e_H".into()));
            }
        }
        // reflection classes, ordered by first element index
        let mut class_ids: Vec<usize> = Vec::new();
        for r in refl.iter_mut() {
            let c = self.class_of[r.element];
            let k = match class_ids.iter().position(|&x| x == c) {
                Some(k) => k,
                None => {
                    class_ids.push(c);
                    class_ids.len() - 1
                }
            };
            r.class = k;
        }
        let mut refl_classes = vec![Vec::new(); class_ids.len()];
        for (i, r) in refl.iter().enumerate() {
            refl_classes[r.class].push(i);
        }
        self.reflections = refl;
        self.refl_classes = refl_classes;
        self.hyperplanes = hyps;
        self.orbits = orbits;
        Ok(())
    }

    fn build_parameters(&mut self) -> Result<()> {
        let mut basis = Vec::new();
        for (o, orb) in self.orbits.iter().enumerate() {
            for j in 1..orb.order {
                basis.push((o, j));
            }
        }
        let nc = self.refl_classes.len();
        if basis.len() != nc {
            return Err(Error::InvalidGroup(format!(
                "{} reflection classes but {} K-coordinates",
                nc,
                basis.len()
            )));
        }
        let mut gamma = Mat::zero(nc, nc);
        for (c, members) in self.refl_classes.iter().enumerate() {
            let r = &self.reflections[members[0]];
            let orbit = self.hyperplanes[r.hyperplane].orbit;
            let einv = r.eps.inv();
            for (k, &(o, j)) in basis.iter().enumerate() {
                if o == orbit {
                    // K_{Ω,0} = -Σ_{j≥1} K_{Ω,j}
                    let v = &r.eps.pow(j as u32 - 1) - &einv;
                    gamma.set(c, k, v);
                }
            }
        }
        self.gamma_inv = gamma
            .inverse()
            .map_err(|_| Error::InvalidGroup("parameter change of basis is singular".into()))?;
        self.gamma = gamma;
        self.k_basis = basis;
        Ok(())
    }

    fn load_characters(&self) -> Result<Vec<Character>> {
        let reps = self
            .spec
            .class_representatives
            .as_ref()
            .ok_or_else(|| Error::CharacterTable("class representatives missing".into()))?;
        let table = self.spec.character_table.as_ref().unwrap();
        if reps.len() != self.classes.len() {
            return Err(Error::CharacterTable(format!(
                "{} class representatives for {} classes",
                reps.len(),
                self.classes.len()
            )));
        }
        let mut col_of_class = vec![usize::MAX; self.classes.len()];
        for (col, w) in reps.iter().enumerate() {
            let mut e = 0usize;
            for &k in w {
                let g = self
                    .spec
                    .generators
                    .get(k)
                    .ok_or_else(|| Error::CharacterTable("bad generator index".into()))?;
                e = self.index[&self.elements[e].mul(g)];
            }
            let c = self.class_of[e];
            if col_of_class[c] != usize::MAX {
                return Err(Error::CharacterTable(format!(
                    "representatives {} and {} are conjugate",
                    col_of_class[c], col
                )));
            }
            col_of_class[c] = col;
        }
        let mut chars = Vec::new();
        for (row, vals) in table.iter().enumerate() {
            if vals.len() != reps.len() {
                return Err(Error::CharacterTable(format!("row {row} has wrong length")));
            }
            let values: Vec<Cyclo> = (0..self.order())
                .map(|w| vals[col_of_class[self.class_of[w]]].clone())
                .collect();
            let degree = values[0]
                .to_rational()
                .and_then(|r| u64::try_from(r).ok())
                .ok_or_else(|| Error::CharacterTable(format!("row {row}: degree not a positive integer")))?
                as usize;
            chars.push(Character {
                label: String::new(),
                degree,
                values,
            });
        }
        validate_characters(self, &chars)?;
        let reps: Vec<usize> = self.classes.iter().map(|c| c[0]).collect();
        let n = self.conductor;
        chars.sort_by(|a, b| {
            a.degree.cmp(&b.degree).then_with(|| {
                reps.iter()
                    .map(|&w| cmp_cyclo(&a.values[w], &b.values[w], n))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            })
        });
        let mut counts: FxHashMap<usize, usize> = FxHashMap::default();
        for c in chars.iter_mut() {
            let k = counts.entry(c.degree).or_insert(0);
            c.label = format!("{}{}", c.degree, suffix(*k));
            *k += 1;
        }
        Ok(chars)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &Mat {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    /// Matrix of w⁻¹.
    pub fn inverse_matrix(&self, i: usize) -> &Mat {
        &self.inverse_mats[i]
    }

    pub fn index_of(&self, m: &Mat) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Word in the generators giving element i.
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, w: usize) -> usize {
        self.class_of[w]
    }

    /// ε(w) = det(w).
    pub fn det(&self, w: usize) -> &Cyclo {
        &self.det[w]
    }

    /// Order of the center Z(W) (scalar matrices).
    pub fn center_order(&self) -> usize {
        self.classes.iter().filter(|c| c.len() == 1).count()
    }

    pub fn characters(&self) -> Result<&[Character]> {
        self.characters
            .as_deref()
            .ok_or_else(|| Error::CharacterTable(format!("no character table shipped for {}", self.name)))
    }

    /// Index of the character with a given label.
    pub fn character_index(&self, label: &str) -> Option<usize> {
        self.characters.as_ref()?.iter().position(|c| c.label == label)
    }

    pub fn num_params(&self) -> usize {
        self.refl_classes.len()
    }

    pub fn c_names(&self) -> Vec<String> {
        (1..=self.num_params()).map(|i| format!("C{i}")).collect()
    }

    pub fn k_names(&self) -> Vec<String> {
        self.k_basis
            .iter()
            .map(|&(o, j)| format!("K{}_{}", o + 1, j))
            .collect()
    }

    /// C_s = Σ_k gamma(s, k) K_k.
    pub fn gamma(&self) -> &Mat {
        &self.gamma
    }

    /// Linear form in K coordinates → the same form in C coordinates.
    pub fn k_form_to_c(&self, a: &[Cyclo]) -> Vec<Cyclo> {
        // ℓ = a·K, K = γ⁻¹ C
        row_times(a, &self.gamma_inv)
    }

    /// Linear form in C coordinates → K coordinates (κ direction).
    pub fn c_form_to_k(&self, b: &[Cyclo]) -> Vec<Cyclo> {
        row_times(b, &self.gamma)
    }

    /// Point in K coordinates → values c_s.
    pub fn k_point_to_c(&self, k: &[Cyclo]) -> Vec<Cyclo> {
        self.gamma.mul_vec(k)
    }

    pub fn c_point_to_k(&self, c: &[Cyclo]) -> Vec<Cyclo> {
        self.gamma_inv.mul_vec(c)
    }

    /// Deterministic regular vector: α_H(v) ≠ 0 for every reflecting hyperplane.
    pub fn regular_vector(&self, seed: u64) -> Vec<Cyclo> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut range = 3i64;
        loop {
            for _ in 0..16 {
                let v: Vec<Cyclo> = (0..self.dim)
                    .map(|_| Cyclo::from_i64(rng.gen_range(-range..=range)))
                    .collect();
                if self.is_regular(&v) {
                    return v;
                }
            }
            range *= 2;
        }
    }

    pub fn is_regular(&self, v: &[Cyclo]) -> bool {
        self.hyperplanes.iter().all(|h| !pair(&h.root, v).is_zero())
    }

    /// Matrix of the x-action: w(x_j) = Σ_k m[j][k] x_k.
    pub fn x_action(&self, w: usize) -> &Mat {
        // (w·x)(v) = x(w⁻¹ v): row j of M⁻¹
        &self.inverse_mats[w]
    }

    /// Group-algebra idempotent ε_{H,j} as (element, coefficient) pairs.
    pub fn idempotent(&self, h: usize, j: usize) -> Vec<(usize, Cyclo)> {
        let hy = &self.hyperplanes[h];
        let e = Cyclo::from_i64(hy.order as i64).inv();
        hy.stabilizer
            .iter()
            .map(|&w| (w, &self.det[w].pow(j as u32) * &e))
            .collect()
    }

    /// Ring of parameter variables C1..Cr.
    pub fn c_ring(&self) -> Arc<Ring> {
        Ring::new(self.c_names().into_iter().map(|s| (s, (1, 1))).collect()).unwrap()
    }

    /// Ring of parameter variables in the K basis.
    pub fn k_ring(&self) -> Arc<Ring> {
        Ring::new(self.k_names().into_iter().map(|s| (s, (1, 1))).collect()).unwrap()
    }

    /// Rewrites a polynomial in C-variables (the first r variables of its ring)
    /// as a polynomial over the K-ring.
    pub fn c_poly_to_k(&self, p: &MPoly, k_ring: &Arc<Ring>) -> MPoly {
        let r = self.num_params();
        let images: Vec<Option<MPoly>> = (0..p.ring().nvars())
            .map(|i| {
                if i < r {
                    Some((0..r).fold(MPoly::zero(k_ring), |acc, k| {
                        acc.add(&MPoly::var(k_ring, k).scale(self.gamma.at(i, k)))
                    }))
                } else {
                    None
                }
            })
            .collect();
        p.substitute(k_ring, &images)
    }
}

fn row_times(a: &[Cyclo], m: &Mat) -> Vec<Cyclo> {
    (0..m.cols())
        .map(|j| {
            a.iter()
                .enumerate()
                .fold(Cyclo::zero(), |acc, (i, x)| &acc + &(x * m.at(i, j)))
        })
        .collect()
}

/// ⟨v, α⟩ for α ∈ V* and v ∈ V.
pub fn pair(alpha: &[Cyclo], v: &[Cyclo]) -> Cyclo {
    alpha
        .iter()
        .zip(v)
        .fold(Cyclo::zero(), |acc, (a, b)| &acc + &(a * b))
}

fn suffix(k: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if k < 26 {
        (letters[k] as char).to_string()
    } else {
        format!("_{k}")
    }
}

/// Row and column orthogonality, degrees, class-function checks.
pub fn validate_characters(g: &ReflectionGroup, chars: &[Character]) -> Result<()> {
    let order = Cyclo::from_i64(g.order() as i64);
    if chars.len() != g.classes().len() {
        return Err(Error::CharacterTable(format!(
            "{} characters for {} classes",
            chars.len(),
            g.classes().len()
        )));
    }
    for (i, a) in chars.iter().enumerate() {
        for (j, b) in chars.iter().enumerate().skip(i) {
            let s = (0..g.order()).fold(Cyclo::zero(), |acc, w| &acc + &(&a.values[w] * &b.values[w].conj()));
            let want = if i == j { order.clone() } else { Cyclo::zero() };
            if s != want {
                return Err(Error::CharacterTable(format!(
                    "row orthogonality fails for rows {i} and {j}"
                )));
            }
        }
    }
    let reps: Vec<usize> = g.classes().iter().map(|c| c[0]).collect();
    for (ci, &a) in reps.iter().enumerate() {
        for (cj, &b) in reps.iter().enumerate().skip(ci) {
            let s = chars
                .iter()
                .fold(Cyclo::zero(), |acc, ch| &acc + &(&ch.values[a] * &ch.values[b].conj()));
            let want = if ci == cj {
                Cyclo::from_i64((g.order() / g.classes()[ci].len()) as i64)
            } else {
                Cyclo::zero()
            };
            if s != want {
                return Err(Error::CharacterTable(format!(
                    "column orthogonality fails for columns {ci} and {cj}"
                )));
            }
        }
    }
    let sq: usize = chars.iter().map(|c| c.degree * c.degree).sum();
    if sq != g.order() {
        return Err(Error::CharacterTable("degrees do not square-sum to |W|".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu2() {
        let g = ReflectionGroup::builtin("mu2").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.reflections.len(), 1);
        assert_eq!(g.orbits.len(), 1);
        assert_eq!(g.orbits[0].order, 2);
        // C = 2 K_1
        assert_eq!(g.gamma().at(0, 0), &Cyclo::from_i64(2));
        assert!(g.is_regular(&[Cyclo::one()]));
    }

    #[test]
    fn b2() {
        let g = ReflectionGroup::builtin("B2").unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.reflections.len(), 4);
        assert_eq!(g.refl_classes.len(), 2);
        assert_eq!(g.orbits.len(), 2);
        assert!(g.orbits.iter().all(|o| o.order == 2));
        assert!(g.is_regular(&[Cyclo::from_i64(1), Cyclo::from_i64(2)]));
        let degs: Vec<usize> = g.characters().unwrap().iter().map(|c| c.degree).collect();
        assert_eq!(degs, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn g4() {
        let g = ReflectionGroup::builtin("G4").unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.center_order(), 2);
        assert_eq!(g.reflections.len(), 8);
        assert_eq!(g.orbits.len(), 1);
        assert_eq!(g.orbits[0].order, 3);
        assert_eq!(g.num_params(), 2);
    }

    #[test]
    fn reflections_fix_hyperplane_and_scale_coroot() {
        for name in ["B2", "G4", "dih10", "mu5"] {
            let g = ReflectionGroup::builtin(name).unwrap();
            for r in &g.reflections {
                let m = g.element(r.element);
                let img = m.mul_vec(&r.coroot);
                let want: Vec<Cyclo> = r.coroot.iter().map(|c| c * &r.eps).collect();
                assert_eq!(img, want);
                assert!(!pair(&r.root, &r.coroot).is_zero());
            }
        }
    }

    #[test]
    fn parameter_round_trip() {
        let g = ReflectionGroup::builtin("G4").unwrap();
        let a = vec![Cyclo::from_i64(3), Cyclo::frac(-1, 2)];
        assert_eq!(g.c_form_to_k(&g.k_form_to_c(&a)), a);
        let z = vec![Cyclo::zero(), Cyclo::zero()];
        assert_eq!(g.k_form_to_c(&z), z);
    }

    #[test]
    fn duplicated_row_rejected() {
        let mut spec = GroupSpec::builtin("mu2").unwrap();
        let t = spec.character_table.as_mut().unwrap();
        t[1] = t[0].clone();
        assert!(ReflectionGroup::build(spec).is_err());
    }

    #[test]
    fn all_builtin_groups_load() {
        for name in builtin_names() {
            let g = ReflectionGroup::builtin(name).unwrap();
            assert!(g.characters().is_ok(), "{name}");
        }
    }
}
