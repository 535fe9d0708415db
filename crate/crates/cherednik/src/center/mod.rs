//! The center Z of H: generators, preimages under π: C[C][z] → Z, presentation
//! and Poisson brackets.

pub mod invariants;

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use cherednik_exact::groebner::{algebra_map_kernel_with, GbOptions};
use cherednik_exact::{Cyclo, Echelon, MPoly, Mat, Mono, Ring};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::pbw::{trunc_inverse, Algebra, Pbw};
use crate::reflection::ReflectionGroup;

pub use invariants::{molien_series, reynolds, Bidegree, InvariantSystem};

/// Center generators z_i = Trunc⁻¹(z_i⁽⁰⁾) together with the machinery to
/// move between Z and the polynomial ring C[C][z_1, …, z_m].
pub struct Center {
    pub alg: Arc<Algebra>,
    pub invariants: InvariantSystem,
    pub gens: Vec<Pbw>,
    /// C1..Cr, z1..zm with z_i tagged by its bi-degree.
    pub zring: Arc<Ring>,
    y_reg: Vec<Cyclo>,
    talg: RwLock<Option<Arc<Algebra>>>,
    pi_cache: RwLock<FxHashMap<Mono, Arc<Pbw>>>,
    pi0_cache: RwLock<FxHashMap<Mono, Arc<MPoly>>>,
}

/// A presentation of Z as a quotient of C[C][z].
#[derive(Clone, Debug)]
pub struct Presentation {
    pub relations: Vec<MPoly>,
    pub bidegrees: Vec<Bidegree>,
}

impl Center {
    pub fn new(group: Arc<ReflectionGroup>, seed: u64, bound: Option<u32>) -> Result<Center> {
        let alg = Algebra::new(group, false);
        let invariants = InvariantSystem::compute(&alg, bound)?;
        let y_reg = alg.group.regular_vector(seed);
        let gens = invariants
            .gens
            .iter()
            .map(|f| trunc_inverse(&alg, f, &y_reg))
            .collect::<Result<Vec<_>>>()?;
        let mut vars: Vec<(String, (u32, u32))> =
            alg.group.c_names().into_iter().map(|s| (s, (1, 1))).collect();
        for (i, b) in invariants.bidegrees.iter().enumerate() {
            vars.push((format!("z{}", i + 1), *b));
        }
        let zring = Ring::new(vars)
            .map_err(|_| Error::ResourceLimit("too many center generators for the variable limit".into()))?;
        Ok(Center {
            alg,
            invariants,
            gens,
            zring,
            y_reg,
            talg: RwLock::new(None),
            pi_cache: RwLock::default(),
            pi0_cache: RwLock::default(),
        })
    }

    pub fn group(&self) -> &Arc<ReflectionGroup> {
        &self.alg.group
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn r(&self) -> usize {
        self.alg.num_params()
    }

    pub fn z_var(&self, i: usize) -> usize {
        self.r() + i
    }

    /// Indices of the generators of Z-degree 0.
    pub fn degree_zero(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                let (d, e) = self.invariants.bidegrees[i];
                d == e
            })
            .collect()
    }

    fn z_vars(&self) -> Vec<usize> {
        (0..self.len()).map(|i| self.z_var(i)).collect()
    }

    /// C-only polynomial of the z-ring moved to the algebra ring (and back).
    fn c_to_alg(&self, p: &MPoly) -> MPoly {
        let map: Vec<usize> = (0..self.zring.nvars()).map(|i| i.min(self.r().max(1) - 1)).collect();
        p.rename(self.alg.ring(), &map)
    }

    fn z_monomial(&self, m: Mono) -> Arc<Pbw> {
        if let Some(p) = self.pi_cache.read().unwrap().get(&m) {
            return p.clone();
        }
        let p = if m == Mono::ONE {
            self.alg.one()
        } else {
            let i = (0..self.len()).find(|&i| m.exp(self.z_var(i)) > 0).unwrap();
            let rest = Mono(m.0 - Mono::var(self.z_var(i)).0);
            self.z_monomial(rest).mul(&self.gens[i])
        };
        let p = Arc::new(p);
        self.pi_cache.write().unwrap().insert(m, p.clone());
        p
    }

    fn z0_monomial(&self, m: Mono) -> Arc<MPoly> {
        if let Some(p) = self.pi0_cache.read().unwrap().get(&m) {
            return p.clone();
        }
        let p = if m == Mono::ONE {
            MPoly::one(self.alg.ring())
        } else {
            let i = (0..self.len()).find(|&i| m.exp(self.z_var(i)) > 0).unwrap();
            let rest = Mono(m.0 - Mono::var(self.z_var(i)).0);
            self.z0_monomial(rest).mul(&self.invariants.gens[i])
        };
        let p = Arc::new(p);
        self.pi0_cache.write().unwrap().insert(m, p.clone());
        p
    }

    /// π(F) ∈ Z for F ∈ C[C][z].
    pub fn pi(&self, f: &MPoly) -> Pbw {
        let mut acc = self.alg.zero();
        for (m, cof) in f.split_by(&self.z_vars()) {
            let zm = self.z_monomial(m);
            acc = acc.add(&zm.mul_poly_left(&self.c_to_alg(&cof)));
        }
        acc
    }

    /// π₀(F): F evaluated on the invariants z_i⁽⁰⁾ (parameters kept).
    pub fn pi0(&self, f: &MPoly) -> MPoly {
        let mut acc = MPoly::zero(self.alg.ring());
        for (m, cof) in f.split_by(&self.z_vars()) {
            acc = acc.add(&self.z0_monomial(m).mul(&self.c_to_alg(&cof)));
        }
        acc
    }

    /// Monomials in z_1..z_m of a given bi-degree (excluding C).
    pub fn z_monomials(&self, deg: Bidegree) -> Vec<Mono> {
        let mut out = Vec::new();
        self.z_monos_rec(0, deg, Mono::ONE, &mut out);
        out
    }

    fn z_monos_rec(&self, i: usize, deg: Bidegree, cur: Mono, out: &mut Vec<Mono>) {
        if deg == (0, 0) {
            out.push(cur);
            return;
        }
        if i == self.len() {
            return;
        }
        let (a, b) = self.invariants.bidegrees[i];
        let mut k = 0;
        loop {
            let (da, db) = (a * k, b * k);
            if da > deg.0 || db > deg.1 {
                break;
            }
            self.z_monos_rec(i + 1, (deg.0 - da, deg.1 - db), cur.with(self.z_var(i), k), out);
            k += 1;
        }
    }

    /// Solves π₀(F) = f for an invariant f without parameters.
    pub fn pi0_preimage(&self, f: &MPoly) -> Result<MPoly> {
        if f.is_zero() {
            return Ok(MPoly::zero(&self.zring));
        }
        let deg = f
            .bidegree()
            .ok_or_else(|| Error::NotInvariant("not bi-homogeneous".into()))?;
        let monos = self.z_monomials(deg);
        let images: Vec<Arc<MPoly>> = monos.iter().map(|&m| self.z0_monomial(m)).collect();
        let mut rows: BTreeMap<Mono, usize> = BTreeMap::new();
        for p in images.iter().map(|p| p.as_ref()).chain(std::iter::once(f)) {
            for (m, _) in p.terms() {
                let k = rows.len();
                rows.entry(*m).or_insert(k);
            }
        }
        let mut a = Mat::zero(rows.len(), monos.len());
        for (j, p) in images.iter().enumerate() {
            for (m, c) in p.terms() {
                a.set(rows[m], j, c.clone());
            }
        }
        let mut b = vec![Cyclo::zero(); rows.len()];
        for (m, c) in f.terms() {
            b[rows[m]] = c.clone();
        }
        let x = a.solve(&b).ok_or_else(|| {
            Error::Domain(format!(
                "invariant of bidegree {deg:?} is not a polynomial in the generators (bound too small?)"
            ))
        })?;
        Ok(MPoly::from_terms(
            &self.zring,
            monos.into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect(),
        ))
    }

    /// Writes a central u with Trunc(u) ∈ C₀ as Σ_s C_s h_s with h_s central.
    pub fn split_c0_multiple(&self, u: &Pbw) -> Result<Vec<(usize, Pbw)>> {
        let r = self.r();
        let mut parts: BTreeMap<usize, Vec<(Mono, Cyclo)>> = BTreeMap::new();
        for (m, c) in u.trunc().terms() {
            let s = (0..r).find(|&s| m.exp(s) > 0).ok_or_else(|| {
                Error::Domain("truncation has a parameter-free term".into())
            })?;
            parts
                .entry(s)
                .or_default()
                .push((Mono(m.0 - Mono::var(s).0), c.clone()));
        }
        parts
            .into_iter()
            .map(|(s, terms)| {
                let g = MPoly::from_terms(self.alg.ring(), terms);
                Ok((s, trunc_inverse(&self.alg, &g, &self.y_reg)?))
            })
            .collect()
    }

    /// F ∈ C[C][z] with π(F) = z for a bi-homogeneous central z.
    pub fn preimage(&self, z: &Pbw) -> Result<MPoly> {
        if z.is_zero() {
            return Ok(MPoly::zero(&self.zring));
        }
        if z.bidegree().is_none() {
            return Err(Error::Domain("element is not bi-homogeneous".into()));
        }
        let r = self.r();
        let zero_c: Vec<(usize, Cyclo)> = (0..r).map(|s| (s, Cyclo::zero())).collect();
        let t0 = z.trunc().eval_partial(&zero_c);
        let f0 = self.pi0_preimage(&t0)?;
        let u = self.pi(&f0).sub(z);
        let mut f = f0;
        for (s, h) in self.split_c0_multiple(&u)? {
            let fs = self.preimage(&h)?;
            f = f.sub(&fs.mul(&MPoly::var(&self.zring, s)));
        }
        Ok(f)
    }

    /// Generators of Ker(π₀), minimal per bi-degree.
    pub fn kernel_c0(&self, opts: &GbOptions) -> Result<Vec<MPoly>> {
        let alg = &self.alg;
        let n = alg.dim();
        let r = self.r();
        // images in a ring of x, y only
        let xy = Ring::new(
            (0..2 * n)
                .map(|i| (alg.ring().name(r + i).to_string(), alg.ring().tag(r + i)))
                .collect(),
        )?;
        let map: Vec<usize> = (0..alg.ring().nvars()).map(|i| i.saturating_sub(r)).collect();
        let images: Vec<MPoly> = self.invariants.gens.iter().map(|f| f.rename(&xy, &map)).collect();
        let z0 = Ring::new(
            (0..self.len())
                .map(|i| (format!("z{}", i + 1), self.invariants.bidegrees[i]))
                .collect(),
        )?;
        let ker = algebra_map_kernel_with(&images, &z0, opts).map_err(|e| match e {
            cherednik_exact::ExactError::ResourceLimit(m) => Error::ResourceLimit(m),
            e => Error::Exact(e),
        })?;
        let back: Vec<usize> = (0..self.len()).map(|i| self.z_var(i)).collect();
        let ker: Vec<MPoly> = ker.iter().map(|p| p.rename(&self.zring, &back)).collect();
        Ok(self.minimize(ker))
    }

    /// Drops generators lying in the ideal of the others (bi-graded Nakayama).
    fn minimize(&self, mut gens: Vec<MPoly>) -> Vec<MPoly> {
        let deg = |p: &MPoly| p.bidegree().expect("homogeneous kernel generator");
        gens.sort_by(|a, b| {
            let (da, db) = (deg(a), deg(b));
            (da.0 + da.1, da.0, a.nterms(), a.to_string()).cmp(&(db.0 + db.1, db.0, b.nterms(), b.to_string()))
        });
        let mut kept: Vec<MPoly> = Vec::new();
        for g in gens {
            let d = deg(&g);
            let mut ech: Echelon<Mono> = Echelon::new();
            for h in &kept {
                let dh = deg(h);
                if dh.0 > d.0 || dh.1 > d.1 {
                    continue;
                }
                for m in self.z_monomials((d.0 - dh.0, d.1 - dh.1)) {
                    ech.insert(&h.mul_term(m, &Cyclo::one()).terms().iter().cloned().collect());
                }
            }
            if !ech.contains(&g.terms().iter().cloned().collect()) {
                kept.push(normalize(&g));
            }
        }
        kept
    }

    /// Lifts the relations of the commutative case to relations among the z_i.
    pub fn presentation(&self, opts: &GbOptions) -> Result<Presentation> {
        let mut relations = Vec::new();
        for rho0 in self.kernel_c0(opts)? {
            let u = self.pi(&rho0);
            let f = self.preimage(&u)?;
            relations.push(normalize(&rho0.sub(&f)));
        }
        let bidegrees = relations
            .iter()
            .map(|p| p.bidegree().expect("bi-homogeneous relation"))
            .collect();
        Ok(Presentation {
            relations,
            bidegrees,
        })
    }

    /// dim of (C[z]/⟨ρ|_{C=0}⟩) in each bi-degree with total degree ≤ bound.
    pub fn quotient_hilbert(&self, relations: &[MPoly], bound: u32) -> BTreeMap<Bidegree, usize> {
        let r = self.r();
        let zero_c: Vec<(usize, Cyclo)> = (0..r).map(|s| (s, Cyclo::zero())).collect();
        let rels: Vec<MPoly> = relations
            .iter()
            .map(|p| p.eval_partial(&zero_c))
            .filter(|p| !p.is_zero())
            .collect();
        let mut out = BTreeMap::new();
        for total in 0..=bound {
            for d in 0..=total {
                let e = total - d;
                let all = self.z_monomials((d, e)).len();
                let mut ech: Echelon<Mono> = Echelon::new();
                for p in &rels {
                    let dp = p.bidegree().unwrap();
                    if dp.0 > d || dp.1 > e {
                        continue;
                    }
                    for m in self.z_monomials((d - dp.0, e - dp.1)) {
                        ech.insert(&p.mul_term(m, &Cyclo::one()).terms().iter().cloned().collect());
                    }
                }
                out.insert((d, e), all - ech.rank());
            }
        }
        out
    }

    /// The algebra with the deformation variable t.
    pub fn t_algebra(&self) -> Arc<Algebra> {
        if let Some(a) = self.talg.read().unwrap().as_ref() {
            return a.clone();
        }
        let a = Algebra::new(self.alg.group.clone(), true);
        *self.talg.write().unwrap() = Some(a.clone());
        a
    }

    /// {a, b}: the t-linear part of [a, b] computed in H_t with the same coefficients.
    pub fn poisson_bracket(&self, a: &Pbw, b: &Pbw) -> Result<Pbw> {
        let talg = self.t_algebra();
        let at = a.transport(&talg);
        let bt = b.transport(&talg);
        let br = at.commutator(&bt);
        if !br.t_coefficient(0, &self.alg).is_zero() {
            return Err(Error::NotCentral);
        }
        Ok(br.t_coefficient(1, &self.alg))
    }

    /// {z_i, z_j} as polynomials in C[C][z], upper triangle filled by antisymmetry.
    pub fn poisson_matrix(&self) -> Result<Vec<Vec<MPoly>>> {
        let m = self.len();
        let mut out = vec![vec![MPoly::zero(&self.zring); m]; m];
        for i in 0..m {
            for j in i + 1..m {
                let br = self.poisson_bracket(&self.gens[i], &self.gens[j])?;
                let f = self.preimage(&br)?;
                out[j][i] = f.neg();
                out[i][j] = f;
            }
        }
        Ok(out)
    }

    /// Index of the generator equal to the Euler element, if any.
    pub fn euler_index(&self) -> Option<usize> {
        let eu = self.alg.euler();
        self.gens.iter().position(|g| *g == eu)
    }
}

/// Scales to a primitive integer polynomial with positive leading coefficient
/// when the coefficients are rational; otherwise to leading coefficient 1.
pub fn normalize(p: &MPoly) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    p.primitive_rational().unwrap_or_else(|| p.monic())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn center(name: &str) -> Center {
        Center::new(ReflectionGroup::builtin(name).unwrap(), 0, None).unwrap()
    }

    #[test]
    fn mu2_center() {
        let z = center("mu2");
        assert_eq!(z.len(), 3);
        for g in &z.gens {
            assert!(g.is_central());
        }
        assert_eq!(z.euler_index(), Some(1));
        let p = z.presentation(&GbOptions::default()).unwrap();
        assert_eq!(p.relations.len(), 1);
        for rho in &p.relations {
            assert!(z.pi(rho).is_zero());
        }
    }

    #[test]
    fn preimage_roundtrip_mu2() {
        let z = center("mu2");
        let eu = z.alg.euler();
        let sq = eu.mul(&eu);
        let f = z.preimage(&sq).unwrap();
        assert_eq!(z.pi(&f), sq);
        let x2y2 = z.gens[0].mul(&z.gens[2]);
        let f = z.preimage(&x2y2).unwrap();
        assert_eq!(z.pi(&f), x2y2);
    }

    #[test]
    fn euler_bracket_mu2() {
        let z = center("mu2");
        let eu = z.alg.euler();
        for (i, g) in z.gens.iter().enumerate() {
            let (d, e) = z.invariants.bidegrees[i];
            let br = z.poisson_bracket(&eu, g).unwrap();
            assert_eq!(br, g.scale(&Cyclo::from_i64(d as i64 - e as i64)));
        }
    }
}
