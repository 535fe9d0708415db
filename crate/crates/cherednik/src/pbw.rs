//! The generic rational Cherednik algebra H (optionally its t-deformation) in
//! PBW normal form: elements are Σ_w h_w·w with h_w ∈ C[C] ⊗ C[V] ⊗ C[V*].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use cherednik_exact::{add_into, Cyclo, MPoly, Mono, Ring};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::reflection::{pair, ReflectionGroup};

type Cache = RwLock<FxHashMap<Mono, Arc<MPoly>>>;

struct ReflData {
    element: usize,
    class: usize,
    eps: Cyclo,
    /// ⟨y_i, α_s⟩
    root: Vec<Cyclo>,
    /// Δ_s(x_i)
    delta_x: Vec<Cyclo>,
}

/// Variable layout: C1..Cr, x1..xn, y1..yn, then t when present.
pub struct Algebra {
    pub group: Arc<ReflectionGroup>,
    ring: Arc<Ring>,
    r: usize,
    n: usize,
    with_t: bool,
    x_mask: u128,
    y_mask: u128,
    refl: Vec<ReflData>,
    /// w(x_i), w(y_i) as linear forms.
    x_lin: Vec<Vec<MPoly>>,
    y_lin: Vec<Vec<MPoly>>,
    x_cache: Vec<Cache>,
    y_cache: Vec<Cache>,
    delta_cache: Vec<Cache>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, t={})", self.group.name, self.with_t)
    }
}

fn mask_of(vars: std::ops::Range<usize>) -> u128 {
    vars.fold(0u128, |m, i| m | (Mono::var(i).0 * 0xff))
}

impl Algebra {
    pub fn new(group: Arc<ReflectionGroup>, with_t: bool) -> Arc<Algebra> {
        let r = group.num_params();
        let n = group.dim;
        let mut vars: Vec<(String, (u32, u32))> = Vec::new();
        for name in group.c_names() {
            vars.push((name, (1, 1)));
        }
        for i in 1..=n {
            vars.push((format!("x{i}"), (1, 0)));
        }
        for i in 1..=n {
            vars.push((format!("y{i}"), (0, 1)));
        }
        if with_t {
            vars.push(("t".into(), (1, 1)));
        }
        let ring = Ring::new(vars).expect("too many variables");
        let order = group.order();
        let mut x_lin = Vec::with_capacity(order);
        let mut y_lin = Vec::with_capacity(order);
        for w in 0..order {
            let mi = group.x_action(w);
            let m = group.element(w);
            x_lin.push(
                (0..n)
                    .map(|j| {
                        MPoly::from_terms(
                            &ring,
                            (0..n).map(|k| (Mono::var(r + k), mi.at(j, k).clone())).collect(),
                        )
                    })
                    .collect(),
            );
            y_lin.push(
                (0..n)
                    .map(|j| {
                        MPoly::from_terms(
                            &ring,
                            (0..n)
                                .map(|i| (Mono::var(r + n + i), m.at(i, j).clone()))
                                .collect(),
                        )
                    })
                    .collect(),
            );
        }
        let refl = group
            .reflections
            .iter()
            .map(|s| {
                // x_i - s(x_i) = d_i α_s
                let mi = group.x_action(s.element);
                let lead = s.root.iter().position(|c| !c.is_zero()).unwrap();
                let delta_x = (0..n)
                    .map(|i| {
                        let diff = if i == lead { Cyclo::one() } else { Cyclo::zero() };
                        let diff = &diff - mi.at(i, lead);
                        &diff / &s.root[lead]
                    })
                    .collect();
                ReflData {
                    element: s.element,
                    class: s.class,
                    eps: s.eps.clone(),
                    root: s.root.clone(),
                    delta_x,
                }
            })
            .collect::<Vec<_>>();
        let nrefl = refl.len();
        Arc::new(Algebra {
            x_mask: mask_of(r..r + n),
            y_mask: mask_of(r + n..r + 2 * n),
            group,
            ring,
            r,
            n,
            with_t,
            refl,
            x_lin,
            y_lin,
            x_cache: (0..order).map(|_| RwLock::default()).collect(),
            y_cache: (0..order).map(|_| RwLock::default()).collect(),
            delta_cache: (0..nrefl).map(|_| RwLock::default()).collect(),
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn has_t(&self) -> bool {
        self.with_t
    }

    pub fn num_params(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn c_var(&self, i: usize) -> usize {
        i
    }

    pub fn x_var(&self, i: usize) -> usize {
        self.r + i
    }

    pub fn y_var(&self, i: usize) -> usize {
        self.r + self.n + i
    }

    pub fn t_var(&self) -> Option<usize> {
        self.with_t.then_some(self.r + 2 * self.n)
    }

    pub fn x(&self, i: usize) -> MPoly {
        MPoly::var(&self.ring, self.x_var(i))
    }

    pub fn y(&self, i: usize) -> MPoly {
        MPoly::var(&self.ring, self.y_var(i))
    }

    pub fn c(&self, i: usize) -> MPoly {
        MPoly::var(&self.ring, i)
    }

    fn mono_image(&self, cache: &Cache, m: Mono, base: usize, lin: &[MPoly]) -> Arc<MPoly> {
        if let Some(p) = cache.read().unwrap().get(&m) {
            return p.clone();
        }
        let img = if m == Mono::ONE {
            MPoly::one(&self.ring)
        } else {
            let i = (0..self.n).find(|&i| m.exp(base + i) > 0).unwrap();
            let rest = Mono(m.0 - Mono::var(base + i).0);
            self.mono_image(cache, rest, base, lin).mul(&lin[i])
        };
        let img = Arc::new(img);
        cache.write().unwrap().insert(m, img.clone());
        img
    }

    fn x_image(&self, w: usize, m: Mono) -> Arc<MPoly> {
        self.mono_image(&self.x_cache[w], m, self.r, &self.x_lin[w])
    }

    fn y_image(&self, w: usize, m: Mono) -> Arc<MPoly> {
        self.mono_image(&self.y_cache[w], m, self.r + self.n, &self.y_lin[w])
    }

    /// Δ_s(x^a) for an x-monomial, by the twisted Leibniz rule
    /// Δ_s(x_i·m) = Δ_s(x_i)·s(m) + x_i·Δ_s(m).
    fn delta(&self, s: usize, m: Mono) -> Arc<MPoly> {
        if let Some(p) = self.delta_cache[s].read().unwrap().get(&m) {
            return p.clone();
        }
        let d = if m == Mono::ONE {
            MPoly::zero(&self.ring)
        } else {
            let i = (0..self.n).find(|&i| m.exp(self.r + i) > 0).unwrap();
            let rest = Mono(m.0 - Mono::var(self.r + i).0);
            let rs = &self.refl[s];
            let a = self.x_image(rs.element, rest).scale(&rs.delta_x[i]);
            let b = self.delta(s, rest).mul_term(Mono::var(self.r + i), &Cyclo::one());
            a.add(&b)
        };
        let d = Arc::new(d);
        self.delta_cache[s].write().unwrap().insert(m, d.clone());
        d
    }

    /// w acting on the x-variables only.
    pub fn act_x(&self, w: usize, f: &MPoly) -> MPoly {
        if w == 0 {
            return f.clone();
        }
        self.act_part(f, self.x_mask, |m| self.x_image(w, m))
    }

    /// w acting on the y-variables only.
    pub fn act_y(&self, w: usize, f: &MPoly) -> MPoly {
        if w == 0 {
            return f.clone();
        }
        self.act_part(f, self.y_mask, |m| self.y_image(w, m))
    }

    /// Diagonal action of w on C[C × V × V*].
    pub fn act(&self, w: usize, f: &MPoly) -> MPoly {
        if w == 0 {
            return f.clone();
        }
        self.act_y(w, &self.act_x(w, f))
    }

    fn act_part<F: Fn(Mono) -> Arc<MPoly>>(&self, f: &MPoly, mask: u128, img: F) -> MPoly {
        let mut acc: FxHashMap<Mono, Cyclo> = FxHashMap::default();
        for (m, c) in f.terms() {
            let inner = Mono(m.0 & mask);
            let rest = Mono(m.0 & !mask);
            let p = img(inner);
            for (pm, pc) in p.terms() {
                add_into(&mut acc, pm.mul(rest), &(pc * c));
            }
        }
        MPoly::from_map(&self.ring, acc)
    }

    /// (Id ⊗ Δ_s ⊗ s)(h): Δ_s on the x-part, s on the y-part.
    fn t_op(&self, s: usize, h: &MPoly) -> MPoly {
        let hs = self.act_y(self.refl[s].element, h);
        let mut acc: FxHashMap<Mono, Cyclo> = FxHashMap::default();
        for (m, c) in hs.terms() {
            let xm = Mono(m.0 & self.x_mask);
            if xm == Mono::ONE {
                continue;
            }
            let rest = Mono(m.0 & !self.x_mask);
            let d = self.delta(s, xm);
            for (dm, dc) in d.terms() {
                add_into(&mut acc, dm.mul(rest), &(dc * c));
            }
        }
        MPoly::from_map(&self.ring, acc)
    }

    /// Left multiplication by Σ_i v_i y_i (v ∈ V) on Σ_w h_w w.
    fn left_y(&self, v: &[Cyclo], e: &[MPoly]) -> Vec<MPoly> {
        let order = self.group.order();
        let yv = MPoly::from_terms(
            &self.ring,
            (0..self.n).map(|i| (Mono::var(self.y_var(i)), v[i].clone())).collect(),
        );
        let mut out: Vec<MPoly> = e.iter().map(|h| h.mul(&yv)).collect();
        if let Some(t) = self.t_var() {
            for (w, h) in e.iter().enumerate() {
                if h.is_zero() {
                    continue;
                }
                let mut d = MPoly::zero(&self.ring);
                for i in 0..self.n {
                    if !v[i].is_zero() {
                        d = d.add(&h.derivative(self.x_var(i)).scale(&v[i]));
                    }
                }
                out[w] = out[w].add(&d.mul_term(Mono::var(t), &Cyclo::one()));
            }
        }
        for (s, rs) in self.refl.iter().enumerate() {
            let coef = &rs.eps * &pair(&rs.root, v);
            if coef.is_zero() {
                continue;
            }
            let cm = Mono::var(rs.class);
            for w in 0..order {
                if e[w].is_zero() {
                    continue;
                }
                let t = self.t_op(s, &e[w]);
                if t.is_zero() {
                    continue;
                }
                let sw = self.group.mul(rs.element, w);
                out[sw] = out[sw].add(&t.mul_term(cm, &coef));
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<Cyclo> {
        (0..self.n)
            .map(|j| if i == j { Cyclo::one() } else { Cyclo::zero() })
            .collect()
    }

    pub fn zero(self: &Arc<Self>) -> Pbw {
        Pbw {
            alg: self.clone(),
            c: vec![MPoly::zero(&self.ring); self.group.order()],
        }
    }

    pub fn one(self: &Arc<Self>) -> Pbw {
        self.poly(MPoly::one(&self.ring))
    }

    /// The element f·1 for f ∈ C[C] ⊗ C[V] ⊗ C[V*].
    pub fn poly(self: &Arc<Self>, f: MPoly) -> Pbw {
        let mut z = self.zero();
        z.c[0] = f;
        z
    }

    pub fn group_element(self: &Arc<Self>, w: usize) -> Pbw {
        let mut z = self.zero();
        z.c[w] = MPoly::one(&self.ring);
        z
    }

    pub fn from_coeffs(self: &Arc<Self>, c: Vec<MPoly>) -> Pbw {
        assert_eq!(c.len(), self.group.order());
        Pbw {
            alg: self.clone(),
            c,
        }
    }

    /// eu = Σ_j x_j y_j + Σ_s ε(s) C_s s.
    pub fn euler(self: &Arc<Self>) -> Pbw {
        let mut z = self.zero();
        let mut f = MPoly::zero(&self.ring);
        for j in 0..self.n {
            f = f.add(&self.x(j).mul(&self.y(j)));
        }
        z.c[0] = f;
        for rs in &self.refl {
            let t = self.c(rs.class).scale(&rs.eps);
            z.c[rs.element] = z.c[rs.element].add(&t);
        }
        z
    }

    /// Moves a polynomial from a ring sharing the C, x, y prefix into this one.
    pub fn import(&self, f: &MPoly) -> MPoly {
        let map: Vec<usize> = (0..f.ring().nvars()).collect();
        f.rename(&self.ring, &map)
    }
}

/// Element of H (or H_t) in PBW normal form.
#[derive(Clone)]
pub struct Pbw {
    alg: Arc<Algebra>,
    c: Vec<MPoly>,
}

impl PartialEq for Pbw {
    fn eq(&self, o: &Pbw) -> bool {
        self.c == o.c
    }
}

impl Eq for Pbw {}

impl Pbw {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.c
    }

    pub fn coeff(&self, w: usize) -> &MPoly {
        &self.c[w]
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &MPoly)> {
        self.c.iter().enumerate().filter(|(_, h)| !h.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|h| h.is_zero())
    }

    /// Coefficient of the identity.
    pub fn trunc(&self) -> &MPoly {
        &self.c[0]
    }

    pub fn add(&self, o: &Pbw) -> Pbw {
        Pbw {
            alg: self.alg.clone(),
            c: self.c.iter().zip(&o.c).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Pbw) -> Pbw {
        Pbw {
            alg: self.alg.clone(),
            c: self.c.iter().zip(&o.c).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Pbw {
        Pbw {
            alg: self.alg.clone(),
            c: self.c.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, k: &Cyclo) -> Pbw {
        Pbw {
            alg: self.alg.clone(),
            c: self.c.iter().map(|a| a.scale(k)).collect(),
        }
    }

    /// Left multiplication by a polynomial free of y-variables (commutes into coefficients).
    pub fn mul_poly_left(&self, p: &MPoly) -> Pbw {
        let alg = &self.alg;
        debug_assert!(p.terms().iter().all(|(m, _)| m.0 & alg.y_mask == 0));
        Pbw {
            alg: alg.clone(),
            c: self.c.iter().map(|a| a.mul(p)).collect(),
        }
    }

    /// Left multiplication by Σ v_i y_i.
    pub fn left_mul_y(&self, v: &[Cyclo]) -> Pbw {
        Pbw {
            alg: self.alg.clone(),
            c: self.alg.left_y(v, &self.c),
        }
    }

    /// Left multiplication by the group element u.
    pub fn left_mul_group(&self, u: usize) -> Pbw {
        let alg = &self.alg;
        let mut c = vec![MPoly::zero(&alg.ring); alg.group.order()];
        for (v, h) in self.support() {
            c[alg.group.mul(u, v)] = alg.act(u, h);
        }
        Pbw { alg: alg.clone(), c }
    }

    pub fn mul(&self, o: &Pbw) -> Pbw {
        let alg = &self.alg;
        let order = alg.group.order();
        let mut out = vec![MPoly::zero(&alg.ring); order];
        for (u, p) in self.support() {
            let ub = o.left_mul_group(u);
            // p = Σ_β P_β(C, x)·y^β
            let parts = p.split_by(&(0..alg.n).map(|i| alg.y_var(i)).collect::<Vec<_>>());
            let mut memo: BTreeMap<Mono, Vec<MPoly>> = BTreeMap::new();
            memo.insert(Mono::ONE, ub.c);
            for (beta, pb) in parts {
                let e = y_power(alg, &mut memo, beta);
                for (w, h) in e.iter().enumerate() {
                    if !h.is_zero() {
                        out[w] = out[w].add(&h.mul(&pb));
                    }
                }
            }
        }
        Pbw {
            alg: alg.clone(),
            c: out,
        }
    }

    pub fn commutator(&self, o: &Pbw) -> Pbw {
        self.mul(o).sub(&o.mul(self))
    }

    /// Commutes with all x_i, y_i and the group generators.
    pub fn is_central(&self) -> bool {
        let alg = &self.alg;
        for i in 0..alg.n {
            let x = alg.poly(alg.x(i));
            let y = alg.poly(alg.y(i));
            if !self.commutator(&x).is_zero() || !self.commutator(&y).is_zero() {
                return false;
            }
        }
        for k in 0..alg.group.spec.generators.len() {
            let g = alg.group.index_of(&alg.group.spec.generators[k]).unwrap();
            let ge = alg.group_element(g);
            if !self.commutator(&ge).is_zero() {
                return false;
            }
        }
        true
    }

    /// Bi-degree if bi-homogeneous (zero has none).
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut d = None;
        for (_, h) in self.support() {
            let b = h.bidegree()?;
            if d.is_some() && d != Some(b) {
                return None;
            }
            d = Some(b);
        }
        d
    }

    /// Z-degree: first minus second bi-degree component.
    pub fn z_degree(&self) -> Option<i64> {
        self.bidegree().map(|(a, b)| a as i64 - b as i64)
    }

    /// Substitutes values (or polynomials) for the parameter variables.
    pub fn specialize(&self, values: &[Option<MPoly>]) -> Result<Pbw> {
        let alg = &self.alg;
        if values.len() != alg.r {
            return Err(Error::Parameter(format!(
                "expected {} parameter values, got {}",
                alg.r,
                values.len()
            )));
        }
        for v in values.iter().flatten() {
            let uses_xy = (alg.r..alg.ring.nvars()).any(|i| v.uses_var(i));
            if uses_xy {
                return Err(Error::Parameter("substitution touches x/y variables".into()));
            }
        }
        let mut images: Vec<Option<MPoly>> = vec![None; alg.ring.nvars()];
        for (i, v) in values.iter().enumerate() {
            images[i] = v.clone();
        }
        Ok(Pbw {
            alg: alg.clone(),
            c: self.c.iter().map(|h| h.substitute(&alg.ring, &images)).collect(),
        })
    }

    /// Specialization at a point c ∈ C.
    pub fn at_point(&self, c: &[Cyclo]) -> Result<Pbw> {
        let ring = self.alg.ring.clone();
        self.specialize(
            &c.iter()
                .map(|v| Some(MPoly::constant(&ring, v.clone())))
                .collect::<Vec<_>>(),
        )
    }

    /// Reduction modulo the parameter ideal C₀.
    pub fn mod_c0(&self) -> Pbw {
        let zeros = vec![Cyclo::zero(); self.alg.r];
        self.at_point(&zeros).unwrap()
    }

    /// The same coefficients viewed in another algebra over the same group
    /// (e.g. lifting from H to H_t or back, dropping t).
    pub fn transport(&self, target: &Arc<Algebra>) -> Pbw {
        if self.alg.with_t && !target.with_t {
            return self.t_coefficient(0, target);
        }
        Pbw {
            alg: target.clone(),
            c: self.c.iter().map(|h| target.import(h)).collect(),
        }
    }

    /// Coefficient of t^k (as an element of the algebra without t).
    pub fn t_coefficient(&self, k: u32, target: &Arc<Algebra>) -> Pbw {
        let src = &self.alg;
        let t = src.t_var().expect("algebra has no t");
        let c = self
            .c
            .iter()
            .map(|h| {
                let terms: Vec<(Mono, Cyclo)> = h
                    .terms()
                    .iter()
                    .filter(|(m, _)| m.exp(t) == k)
                    .map(|(m, c)| (m.with(t, 0), c.clone()))
                    .collect();
                MPoly::from_terms(&src.ring, terms).drop_last_var(&target.ring)
            })
            .collect();
        Pbw {
            alg: target.clone(),
            c,
        }
    }

    /// Serializes as {element index: polynomial string} (nonzero entries).
    pub fn to_map(&self) -> BTreeMap<usize, String> {
        self.support().map(|(w, h)| (w, h.to_string())).collect()
    }

    pub fn from_map(alg: &Arc<Algebra>, m: &BTreeMap<usize, String>) -> Result<Pbw> {
        let mut z = alg.zero();
        for (&w, s) in m {
            if w >= alg.group.order() {
                return Err(Error::Domain(format!("element index {w} out of range")));
            }
            z.c[w] = MPoly::parse(&alg.ring, s)?;
        }
        Ok(z)
    }
}

trait DropLast {
    fn drop_last_var(&self, target: &Arc<Ring>) -> MPoly;
}

impl DropLast for MPoly {
    /// Moves into a ring with one variable fewer (the last one must be unused).
    fn drop_last_var(&self, target: &Arc<Ring>) -> MPoly {
        let n = target.nvars();
        let map: Vec<usize> = (0..self.ring().nvars()).map(|i| i.min(n.saturating_sub(1))).collect();
        debug_assert!(self.ring().nvars() == n || !self.uses_var(n));
        self.rename(target, &map)
    }
}

fn y_power(alg: &Algebra, memo: &mut BTreeMap<Mono, Vec<MPoly>>, beta: Mono) -> Vec<MPoly> {
    if let Some(e) = memo.get(&beta) {
        return e.clone();
    }
    // y^β = y_i · y^(β - e_i), with i the last variable present
    let i = (0..alg.n).rev().find(|&i| beta.exp(alg.y_var(i)) > 0).unwrap();
    let rest = Mono(beta.0 - Mono::var(alg.y_var(i)).0);
    let prev = y_power(alg, memo, rest);
    let e = alg.left_y(&alg.unit(i), &prev);
    memo.insert(beta, e.clone());
    e
}

impl fmt::Display for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, h) in self.support() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if w == 0 {
                write!(f, "({h})")?;
            } else {
                write!(f, "({h})*w{w}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Trunc⁻¹ of a W-invariant bi-homogeneous polynomial.
pub fn trunc_inverse(alg: &Arc<Algebra>, f: &MPoly, y_reg: &[Cyclo]) -> Result<Pbw> {
    let g = &alg.group;
    if f.is_zero() {
        return Ok(alg.zero());
    }
    let (d, e) = f
        .bidegree()
        .ok_or_else(|| Error::NotInvariant("input is not bi-homogeneous".into()))?;
    for k in 0..g.spec.generators.len() {
        let w = g.index_of(&g.spec.generators[k]).unwrap();
        if alg.act(w, f) != *f {
            return Err(Error::NotInvariant(format!("not fixed by generator {k}")));
        }
    }
    if !g.is_regular(y_reg) {
        return Err(Error::Domain("y_reg is not regular".into()));
    }
    let order = g.order();
    let delta = d.min(e);
    // y_reg - w(y_reg) as linear forms in y
    let divisors: Vec<MPoly> = (0..order)
        .map(|w| {
            let wy = g.element(w).mul_vec(y_reg);
            MPoly::from_terms(
                &alg.ring,
                (0..alg.n)
                    .map(|i| (Mono::var(alg.y_var(i)), &y_reg[i] - &wy[i]))
                    .collect(),
            )
        })
        .collect();
    let coefs: Vec<Cyclo> = alg
        .refl
        .iter()
        .map(|rs| -(&rs.eps * &pair(&rs.root, y_reg)))
        .collect();
    let mut z = vec![MPoly::zero(&alg.ring); order];
    z[0] = f.clone();
    for _ in 0..delta {
        let mut rhs = vec![MPoly::zero(&alg.ring); order];
        for (s, rs) in alg.refl.iter().enumerate() {
            if coefs[s].is_zero() {
                continue;
            }
            let cm = Mono::var(rs.class);
            for u in 0..order {
                if z[u].is_zero() {
                    continue;
                }
                let t = alg.t_op(s, &z[u]);
                if t.is_zero() {
                    continue;
                }
                let w = g.mul(rs.element, u);
                if w == 0 {
                    continue;
                }
                rhs[w] = rhs[w].add(&t.mul_term(cm, &coefs[s]));
            }
        }
        let mut next = vec![MPoly::zero(&alg.ring); order];
        next[0] = f.clone();
        for w in 1..order {
            if !rhs[w].is_zero() {
                next[w] = rhs[w].exact_div(&divisors[w])?;
            }
        }
        if next == z {
            break;
        }
        z = next;
    }
    Ok(alg.from_coeffs(z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(name: &str, t: bool) -> Arc<Algebra> {
        Algebra::new(ReflectionGroup::builtin(name).unwrap(), t)
    }

    #[test]
    fn mu2_commutator() {
        let a = alg("mu2", false);
        let x = a.poly(a.x(0));
        let y = a.poly(a.y(0));
        let br = y.commutator(&x);
        // [y, x] = -2 C s
        let mut want = a.zero();
        want.c[1] = a.c(0).scale(&Cyclo::from_i64(-2));
        assert_eq!(br, want);
    }

    #[test]
    fn group_straightening() {
        let a = alg("B2", false);
        for w in 0..8 {
            let gw = a.group_element(w);
            for i in 0..2 {
                let x = a.poly(a.x(i));
                let lhs = gw.mul(&x);
                let rhs = a.poly(a.act(w, &a.x(i))).mul(&gw);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn euler_central() {
        for name in ["mu2", "B2", "G4"] {
            let a = alg(name, false);
            let eu = a.euler();
            assert!(eu.is_central(), "{name}");
            assert!(!a.poly(a.x(0)).is_central());
        }
    }

    #[test]
    fn euler_is_trunc_inverse() {
        let a = alg("B2", false);
        let f = a.x(0).mul(&a.y(0)).add(&a.x(1).mul(&a.y(1)));
        let y = a.group.regular_vector(0);
        let z = trunc_inverse(&a, &f, &y).unwrap();
        assert_eq!(z, a.euler());
        assert_eq!(z.trunc(), &f);
    }

    #[test]
    fn associativity_b2() {
        let a = alg("B2", true);
        let gens = [
            a.poly(a.x(0)),
            a.poly(a.y(1)),
            a.group_element(3),
            a.poly(a.x(1).mul(&a.y(0))),
            a.euler(),
        ];
        for p in &gens {
            for q in &gens {
                for r in &gens {
                    assert_eq!(p.mul(q).mul(r), p.mul(&q.mul(r)));
                }
            }
        }
    }

    #[test]
    fn mu2_specialized() {
        let a = alg("mu2", false);
        let br = a.poly(a.y(0)).commutator(&a.poly(a.x(0)));
        let sp = br.at_point(&[Cyclo::one()]).unwrap();
        let mut want = a.zero();
        want.c[1] = MPoly::constant(a.ring(), Cyclo::from_i64(-2));
        assert_eq!(sp, want);
    }
}
