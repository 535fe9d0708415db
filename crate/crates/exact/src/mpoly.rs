//! Sparse multivariate polynomials over [`Cyclo`] with bi-degree tagged variables.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::cyclo::Cyclo;
use crate::error::ExactError;

pub const MAX_VARS: usize = 16;
const HIGH: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

/// Exponent vector packed one byte per variable; variable 0 occupies the
/// most significant byte, so integer order is lexicographic order.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(pub u128);

impl Mono {
    pub const ONE: Mono = Mono(0);

    #[inline]
    fn shift(i: usize) -> u32 {
        8 * (15 - i as u32)
    }

    #[inline]
    pub fn exp(self, i: usize) -> u32 {
        ((self.0 >> Mono::shift(i)) & 0xff) as u32
    }

    pub fn var(i: usize) -> Mono {
        Mono(1u128 << Mono::shift(i))
    }

    pub fn from_exps(e: &[u32]) -> Mono {
        assert!(e.len() <= MAX_VARS);
        let mut m = 0u128;
        for (i, &x) in e.iter().enumerate() {
            assert!(x < 128, "exponent {x} too large");
            m |= (x as u128) << Mono::shift(i);
        }
        Mono(m)
    }

    pub fn exps(self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.exp(i)).collect()
    }

    pub fn with(self, i: usize, e: u32) -> Mono {
        assert!(e < 128);
        let s = Mono::shift(i);
        Mono((self.0 & !(0xffu128 << s)) | ((e as u128) << s))
    }

    #[inline]
    pub fn mul(self, o: Mono) -> Mono {
        let r = self.0 + o.0;
        assert!(r & HIGH == 0, "exponent overflow");
        Mono(r)
    }

    /// Whether `self` divides `o`.
    #[inline]
    pub fn divides(self, o: Mono) -> bool {
        ((o.0 | HIGH) - self.0) & HIGH == HIGH
    }

    /// `o / self`, assuming divisibility.
    #[inline]
    pub fn div_of(self, o: Mono) -> Mono {
        Mono(o.0 - self.0)
    }

    pub fn lcm(self, o: Mono) -> Mono {
        let mut r = 0u128;
        for i in 0..MAX_VARS {
            r |= (self.exp(i).max(o.exp(i)) as u128) << Mono::shift(i);
        }
        Mono(r)
    }

    pub fn gcd(self, o: Mono) -> Mono {
        let mut r = 0u128;
        for i in 0..MAX_VARS {
            r |= (self.exp(i).min(o.exp(i)) as u128) << Mono::shift(i);
        }
        Mono(r)
    }

    pub fn is_coprime(self, o: Mono) -> bool {
        self.gcd(o) == Mono::ONE
    }

    pub fn degree(self) -> u32 {
        self.0.to_le_bytes().iter().map(|&b| b as u32).sum()
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps(MAX_VARS))
    }
}

/// Ordered variable names with (N×N) bi-degree tags.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    tags: Vec<(u32, u32)>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<(S, (u32, u32))>) -> Result<Arc<Ring>, ExactError> {
        if vars.len() > MAX_VARS {
            return Err(ExactError::TooManyVariables(vars.len()));
        }
        let (names, tags) = vars.into_iter().map(|(s, t)| (s.into(), t)).unzip();
        Ok(Arc::new(Ring { names, tags }))
    }

    /// Ring with all variables tagged (1,0).
    pub fn plain(names: &[&str]) -> Arc<Ring> {
        Ring::new(names.iter().map(|s| (*s, (1, 0))).collect()).expect("ring")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn tag(&self, i: usize) -> (u32, u32) {
        self.tags[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn mono_bidegree(&self, m: Mono) -> (u32, u32) {
        let mut d = (0, 0);
        for (i, t) in self.tags.iter().enumerate() {
            let e = m.exp(i);
            d.0 += e * t.0;
            d.1 += e * t.1;
        }
        d
    }

    pub fn mono_weight(&self, m: Mono) -> u32 {
        let (a, b) = self.mono_bidegree(m);
        a + b
    }
}

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Sparse polynomial; terms sorted by ascending monomial, no zero coefficients.
#[derive(Clone)]
pub struct MPoly {
    ring: Arc<Ring>,
    terms: Vec<(Mono, Cyclo)>,
}

impl PartialEq for MPoly {
    fn eq(&self, o: &MPoly) -> bool {
        same_ring(&self.ring, &o.ring) && self.terms == o.terms
    }
}

impl Eq for MPoly {}

impl std::hash::Hash for MPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl MPoly {
    pub fn zero(ring: &Arc<Ring>) -> MPoly {
        MPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Cyclo) -> MPoly {
        MPoly::monomial(ring, Mono::ONE, c)
    }

    pub fn one(ring: &Arc<Ring>) -> MPoly {
        MPoly::constant(ring, Cyclo::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> MPoly {
        assert!(i < ring.nvars());
        MPoly::monomial(ring, Mono::var(i), Cyclo::one())
    }

    pub fn var_by_name(ring: &Arc<Ring>, name: &str) -> MPoly {
        MPoly::var(ring, ring.index(name).unwrap_or_else(|| panic!("no variable {name}")))
    }

    pub fn monomial(ring: &Arc<Ring>, m: Mono, c: Cyclo) -> MPoly {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MPoly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from unsorted terms, combining duplicates.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(Mono, Cyclo)>) -> MPoly {
        let mut acc: FxHashMap<Mono, Cyclo> = FxHashMap::default();
        for (m, c) in terms {
            add_into(&mut acc, m, &c);
        }
        MPoly::from_map(ring, acc)
    }

    pub fn from_map(ring: &Arc<Ring>, acc: FxHashMap<Mono, Cyclo>) -> MPoly {
        let mut terms: Vec<(Mono, Cyclo)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| t.0);
        MPoly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusted constructor: terms already sorted, distinct and nonzero.
    pub fn from_sorted(ring: &Arc<Ring>, terms: Vec<(Mono, Cyclo)>) -> MPoly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        MPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Mono, Cyclo)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Cyclo)> {
        self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mono::ONE)
    }

    pub fn constant_term(&self) -> Cyclo {
        self.coeff(Mono::ONE)
    }

    pub fn coeff(&self, m: Mono) -> Cyclo {
        match self.terms.binary_search_by_key(&m, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Cyclo::zero(),
        }
    }

    /// Largest term in the lexicographic storage order.
    pub fn lead(&self) -> Option<&(Mono, Cyclo)> {
        self.terms.last()
    }

    pub fn check_ring(&self, o: &MPoly) -> Result<(), ExactError> {
        if same_ring(&self.ring, &o.ring) {
            Ok(())
        } else {
            Err(ExactError::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring.names, o.ring.names
            )))
        }
    }

    fn merge(&self, o: &MPoly, neg: bool) -> MPoly {
        assert!(same_ring(&self.ring, &o.ring), "ring mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &o.terms);
        while i < a.len() && j < b.len() {
            if a[i].0 < b[j].0 {
                out.push(a[i].clone());
                i += 1;
            } else if a[i].0 > b[j].0 {
                out.push((b[j].0, if neg { -&b[j].1 } else { b[j].1.clone() }));
                j += 1;
            } else {
                let c = if neg { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            out.push((t.0, if neg { -&t.1 } else { t.1.clone() }));
        }
        MPoly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.merge(o, true)
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclo) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        if c.is_one() {
            return self.clone();
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: Mono, c: &Cyclo) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect(),
        }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        assert!(same_ring(&self.ring, &o.ring), "ring mismatch");
        if self.is_zero() || o.is_zero() {
            return MPoly::zero(&self.ring);
        }
        let (small, big) = if self.nterms() <= o.nterms() { (self, o) } else { (o, self) };
        if small.nterms() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(*m, c);
        }
        let mut acc: FxHashMap<Mono, Cyclo> = FxHashMap::default();
        acc.reserve(big.nterms() * small.nterms());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                let p = c1 * c2;
                add_into(&mut acc, m1.mul(*m2), &p);
            }
        }
        MPoly::from_map(&self.ring, acc)
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Division with remainder by a single divisor in lexicographic order.
    pub fn div_rem(&self, b: &MPoly) -> (MPoly, MPoly) {
        assert!(!b.is_zero(), "division by zero polynomial");
        assert!(same_ring(&self.ring, &b.ring), "ring mismatch");
        let (lm, lc) = b.lead().unwrap().clone();
        let lc_inv = lc.inv();
        let tail: Vec<(Mono, Cyclo)> = b.terms[..b.terms.len() - 1].to_vec();
        let mut work: BTreeMap<Mono, Cyclo> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        let mut rem = Vec::new();
        while let Some((m, c)) = work.pop_last() {
            if lm.divides(m) {
                let qm = lm.div_of(m);
                let qc = &c * &lc_inv;
                for (tm, tc) in &tail {
                    let key = tm.mul(qm);
                    let v = &qc * tc;
                    match work.entry(key) {
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() -= &v;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(-v);
                        }
                    }
                }
                quot.push((qm, qc));
            } else {
                rem.push((m, c));
            }
        }
        quot.reverse();
        rem.reverse();
        (
            MPoly::from_sorted(&self.ring, quot),
            MPoly::from_sorted(&self.ring, rem),
        )
    }

    /// Exact quotient `self / b`; fails with `NotDivisible` on a nonzero remainder.
    pub fn exact_div(&self, b: &MPoly) -> Result<MPoly, ExactError> {
        self.check_ring(b)?;
        if b.is_zero() {
            return Err(ExactError::NotDivisible);
        }
        let (q, r) = self.div_rem(b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::NotDivisible)
        }
    }

    /// Bi-degree if the polynomial is bi-homogeneous (zero has none).
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.iter().map(|(m, _)| self.ring.mono_bidegree(*m));
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.is_zero() || self.bidegree().is_some()
    }

    /// Splits into bi-homogeneous components.
    pub fn bihomogeneous_parts(&self) -> BTreeMap<(u32, u32), MPoly> {
        let mut out: BTreeMap<(u32, u32), Vec<(Mono, Cyclo)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(self.ring.mono_bidegree(*m))
                .or_default()
                .push((*m, c.clone()));
        }
        out.into_iter()
            .map(|(d, t)| (d, MPoly::from_sorted(&self.ring, t)))
            .collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    pub fn derivative(&self, i: usize) -> MPoly {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e > 0 {
                terms.push((m.with(i, e - 1), c * &Cyclo::from_i64(e as i64)));
            }
        }
        MPoly::from_terms(&self.ring, terms)
    }

    /// Substitutes `images[i]` (when present) for variable i; all images in `target`.
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Option<MPoly>]) -> MPoly {
        let n = self.ring.nvars();
        assert_eq!(images.len(), n);
        // variables kept must exist in target with the same index
        let mut powers: Vec<Vec<MPoly>> = vec![Vec::new(); n];
        let mut acc: FxHashMap<Mono, Cyclo> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut keep = Mono::ONE;
            let mut factor: Option<MPoly> = None;
            for i in 0..n {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                match &images[i] {
                    None => keep = keep.mul(Mono(Mono::var(i).0 * e as u128)),
                    Some(img) => {
                        let pw = &mut powers[i];
                        if pw.is_empty() {
                            pw.push(MPoly::one(target));
                        }
                        while pw.len() <= e {
                            let next = pw.last().unwrap().mul(img);
                            pw.push(next);
                        }
                        factor = Some(match factor {
                            None => pw[e].clone(),
                            Some(f) => f.mul(&pw[e]),
                        });
                    }
                }
            }
            match factor {
                None => add_into(&mut acc, keep, c),
                Some(f) => {
                    for (fm, fc) in f.terms() {
                        add_into(&mut acc, fm.mul(keep), &(fc * c));
                    }
                }
            }
        }
        MPoly::from_map(target, acc)
    }

    /// Evaluates the listed variables at scalars, keeping the ring.
    pub fn eval_partial(&self, vals: &[(usize, Cyclo)]) -> MPoly {
        let mut images = vec![None; self.ring.nvars()];
        for (i, v) in vals {
            images[*i] = Some(MPoly::constant(&self.ring, v.clone()));
        }
        self.substitute(&self.ring.clone(), &images)
    }

    /// Evaluates all variables; `vals.len()` must equal the number of variables.
    pub fn eval(&self, vals: &[Cyclo]) -> Cyclo {
        let mut acc = Cyclo::zero();
        let mut cache: Vec<Vec<Cyclo>> = vec![vec![Cyclo::one()]; vals.len()];
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, v) in vals.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e {
                    let nx = cache[i].last().unwrap() * v;
                    cache[i].push(nx);
                }
                t = &t * &cache[i][e];
            }
            acc += &t;
        }
        acc
    }

    /// Moves into another ring; `varmap[i]` is the target index of variable i.
    pub fn rename(&self, target: &Arc<Ring>, varmap: &[usize]) -> MPoly {
        let n = self.ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut nm = Mono::ONE;
                for i in 0..n {
                    let e = m.exp(i);
                    if e > 0 {
                        nm = nm.mul(Mono::ONE.with(varmap[i], e));
                    }
                }
                (nm, c.clone())
            })
            .collect();
        MPoly::from_terms(target, terms)
    }

    /// Groups terms by their exponents on `vars`: returns (monomial in vars, cofactor).
    pub fn split_by(&self, vars: &[usize]) -> Vec<(Mono, MPoly)> {
        let mut mask = 0u128;
        for &v in vars {
            mask |= 0xffu128 << Mono::shift(v);
        }
        let mut groups: BTreeMap<Mono, Vec<(Mono, Cyclo)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = Mono(m.0 & mask);
            groups
                .entry(key)
                .or_default()
                .push((Mono(m.0 & !mask), c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, t)| (k, MPoly::from_terms(&self.ring, t)))
            .collect()
    }

    pub fn map_coeffs<F: Fn(&Cyclo) -> Cyclo>(&self, f: F) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MPoly::from_sorted(&self.ring, terms)
    }

    /// Multiplies by the lcm of denominators and divides by the content, making
    /// the leading coefficient positive. Only valid for rational coefficients.
    pub fn primitive_rational(&self) -> Option<MPoly> {
        use malachite_base::num::arithmetic::traits::{Gcd, Lcm};
        use malachite_base::num::basic::traits::{One, Zero};
        use malachite_nz::natural::Natural;
        use malachite_q::Rational;
        let mut den = Natural::ONE;
        let mut num = Natural::ZERO;
        for (_, c) in &self.terms {
            let r = c.to_rational()?;
            den = den.lcm(r.denominator_ref());
            num = num.gcd(r.numerator_ref());
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let mut f = Rational::from(den) / Rational::from(num);
        if *self.terms.last().unwrap().1.to_rational().unwrap() < 0u32 {
            f = -f;
        }
        Some(self.scale(&Cyclo::from(f)))
    }

    pub fn monic(&self) -> MPoly {
        match self.lead() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }
}

pub fn add_into(acc: &mut FxHashMap<Mono, Cyclo>, m: Mono, c: &Cyclo) {
    match acc.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
    }
}

impl fmt::Display for MPoly {
    /// Canonical string: terms from largest to smallest monomial, `c*x^e*y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut vars = Vec::new();
            for i in 0..self.ring.nvars() {
                let e = m.exp(i);
                if e == 1 {
                    vars.push(self.ring.names[i].clone());
                } else if e > 1 {
                    vars.push(format!("{}^{}", self.ring.names[i], e));
                }
            }
            let (neg, mag) = match c.to_rational() {
                Some(r) if *r < 0u32 => (true, Cyclo::from(-r.clone())),
                _ => (false, c.clone()),
            };
            if neg {
                write!(f, "{}", if first { "-" } else { " - " })?;
            } else if !first {
                write!(f, " + ")?;
            }
            first = false;
            if vars.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Arc<Ring> {
        Ring::new(vec![("x", (1, 0)), ("y", (0, 1)), ("C1", (1, 1))]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = xy();
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p, x.mul(&x).sub(&y.mul(&y)));
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert_eq!(p.exact_div(&x.sub(&y)).unwrap(), x.add(&y));
    }

    #[test]
    fn bidegree_of_product() {
        let r = xy();
        let p = MPoly::var(&r, 0).mul(&MPoly::var(&r, 1)).mul(&MPoly::var(&r, 2));
        assert_eq!(p.bidegree(), Some((2, 2)));
    }

    #[test]
    fn not_divisible() {
        let r = xy();
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let a = x.mul(&x).add(&MPoly::one(&r));
        assert_eq!(a.exact_div(&x.sub(&y)), Err(ExactError::NotDivisible));
    }

    #[test]
    fn mono_divides() {
        let a = Mono::from_exps(&[1, 2, 0]);
        let b = Mono::from_exps(&[2, 2, 1]);
        assert!(a.divides(b));
        assert!(!b.divides(a));
        assert_eq!(a.div_of(b), Mono::from_exps(&[1, 0, 1]));
        assert_eq!(a.lcm(Mono::from_exps(&[0, 3, 1])), Mono::from_exps(&[1, 3, 1]));
    }

    #[test]
    fn substitute_and_eval() {
        let r = xy();
        let x = MPoly::var(&r, 0);
        let y = MPoly::var(&r, 1);
        let p = x.mul(&x).add(&y);
        let q = p.substitute(&r, &[Some(y.clone()), None, None]);
        assert_eq!(q, y.mul(&y).add(&y));
        let v = p.eval(&[Cyclo::from_i64(3), Cyclo::from_i64(2), Cyclo::zero()]);
        assert_eq!(v, Cyclo::from_i64(11));
    }
}
