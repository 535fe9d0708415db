//! Buchberger's algorithm with the Gebauer–Möller criteria.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cyclo::Cyclo;
use crate::error::ExactError;
use crate::mpoly::{MPoly, Mono, Ring};

/// Monomial orders. Degrees are weighted by the ring's tags (a+b, at least 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Variables `0..first` form an eliminated block compared first (grevlex),
    /// ties broken by grevlex on the remaining variables.
    Block { first: usize },
}

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Key(u32, u128, u32, u128);

struct Orderer {
    order: MonomialOrder,
    weights: Vec<u32>,
}

impl Orderer {
    fn new(ring: &Ring, order: MonomialOrder) -> Orderer {
        let weights = (0..ring.nvars())
            .map(|i| {
                let (a, b) = ring.tag(i);
                (a + b).max(1)
            })
            .collect();
        Orderer { order, weights }
    }

    fn grevlex_part(&self, m: Mono, lo: usize, hi: usize) -> (u32, u128) {
        let mut deg = 0;
        let mut rev = 0u128;
        for i in (lo..hi).rev() {
            let e = m.exp(i);
            deg += e * self.weights[i];
            rev = (rev << 8) | (127 - e) as u128;
        }
        // pad so that vectors of different length compare consistently
        rev <<= 8 * (16 - (hi - lo)) as u32;
        (deg, rev)
    }

    fn key(&self, m: Mono) -> Key {
        let n = self.weights.len();
        match self.order {
            MonomialOrder::Lex => Key(0, m.0, 0, 0),
            MonomialOrder::Grevlex => {
                let (d, r) = self.grevlex_part(m, 0, n);
                Key(d, r, 0, 0)
            }
            MonomialOrder::Block { first } => {
                let (d1, r1) = self.grevlex_part(m, 0, first);
                let (d2, r2) = self.grevlex_part(m, first, n);
                Key(d1, r1, d2, r2)
            }
        }
    }

    fn degree(&self, m: Mono) -> u32 {
        (0..self.weights.len()).map(|i| m.exp(i) * self.weights[i]).sum()
    }
}

/// Polynomial with terms sorted by descending order key.
#[derive(Clone)]
struct GPoly {
    terms: Vec<(Key, Mono, Cyclo)>,
}

impl GPoly {
    fn from(p: &MPoly, o: &Orderer) -> GPoly {
        let mut terms: Vec<(Key, Mono, Cyclo)> = p
            .terms()
            .iter()
            .map(|(m, c)| (o.key(*m), *m, c.clone()))
            .collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        GPoly { terms }
    }

    fn lm(&self) -> Mono {
        self.terms[0].1
    }

    fn monic(mut self) -> GPoly {
        if let Some(first) = self.terms.first() {
            if !first.2.is_one() {
                let inv = first.2.inv();
                for t in self.terms.iter_mut() {
                    t.2 = &t.2 * &inv;
                }
            }
        }
        self
    }

    fn to_mpoly(&self, ring: &Arc<Ring>) -> MPoly {
        MPoly::from_terms(ring, self.terms.iter().map(|t| (t.1, t.2.clone())).collect())
    }
}

fn sub_multiple(
    work: &mut BTreeMap<Key, (Mono, Cyclo)>,
    g: &GPoly,
    m: Mono,
    c: &Cyclo,
    o: &Orderer,
    skip_lead: bool,
) {
    for t in g.terms.iter().skip(skip_lead as usize) {
        let nm = t.1.mul(m);
        let v = &t.2 * c;
        let k = o.key(nm);
        match work.entry(k) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().1 -= &v;
                if e.get().1.is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert((nm, -v));
            }
        }
    }
}

/// Reduces `f`; with `full` the tail is reduced as well.
fn reduce(f: &GPoly, basis: &[&GPoly], o: &Orderer, full: bool) -> GPoly {
    let mut work: BTreeMap<Key, (Mono, Cyclo)> =
        f.terms.iter().map(|t| (t.0, (t.1, t.2.clone()))).collect();
    let mut out = Vec::new();
    while let Some((k, (m, c))) = work.pop_last() {
        if let Some(g) = basis.iter().find(|g| g.lm().divides(m)) {
            // basis elements are monic
            let q = g.lm().div_of(m);
            sub_multiple(&mut work, g, q, &c, o, true);
        } else {
            out.push((k, m, c));
            if !full {
                out.extend(work.into_iter().rev().map(|(k, (m, c))| (k, m, c)));
                break;
            }
        }
    }
    GPoly { terms: out }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    key: Key,
}

fn spoly(a: &GPoly, b: &GPoly, lcm: Mono, o: &Orderer) -> GPoly {
    let mut work: BTreeMap<Key, (Mono, Cyclo)> = BTreeMap::new();
    let ma = a.lm().div_of(lcm);
    let mb = b.lm().div_of(lcm);
    for t in a.terms.iter().skip(1) {
        let nm = t.1.mul(ma);
        work.insert(o.key(nm), (nm, t.2.clone()));
    }
    sub_multiple(&mut work, b, mb, &Cyclo::one(), o, true);
    GPoly {
        terms: work.into_iter().rev().map(|(k, (m, c))| (k, m, c)).collect(),
    }
}

/// Options bounding a Gröbner computation.
#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    /// Skip S-pairs whose weighted lcm degree exceeds this (degree-truncated basis).
    pub max_degree: Option<u32>,
    /// Abort after this many S-pair reductions.
    pub max_pairs: Option<usize>,
}

/// Reduced Gröbner basis of `gens` for `order`.
pub fn groebner(gens: &[MPoly], order: &MonomialOrder) -> Result<Vec<MPoly>, ExactError> {
    groebner_with(gens, order, &GbOptions::default())
}

pub fn groebner_with(
    gens: &[MPoly],
    order: &MonomialOrder,
    opts: &GbOptions,
) -> Result<Vec<MPoly>, ExactError> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    for g in gens {
        first.check_ring(g)?;
    }
    let o = Orderer::new(&ring, order.clone());
    let mut polys: Vec<GPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<GPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| GPoly::from(g, &o).monic())
        .collect();
    input.sort_by(|a, b| a.terms[0].0.cmp(&b.terms[0].0));
    let mut queue: std::collections::VecDeque<GPoly> = input.into();

    let mut processed = 0usize;
    loop {
        let h = if let Some(h) = queue.pop_front() {
            let basis: Vec<&GPoly> = active.iter().map(|&i| &polys[i]).collect();
            reduce(&h, &basis, &o, false)
        } else {
            // select the pair with smallest lcm
            let Some(pos) = pairs
                .iter()
                .enumerate()
                .min_by(|a, b| a.1.key.cmp(&b.1.key).then(a.0.cmp(&b.0)))
                .map(|x| x.0)
            else {
                break;
            };
            let p = pairs.swap_remove(pos);
            if let Some(md) = opts.max_degree {
                if o.degree(p.lcm) > md {
                    continue;
                }
            }
            processed += 1;
            if let Some(mp) = opts.max_pairs {
                if processed > mp {
                    return Err(ExactError::ResourceLimit(format!(
                        "more than {mp} S-pairs"
                    )));
                }
            }
            let s = spoly(&polys[p.i], &polys[p.j], p.lcm, &o);
            let basis: Vec<&GPoly> = active.iter().map(|&i| &polys[i]).collect();
            reduce(&s, &basis, &o, false)
        };
        if h.terms.is_empty() {
            continue;
        }
        let h = h.monic();
        if h.lm() == Mono::ONE {
            return Ok(vec![MPoly::one(&ring)]);
        }
        let hi = polys.len();
        polys.push(h);
        update(&mut pairs, &mut active, &polys, hi, &o);
    }

    // minimalize and interreduce
    let mut lms: Vec<usize> = active.clone();
    lms.sort_by(|&a, &b| polys[a].terms[0].0.cmp(&polys[b].terms[0].0));
    let mut minimal: Vec<usize> = Vec::new();
    for &i in &lms {
        if !minimal.iter().any(|&j| polys[j].lm().divides(polys[i].lm())) {
            minimal.push(i);
        }
    }
    let mut out = Vec::new();
    for (idx, &i) in minimal.iter().enumerate() {
        let others: Vec<&GPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, &j)| &polys[j])
            .collect();
        let lead = &polys[i].terms[0];
        let tail = GPoly {
            terms: polys[i].terms[1..].to_vec(),
        };
        let mut r = reduce(&tail, &others, &o, true);
        r.terms.insert(0, lead.clone());
        out.push(r.monic().to_mpoly(&ring));
    }
    Ok(out)
}

fn update(pairs: &mut Vec<Pair>, active: &mut Vec<usize>, polys: &[GPoly], h: usize, o: &Orderer) {
    let lh = polys[h].lm();
    let mut c: Vec<Pair> = active
        .iter()
        .map(|&g| {
            let l = polys[g].lm().lcm(lh);
            Pair {
                i: g,
                j: h,
                lcm: l,
                key: o.key(l),
            }
        })
        .collect();
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = c.pop() {
        let disjoint = polys[p.i].lm().is_coprime(lh);
        if disjoint
            || (!c.iter().any(|q| q.lcm.divides(p.lcm)) && !d.iter().any(|q| q.lcm.divides(p.lcm)))
        {
            d.push(p);
        }
    }
    let e: Vec<Pair> = d
        .into_iter()
        .filter(|p| !polys[p.i].lm().is_coprime(lh))
        .collect();
    pairs.retain(|p| {
        !lh.divides(p.lcm)
            || polys[p.i].lm().lcm(lh) == p.lcm
            || polys[p.j].lm().lcm(lh) == p.lcm
    });
    pairs.extend(e);
    active.retain(|&g| !lh.divides(polys[g].lm()));
    active.push(h);
}

/// Normal form of `f` with respect to a Gröbner basis.
pub fn normal_form(f: &MPoly, basis: &[MPoly], order: &MonomialOrder) -> MPoly {
    let o = Orderer::new(f.ring(), order.clone());
    let gb: Vec<GPoly> = basis.iter().map(|b| GPoly::from(b, &o).monic()).collect();
    let refs: Vec<&GPoly> = gb.iter().collect();
    reduce(&GPoly::from(f, &o), &refs, &o, true).to_mpoly(f.ring())
}

/// Leading monomial of `f` under `order`.
pub fn leading_monomial(f: &MPoly, order: &MonomialOrder) -> Option<Mono> {
    let o = Orderer::new(f.ring(), order.clone());
    f.terms().iter().map(|t| t.0).max_by(|a, b| o.key(*a).cmp(&o.key(*b)))
}

pub fn compare(ring: &Ring, order: &MonomialOrder, a: Mono, b: Mono) -> Ordering {
    let o = Orderer::new(ring, order.clone());
    o.key(a).cmp(&o.key(b))
}

/// Generators of the kernel of k[z] → k[x], z_i ↦ images[i], by elimination.
///
/// `zring` names the z variables; its tags should be the bi-degrees of the images.
pub fn algebra_map_kernel(images: &[MPoly], zring: &Arc<Ring>) -> Result<Vec<MPoly>, ExactError> {
    algebra_map_kernel_with(images, zring, &GbOptions::default())
}

pub fn algebra_map_kernel_with(
    images: &[MPoly],
    zring: &Arc<Ring>,
    opts: &GbOptions,
) -> Result<Vec<MPoly>, ExactError> {
    assert_eq!(images.len(), zring.nvars());
    let Some(first) = images.first() else {
        return Ok(Vec::new());
    };
    let src = first.ring().clone();
    let k = src.nvars();
    let mut vars: Vec<(String, (u32, u32))> =
        (0..k).map(|i| (src.name(i).to_string(), src.tag(i))).collect();
    for i in 0..zring.nvars() {
        vars.push((format!("__z{i}"), zring.tag(i)));
    }
    let big = Ring::new(vars)?;
    let xmap: Vec<usize> = (0..k).collect();
    let gens: Vec<MPoly> = images
        .iter()
        .enumerate()
        .map(|(i, f)| MPoly::var(&big, k + i).sub(&f.rename(&big, &xmap)))
        .collect();
    let gb = groebner_with(&gens, &MonomialOrder::Block { first: k }, opts)?;
    let mut back = vec![None; big.nvars()];
    for (i, slot) in back.iter_mut().enumerate().skip(k) {
        *slot = Some(MPoly::var(zring, i - k));
    }
    let mut out = Vec::new();
    for g in gb {
        if (0..k).any(|i| g.uses_var(i)) {
            continue;
        }
        out.push(g.substitute(zring, &back));
    }
    Ok(out)
}
