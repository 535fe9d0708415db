//! Univariate factorization over Q (Zassenhaus) and over Q(ζ_n) (Trager).

use malachite_base::num::arithmetic::traits::{
    DivExact, DivRem, FloorSqrt, Gcd, Lcm, Mod, Pow,
};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_base::num::logic::traits::BitAccess;
use malachite_base::num::logic::traits::SignificantBits;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use malachite_q::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclo::Cyclo;
use crate::upoly::UPoly;

type ZPoly = Vec<Integer>;
type FpPoly = Vec<u64>;

// ---------- arithmetic in F_p[t] ----------

fn fp_trim(mut f: FpPoly) -> FpPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn fp_inv(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i128) as u64
}

fn fp_sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn fp_mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    fp_trim(r)
}

fn fp_divrem(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.clone());
    }
    let inv = fp_inv(b[db], p);
    let mut rem = a.clone();
    let mut q = vec![0u64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db] * inv % p;
        q[i] = c;
        if c == 0 {
            continue;
        }
        for j in 0..=db {
            rem[i + j] = (rem[i + j] + p - c * b[j] % p) % p;
        }
    }
    rem.truncate(db);
    (fp_trim(q), fp_trim(rem))
}

fn fp_monic(f: &FpPoly, p: u64) -> FpPoly {
    let inv = fp_inv(*f.last().unwrap(), p);
    f.iter().map(|&x| x * inv % p).collect()
}

fn fp_gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        fp_monic(&a, p)
    }
}

fn fp_derivative(f: &FpPoly, p: u64) -> FpPoly {
    fp_trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * (i as u64 % p) % p)
            .collect(),
    )
}

fn fp_powmod(base: &FpPoly, e: &Natural, m: &FpPoly, p: u64) -> FpPoly {
    let mut acc: FpPoly = vec![1];
    let b = fp_divrem(base, m, p).1;
    let bits = e.significant_bits();
    for i in (0..bits).rev() {
        acc = fp_divrem(&fp_mul(&acc, &acc, p), m, p).1;
        if e.get_bit(i) {
            acc = fp_divrem(&fp_mul(&acc, &b, p), m, p).1;
        }
    }
    acc
}

/// Distinct-degree factorization of a monic square-free polynomial.
fn fp_ddf(f: &FpPoly, p: u64) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: FpPoly = vec![0, 1];
    let mut h = x.clone();
    let pn = Natural::from(p);
    let mut d = 1;
    while 2 * d < f.len() {
        h = fp_powmod(&h, &pn, &f, p);
        let g = fp_gcd(&fp_sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            out.push((g.clone(), d));
            f = fp_divrem(&f, &g, p).0;
            h = fp_divrem(&h, &f, p).1;
        }
        d += 1;
    }
    if f.len() > 1 {
        let deg = f.len() - 1;
        out.push((f, deg));
    }
    out
}

/// Equal-degree splitting (Cantor–Zassenhaus, odd p).
fn fp_edf(f: &FpPoly, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.clone()];
    }
    let e = (Natural::from(p).pow(d as u64) - Natural::ONE) / Natural::from(2u32);
    loop {
        let a: FpPoly = fp_trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, &e, f, p), &vec![1], p);
        let g = fp_gcd(&b, f, p);
        if g.len() > 1 && g.len() < f.len() {
            let h = fp_divrem(f, &g, p).0;
            let mut out = fp_edf(&g, d, p, rng);
            out.extend(fp_edf(&fp_monic(&h, p), d, p, rng));
            return out;
        }
    }
}

fn fp_factor(f: &FpPoly, p: u64, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let mut out = Vec::new();
    for (g, d) in fp_ddf(&fp_monic(f, p), p) {
        out.extend(fp_edf(&g, d, p, rng));
    }
    out.sort();
    out
}

// ---------- arithmetic in (Z/m)[t] with Integer coefficients ----------

fn zm_trim(mut f: ZPoly) -> ZPoly {
    while f.last().is_some_and(|x| *x == 0u32) {
        f.pop();
    }
    f
}

fn zm_red(f: &ZPoly, m: &Integer) -> ZPoly {
    zm_trim(f.iter().map(|c| c.mod_op(m)).collect())
}

fn zm_add(a: &ZPoly, b: &ZPoly, m: &Integer) -> ZPoly {
    let n = a.len().max(b.len());
    let z = Integer::ZERO;
    zm_trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).mod_op(m))
            .collect(),
    )
}

fn zm_sub(a: &ZPoly, b: &ZPoly, m: &Integer) -> ZPoly {
    let n = a.len().max(b.len());
    let z = Integer::ZERO;
    zm_trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_op(m))
            .collect(),
    )
}

fn zm_mul(a: &ZPoly, b: &ZPoly, m: &Integer) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![Integer::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0u32 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    zm_red(&r, m)
}

/// Division by a monic polynomial modulo m.
fn zm_divrem(a: &ZPoly, b: &ZPoly, m: &Integer) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    debug_assert!(b[db] == 1u32);
    if a.len() <= db {
        return (Vec::new(), a.clone());
    }
    let mut rem = a.clone();
    let mut q = vec![Integer::ZERO; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db].clone().mod_op(m);
        if c != 0u32 {
            for j in 0..=db {
                rem[i + j] -= &c * &b[j];
            }
        }
        q[i] = c;
    }
    rem.truncate(db);
    (zm_trim(q), zm_red(&rem, m))
}

fn to_fp(f: &ZPoly, p: u64) -> FpPoly {
    let pi = Integer::from(p);
    fp_trim(
        f.iter()
            .map(|c| u64::try_from(&c.mod_op(&pi)).expect("small residue"))
            .collect(),
    )
}

fn from_fp(f: &FpPoly) -> ZPoly {
    f.iter().map(|&c| Integer::from(c)).collect()
}

/// Extended Euclid in F_p[t]: s a + t b = 1.
fn fp_xgcd(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (FpPoly, FpPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let ns = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, ns);
        let nt = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, nt);
    }
    assert!(r0.len() == 1, "factors not coprime mod p");
    let inv = fp_inv(r0[0], p);
    (
        s0.iter().map(|&x| x * inv % p).collect(),
        t0.iter().map(|&x| x * inv % p).collect(),
    )
}

/// Lifts f ≡ g·h (mod p), h monic, to modulus p^(2^k) ≥ target.
fn hensel_two(f: &ZPoly, g: &FpPoly, h: &FpPoly, p: u64, target: &Integer) -> (ZPoly, ZPoly) {
    let (s, t) = fp_xgcd(g, h, p);
    let (mut g, mut h, mut s, mut t) = (from_fp(g), from_fp(h), from_fp(&s), from_fp(&t));
    let mut m = Integer::from(p);
    while m < *target {
        let m2 = &m * &m;
        let e = zm_sub(f, &zm_mul(&g, &h, &m2), &m2);
        let (q, r) = zm_divrem(&zm_mul(&s, &e, &m2), &h, &m2);
        let gs = zm_add(&zm_add(&g, &zm_mul(&t, &e, &m2), &m2), &zm_mul(&q, &g, &m2), &m2);
        let hs = zm_add(&h, &r, &m2);
        let b = zm_sub(
            &zm_add(&zm_mul(&s, &gs, &m2), &zm_mul(&t, &hs, &m2), &m2),
            &vec![Integer::ONE],
            &m2,
        );
        let (c, d) = zm_divrem(&zm_mul(&s, &b, &m2), &hs, &m2);
        s = zm_sub(&s, &d, &m2);
        t = zm_sub(&zm_sub(&t, &zm_mul(&t, &b, &m2), &m2), &zm_mul(&c, &gs, &m2), &m2);
        g = gs;
        h = hs;
        m = m2;
    }
    (g, h)
}

/// Lifts the monic modular factors of f (lc(f) ≡ lc · Π factors) to modulus `target`.
fn hensel_multi(f: &ZPoly, factors: &[FpPoly], p: u64, target: &Integer) -> Vec<ZPoly> {
    if factors.len() == 1 {
        // monic representative of f / lc(f)
        let lc = f.last().unwrap();
        let lc_inv = mod_inverse(lc, target);
        return vec![zm_red(&f.iter().map(|c| c * &lc_inv).collect(), target)];
    }
    let k = factors.len() / 2;
    let lc = to_fp(&vec![f.last().unwrap().clone()], p);
    let mut g0: FpPoly = lc;
    for fi in &factors[..k] {
        g0 = fp_mul(&g0, fi, p);
    }
    let mut h0: FpPoly = vec![1];
    for fi in &factors[k..] {
        h0 = fp_mul(&h0, fi, p);
    }
    let (g, h) = hensel_two(f, &g0, &h0, p, target);
    let mut out = hensel_multi(&g, &factors[..k], p, target);
    out.extend(hensel_multi(&h, &factors[k..], p, target));
    out
}

fn mod_inverse(a: &Integer, m: &Integer) -> Integer {
    let (mut r0, mut r1) = (a.mod_op(m), m.clone());
    let (mut s0, mut s1) = (Integer::ONE, Integer::ZERO);
    while r1 != 0u32 {
        let (q, r) = (&r0).div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let ns = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, ns);
    }
    assert!(r0 == 1u32, "not invertible");
    s0.mod_op(m)
}

fn symmetric(f: &ZPoly, m: &Integer) -> ZPoly {
    let half = m / Integer::from(2);
    zm_trim(
        f.iter()
            .map(|c| {
                let c = c.mod_op(m);
                if c > half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

fn content(f: &ZPoly) -> Natural {
    f.iter()
        .fold(Natural::ZERO, |g, c| g.gcd(c.unsigned_abs_ref().clone()))
}

fn primitive(f: &ZPoly) -> ZPoly {
    let c = Integer::from(content(f));
    let mut g: ZPoly = f.iter().map(|x| x.div_exact(&c)).collect();
    if *g.last().unwrap() < 0u32 {
        g = g.into_iter().map(|x| -x).collect();
    }
    g
}

/// Exact division over Z; None if not divisible.
fn z_div(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let db = b.len() - 1;
    if a.len() <= db {
        return None;
    }
    let lb = &b[db];
    let mut rem = a.clone();
    let mut q = vec![Integer::ZERO; a.len() - db];
    for i in (0..q.len()).rev() {
        let (c, r) = (&rem[i + db]).div_rem(lb);
        if r != 0u32 {
            return None;
        }
        if c != 0u32 {
            for j in 0..=db {
                rem[i + j] -= &c * &b[j];
            }
        }
        q[i] = c;
    }
    if rem.iter().all(|x| *x == 0u32) {
        Some(zm_trim(q))
    } else {
        None
    }
}

fn z_is_squarefree_mod(f: &ZPoly, p: u64) -> bool {
    let fp = to_fp(f, p);
    if fp.len() != f.len() {
        return false;
    }
    fp_gcd(&fp, &fp_derivative(&fp, p), p).len() == 1
}

const PRIMES: [u64; 30] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127,
];

/// Factors a primitive square-free integer polynomial of positive degree.
fn zassenhaus(f: &ZPoly, rng: &mut ChaCha8Rng) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.clone()];
    }
    // choose among a few good primes the one with fewest modular factors
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    let mut extra = 5u64;
    let mut candidates: Vec<u64> = PRIMES.to_vec();
    while tried < 5 {
        let p = match candidates.first() {
            Some(&p) => {
                candidates.remove(0);
                p
            }
            None => {
                extra += 2;
                let mut q = 127 + extra;
                while !(2..q).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d)) {
                    q += 2;
                }
                extra = q - 127;
                q
            }
        };
        if !z_is_squarefree_mod(f, p) {
            continue;
        }
        tried += 1;
        let facs = fp_factor(&to_fp(f, p), p, rng);
        if best.as_ref().is_none_or(|b| facs.len() < b.1.len()) {
            best = Some((p, facs));
        }
    }
    let (p, facs) = best.unwrap();
    if facs.len() == 1 {
        return vec![f.clone()];
    }
    // Mignotte-type bound on coefficients of lc·(factor)
    let norm2: Natural = f
        .iter()
        .map(|c| {
            let a = c.unsigned_abs_ref();
            a * a
        })
        .fold(Natural::ZERO, |s, x| s + x);
    let lc = f.last().unwrap().clone();
    let bound = (norm2.floor_sqrt() + Natural::ONE)
        * Natural::from(2u32).pow(n as u64)
        * lc.unsigned_abs_ref();
    let target = Integer::from(bound * Natural::from(2u32) + Natural::ONE);
    // lift to the first p^(2^k) above the bound
    let mut m = Integer::from(p);
    while m < target {
        m = &m * &m;
    }
    let lifted = hensel_multi(f, &facs, p, &m);

    let mut remaining: Vec<ZPoly> = lifted;
    let mut g = f.clone();
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut found = false;
        let idx: Vec<usize> = (0..remaining.len()).collect();
        for subset in combinations(&idx, s) {
            let lcg = g.last().unwrap().clone();
            let mut prod: ZPoly = vec![lcg.clone()];
            for &i in &subset {
                prod = zm_mul(&prod, &remaining[i], &m);
            }
            let cand = primitive(&symmetric(&prod, &m));
            if let Some(q) = z_div(&g, &cand) {
                out.push(cand);
                g = q;
                let keep: Vec<ZPoly> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, x)| x.clone())
                    .collect();
                remaining = keep;
                found = true;
                break;
            }
        }
        if !found {
            s += 1;
        }
    }
    if g.len() > 1 {
        out.push(primitive(&g));
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

fn to_zpoly(f: &UPoly) -> ZPoly {
    let mut den = Natural::ONE;
    for c in f.coeffs() {
        let r = c.to_rational().expect("rational coefficients");
        den = den.lcm(r.denominator_ref());
    }
    let d = Rational::from(den);
    let z: ZPoly = f
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.to_rational().unwrap() * &d;
            Integer::try_from(&r).expect("integral")
        })
        .collect();
    primitive(&z)
}

fn from_zpoly(f: &ZPoly) -> UPoly {
    UPoly::new(f.iter().map(|c| Cyclo::from(Rational::from(c.clone()))).collect()).monic()
}

fn sort_factors(v: &mut Vec<(UPoly, usize)>) {
    v.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.to_string().cmp(&b.0.to_string()))
    });
}

/// Irreducible factorization over Q: monic factors with multiplicities.
pub fn factor_rational(f: &UPoly) -> Vec<(UPoly, usize)> {
    assert!(!f.is_zero(), "factor of zero");
    assert!(f.is_rational(), "coefficients must be rational");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    for (g, mult) in f.squarefree_decomposition() {
        for h in zassenhaus(&to_zpoly(&g), &mut rng) {
            out.push((from_zpoly(&h), mult));
        }
    }
    sort_factors(&mut out);
    out
}

/// Irreducible factorization over Q(ζ_n) via Trager's norm method.
pub fn factor_cyclotomic(f: &UPoly, n: u32) -> Vec<(UPoly, usize)> {
    assert!(!f.is_zero(), "factor of zero");
    let phi = crate::cyclo::euler_phi(n);
    if phi == 1 {
        return factor_rational(f);
    }
    let zeta = Cyclo::zeta(n, 1);
    let gal = Cyclo::galois_exponents(n);
    let mut out = Vec::new();
    for (g, mult) in f.squarefree_decomposition() {
        if g.degree() == Some(1) {
            out.push((g, mult));
            continue;
        }
        let mut s: i64 = 0;
        let (gs, norm) = loop {
            let shift = zeta.scale(&Rational::from(-s));
            let gs = g.shift(&shift);
            let mut norm = UPoly::one();
            for &k in &gal {
                norm = norm.mul(&gs.map(|c| c.galois(k)));
            }
            if norm.gcd(&norm.derivative()).degree() == Some(0) {
                break (gs, norm);
            }
            s = if s <= 0 { -s + 1 } else { -s };
        };
        let back = zeta.scale(&Rational::from(s));
        for (ni, _) in factor_rational(&norm) {
            let h = gs.gcd(&ni);
            if h.degree().unwrap_or(0) > 0 {
                out.push((h.shift(&back).monic(), mult));
            }
        }
    }
    sort_factors(&mut out);
    out
}

/// Irreducible factors over Q(ζ_n) (n = 1 for Q).
pub fn factor_irreducible(f: &UPoly, n: u32) -> Vec<(UPoly, usize)> {
    if n <= 2 {
        factor_rational(f)
    } else {
        factor_cyclotomic(f, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(fs: &[(UPoly, usize)]) -> UPoly {
        fs.iter()
            .fold(UPoly::one(), |acc, (f, m)| acc.mul(&f.pow(*m as u32)))
    }

    #[test]
    fn simple_rational() {
        let f = UPoly::from_i64(&[-1, 0, 1]);
        let fs = factor_rational(&f);
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&(UPoly::from_i64(&[-1, 1]), 1)));
        assert!(fs.contains(&(UPoly::from_i64(&[1, 1]), 1)));
        let g = UPoly::from_i64(&[-4, 0, 0, 0, 1]);
        let gs = factor_rational(&g);
        assert_eq!(gs.len(), 2);
        assert_eq!(expand(&gs), g);
        assert!(gs.iter().all(|(h, _)| h.degree() == Some(2)));
    }

    #[test]
    fn irreducible_cyclotomic_over_q() {
        let f = UPoly::from_i64(&[1, 1, 1]);
        assert_eq!(factor_rational(&f), vec![(f.clone(), 1)]);
        let fs = factor_cyclotomic(&f, 3);
        assert_eq!(fs.len(), 2);
        let w = Cyclo::zeta(3, 1);
        let roots: Vec<Cyclo> = fs.iter().map(|(h, _)| -h.coeff(0)).collect();
        assert!(roots.contains(&w));
        assert!(roots.contains(&w.pow(2)));
    }

    #[test]
    fn swinnerton_dyer_like() {
        // (t^2-2)(t^2-3)(t^4-10t^2+1) and repeated factors
        let a = UPoly::from_i64(&[-2, 0, 1]);
        let b = UPoly::from_i64(&[-3, 0, 1]);
        let c = UPoly::from_i64(&[1, 0, -10, 0, 1]);
        let f = a.mul(&b).mul(&c).mul(&a).mul(&UPoly::from_i64(&[5, 3]));
        let fs = factor_rational(&f);
        assert_eq!(expand(&fs).monic(), f.monic());
        assert_eq!(fs.len(), 4);
    }

    #[test]
    fn cyclotomic_field_factoring() {
        // t^3 - 1 over Q(ζ3) splits completely
        let f = UPoly::from_i64(&[-1, 0, 0, 1]);
        let fs = factor_cyclotomic(&f, 3);
        assert_eq!(fs.len(), 3);
        assert_eq!(expand(&fs), f);
        // t^4 + 1 over Q(i): (t^2 - i)(t^2 + i)
        let g = UPoly::from_i64(&[1, 0, 0, 0, 1]);
        let gs = factor_cyclotomic(&g, 4);
        assert_eq!(gs.len(), 2);
        assert_eq!(expand(&gs), g);
    }
}
