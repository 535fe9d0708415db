//! Elements of cyclotomic fields Q(ζ_n) in the power basis.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational;
use smallvec::{smallvec, SmallVec};

/// Precomputed reduction data for one conductor.
#[derive(Debug)]
pub struct CycloData {
    pub n: u32,
    pub phi: usize,
    /// `powers[k]` is ζ^k (0 ≤ k < n) in the power basis.
    pub powers: Vec<Vec<i64>>,
    /// Coefficients of the n-th cyclotomic polynomial, constant term first.
    pub cyclotomic: Vec<i64>,
    /// Traces Tr(ζ^k) for 0 ≤ k < φ(n).
    traces: Vec<i64>,
}

fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|&k| gcd_u32(k, n) == 1).count()
}

fn mobius(mut n: u32) -> i64 {
    let mut res = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            res = -res;
        }
        p += 1;
    }
    if n > 1 {
        res = -res;
    }
    res
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_monic_i(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db];
        q[i] = c;
        for j in 0..=db {
            rem[i + j] -= c * b[j];
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // t^n - 1 divided by Φ_d for all proper divisors d of n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_div_monic_i(&num, &cyclotomic_poly(d));
        }
    }
    num
}

impl CycloData {
    fn build(n: u32) -> CycloData {
        let cyc = cyclotomic_poly(n);
        let phi = cyc.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by ζ
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1] - top * cyc[i];
            }
            cur[0] = -top * cyc[0];
        }
        let traces = (0..phi as u32)
            .map(|k| {
                // Ramanujan sum: Tr(ζ^k) = μ(m)φ(n)/φ(m), m = n/gcd(n,k)
                let m = n / gcd_u32(n, k);
                mobius(m) * (phi / euler_phi(m)) as i64
            })
            .collect();
        CycloData {
            n,
            phi,
            powers,
            cyclotomic: cyc,
            traces,
        }
    }

    pub fn get(n: u32) -> Arc<CycloData> {
        static CACHE: OnceLock<RwLock<Vec<Option<Arc<CycloData>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| RwLock::new(Vec::new()));
        if let Some(Some(d)) = cache.read().unwrap().get(n as usize) {
            return d.clone();
        }
        let data = Arc::new(CycloData::build(n));
        let mut w = cache.write().unwrap();
        if w.len() <= n as usize {
            w.resize(n as usize + 1, None);
        }
        w[n as usize].get_or_insert(data).clone()
    }
}

type Coeffs = SmallVec<[Rational; 2]>;

/// An element of Q(ζ_n). Rational values are always stored with conductor 1.
#[derive(Clone)]
pub struct Cyclo {
    n: u32,
    c: Coeffs,
}

impl Cyclo {
    pub fn zero() -> Cyclo {
        Cyclo {
            n: 1,
            c: smallvec![Rational::ZERO],
        }
    }

    pub fn one() -> Cyclo {
        Cyclo::from(Rational::ONE)
    }

    pub fn from_i64(v: i64) -> Cyclo {
        Cyclo::from(Rational::from(v))
    }

    pub fn frac(num: i64, den: i64) -> Cyclo {
        Cyclo::from(Rational::from_signeds(num, den))
    }

    /// ζ_n^k.
    pub fn zeta(n: u32, k: i64) -> Cyclo {
        let data = CycloData::get(n);
        let k = k.rem_euclid(n as i64) as usize;
        let c = data.powers[k].iter().map(|&v| Rational::from(v)).collect();
        Cyclo { n, c }.normalized()
    }

    /// Builds Σ coeffs[k] ζ_n^k; `coeffs` may be longer than φ(n) (up to n).
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Cyclo {
        let data = CycloData::get(n);
        assert!(coeffs.len() <= n as usize || n == 1);
        let mut c: Coeffs = smallvec![Rational::ZERO; data.phi];
        for (k, v) in coeffs.into_iter().enumerate() {
            if v == 0u32 {
                continue;
            }
            let k = k % n as usize;
            if k < data.phi {
                c[k] += v;
            } else {
                for (j, &p) in data.powers[k].iter().enumerate() {
                    if p != 0 {
                        c[j] += &v * Rational::from(p);
                    }
                }
            }
        }
        Cyclo { n, c }.normalized()
    }

    fn normalized(mut self) -> Cyclo {
        if self.n != 1 && self.c[1..].iter().all(|v| *v == 0u32) {
            self.c.truncate(1);
            self.n = 1;
        }
        self
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Coordinates in the power basis of Q(ζ_conductor).
    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.c[0] == 0u32
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.c[0] == 1u32
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<&Rational> {
        if self.n == 1 {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Coordinates of `self` in Q(ζ_m); `n` must divide `m`.
    pub fn lift_to(&self, m: u32) -> Vec<Rational> {
        let data = CycloData::get(m);
        let mut out = vec![Rational::ZERO; data.phi];
        if self.n == 1 {
            out[0] = self.c[0].clone();
            return out;
        }
        assert!(m.is_multiple_of(self.n), "conductor {} does not divide {}", self.n, m);
        let step = (m / self.n) as usize;
        for (k, v) in self.c.iter().enumerate() {
            if *v == 0u32 {
                continue;
            }
            for (j, &p) in data.powers[k * step].iter().enumerate() {
                if p != 0 {
                    out[j] += v * Rational::from(p);
                }
            }
        }
        out
    }

    fn promote(&self, m: u32) -> Cyclo {
        if self.n == m {
            return self.clone();
        }
        Cyclo {
            n: m,
            c: self.lift_to(m).into_iter().collect(),
        }
    }

    fn common(a: &Cyclo, b: &Cyclo) -> u32 {
        if a.n == b.n || b.n == 1 {
            a.n
        } else if a.n == 1 {
            b.n
        } else {
            lcm_u32(a.n, b.n)
        }
    }

    pub fn scale(&self, r: &Rational) -> Cyclo {
        if *r == 0u32 {
            return Cyclo::zero();
        }
        Cyclo {
            n: self.n,
            c: self.c.iter().map(|v| v * r).collect(),
        }
    }

    /// Image under the Galois automorphism ζ ↦ ζ^k (k coprime to the conductor).
    pub fn galois(&self, k: i64) -> Cyclo {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n as i64;
        let mut coeffs = vec![Rational::ZERO; self.n as usize];
        for (j, v) in self.c.iter().enumerate() {
            let e = ((j as i64) * k).rem_euclid(n) as usize;
            coeffs[e] += v;
        }
        Cyclo::from_coeffs(self.n, coeffs)
    }

    /// Complex conjugate (ζ ↦ ζ^{-1}).
    pub fn conj(&self) -> Cyclo {
        self.galois(-1)
    }

    /// Exponents k in (Z/n)^* indexing the Galois group.
    pub fn galois_exponents(n: u32) -> Vec<i64> {
        (1..=n.max(1))
            .filter(|&k| gcd_u32(k, n) == 1)
            .map(|k| k as i64)
            .collect()
    }

    pub fn norm(&self) -> Rational {
        if self.n == 1 {
            return self.c[0].clone();
        }
        let mut acc = self.clone();
        for k in Cyclo::galois_exponents(self.n).into_iter().skip(1) {
            acc = &acc * &self.galois(k);
        }
        acc.to_rational().expect("norm is rational").clone()
    }

    pub fn inv(&self) -> Cyclo {
        assert!(!self.is_zero(), "inverse of zero");
        if self.n == 1 {
            return Cyclo::from((&self.c[0]).reciprocal());
        }
        let mut others = Cyclo::one();
        for k in Cyclo::galois_exponents(self.n).into_iter().skip(1) {
            others = &others * &self.galois(k);
        }
        let nrm = (&others * self).to_rational().expect("norm is rational").clone();
        others.scale(&nrm.reciprocal())
    }

    pub fn pow(&self, mut e: u32) -> Cyclo {
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Tr(a)/[Q(ζ_n):Q], independent of the ambient conductor.
    pub fn normalized_trace(&self) -> Rational {
        if self.n == 1 {
            return self.c[0].clone();
        }
        let data = CycloData::get(self.n);
        let mut t = Rational::ZERO;
        for (k, v) in self.c.iter().enumerate() {
            if *v != 0u32 && data.traces[k] != 0 {
                t += v * Rational::from(data.traces[k]);
            }
        }
        t / Rational::from(data.phi as u64)
    }

    fn add_impl(&self, o: &Cyclo, neg: bool) -> Cyclo {
        if self.n == 1 && o.n == 1 {
            let v = if neg { &self.c[0] - &o.c[0] } else { &self.c[0] + &o.c[0] };
            return Cyclo::from(v);
        }
        let m = Cyclo::common(self, o);
        let a = self.promote(m);
        let b = o.promote(m);
        let c = a
            .c
            .iter()
            .zip(b.c.iter())
            .map(|(x, y)| if neg { x - y } else { x + y })
            .collect();
        Cyclo { n: m, c }.normalized()
    }

    fn mul_impl(&self, o: &Cyclo) -> Cyclo {
        if self.n == 1 {
            return o.scale(&self.c[0]);
        }
        if o.n == 1 {
            return self.scale(&o.c[0]);
        }
        let m = Cyclo::common(self, o);
        let (a, b);
        let (a, b) = if self.n == m && o.n == m {
            (self, o)
        } else {
            a = self.promote(m);
            b = o.promote(m);
            (&a, &b)
        };
        let data = CycloData::get(m);
        let phi = data.phi;
        let mut raw = vec![Rational::ZERO; 2 * phi - 1];
        for (i, x) in a.c.iter().enumerate() {
            if *x == 0u32 {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if *y == 0u32 {
                    continue;
                }
                raw[i + j] += x * y;
            }
        }
        let mut c: Coeffs = raw[..phi].iter().cloned().collect();
        for k in phi..raw.len() {
            if raw[k] == 0u32 {
                continue;
            }
            for (j, &p) in data.powers[k % m as usize].iter().enumerate() {
                if p != 0 {
                    c[j] += &raw[k] * Rational::from(p);
                }
            }
        }
        Cyclo { n: m, c }.normalized()
    }
}

impl From<Rational> for Cyclo {
    fn from(r: Rational) -> Cyclo {
        Cyclo { n: 1, c: smallvec![r] }
    }
}

impl From<i64> for Cyclo {
    fn from(v: i64) -> Cyclo {
        Cyclo::from_i64(v)
    }
}

impl Default for Cyclo {
    fn default() -> Cyclo {
        Cyclo::zero()
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, o: &Cyclo) -> bool {
        if self.n == o.n {
            return self.c == o.c;
        }
        if self.n == 1 || o.n == 1 {
            return false;
        }
        let m = Cyclo::common(self, o);
        self.lift_to(m) == o.lift_to(m)
    }
}

impl Eq for Cyclo {}

impl Hash for Cyclo {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.normalized_trace().hash(state);
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $m(self, o: &Cyclo) -> Cyclo {
                $body(self, o)
            }
        }
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, o: Cyclo) -> Cyclo {
                $body(&self, &o)
            }
        }
        impl $tr<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, o: &Cyclo) -> Cyclo {
                $body(&self, o)
            }
        }
        impl $tr<Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $m(self, o: Cyclo) -> Cyclo {
                $body(self, &o)
            }
        }
    };
}

binop!(Add, add, |a: &Cyclo, b: &Cyclo| a.add_impl(b, false));
binop!(Sub, sub, |a: &Cyclo, b: &Cyclo| a.add_impl(b, true));
binop!(Mul, mul, |a: &Cyclo, b: &Cyclo| a.mul_impl(b));
binop!(Div, div, |a: &Cyclo, b: &Cyclo| a.mul_impl(&b.inv()));

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, o: &Cyclo) {
        if self.n == 1 && o.n == 1 {
            self.c[0] += &o.c[0];
        } else if self.n == o.n {
            for (x, y) in self.c.iter_mut().zip(o.c.iter()) {
                *x += y;
            }
            *self = std::mem::take(self).normalized();
        } else {
            *self = self.add_impl(o, false);
        }
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, o: &Cyclo) {
        if self.n == 1 && o.n == 1 {
            self.c[0] -= &o.c[0];
        } else if self.n == o.n {
            for (x, y) in self.c.iter_mut().zip(o.c.iter()) {
                *x -= y;
            }
            *self = std::mem::take(self).normalized();
        } else {
            *self = self.add_impl(o, true);
        }
    }
}

impl MulAssign<&Cyclo> for Cyclo {
    fn mul_assign(&mut self, o: &Cyclo) {
        *self = self.mul_impl(o);
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(mut self) -> Cyclo {
        for v in self.c.iter_mut() {
            *v = -std::mem::take(v);
        }
        self
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -self.clone()
    }
}

impl fmt::Display for Cyclo {
    /// Rationals print as fractions; other values as `(a+b*E(n)+c*E(n)^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return write!(f, "{}", self.c[0]);
        }
        let mut s = String::new();
        for (k, v) in self.c.iter().enumerate() {
            if *v == 0u32 {
                continue;
            }
            let neg = *v < 0u32;
            let a = if neg { -v.clone() } else { v.clone() };
            if neg {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            let zeta = match k {
                0 => String::new(),
                1 => format!("E({})", self.n),
                _ => format!("E({})^{}", self.n, k),
            };
            if k == 0 {
                s.push_str(&a.to_string());
            } else if a == 1u32 {
                s.push_str(&zeta);
            } else {
                s.push_str(&format!("{}*{}", a, zeta));
            }
        }
        write!(f, "({})", s)
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
