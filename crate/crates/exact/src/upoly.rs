//! Dense univariate polynomials over [`Cyclo`].

use std::fmt;

use crate::cyclo::{lcm_u32, Cyclo};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Cyclo>,
}

impl UPoly {
    pub fn new(mut c: Vec<Cyclo>) -> UPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn from_i64(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&v| Cyclo::from_i64(v)).collect())
    }

    pub fn zero() -> UPoly {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> UPoly {
        UPoly::constant(Cyclo::one())
    }

    pub fn constant(a: Cyclo) -> UPoly {
        UPoly::new(vec![a])
    }

    /// The polynomial t.
    pub fn t() -> UPoly {
        UPoly::new(vec![Cyclo::zero(), Cyclo::one()])
    }

    /// t - a.
    pub fn linear(a: &Cyclo) -> UPoly {
        UPoly::new(vec![-a, Cyclo::one()])
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Cyclo {
        self.c.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn lc(&self) -> Cyclo {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().all(|x| x.is_rational())
    }

    /// Smallest conductor containing all coefficients.
    pub fn conductor(&self) -> u32 {
        self.c.iter().fold(1, |a, x| lcm_u32(a, x.conductor()))
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly::new(self.c.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, a: &Cyclo) -> UPoly {
        UPoly::new(self.c.iter().map(|x| x * a).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut r = vec![Cyclo::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    r[i + j] += &(a * b);
                }
            }
        }
        UPoly::new(r)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let inv = d.lc().inv();
        let mut rem = self.c.clone();
        let mut q = vec![Cyclo::zero(); self.c.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &rem[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for j in 0..=dd {
                let v = &c * &d.c[j];
                rem[i + j] -= &v;
            }
            q[i] = c;
        }
        rem.truncate(dd);
        (UPoly::new(q), UPoly::new(rem))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv())
    }

    /// Monic greatest common divisor (zero only if both are zero).
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * &Cyclo::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Cyclo) -> Cyclo {
        let mut acc = Cyclo::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// self(q(t)).
    pub fn compose(&self, q: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.c.iter().rev() {
            acc = acc.mul(q).add(&UPoly::constant(c.clone()));
        }
        acc
    }

    /// self(t + a).
    pub fn shift(&self, a: &Cyclo) -> UPoly {
        self.compose(&UPoly::new(vec![a.clone(), Cyclo::one()]))
    }

    /// Applies a coefficient map.
    pub fn map<F: Fn(&Cyclo) -> Cyclo>(&self, f: F) -> UPoly {
        UPoly::new(self.c.iter().map(f).collect())
    }

    /// Monic square-free part f / gcd(f, f').
    pub fn squarefree_part(&self) -> UPoly {
        assert!(!self.is_zero());
        if self.degree() == Some(0) {
            return UPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Yun's algorithm: monic square-free factors with multiplicities.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, usize)> {
        assert!(!self.is_zero());
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == Some(0) {
            return out;
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.divrem(&a0).0;
        let mut c = df.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.c.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = match c.to_rational() {
                Some(r) if *r < 0u32 => (true, Cyclo::from(-r.clone())),
                _ => (false, c.clone()),
            };
            if neg {
                s.push_str(if s.is_empty() { "-" } else { " - " });
            } else if !s.is_empty() {
                s.push_str(" + ");
            }
            let v = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, i),
            };
            if i == 0 {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&v);
            } else {
                s.push_str(&format!("{}*{}", mag, v));
            }
        }
        s
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("t"))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
