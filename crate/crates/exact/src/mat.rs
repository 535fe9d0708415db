//! Dense matrices over [`Cyclo`] and a sparse incremental echelon form.

use std::collections::BTreeMap;
use std::fmt;

use crate::cyclo::Cyclo;
use crate::error::ExactError;
use crate::upoly::UPoly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    a: Vec<Cyclo>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            a: vec![Cyclo::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Cyclo::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclo>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            a: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Cyclo::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Cyclo {
        &self.a[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Cyclo) {
        self.a[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Cyclo] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Cyclo>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut r = Mat::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.at(k, j);
                    if !b.is_zero() {
                        r.a[i * o.cols + j] += &(a * b);
                    }
                }
            }
        }
        r
    }

    pub fn mul_vec(&self, v: &[Cyclo]) -> Vec<Cyclo> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Cyclo::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Mat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Mat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclo) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().map(|x| x * c).collect(),
        }
    }

    pub fn map<F: Fn(&Cyclo) -> Cyclo>(&self, f: F) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().map(f).collect(),
        }
    }

    pub fn trace(&self) -> Cyclo {
        let mut t = Cyclo::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.at(i, i);
        }
        t
    }

    pub fn pow(&self, mut e: u32) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
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

    /// p(M) by Horner's rule.
    pub fn eval_poly(&self, p: &UPoly) -> Mat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut acc = Mat::zero(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                acc.a[i * n + i] += c;
            }
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.a.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.at(r, c).inv();
            for j in c..m.cols {
                let v = m.at(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone();
                for j in c..m.cols {
                    if m.at(r, j).is_zero() {
                        continue;
                    }
                    let v = &f * m.at(r, j);
                    m.a[i * m.cols + j] -= &v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {v : M v = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<Cyclo>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![Cyclo::zero(); self.cols];
            v[f] = Cyclo::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(i, f);
            }
            out.push(v);
        }
        out
    }

    /// Some x with M x = b, if one exists.
    pub fn solve(&self, b: &[Cyclo]) -> Option<Vec<Cyclo>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Cyclo::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.at(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Mat, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, Cyclo::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(ExactError::Singular);
        }
        let mut inv = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.at(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn det(&self) -> Result<Cyclo, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NotSquare(self.rows, self.cols));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Cyclo::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return Ok(Cyclo::zero());
            };
            if p != c {
                for j in 0..n {
                    m.a.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.at(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv();
            for i in c + 1..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c) * &inv;
                for j in c..n {
                    let v = &f * m.at(c, j);
                    m.a[i * n + j] -= &v;
                }
            }
        }
        Ok(det)
    }

    /// Monic characteristic polynomial det(t·I − M) via Hessenberg reduction.
    pub fn charpoly(&self) -> Result<UPoly, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.at(i, m - 1).is_zero()) else {
                continue;
            };
            if i != m {
                for j in 0..n {
                    h.a.swap(i * n + j, m * n + j);
                }
                for k in 0..n {
                    h.a.swap(k * n + i, k * n + m);
                }
            }
            let inv = h.at(m, m - 1).inv();
            for i in m + 1..n {
                if h.at(i, m - 1).is_zero() {
                    continue;
                }
                let u = h.at(i, m - 1) * &inv;
                for j in 0..n {
                    if h.at(m, j).is_zero() {
                        continue;
                    }
                    let v = &u * h.at(m, j);
                    h.a[i * n + j] -= &v;
                }
                for k in 0..n {
                    if h.at(k, i).is_zero() {
                        continue;
                    }
                    let v = &u * h.at(k, i);
                    h.a[k * n + m] += &v;
                }
            }
        }
        let mut p: Vec<UPoly> = vec![UPoly::one()];
        for m in 1..=n {
            let mut pm = UPoly::linear(h.at(m - 1, m - 1)).mul(&p[m - 1]);
            let mut t = Cyclo::one();
            for k in (1..m).rev() {
                t = &t * h.at(k, k - 1);
                if t.is_zero() {
                    break;
                }
                let coef = &t * h.at(k - 1, m - 1);
                if !coef.is_zero() {
                    pm = pm.sub(&p[k - 1].scale(&coef));
                }
            }
            p.push(pm);
        }
        Ok(p.pop().unwrap())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sparse vectors kept in reduced echelon form; pivot is the largest key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, BTreeMap<K, Cyclo>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns the remainder.
    pub fn reduce(&self, v: &BTreeMap<K, Cyclo>) -> BTreeMap<K, Cyclo> {
        let mut v = v.clone();
        let mut bound: Option<K> = None;
        loop {
            let next = match &bound {
                None => v.keys().next_back().cloned(),
                Some(b) => v.range(..b.clone()).next_back().map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { break };
            if let Some(row) = self.rows.get(&k) {
                let f = v[&k].clone();
                for (rk, rv) in row {
                    let d = &f * rv;
                    let e = v.entry(rk.clone()).or_insert_with(Cyclo::zero);
                    *e -= &d;
                    if e.is_zero() {
                        v.remove(rk);
                    }
                }
            }
            bound = Some(k);
        }
        v
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &BTreeMap<K, Cyclo>) -> bool {
        let r = self.reduce(v);
        let Some((pk, pv)) = r.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = pv.inv();
        let r: BTreeMap<K, Cyclo> = r.into_iter().map(|(k, c)| (k, &c * &inv)).collect();
        // keep the basis fully reduced
        for row in self.rows.values_mut() {
            if let Some(f) = row.get(&pk).cloned() {
                for (rk, rv) in &r {
                    let d = &f * rv;
                    let e = row.entry(rk.clone()).or_insert_with(Cyclo::zero);
                    *e -= &d;
                    if e.is_zero() {
                        row.remove(rk);
                    }
                }
            }
        }
        self.rows.insert(pk, r);
        true
    }

    pub fn contains(&self, v: &BTreeMap<K, Cyclo>) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn basis(&self) -> impl Iterator<Item = &BTreeMap<K, Cyclo>> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_small() {
        assert_eq!(
            Mat::identity(2).charpoly().unwrap(),
            UPoly::from_i64(&[-1, 1]).pow(2)
        );
        let a = Mat::from_i64(&[&[0, 3], &[3, 0]]);
        assert_eq!(a.charpoly().unwrap(), UPoly::from_i64(&[-9, 0, 1]));
        let b = Mat::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        // cross-check with det(tI - B) at a few points
        let p = b.charpoly().unwrap();
        for t in -3..4 {
            let tm = Mat::identity(3).scale(&Cyclo::from_i64(t)).sub(&b);
            assert_eq!(p.eval(&Cyclo::from_i64(t)), tm.det().unwrap());
        }
    }

    #[test]
    fn kernel() {
        let a = Mat::from_i64(&[&[1, 1], &[1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k, vec![vec![Cyclo::from_i64(-1), Cyclo::one()]]);
        assert!(a.charpoly().is_ok());
        assert!(Mat::zero(2, 3).charpoly().is_err());
    }

    #[test]
    fn inverse_solve() {
        let a = Mat::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(2));
        let x = a.solve(&[Cyclo::from_i64(3), Cyclo::from_i64(2)]).unwrap();
        assert_eq!(x, vec![Cyclo::one(), Cyclo::one()]);
        assert!(Mat::from_i64(&[&[1, 1], &[1, 1]]).inverse().is_err());
    }

    #[test]
    fn echelon_span() {
        let mut e: Echelon<u32> = Echelon::new();
        let v = |a: i64, b: i64, c: i64| -> BTreeMap<u32, Cyclo> {
            [(0, a), (1, b), (2, c)]
                .into_iter()
                .filter(|x| x.1 != 0)
                .map(|(k, x)| (k, Cyclo::from_i64(x)))
                .collect()
        };
        assert!(e.insert(&v(1, 2, 3)));
        assert!(e.insert(&v(0, 1, 1)));
        assert!(!e.insert(&v(1, 3, 4)));
        assert!(e.contains(&v(2, 5, 7)));
        assert!(!e.contains(&v(0, 0, 1)) || e.rank() == 3);
    }
}
