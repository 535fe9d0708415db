//! Calogero–Moser cellular characters from Gaudin operators.

use std::sync::Arc;

use cherednik_exact::{factor_irreducible, Cyclo, Mat, UPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::params::ParamPoint;
use crate::reflection::{pair, ReflectionGroup};

/// Attempts at drawing a generic (y, v) before giving up.
pub const RETRY_BUDGET: usize = 32;
const MIN_DRAWS: usize = 3;

/// D_y at (c, v) acting by left multiplication on the group algebra.
///
/// Column w holds the coordinates of D·w in the basis of group elements.
pub fn gaudin_matrix(g: &ReflectionGroup, c: &[Cyclo], y: &[Cyclo], v: &[Cyclo]) -> Result<Mat> {
    if c.len() != g.num_params() || y.len() != g.dim || v.len() != g.dim {
        return Err(Error::Parameter("dimension mismatch".into()));
    }
    if !g.is_regular(v) {
        return Err(Error::Domain("v is not regular".into()));
    }
    let n = g.order();
    let mut m = Mat::zero(n, n);
    for s in &g.reflections {
        let coef = &(&(&s.eps * &c[s.class]) * &pair(&s.root, y)) / &pair(&s.root, v);
        if coef.is_zero() {
            continue;
        }
        for w in 0..n {
            let sw = g.mul(s.element, w);
            let e = m.at(sw, w) + &coef;
            m.set(sw, w, e);
        }
    }
    Ok(m)
}

/// Right translation a ↦ a·w on the group algebra.
pub fn right_translation(g: &ReflectionGroup, w: usize) -> Mat {
    let n = g.order();
    let mut m = Mat::zero(n, n);
    for u in 0..n {
        m.set(g.mul(u, w), u, Cyclo::one());
    }
    m
}

/// One cellular character: multiplicity of every irreducible character.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellularCharacter {
    pub multiplicities: Vec<usize>,
    /// deg Π_i of the factor it came from.
    pub defect: usize,
    /// Dimension of the generalized eigenspace.
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct CellularResult {
    pub group: Arc<ReflectionGroup>,
    pub point: ParamPoint,
    pub y: Vec<Cyclo>,
    pub v: Vec<Cyclo>,
    pub attempts: usize,
    /// Irreducible factors of the characteristic polynomial with multiplicities.
    pub factors: Vec<(UPoly, usize)>,
    /// One entry per factor, in the same order.
    pub characters: Vec<CellularCharacter>,
}

impl CellularResult {
    /// The distinct cellular characters (as multiplicity vectors).
    pub fn character_set(&self) -> Vec<Vec<usize>> {
        let mut s: Vec<Vec<usize>> = self.characters.iter().map(|c| c.multiplicities.clone()).collect();
        s.sort();
        s.dedup();
        s
    }

    /// Σ_i deg(Π_i)·γ_i equals the regular character.
    pub fn verify_sum_identity(&self) -> bool {
        let chars = match self.group.characters() {
            Ok(c) => c,
            Err(_) => return false,
        };
        let mut total = vec![0usize; chars.len()];
        for c in &self.characters {
            for (t, m) in total.iter_mut().zip(&c.multiplicities) {
                *t += c.defect * m;
            }
        }
        total.iter().zip(chars).all(|(t, ch)| *t == ch.degree)
    }
}

struct Sample {
    y: Vec<Cyclo>,
    v: Vec<Cyclo>,
    d: Mat,
    charpoly: UPoly,
    sqfree_degree: usize,
}

fn draw(g: &ReflectionGroup, c: &[Cyclo], field: u32, rng: &mut ChaCha8Rng) -> Result<Sample> {
    let n = g.dim;
    // with a proper extension, y also gets a component along ζ_field
    let extra = field != g.conductor;
    // y regular as well: ⟨y, α_s⟩ = 0 would silently drop the s-term
    let y: Vec<Cyclo> = loop {
        let y: Vec<Cyclo> = (0..n)
            .map(|_| {
                let a = Cyclo::from_i64(rng.gen_range(-9..=9));
                if extra {
                    &a + &(&Cyclo::zeta(field, 1) * &Cyclo::from_i64(rng.gen_range(-3..=3)))
                } else {
                    a
                }
            })
            .collect();
        if g.is_regular(&y) {
            break y;
        }
    };
    let v = loop {
        let v: Vec<Cyclo> = (0..n).map(|_| Cyclo::from_i64(rng.gen_range(-9..=9))).collect();
        if g.is_regular(&v) {
            break v;
        }
    };
    let d = gaudin_matrix(g, c, &y, &v)?;
    let charpoly = d.charpoly()?;
    let sqfree_degree = charpoly.squarefree_part().degree().unwrap_or(0);
    Ok(Sample {
        y,
        v,
        d,
        charpoly,
        sqfree_degree,
    })
}

/// Keeps drawing until at least `MIN_DRAWS` samples were seen and the
/// largest number of distinct eigenvalues so far was attained twice. A draw
/// on the discriminant locus has fewer distinct eigenvalues, so it can only
/// win if every other draw is degenerate too.
fn generic_sample(g: &ReflectionGroup, c: &[Cyclo], seed: u64, field: u32) -> Result<(Sample, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = draw(g, c, field, &mut rng)?;
    let mut hits = 1;
    for attempt in 2..=RETRY_BUDGET {
        let s = draw(g, c, field, &mut rng)?;
        if s.sqfree_degree > best.sqfree_degree {
            best = s;
            hits = 1;
        } else if s.sqfree_degree == best.sqfree_degree {
            hits += 1;
        }
        if attempt >= MIN_DRAWS && hits >= 2 {
            return Ok((best, attempt));
        }
    }
    Err(Error::ResourceLimit(format!(
        "no generic Gaudin specialization found in {RETRY_BUDGET} attempts"
    )))
}

/// Basis matrix (columns) and the solve for coordinates: B·X = M·B.
fn restrict(basis: &[Vec<Cyclo>], m: &Mat) -> Mat {
    let k = basis.len();
    let n = m.rows();
    let b = Mat::from_rows((0..n).map(|i| basis.iter().map(|v| v[i].clone()).collect()).collect());
    // pivot rows of B give an invertible k×k minor
    let (_, rows) = b.transpose().rref();
    let minor = Mat::from_rows(rows.iter().map(|&i| b.row(i).to_vec()).collect());
    let minv = minor.inverse().expect("basis minor is invertible");
    let mb = m.mul(&b);
    let mbp = Mat::from_rows(rows.iter().map(|&i| mb.row(i).to_vec()).collect());
    let x = minv.mul(&mbp);
    debug_assert_eq!(x.rows(), k);
    x
}

fn multiplicity_of(chars_matrix: &[Cyclo], g: &ReflectionGroup, chi: usize) -> Result<Cyclo> {
    // (1/|W|) Σ_classes |C| Γ(rep) χ(rep⁻¹)
    let ch = &g.characters()?[chi];
    let mut acc = Cyclo::zero();
    for (k, class) in g.classes().iter().enumerate() {
        let w = class[0];
        let t = &(&chars_matrix[k] * &ch.values[g.inv(w)]) * &Cyclo::from_i64(class.len() as i64);
        acc += &t;
    }
    Ok(&acc * &Cyclo::from_i64(g.order() as i64).inv())
}

fn to_natural(c: &Cyclo) -> Result<usize> {
    let r = c
        .to_rational()
        .ok_or_else(|| Error::Domain("non-rational multiplicity".into()))?;
    usize::try_from(r).map_err(|_| Error::Domain(format!("non-integral multiplicity {r}")))
}

fn factorization(p: &UPoly, conductor: u32) -> Vec<(UPoly, usize)> {
    let sq = p.squarefree_part();
    let mut out = Vec::new();
    for (f, _) in factor_irreducible(&sq, conductor) {
        let mut mult = 0;
        let mut q = p.clone();
        loop {
            let (quo, rem) = q.divrem(&f);
            if !rem.is_zero() {
                break;
            }
            mult += 1;
            q = quo;
        }
        out.push((f, mult));
    }
    out
}

/// Cellular characters at a parameter point (regular representation mode).
pub fn cellular_characters(g: &Arc<ReflectionGroup>, p: &ParamPoint, seed: u64) -> Result<CellularResult> {
    cellular_characters_with(g, p, seed, &CellularOptions::default())
}

/// Same computation with scalars in Q(ζ_field); `field` must be a multiple
/// of the group's conductor. The answer does not depend on it.
pub fn cellular_characters_over(
    g: &Arc<ReflectionGroup>,
    p: &ParamPoint,
    seed: u64,
    field: u32,
) -> Result<CellularResult> {
    let opts = CellularOptions {
        field: Some(field),
        ..Default::default()
    };
    cellular_characters_with(g, p, seed, &opts)
}

#[derive(Clone, Debug, Default)]
pub struct CellularOptions {
    /// Conductor of the scalar field (defaults to the group's).
    pub field: Option<u32>,
    /// Worker threads for the per-factor kernels (0 or 1: sequential).
    pub jobs: usize,
}

pub fn cellular_characters_with(
    g: &Arc<ReflectionGroup>,
    p: &ParamPoint,
    seed: u64,
    opts: &CellularOptions,
) -> Result<CellularResult> {
    let field = opts.field.unwrap_or(g.conductor);
    if field == 0 || !field.is_multiple_of(g.conductor) {
        return Err(Error::Parameter(format!(
            "Q(ζ{field}) does not contain the field of {}",
            g.name
        )));
    }
    let nchars = g.characters()?.len();
    let (s, attempts) = generic_sample(g, &p.c, seed, field)?;
    let factors = factorization(&s.charpoly, field);
    let class_reps: Vec<usize> = g.classes().iter().map(|c| c[0]).collect();
    let rights: Vec<Mat> = class_reps.iter().map(|&w| right_translation(g, w)).collect();
    let one = |(f, mult): &(UPoly, usize)| -> Result<CellularCharacter> {
        let k = s.d.eval_poly(f).pow(*mult as u32);
        let basis = k.kernel_basis();
        let traces: Vec<Cyclo> = rights.iter().map(|r| restrict(&basis, r).trace()).collect();
        let deg = f.degree().unwrap();
        let mut mults = Vec::with_capacity(nchars);
        for chi in 0..nchars {
            let m = multiplicity_of(&traces, g, chi)?;
            let q = &m * &Cyclo::from_i64(deg as i64).inv();
            mults.push(to_natural(&q)?);
        }
        Ok(CellularCharacter {
            multiplicities: mults,
            defect: deg,
            dim: basis.len(),
        })
    };
    let characters = par_map(&factors, opts.jobs, one)?;
    Ok(CellularResult {
        group: g.clone(),
        point: p.clone(),
        y: s.y,
        v: s.v,
        attempts,
        factors,
        characters,
    })
}

/// Order-preserving map over up to `jobs` scoped threads.
fn par_map<T: Sync, U: Send, F>(items: &[T], jobs: usize, f: F) -> Result<Vec<U>>
where
    F: Fn(&T) -> Result<U> + Sync,
{
    if jobs <= 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    std::thread::scope(|sc| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| sc.spawn(|| c.iter().map(&f).collect::<Result<Vec<U>>>()))
            .collect();
        let mut out = Vec::with_capacity(items.len());
        for h in handles {
            out.extend(h.join().expect("worker panicked")?);
        }
        Ok(out)
    })
}

/// Multiplicity of χ in each cellular character, computed on the χ-isotypic
/// part of the group algebra only (same sample as the regular mode).
pub fn cellular_in_rep(g: &Arc<ReflectionGroup>, p: &ParamPoint, seed: u64, chi: usize) -> Result<Vec<usize>> {
    let chars = g.characters()?;
    let ch = chars
        .get(chi)
        .ok_or_else(|| Error::Parameter(format!("no character with index {chi}")))?;
    let (s, _) = generic_sample(g, &p.c, seed, g.conductor)?;
    let factors = factorization(&s.charpoly, g.conductor);
    // central idempotent e_χ = χ(1)/|W| Σ χ(w⁻¹) w; isotypic part = span{w·e_χ}
    let n = g.order();
    let scale = &Cyclo::from_i64(ch.degree as i64) * &Cyclo::from_i64(n as i64).inv();
    let mut ech = cherednik_exact::Echelon::new();
    let mut basis: Vec<Vec<Cyclo>> = Vec::new();
    for w in 0..n {
        let mut v = vec![Cyclo::zero(); n];
        for u in 0..n {
            let c = &ch.values[g.inv(u)] * &scale;
            v[g.mul(w, u)] = c;
        }
        let key: std::collections::BTreeMap<usize, Cyclo> =
            v.iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if ech.insert(&key) {
            basis.push(v);
        }
        if basis.len() == ch.degree * ch.degree {
            break;
        }
    }
    let x = restrict(&basis, &s.d);
    let mut out = Vec::with_capacity(factors.len());
    for (f, mult) in &factors {
        let dim = x.eval_poly(f).pow(*mult as u32).kernel_basis().len();
        let den = ch.degree * f.degree().unwrap();
        if !dim.is_multiple_of(den) {
            return Err(Error::Domain("non-integral multiplicity".into()));
        }
        out.push(dim / den);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu2_matrix() {
        let g = ReflectionGroup::builtin("mu2").unwrap();
        let one = vec![Cyclo::one()];
        let m = gaudin_matrix(&g, &one, &one, &one).unwrap();
        assert_eq!(m, Mat::from_i64(&[&[0, -1], &[-1, 0]]));
        let z = gaudin_matrix(&g, &[Cyclo::zero()], &one, &one).unwrap();
        assert!(z.is_zero());
        assert!(gaudin_matrix(&g, &one, &one, &[Cyclo::zero()]).is_err());
    }

    #[test]
    fn mu2_cells() {
        let g = ReflectionGroup::builtin("mu2").unwrap();
        let p = ParamPoint::parse(&g, "c=1").unwrap();
        let r = cellular_characters(&g, &p, 0).unwrap();
        assert_eq!(r.character_set(), vec![vec![0, 1], vec![1, 0]]);
        assert!(r.verify_sum_identity());
        let z = cellular_characters(&g, &ParamPoint::zero(&g), 0).unwrap();
        assert_eq!(z.character_set(), vec![vec![1, 1]]);
        assert!(z.verify_sum_identity());
    }

    #[test]
    fn b2_equal_parameters() {
        let g = ReflectionGroup::builtin("B2").unwrap();
        let p = ParamPoint::parse(&g, "k1=1,k2=1").unwrap();
        let r = cellular_characters(&g, &p, 7).unwrap();
        assert!(r.verify_sum_identity());
        // 1a, 1d alone; 1b and 1c each glued to 2a
        assert_eq!(
            r.character_set(),
            vec![vec![0, 0, 0, 1, 0], vec![0, 0, 1, 0, 1], vec![0, 1, 0, 0, 1], vec![1, 0, 0, 0, 0]]
        );
        let rep = cellular_in_rep(&g, &p, 7, 4).unwrap();
        let regular: Vec<usize> = r.characters.iter().map(|c| c.multiplicities[4]).collect();
        assert_eq!(rep, regular);
        let ext = cellular_characters_over(&g, &p, 7, 3).unwrap();
        let par = cellular_characters_with(&g, &p, 7, &CellularOptions { field: None, jobs: 3 }).unwrap();
        assert_eq!(par.characters, r.characters);
        assert_eq!(ext.character_set(), r.character_set());
        assert!(cellular_characters_over(&g, &p, 7, 0).is_err());
    }

    #[test]
    fn commutes_with_right_translation() {
        let g = ReflectionGroup::builtin("B2").unwrap();
        let c = vec![Cyclo::from_i64(1), Cyclo::from_i64(3)];
        let y = vec![Cyclo::from_i64(2), Cyclo::from_i64(-1)];
        let v = g.regular_vector(5);
        let d = gaudin_matrix(&g, &c, &y, &v).unwrap();
        for w in 0..g.order() {
            let r = right_translation(&g, w);
            assert_eq!(d.mul(&r), r.mul(&d));
        }
    }
}
