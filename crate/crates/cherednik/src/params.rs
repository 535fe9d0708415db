//! Parameter points and linear forms in the C and K coordinate systems.

use cherednik_exact::{parse_cyclo, Cyclo, MPoly};

use crate::error::{Error, Result};
use crate::reflection::ReflectionGroup;

/// A parameter point, stored in both coordinate systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoint {
    pub c: Vec<Cyclo>,
    pub k: Vec<Cyclo>,
}

impl ParamPoint {
    pub fn from_c(g: &ReflectionGroup, c: Vec<Cyclo>) -> ParamPoint {
        let k = g.c_point_to_k(&c);
        ParamPoint { c, k }
    }

    pub fn from_k(g: &ReflectionGroup, k: Vec<Cyclo>) -> ParamPoint {
        let c = g.k_point_to_c(&k);
        ParamPoint { c, k }
    }

    pub fn zero(g: &ReflectionGroup) -> ParamPoint {
        ParamPoint::from_c(g, vec![Cyclo::zero(); g.num_params()])
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Parses `name=value,...`.
    ///
    /// Accepted names: `C1`.., `K1_1`.. (full names), `k1`, `k2`, .. (K basis in
    /// order), `a`, `b`, .. (C1, C2, ..) and `c` (every C_s, or C1 when r = 1).
    /// C and K names cannot be mixed; unset coordinates are 0.
    pub fn parse(g: &ReflectionGroup, s: &str) -> Result<ParamPoint> {
        let r = g.num_params();
        let c_names = g.c_names();
        let k_names = g.k_names();
        let mut c = vec![None; r];
        let mut k = vec![None; r];
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (name, val) = item
                .split_once('=')
                .ok_or_else(|| Error::Parameter(format!("expected name=value, got '{item}'")))?;
            let name = name.trim();
            let v = parse_cyclo(val.trim())
                .map_err(|e| Error::Parameter(format!("bad value for {name}: {e}")))?;
            let (slots, idx): (&mut Vec<Option<Cyclo>>, Vec<usize>) =
                if let Some(i) = c_names.iter().position(|n| n == name) {
                    (&mut c, vec![i])
                } else if let Some(i) = k_names.iter().position(|n| n == name) {
                    (&mut k, vec![i])
                } else if name == "c" {
                    (&mut c, (0..r).collect())
                } else if let Some(i) = name
                    .strip_prefix('k')
                    .and_then(|t| t.parse::<usize>().ok())
                    .filter(|&i| i >= 1 && i <= r)
                {
                    (&mut k, vec![i - 1])
                } else if name.len() == 1
                    && name.as_bytes()[0].is_ascii_lowercase()
                    && ((name.as_bytes()[0] - b'a') as usize) < r
                {
                    (&mut c, vec![(name.as_bytes()[0] - b'a') as usize])
                } else {
                    return Err(Error::Parameter(format!(
                        "unknown parameter '{name}' for {} (expected one of {} / {})",
                        g.name,
                        c_names.join(","),
                        k_names.join(",")
                    )));
                };
            for i in idx {
                slots[i] = Some(v.clone());
            }
        }
        let any_c = c.iter().any(Option::is_some);
        let any_k = k.iter().any(Option::is_some);
        if any_c && any_k {
            return Err(Error::Parameter("cannot mix C and K coordinates".into()));
        }
        let fill = |v: Vec<Option<Cyclo>>| v.into_iter().map(|x| x.unwrap_or_else(Cyclo::zero)).collect();
        Ok(if any_k {
            ParamPoint::from_k(g, fill(k))
        } else {
            ParamPoint::from_c(g, fill(c))
        })
    }
}

/// Scales a nonzero linear form to a primitive integer vector with first
/// nonzero entry positive (or first nonzero entry 1 if not rational).
pub fn normalize_form(v: &[Cyclo]) -> Vec<Cyclo> {
    let Some(first) = v.iter().find(|x| !x.is_zero()) else {
        return v.to_vec();
    };
    let p = MPoly::from_terms(
        &cherednik_exact::Ring::plain(&(0..v.len()).map(|_| "v").collect::<Vec<_>>()),
        v.iter()
            .enumerate()
            .map(|(i, c)| (cherednik_exact::Mono::var(i), c.clone()))
            .collect(),
    );
    if let Some(q) = p.primitive_rational() {
        let mut out: Vec<Cyclo> = (0..v.len())
            .map(|i| q.coeff(cherednik_exact::Mono::var(i)))
            .collect();
        let lead = out.iter().find(|x| !x.is_zero()).unwrap();
        if lead.to_rational().map(|r| *r < 0u32).unwrap_or(false) {
            out = out.iter().map(|x| -x.clone()).collect();
        }
        out
    } else {
        let inv = first.inv();
        v.iter().map(|x| x * &inv).collect()
    }
}

/// Parses a linear form in the K (or C) variables given by name.
pub fn parse_form(g: &ReflectionGroup, s: &str) -> Result<Vec<Cyclo>> {
    let kr = g.k_ring();
    let p = MPoly::parse(&kr, s)
        .or_else(|_| {
            MPoly::parse(&g.c_ring(), s).map(|q| {
                // rewrite a C-form in K coordinates
                g.c_poly_to_k(&q, &kr)
            })
        })
        .map_err(|e| Error::Parameter(format!("cannot parse hyperplane '{s}': {e}")))?;
    if p.total_degree() != Some(1) || !p.constant_term().is_zero() {
        return Err(Error::Parameter(format!("'{s}' is not a homogeneous linear form")));
    }
    Ok((0..kr.nvars())
        .map(|i| p.coeff(cherednik_exact::Mono::var(i)))
        .collect())
}

/// Renders a K-form with the group's variable names.
pub fn form_to_string(g: &ReflectionGroup, v: &[Cyclo]) -> String {
    let kr = g.k_ring();
    MPoly::from_terms(
        &kr,
        v.iter()
            .enumerate()
            .map(|(i, c)| (cherednik_exact::Mono::var(i), c.clone()))
            .collect(),
    )
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_points() {
        let g = ReflectionGroup::builtin("B2").unwrap();
        let p = ParamPoint::parse(&g, "k1=1,k2=1").unwrap();
        assert_eq!(p.k, vec![Cyclo::one(), Cyclo::one()]);
        let q = ParamPoint::parse(&g, "a=2,b=2").unwrap();
        assert_eq!(q.c, vec![Cyclo::from_i64(2), Cyclo::from_i64(2)]);
        assert_eq!(p, q);
        assert!(ParamPoint::parse(&g, "k1=1,a=1").is_err());
        assert!(ParamPoint::parse(&g, "zz=1").is_err());
        let m = ReflectionGroup::builtin("mu2").unwrap();
        let c = ParamPoint::parse(&m, "c=1").unwrap();
        assert_eq!(c.c, vec![Cyclo::one()]);
    }

    #[test]
    fn forms() {
        let g = ReflectionGroup::builtin("B2").unwrap();
        let f = parse_form(&g, "K1_1-K2_1").unwrap();
        assert_eq!(form_to_string(&g, &f), "K1_1 - K2_1");
        let n = normalize_form(&[Cyclo::frac(-1, 2), Cyclo::frac(1, 3)]);
        assert_eq!(n, vec![Cyclo::from_i64(3), Cyclo::from_i64(-2)]);
    }
}
