//! Command-line front end: configuration, dispatch, caching and JSON output.
//!
//! The `cherednik` binary only parses flags into a [`RunConfig`] and calls
//! [`run`]; everything else lives here so it can be tested directly.

pub mod cache;
pub mod output;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use cherednik_exact::groebner::GbOptions;
use cherednik_exact::{factor_rational, Cyclo, Rational, UPoly};
use serde::Serialize;

use crate::arrangement::{self, RealArrangement};
use crate::cells::{self, CellularOptions};
use crate::center::Center;
use crate::error::{Error, Result};
use crate::families::{Families, FamilyPartition, RouquierData};
use crate::params::{form_to_string, normalize_form, parse_form, ParamPoint};
use crate::reflection::{GroupSpec, ReflectionGroup};

pub use cache::Cache;
use output::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    GroupInfo,
    CenterGenerators,
    Presentation,
    PoissonMatrix,
    Families,
    Hyperplanes,
    Cuspidal,
    Cellular,
    Arrangement,
    Martino,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::GroupInfo,
        Command::CenterGenerators,
        Command::Presentation,
        Command::PoissonMatrix,
        Command::Families,
        Command::Hyperplanes,
        Command::Cuspidal,
        Command::Cellular,
        Command::Arrangement,
        Command::Martino,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::GroupInfo => "group-info",
            Command::CenterGenerators => "center-generators",
            Command::Presentation => "presentation",
            Command::PoissonMatrix => "poisson-matrix",
            Command::Families => "families",
            Command::Hyperplanes => "hyperplanes",
            Command::Cuspidal => "cuspidal",
            Command::Cellular => "cellular",
            Command::Arrangement => "arrangement",
            Command::Martino => "martino",
        }
    }
}

impl FromStr for Command {
    type Err = Error;
    fn from_str(s: &str) -> Result<Command> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown command '{s}'")))
    }
}

/// Everything a single invocation needs.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    /// Shipped group name or path to a group file.
    pub group: Option<String>,
    pub at: Option<String>,
    pub hyperplane: Option<String>,
    pub generic: bool,
    pub seed: u64,
    pub bound: Option<u32>,
    /// Character label or 1-based index.
    pub rep: Option<String>,
    pub file: Option<PathBuf>,
    pub from_group: Option<String>,
    pub rouquier_file: Option<PathBuf>,
    pub max_pairs: Option<usize>,
    pub max_degree: Option<u32>,
    pub jobs: usize,
    pub cache: Option<Cache>,
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig {
            command,
            group: None,
            at: None,
            hyperplane: None,
            generic: false,
            seed: 0,
            bound: None,
            rep: None,
            file: None,
            from_group: None,
            rouquier_file: None,
            max_pairs: None,
            max_degree: None,
            jobs: 1,
            cache: None,
        }
    }

    pub fn group(mut self, g: &str) -> RunConfig {
        self.group = Some(g.to_string());
        self
    }

    pub fn at(mut self, p: &str) -> RunConfig {
        self.at = Some(p.to_string());
        self
    }
}

/// Loads a group by shipped name, or from a JSON file if `name` is a path.
pub fn load_group(name: &str) -> Result<Arc<ReflectionGroup>> {
    let spec = match GroupSpec::builtin(name) {
        Ok(s) => s,
        Err(Error::GroupNotFound(_)) if std::path::Path::new(name).is_file() => {
            let text = std::fs::read_to_string(name)
                .map_err(|e| Error::InvalidGroup(format!("{name}: {e}")))?;
            GroupSpec::from_json(&text)?
        }
        Err(e) => return Err(e),
    };
    Ok(Arc::new(ReflectionGroup::build(spec)?))
}

pub fn group_hash(g: &ReflectionGroup) -> String {
    cache::sha256_hex(g.spec.to_json().as_bytes())
}

fn read_file(p: &PathBuf) -> Result<String> {
    std::fs::read_to_string(p).map_err(|e| Error::Parameter(format!("{}: {e}", p.display())))
}

/// State shared by the commands of one run.
struct Ctx {
    cfg: RunConfig,
    group: Option<Arc<ReflectionGroup>>,
    params: BTreeMap<String, String>,
}

impl Ctx {
    fn group(&self) -> Result<&Arc<ReflectionGroup>> {
        self.group
            .as_ref()
            .ok_or_else(|| Error::Parameter(format!("{} needs --group", self.cfg.command.name())))
    }

    fn point(&self) -> Result<ParamPoint> {
        let at = self
            .cfg
            .at
            .as_deref()
            .ok_or_else(|| Error::Parameter(format!("{} needs --at", self.cfg.command.name())))?;
        ParamPoint::parse(self.group()?, at)
    }

    fn center(&self) -> Result<Arc<Center>> {
        Ok(Arc::new(Center::new(self.group()?.clone(), 0, self.cfg.bound)?))
    }

    fn families(&self) -> Result<Families> {
        Families::new(self.center()?)
    }

    fn gb_options(&self) -> GbOptions {
        GbOptions {
            max_degree: self.cfg.max_degree,
            max_pairs: self.cfg.max_pairs,
        }
    }

    fn rep_index(&self) -> Result<Option<usize>> {
        let Some(r) = &self.cfg.rep else { return Ok(None) };
        let g = self.group()?;
        if let Some(i) = g.character_index(r) {
            return Ok(Some(i));
        }
        let n = g.characters()?.len();
        match r.parse::<usize>() {
            Ok(i) if i >= 1 && i <= n => Ok(Some(i - 1)),
            _ => Err(Error::Parameter(format!("no character '{r}'"))),
        }
    }
}

fn point_string(names: &[String], v: &[Cyclo]) -> String {
    names
        .iter()
        .zip(v)
        .map(|(n, x)| format!("{n}={x}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn point_out(g: &ReflectionGroup, p: &ParamPoint) -> PointOut {
    let m = |names: Vec<String>, v: &[Cyclo]| names.into_iter().zip(v).map(|(n, x)| (n, x.to_string())).collect();
    PointOut {
        c: m(g.c_names(), &p.c),
        k: m(g.k_names(), &p.k),
    }
}

/// Canonical parameters: what the output depends on besides group and seed.
fn canonical_params(cfg: &RunConfig, g: Option<&Arc<ReflectionGroup>>) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    let cmd = cfg.command;
    let uses_center = !matches!(cmd, Command::GroupInfo | Command::Cellular | Command::Arrangement);
    if uses_center {
        if let Some(b) = cfg.bound {
            out.insert("bound".into(), b.to_string());
        }
    }
    if let (Some(at), Some(g)) = (&cfg.at, g) {
        if matches!(cmd, Command::Families | Command::Cuspidal | Command::Cellular) {
            let p = ParamPoint::parse(g, at)?;
            out.insert("at".into(), point_string(&g.c_names(), &p.c));
        }
    }
    if let (Some(h), Some(g)) = (&cfg.hyperplane, g) {
        if cmd == Command::Families {
            out.insert("hyperplane".into(), form_to_string(g, &normalize_form(&parse_form(g, h)?)));
        }
    }
    if cmd == Command::Presentation {
        if let Some(m) = cfg.max_pairs {
            out.insert("max_pairs".into(), m.to_string());
        }
        if let Some(m) = cfg.max_degree {
            out.insert("max_degree".into(), m.to_string());
        }
    }
    if cmd == Command::Cellular {
        if let Some(r) = &cfg.rep {
            out.insert("rep".into(), r.clone());
        }
    }
    if cmd == Command::Arrangement {
        if let Some(f) = &cfg.file {
            out.insert("file".into(), cache::sha256_hex(read_file(f)?.as_bytes()));
        }
        if let Some(fg) = &cfg.from_group {
            out.insert("from_group".into(), group_hash(&*load_group(fg)?));
        }
    }
    if cmd == Command::Martino {
        if let Some(f) = &cfg.rouquier_file {
            out.insert("rouquier".into(), cache::sha256_hex(read_file(f)?.as_bytes()));
        }
    }
    Ok(out)
}

fn to_doc<T: Serialize>(meta: Meta, result: T) -> String {
    let mut s = serde_json::to_string_pretty(&Document { meta, result }).expect("serializable");
    s.push('\n');
    s
}

/// Runs a command and returns its JSON document, using the cache if configured.
pub fn run(cfg: RunConfig) -> Result<String> {
    let group = match &cfg.group {
        Some(name) if !(cfg.command == Command::Arrangement && arrangement::builtin(name).is_ok()) => {
            Some(load_group(name)?)
        }
        _ => None,
    };
    let params = canonical_params(&cfg, group.as_ref())?;
    let ghash = group.as_ref().map(|g| group_hash(g));
    let meta = Meta {
        command: cfg.command.name().to_string(),
        group: group.as_ref().map(|g| g.name.clone()).or_else(|| cfg.group.clone()),
        group_hash: ghash.clone(),
        seed: cfg.seed,
        params: params.clone(),
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    let key = cache::sha256_hex(
        serde_json::to_string(&(&meta.group, &ghash, &meta.command, &params, cfg.seed))
            .expect("serializable")
            .as_bytes(),
    );
    if let Some(c) = &cfg.cache {
        if let Some(hit) = c.get(&key) {
            return Ok(hit);
        }
    }
    let cache = cfg.cache.clone();
    let ctx = Ctx { cfg, group, params };
    let text = execute(&ctx, meta)?;
    if let Some(c) = cache {
        // a failed cache write does not invalidate the result
        if let Err(e) = c.put(&key, &text) {
            eprintln!("warning: cache write failed: {e}");
        }
    }
    Ok(text)
}

fn execute(ctx: &Ctx, meta: Meta) -> Result<String> {
    let _ = &ctx.params;
    Ok(match ctx.cfg.command {
        Command::GroupInfo => to_doc(meta, group_info(ctx.group()?)?),
        Command::CenterGenerators => to_doc(meta, center_generators(&*ctx.center()?)),
        Command::Presentation => {
            let c = ctx.center()?;
            let p = c.presentation(&ctx.gb_options())?;
            to_doc(
                meta,
                PresentationOut {
                    variables: ring_names(&c),
                    bidegrees: p.bidegrees.iter().map(|&(a, b)| [a, b]).collect(),
                    relations: p.relations.iter().map(|r| r.to_string()).collect(),
                },
            )
        }
        Command::PoissonMatrix => {
            let c = ctx.center()?;
            let m = c.poisson_matrix()?;
            to_doc(
                meta,
                PoissonOut {
                    variables: ring_names(&c),
                    matrix: m.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect(),
                },
            )
        }
        Command::Families => {
            let g = ctx.group()?.clone();
            let f = ctx.families()?;
            let (locus, part) = if let Some(h) = &ctx.cfg.hyperplane {
                let form = normalize_form(&parse_form(&g, h)?);
                (Locus::Hyperplane(form_to_string(&g, &form)), f.families_on_hyperplane(&form)?)
            } else if ctx.cfg.at.is_some() && !ctx.cfg.generic {
                let p = ctx.point()?;
                (Locus::Point(point_out(&g, &p)), f.families_at_point(&p)?)
            } else {
                (Locus::Generic, f.generic.clone())
            };
            to_doc(
                meta,
                FamiliesOut {
                    locus,
                    families: part.labels(&g)?,
                },
            )
        }
        Command::Hyperplanes => {
            let g = ctx.group()?.clone();
            let f = ctx.families()?;
            let hyperplanes = f
                .hyperplanes
                .iter()
                .map(|h| {
                    Ok(HyperplaneOut {
                        form: form_to_string(&g, &h.coeffs),
                        families: h.families.labels(&g)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            to_doc(
                meta,
                HyperplanesOut {
                    generic: f.generic.labels(&g)?,
                    hyperplanes,
                },
            )
        }
        Command::Cuspidal => {
            let g = ctx.group()?.clone();
            let p = ctx.point()?;
            let f = ctx.families()?;
            let pm = f.center.poisson_matrix()?;
            let cusp = f.cuspidal_families(&p, &pm)?;
            to_doc(
                meta,
                CuspidalOut {
                    point: point_out(&g, &p),
                    families: f.families_at_point(&p)?.labels(&g)?,
                    cuspidal: FamilyPartition { parts: cusp }.labels(&g)?,
                },
            )
        }
        Command::Cellular => to_doc(meta, cellular(ctx)?),
        Command::Arrangement => to_doc(meta, arrangement_cmd(ctx)?),
        Command::Martino => {
            let path = ctx
                .cfg
                .rouquier_file
                .as_ref()
                .ok_or_else(|| Error::Parameter("martino needs --rouquier-file".into()))?;
            let data: RouquierData = serde_json::from_str(&read_file(path)?)
                .map_err(|e| Error::Parameter(format!("Rouquier file: {e}")))?;
            to_doc(meta, ctx.families()?.martino(&data)?)
        }
    })
}

fn ring_names(c: &Center) -> Vec<String> {
    (0..c.zring.nvars()).map(|i| c.zring.name(i).to_string()).collect()
}

fn group_info(g: &ReflectionGroup) -> Result<GroupInfo> {
    Ok(GroupInfo {
        name: g.name.clone(),
        order: g.order(),
        dim: g.dim,
        conductor: g.conductor,
        reflections: g.reflections.len(),
        classes: g
            .classes()
            .iter()
            .map(|c| ClassInfo {
                size: c.len(),
                representative: g.word(c[0]).to_vec(),
            })
            .collect(),
        characters: g
            .characters()?
            .iter()
            .map(|c| CharacterInfo {
                label: c.label.clone(),
                degree: c.degree,
            })
            .collect(),
        orbits: g
            .orbits
            .iter()
            .map(|o| OrbitInfo {
                hyperplanes: o.hyperplanes.len(),
                order: o.order,
            })
            .collect(),
        c_names: g.c_names(),
        k_names: g.k_names(),
    })
}

fn center_generators(c: &Center) -> CenterGenerators {
    let g = c.group();
    let zdeg = c.invariants.z_degrees();
    let generators = c
        .gens
        .iter()
        .enumerate()
        .map(|(i, z)| {
            let (d, e) = c.invariants.bidegrees[i];
            GeneratorInfo {
                name: format!("z{}", i + 1),
                bidegree: [d, e],
                z_degree: zdeg[i],
                invariant: c.invariants.gens[i].to_string(),
                element: z
                    .support()
                    .map(|(w, h)| PbwTerm {
                        element: g.word(w).to_vec(),
                        coefficient: h.to_string(),
                    })
                    .collect(),
            }
        })
        .collect();
    let ring = c.alg.ring();
    CenterGenerators {
        variables: (0..ring.nvars()).map(|i| ring.name(i).to_string()).collect(),
        generators,
    }
}

fn cellular(ctx: &Ctx) -> Result<CellularOut> {
    let g = ctx.group()?.clone();
    let p = ctx.point()?;
    let opts = CellularOptions {
        field: None,
        jobs: ctx.cfg.jobs,
    };
    let r = cells::cellular_characters_with(&g, &p, ctx.cfg.seed, &opts)?;
    let chars = g.characters()?;
    let characters = r
        .characters
        .iter()
        .zip(&r.factors)
        .map(|(c, (f, _))| CellularCharOut {
            multiplicities: c
                .multiplicities
                .iter()
                .enumerate()
                .filter(|(_, m)| **m > 0)
                .map(|(i, m)| (chars[i].label.clone(), *m))
                .collect(),
            defect: c.defect,
            dim: c.dim,
            factor: f.to_string_var("t"),
        })
        .collect();
    let rep = match ctx.rep_index()? {
        None => None,
        Some(chi) => {
            let m = cells::cellular_in_rep(&g, &p, ctx.cfg.seed, chi)?;
            let agrees = m
                .iter()
                .zip(&r.characters)
                .all(|(a, c)| *a == c.multiplicities[chi]);
            Some(RepOut {
                character: chars[chi].label.clone(),
                multiplicities: m,
                agrees,
            })
        }
    };
    Ok(CellularOut {
        point: point_out(&g, &p),
        y: r.y.iter().map(|x| x.to_string()).collect(),
        v: r.v.iter().map(|x| x.to_string()).collect(),
        attempts: r.attempts,
        sum_identity: r.verify_sum_identity(),
        characters,
        rep,
    })
}

fn arrangement_cmd(ctx: &Ctx) -> Result<ArrangementOut> {
    let cfg = &ctx.cfg;
    let (source, arr) = if let Some(f) = &cfg.file {
        (f.display().to_string(), RealArrangement::from_json(&read_file(f)?)?)
    } else if let Some(name) = &cfg.from_group {
        let g = load_group(name)?;
        let fam = Families::new(Arc::new(Center::new(g.clone(), 0, None)?))?;
        (format!("families of {}", g.name), RealArrangement::from_families(&fam)?)
    } else if let Some(name) = &cfg.group {
        (format!("data file {name}"), arrangement::builtin(name)?)
    } else {
        return Err(Error::Parameter("arrangement needs --file, --from-group or --group".into()));
    };
    let poincare = arr.poincare_polynomial();
    Ok(ArrangementOut {
        source,
        dim: arr.dim,
        orbit_orders: arr.orbit_orders.clone(),
        forms: arr
            .forms
            .iter()
            .map(|f| f.iter().map(|r| r.to_string()).collect())
            .collect(),
        poincare_factored: factored_string(&poincare),
        chambers: arr.chamber_count(),
        chambers_by_signs: (arr.dim <= 3).then(|| arr.chamber_count_by_signs()).transpose()?,
        qft: if arr.orbit_orders.is_empty() {
            None
        } else {
            Some(arr.qft_count()?)
        },
        poincare,
    })
}

/// Integer polynomial in t as a product of primitive irreducible factors.
pub fn factored_string(coeffs: &[u64]) -> String {
    let p = UPoly::new(coeffs.iter().map(|&c| Cyclo::from(Rational::from(c))).collect());
    if p.degree().unwrap_or(0) == 0 {
        return p.to_string_var("t");
    }
    let mut unit = p.lc();
    let mut parts = Vec::new();
    for (f, e) in factor_rational(&p) {
        let prim = UPoly::new(normalize_form(f.coeffs()));
        unit = &unit * &prim.lc().pow(e as u32).inv();
        let s = format!("({})", prim.to_string_var("t"));
        parts.push(if e > 1 { format!("{s}^{e}") } else { s });
    }
    parts.sort();
    let body = parts.join("");
    if unit.is_one() {
        body
    } else {
        format!("{unit}{body}")
    }
}
