//! The command-line front end: document shapes, caching and exit codes.

use std::path::PathBuf;
use std::process::Command as Process;

use cherednik::cli::output::*;
use cherednik::cli::{run, Cache, Command, RunConfig};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn doc<T: DeserializeOwned + Serialize>(text: &str) -> Document<T> {
    let d: Document<T> = serde_json::from_str(text).unwrap();
    // documents survive a round trip unchanged
    let mut again = serde_json::to_string_pretty(&d).unwrap();
    again.push('\n');
    assert_eq!(again, text);
    d
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(name)
}

fn temp_dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("cherednik-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    d
}

#[test]
fn group_info_b2() {
    let d: Document<GroupInfo> = doc(&run(RunConfig::new(Command::GroupInfo).group("B2")).unwrap());
    assert_eq!(d.meta.command, "group-info");
    assert_eq!(d.result.order, 8);
    assert_eq!(d.result.characters.len(), 5);
    assert_eq!(d.result.classes.iter().map(|c| c.size).sum::<usize>(), 8);
    assert_eq!(d.result.orbits.len(), 2);
}

#[test]
fn center_commands_mu2() {
    let g = |c| RunConfig::new(c).group("mu2");
    let d: Document<CenterGenerators> = doc(&run(g(Command::CenterGenerators)).unwrap());
    assert_eq!(d.result.generators.len(), 3);
    let d: Document<PresentationOut> = doc(&run(g(Command::Presentation)).unwrap());
    assert_eq!(d.result.relations.len(), 1);
    let d: Document<PoissonOut> = doc(&run(g(Command::PoissonMatrix)).unwrap());
    assert_eq!(d.result.matrix.len(), 3);
    for (i, row) in d.result.matrix.iter().enumerate() {
        assert_eq!(row[i], "0");
    }
}

#[test]
fn families_commands_b2() {
    let g = |c| RunConfig::new(c).group("B2");
    let d: Document<FamiliesOut> = doc(&run(g(Command::Families)).unwrap());
    assert_eq!(d.result.locus, Locus::Generic);
    assert_eq!(d.result.families.len(), 5);

    let mut cfg = g(Command::Families);
    cfg.hyperplane = Some("K1_1 - K2_1".into());
    let d: Document<FamiliesOut> = doc(&run(cfg).unwrap());
    let mut sizes: Vec<_> = d.result.families.iter().map(|f| f.len()).collect();
    sizes.sort();
    assert_eq!(sizes, [1, 1, 3]);

    let d: Document<HyperplanesOut> = doc(&run(g(Command::Hyperplanes)).unwrap());
    assert_eq!(d.result.hyperplanes.len(), 4);

    let d: Document<CuspidalOut> = doc(&run(g(Command::Cuspidal).at("k1=1,k2=1")).unwrap());
    for f in &d.result.cuspidal {
        assert!(d.result.families.contains(f));
    }
    assert!(run(g(Command::Cuspidal).at("k1=0,k2=0")).is_err());

    let mut cfg = g(Command::Martino);
    cfg.rouquier_file = Some(data("examples/data/rouquier_B2.json"));
    let d: Document<MartinoOut> = doc(&run(cfg).unwrap());
    assert!(d.result.holds);
}

#[test]
fn cellular_mu2() {
    let d: Document<CellularOut> = doc(&run(RunConfig::new(Command::Cellular).group("mu2").at("c=1")).unwrap());
    assert!(d.result.sum_identity);
    assert_eq!(d.result.characters.len(), 2);
    for c in &d.result.characters {
        assert_eq!(c.multiplicities.values().sum::<usize>(), 1);
    }
}

#[test]
fn cellular_rep_mode() {
    let mut cfg = RunConfig::new(Command::Cellular).group("B2").at("k1=1,k2=1");
    cfg.rep = Some("2a".into());
    let d: Document<CellularOut> = doc(&run(cfg).unwrap());
    assert!(d.result.rep.unwrap().agrees);
}

#[test]
fn arrangement_sources() {
    let d: Document<ArrangementOut> = doc(&run(RunConfig::new(Command::Arrangement).group("G28")).unwrap());
    assert_eq!(d.result.poincare_factored, "(7*t + 1)(t + 1)");
    assert_eq!(d.result.qft, Some(4));

    let mut cfg = RunConfig::new(Command::Arrangement);
    cfg.file = Some(data("arrangements/G4.json"));
    let d: Document<ArrangementOut> = doc(&run(cfg).unwrap());
    assert_eq!(d.result.chambers, 12);
    assert_eq!(d.result.chambers_by_signs, Some(12));

    let mut cfg = RunConfig::new(Command::Arrangement);
    cfg.from_group = Some("B2".into());
    let d: Document<ArrangementOut> = doc(&run(cfg).unwrap());
    assert_eq!(d.result.chambers, 8);
}

#[test]
fn equivalent_points_share_cache_entry() {
    let dir = temp_dir("points");
    let cache = Cache::new(&dir);
    let mut a = RunConfig::new(Command::Families).group("B2").at("k1=1,k2=1");
    a.cache = Some(cache.clone());
    let first = run(a.clone()).unwrap();
    let b = RunConfig { at: Some("a=2,b=2".into()), ..a.clone() };
    let again = run(b).unwrap();
    assert_eq!(first, again);
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cached_output_is_identical() {
    let dir = temp_dir("ident");
    let mut cfg = RunConfig::new(Command::Hyperplanes).group("B2");
    cfg.cache = Some(Cache::new(&dir));
    let fresh = run(RunConfig { cache: None, ..cfg.clone() }).unwrap();
    let stored = run(cfg.clone()).unwrap();
    let hit = run(cfg).unwrap();
    assert_eq!(fresh, stored);
    assert_eq!(stored, hit);
    let files: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    assert_eq!(std::fs::read_to_string(&files[0]).unwrap(), fresh);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn domain_errors() {
    assert!(run(RunConfig::new(Command::GroupInfo).group("nonexistent")).is_err());
    assert!(run(RunConfig::new(Command::Cellular).group("B2")).is_err());
    assert!(run(RunConfig::new(Command::Cellular).group("B2").at("q=1")).is_err());
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_cherednik"))
        .args(args)
        .env_remove("CHEREDNIK_CACHE")
        .output()
        .unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn binary_exit_codes() {
    let (code, out) = bin(&["group-info", "--group", "nonexistent"]);
    assert_eq!(code, 1);
    let e: ErrorOut = serde_json::from_str(&out).unwrap();
    assert_eq!(e.error, "group not found");

    let (code, out) = bin(&["presentation", "--group", "B2", "--max-pairs", "3"]);
    assert_eq!(code, 2);
    let _: ErrorOut = serde_json::from_str(&out).unwrap();

    let (code, out) = bin(&["hyperplanes", "--group", "B2"]);
    assert_eq!(code, 0);
    let d: Document<HyperplanesOut> = serde_json::from_str(&out).unwrap();
    let forms: Vec<_> = d.result.hyperplanes.iter().map(|h| h.form.as_str()).collect();
    assert_eq!(forms.len(), 4);

    let (code, out) = bin(&["cellular", "--group", "mu2", "--at", "c=1"]);
    assert_eq!(code, 0);
    let d: Document<CellularOut> = serde_json::from_str(&out).unwrap();
    assert_eq!(d.result.characters.len(), 2);
}

#[test]
fn binary_uses_cache_env() {
    let dir = temp_dir("env");
    let run = || {
        Process::new(env!("CARGO_BIN_EXE_cherednik"))
            .args(["families", "--group", "B2", "--at", "k1=1,k2=0"])
            .env("CHEREDNIK_CACHE", &dir)
            .output()
            .unwrap()
    };
    let a = run();
    let b = run();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
