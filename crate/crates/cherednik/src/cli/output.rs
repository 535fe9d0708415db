//! JSON documents produced by the command-line front end.
//!
//! Every document is `{"meta": .., "result": ..}`; the shapes are described in
//! docs/formats.md. All numbers that are not plain counts are exact strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::families::MartinoReport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub group_hash: Option<String>,
    pub seed: u64,
    /// Canonicalized parameters (these are also the cache key).
    pub params: BTreeMap<String, String>,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document<T> {
    pub meta: Meta,
    pub result: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub size: usize,
    pub representative: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterInfo {
    pub label: String,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitInfo {
    pub hyperplanes: usize,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
    pub dim: usize,
    pub conductor: u32,
    pub reflections: usize,
    pub classes: Vec<ClassInfo>,
    pub characters: Vec<CharacterInfo>,
    pub orbits: Vec<OrbitInfo>,
    pub c_names: Vec<String>,
    pub k_names: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbwTerm {
    /// Group element as a word in the generators.
    pub element: Vec<usize>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorInfo {
    pub name: String,
    pub bidegree: [u32; 2],
    pub z_degree: i64,
    pub invariant: String,
    pub element: Vec<PbwTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterGenerators {
    /// Polynomial ring the coefficients live in.
    pub variables: Vec<String>,
    pub generators: Vec<GeneratorInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationOut {
    pub variables: Vec<String>,
    pub bidegrees: Vec<[u32; 2]>,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoissonOut {
    pub variables: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointOut {
    pub c: BTreeMap<String, String>,
    pub k: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "value")]
pub enum Locus {
    Generic,
    Hyperplane(String),
    Point(PointOut),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamiliesOut {
    pub locus: Locus,
    pub families: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneOut {
    pub form: String,
    pub families: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplanesOut {
    pub generic: Vec<Vec<String>>,
    pub hyperplanes: Vec<HyperplaneOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspidalOut {
    pub point: PointOut,
    pub families: Vec<Vec<String>>,
    pub cuspidal: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellularCharOut {
    /// Nonzero multiplicities only.
    pub multiplicities: BTreeMap<String, usize>,
    pub defect: usize,
    pub dim: usize,
    pub factor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepOut {
    pub character: String,
    /// Multiplicity of the character in each cellular character, same order.
    pub multiplicities: Vec<usize>,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellularOut {
    pub point: PointOut,
    pub y: Vec<String>,
    pub v: Vec<String>,
    pub attempts: usize,
    pub sum_identity: bool,
    pub characters: Vec<CellularCharOut>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rep: Option<RepOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementOut {
    pub source: String,
    pub dim: usize,
    pub orbit_orders: Vec<usize>,
    pub forms: Vec<Vec<String>>,
    /// Coefficients of Σ |μ(X)| t^codim X, constant term first.
    pub poincare: Vec<u64>,
    pub poincare_factored: String,
    pub chambers: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chambers_by_signs: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub qft: Option<u64>,
}

pub type MartinoOut = MartinoReport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorOut {
    pub error: String,
    pub detail: String,
}
