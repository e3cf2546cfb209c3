//! Report payloads. Every report is `{"schema": 1, "command", "argv",
//! "inputs", "result", "version"}` with keys sorted; `timing_ms` appears only
//! with `--timing`.

use std::collections::BTreeMap;

use nilcone::chain::ChainJson;
use nilcone::hecke::{SheetChoice, StepReport};
use nilcone::multsimple::ScanEntryJson;
use serde::{Deserialize, Serialize};

pub use nilcone::multgl::MultJson;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report<T> {
    pub schema: u32,
    pub command: String,
    pub argv: Vec<String>,
    pub inputs: serde_json::Value,
    pub result: T,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyResult {
    pub stable: bool,
    pub very_stable: bool,
    pub reason: Option<String>,
    pub m: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeckeResult {
    pub chain: ChainJson,
    pub steps: Vec<StepReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootJson {
    pub coeffs: Vec<i64>,
    pub height: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootInfo {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub numbering: String,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<RootJson>,
    pub histogram: BTreeMap<String, u32>,
    pub degrees: Vec<u32>,
    pub cominuscule_nodes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanResult {
    pub entries: Vec<ScanEntryJson>,
    pub total: usize,
    pub polynomial_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairResult {
    pub series: Vec<String>,
    pub order: usize,
    pub prefactor_exponent: i64,
    pub symmetric: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CountResult {
    pub count: String,
    pub enumerated: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignments: Option<Vec<Vec<SheetChoice>>>,
}
