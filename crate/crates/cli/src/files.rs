//! Hypergraph and weighting files.
//!
//! Both are compact JSON followed by a newline. Rationals are `"p/q"` strings
//! in lowest terms, so writing a parsed file reproduces it byte for byte.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use zerosum::arith::{format_ratio, parse_ratio};
use zerosum::{Hypergraph, Weighting};

use crate::error::{CliError, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphFile {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    classes: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightingFile {
    values: Vec<String>,
}

fn bad(what: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{what}: {e}"))
}

pub fn hypergraph_to_string(h: &Hypergraph) -> String {
    let file = HypergraphFile {
        n: h.n(),
        r: h.r(),
        edges: h.edges().to_vec(),
        classes: h.classes().map(|c| c.to_vec()),
    };
    serde_json::to_string(&file).expect("plain data serializes") + "\n"
}

pub fn hypergraph_from_str(s: &str) -> Result<Hypergraph> {
    let file: HypergraphFile = serde_json::from_str(s).map_err(|e| bad("hypergraph file", e))?;
    Ok(Hypergraph::new(file.n, file.r, file.edges, file.classes)?)
}

pub fn weighting_to_string(f: &Weighting) -> String {
    let file = WeightingFile { values: f.values().iter().map(format_ratio).collect() };
    serde_json::to_string(&file).expect("plain data serializes") + "\n"
}

pub fn weighting_from_str(s: &str) -> Result<Weighting> {
    let file: WeightingFile = serde_json::from_str(s).map_err(|e| bad("weighting file", e))?;
    let values = file
        .values
        .iter()
        .map(|v| parse_ratio(v).ok_or_else(|| bad("weighting file", format!("not a rational: {v:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Weighting::new(values)?)
}

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Writes `PREFIX.hypergraph.json` and `PREFIX.weighting.json`.
pub fn emit(prefix: &str, h: Option<&Hypergraph>, f: &Weighting) -> Result<()> {
    if let Some(h) = h {
        write(Path::new(&format!("{prefix}.hypergraph.json")), &hypergraph_to_string(h))?;
    }
    write(Path::new(&format!("{prefix}.weighting.json")), &weighting_to_string(f))
}
