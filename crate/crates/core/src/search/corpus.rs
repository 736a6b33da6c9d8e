use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::bounds::{complex_summary, verify_theorem_instance, BoundReport};
use crate::complex::{clique_complex, SimplicialComplex};
use crate::error::ParseError;
use crate::graph::Graph;
use crate::io::{parse_edge_list, parse_facet_list, parse_graph6};

/// A loaded instance: its skeleton and, for facet lists, the complex as
/// given (otherwise the clique complex is used).
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub complex: Option<SimplicialComplex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CorpusError {
    Io { message: String },
    Parse { error: ParseError },
}

impl std::fmt::Display for CorpusError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CorpusError::Io { message } => write!(f, "{message}"),
            CorpusError::Parse { error } => write!(f, "{error}"),
        }
    }
}

/// Reads a file by extension: `.g6`/`.graph6` as graph6, `.facets` as a
/// facet list, anything else as an edge list.
pub fn load_instance(path: &Path) -> Result<Instance, CorpusError> {
    let text = std::fs::read_to_string(path).map_err(|e| CorpusError::Io {
        message: format!("{}: {e}", path.display()),
    })?;
    let name = path
        .file_stem()
        .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
    let parse = |e: ParseError| CorpusError::Parse { error: e };
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => Ok(Instance {
            name,
            graph: parse_graph6(&text).map_err(parse)?,
            complex: None,
        }),
        Some("facets") => {
            let k = parse_facet_list(&text).map_err(parse)?;
            Ok(Instance {
                name,
                graph: k.skeleton(),
                complex: Some(k),
            })
        }
        _ => Ok(Instance {
            name,
            graph: parse_edge_list(&text).map_err(parse)?,
            complex: None,
        }),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusEntry {
    pub path: PathBuf,
    pub result: Result<BoundReport, CorpusError>,
}

/// Full pipeline per file: flag and pseudomanifold checks, leveledness,
/// f/h/γ vectors, Dehn–Sommerville and Klee relations, and every bound,
/// with `s` matched to the dimension of the complex. A file that fails to
/// load is reported and the rest are still processed.
pub fn run_corpus_checks(paths: &[PathBuf]) -> Vec<CorpusEntry> {
    paths
        .iter()
        .map(|p| CorpusEntry {
            path: p.clone(),
            result: load_instance(p).map(check_instance),
        })
        .collect()
}

fn check_instance(inst: Instance) -> BoundReport {
    let complex = inst.complex.unwrap_or_else(|| clique_complex(&inst.graph));
    let s = usize::try_from(complex.dim()).map_or(1, |d| d.div_ceil(2).max(1));
    verify_theorem_instance(&inst.graph, s, None)
        .expect("s >= 1")
        .named(inst.name)
        .with_complex(complex_summary(&complex))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub files: usize,
    pub checked: usize,
    pub failed: usize,
    /// Instances attaining equality, per bound.
    pub equality: BTreeMap<String, usize>,
    /// Instances violating, per bound.
    pub violated: BTreeMap<String, usize>,
    pub leveled: usize,
    pub potential_counterexamples: usize,
}

pub fn corpus_summary(entries: &[CorpusEntry]) -> CorpusSummary {
    let mut out = CorpusSummary {
        files: entries.len(),
        ..Default::default()
    };
    for e in entries {
        match &e.result {
            Err(_) => out.failed += 1,
            Ok(r) => {
                out.checked += 1;
                out.leveled += usize::from(r.leveled.verdict);
                out.potential_counterexamples += usize::from(r.potential_counterexample);
                for (name, b) in &r.bounds {
                    if b.equality {
                        *out.equality.entry(name.clone()).or_default() += 1;
                    }
                    if !b.holds {
                        *out.violated.entry(name.clone()).or_default() += 1;
                    }
                }
            }
        }
    }
    out
}
