//! Instance loading with format auto-detection.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use kplex_core::graph::{parse_auto, parse_dimacs, parse_edge_list_labeled};
use kplex_core::Graph;

/// Requested instance format; `Auto` sniffs a leading `p` line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatChoice {
    Auto,
    Dimacs,
    EdgeList,
}

pub struct LoadedInstance {
    /// File name without directories.
    pub name: String,
    pub graph: Graph,
    /// Maps internal ids back to the ids used in the file (1-based for
    /// DIMACS, original labels for edge lists).
    pub labels: Vec<u64>,
}

pub fn load_instance(path: &Path, format: FormatChoice) -> Result<LoadedInstance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let (graph, labels) = match format {
        FormatChoice::Auto => parse_auto(&text),
        FormatChoice::Dimacs => {
            parse_dimacs(&text).map(|g| {
                let labels = (1..=g.vertex_count() as u64).collect();
                (g, labels)
            })
        }
        FormatChoice::EdgeList => parse_edge_list_labeled(&text),
    }
    .with_context(|| format!("parsing {}", path.display()))?;
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok(LoadedInstance {
        name,
        graph,
        labels,
    })
}
