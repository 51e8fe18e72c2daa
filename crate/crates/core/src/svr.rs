//! Coloring reconfiguration under single-vertex recoloring.

use crate::coloring::{is_proper, Coloring};
use crate::error::{ill_formed, precondition, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvrInstance {
    pub graph: Graph,
    pub k: u32,
    pub source: Coloring,
    pub target: Coloring,
}

impl SvrInstance {
    pub fn new(graph: Graph, k: u32, source: Coloring, target: Coloring) -> Result<Self> {
        if k == 0 {
            return Err(ill_formed("k must be positive"));
        }
        for (name, f) in [("source", &source), ("target", &target)] {
            if f.k() != k {
                return Err(ill_formed(format!("{name} coloring uses k = {}, instance k = {k}", f.k())));
            }
            if !is_proper(&graph, f)? {
                return Err(precondition(format!("{name} coloring is not proper")));
            }
        }
        Ok(Self {
            graph,
            k,
            source,
            target,
        })
    }

    pub fn from_slices(graph: Graph, k: u32, source: &[u32], target: &[u32]) -> Result<Self> {
        Self::new(
            graph,
            k,
            Coloring::from_slice(source, k)?,
            Coloring::from_slice(target, k)?,
        )
    }
}
