//! Constructions that turn Token Sliding, single-vertex recoloring and NCL
//! instances into swap reconfiguration instances.

mod gadgets;
mod recoloring;
mod sliding;

use std::fmt::Write as _;

use crate::coloring::{Coloring, Instance};
use crate::error::{ill_formed, Result};
use crate::graph::Graph;

pub use gadgets::{attach_forbidden_pendant, isolated_gadget, ncl_to_3crcs, IsolatedGadget};
pub use recoloring::svr_to_kcrcs;
pub use sliding::{ts_bipartite_to_crcs, ts_split_to_crcs};

/// Names for the vertices a construction added, plus the port edges of an
/// NCL construction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GadgetLayout {
    /// `(role, vertex id)` in creation order.
    pub roles: Vec<(String, usize)>,
    /// `(machine edge id, port vertex, port vertex)`.
    pub ports: Vec<(usize, usize, usize)>,
}

impl GadgetLayout {
    pub fn vertex(&self, role: &str) -> Option<usize> {
        self.roles.iter().find(|(r, _)| r == role).map(|&(_, v)| v)
    }

    /// Sidecar text: `role <name> <id>` and `port <edge> <a> <b>` lines.
    pub fn to_sidecar(&self) -> String {
        let mut out = String::new();
        for (name, id) in &self.roles {
            writeln!(out, "role {name} {id}").expect("writing to a String");
        }
        for (e, a, b) in &self.ports {
            writeln!(out, "port {e} {a} {b}").expect("writing to a String");
        }
        out
    }
}

/// Graph under construction with partially known source/target colorings.
#[derive(Debug, Clone, Default)]
pub struct Construction {
    pub graph: Graph,
    pub source: Vec<Option<u32>>,
    pub target: Vec<Option<u32>>,
    pub layout: GadgetLayout,
}

impl Construction {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts from an existing graph whose vertices carry no role.
    pub fn from_graph(graph: Graph) -> Self {
        let n = graph.n();
        Self {
            graph,
            source: vec![None; n],
            target: vec![None; n],
            layout: GadgetLayout::default(),
        }
    }

    pub fn add_vertex(&mut self, role: impl Into<String>) -> usize {
        let v = self.graph.add_vertex();
        self.source.push(None);
        self.target.push(None);
        self.layout.roles.push((role.into(), v));
        v
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.graph.add_edge(u, v).expect("construction edges are fresh");
    }

    /// Same color in both colorings.
    pub fn fix(&mut self, v: usize, c: u32) {
        self.source[v] = Some(c);
        self.target[v] = Some(c);
    }

    /// Checks that both colorings are complete and proper.
    pub fn finish(self, k: u32) -> Result<(Instance, GadgetLayout)> {
        let complete = |f: Vec<Option<u32>>| -> Result<Coloring> {
            let raw: Option<Vec<u32>> = f.into_iter().collect();
            Coloring::from_slice(&raw.ok_or_else(|| ill_formed("construction left a vertex uncolored"))?, k)
        };
        let source = complete(self.source)?;
        let target = complete(self.target)?;
        Ok((Instance::new(self.graph, k, source, target)?, self.layout))
    }
}

/// Comparison of a source-problem answer with the answer on its reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Agree,
    Disagree,
    /// At least one side ran out of budget.
    Inconclusive,
}

/// `None` stands for an overflowed search.
pub fn verify_reduction(source: Option<bool>, reduced: Option<bool>) -> Verdict {
    match (source, reduced) {
        (Some(a), Some(b)) if a == b => Verdict::Agree,
        (Some(_), Some(_)) => Verdict::Disagree,
        _ => Verdict::Inconclusive,
    }
}

/// Gives every uncolored vertex the next unused color, starting from
/// `first`, in ascending id order.
fn fill_distinct(f: &mut [Option<u32>], first: u32) {
    for (next, c) in (first..).zip(f.iter_mut().filter(|c| c.is_none())) {
        *c = Some(next);
    }
}
