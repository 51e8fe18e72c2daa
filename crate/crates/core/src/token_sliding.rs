//! Token Sliding instances: two equal-size independent sets.

use crate::error::{ill_formed, precondition, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenSlidingInstance {
    pub graph: Graph,
    /// Sorted token positions of the start set.
    pub source: Vec<usize>,
    /// Sorted token positions of the target set.
    pub target: Vec<usize>,
    /// Optional bipartition (side 0/1 per vertex) used by the bipartite builder.
    pub sides: Option<Vec<u8>>,
}

impl TokenSlidingInstance {
    pub fn new(graph: Graph, mut source: Vec<usize>, mut target: Vec<usize>) -> Result<Self> {
        source.sort_unstable();
        target.sort_unstable();
        for (name, set) in [("start", &source), ("target", &target)] {
            if set.iter().any(|&v| v >= graph.n()) {
                return Err(ill_formed(format!("{name} set has a vertex out of range")));
            }
            if set.windows(2).any(|w| w[0] == w[1]) {
                return Err(ill_formed(format!("{name} set repeats a vertex")));
            }
            if !graph.is_independent(set) {
                return Err(precondition(format!("{name} set is not independent")));
            }
        }
        if source.len() != target.len() {
            return Err(precondition("token sets differ in size"));
        }
        Ok(Self {
            graph,
            source,
            target,
            sides: None,
        })
    }

    /// Attaches a bipartition; every edge must cross it.
    pub fn with_sides(mut self, sides: Vec<u8>) -> Result<Self> {
        if sides.len() != self.graph.n() || sides.iter().any(|&s| s > 1) {
            return Err(ill_formed("bipartition must give side 0 or 1 for every vertex"));
        }
        if self.graph.edges().any(|(u, v)| sides[u] == sides[v]) {
            return Err(precondition("supplied sides are not a bipartition"));
        }
        self.sides = Some(sides);
        Ok(self)
    }
}
