//! Color swaps and reconfiguration sequences.

use crate::coloring::{is_proper_extended, proper_pair, Coloring};
use crate::error::{ill_formed, precondition, Result};
use crate::graph::Graph;

/// Exchange of the colors on the endpoints of an edge. Stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SwapMove {
    pub u: usize,
    pub v: usize,
}

impl SwapMove {
    pub fn new(a: usize, b: usize) -> Self {
        Self {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

/// Whether swapping across `uv` changes `colors` and keeps it (extended) proper.
/// Assumes `colors` is already proper and `uv` is an edge.
#[inline]
pub(crate) fn swap_is_legal(graph: &Graph, colors: &[crate::Color], u: usize, v: usize) -> bool {
    let (cu, cv) = (colors[u], colors[v]);
    if cu == cv {
        return false;
    }
    graph.neighbors(u).iter().all(|&w| w == v || proper_pair(colors[w], cv))
        && graph.neighbors(v).iter().all(|&w| w == u || proper_pair(colors[w], cu))
}

/// All edges whose swap yields a different proper (extended-proper) coloring,
/// sorted by `(min endpoint, max endpoint)`.
pub fn legal_swaps(graph: &Graph, f: &Coloring) -> Result<Vec<SwapMove>> {
    if !is_proper_extended(graph, f)? {
        return Err(precondition("legal_swaps needs a proper coloring"));
    }
    Ok(graph
        .edges()
        .filter(|&(u, v)| swap_is_legal(graph, f.colors(), u, v))
        .map(|(u, v)| SwapMove { u, v })
        .collect())
}

/// Applies a legal swap.
pub fn apply_swap(graph: &Graph, f: &Coloring, mv: SwapMove) -> Result<Coloring> {
    if !graph.has_edge(mv.u, mv.v) {
        return Err(precondition(format!("{}-{} is not an edge", mv.u, mv.v)));
    }
    if !is_proper_extended(graph, f)? || !swap_is_legal(graph, f.colors(), mv.u, mv.v) {
        return Err(precondition(format!("swap {}-{} is not legal here", mv.u, mv.v)));
    }
    let mut out = f.clone();
    out.swap_in_place(mv.u, mv.v);
    Ok(out)
}

/// A start coloring and the swaps applied to it, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfSequence {
    pub start: Coloring,
    pub moves: Vec<SwapMove>,
}

impl ReconfSequence {
    pub fn empty(start: Coloring) -> Self {
        Self {
            start,
            moves: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Every coloring along the sequence, starting with `start`. Fails on
    /// the first move that is not legal in its predecessor.
    pub fn replay(&self, graph: &Graph) -> Result<Vec<Coloring>> {
        let mut states = Vec::with_capacity(self.moves.len() + 1);
        let mut cur = self.start.clone();
        if !is_proper_extended(graph, &cur)? {
            return Err(ill_formed("sequence starts from an improper coloring"));
        }
        for (i, &mv) in self.moves.iter().enumerate() {
            let next = apply_swap(graph, &cur, mv)
                .map_err(|e| precondition(format!("move {i} ({}-{}): {e}", mv.u, mv.v)))?;
            states.push(std::mem::replace(&mut cur, next));
        }
        states.push(cur);
        Ok(states)
    }

    /// Final coloring after validating every step.
    pub fn end(&self, graph: &Graph) -> Result<Coloring> {
        Ok(self.replay(graph)?.pop().expect("replay yields the start at least"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::fixtures::example_graph;
    use crate::coloring::is_proper;

    fn plain(c: &[u32], k: u32) -> Coloring {
        Coloring::from_slice(c, k).unwrap()
    }

    #[test]
    fn example_first_swap() {
        let g = example_graph();
        let fs = plain(&[1, 2, 3, 3, 1, 2], 3);
        let swaps = legal_swaps(&g, &fs).unwrap();
        assert!(swaps.contains(&SwapMove::new(4, 5)));
        let next = apply_swap(&g, &fs, SwapMove::new(4, 5)).unwrap();
        assert_eq!(next, plain(&[1, 2, 3, 3, 2, 1], 3));
        let back = apply_swap(&g, &next, SwapMove::new(4, 5)).unwrap();
        assert_eq!(back, fs);
    }

    #[test]
    fn edgeless_graph_has_no_swaps() {
        let f = plain(&[1, 2, 1], 2);
        assert!(legal_swaps(&Graph::empty(3), &f).unwrap().is_empty());
    }

    #[test]
    fn alternating_p4_is_rigid() {
        let g = Graph::path(4);
        let f = plain(&[1, 2, 1, 2], 2);
        assert!(legal_swaps(&g, &f).unwrap().is_empty());
        // brute force: every edge swap produces a monochromatic edge
        for (u, v) in g.edges() {
            let mut c = f.clone();
            c.swap_in_place(u, v);
            assert!(!is_proper(&g, &c).unwrap());
        }
    }

    #[test]
    fn star_swap_on_extended_edge() {
        let g = Graph::path(2);
        let f = Coloring::from_extended(&[None, Some(1)], 1).unwrap();
        let out = apply_swap(&g, &f, SwapMove::new(0, 1)).unwrap();
        assert_eq!(out, Coloring::from_extended(&[Some(1), None], 1).unwrap());
    }

    #[test]
    fn illegal_moves_are_rejected() {
        let g = Graph::path(3);
        let f = plain(&[1, 2, 1], 2);
        assert!(apply_swap(&g, &f, SwapMove::new(0, 1)).is_err());
        assert!(apply_swap(&g, &f, SwapMove::new(0, 2)).is_err());
        let same = Coloring::from_extended(&[None, None], 1).unwrap();
        assert!(legal_swaps(&Graph::path(2), &same).unwrap().is_empty());
    }

    #[test]
    fn replay_detects_bad_step() {
        let g = Graph::path(3);
        let seq = ReconfSequence {
            start: plain(&[1, 2, 3], 3),
            moves: vec![SwapMove::new(0, 1), SwapMove::new(0, 1), SwapMove::new(1, 2)],
        };
        assert_eq!(seq.replay(&g).unwrap().len(), 4);
        let bad = ReconfSequence {
            start: plain(&[1, 2, 1], 3),
            moves: vec![SwapMove::new(0, 1)],
        };
        assert!(bad.end(&g).is_err());
    }
}
