//! Undirected simple graphs on vertices `0..n`.

use std::collections::VecDeque;

use crate::error::{ill_formed, Result};

/// An undirected simple graph with vertices `0..n`.
///
/// Neighbor lists are kept sorted, which makes neighborhood comparison and
/// edge iteration deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("closing edge is new");
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph edges are simple")
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are simple")
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(ill_formed(format!("edge {u}-{v} out of range for n = {n}")));
        }
        if u == v {
            return Err(ill_formed(format!("self-loop at vertex {u}")));
        }
        match self.adjacency[u].binary_search(&v) {
            Ok(_) => Err(ill_formed(format!("duplicate edge {u}-{v}"))),
            Err(pos) => {
                self.adjacency[u].insert(pos, v);
                let pos = self.adjacency[v].binary_search(&u).unwrap_err();
                self.adjacency[v].insert(pos, u);
                Ok(())
            }
        }
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adjacency.push(Vec::new());
        self.adjacency.len() - 1
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for `n <= 1` as well.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let mut g = Self::empty(n);
        for u in 0..n {
            g.adjacency[u] = (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect();
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Self::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            let mut nbrs: Vec<usize> = self.adjacency[v]
                .iter()
                .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                .collect();
            nbrs.sort_unstable();
            g.adjacency[i] = nbrs;
        }
        g
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// A proper 2-coloring as sides `0`/`1` (each component's smallest vertex
    /// gets side 0), or `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Chordality test by maximum cardinality search followed by a check that
    /// the reverse visit order is a perfect elimination ordering.
    pub fn is_chordal(&self) -> bool {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !visited[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unvisited vertex remains");
            visited[v] = true;
            order.push(v);
            for &w in &self.adjacency[v] {
                if !visited[w] {
                    weight[w] += 1;
                }
            }
        }
        // position in elimination order: last visited is eliminated first
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().rev().enumerate() {
            pos[v] = i;
        }
        for &v in &order {
            let later: Vec<usize> = self.adjacency[v]
                .iter()
                .copied()
                .filter(|&w| pos[w] > pos[v])
                .collect();
            if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
                if later
                    .iter()
                    .any(|&w| w != parent && !self.has_edge(parent, w))
                {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::from_edges(4, [(2, 0), (0, 1), (3, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbors(3), &[0]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn components_and_complement() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert_eq!(g.complement().edge_count(), 10 - 2);
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn chordality() {
        assert!(Graph::complete(4).is_chordal());
        assert!(Graph::path(5).is_chordal());
        assert!(!Graph::cycle(4).is_chordal());
        assert!(!Graph::cycle(5).is_chordal());
        // two triangles sharing an edge
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(g.is_chordal());
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert!(Graph::cycle(4).bipartition().is_some());
        assert!(Graph::cycle(5).bipartition().is_none());
    }
}
