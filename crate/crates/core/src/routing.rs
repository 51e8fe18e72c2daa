//! Routing between bijective colorings of a connected graph.
//!
//! When every vertex carries a distinct color, every swap is legal, so any
//! permutation of the colors can be realized. We route along a BFS spanning
//! tree: vertices are retired in reverse BFS order (always a leaf of the tree
//! induced by the remaining vertices), and before retiring a vertex its target
//! color is walked to it along the tree path. Each retirement costs at most
//! `remaining - 1` swaps, so the total is at most `n(n-1)/2`.

use std::collections::VecDeque;

use crate::coloring::Coloring;
use crate::error::{precondition, Result};
use crate::graph::Graph;
use crate::swap::{ReconfSequence, SwapMove};

fn is_bijective(f: &Coloring) -> bool {
    let mut seen = f.colors().to_vec();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1]) && !f.has_star()
}

/// Sequence of swaps turning `from` into `to`, both bijective onto the same
/// color set, on a connected graph.
pub fn route_bijective(graph: &Graph, from: &Coloring, to: &Coloring) -> Result<ReconfSequence> {
    let n = graph.n();
    if from.len() != n || to.len() != n {
        return Err(precondition("coloring length differs from vertex count"));
    }
    if !graph.is_connected() {
        return Err(precondition("routing needs a connected graph"));
    }
    if !is_bijective(from) || !is_bijective(to) {
        return Err(precondition("routing needs colorings with pairwise distinct colors"));
    }
    let mut a = from.colors().to_vec();
    let mut b = to.colors().to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Err(precondition("colorings use different color sets"));
    }
    if n == 0 {
        return Ok(ReconfSequence::empty(from.clone()));
    }

    let (order, parent, depth) = bfs_tree(graph, 0);
    let mut cur = from.clone();
    let mut moves = Vec::new();
    for &leaf in order.iter().rev() {
        let want = to.get(leaf);
        let holder = (0..n)
            .find(|&v| cur.get(v) == want)
            .expect("color sets agree");
        // tree path holder -> leaf, via their lowest common ancestor
        let (mut x, mut y) = (holder, leaf);
        let mut up = vec![x];
        let mut down = vec![y];
        while depth[x] > depth[y] {
            x = parent[x];
            up.push(x);
        }
        while depth[y] > depth[x] {
            y = parent[y];
            down.push(y);
        }
        while x != y {
            x = parent[x];
            y = parent[y];
            up.push(x);
            down.push(y);
        }
        down.pop();
        up.extend(down.into_iter().rev());
        for w in up.windows(2) {
            cur.swap_in_place(w[0], w[1]);
            moves.push(SwapMove::new(w[0], w[1]));
        }
    }
    debug_assert_eq!(&cur, to);
    Ok(ReconfSequence {
        start: from.clone(),
        moves,
    })
}

fn bfs_tree(graph: &Graph, root: usize) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let n = graph.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0; n];
    let mut order = vec![root];
    parent[root] = root;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in graph.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                depth[w] = depth[u] + 1;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    (order, parent, depth)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(c: &[u32]) -> Coloring {
        Coloring::from_slice(c, c.len() as u32).unwrap()
    }

    #[test]
    fn single_vertex_needs_nothing() {
        let seq = route_bijective(&Graph::empty(1), &plain(&[1]), &plain(&[1])).unwrap();
        assert!(seq.is_empty());
    }

    #[test]
    fn single_edge_is_one_swap() {
        let g = Graph::path(2);
        let seq = route_bijective(&g, &plain(&[1, 2]), &plain(&[2, 1])).unwrap();
        assert_eq!(seq.moves, vec![SwapMove::new(0, 1)]);
        assert_eq!(seq.end(&g).unwrap(), plain(&[2, 1]));
    }

    #[test]
    fn reversing_a_path() {
        let g = Graph::path(6);
        let to = plain(&[6, 5, 4, 3, 2, 1]);
        let seq = route_bijective(&g, &plain(&[1, 2, 3, 4, 5, 6]), &to).unwrap();
        assert_eq!(seq.end(&g).unwrap(), to);
        assert!(seq.len() <= 2 * 36);
    }

    #[test]
    fn preconditions() {
        let g = Graph::empty(2);
        assert!(route_bijective(&g, &plain(&[1, 2]), &plain(&[2, 1])).is_err());
        let g = Graph::path(2);
        let rep = Coloring::from_slice(&[1, 1], 2).unwrap();
        assert!(route_bijective(&g, &rep, &rep).is_err());
        let other = Coloring::from_slice(&[1, 3], 3).unwrap();
        assert!(route_bijective(&g, &Coloring::from_slice(&[1, 2], 3).unwrap(), &other).is_err());
    }
}
