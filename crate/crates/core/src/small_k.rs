//! Direct decision for `k <= 2`.

use crate::coloring::{is_valid, Instance};
use crate::error::{Error, Result};

/// Decides instances with at most two colors.
///
/// With one color the graph is edgeless and every pair of colorings is the
/// same map. With two colors, a connected component on three or more vertices
/// admits no legal swap at all, a single edge can always be flipped, and an
/// isolated vertex never changes.
pub fn solve_k_le_2(instance: &Instance) -> Result<bool> {
    if instance.k > 2 {
        return Err(Error::WrongSolver(format!(
            "the k <= 2 solver got k = {}",
            instance.k
        )));
    }
    if instance.is_extended() {
        return Err(Error::WrongSolver("the k <= 2 solver takes plain colorings".into()));
    }
    if !is_valid(instance) {
        return Ok(false);
    }
    if instance.k == 1 {
        return Ok(true);
    }
    let (fs, ft) = (instance.source.colors(), instance.target.colors());
    Ok(instance.graph.components().iter().all(|comp| match comp.len() {
        // an edge: the two endpoints hold distinct colors either way round
        2 => {
            let mut a = [fs[comp[0]], fs[comp[1]]];
            let mut b = [ft[comp[0]], ft[comp[1]]];
            a.sort();
            b.sort();
            a == b
        }
        _ => comp.iter().all(|&v| fs[v] == ft[v]),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn one_color_is_always_yes() {
        let inst = Instance::from_slices(Graph::empty(3), 1, &[1, 1, 1], &[1, 1, 1]).unwrap();
        assert!(solve_k_le_2(&inst).unwrap());
    }

    #[test]
    fn single_edge_flips() {
        let inst = Instance::from_slices(Graph::path(2), 2, &[1, 2], &[2, 1]).unwrap();
        assert!(solve_k_le_2(&inst).unwrap());
    }

    #[test]
    fn p3_is_frozen() {
        let inst = Instance::from_slices(Graph::path(3), 2, &[1, 2, 1], &[2, 1, 2]).unwrap();
        assert!(!solve_k_le_2(&inst).unwrap());
        let same = Instance::from_slices(Graph::path(3), 2, &[1, 2, 1], &[1, 2, 1]).unwrap();
        assert!(solve_k_le_2(&same).unwrap());
    }

    #[test]
    fn isolated_vertices_cannot_trade_colors() {
        // globally valid, but each vertex is its own component
        let inst = Instance::from_slices(Graph::empty(2), 2, &[1, 2], &[2, 1]).unwrap();
        assert!(!solve_k_le_2(&inst).unwrap());
    }

    #[test]
    fn rejects_large_k() {
        let inst = Instance::from_slices(Graph::path(2), 3, &[1, 2], &[2, 1]).unwrap();
        assert!(matches!(solve_k_le_2(&inst), Err(Error::WrongSolver(_))));
    }
}
