use super::{fill_distinct, Construction, GadgetLayout};
use crate::coloring::Instance;
use crate::error::{precondition, Result};
use crate::split::split_partition;
use crate::token_sliding::TokenSlidingInstance;

fn color_sets(c: &mut Construction, ts: &TokenSlidingInstance, extra_ones: &[usize]) {
    for (f, set) in [(&mut c.source, &ts.source), (&mut c.target, &ts.target)] {
        for &v in set.iter().chain(extra_ones) {
            f[v] = Some(1);
        }
        fill_distinct(f, 2);
    }
}

/// Split graph plus a universal vertex; tokens become the color-1 class and
/// every other vertex gets its own color.
pub fn ts_split_to_crcs(ts: &TokenSlidingInstance) -> Result<(Instance, GadgetLayout)> {
    split_partition(&ts.graph).map_err(|_| precondition("token graph is not split"))?;
    if ts.source.len() < 2 {
        return Err(precondition("need at least two tokens"));
    }
    let mut c = Construction::from_graph(ts.graph.clone());
    let n = ts.graph.n();
    let w = c.add_vertex("universal");
    for v in 0..n {
        c.add_edge(v, w);
    }
    let k = (n + 1 - ts.source.len() + 1) as u32;
    color_sets(&mut c, ts, &[]);
    c.finish(k)
}

/// Bipartite graph plus `x1..x3` on side 0 and `y1..y3` on side 1, so that
/// only the token class and four padding vertices can share a color.
pub fn ts_bipartite_to_crcs(ts: &TokenSlidingInstance) -> Result<(Instance, GadgetLayout)> {
    let sides = match &ts.sides {
        Some(s) => s.clone(),
        None => ts
            .graph
            .bipartition()
            .ok_or_else(|| precondition("token graph is not bipartite"))?,
    };
    let n = ts.graph.n();
    let mut c = Construction::from_graph(ts.graph.clone());
    let x: Vec<usize> = (1..=3).map(|i| c.add_vertex(format!("x{i}"))).collect();
    let y: Vec<usize> = (1..=3).map(|i| c.add_vertex(format!("y{i}"))).collect();
    for (v, &side) in sides.iter().enumerate() {
        if side == 1 {
            c.add_edge(x[0], v);
        } else {
            c.add_edge(y[0], v);
        }
    }
    for &b in &y {
        c.add_edge(x[0], b);
    }
    for &a in &x[1..] {
        c.add_edge(a, y[0]);
    }
    let k = (n + 6 - ts.source.len() - 3) as u32;
    color_sets(&mut c, ts, &[x[1], x[2], y[1], y[2]]);
    c.finish(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{is_proper, is_valid};
    use crate::graph::Graph;

    #[test]
    fn split_arithmetic() {
        // edge 0-1 plus isolated 2; tokens on 0 and 2
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let ts = TokenSlidingInstance::new(g, vec![0, 2], vec![1, 2]).unwrap();
        let (inst, layout) = ts_split_to_crcs(&ts).unwrap();
        assert_eq!((inst.graph.n(), inst.k), (4, 3));
        assert_eq!(inst.source.colors().iter().map(|c| c.raw()).collect::<Vec<_>>(), vec![1, 2, 1, 3]);
        assert_eq!(inst.target.colors().iter().map(|c| c.raw()).collect::<Vec<_>>(), vec![2, 1, 1, 3]);
        assert_eq!(layout.vertex("universal"), Some(3));
        assert!(split_partition(&inst.graph).is_ok());
        assert!(is_valid(&inst));
    }

    #[test]
    fn split_preconditions() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let one = TokenSlidingInstance::new(g, vec![2], vec![2]).unwrap();
        assert!(ts_split_to_crcs(&one).is_err());
        let c4 = TokenSlidingInstance::new(Graph::cycle(4), vec![0, 2], vec![1, 3]).unwrap();
        assert!(ts_split_to_crcs(&c4).is_err());
    }

    /// The 4+4 bipartite example with three tokens.
    #[test]
    fn bipartite_example_shape() {
        let edges = [(0, 4), (0, 5), (0, 6), (1, 4), (1, 6), (2, 5), (2, 6), (2, 7), (3, 6), (3, 7)];
        let g = Graph::from_edges(8, edges).unwrap();
        let ts = TokenSlidingInstance::new(g, vec![2, 3, 4], vec![2, 3, 4])
            .unwrap()
            .with_sides(vec![0, 0, 0, 0, 1, 1, 1, 1])
            .unwrap();
        let (inst, layout) = ts_bipartite_to_crcs(&ts).unwrap();
        assert_eq!((inst.graph.n(), inst.k), (14, 8));
        let f: Vec<u32> = inst.source.colors().iter().map(|c| c.raw()).collect();
        assert_eq!(f, vec![2, 3, 1, 1, 1, 4, 5, 6, 7, 1, 1, 8, 1, 1]);
        let ones: Vec<usize> = (0..14).filter(|&v| f[v] == 1).collect();
        let pad: Vec<usize> = ["x2", "x3", "y2", "y3"].iter().map(|r| layout.vertex(r).unwrap()).collect();
        assert_eq!(ones, [vec![2, 3, 4], pad].concat());
        assert!(inst.graph.bipartition().is_some());
        assert!(is_proper(&inst.graph, &inst.source).unwrap());
    }

    #[test]
    fn non_bipartite_is_rejected() {
        let ts = TokenSlidingInstance::new(Graph::cycle(3), vec![0], vec![1]).unwrap();
        assert!(ts_bipartite_to_crcs(&ts).is_err());
    }
}
