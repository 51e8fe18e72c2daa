use super::{Construction, GadgetLayout};
use crate::coloring::Instance;
use crate::error::Result;
use crate::svr::SvrInstance;

/// Hangs a `k`-clique off every vertex. The clique's new vertices hold the
/// colors missing at their host, so a swap with a clique vertex recolors
/// the host.
pub fn svr_to_kcrcs(svr: &SvrInstance) -> Result<(Instance, GadgetLayout)> {
    let n = svr.graph.n();
    let k = svr.k;
    let mut c = Construction::from_graph(svr.graph.clone());
    for v in 0..n {
        c.source[v] = Some(svr.source.get(v).raw());
        c.target[v] = Some(svr.target.get(v).raw());
        let mut clique = vec![v];
        let mut rest_s = (1..=k).filter(|&x| x != svr.source.get(v).raw());
        let mut rest_t = (1..=k).filter(|&x| x != svr.target.get(v).raw());
        for j in 1..k {
            let w = c.add_vertex(format!("clique{v}.{j}"));
            for &u in &clique {
                c.add_edge(u, w);
            }
            clique.push(w);
            c.source[w] = rest_s.next();
            c.target[w] = rest_t.next();
        }
    }
    c.finish(k)
}
