//! Exhaustive ground-truth solvers.
//!
//! Each reachability query is a breadth-first search over the full
//! reconfiguration space, so `Yes` witnesses are shortest. Running out of
//! budget is reported as [`Decision::Overflow`] and never as `No`.

mod engine;

use crate::coloring::{is_proper, is_proper_extended, is_valid, Color, Coloring, Instance};
use crate::error::{precondition, Error, Result};
use crate::graph::Graph;
use crate::ncl::{NclInstance, NclMachine};
use crate::svr::SvrInstance;
use crate::swap::{ReconfSequence, SwapMove};
use crate::token_sliding::TokenSlidingInstance;

use engine::{reachable_set, shortest_path, Search, Space, StateStore};

/// Limits for exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Distinct states that may be stored before giving up.
    pub max_states: usize,
    /// Longest witness that will be searched for.
    pub max_moves: usize,
}

impl SearchBudget {
    pub const DEFAULT_STATES: usize = 10_000_000;

    pub fn states(max_states: usize) -> Self {
        Self {
            max_states,
            ..Self::default()
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_states: Self::DEFAULT_STATES,
            max_moves: usize::MAX,
        }
    }
}

/// Outcome of an exhaustive reachability query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision<W> {
    Yes(W),
    No,
    Overflow { states_explored: usize },
}

impl<W> Decision<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No)
    }

    pub fn is_overflow(&self) -> bool {
        matches!(self, Decision::Overflow { .. })
    }

    /// `Some(true)` for yes, `Some(false)` for no, `None` on overflow.
    pub fn outcome(&self) -> Option<bool> {
        match self {
            Decision::Yes(_) => Some(true),
            Decision::No => Some(false),
            Decision::Overflow { .. } => None,
        }
    }

    fn from_search<M>(search: Search<M>, witness: impl FnOnce(Vec<M>) -> W) -> Self {
        match search {
            Search::Found(path) => Decision::Yes(witness(path)),
            Search::Exhausted => Decision::No,
            Search::Overflow { states } => Decision::Overflow {
                states_explored: states,
            },
        }
    }
}

fn raw(f: &Coloring) -> Vec<u32> {
    f.colors().iter().map(|c| c.raw()).collect()
}

fn from_raw(state: &[u32], k: u32) -> Coloring {
    Coloring::from_parts_unchecked(state.iter().map(|&c| Color::from_raw(c)).collect(), k)
}

/// Proper (or extended-proper) colorings under color swaps.
struct SwapSpace<'a> {
    graph: &'a Graph,
    edges: Vec<(usize, usize)>,
}

impl<'a> SwapSpace<'a> {
    fn new(graph: &'a Graph) -> Self {
        Self {
            graph,
            edges: graph.edges().collect(),
        }
    }
}

impl Space for SwapSpace<'_> {
    type Move = SwapMove;

    fn moves(&self, state: &[u32], out: &mut Vec<SwapMove>) {
        for &(u, v) in &self.edges {
            if swap_legal_raw(self.graph, state, u, v) {
                out.push(SwapMove { u, v });
            }
        }
    }

    fn apply(&self, state: &mut [u32], mv: SwapMove) {
        state.swap(mv.u, mv.v);
    }
}

#[inline]
fn swap_legal_raw(graph: &Graph, s: &[u32], u: usize, v: usize) -> bool {
    let (cu, cv) = (s[u], s[v]);
    if cu == cv {
        return false;
    }
    let ok = |a: u32, b: u32| a != b || a == 0;
    graph.neighbors(u).iter().all(|&w| w == v || ok(s[w], cv))
        && graph.neighbors(v).iter().all(|&w| w == u || ok(s[w], cu))
}

fn swap_reachable(instance: &Instance, budget: &SearchBudget) -> Decision<ReconfSequence> {
    if !is_valid(instance) {
        return Decision::No;
    }
    let space = SwapSpace::new(&instance.graph);
    let search = shortest_path(
        &space,
        &raw(&instance.source),
        &raw(&instance.target),
        instance.k,
        budget,
    );
    Decision::from_search(search, |moves| ReconfSequence {
        start: instance.source.clone(),
        moves,
    })
}

/// CRCS by exhaustive search. Invalid instances are answered `No` at once.
pub fn crcs_reachable(instance: &Instance, budget: &SearchBudget) -> Result<Decision<ReconfSequence>> {
    if instance.is_extended() {
        return Err(precondition("crcs_reachable takes plain colorings; use ecrcs_reachable"));
    }
    Ok(swap_reachable(instance, budget))
}

/// Extended CRCS by exhaustive search; `*` may be shared across edges.
pub fn ecrcs_reachable(instance: &Instance, budget: &SearchBudget) -> Decision<ReconfSequence> {
    swap_reachable(instance, budget)
}

/// One token moved along an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TokenSlide {
    pub from: usize,
    pub to: usize,
}

struct SlideSpace<'a> {
    graph: &'a Graph,
}

impl Space for SlideSpace<'_> {
    type Move = TokenSlide;

    fn moves(&self, s: &[u32], out: &mut Vec<TokenSlide>) {
        for from in (0..s.len()).filter(|&v| s[v] == 1) {
            for &to in self.graph.neighbors(from) {
                if s[to] == 0 && self.graph.neighbors(to).iter().all(|&w| w == from || s[w] == 0) {
                    out.push(TokenSlide { from, to });
                }
            }
        }
    }

    fn apply(&self, s: &mut [u32], mv: TokenSlide) {
        s[mv.from] = 0;
        s[mv.to] = 1;
    }
}

fn indicator(n: usize, set: &[usize]) -> Vec<u32> {
    let mut s = vec![0; n];
    for &v in set {
        s[v] = 1;
    }
    s
}

/// Token Sliding by exhaustive search.
pub fn ts_reachable(ts: &TokenSlidingInstance, budget: &SearchBudget) -> Result<Decision<Vec<TokenSlide>>> {
    let g = &ts.graph;
    if !g.is_independent(&ts.source) || !g.is_independent(&ts.target) {
        return Err(precondition("token sets must be independent"));
    }
    if ts.source.len() != ts.target.len() {
        return Err(precondition("token sets differ in size"));
    }
    let search = shortest_path(
        &SlideSpace { graph: g },
        &indicator(g.n(), &ts.source),
        &indicator(g.n(), &ts.target),
        1,
        budget,
    );
    Ok(Decision::from_search(search, |m| m))
}

/// Recoloring of a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Recolor {
    pub vertex: usize,
    pub color: u32,
}

struct RecolorSpace<'a> {
    graph: &'a Graph,
    k: u32,
}

impl Space for RecolorSpace<'_> {
    type Move = Recolor;

    fn moves(&self, s: &[u32], out: &mut Vec<Recolor>) {
        for vertex in 0..s.len() {
            for color in 1..=self.k {
                if color != s[vertex] && self.graph.neighbors(vertex).iter().all(|&w| s[w] != color) {
                    out.push(Recolor { vertex, color });
                }
            }
        }
    }

    fn apply(&self, s: &mut [u32], mv: Recolor) {
        s[mv.vertex] = mv.color;
    }
}

/// Single-vertex recoloring reachability by exhaustive search.
pub fn svr_reachable(svr: &SvrInstance, budget: &SearchBudget) -> Result<Decision<Vec<Recolor>>> {
    if !is_proper(&svr.graph, &svr.source)? || !is_proper(&svr.graph, &svr.target)? {
        return Err(precondition("both colorings must be proper"));
    }
    let search = shortest_path(
        &RecolorSpace {
            graph: &svr.graph,
            k: svr.k,
        },
        &raw(&svr.source),
        &raw(&svr.target),
        svr.k,
        budget,
    );
    Ok(Decision::from_search(search, |m| m))
}

/// Orientation states: bit 1 means the edge points at its `v` endpoint.
struct FlipSpace<'a> {
    machine: &'a NclMachine,
}

impl FlipSpace<'_> {
    fn head(&self, s: &[u32], e: usize) -> usize {
        let edge = self.machine.edges()[e];
        if s[e] == 1 {
            edge.v
        } else {
            edge.u
        }
    }
}

impl Space for FlipSpace<'_> {
    type Move = usize;

    fn moves(&self, s: &[u32], out: &mut Vec<usize>) {
        for (e, edge) in self.machine.edges().iter().enumerate() {
            let h = self.head(s, e);
            let in_weight: u32 = self
                .machine
                .incident(h)
                .iter()
                .filter(|&&f| self.head(s, f) == h)
                .map(|&f| self.machine.edges()[f].weight as u32)
                .sum();
            if in_weight - edge.weight as u32 >= 2 {
                out.push(e);
            }
        }
    }

    fn apply(&self, s: &mut [u32], e: usize) {
        s[e] ^= 1;
    }
}

/// NCL reachability by exhaustive search; the witness lists flipped edge ids.
pub fn ncl_reachable(instance: &NclInstance, budget: &SearchBudget) -> Result<Decision<Vec<usize>>> {
    let m = &instance.machine;
    m.check(&instance.source)?;
    m.check(&instance.target)?;
    let encode = |o: &crate::ncl::NclOrientation| -> Vec<u32> {
        m.edges()
            .iter()
            .zip(o.heads())
            .map(|(e, &h)| u32::from(h == e.v))
            .collect()
    };
    let search = shortest_path(
        &FlipSpace { machine: m },
        &encode(&instance.source),
        &encode(&instance.target),
        1,
        budget,
    );
    Ok(Decision::from_search(search, |m| m))
}

/// All proper `k`-colorings agreeing with `fixed`, in lexicographic order.
/// A fixed `*` may sit next to anything.
pub fn enumerate_colorings(
    graph: &Graph,
    k: u32,
    fixed: &[Option<Color>],
    budget: &SearchBudget,
) -> Result<Vec<Coloring>> {
    let n = graph.n();
    if fixed.len() != n {
        return Err(precondition("fixed assignment length differs from vertex count"));
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(
        v: usize,
        graph: &Graph,
        k: u32,
        fixed: &[Option<Color>],
        cur: &mut Vec<u32>,
        out: &mut Vec<Coloring>,
        limit: usize,
    ) -> bool {
        if v == cur.len() {
            out.push(from_raw(cur, k));
            return out.len() <= limit;
        }
        let choices: Vec<u32> = match fixed[v] {
            Some(c) => vec![c.raw()],
            None => (1..=k).collect(),
        };
        for c in choices {
            // only earlier vertices are assigned
            if graph.neighbors(v).iter().any(|&w| w < v && cur[w] == c && c != 0) {
                continue;
            }
            cur[v] = c;
            if !rec(v + 1, graph, k, fixed, cur, out, limit) {
                return false;
            }
        }
        true
    }
    // fixed vertices may conflict among themselves
    for (u, w) in graph.edges() {
        if let (Some(a), Some(b)) = (fixed[u], fixed[w]) {
            if a == b && !a.is_star() {
                return Ok(Vec::new());
            }
        }
    }
    if !rec(0, graph, k, fixed, &mut cur, &mut out, budget.max_states) {
        return Err(Error::BudgetExceeded { states: out.len() });
    }
    Ok(out)
}

/// Partition of a set of colorings into reconfiguration components.
#[derive(Debug, Clone)]
pub struct Components {
    pub colorings: Vec<Coloring>,
    /// Component id of each coloring; ids are dense and numbered in order of
    /// first appearance.
    pub component: Vec<usize>,
    pub count: usize,
}

impl Components {
    /// Component id of `f`, if `f` was enumerated.
    pub fn component_of(&self, f: &Coloring) -> Option<usize> {
        self.colorings
            .iter()
            .position(|g| g == f)
            .map(|i| self.component[i])
    }
}

/// Enumerates every proper `k`-coloring of `graph` and groups them into
/// components of the swap graph.
pub fn crcs_components(graph: &Graph, k: u32, budget: &SearchBudget) -> Result<Components> {
    let colorings = enumerate_colorings(graph, k, &vec![None; graph.n()], budget)?;
    components_of(graph, k, colorings)
}

pub(crate) fn components_of(graph: &Graph, k: u32, colorings: Vec<Coloring>) -> Result<Components> {
    let n = graph.n();
    let comps = if engine::fits_u128(n, k) {
        group::<u128>(graph, k, &colorings)
    } else {
        group::<Box<[u32]>>(graph, k, &colorings)
    };
    let mut relabel = vec![usize::MAX; colorings.len()];
    let mut count = 0;
    let component = comps
        .iter()
        .map(|&root| {
            if relabel[root] == usize::MAX {
                relabel[root] = count;
                count += 1;
            }
            relabel[root]
        })
        .collect();
    Ok(Components {
        colorings,
        component,
        count,
    })
}

fn group<K: engine::Key>(graph: &Graph, k: u32, colorings: &[Coloring]) -> Vec<usize> {
    let mut store = StateStore::<K>::new(graph.n(), k);
    for f in colorings {
        store.insert(&raw(f));
    }
    let mut dsu: Vec<usize> = (0..colorings.len()).collect();
    fn find(dsu: &mut [usize], mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    let edges: Vec<_> = graph.edges().collect();
    let mut scratch = Vec::new();
    for i in 0..colorings.len() {
        scratch.clear();
        scratch.extend_from_slice(store.get(i));
        for &(u, v) in &edges {
            if swap_legal_raw(graph, &scratch, u, v) {
                scratch.swap(u, v);
                if let Some(j) = store.find(&scratch) {
                    let (a, b) = (find(&mut dsu, i), find(&mut dsu, j));
                    if a != b {
                        dsu[a.max(b)] = a.min(b);
                    }
                }
                scratch.swap(u, v);
            }
        }
    }
    (0..colorings.len()).map(|i| find(&mut dsu, i)).collect()
}

/// Every coloring reachable from `start` by swaps, in BFS order.
pub fn crcs_component(graph: &Graph, start: &Coloring, budget: &SearchBudget) -> Result<Vec<Coloring>> {
    if !is_proper_extended(graph, start)? {
        return Err(precondition("start coloring must be proper"));
    }
    let space = SwapSpace::new(graph);
    let states = reachable_set(&space, &raw(start), start.k(), budget)
        .map_err(|states| Error::BudgetExceeded { states })?;
    Ok(states.iter().map(|s| from_raw(s, start.k())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::fixtures::example_instance;
    use crate::ncl::fixtures::six_vertex_machine;
    use crate::swap::legal_swaps;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn example_instance_needs_three_swaps() {
        let inst = example_instance();
        let Decision::Yes(w) = crcs_reachable(&inst, &budget()).unwrap() else {
            panic!("expected yes");
        };
        assert_eq!(w.len(), 3);
        assert_eq!(w.end(&inst.graph).unwrap(), inst.target);
    }

    #[test]
    fn identical_colorings_need_nothing() {
        let inst = Instance::from_slices(Graph::path(3), 3, &[1, 2, 3], &[1, 2, 3]).unwrap();
        let d = crcs_reachable(&inst, &budget()).unwrap();
        assert_eq!(d, Decision::Yes(ReconfSequence::empty(inst.source.clone())));
    }

    #[test]
    fn alternating_p6_is_frozen() {
        let inst =
            Instance::from_slices(Graph::path(6), 3, &[1, 2, 1, 2, 1, 2], &[2, 1, 2, 1, 2, 1]).unwrap();
        assert!(crcs_reachable(&inst, &budget()).unwrap().is_no());
        // both endpoints are singleton components
        for f in [&inst.source, &inst.target] {
            assert_eq!(crcs_component(&inst.graph, f, &budget()).unwrap().len(), 1);
        }
    }

    #[test]
    fn invalid_instances_are_no_without_search() {
        let inst = Instance::from_slices(Graph::path(2), 3, &[1, 2], &[1, 3]).unwrap();
        let tiny = SearchBudget::states(1);
        assert!(crcs_reachable(&inst, &tiny).unwrap().is_no());
    }

    #[test]
    fn extended_edge() {
        let g = Graph::path(2);
        let a = Coloring::from_extended(&[None, Some(1)], 1).unwrap();
        let b = Coloring::from_extended(&[Some(1), None], 1).unwrap();
        let inst = Instance::new(g.clone(), 1, a.clone(), b).unwrap();
        match ecrcs_reachable(&inst, &budget()) {
            Decision::Yes(w) => assert_eq!(w.len(), 1),
            other => panic!("{other:?}"),
        }
        let stars = Coloring::from_extended(&[None, None], 1).unwrap();
        let inst = Instance::new(g, 1, stars.clone(), stars).unwrap();
        assert_eq!(ecrcs_reachable(&inst, &budget()).outcome(), Some(true));
    }

    #[test]
    fn token_sliding_examples() {
        let p3 = Graph::path(3);
        let same = TokenSlidingInstance::new(p3.clone(), vec![0], vec![0]).unwrap();
        assert!(ts_reachable(&same, &budget()).unwrap().is_yes());
        let ends = TokenSlidingInstance::new(p3, vec![0], vec![2]).unwrap();
        let Decision::Yes(w) = ts_reachable(&ends, &budget()).unwrap() else {
            panic!()
        };
        assert_eq!(w, vec![TokenSlide { from: 0, to: 1 }, TokenSlide { from: 1, to: 2 }]);
        let k2 = TokenSlidingInstance::new(Graph::path(2), vec![0], vec![1]).unwrap();
        assert!(ts_reachable(&k2, &budget()).unwrap().is_yes());
        // tokens at both ends of P3 block the middle
        let stuck = TokenSlidingInstance::new(Graph::path(4), vec![0, 2], vec![0, 3]).unwrap();
        assert!(ts_reachable(&stuck, &budget()).unwrap().is_yes());
        let blocked = TokenSlidingInstance::new(Graph::path(3), vec![0, 2], vec![0, 2]).unwrap();
        assert!(ts_reachable(&blocked, &budget()).unwrap().is_yes());
    }

    #[test]
    fn recoloring_examples() {
        let one = SvrInstance::from_slices(Graph::empty(1), 2, &[1], &[2]).unwrap();
        assert!(svr_reachable(&one, &budget()).unwrap().is_yes());
        let tri = SvrInstance::from_slices(Graph::complete(3), 3, &[1, 2, 3], &[2, 1, 3]).unwrap();
        assert!(svr_reachable(&tri, &budget()).unwrap().is_no());
        let same = SvrInstance::from_slices(Graph::complete(3), 3, &[1, 2, 3], &[1, 2, 3]).unwrap();
        assert!(svr_reachable(&same, &budget()).unwrap().is_yes());
    }

    #[test]
    fn ncl_single_flip() {
        let (m, c) = six_vertex_machine();
        let same = NclInstance::new(m.clone(), c.clone(), c.clone()).unwrap();
        assert_eq!(ncl_reachable(&same, &budget()).unwrap(), Decision::Yes(vec![]));
        let target = c.flipped(&m, 8);
        let inst = NclInstance::new(m, c, target).unwrap();
        assert_eq!(ncl_reachable(&inst, &budget()).unwrap(), Decision::Yes(vec![8]));
    }

    #[test]
    fn component_examples() {
        let p2 = crcs_components(&Graph::path(2), 2, &budget()).unwrap();
        assert_eq!((p2.colorings.len(), p2.count), (2, 1));
        let p3 = crcs_components(&Graph::path(3), 2, &budget()).unwrap();
        assert_eq!((p3.colorings.len(), p3.count), (2, 2));
    }

    #[test]
    fn path_coloring_counts() {
        for n in 1..=8 {
            let c = crcs_components(&Graph::path(n), 3, &budget()).unwrap();
            assert_eq!(c.colorings.len(), 3 * (1 << (n - 1)));
        }
    }

    #[test]
    fn enumeration_respects_budget() {
        let err = crcs_components(&Graph::empty(6), 3, &SearchBudget::states(10)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn component_matches_bfs_closure() {
        let inst = example_instance();
        let comps = crcs_components(&inst.graph, 3, &budget()).unwrap();
        let reach = crcs_component(&inst.graph, &inst.source, &budget()).unwrap();
        let id = comps.component_of(&inst.source).unwrap();
        let members = comps.component.iter().filter(|&&c| c == id).count();
        assert_eq!(members, reach.len());
        for f in &reach {
            assert_eq!(comps.component_of(f), Some(id));
            assert!(!legal_swaps(&inst.graph, f).unwrap().is_empty() || reach.len() == 1);
        }
    }
}
