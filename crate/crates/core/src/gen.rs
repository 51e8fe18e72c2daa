//! Seeded random graphs, colorings and instances.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Color, Coloring, Instance};
use crate::error::{precondition, Result};
use crate::graph::Graph;
use crate::swap::{apply_swap, legal_swaps};

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// Random spanning tree plus independent extra edges with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        g.add_edge(order[i], parent).expect("tree edge");
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.random_bool(p) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// Cograph from a random cotree: the vertex set is split at random and each
/// split is a union or a join with equal probability.
pub fn random_cograph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    fn rec(g: &mut Graph, verts: &[usize], rng: &mut impl Rng) {
        if verts.len() < 2 {
            return;
        }
        let cut = rng.random_range(1..verts.len());
        let (a, b) = verts.split_at(cut);
        rec(g, a, rng);
        rec(g, b, rng);
        if rng.random_bool(0.5) {
            for &u in a {
                for &v in b {
                    g.add_edge(u, v).expect("sides are disjoint");
                }
            }
        }
    }
    rec(&mut g, &verts, rng);
    g
}

/// Split graph: a random clique, the rest independent with random edges
/// into the clique. Vertex ids are shuffled.
pub fn random_split_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let c = if n == 0 { 0 } else { rng.random_range(0..=n) };
    let (clique, rest) = ids.split_at(c);
    let mut g = Graph::empty(n);
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            g.add_edge(u, v).expect("fresh pair");
        }
    }
    for &u in rest {
        for &v in clique {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// Bipartite graph with sides `0..a` and `a..a+b`.
pub fn random_bipartite_graph(a: usize, b: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// Random chordal graph: each new vertex joins a random clique of the
/// current graph (a subset of an existing vertex's earlier clique).
pub fn random_chordal_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    // cliques[v] = v together with the neighbors chosen when v was added
    let mut cliques: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut chosen = Vec::new();
        if v > 0 && rng.random_bool(0.8) {
            let base = &cliques[rng.random_range(0..v)];
            chosen = base.iter().copied().filter(|_| rng.random_bool(0.6)).collect();
        }
        for &u in &chosen {
            g.add_edge(u, v).expect("fresh pair");
        }
        chosen.push(v);
        cliques.push(chosen);
    }
    g
}

/// Proper coloring with colors `1..=k` drawn by randomized backtracking,
/// honoring `fixed` entries. `None` when no completion exists.
pub fn random_coloring_with(
    graph: &Graph,
    k: u32,
    fixed: &[Option<Color>],
    rng: &mut impl Rng,
) -> Option<Coloring> {
    let n = graph.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    // fixed vertices first so conflicts are found early
    order.sort_by_key(|&v| fixed[v].is_none());
    let mut colors = vec![None::<Color>; n];
    let mut steps = 0usize;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        order: &[usize],
        graph: &Graph,
        k: u32,
        fixed: &[Option<Color>],
        colors: &mut [Option<Color>],
        steps: &mut usize,
        rng: &mut impl Rng,
    ) -> bool {
        *steps += 1;
        if *steps > 200_000 {
            return false;
        }
        let Some(&v) = order.get(i) else {
            return true;
        };
        let mut choices: Vec<Color> = match fixed[v] {
            Some(c) => vec![c],
            None => (1..=k).map(Color::new).collect(),
        };
        choices.shuffle(rng);
        for c in choices {
            let clash = graph
                .neighbors(v)
                .iter()
                .any(|&w| colors[w] == Some(c) && !c.is_star());
            if clash {
                continue;
            }
            colors[v] = Some(c);
            if rec(i + 1, order, graph, k, fixed, colors, steps, rng) {
                return true;
            }
            colors[v] = None;
        }
        false
    }
    if !rec(0, &order, graph, k, fixed, &mut colors, &mut steps, rng) {
        return None;
    }
    let colors = colors.into_iter().map(|c| c.expect("all assigned")).collect();
    Some(Coloring::from_parts_unchecked(colors, k))
}

pub fn random_coloring(graph: &Graph, k: u32, rng: &mut impl Rng) -> Option<Coloring> {
    random_coloring_with(graph, k, &vec![None; graph.n()], rng)
}

/// Extended coloring: each vertex becomes `*` with probability `star_p`,
/// the rest is colored properly.
pub fn random_extended_coloring(graph: &Graph, k: u32, star_p: f64, rng: &mut impl Rng) -> Option<Coloring> {
    let fixed: Vec<Option<Color>> = (0..graph.n())
        .map(|_| rng.random_bool(star_p).then_some(Color::STAR))
        .collect();
    random_coloring_with(graph, k, &fixed, rng)
}

/// `f` after `steps` uniformly chosen legal swaps.
pub fn random_walk(graph: &Graph, f: &Coloring, steps: usize, rng: &mut impl Rng) -> Coloring {
    let mut cur = f.clone();
    for _ in 0..steps {
        let moves = legal_swaps(graph, &cur).expect("walk stays proper");
        let Some(&mv) = moves.choose(rng) else {
            break;
        };
        cur = apply_swap(graph, &cur, mv).expect("legal move");
    }
    cur
}

/// A proper coloring with the same color counts as `f` (including `*`),
/// found by rejection sampling of colorings that put `*` on the same number
/// of vertices; falls back to a random walk from `f`.
pub fn random_valid_partner(graph: &Graph, f: &Coloring, rng: &mut impl Rng) -> Coloring {
    let counts = f.color_counts();
    let stars = counts[0];
    for _ in 0..200 {
        let mut fixed = vec![None; graph.n()];
        let mut ids: Vec<usize> = (0..graph.n()).collect();
        ids.shuffle(rng);
        for &v in &ids[..stars] {
            fixed[v] = Some(Color::STAR);
        }
        if let Some(g) = random_coloring_with(graph, f.k(), &fixed, rng) {
            if g.color_counts() == counts {
                return g;
            }
        }
    }
    random_walk(graph, f, 4 * graph.n() + 4, rng)
}

/// Proper source coloring plus a valid target, on `graph`.
pub fn random_valid_instance(graph: Graph, k: u32, star_p: f64, rng: &mut impl Rng) -> Result<Instance> {
    let fs = random_extended_coloring(&graph, k, star_p, rng)
        .ok_or_else(|| precondition(format!("no proper {k}-coloring found")))?;
    let ft = random_valid_partner(&graph, &fs, rng);
    Instance::new(graph, k, fs, ft)
}

/// Two independent proper colorings; the pair need not be valid.
pub fn random_instance(graph: Graph, k: u32, rng: &mut impl Rng) -> Result<Instance> {
    let none = || precondition(format!("no proper {k}-coloring found"));
    let fs = random_coloring(&graph, k, rng).ok_or_else(none)?;
    let ft = random_coloring(&graph, k, rng).ok_or_else(none)?;
    Instance::new(graph, k, fs, ft)
}

/// Random independent set of exactly `size` vertices, if one is found.
pub fn random_independent_set(graph: &Graph, size: usize, rng: &mut impl Rng) -> Option<Vec<usize>> {
    for _ in 0..100 {
        let mut order: Vec<usize> = (0..graph.n()).collect();
        order.shuffle(rng);
        let mut set: Vec<usize> = Vec::new();
        for v in order {
            if set.len() == size {
                break;
            }
            if set.iter().all(|&u| !graph.has_edge(u, v)) {
                set.push(v);
            }
        }
        if set.len() == size {
            set.sort_unstable();
            return Some(set);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Path,
    Cograph,
    Split,
    Random,
}

/// Instance used by the command-line generator. When `valid` is set the
/// target has the same color counts as the source.
pub fn generate(kind: GraphKind, n: usize, k: u32, valid: bool, seed: u64) -> Result<Instance> {
    let mut r = rng(seed);
    let graph = match kind {
        GraphKind::Path => Graph::path(n),
        GraphKind::Cograph => random_cograph(n, &mut r),
        GraphKind::Split => random_split_graph(n, 0.5, &mut r),
        GraphKind::Random => random_graph(n, 0.3, &mut r),
    };
    if valid {
        random_valid_instance(graph, k, 0.0, &mut r)
    } else {
        random_instance(graph, k, &mut r)
    }
}

/// [`generate`] with the smallest `k >= min_k` that admits a proper
/// coloring. The graph depends on the seed only, so the result is still
/// deterministic.
pub fn generate_min_k(kind: GraphKind, n: usize, min_k: u32, valid: bool, seed: u64) -> Result<Instance> {
    let top = min_k.max(n as u32).max(1);
    (min_k.max(1)..=top)
        .find_map(|k| generate(kind, n, k, valid, seed).ok())
        .ok_or_else(|| precondition("no feasible color count"))
}
