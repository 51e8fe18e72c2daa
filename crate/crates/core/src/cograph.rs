//! Cotrees and the extended-coloring recursion that decides swap
//! reachability on cographs.

use std::fmt;

use crate::coloring::{Color, Coloring, Instance};
use crate::error::{ill_formed, Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(usize),
    Union(usize, usize),
    Join(usize, usize),
}

/// Binary cotree. Nodes live in an arena; children precede their parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    root: Option<usize>,
    n: usize,
}

impl Cotree {
    pub fn nodes(&self) -> &[CotreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    /// Number of leaves (vertices).
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Leaf vertex ids below `node`, ascending.
    pub fn leaves(&self, node: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(x) = stack.pop() {
            match self.nodes[x] {
                CotreeNode::Leaf(v) => out.push(v),
                CotreeNode::Union(a, b) | CotreeNode::Join(a, b) => stack.extend([a, b]),
            }
        }
        out.sort_unstable();
        out
    }

    /// The graph this cotree describes.
    pub fn evaluate(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for node in &self.nodes {
            if let CotreeNode::Join(a, b) = *node {
                for u in self.leaves(a) {
                    for v in self.leaves(b) {
                        g.add_edge(u, v).expect("join sides are disjoint");
                    }
                }
            }
        }
        g
    }

    fn push(&mut self, node: CotreeNode) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    /// Combines `children` left-deep under nodes built by `make`.
    fn fold(&mut self, children: Vec<usize>, make: fn(usize, usize) -> CotreeNode) -> usize {
        let mut it = children.into_iter();
        let first = it.next().expect("at least one child");
        it.fold(first, |acc, c| self.push(make(acc, c)))
    }

    /// Children of `x`, undoing the left-deep split of wide nodes.
    fn children(&self, x: usize) -> Vec<usize> {
        let same = |y: usize| std::mem::discriminant(&self.nodes[y]) == std::mem::discriminant(&self.nodes[x]);
        let mut out = Vec::new();
        let mut cur = x;
        while let CotreeNode::Union(a, b) | CotreeNode::Join(a, b) = self.nodes[cur] {
            out.push(b);
            if !same(a) {
                out.push(a);
                break;
            }
            cur = a;
        }
        out.reverse();
        out
    }

    fn write_node(&self, x: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.nodes[x] {
            CotreeNode::Leaf(v) => return write!(f, "{v}"),
            CotreeNode::Union(..) => 'U',
            CotreeNode::Join(..) => 'J',
        };
        write!(f, "({tag}")?;
        for c in self.children(x) {
            f.write_str(" ")?;
            self.write_node(c, f)?;
        }
        f.write_str(")")
    }
}

/// S-expression form: a leaf is a vertex id, an inner node is
/// `(U a b ...)` or `(J a b ...)`. The empty cotree prints as `()`.
impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root {
            None => f.write_str("()"),
            Some(r) => self.write_node(r, f),
        }
    }
}

impl std::str::FromStr for Cotree {
    type Err = Error;

    /// Parses the S-expression form. Nodes with more than two children are
    /// split left-deep. Leaves must be exactly `0..n` for some `n`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
            tree: Cotree {
                nodes: Vec::new(),
                root: None,
                n: 0,
            },
        };
        p.skip_ws();
        if s[p.pos..].trim() == "()" {
            return Ok(p.tree);
        }
        let root = p.node()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        let mut tree = p.tree;
        tree.root = Some(root);
        let mut seen = tree.leaves(root);
        tree.n = seen.len();
        seen.dedup();
        if seen.len() != tree.n || seen.last().is_some_and(|&v| v + 1 != tree.n) {
            return Err(Error::Semantic("cotree leaves must be the vertices 0..n, each once".into()));
        }
        Ok(tree)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    tree: Cotree,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        // line and column of self.pos
        let before = &self.src[..self.pos.min(self.src.len())];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = self.pos - before.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1) + 1;
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn node(&mut self) -> Result<usize> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b'0'..=b'9') => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                let v = text.parse().map_err(|_| self.error("vertex id too large"))?;
                Ok(self.tree.push(CotreeNode::Leaf(v)))
            }
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let make: fn(usize, usize) -> CotreeNode = match self.src.get(self.pos) {
                    Some(b'U') => CotreeNode::Union,
                    Some(b'J') => CotreeNode::Join,
                    _ => return Err(self.error("expected U or J")),
                };
                self.pos += 1;
                let mut children = Vec::new();
                loop {
                    self.skip_ws();
                    match self.src.get(self.pos) {
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        None => return Err(self.error("unclosed parenthesis")),
                        _ => children.push(self.node()?),
                    }
                }
                if children.len() < 2 {
                    return Err(self.error("inner node needs at least two children"));
                }
                Ok(self.tree.fold(children, make))
            }
            _ => Err(self.error("expected a vertex id or '('")),
        }
    }
}

/// Builds a cotree by alternating component and co-component splits.
pub fn build_cotree(graph: &Graph) -> Result<Cotree> {
    let mut tree = Cotree {
        nodes: Vec::new(),
        root: None,
        n: graph.n(),
    };
    if graph.n() > 0 {
        let all: Vec<usize> = (0..graph.n()).collect();
        tree.root = Some(build(graph, &all, &mut tree)?);
    }
    Ok(tree)
}

fn build(graph: &Graph, verts: &[usize], tree: &mut Cotree) -> Result<usize> {
    if let [v] = verts {
        return Ok(tree.push(CotreeNode::Leaf(*v)));
    }
    let sub = graph.induced(verts);
    let lift = |parts: Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        parts
            .into_iter()
            .map(|p| p.into_iter().map(|i| verts[i]).collect())
            .collect()
    };
    let comps = sub.components();
    let (parts, make): (_, fn(usize, usize) -> CotreeNode) = if comps.len() > 1 {
        (lift(comps), CotreeNode::Union)
    } else {
        let co = sub.complement().components();
        if co.len() == 1 {
            return Err(Error::NotACograph);
        }
        (lift(co), CotreeNode::Join)
    };
    let children = parts
        .iter()
        .map(|p| build(graph, p, tree))
        .collect::<Result<Vec<_>>>()?;
    Ok(tree.fold(children, make))
}

/// Colors that can cross a join: those used exactly once, plus `*` when
/// present.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwappableColors {
    /// Indexed by raw color; slot 0 is `*`.
    member: Vec<bool>,
}

impl SwappableColors {
    pub fn contains(&self, c: Color) -> bool {
        self.member.get(c.raw() as usize).copied().unwrap_or(false)
    }

    pub fn is_empty(&self) -> bool {
        !self.member.contains(&true)
    }

    /// Members in ascending order, `*` first.
    pub fn colors(&self) -> Vec<Color> {
        (0..self.member.len())
            .filter(|&c| self.member[c])
            .map(|c| Color::from_raw(c as u32))
            .collect()
    }
}

fn swappable_of(colors: impl Iterator<Item = Color>, k: u32) -> SwappableColors {
    let mut counts = vec![0usize; k as usize + 1];
    for c in colors {
        counts[c.raw() as usize] += 1;
    }
    let member = counts
        .iter()
        .enumerate()
        .map(|(c, &m)| if c == 0 { m > 0 } else { m == 1 })
        .collect();
    SwappableColors { member }
}

pub fn swappable_colors(f: &Coloring) -> SwappableColors {
    swappable_of(f.colors().iter().copied(), f.k())
}

/// Restriction of `f` to `part` with every swappable color replaced by `*`.
pub fn star_project(f: &Coloring, part: &[usize], s: &SwappableColors) -> Coloring {
    let colors = part
        .iter()
        .map(|&v| {
            let c = f.get(v);
            if s.contains(c) {
                Color::STAR
            } else {
                c
            }
        })
        .collect();
    Coloring::from_parts_unchecked(colors, f.k())
}

/// Decides extended swap reachability on the graph of `cotree`.
pub fn solve_ecrcs_cograph(cotree: &Cotree, k: u32, fs: &Coloring, ft: &Coloring) -> Result<bool> {
    if fs.len() != cotree.n || ft.len() != cotree.n {
        return Err(ill_formed("coloring length differs from cotree size"));
    }
    if fs.colors().iter().chain(ft.colors()).any(|c| c.raw() > k) {
        return Err(ill_formed(format!("color outside [{k}]")));
    }
    let Some(root) = cotree.root else {
        return Ok(true);
    };
    let leaves: Vec<Vec<usize>> = (0..cotree.nodes.len()).map(|x| cotree.leaves(x)).collect();
    let mut s = fs.colors().to_vec();
    let mut t = ft.colors().to_vec();
    Ok(Solver { tree: cotree, leaves: &leaves, k }.solve(root, &mut s, &mut t))
}

struct Solver<'a> {
    tree: &'a Cotree,
    leaves: &'a [Vec<usize>],
    k: u32,
}

impl Solver<'_> {
    fn counts(&self, f: &[Color], verts: &[usize]) -> Vec<usize> {
        let mut c = vec![0; self.k as usize + 1];
        for &v in verts {
            c[f[v].raw() as usize] += 1;
        }
        c
    }

    fn swappable(&self, f: &[Color], verts: &[usize]) -> SwappableColors {
        swappable_of(verts.iter().map(|&v| f[v]), self.k)
    }

    /// `s` and `t` are global colorings; only the leaves of `x` are read or
    /// written.
    fn solve(&self, x: usize, s: &mut [Color], t: &mut [Color]) -> bool {
        let verts = &self.leaves[x];
        if self.counts(s, verts) != self.counts(t, verts) {
            return false;
        }
        match self.tree.nodes[x] {
            CotreeNode::Leaf(v) => s[v] == t[v],
            CotreeNode::Union(a, b) => self.solve(a, s, t) && self.solve(b, s, t),
            CotreeNode::Join(a, b) => {
                let (la, lb) = (&self.leaves[a], &self.leaves[b]);
                let (sa, sb) = (self.swappable(s, la), self.swappable(s, lb));
                let (ta, tb) = (self.swappable(t, la), self.swappable(t, lb));
                if sa.is_empty() != ta.is_empty() || sb.is_empty() != tb.is_empty() {
                    return false;
                }
                if !sa.is_empty() && !sb.is_empty() {
                    let whole_s = self.swappable(s, verts);
                    let whole_t = self.swappable(t, verts);
                    for &v in verts {
                        if whole_s.contains(s[v]) {
                            s[v] = Color::STAR;
                        }
                        if whole_t.contains(t[v]) {
                            t[v] = Color::STAR;
                        }
                    }
                }
                self.solve(a, s, t) && self.solve(b, s, t)
            }
        }
    }
}

/// Decides an instance on a cograph, building the cotree first. Extended
/// instances are accepted.
pub fn solve_crcs_cograph(instance: &Instance) -> Result<bool> {
    let tree = build_cotree(&instance.graph)?;
    solve_crcs_with_cotree(instance, &tree)
}

/// Like [`solve_crcs_cograph`] with a caller-supplied cotree, which must
/// describe the instance graph exactly.
pub fn solve_crcs_with_cotree(instance: &Instance, tree: &Cotree) -> Result<bool> {
    if tree.vertex_count() != instance.graph.n() || tree.evaluate() != instance.graph {
        return Err(Error::Semantic("cotree does not describe the instance graph".into()));
    }
    solve_ecrcs_cograph(tree, instance.k, &instance.source, &instance.target)
}
