//! Colorings, extended colorings and CRCS instances.

use std::fmt;

use crate::error::{ill_formed, Result};
use crate::graph::Graph;

/// A color in `1..=k`, or the flexible color `*` of extended colorings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color(u32);

impl Color {
    /// The flexible color `*`. Adjacent vertices may share it.
    pub const STAR: Color = Color(0);

    /// A regular color. Panics on 0, which is reserved for `*`.
    pub fn new(c: u32) -> Self {
        assert!(c > 0, "colors are 1-based");
        Color(c)
    }

    pub fn is_star(self) -> bool {
        self.0 == 0
    }

    /// Raw value; 0 for `*`.
    pub fn raw(self) -> u32 {
        self.0
    }

    pub(crate) fn from_raw(raw: u32) -> Self {
        Color(raw)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_star() {
            f.write_str("*")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// A map from vertices to colors in `[k]`, optionally using `*`.
///
/// Properness is not enforced on construction; see [`is_proper`] and
/// [`is_proper_extended`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
    k: u32,
}

impl Coloring {
    /// Checks that every entry is `*` or lies in `1..=k`.
    pub fn new(colors: Vec<Color>, k: u32) -> Result<Self> {
        if let Some((v, c)) = colors.iter().enumerate().find(|(_, c)| c.raw() > k) {
            return Err(ill_formed(format!("vertex {v} has color {c} outside [{k}]")));
        }
        Ok(Self { colors, k })
    }

    /// Builds a plain coloring from 1-based integers.
    pub fn from_slice(colors: &[u32], k: u32) -> Result<Self> {
        if colors.contains(&0) {
            return Err(ill_formed("color 0 is not allowed; colors are 1-based"));
        }
        Self::new(colors.iter().map(|&c| Color(c)).collect(), k)
    }

    /// Builds an extended coloring; `None` entries become `*`.
    pub fn from_extended(colors: &[Option<u32>], k: u32) -> Result<Self> {
        let colors = colors
            .iter()
            .map(|c| match c {
                None => Ok(Color::STAR),
                Some(0) => Err(ill_formed("color 0 is not allowed; colors are 1-based")),
                Some(c) => Ok(Color(*c)),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(colors, k)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn get(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn has_star(&self) -> bool {
        self.colors.iter().any(|c| c.is_star())
    }

    /// `counts[0]` is the number of `*` entries, `counts[c]` that of color `c`.
    pub fn color_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.k as usize + 1];
        for c in &self.colors {
            counts[c.raw() as usize] += 1;
        }
        counts
    }

    /// Restriction to `vertices`, in that order.
    pub fn restrict(&self, vertices: &[usize]) -> Self {
        Self {
            colors: vertices.iter().map(|&v| self.colors[v]).collect(),
            k: self.k,
        }
    }

    pub(crate) fn swap_in_place(&mut self, u: usize, v: usize) {
        self.colors.swap(u, v);
    }

    pub(crate) fn from_parts_unchecked(colors: Vec<Color>, k: u32) -> Self {
        Self { colors, k }
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

fn check_length(graph: &Graph, f: &Coloring) -> Result<()> {
    if f.len() != graph.n() {
        return Err(ill_formed(format!(
            "coloring has {} entries but the graph has {} vertices",
            f.len(),
            graph.n()
        )));
    }
    Ok(())
}

/// True iff no edge is monochromatic. `*` entries are rejected.
pub fn is_proper(graph: &Graph, f: &Coloring) -> Result<bool> {
    check_length(graph, f)?;
    if f.has_star() {
        return Err(ill_formed("plain coloring contains *"));
    }
    Ok(graph.edges().all(|(u, v)| f.get(u) != f.get(v)))
}

/// True iff every edge has differently colored endpoints or both endpoints
/// colored `*`.
pub fn is_proper_extended(graph: &Graph, f: &Coloring) -> Result<bool> {
    check_length(graph, f)?;
    Ok(graph.edges().all(|(u, v)| proper_pair(f.get(u), f.get(v))))
}

#[inline]
pub(crate) fn proper_pair(a: Color, b: Color) -> bool {
    a != b || a.is_star()
}

/// An instance `(G, k, f_s, f_t)` of CRCS, or of its extended variant when
/// either coloring uses `*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: u32,
    pub source: Coloring,
    pub target: Coloring,
}

impl Instance {
    /// Checks lengths, color ranges and (extended) properness of both colorings.
    pub fn new(graph: Graph, k: u32, source: Coloring, target: Coloring) -> Result<Self> {
        if k == 0 {
            return Err(ill_formed("k must be positive"));
        }
        for (name, f) in [("source", &source), ("target", &target)] {
            if f.k() != k {
                return Err(ill_formed(format!("{name} coloring uses k = {}, instance k = {k}", f.k())));
            }
            if !is_proper_extended(&graph, f)? {
                return Err(ill_formed(format!("{name} coloring is not proper")));
            }
        }
        Ok(Self {
            graph,
            k,
            source,
            target,
        })
    }

    /// Convenience constructor from 1-based integer slices.
    pub fn from_slices(graph: Graph, k: u32, source: &[u32], target: &[u32]) -> Result<Self> {
        let source = Coloring::from_slice(source, k)?;
        let target = Coloring::from_slice(target, k)?;
        Self::new(graph, k, source, target)
    }

    pub fn is_extended(&self) -> bool {
        self.source.has_star() || self.target.has_star()
    }
}

/// Equal color counts in source and target, for every color and for `*`.
pub fn is_valid(instance: &Instance) -> bool {
    instance.source.color_counts() == instance.target.color_counts()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Six-vertex example graph used across the tests.
    pub fn example_graph() -> Graph {
        let edges = [(0, 1), (1, 3), (3, 5), (5, 4), (4, 2), (2, 0), (0, 3), (2, 5)];
        Graph::from_edges(6, edges).unwrap()
    }

    pub fn example_instance() -> Instance {
        Instance::from_slices(example_graph(), 3, &[1, 2, 3, 3, 1, 2], &[1, 3, 2, 2, 3, 1]).unwrap()
    }
}
