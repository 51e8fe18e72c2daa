//! 3-colorings of paths as strings over `{1,2,3}` and the contraction
//! invariant that decides reachability.
//!
//! Positions are 0-based throughout: swap position `i` exchanges characters
//! `i` and `i + 1`.

use std::fmt;

use crate::coloring::{is_valid, Coloring, Instance};
use crate::error::{ill_formed, precondition, Error, Result};
use crate::graph::Graph;

/// Colors along a path; adjacent characters differ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColoringString {
    chars: Vec<u8>,
}

impl ColoringString {
    pub fn new(chars: Vec<u8>) -> Result<Self> {
        if let Some(&c) = chars.iter().find(|&&c| !(1..=3).contains(&c)) {
            return Err(ill_formed(format!("character {c} outside 1..=3")));
        }
        if chars.windows(2).any(|w| w[0] == w[1]) {
            return Err(ill_formed("adjacent characters must differ"));
        }
        Ok(Self { chars })
    }

    pub fn chars(&self) -> &[u8] {
        &self.chars
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// The string with positions `i` and `i + 1` exchanged, if that swap is
    /// legal.
    pub fn swapped(&self, i: usize) -> Result<Option<Self>> {
        if !is_swappable(self, i)? {
            return Ok(None);
        }
        let mut chars = self.chars.clone();
        chars.swap(i, i + 1);
        Ok(Some(Self { chars }))
    }
}

impl std::str::FromStr for ColoringString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars = s
            .bytes()
            .map(|b| match b {
                b'1'..=b'3' => Ok(b - b'0'),
                _ => Err(ill_formed(format!("unexpected character {:?}", b as char))),
            })
            .collect::<Result<_>>()?;
        Self::new(chars)
    }
}

impl fmt::Display for ColoringString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.chars {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Result of contracting a coloring string as far as possible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PathInvariant {
    Nil,
    Rigid(ColoringString),
}

impl fmt::Display for PathInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathInvariant::Nil => f.write_str("NIL"),
            PathInvariant::Rigid(s) => s.fmt(f),
        }
    }
}

/// Vertices of a path graph in order, starting from the lower-id endpoint.
pub fn path_order(graph: &Graph) -> Result<Vec<usize>> {
    let n = graph.n();
    let not_path = || Error::WrongSolver("graph is not a path".into());
    if n == 0 {
        return Ok(Vec::new());
    }
    if graph.edge_count() != n - 1 || graph.max_degree() > 2 || !graph.is_connected() {
        return Err(not_path());
    }
    let start = (0..n).find(|&v| graph.degree(v) <= 1).ok_or_else(not_path)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = graph.neighbors(cur).iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    Ok(order)
}

/// Coloring string of a proper 3-coloring of a path.
pub fn string_of(graph: &Graph, f: &Coloring) -> Result<ColoringString> {
    if f.k() != 3 {
        return Err(Error::WrongSolver(format!("path solver needs k = 3, got {}", f.k())));
    }
    if f.len() != graph.n() {
        return Err(ill_formed("coloring length differs from vertex count"));
    }
    if f.has_star() {
        return Err(Error::WrongSolver("path solver takes plain colorings".into()));
    }
    let order = path_order(graph)?;
    ColoringString::new(order.iter().map(|&v| f.get(v).raw() as u8).collect())
        .map_err(|_| precondition("coloring is not proper"))
}

fn distinct(a: u8, b: u8, c: u8) -> bool {
    a != b && b != c && a != c
}

/// Whether characters `i` and `i + 1` may be exchanged.
pub fn is_swappable(s: &ColoringString, i: usize) -> Result<bool> {
    let c = &s.chars;
    let n = c.len();
    if i + 1 >= n {
        return Err(precondition(format!("swap position {i} out of range for length {n}")));
    }
    if n == 2 {
        return Ok(true);
    }
    Ok(if i == 0 {
        distinct(c[0], c[1], c[2])
    } else if i == n - 2 {
        distinct(c[n - 3], c[n - 2], c[n - 1])
    } else {
        c[i - 1] == c[i + 2]
    })
}

/// Every string reachable by one contraction, sorted and deduplicated.
pub fn contractions(s: &ColoringString) -> Vec<ColoringString> {
    let c = &s.chars;
    let n = c.len();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    let mut push = |chars: Vec<u8>| out.push(ColoringString { chars });
    for i in 1..n.saturating_sub(2) {
        if c[i - 1] == c[i + 2] {
            // drop c[i-1..=i+1]
            push([&c[..i - 1], &c[i + 2..]].concat());
        }
    }
    if distinct(c[0], c[1], c[2]) {
        push(c[3..].to_vec());
    }
    if distinct(c[n - 3], c[n - 2], c[n - 1]) {
        push(c[..n - 3].to_vec());
    }
    out.sort();
    out.dedup();
    out
}

/// Contracts `s` until rigid using a single left-to-right stack pass.
pub fn invariant(s: &ColoringString) -> PathInvariant {
    let mut d: Vec<u8> = Vec::with_capacity(s.len());
    for &x in &s.chars {
        d.push(x);
        let m = d.len();
        if m == 3 && distinct(d[0], d[1], d[2]) {
            d.clear();
        } else if m >= 4 && d[m - 4] == x {
            d.truncate(m - 3);
        }
    }
    while d.len() >= 3 {
        let m = d.len();
        if !distinct(d[m - 3], d[m - 2], d[m - 1]) {
            break;
        }
        d.truncate(m - 3);
    }
    if d.len() <= 2 {
        PathInvariant::Nil
    } else {
        PathInvariant::Rigid(ColoringString { chars: d })
    }
}

/// Decides a 3-CRCS instance on a path.
pub fn solve_path(instance: &Instance) -> Result<bool> {
    if instance.k != 3 {
        return Err(Error::WrongSolver(format!("path solver needs k = 3, got {}", instance.k)));
    }
    let s = string_of(&instance.graph, &instance.source)?;
    let t = string_of(&instance.graph, &instance.target)?;
    Ok(is_valid(instance) && invariant(&s) == invariant(&t))
}
