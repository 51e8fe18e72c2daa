//! Nondeterministic Constraint Logic machines restricted to AND/OR vertices.
//!
//! A configuration orients every edge; it is legal when each vertex receives
//! total incoming weight at least 2. Moves flip one edge.

use crate::error::{ill_formed, precondition, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NclKind {
    /// Incident weights 1, 1, 2.
    And,
    /// Incident weights 2, 2, 2.
    Or,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NclEdge {
    pub u: usize,
    pub v: usize,
    pub weight: u8,
}

impl NclEdge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NclMachine {
    kinds: Vec<NclKind>,
    edges: Vec<NclEdge>,
    incident: Vec<[usize; 3]>,
}

impl NclMachine {
    /// Validates degree 3 everywhere and the AND/OR weight patterns.
    pub fn new(kinds: Vec<NclKind>, edges: Vec<NclEdge>) -> Result<Self> {
        let n = kinds.len();
        let mut lists = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(ill_formed(format!("edge {id} has an endpoint out of range")));
            }
            if e.u == e.v {
                return Err(ill_formed(format!("edge {id} is a loop")));
            }
            if !(1..=2).contains(&e.weight) {
                return Err(ill_formed(format!("edge {id} has weight {}", e.weight)));
            }
            lists[e.u].push(id);
            lists[e.v].push(id);
        }
        let mut incident = Vec::with_capacity(n);
        for (v, list) in lists.into_iter().enumerate() {
            let ids: [usize; 3] = list.as_slice().try_into().map_err(|_| {
                precondition(format!("vertex {v} has degree {}, expected 3", list.len()))
            })?;
            let mut weights: Vec<u8> = ids.iter().map(|&e| edges[e].weight).collect();
            weights.sort_unstable();
            let ok = match kinds[v] {
                NclKind::And => weights == [1, 1, 2],
                NclKind::Or => weights == [2, 2, 2],
            };
            if !ok {
                return Err(precondition(format!(
                    "vertex {v} ({:?}) has incident weights {weights:?}",
                    kinds[v]
                )));
            }
            incident.push(ids);
        }
        Ok(Self {
            kinds,
            edges,
            incident,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kinds(&self) -> &[NclKind] {
        &self.kinds
    }

    pub fn edges(&self) -> &[NclEdge] {
        &self.edges
    }

    /// Incident edge ids of `v`, ascending.
    pub fn incident(&self, v: usize) -> [usize; 3] {
        self.incident[v]
    }

    /// Total weight of edges pointing at `v` under `heads`.
    pub fn in_weight(&self, heads: &[usize], v: usize) -> u32 {
        self.incident[v]
            .iter()
            .filter(|&&e| heads[e] == v)
            .map(|&e| self.edges[e].weight as u32)
            .sum()
    }

    /// Checks that `orientation` covers every edge with one of its endpoints
    /// and satisfies the in-weight constraint.
    pub fn check(&self, orientation: &NclOrientation) -> Result<()> {
        let heads = orientation.heads();
        if heads.len() != self.edges.len() {
            return Err(ill_formed("orientation must direct every edge exactly once"));
        }
        for (id, (e, &h)) in self.edges.iter().zip(heads).enumerate() {
            if h != e.u && h != e.v {
                return Err(ill_formed(format!("edge {id} is directed toward a non-endpoint")));
            }
        }
        for v in 0..self.vertex_count() {
            if self.in_weight(heads, v) < 2 {
                return Err(precondition(format!("vertex {v} has incoming weight below 2")));
            }
        }
        Ok(())
    }
}

/// For each edge id, the endpoint it is directed toward.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NclOrientation {
    heads: Vec<usize>,
}

impl NclOrientation {
    pub fn new(heads: Vec<usize>) -> Self {
        Self { heads }
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    pub fn toward(&self, edge: usize) -> usize {
        self.heads[edge]
    }

    /// Same orientation with `edge` reversed.
    pub fn flipped(&self, machine: &NclMachine, edge: usize) -> Self {
        let mut heads = self.heads.clone();
        heads[edge] = machine.edges()[edge].other(heads[edge]);
        Self { heads }
    }
}

/// A machine together with start and target configurations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NclInstance {
    pub machine: NclMachine,
    pub source: NclOrientation,
    pub target: NclOrientation,
}

impl NclInstance {
    pub fn new(machine: NclMachine, source: NclOrientation, target: NclOrientation) -> Result<Self> {
        machine.check(&source)?;
        machine.check(&target)?;
        Ok(Self {
            machine,
            source,
            target,
        })
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Small AND/OR machine: vertices 0..=2 are OR, 3..=5 are AND. Returns the
    /// machine and one legal configuration.
    pub fn six_vertex_machine() -> (NclMachine, NclOrientation) {
        // (tail, head, weight)
        let arcs = [
            (0, 1, 2),
            (2, 0, 2),
            (3, 0, 2),
            (1, 2, 2),
            (1, 4, 2),
            (2, 5, 2),
            (4, 3, 1),
            (5, 3, 1),
            (5, 4, 1),
        ];
        let kinds = vec![
            NclKind::Or,
            NclKind::Or,
            NclKind::Or,
            NclKind::And,
            NclKind::And,
            NclKind::And,
        ];
        let edges = arcs
            .iter()
            .map(|&(u, v, weight)| NclEdge { u, v, weight })
            .collect();
        let heads = arcs.iter().map(|&(_, h, _)| h).collect();
        (NclMachine::new(kinds, edges).unwrap(), NclOrientation::new(heads))
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::six_vertex_machine;
    use super::*;
    use crate::Error;

    #[test]
    fn fixture_configuration_is_legal() {
        let (m, c) = six_vertex_machine();
        m.check(&c).unwrap();
        assert_eq!(m.in_weight(c.heads(), 0), 4);
        assert_eq!(m.in_weight(c.heads(), 4), 3);
    }

    #[test]
    fn lone_or_vertex_is_rejected() {
        let err = NclMachine::new(vec![NclKind::Or], vec![]).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn wrong_weights_are_rejected() {
        let (m, _) = six_vertex_machine();
        let mut kinds = m.kinds().to_vec();
        kinds[0] = NclKind::And;
        assert!(NclMachine::new(kinds, m.edges().to_vec()).is_err());
    }

    #[test]
    fn flipping_can_break_the_constraint() {
        let (m, c) = six_vertex_machine();
        // edge 0 is the only arc into vertex 1
        assert!(m.check(&c.flipped(&m, 0)).is_err());
        // edge 8 (5 -> 4, weight 1) can be reversed
        m.check(&c.flipped(&m, 8)).unwrap();
    }
}
