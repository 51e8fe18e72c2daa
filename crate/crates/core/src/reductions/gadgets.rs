//! NCL machines as 3-colorings: one gadget per machine vertex, one port edge
//! per machine edge. A port colored 1 means its edge points into the gadget.

use super::{Construction, GadgetLayout};
use crate::coloring::{Color, Coloring, Instance};
use crate::error::{precondition, Result};
use crate::graph::Graph;
use crate::ncl::{NclInstance, NclKind, NclMachine};

/// 4-cycle colorings clockwise from the vertex next to the host.
const PENDANT_1: [u32; 4] = [1, 2, 1, 3];
const PENDANT_3: [u32; 4] = [3, 1, 3, 2];

/// Attaches a `c`-forbidden pendant to `x`: a 4-cycle whose first vertex is
/// adjacent to `x` and permanently colored `c`. Returns the cycle vertices.
pub fn attach_forbidden_pendant(b: &mut Construction, x: usize, c: u32, role: &str) -> Result<[usize; 4]> {
    let colors = match c {
        1 => PENDANT_1,
        3 => PENDANT_3,
        _ => return Err(precondition(format!("pendant color must be 1 or 3, got {c}"))),
    };
    let cycle = ["y", "c1", "c2", "c3"].map(|name| b.add_vertex(format!("{role}.{name}")));
    b.add_edge(x, cycle[0]);
    for i in 0..4 {
        b.add_edge(cycle[i], cycle[(i + 1) % 4]);
        b.fix(cycle[i], colors[i]);
    }
    Ok(cycle)
}

/// Vertex ids of one gadget.
#[derive(Debug, Clone)]
struct Gadget {
    kind: NclKind,
    /// Ports in interface order (the weight-2 edge first for AND).
    ports: [usize; 3],
    /// AND: `[u2^1, u0]`. OR: `v_j^i` for `j < 4` in (i, j) order.
    internals: Vec<usize>,
}

fn build_gadget(b: &mut Construction, kind: NclKind, name: &str) -> Result<Gadget> {
    match kind {
        NclKind::And => {
            let ports = [1, 2, 3].map(|i| b.add_vertex(format!("{name}.u1_{i}")));
            let u21 = b.add_vertex(format!("{name}.u2_1"));
            let u0 = b.add_vertex(format!("{name}.u0"));
            b.add_edge(ports[0], u21);
            b.add_edge(u21, u0);
            b.add_edge(u0, ports[1]);
            b.add_edge(u0, ports[2]);
            for (i, &p) in ports.iter().enumerate() {
                attach_forbidden_pendant(b, p, 3, &format!("{name}.u1_{}", i + 1))?;
            }
            Ok(Gadget {
                kind,
                ports,
                internals: vec![u21, u0],
            })
        }
        NclKind::Or => {
            let mut v = [[0usize; 4]; 3];
            for (i, row) in v.iter_mut().enumerate() {
                for (j, slot) in row.iter_mut().enumerate() {
                    *slot = b.add_vertex(format!("{name}.v{}_{}", j + 1, i + 1));
                }
            }
            b.add_edge(v[0][0], v[1][0]);
            b.add_edge(v[0][0], v[2][0]);
            b.add_edge(v[1][0], v[2][0]);
            for (i, row) in v.iter().enumerate() {
                for j in 0..3 {
                    b.add_edge(row[j], row[j + 1]);
                }
                for (j, c) in [(1, 1), (2, 1), (3, 3)] {
                    attach_forbidden_pendant(b, row[j], c, &format!("{name}.v{}_{}", j + 1, i + 1))?;
                }
            }
            Ok(Gadget {
                kind,
                ports: [v[0][3], v[1][3], v[2][3]],
                internals: v.iter().flat_map(|row| row[..3].to_vec()).collect(),
            })
        }
    }
}

/// Colors the internals of `g` once its ports and pendants are colored.
fn color_internals(graph: &Graph, g: &Gadget, f: &mut [Option<u32>]) -> Result<()> {
    match g.kind {
        NclKind::And => {
            let (u21, u0) = if f[g.ports[0]] == Some(1) { (2, 3) } else { (3, 2) };
            f[g.internals[0]] = Some(u21);
            f[g.internals[1]] = Some(u0);
            Ok(())
        }
        NclKind::Or => {
            if first_completion(graph, &g.internals, f) {
                Ok(())
            } else {
                Err(precondition("OR gadget has every port directed outward"))
            }
        }
    }
}

/// Lexicographically first proper 3-coloring of `order` given the colors
/// already present in `f`.
fn first_completion(graph: &Graph, order: &[usize], f: &mut [Option<u32>]) -> bool {
    let Some((&v, rest)) = order.split_first() else {
        return true;
    };
    for c in 1..=3 {
        if graph.neighbors(v).iter().all(|&w| f[w] != Some(c)) {
            f[v] = Some(c);
            if first_completion(graph, rest, f) {
                return true;
            }
        }
    }
    f[v] = None;
    false
}

/// Incident machine edges of `v` in port order.
fn port_edges(m: &NclMachine, v: usize) -> [usize; 3] {
    let mut inc = m.incident(v);
    if m.kinds()[v] == NclKind::And {
        // weight-2 edge first, then the weight-1 edges ascending
        inc.sort_by_key(|&e| (m.edges()[e].weight != 2, e));
    }
    inc
}

/// Builds the 3-coloring instance for an NCL reachability instance.
pub fn ncl_to_3crcs(instance: &NclInstance) -> Result<(Instance, GadgetLayout)> {
    let m = &instance.machine;
    m.check(&instance.source)?;
    m.check(&instance.target)?;
    let mut b = Construction::new();
    let mut gadgets = Vec::with_capacity(m.vertex_count());
    for (v, &kind) in m.kinds().iter().enumerate() {
        let name = match kind {
            NclKind::And => format!("and{v}"),
            NclKind::Or => format!("or{v}"),
        };
        gadgets.push(build_gadget(&mut b, kind, &name)?);
    }
    let port = |v: usize, e: usize| {
        let i = port_edges(m, v).iter().position(|&x| x == e).expect("incident edge");
        gadgets[v].ports[i]
    };
    for (e, edge) in m.edges().iter().enumerate() {
        let (a, c) = (port(edge.u, e), port(edge.v, e));
        b.add_edge(a, c);
        b.layout.ports.push((e, a, c));
    }
    for (e, edge) in m.edges().iter().enumerate() {
        for x in [edge.u, edge.v] {
            let p = port(x, e);
            b.source[p] = Some(if instance.source.toward(e) == x { 1 } else { 2 });
            b.target[p] = Some(if instance.target.toward(e) == x { 1 } else { 2 });
        }
    }
    for g in &gadgets {
        color_internals(&b.graph, g, &mut b.source)?;
        color_internals(&b.graph, g, &mut b.target)?;
    }
    b.finish(3)
}

/// One gadget with a partner port across each port edge, as it sits inside
/// a full construction. Each partner carries its own 3-forbidden pendant.
#[derive(Debug, Clone)]
pub struct IsolatedGadget {
    pub kind: NclKind,
    pub graph: Graph,
    pub ports: [usize; 3],
    pub partners: [usize; 3],
    pub internals: Vec<usize>,
    /// Every vertex of every pendant cycle.
    pub pendant_vertices: Vec<usize>,
    /// Pendant colors; `None` elsewhere.
    pub fixed: Vec<Option<Color>>,
    pub layout: GadgetLayout,
}

pub fn isolated_gadget(kind: NclKind) -> IsolatedGadget {
    let mut b = Construction::new();
    let g = build_gadget(&mut b, kind, "g").expect("pendant colors are valid");
    let mut partners = [0; 3];
    for (i, (partner, &port)) in partners.iter_mut().zip(&g.ports).enumerate() {
        *partner = b.add_vertex(format!("partner{}", i + 1));
        b.add_edge(port, *partner);
        attach_forbidden_pendant(&mut b, *partner, 3, &format!("partner{}", i + 1))
            .expect("pendant colors are valid");
    }
    let fixed: Vec<Option<Color>> = b.source.iter().map(|c| c.map(Color::new)).collect();
    let pendant_vertices = (0..fixed.len()).filter(|&v| fixed[v].is_some()).collect();
    IsolatedGadget {
        kind,
        graph: b.graph,
        ports: g.ports,
        partners,
        internals: g.internals,
        pendant_vertices,
        fixed,
        layout: b.layout,
    }
}

impl IsolatedGadget {
    /// Whether the local orientation with `inward[i]` for port `i` satisfies
    /// the vertex's weight constraint.
    pub fn is_legal(&self, inward: [bool; 3]) -> bool {
        match self.kind {
            NclKind::And => 2 * inward[0] as u32 + inward[1] as u32 + inward[2] as u32 >= 2,
            NclKind::Or => inward.iter().any(|&x| x),
        }
    }

    /// The coloring the full construction assigns for each legal local
    /// orientation.
    pub fn construction_colorings(&self) -> Vec<Coloring> {
        let gadget = Gadget {
            kind: self.kind,
            ports: self.ports,
            internals: self.internals.clone(),
        };
        let mut out = Vec::new();
        for mask in 0..8u32 {
            let inward = [0, 1, 2].map(|i| mask >> i & 1 == 1);
            if !self.is_legal(inward) {
                continue;
            }
            let mut f: Vec<Option<u32>> = self.fixed.iter().map(|c| c.map(Color::raw)).collect();
            for i in 0..3 {
                f[self.ports[i]] = Some(if inward[i] { 1 } else { 2 });
                f[self.partners[i]] = Some(if inward[i] { 2 } else { 1 });
            }
            color_internals(&self.graph, &gadget, &mut f).expect("legal orientation");
            let raw: Vec<u32> = f.into_iter().map(|c| c.expect("complete")).collect();
            out.push(Coloring::from_slice(&raw, 3).expect("colors in 1..=3"));
        }
        out
    }
}
