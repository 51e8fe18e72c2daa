//! Line-oriented text formats for the four instance kinds.
//!
//! Every file starts with a header line (`crcs 1`, `ts 1`, `svr 1` or
//! `ncl 1`); `#` starts a comment. Vertex ids are 0-based.
//!
//! ```text
//! crcs 1
//! k 3
//! n 3
//! edge 0 1
//! edge 1 2
//! fs 1 2 3
//! ft 3 2 1
//! ```

use std::fmt::Write as _;

use crate::coloring::{Color, Coloring, Instance};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ncl::{NclEdge, NclInstance, NclKind, NclMachine, NclOrientation};
use crate::svr::SvrInstance;
use crate::token_sliding::TokenSlidingInstance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceFile {
    Crcs(Instance),
    Ts(TokenSlidingInstance),
    Svr(SvrInstance),
    Ncl(NclInstance),
}

impl InstanceFile {
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceFile::Crcs(_) => "crcs",
            InstanceFile::Ts(_) => "ts",
            InstanceFile::Svr(_) => "svr",
            InstanceFile::Ncl(_) => "ncl",
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn int<T: std::str::FromStr>(&self) -> Result<T> {
        self.text
            .parse()
            .map_err(|_| self.error(format!("expected a non-negative integer, found {:?}", self.text)))
    }
}

/// One non-empty line split into tokens; the first is the keyword.
struct Line<'a> {
    tokens: Vec<Token<'a>>,
    number: usize,
    len: usize,
}

impl<'a> Line<'a> {
    fn keyword(&self) -> Token<'a> {
        self.tokens[0]
    }

    fn args(&self) -> &[Token<'a>] {
        &self.tokens[1..]
    }

    /// Error positioned just past the end of the line.
    fn end_error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            column: self.len + 1,
            message: message.into(),
        }
    }

    fn exact(&self, count: usize) -> Result<&[Token<'a>]> {
        let args = self.args();
        if args.len() < count {
            return Err(self.end_error(format!("`{}` takes {count} argument(s)", self.keyword().text)));
        }
        if args.len() > count {
            return Err(args[count].error("unexpected extra argument"));
        }
        Ok(args)
    }

    fn single<T: std::str::FromStr>(&self) -> Result<T> {
        self.exact(1)?[0].int()
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (off, ch) in body.char_indices().chain([(body.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(off),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..off],
                        line: i + 1,
                        column: body[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(Line {
                tokens,
                number: i + 1,
                len: body.trim_end().chars().count(),
            });
        }
    }
    out
}

fn eof_error(text: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        line: text.lines().count() + 1,
        column: 1,
        message: message.into(),
    }
}

fn semantic(e: Error) -> Error {
    match e {
        Error::IllFormed(m) | Error::Precondition(m) => Error::Semantic(m),
        other => other,
    }
}

/// Parses any of the four formats, dispatching on the header.
pub fn parse_instance(text: &str) -> Result<InstanceFile> {
    let all = lines(text);
    let Some(header) = all.first() else {
        return Err(eof_error(text, "missing header line"));
    };
    let kind = header.keyword();
    let version = header.exact(1)?[0];
    if version.text != "1" {
        return Err(version.error(format!("unsupported version {:?}", version.text)));
    }
    let body = &all[1..];
    match kind.text {
        "crcs" => parse_coloring_body(text, body, true).map(|(g, k, s, t)| {
            Instance::new(g, k, s, t).map(InstanceFile::Crcs).map_err(semantic)
        })?,
        "svr" => parse_coloring_body(text, body, false).map(|(g, k, s, t)| {
            SvrInstance::new(g, k, s, t).map(InstanceFile::Svr).map_err(semantic)
        })?,
        "ts" => parse_ts(text, body).map(InstanceFile::Ts),
        "ncl" => parse_ncl(text, body).map(InstanceFile::Ncl),
        other => Err(kind.error(format!("unknown instance kind {other:?}"))),
    }
}

/// Parses a `crcs` file; other kinds are a semantic error.
pub fn parse_crcs(text: &str) -> Result<Instance> {
    match parse_instance(text)? {
        InstanceFile::Crcs(i) => Ok(i),
        other => Err(Error::Semantic(format!("expected a crcs instance, found {}", other.kind()))),
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: &Line) -> Result<()> {
    if slot.is_some() {
        return Err(line.keyword().error(format!("`{}` given twice", line.keyword().text)));
    }
    *slot = Some(value);
    Ok(())
}

fn edge_args(line: &Line) -> Result<(usize, usize)> {
    let a = line.exact(2)?;
    Ok((a[0].int()?, a[1].int()?))
}

fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, edges.iter().copied()).map_err(semantic)
}

fn parse_colors(line: &Line, allow_star: bool) -> Result<Vec<Color>> {
    line.args()
        .iter()
        .map(|t| {
            if t.text == "*" {
                return if allow_star {
                    Ok(Color::STAR)
                } else {
                    Err(t.error("`*` is not allowed in this format"))
                };
            }
            let c: u32 = t.int()?;
            if c == 0 {
                return Err(t.error("colors start at 1"));
            }
            Ok(Color::new(c))
        })
        .collect()
}

type ColoringBody = (Graph, u32, Coloring, Coloring);

fn parse_coloring_body(text: &str, body: &[Line], allow_star: bool) -> Result<ColoringBody> {
    let (mut k, mut n, mut fs, mut ft) = (None, None, None, None);
    let mut edges = Vec::new();
    for line in body {
        match line.keyword().text {
            "k" => set_once(&mut k, line.single::<u32>()?, line)?,
            "n" => set_once(&mut n, line.single::<usize>()?, line)?,
            "edge" => edges.push(edge_args(line)?),
            "fs" => set_once(&mut fs, parse_colors(line, allow_star)?, line)?,
            "ft" => set_once(&mut ft, parse_colors(line, allow_star)?, line)?,
            other => return Err(line.keyword().error(format!("unknown keyword {other:?}"))),
        }
    }
    let need = |name: &str| eof_error(text, format!("`{name}` must appear"));
    let n = n.ok_or_else(|| need("n"))?;
    let k = k.ok_or_else(|| need("k"))?;
    let fs = fs.ok_or_else(|| need("fs"))?;
    let ft = ft.ok_or_else(|| need("ft"))?;
    let graph = build_graph(n, &edges)?;
    for (name, f) in [("fs", &fs), ("ft", &ft)] {
        if f.len() != n {
            return Err(Error::Semantic(format!("{name} has {} colors for {n} vertices", f.len())));
        }
    }
    let fs = Coloring::new(fs, k).map_err(semantic)?;
    let ft = Coloring::new(ft, k).map_err(semantic)?;
    Ok((graph, k, fs, ft))
}

fn parse_ts(text: &str, body: &[Line]) -> Result<TokenSlidingInstance> {
    let (mut n, mut is, mut it, mut side) = (None, None, None, None);
    let mut edges = Vec::new();
    let ints = |line: &Line| -> Result<Vec<usize>> { line.args().iter().map(Token::int).collect() };
    for line in body {
        match line.keyword().text {
            "n" => set_once(&mut n, line.single::<usize>()?, line)?,
            "edge" => edges.push(edge_args(line)?),
            "is" => set_once(&mut is, ints(line)?, line)?,
            "it" => set_once(&mut it, ints(line)?, line)?,
            "side" => {
                let s: Vec<u8> = line.args().iter().map(Token::int).collect::<Result<_>>()?;
                set_once(&mut side, s, line)?
            }
            other => return Err(line.keyword().error(format!("unknown keyword {other:?}"))),
        }
    }
    let need = |name: &str| eof_error(text, format!("`{name}` must appear"));
    let n = n.ok_or_else(|| need("n"))?;
    let is = is.ok_or_else(|| need("is"))?;
    let it = it.ok_or_else(|| need("it"))?;
    let graph = build_graph(n, &edges)?;
    let ts = TokenSlidingInstance::new(graph, is, it).map_err(semantic)?;
    match side {
        Some(s) => ts.with_sides(s).map_err(semantic),
        None => Ok(ts),
    }
}

fn parse_ncl(text: &str, body: &[Line]) -> Result<NclInstance> {
    let mut kinds: Vec<(usize, NclKind)> = Vec::new();
    let mut edges: Vec<(usize, NclEdge)> = Vec::new();
    let mut cs: Vec<(usize, usize)> = Vec::new();
    let mut ct: Vec<(usize, usize)> = Vec::new();
    for line in body {
        match line.keyword().text {
            "vertex" => {
                let a = line.exact(2)?;
                let kind = match a[1].text {
                    "and" => NclKind::And,
                    "or" => NclKind::Or,
                    other => return Err(a[1].error(format!("expected `and` or `or`, found {other:?}"))),
                };
                kinds.push((a[0].int()?, kind));
            }
            "edge" => {
                let a = line.exact(4)?;
                let weight: u8 = a[3].int()?;
                if !(1..=2).contains(&weight) {
                    return Err(a[3].error("edge weight must be 1 or 2"));
                }
                let e = NclEdge {
                    u: a[1].int()?,
                    v: a[2].int()?,
                    weight,
                };
                edges.push((a[0].int()?, e));
            }
            "cs" | "ct" => {
                let a = line.exact(2)?;
                let pair = (a[0].int()?, a[1].int()?);
                if line.keyword().text == "cs" {
                    cs.push(pair);
                } else {
                    ct.push(pair);
                }
            }
            other => return Err(line.keyword().error(format!("unknown keyword {other:?}"))),
        }
    }
    if kinds.is_empty() {
        return Err(eof_error(text, "`vertex` must appear"));
    }
    let dense = |mut ids: Vec<usize>, what: &str| -> Result<()> {
        ids.sort_unstable();
        if ids.iter().enumerate().any(|(i, &x)| i != x) {
            return Err(Error::Semantic(format!("{what} ids must be 0..count, each once")));
        }
        Ok(())
    };
    dense(kinds.iter().map(|k| k.0).collect(), "vertex")?;
    dense(edges.iter().map(|e| e.0).collect(), "edge")?;
    kinds.sort_unstable_by_key(|k| k.0);
    edges.sort_unstable_by_key(|e| e.0);
    let machine = NclMachine::new(
        kinds.into_iter().map(|k| k.1).collect(),
        edges.into_iter().map(|e| e.1).collect(),
    )
    .map_err(semantic)?;
    let orient = |pairs: Vec<(usize, usize)>, name: &str| -> Result<NclOrientation> {
        let m = machine.edges().len();
        let mut heads = vec![usize::MAX; m];
        for (e, h) in pairs {
            if e >= m || heads[e] != usize::MAX {
                return Err(Error::Semantic(format!("{name} names edge {e} out of range or twice")));
            }
            heads[e] = h;
        }
        if heads.contains(&usize::MAX) {
            return Err(Error::Semantic(format!("{name} must orient every edge")));
        }
        Ok(NclOrientation::new(heads))
    };
    let source = orient(cs, "cs")?;
    let target = orient(ct, "ct")?;
    NclInstance::new(machine, source, target).map_err(semantic)
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn write_edges(out: &mut String, g: &Graph) {
    for (u, v) in g.edges() {
        writeln!(out, "edge {u} {v}").expect("writing to a String");
    }
}

fn write_coloring_body(out: &mut String, header: &str, g: &Graph, k: u32, s: &Coloring, t: &Coloring) {
    writeln!(out, "{header} 1\nk {k}\nn {}", g.n()).expect("writing to a String");
    write_edges(out, g);
    writeln!(out, "fs {}\nft {}", join(s.colors()), join(t.colors())).expect("writing to a String");
}

pub fn write_crcs(i: &Instance) -> String {
    let mut out = String::new();
    write_coloring_body(&mut out, "crcs", &i.graph, i.k, &i.source, &i.target);
    out
}

pub fn write_svr(i: &SvrInstance) -> String {
    let mut out = String::new();
    write_coloring_body(&mut out, "svr", &i.graph, i.k, &i.source, &i.target);
    out
}

pub fn write_ts(i: &TokenSlidingInstance) -> String {
    let mut out = format!("ts 1\nn {}\n", i.graph.n());
    write_edges(&mut out, &i.graph);
    writeln!(out, "is {}\nit {}", join(&i.source), join(&i.target)).expect("writing to a String");
    if let Some(s) = &i.sides {
        writeln!(out, "side {}", join(s)).expect("writing to a String");
    }
    out
}

pub fn write_ncl(i: &NclInstance) -> String {
    let m = &i.machine;
    let mut out = String::from("ncl 1\n");
    for (v, kind) in m.kinds().iter().enumerate() {
        let name = match kind {
            NclKind::And => "and",
            NclKind::Or => "or",
        };
        writeln!(out, "vertex {v} {name}").expect("writing to a String");
    }
    for (e, edge) in m.edges().iter().enumerate() {
        writeln!(out, "edge {e} {} {} {}", edge.u, edge.v, edge.weight).expect("writing to a String");
    }
    for (key, o) in [("cs", &i.source), ("ct", &i.target)] {
        for (e, h) in o.heads().iter().enumerate() {
            writeln!(out, "{key} {e} {h}").expect("writing to a String");
        }
    }
    out
}

pub fn write_instance(file: &InstanceFile) -> String {
    match file {
        InstanceFile::Crcs(i) => write_crcs(i),
        InstanceFile::Ts(i) => write_ts(i),
        InstanceFile::Svr(i) => write_svr(i),
        InstanceFile::Ncl(i) => write_ncl(i),
    }
}

/// Graphviz rendering of an instance, labeling each vertex `id: fs/ft`.
pub fn to_dot(i: &Instance) -> String {
    let mut out = String::from("graph crcs {\n");
    for v in 0..i.graph.n() {
        writeln!(out, "  {v} [label=\"{v}: {}/{}\"];", i.source.get(v), i.target.get(v)).expect("writing to a String");
    }
    for (u, v) in i.graph.edges() {
        writeln!(out, "  {u} -- {v};").expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::fixtures::example_instance;
    use crate::ncl::fixtures::six_vertex_machine;
    use proptest::prelude::*;

    const EXAMPLE: &str = "\
crcs 1
# the six-vertex example
k 3
n 6
edge 0 1
edge 0 2
edge 0 3
edge 1 3
edge 2 4
edge 2 5
edge 3 5
edge 4 5
fs 1 2 3 3 1 2
ft 1 3 2 2 3 1
";

    #[test]
    fn example_file_round_trips() {
        let inst = parse_crcs(EXAMPLE).unwrap();
        assert_eq!(inst, example_instance());
        let text = write_crcs(&inst);
        assert_eq!(parse_crcs(&text).unwrap(), inst);
        assert_eq!(text, EXAMPLE.replace("# the six-vertex example\n", ""));
    }

    #[test]
    fn empty_body_needs_n() {
        let err = parse_instance("crcs 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 1, ref message } if message.contains("`n`")));
        assert!(matches!(parse_instance(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn extended_colorings_are_accepted() {
        let text = "crcs 1\nk 1\nn 2\nedge 0 1\nfs * 1\nft 1 *\n";
        let inst = parse_crcs(text).unwrap();
        assert!(inst.is_extended());
        assert_eq!(parse_crcs(&write_crcs(&inst)).unwrap(), inst);
        let svr = "svr 1\nk 1\nn 2\nedge 0 1\nfs * 1\nft 1 *\n";
        assert!(matches!(parse_instance(svr), Err(Error::Parse { line: 5, column: 4, .. })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let bad = "crcs 1\nk 3\nn x\n";
        assert!(matches!(parse_instance(bad), Err(Error::Parse { line: 3, column: 3, .. })));
        let extra = "crcs 1\nk 3 4\n";
        assert!(matches!(parse_instance(extra), Err(Error::Parse { line: 2, column: 5, .. })));
        let short = "crcs 1\nedge 1\n";
        assert!(matches!(parse_instance(short), Err(Error::Parse { line: 2, column: 7, .. })));
        let kw = "crcs 1\n  bogus 1\n";
        assert!(matches!(parse_instance(kw), Err(Error::Parse { line: 2, column: 3, .. })));
        assert!(matches!(parse_instance("crcs 2\n"), Err(Error::Parse { line: 1, column: 6, .. })));
        let twice = "crcs 1\nk 3\nk 3\n";
        assert!(matches!(parse_instance(twice), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn semantic_errors_are_separate() {
        let improper = "crcs 1\nk 3\nn 2\nedge 0 1\nfs 1 1\nft 1 1\n";
        assert!(matches!(parse_instance(improper), Err(Error::Semantic(_))));
        let range = "crcs 1\nk 3\nn 2\nedge 0 5\nfs 1 2\nft 1 2\n";
        assert!(matches!(parse_instance(range), Err(Error::Semantic(_))));
        let length = "crcs 1\nk 3\nn 2\nfs 1 2 3\nft 1 2\n";
        assert!(matches!(parse_instance(length), Err(Error::Semantic(_))));
    }

    #[test]
    fn ts_round_trip() {
        let text = "ts 1\nn 4\nedge 0 1\nedge 1 2\nedge 2 3\nis 0 2\nit 1 3\nside 0 1 0 1\n";
        let file = parse_instance(text).unwrap();
        assert_eq!(write_instance(&file), text);
        let dependent = "ts 1\nn 2\nedge 0 1\nis 0 1\nit 0 1\n";
        assert!(matches!(parse_instance(dependent), Err(Error::Semantic(_))));
    }

    #[test]
    fn ncl_round_trip() {
        let (m, c) = six_vertex_machine();
        let inst = NclInstance::new(m, c.clone(), c).unwrap();
        let text = write_ncl(&inst);
        assert_eq!(parse_instance(&text).unwrap(), InstanceFile::Ncl(inst));
        let bad_degree = "ncl 1\nvertex 0 or\ncs 0 0\n";
        assert!(matches!(parse_instance(bad_degree), Err(Error::Semantic(_))));
    }

    #[test]
    fn dot_export() {
        let dot = to_dot(&example_instance());
        assert!(dot.starts_with("graph crcs {\n  0 [label=\"0: 1/1\"];"));
        assert!(dot.contains("  4 -- 5;\n"));
    }

    proptest! {
        #[test]
        fn crcs_round_trip(seed in any::<u64>(), n in 0usize..9, k in 1u32..5, star in 0.0f64..0.5) {
            let mut r = crate::gen::rng(seed);
            let g = crate::gen::random_graph(n, 0.4, &mut r);
            if let Ok(inst) = crate::gen::random_valid_instance(g, k, star, &mut r) {
                let text = write_crcs(&inst);
                prop_assert_eq!(parse_crcs(&text).unwrap(), inst);
            }
        }
    }
}
