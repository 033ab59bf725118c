//! Line-oriented text formats for instances, reduction sidecars and
//! solutions.
//!
//! Instance grammar (`c` lines and blank lines are ignored):
//!
//! ```text
//! p <kind> <n> <m> <scale>
//! e <u> <v> <w>          one per edge (graph kinds)
//! g <v1> <v2> ...        one per group (gst)
//! s <w> <e1> <e2> ...    one per set (sc; n is the universe size, m the set count)
//! ```
//!
//! `kind` is one of `mdt gst mds mdp dom hp sc`. A weight is a non-negative
//! decimal or `inf`; it is stored as `token * scale`, which must be an
//! integer.
//!
//! Sidecar grammar:
//!
//! ```text
//! r <from> <to> [closed|open]
//! k <center>                 mds -> sc only
//! v <out> <tag> <src|->      one per correspondence row
//! i <line>                   the source instance, one line each
//! ```
//!
//! Solution grammar:
//!
//! ```text
//! s tree|star|path|set|order|cover|infeasible
//! w <weight>                 optional
//! v <v1> <v2> ...            vertices (tree/star/path/set)
//! o <v1> <v2> ...            vertex order (order)
//! e <u> <v>                  one per edge (tree/star/path)
//! x <i1> <i2> ...            set indices (cover)
//! ```

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{GroupFamily, Vertex, WeightedGraph};
use crate::reductions::{Correspondence, DomGadget, GstInstance, ReductionKind, Tag};
use crate::setcover::SetCoverInstance;
use crate::solution::SolutionKind;
use crate::weight::ExtWeight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Mdt,
    Gst,
    Mds,
    Mdp,
    Dom,
    Hp,
    Sc,
}

impl Kind {
    pub const ALL: [Kind; 7] = [Kind::Mdt, Kind::Gst, Kind::Mds, Kind::Mdp, Kind::Dom, Kind::Hp, Kind::Sc];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Mdt => "mdt",
            Kind::Gst => "gst",
            Kind::Mds => "mds",
            Kind::Mdp => "mdp",
            Kind::Dom => "dom",
            Kind::Hp => "hp",
            Kind::Sc => "sc",
        }
    }

    /// Plain weighted graph, no groups or sets.
    pub fn is_graph(self) -> bool {
        !matches!(self, Kind::Gst | Kind::Sc)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Kind::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| s.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Body {
    Graph(WeightedGraph),
    Gst(GstInstance),
    Sc(SetCoverInstance),
}

/// A parsed instance. Weights are raw units; `scale` raw units make 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InstanceFile {
    pub kind: Kind,
    pub scale: u64,
    pub body: Body,
}

impl InstanceFile {
    pub fn graph(kind: Kind, scale: u64, g: WeightedGraph) -> Self {
        assert!(kind.is_graph(), "{kind} is not a plain graph kind");
        InstanceFile { kind, scale, body: Body::Graph(g) }
    }

    pub fn gst(scale: u64, inst: GstInstance) -> Self {
        InstanceFile { kind: Kind::Gst, scale, body: Body::Gst(inst) }
    }

    pub fn sc(scale: u64, inst: SetCoverInstance) -> Self {
        InstanceFile { kind: Kind::Sc, scale, body: Body::Sc(inst) }
    }

    /// The underlying graph, for graph and gst instances.
    pub fn as_graph(&self) -> Option<&WeightedGraph> {
        match &self.body {
            Body::Graph(g) => Some(g),
            Body::Gst(inst) => Some(&inst.graph),
            Body::Sc(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `p` header")]
    MissingHeader,
    #[error("second `p` header")]
    DuplicateHeader,
    #[error("unknown kind {0:?}")]
    UnknownKind(String),
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("negative weight {0}")]
    NegativeWeight(String),
    #[error("weight {0:?}: {1}")]
    BadWeight(String, &'static str),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("index {index} out of range (bound {bound})")]
    OutOfRange { index: usize, bound: usize },
    #[error("index {0} repeated")]
    RepeatedIndex(usize),
    #[error("empty group")]
    EmptyGroup,
    #[error("`{0}` line not allowed here")]
    UnexpectedLine(String),
    #[error("header declares {expected} {what}, found {found}")]
    CountMismatch { what: &'static str, expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SerializeError {
    #[error("weight {raw} at scale {scale} has no finite decimal form")]
    NotRepresentable { raw: u64, scale: u64 },
    #[error("scale must be positive")]
    ZeroScale,
}

// ------------------------------------------------------------------ weights

const MAX_FRACTION_DIGITS: usize = 18;

/// Raw units of a decimal token at `scale`.
pub fn parse_weight(token: &str, scale: u64) -> Result<ExtWeight, ParseErrorKind> {
    if token == "inf" {
        return Ok(ExtWeight::Infinite);
    }
    let bad = |why| ParseErrorKind::BadWeight(token.to_string(), why);
    if token.starts_with('-') {
        return Err(ParseErrorKind::NegativeWeight(token.to_string()));
    }
    let (int, frac) = token.split_once('.').unwrap_or((token, ""));
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(int) || !(frac.is_empty() || digits(frac)) || token.ends_with('.') {
        return Err(bad("not a decimal"));
    }
    if frac.len() > MAX_FRACTION_DIGITS {
        return Err(bad("too many fraction digits"));
    }
    let int: u128 = int.parse().map_err(|_| bad("too large"))?;
    let frac_val: u128 = if frac.is_empty() { 0 } else { frac.parse().expect("digits") };
    let denom = 10u128.pow(frac.len() as u32);
    let num = int
        .checked_mul(denom)
        .and_then(|x| x.checked_add(frac_val))
        .and_then(|x| x.checked_mul(scale as u128))
        .ok_or_else(|| bad("too large"))?;
    if num % denom != 0 {
        return Err(bad("not a whole number of units at this scale"));
    }
    u64::try_from(num / denom).map(ExtWeight::Finite).map_err(|_| bad("too large"))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exact decimal form of `raw / scale`, or `inf`.
pub fn format_weight(w: ExtWeight, scale: u64) -> Result<String, SerializeError> {
    if scale == 0 {
        return Err(SerializeError::ZeroScale);
    }
    let raw = match w {
        ExtWeight::Infinite => return Ok("inf".to_string()),
        ExtWeight::Finite(raw) => raw,
    };
    let (q, r) = (raw / scale, raw % scale);
    if r == 0 {
        return Ok(q.to_string());
    }
    let mut d = scale / gcd(r, scale);
    for p in [2, 5] {
        while d.is_multiple_of(p) {
            d /= p;
        }
    }
    if d != 1 {
        return Err(SerializeError::NotRepresentable { raw, scale });
    }
    let mut out = format!("{q}.");
    let mut rem = r as u128;
    while rem != 0 {
        rem *= 10;
        out.push(char::from(b'0' + (rem / scale as u128) as u8));
        rem %= scale as u128;
    }
    Ok(out)
}

// ------------------------------------------------------------------ lines

/// Non-blank, non-comment lines with 1-based numbers, split on whitespace.
fn records<'a>(lines: impl IntoIterator<Item = (usize, &'a str)>) -> Vec<(usize, Vec<&'a str>)> {
    lines
        .into_iter()
        .map(|(i, l)| (i, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty() && toks[0] != "c")
        .collect()
}

fn numbered(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l))
}

fn index(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse().or_else(|_| err(line, ParseErrorKind::Malformed(format!("expected an index, got {tok:?}"))))
}

fn bounded(line: usize, tok: &str, bound: usize) -> Result<usize, ParseError> {
    let i = index(line, tok)?;
    if i >= bound {
        return err(line, ParseErrorKind::OutOfRange { index: i, bound });
    }
    Ok(i)
}

fn indices(line: usize, toks: &[&str], bound: usize) -> Result<Vec<usize>, ParseError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(toks.len());
    for t in toks {
        let i = bounded(line, t, bound)?;
        if !seen.insert(i) {
            return err(line, ParseErrorKind::RepeatedIndex(i));
        }
        out.push(i);
    }
    Ok(out)
}

fn arity(line: usize, toks: &[&str], n: usize) -> Result<(), ParseError> {
    if toks.len() != n {
        return err(line, ParseErrorKind::Malformed(format!("`{}` takes {} fields", toks[0], n - 1)));
    }
    Ok(())
}

// ------------------------------------------------------------------ instances

pub fn parse_instance(text: &str) -> Result<InstanceFile, ParseError> {
    parse_instance_lines(numbered(text))
}

fn parse_instance_lines<'a>(lines: impl IntoIterator<Item = (usize, &'a str)>) -> Result<InstanceFile, ParseError> {
    let recs = records(lines);
    let Some(((hline, header), body)) = recs.split_first() else {
        return err(1, ParseErrorKind::MissingHeader);
    };
    let hline = *hline;
    if header[0] != "p" {
        return err(hline, ParseErrorKind::MissingHeader);
    }
    arity(hline, header, 5)?;
    let kind: Kind = header[1].parse().or_else(|s| err(hline, ParseErrorKind::UnknownKind(s)))?;
    let n = index(hline, header[2])?;
    let m = index(hline, header[3])?;
    let scale = index(hline, header[4])? as u64;
    if scale == 0 {
        return err(hline, ParseErrorKind::Malformed("scale must be positive".into()));
    }
    let weight = |line: usize, tok: &str| parse_weight(tok, scale).or_else(|k| err(line, k));

    let mut g = WeightedGraph::new(if kind == Kind::Sc { 0 } else { n });
    let mut groups = Vec::new();
    let mut sets = Vec::new();
    let mut last_line = hline;
    for (line, toks) in body {
        let line = *line;
        last_line = line;
        match (toks[0], kind) {
            ("p", _) => return err(line, ParseErrorKind::DuplicateHeader),
            ("e", k) if k != Kind::Sc => {
                arity(line, toks, 4)?;
                let u = bounded(line, toks[1], n)?;
                let v = bounded(line, toks[2], n)?;
                if u == v {
                    return err(line, ParseErrorKind::SelfLoop(u));
                }
                if g.has_edge(u, v) {
                    return err(line, ParseErrorKind::DuplicateEdge(u.min(v), u.max(v)));
                }
                let w = weight(line, toks[3])?;
                g.add_edge(u, v, w).expect("edge checked");
            }
            ("g", Kind::Gst) => {
                if toks.len() == 1 {
                    return err(line, ParseErrorKind::EmptyGroup);
                }
                groups.push(indices(line, &toks[1..], n)?);
            }
            ("s", Kind::Sc) => {
                if toks.len() < 2 {
                    return err(line, ParseErrorKind::Malformed("`s` needs a weight".into()));
                }
                let w = match weight(line, toks[1])? {
                    ExtWeight::Finite(w) => w,
                    ExtWeight::Infinite => {
                        return err(line, ParseErrorKind::BadWeight("inf".into(), "set weights are finite"))
                    }
                };
                sets.push((indices(line, &toks[2..], n)?, w));
            }
            (t, _) => return err(line, ParseErrorKind::UnexpectedLine(t.to_string())),
        }
    }
    let count = |what, found| {
        if found == m {
            Ok(())
        } else {
            err(last_line, ParseErrorKind::CountMismatch { what, expected: m, found })
        }
    };
    let body = match kind {
        Kind::Sc => {
            count("sets", sets.len())?;
            Body::Sc(SetCoverInstance::new(n, sets).expect("elements checked"))
        }
        Kind::Gst => {
            count("edges", g.edge_count())?;
            let groups = GroupFamily::new(n, groups).expect("groups checked");
            Body::Gst(GstInstance { graph: g, groups })
        }
        _ => {
            count("edges", g.edge_count())?;
            Body::Graph(g)
        }
    };
    Ok(InstanceFile { kind, scale, body })
}

fn write_edges(out: &mut String, g: &WeightedGraph, scale: u64) -> Result<(), SerializeError> {
    for (u, v, w) in g.edges() {
        writeln!(out, "e {u} {v} {}", format_weight(w, scale)?).expect("string write");
    }
    Ok(())
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Canonical text: header, edges ascending, then groups or sets in order
/// with sorted members.
pub fn serialize_instance(inst: &InstanceFile) -> Result<String, SerializeError> {
    let scale = inst.scale;
    if scale == 0 {
        return Err(SerializeError::ZeroScale);
    }
    let mut out = String::new();
    match &inst.body {
        Body::Graph(g) => {
            writeln!(out, "p {} {} {} {scale}", inst.kind, g.n(), g.edge_count()).expect("string write");
            write_edges(&mut out, g, scale)?;
        }
        Body::Gst(GstInstance { graph, groups }) => {
            writeln!(out, "p gst {} {} {scale}", graph.n(), graph.edge_count()).expect("string write");
            write_edges(&mut out, graph, scale)?;
            for grp in groups.iter() {
                writeln!(out, "g {}", join(grp)).expect("string write");
            }
        }
        Body::Sc(sc) => {
            writeln!(out, "p sc {} {} {scale}", sc.universe_size(), sc.set_count()).expect("string write");
            for (elems, w) in sc.sets() {
                let w = format_weight(ExtWeight::Finite(w), scale)?;
                if elems.is_empty() {
                    writeln!(out, "s {w}").expect("string write");
                } else {
                    writeln!(out, "s {w} {}", join(elems)).expect("string write");
                }
            }
        }
    }
    Ok(out)
}

// ------------------------------------------------------------------ sidecars

/// Everything needed to re-derive a reduction: its kind, options, the
/// source instance and the correspondence table it produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sidecar {
    pub kind: ReductionKind,
    pub gadget: DomGadget,
    pub center: Option<Vertex>,
    pub map: Vec<Correspondence>,
    pub source: InstanceFile,
}

fn gadget_str(g: DomGadget) -> &'static str {
    match g {
        DomGadget::Closed => "closed",
        DomGadget::Open => "open",
    }
}

pub fn serialize_sidecar(sc: &Sidecar) -> Result<String, SerializeError> {
    let (from, to) = sc.kind.endpoints();
    let mut out = format!("r {from} {to}");
    if sc.kind == ReductionKind::DomToMds {
        write!(out, " {}", gadget_str(sc.gadget)).expect("string write");
    }
    out.push('\n');
    if let Some(c) = sc.center {
        writeln!(out, "k {c}").expect("string write");
    }
    for m in &sc.map {
        let src = m.source.map_or_else(|| "-".to_string(), |s| s.to_string());
        writeln!(out, "v {} {} {src}", m.out_index, m.tag.as_str()).expect("string write");
    }
    for l in serialize_instance(&sc.source)?.lines() {
        writeln!(out, "i {l}").expect("string write");
    }
    Ok(out)
}

pub fn parse_sidecar(text: &str) -> Result<Sidecar, ParseError> {
    let mut kind = None;
    let mut gadget = DomGadget::default();
    let mut center = None;
    let mut map = Vec::new();
    let mut embedded = Vec::new();
    for (line, raw) in numbered(text) {
        if let Some(rest) = raw.strip_prefix("i ") {
            embedded.push((line, rest));
            continue;
        }
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some("r") => {
                if kind.is_some() {
                    return err(line, ParseErrorKind::DuplicateHeader);
                }
                if toks.len() != 3 && toks.len() != 4 {
                    return err(line, ParseErrorKind::Malformed("`r` takes 2 or 3 fields".into()));
                }
                let k = ReductionKind::from_endpoints(toks[1], toks[2]).map_or_else(
                    || err(line, ParseErrorKind::UnknownKind(format!("{}->{}", toks[1], toks[2]))),
                    Ok,
                )?;
                gadget = match toks.get(3).copied() {
                    None | Some("closed") => DomGadget::Closed,
                    Some("open") if k == ReductionKind::DomToMds => DomGadget::Open,
                    Some(t) => return err(line, ParseErrorKind::Malformed(format!("unknown option {t:?}"))),
                };
                kind = Some(k);
            }
            Some("k") => {
                arity(line, &toks, 2)?;
                center = Some(index(line, toks[1])?);
            }
            Some("v") => {
                arity(line, &toks, 4)?;
                let tag = Tag::parse(toks[2])
                    .map_or_else(|| err(line, ParseErrorKind::Malformed(format!("unknown tag {:?}", toks[2]))), Ok)?;
                let source = if toks[3] == "-" { None } else { Some(index(line, toks[3])?) };
                map.push(Correspondence { out_index: index(line, toks[1])?, tag, source });
            }
            Some(t) => return err(line, ParseErrorKind::UnexpectedLine(t.to_string())),
        }
    }
    let Some(kind) = kind else {
        return err(1, ParseErrorKind::MissingHeader);
    };
    let source = parse_instance_lines(embedded)?;
    Ok(Sidecar { kind, gadget, center, map, source })
}

// ------------------------------------------------------------------ solutions

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SolutionBody {
    Subgraph { kind: SolutionKind, vertices: Vec<Vertex>, edges: Vec<(Vertex, Vertex)> },
    /// A vertex set, e.g. a dominating set.
    Set(Vec<Vertex>),
    /// A vertex sequence, e.g. a Hamiltonian path.
    Order(Vec<Vertex>),
    Cover(Vec<usize>),
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionFile {
    /// Claimed objective value in raw units, when stated.
    pub weight: Option<ExtWeight>,
    pub body: SolutionBody,
}

fn shape_str(body: &SolutionBody) -> String {
    match body {
        SolutionBody::Subgraph { kind, .. } => kind.to_string(),
        SolutionBody::Set(_) => "set".into(),
        SolutionBody::Order(_) => "order".into(),
        SolutionBody::Cover(_) => "cover".into(),
        SolutionBody::Infeasible => "infeasible".into(),
    }
}

pub fn serialize_solution(sol: &SolutionFile, scale: u64) -> Result<String, SerializeError> {
    let mut out = format!("s {}\n", shape_str(&sol.body));
    if let Some(w) = sol.weight {
        writeln!(out, "w {}", format_weight(w, scale)?).expect("string write");
    }
    match &sol.body {
        SolutionBody::Subgraph { vertices, edges, .. } => {
            writeln!(out, "v {}", join(vertices)).expect("string write");
            for (u, v) in edges {
                writeln!(out, "e {u} {v}").expect("string write");
            }
        }
        SolutionBody::Set(vs) => writeln!(out, "v {}", join(vs)).expect("string write"),
        SolutionBody::Order(vs) => writeln!(out, "o {}", join(vs)).expect("string write"),
        SolutionBody::Cover(xs) => writeln!(out, "x {}", join(xs)).expect("string write"),
        SolutionBody::Infeasible => {}
    }
    Ok(out)
}

/// Parses a solution; `scale` interprets the `w` line. Indices are only
/// checked for syntax here; range checks belong to the verifier.
pub fn parse_solution(text: &str, scale: u64) -> Result<SolutionFile, ParseError> {
    let recs = records(numbered(text));
    let Some(((sline, head), rest)) = recs.split_first() else {
        return err(1, ParseErrorKind::MissingHeader);
    };
    if head[0] != "s" {
        return err(*sline, ParseErrorKind::MissingHeader);
    }
    arity(*sline, head, 2)?;
    let shape = head[1];
    let mut weight = None;
    let mut vertices = Vec::new();
    let mut order = Vec::new();
    let mut edges = Vec::new();
    let mut cover = Vec::new();
    let list = |line: usize, toks: &[&str]| toks.iter().map(|t| index(line, t)).collect::<Result<Vec<_>, _>>();
    for (line, toks) in rest {
        let line = *line;
        match toks[0] {
            "w" if weight.is_none() => {
                arity(line, toks, 2)?;
                weight = Some(parse_weight(toks[1], scale).or_else(|k| err(line, k))?);
            }
            "v" => vertices.extend(list(line, &toks[1..])?),
            "o" => order.extend(list(line, &toks[1..])?),
            "x" => cover.extend(list(line, &toks[1..])?),
            "e" => {
                arity(line, toks, 3)?;
                edges.push((index(line, toks[1])?, index(line, toks[2])?));
            }
            t => return err(line, ParseErrorKind::UnexpectedLine(t.to_string())),
        }
    }
    let only = |ok: bool| if ok { Ok(()) } else { err(*sline, ParseErrorKind::Malformed(format!("unexpected lines for `s {shape}`"))) };
    let body = match shape {
        "tree" | "star" | "path" => {
            only(order.is_empty() && cover.is_empty())?;
            let kind = match shape {
                "tree" => SolutionKind::Tree,
                "star" => SolutionKind::Star,
                _ => SolutionKind::Path,
            };
            SolutionBody::Subgraph { kind, vertices, edges }
        }
        "set" => {
            only(order.is_empty() && cover.is_empty() && edges.is_empty())?;
            SolutionBody::Set(vertices)
        }
        "order" => {
            only(vertices.is_empty() && cover.is_empty() && edges.is_empty())?;
            SolutionBody::Order(order)
        }
        "cover" => {
            only(vertices.is_empty() && order.is_empty() && edges.is_empty())?;
            SolutionBody::Cover(cover)
        }
        "infeasible" => {
            only(vertices.is_empty() && order.is_empty() && edges.is_empty() && cover.is_empty() && weight.is_none())?;
            SolutionBody::Infeasible
        }
        other => return err(*sline, ParseErrorKind::UnknownKind(other.to_string())),
    };
    Ok(SolutionFile { weight, body })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{reduce_dom_to_mds_with, reduce_mds_to_sc};
    use proptest::prelude::*;

    fn kind_of(text: &str) -> ParseErrorKind {
        parse_instance(text).unwrap_err().kind
    }

    #[test]
    fn k2_instance() {
        let inst = parse_instance("p mdt 2 1 1\ne 0 1 5\n").unwrap();
        assert_eq!(inst.kind, Kind::Mdt);
        let g = inst.as_graph().unwrap();
        assert_eq!(g.weight(0, 1), Some(ExtWeight::Finite(5)));
    }

    #[test]
    fn diagnostics() {
        assert_eq!(parse_instance("p mdt 2 1 1\ne 0 0 1\n").unwrap_err(), ParseError { line: 2, kind: ParseErrorKind::SelfLoop(0) });
        assert_eq!(kind_of("p mdt 2 1 1\ne 0 1 -1\n"), ParseErrorKind::NegativeWeight("-1".into()));
        assert_eq!(kind_of("p mdt 2 2 1\ne 0 1 1\ne 1 0 2\n"), ParseErrorKind::DuplicateEdge(0, 1));
        assert_eq!(kind_of("p mdt 2 1 1\ne 0 2 1\n"), ParseErrorKind::OutOfRange { index: 2, bound: 2 });
        assert_eq!(kind_of("p tsp 2 0 1\n"), ParseErrorKind::UnknownKind("tsp".into()));
        assert_eq!(kind_of("p mdt 2 1 1\ne 0 1\n"), ParseErrorKind::Malformed("`e` takes 3 fields".into()));
        assert_eq!(
            kind_of("p mdt 3 2 1\ne 0 1 1\n"),
            ParseErrorKind::CountMismatch { what: "edges", expected: 2, found: 1 }
        );
        assert_eq!(kind_of(""), ParseErrorKind::MissingHeader);
        assert_eq!(kind_of("p mdt 2 0 1\ng 0\n"), ParseErrorKind::UnexpectedLine("g".into()));
        assert_eq!(kind_of("p gst 2 0 1\ng 0 0\n"), ParseErrorKind::RepeatedIndex(0));
        assert_eq!(kind_of("p gst 2 0 1\ng\n"), ParseErrorKind::EmptyGroup);
        assert_eq!(kind_of("p sc 2 1 1\ns inf 0\n"), ParseErrorKind::BadWeight("inf".into(), "set weights are finite"));
        assert_eq!(parse_instance("c hi\n\np mdt 2 1 1\nc\ne 0 1 0.5\n").unwrap_err().line, 5);
    }

    #[test]
    fn weights_at_scale() {
        assert_eq!(parse_weight("1.25", 4), Ok(ExtWeight::Finite(5)));
        assert_eq!(parse_weight("3", 10), Ok(ExtWeight::Finite(30)));
        assert_eq!(parse_weight("0.1", 10), Ok(ExtWeight::Finite(1)));
        assert_eq!(parse_weight("inf", 7), Ok(ExtWeight::Infinite));
        assert!(matches!(parse_weight("0.5", 1), Err(ParseErrorKind::BadWeight(..))));
        assert!(matches!(parse_weight("1.", 1), Err(ParseErrorKind::BadWeight(..))));
        assert!(matches!(parse_weight(".5", 2), Err(ParseErrorKind::BadWeight(..))));
        assert!(matches!(parse_weight("1e3", 1), Err(ParseErrorKind::BadWeight(..))));
        assert!(matches!(parse_weight("18446744073709551616", 1), Err(ParseErrorKind::BadWeight(..))));
        assert_eq!(parse_weight("18446744073709551615", 1), Ok(ExtWeight::Finite(u64::MAX)));

        assert_eq!(format_weight(ExtWeight::Finite(5), 4).unwrap(), "1.25");
        assert_eq!(format_weight(ExtWeight::Finite(30), 10).unwrap(), "3");
        assert_eq!(format_weight(ExtWeight::Finite(1), 8).unwrap(), "0.125");
        assert_eq!(format_weight(ExtWeight::Infinite, 3).unwrap(), "inf");
        assert_eq!(format_weight(ExtWeight::Finite(1), 3), Err(SerializeError::NotRepresentable { raw: 1, scale: 3 }));
        assert_eq!(format_weight(ExtWeight::Finite(3), 3).unwrap(), "1");
        assert_eq!(format_weight(ExtWeight::Finite(2), 6).unwrap_err(), SerializeError::NotRepresentable { raw: 2, scale: 6 });
        assert_eq!(format_weight(ExtWeight::Finite(3), 6).unwrap(), "0.5");
    }

    #[test]
    fn canonical_form() {
        let text = "c a comment\np gst 3 2 2\ne 2 1 0.5\ne 1 0 inf\n\ng 2 0\ng 1\n";
        let inst = parse_instance(text).unwrap();
        let canon = serialize_instance(&inst).unwrap();
        assert_eq!(canon, "p gst 3 2 2\ne 0 1 inf\ne 1 2 0.5\ng 0 2\ng 1\n");
        assert_eq!(parse_instance(&canon).unwrap(), inst);

        let sc = parse_instance("p sc 3 2 1\ns 2 2 0\ns 0\n").unwrap();
        assert_eq!(serialize_instance(&sc).unwrap(), "p sc 3 2 1\ns 2 0 2\ns 0\n");
    }

    #[test]
    fn sidecar_round_trip() {
        let g = WeightedGraph::unweighted(3, [(0, 1), (1, 2)]).unwrap();
        let art = reduce_dom_to_mds_with(&g, DomGadget::Open).unwrap();
        let side = Sidecar {
            kind: art.kind,
            gadget: art.gadget,
            center: None,
            map: art.map.clone(),
            source: InstanceFile::graph(Kind::Dom, 1, g.clone()),
        };
        let text = serialize_sidecar(&side).unwrap();
        assert!(text.starts_with("r dom mds open\n"));
        assert!(text.contains("v 6 center -\n"));
        assert_eq!(parse_sidecar(&text).unwrap(), side);

        let art = reduce_mds_to_sc(&g, 1).unwrap();
        let side = Sidecar {
            kind: art.kind,
            gadget: DomGadget::Closed,
            center: Some(1),
            map: art.map.clone(),
            source: InstanceFile::graph(Kind::Mds, 1, g),
        };
        assert_eq!(parse_sidecar(&serialize_sidecar(&side).unwrap()).unwrap(), side);
    }

    #[test]
    fn sidecar_errors_point_at_sidecar_lines() {
        let e = parse_sidecar("r mdt gst\ni p mdt 2 1 1\ni e 0 0 1\n").unwrap_err();
        assert_eq!(e, ParseError { line: 3, kind: ParseErrorKind::SelfLoop(0) });
        assert_eq!(parse_sidecar("r mdt tsp\n").unwrap_err().kind, ParseErrorKind::UnknownKind("mdt->tsp".into()));
        assert_eq!(parse_sidecar("r mdt gst open\n").unwrap_err().kind, ParseErrorKind::Malformed("unknown option \"open\"".into()));
    }

    #[test]
    fn solution_round_trip() {
        let sols = [
            SolutionFile {
                weight: Some(ExtWeight::Finite(5)),
                body: SolutionBody::Subgraph { kind: SolutionKind::Path, vertices: vec![0, 1, 2], edges: vec![(0, 1), (1, 2)] },
            },
            SolutionFile { weight: None, body: SolutionBody::Set(vec![3, 1]) },
            SolutionFile { weight: None, body: SolutionBody::Order(vec![2, 0, 1]) },
            SolutionFile { weight: Some(ExtWeight::Finite(4)), body: SolutionBody::Cover(vec![]) },
            SolutionFile { weight: None, body: SolutionBody::Infeasible },
        ];
        for s in sols {
            let text = serialize_solution(&s, 2).unwrap();
            assert_eq!(parse_solution(&text, 2).unwrap(), s, "{text}");
        }
        assert_eq!(
            parse_solution("s star\nw 2.5\nv 0 1\ne 0 1\n", 2).unwrap().weight,
            Some(ExtWeight::Finite(5))
        );
        assert!(parse_solution("s blob\n", 1).is_err());
        assert!(parse_solution("s set\ne 0 1\n", 1).is_err());
    }

    fn arb_graph_instance() -> impl Strategy<Value = InstanceFile> {
        (1usize..7, prop::sample::select(vec![1u64, 2, 4, 10, 1000])).prop_flat_map(|(n, scale)| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let np = pairs.len();
            (
                prop::collection::vec((any::<bool>(), prop::option::weighted(0.9, 0u64..5000)), np),
                prop::collection::vec(prop::collection::btree_set(0..n, 1..=n), 0..4),
                prop::sample::select(vec![Kind::Mdt, Kind::Gst, Kind::Mds, Kind::Mdp, Kind::Dom, Kind::Hp]),
            )
                .prop_map(move |(picks, groups, kind)| {
                    let mut g = WeightedGraph::new(n);
                    for (&(u, v), (take, w)) in pairs.iter().zip(picks) {
                        if take {
                            g.add_edge(u, v, w.map_or(ExtWeight::Infinite, ExtWeight::Finite)).unwrap();
                        }
                    }
                    if kind == Kind::Gst {
                        let groups = GroupFamily::new(n, groups.into_iter().map(|s| s.into_iter().collect()).collect()).unwrap();
                        InstanceFile::gst(scale, GstInstance { graph: g, groups })
                    } else {
                        InstanceFile::graph(kind, scale, g)
                    }
                })
        })
    }

    proptest! {
        #[test]
        fn instance_round_trip(inst in arb_graph_instance()) {
            let text = serialize_instance(&inst).unwrap();
            prop_assert_eq!(parse_instance(&text).unwrap(), inst);
            prop_assert_eq!(serialize_instance(&parse_instance(&text).unwrap()).unwrap(), text);
        }

        #[test]
        fn weight_round_trip(raw in any::<u64>(), a in 0u32..6, b in 0u32..6) {
            let scale = 2u64.pow(a) * 5u64.pow(b);
            let text = format_weight(ExtWeight::Finite(raw), scale).unwrap();
            prop_assert_eq!(parse_weight(&text, scale), Ok(ExtWeight::Finite(raw)));
        }

        #[test]
        fn set_cover_round_trip(
            m in 0usize..8,
            sets in prop::collection::vec((prop::collection::btree_set(0usize..8, 0..5), 0u64..100), 0..6),
        ) {
            let sets: Vec<(Vec<usize>, u64)> = sets.into_iter().map(|(s, w)| (s.into_iter().filter(|&e| e < m).collect(), w)).collect();
            let inst = InstanceFile::sc(1, SetCoverInstance::new(m, sets).unwrap());
            let text = serialize_instance(&inst).unwrap();
            prop_assert_eq!(parse_instance(&text).unwrap(), inst);
        }
    }
}
