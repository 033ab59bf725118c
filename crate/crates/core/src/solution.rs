//! Candidate solutions (trees, stars, paths) and their feasibility checks.

use std::fmt;

use thiserror::Error;

use crate::graph::{DisjointSets, GroupFamily, Vertex, WeightedGraph};
use crate::weight::ExtWeight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SolutionKind {
    Tree,
    Star,
    Path,
}

impl fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolutionKind::Tree => "tree",
            SolutionKind::Star => "star",
            SolutionKind::Path => "path",
        })
    }
}

/// The three domination problems sharing one feasibility rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    Mdt,
    Mds,
    Mdp,
}

impl Problem {
    pub fn shape(self) -> SolutionKind {
        match self {
            Problem::Mdt => SolutionKind::Tree,
            Problem::Mds => SolutionKind::Star,
            Problem::Mdp => SolutionKind::Path,
        }
    }
}

/// Why a solution was rejected.
///
/// Structural violations (bad edges, wrong shape, wrong weight) are kept
/// apart from feasibility failures (domination, group hitting); see
/// [`Violation::is_structural`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("solution has no vertices")]
    Empty,
    #[error("vertex {0} is not in the graph")]
    VertexOutOfRange(Vertex),
    #[error("edge {0}-{1} is not in the graph")]
    EdgeNotInGraph(Vertex, Vertex),
    #[error("edge {0}-{1} has an endpoint outside the vertex set")]
    EdgeOutsideVertexSet(Vertex, Vertex),
    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(Vertex, Vertex),
    #[error("not a tree: {0}")]
    NotTree(&'static str),
    #[error("not a star: diameter exceeds 2")]
    NotStar,
    #[error("not a path: vertex {0} has degree above 2")]
    NotPath(Vertex),
    #[error("claimed weight {claimed} but edges sum to {actual}")]
    WeightMismatch { claimed: ExtWeight, actual: ExtWeight },
    #[error("edge weights overflow")]
    Overflow,
    #[error("vertex {0} is not dominated")]
    Undominated(Vertex),
    #[error("group {0} is not hit")]
    GroupMissed(usize),
}

impl Violation {
    pub fn is_structural(&self) -> bool {
        !matches!(self, Violation::Undominated(_) | Violation::GroupMissed(_))
    }
}

/// A vertex set `U` with an edge list `F`, claimed to form a tree of the
/// given kind, and the claimed weight of `F`.
///
/// Vertices are kept sorted; edges are stored as `(min, max)` pairs, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgraphSolution {
    kind: SolutionKind,
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
    weight: ExtWeight,
}

impl SubgraphSolution {
    /// Normalizes ordering only; nothing is checked.
    pub fn from_parts(
        kind: SolutionKind,
        mut vertices: Vec<Vertex>,
        edges: Vec<(Vertex, Vertex)>,
        weight: ExtWeight,
    ) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        SubgraphSolution { kind, vertices, edges, weight }
    }

    /// Builds a solution whose weight is summed from `g`.
    pub fn on_graph(
        g: &WeightedGraph,
        kind: SolutionKind,
        vertices: Vec<Vertex>,
        edges: Vec<(Vertex, Vertex)>,
    ) -> Result<Self, Violation> {
        let weight = edge_weight_sum(g, &edges)?;
        Ok(Self::from_parts(kind, vertices, edges, weight))
    }

    pub fn singleton(kind: SolutionKind, v: Vertex) -> Self {
        Self::from_parts(kind, vec![v], Vec::new(), ExtWeight::ZERO)
    }

    /// Path solution visiting `order` in sequence.
    pub fn path(g: &WeightedGraph, order: &[Vertex]) -> Result<Self, Violation> {
        let edges = order.windows(2).map(|w| (w[0], w[1])).collect();
        Self::on_graph(g, SolutionKind::Path, order.to_vec(), edges)
    }

    pub fn kind(&self) -> SolutionKind {
        self.kind
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn weight(&self) -> ExtWeight {
        self.weight
    }

    pub fn with_kind(mut self, kind: SolutionKind) -> Self {
        self.kind = kind;
        self
    }

    /// Vertex order along a path solution, starting from the smaller
    /// endpoint. `None` if the edges do not form a simple path over the
    /// vertex set.
    pub fn path_order(&self) -> Option<Vec<Vertex>> {
        if self.vertices.len() == 1 && self.edges.is_empty() {
            return Some(self.vertices.clone());
        }
        if self.edges.len() + 1 != self.vertices.len() {
            return None;
        }
        let degree = |v: Vertex| self.edges.iter().filter(|(a, b)| *a == v || *b == v).count();
        let start = *self.vertices.iter().find(|&&v| degree(v) == 1)?;
        let mut order = vec![start];
        let mut prev = None;
        let mut cur = start;
        while order.len() < self.vertices.len() {
            let next = self.edges.iter().find_map(|&(a, b)| match (a == cur, b == cur) {
                (true, _) if Some(b) != prev => Some(b),
                (_, true) if Some(a) != prev => Some(a),
                _ => None,
            })?;
            prev = Some(cur);
            cur = next;
            order.push(cur);
        }
        Some(order)
    }
}

fn edge_weight_sum(g: &WeightedGraph, edges: &[(Vertex, Vertex)]) -> Result<ExtWeight, Violation> {
    let mut total = ExtWeight::ZERO;
    for &(u, v) in edges {
        let w = g.weight(u, v).ok_or(Violation::EdgeNotInGraph(u.min(v), u.max(v)))?;
        total = total.checked_add(w).map_err(|_| Violation::Overflow)?;
    }
    Ok(total)
}

/// Structural checks: vertices and edges exist, edges stay inside `U`,
/// `(U, F)` has the shape `kind`, and the stored weight is exact.
pub fn check_structure(
    g: &WeightedGraph,
    s: &SubgraphSolution,
    kind: SolutionKind,
) -> Result<(), Violation> {
    if s.vertices.is_empty() {
        return Err(Violation::Empty);
    }
    if let Some(&v) = s.vertices.iter().find(|&&v| v >= g.n()) {
        return Err(Violation::VertexOutOfRange(v));
    }
    if let Some(w) = s.edges.windows(2).find(|w| w[0] == w[1]) {
        return Err(Violation::DuplicateEdge(w[0].0, w[0].1));
    }
    for &(u, v) in &s.edges {
        if s.vertices.binary_search(&u).is_err() || s.vertices.binary_search(&v).is_err() {
            return Err(Violation::EdgeOutsideVertexSet(u, v));
        }
    }
    let actual = edge_weight_sum(g, &s.edges)?;
    check_shape(s, SolutionKind::Tree)?;
    check_shape(s, s.kind)?;
    check_shape(s, kind)?;
    if actual != s.weight {
        return Err(Violation::WeightMismatch { claimed: s.weight, actual });
    }
    Ok(())
}

fn check_shape(s: &SubgraphSolution, kind: SolutionKind) -> Result<(), Violation> {
    match kind {
        SolutionKind::Tree => {
            if s.edges.len() + 1 != s.vertices.len() {
                return Err(Violation::NotTree("edge count is not |U| - 1"));
            }
            let index = |v: Vertex| s.vertices.binary_search(&v).unwrap();
            let mut dsu = DisjointSets::new(s.vertices.len());
            for &(u, v) in &s.edges {
                if !dsu.union(index(u), index(v)) {
                    return Err(Violation::NotTree("contains a cycle"));
                }
            }
            Ok(())
        }
        SolutionKind::Star => {
            // a tree has diameter <= 2 iff at most one vertex has degree > 1
            let inner = s.vertices.iter().filter(|&&v| degree_in(s, v) > 1).count();
            if inner <= 1 { Ok(()) } else { Err(Violation::NotStar) }
        }
        SolutionKind::Path => match s.vertices.iter().find(|&&v| degree_in(s, v) > 2) {
            Some(&v) => Err(Violation::NotPath(v)),
            None => Ok(()),
        },
    }
}

fn degree_in(s: &SubgraphSolution, v: Vertex) -> usize {
    s.edges.iter().filter(|(a, b)| *a == v || *b == v).count()
}

/// Full check for MDT / MDS / MDP: structure with the problem's shape, then
/// domination of every vertex of `g`.
pub fn check_solution(
    g: &WeightedGraph,
    s: &SubgraphSolution,
    problem: Problem,
) -> Result<(), Violation> {
    check_structure(g, s, problem.shape())?;
    match g.undominated(&s.vertices) {
        Ok(None) => Ok(()),
        Ok(Some(v)) => Err(Violation::Undominated(v)),
        Err(_) => Err(Violation::VertexOutOfRange(g.n())),
    }
}

pub fn validate_solution(g: &WeightedGraph, s: &SubgraphSolution, problem: Problem) -> bool {
    check_solution(g, s, problem).is_ok()
}

/// Full check for group Steiner trees.
pub fn check_gst(
    g: &WeightedGraph,
    groups: &GroupFamily,
    s: &SubgraphSolution,
) -> Result<(), Violation> {
    check_structure(g, s, SolutionKind::Tree)?;
    match groups.first_missed(&s.vertices) {
        None => Ok(()),
        Some(i) => Err(Violation::GroupMissed(i)),
    }
}

pub fn validate_gst(g: &WeightedGraph, groups: &GroupFamily, s: &SubgraphSolution) -> bool {
    check_gst(g, groups, s).is_ok()
}
