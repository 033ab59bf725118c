//! Weighted undirected simple graphs, group families and the structural
//! queries every solver and reduction is built from.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

use crate::solution::{SolutionKind, SubgraphSolution};
use crate::weight::{ExtWeight, WeightOverflow};

/// Vertex index in `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("induced subgraph is disconnected")]
    Disconnected,
    #[error("group {0} is empty")]
    EmptyGroup(usize),
    #[error("group {group} lists vertex {vertex} twice")]
    DuplicateGroupMember { group: usize, vertex: Vertex },
    #[error(transparent)]
    Overflow(#[from] WeightOverflow),
}

/// Undirected simple graph on vertices `0..n` with an [`ExtWeight`] per edge.
///
/// Adjacency is kept in ordered maps so every traversal is in ascending
/// vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    adj: Vec<BTreeMap<Vertex, ExtWeight>>,
    edge_count: usize,
}

impl WeightedGraph {
    pub fn new(n: usize) -> Self {
        WeightedGraph {
            adj: vec![BTreeMap::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, ExtWeight)>,
    {
        let mut g = WeightedGraph::new(n);
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    /// Same as [`from_edges`](Self::from_edges) with every edge at weight 1.
    pub fn unweighted<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_edges(
            n,
            edges.into_iter().map(|(u, v)| (u, v, ExtWeight::Finite(1))),
        )
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, w: ExtWeight) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains_key(&v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v, w);
        self.adj[v].insert(u, w);
        self.edge_count += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> Option<ExtWeight> {
        self.adj.get(u).and_then(|m| m.get(&v)).copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.weight(u, v).is_some()
    }

    /// Open neighborhood of `v` with edge weights, ascending.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = (Vertex, ExtWeight)> + '_ {
        self.adj[v].iter().map(|(&u, &w)| (u, w))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// All edges as `(u, v, w)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, ExtWeight)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, m)| {
            m.range(u + 1..).map(move |(&v, &w)| (u, v, w))
        })
    }

    /// `{v} ∪ N(v)`. Infinite-weight edges count as adjacency.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<Vec<Vertex>, GraphError> {
        self.check_vertex(v)?;
        let mut out: Vec<Vertex> = self.adj[v].keys().copied().collect();
        let pos = out.partition_point(|&u| u < v);
        out.insert(pos, v);
        Ok(out)
    }

    /// True iff every vertex outside `set` has a neighbor inside it.
    pub fn dominates(&self, set: &[Vertex]) -> Result<bool, GraphError> {
        Ok(self.undominated(set)?.is_none())
    }

    /// First vertex (ascending) left undominated by `set`, if any.
    pub fn undominated(&self, set: &[Vertex]) -> Result<Option<Vertex>, GraphError> {
        let member = self.membership(set)?;
        Ok((0..self.n())
            .find(|&v| !member[v] && !self.adj[v].keys().any(|&u| member[u])))
    }

    pub fn is_connected_induced(&self, set: &[Vertex]) -> Result<bool, GraphError> {
        let member = self.membership(set)?;
        let Some(&start) = set.first() else {
            return Err(GraphError::EmptyVertexSet);
        };
        let size = member.iter().filter(|&&m| m).count();
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.adj[u].keys() {
                if member[v] && !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        Ok(reached == size)
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<Vertex> = (0..self.n()).collect();
        all.is_empty() || self.is_connected_induced(&all).unwrap_or(false)
    }

    /// Minimum spanning tree of the subgraph induced by `set` (Kruskal).
    ///
    /// Ties are broken by `(weight, min endpoint, max endpoint)`. Infinite
    /// edges are used only when the finite ones do not connect `set`, in
    /// which case the returned tree weighs `Infinite`.
    pub fn mst_induced(&self, set: &[Vertex]) -> Result<SubgraphSolution, GraphError> {
        let member = self.membership(set)?;
        let mut vertices: Vec<Vertex> = set.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }

        let mut candidates: Vec<(ExtWeight, Vertex, Vertex)> = vertices
            .iter()
            .flat_map(|&u| {
                self.adj[u]
                    .range(u + 1..)
                    .filter(|(v, _)| member[**v])
                    .map(move |(&v, &w)| (w, u, v))
            })
            .collect();
        candidates.sort_unstable();

        let mut dsu = DisjointSets::new(self.n());
        let mut edges = Vec::with_capacity(vertices.len() - 1);
        let mut weight = ExtWeight::ZERO;
        for (w, u, v) in candidates {
            if dsu.union(u, v) {
                edges.push((u, v));
                weight = weight.checked_add(w)?;
                if edges.len() + 1 == vertices.len() {
                    break;
                }
            }
        }
        if edges.len() + 1 != vertices.len() {
            return Err(GraphError::Disconnected);
        }
        edges.sort_unstable();
        Ok(SubgraphSolution::from_parts(
            SolutionKind::Tree,
            vertices,
            edges,
            weight,
        ))
    }

    fn membership(&self, set: &[Vertex]) -> Result<Vec<bool>, GraphError> {
        let mut member = vec![false; self.n()];
        for &v in set {
            self.check_vertex(v)?;
            member[v] = true;
        }
        Ok(member)
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// Ordered list of non-empty vertex groups over a host graph.
///
/// Each group is stored sorted. Groups may overlap; position in the list
/// is the group index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupFamily {
    groups: Vec<Vec<Vertex>>,
}

impl GroupFamily {
    /// Validates every group against a host graph with `n` vertices.
    pub fn new(n: usize, groups: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        let mut out = Vec::with_capacity(groups.len());
        for (i, mut group) in groups.into_iter().enumerate() {
            if group.is_empty() {
                return Err(GraphError::EmptyGroup(i));
            }
            group.sort_unstable();
            if let Some(w) = group.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateGroupMember { group: i, vertex: w[0] });
            }
            if let Some(&v) = group.iter().find(|&&v| v >= n) {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            out.push(group);
        }
        Ok(GroupFamily { groups: out })
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn group(&self, i: usize) -> &[Vertex] {
        &self.groups[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Vertex]> {
        self.groups.iter().map(Vec::as_slice)
    }

    /// Index of the first group not intersecting `set`, if any.
    pub fn first_missed(&self, set: &[Vertex]) -> Option<usize> {
        self.groups
            .iter()
            .position(|g| !g.iter().any(|v| set.contains(v)))
    }

    pub fn all_hit(&self, set: &[Vertex]) -> bool {
        self.first_missed(set).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    const A: Vertex = 0;
    const B: Vertex = 1;
    const C: Vertex = 2;
    const D: Vertex = 3;

    fn p4() -> WeightedGraph {
        WeightedGraph::from_edges(
            4,
            [(A, B, 1.into()), (B, C, 2.into()), (C, D, 3.into())],
        )
        .unwrap()
    }

    fn complete(n: usize) -> WeightedGraph {
        WeightedGraph::unweighted(n, (0..n).tuple_combinations()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        let mut g = WeightedGraph::new(3);
        assert_eq!(g.add_edge(1, 1, 1.into()), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            g.add_edge(0, 3, 1.into()),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        g.add_edge(2, 0, 1.into()).unwrap();
        assert_eq!(g.add_edge(0, 2, 4.into()), Err(GraphError::DuplicateEdge(0, 2)));
        assert_eq!(g.weight(0, 2), g.weight(2, 0));
    }

    #[test]
    fn closed_neighborhood_examples() {
        let path = WeightedGraph::unweighted(3, [(A, B), (B, C)]).unwrap();
        assert_eq!(path.closed_neighborhood(B).unwrap(), vec![A, B, C]);
        let isolated = WeightedGraph::new(2);
        assert_eq!(isolated.closed_neighborhood(1).unwrap(), vec![1]);
        let k4 = complete(4);
        for v in 0..4 {
            assert_eq!(k4.closed_neighborhood(v).unwrap(), vec![0, 1, 2, 3]);
        }
        assert!(k4.closed_neighborhood(4).is_err());
    }

    #[test]
    fn infinite_edges_count_as_adjacency() {
        let g = WeightedGraph::from_edges(2, [(0, 1, ExtWeight::Infinite)]).unwrap();
        assert_eq!(g.closed_neighborhood(0).unwrap(), vec![0, 1]);
        assert!(g.dominates(&[0]).unwrap());
    }

    #[test]
    fn domination_examples() {
        assert!(complete(3).dominates(&[A]).unwrap());
        let g = p4();
        assert!(!g.dominates(&[B]).unwrap());
        assert_eq!(g.undominated(&[B]).unwrap(), Some(D));
        assert!(g.dominates(&[B, C]).unwrap());
    }

    #[test]
    fn connectivity_examples() {
        let g = p4();
        assert!(g.is_connected_induced(&[A, B]).unwrap());
        assert!(!g.is_connected_induced(&[A, C]).unwrap());
        assert!(g.is_connected_induced(&[D]).unwrap());
        assert_eq!(g.is_connected_induced(&[]), Err(GraphError::EmptyVertexSet));
    }

    #[test]
    fn mst_examples() {
        let tri = WeightedGraph::from_edges(
            3,
            [(A, B, 1.into()), (B, C, 2.into()), (A, C, 3.into())],
        )
        .unwrap();
        let t = tri.mst_induced(&[A, B, C]).unwrap();
        assert_eq!(t.edges(), &[(A, B), (B, C)]);
        assert_eq!(t.weight(), ExtWeight::Finite(3));

        let single = tri.mst_induced(&[A]).unwrap();
        assert!(single.edges().is_empty());
        assert_eq!(single.weight(), ExtWeight::ZERO);

        let k2 = WeightedGraph::from_edges(2, [(A, B, 5.into())]).unwrap();
        let t = k2.mst_induced(&[A, B]).unwrap();
        assert_eq!(t.edges(), &[(A, B)]);
        assert_eq!(t.weight(), ExtWeight::Finite(5));

        assert_eq!(p4().mst_induced(&[A, C]), Err(GraphError::Disconnected));
    }

    #[test]
    fn mst_prefers_finite_edges() {
        let g = WeightedGraph::from_edges(
            3,
            [(0, 1, ExtWeight::Infinite), (1, 2, 4.into()), (0, 2, 7.into())],
        )
        .unwrap();
        let t = g.mst_induced(&[0, 1, 2]).unwrap();
        assert_eq!(t.weight(), ExtWeight::Finite(11));
        let t = g.mst_induced(&[0, 1]).unwrap();
        assert_eq!(t.weight(), ExtWeight::Infinite);
    }

    #[test]
    fn dominates_full_and_empty_sets() {
        let g = p4();
        assert!(g.dominates(&[0, 1, 2, 3]).unwrap());
        assert!(!g.dominates(&[]).unwrap());
        assert!(WeightedGraph::new(0).dominates(&[]).unwrap());
    }

    #[test]
    fn group_family_validation() {
        assert_eq!(
            GroupFamily::new(3, vec![vec![0], vec![]]),
            Err(GraphError::EmptyGroup(1))
        );
        assert_eq!(
            GroupFamily::new(3, vec![vec![5]]),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 3 })
        );
        assert_eq!(
            GroupFamily::new(3, vec![vec![1, 1]]),
            Err(GraphError::DuplicateGroupMember { group: 0, vertex: 1 })
        );
        let f = GroupFamily::new(3, vec![vec![2, 0], vec![1]]).unwrap();
        assert_eq!(f.group(0), &[0, 2]);
        assert_eq!(f.first_missed(&[0]), Some(1));
        assert!(f.all_hit(&[2, 1]));
    }

    /// Minimum over every (|U|-1)-subset of induced edges that forms a
    /// spanning tree. Independent of Kruskal.
    fn brute_force_mst_weight(g: &WeightedGraph, set: &[Vertex]) -> Option<ExtWeight> {
        let induced: Vec<_> = g
            .edges()
            .filter(|(u, v, _)| set.contains(u) && set.contains(v))
            .collect();
        let k = set.len() - 1;
        induced
            .iter()
            .combinations(k)
            .filter(|es| {
                let mut dsu = DisjointSets::new(g.n());
                es.iter().all(|(u, v, _)| dsu.union(*u, *v))
            })
            .map(|es| ExtWeight::sum(es.iter().map(|e| e.2)).unwrap())
            .min()
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = WeightedGraph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
            let m = pairs.len();
            proptest::collection::vec(proptest::option::of(0u64..6), m).prop_map(move |ws| {
                let edges = pairs
                    .iter()
                    .zip(ws)
                    .filter_map(|(&(u, v), w)| w.map(|w| (u, v, ExtWeight::Finite(w))));
                WeightedGraph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn mst_matches_spanning_tree_enumeration(g in arb_graph(8), mask in any::<u16>()) {
            let set: Vec<Vertex> = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
            prop_assume!(!set.is_empty());
            match g.mst_induced(&set) {
                Ok(t) => {
                    prop_assert!(g.is_connected_induced(&set).unwrap());
                    prop_assert_eq!(Some(t.weight()), brute_force_mst_weight(&g, &set));
                }
                Err(GraphError::Disconnected) => {
                    prop_assert!(!g.is_connected_induced(&set).unwrap());
                }
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }

        #[test]
        fn full_vertex_set_always_dominates(g in arb_graph(8)) {
            let all: Vec<Vertex> = (0..g.n()).collect();
            prop_assert!(g.dominates(&all).unwrap());
            prop_assert!(!g.dominates(&[]).unwrap());
        }

        #[test]
        fn mst_ignores_infinite_edges_outside(g in arb_graph(7), mask in any::<u8>()) {
            let set: Vec<Vertex> = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
            let outside: Vec<Vertex> = (0..g.n()).filter(|v| mask >> v & 1 == 0).collect();
            prop_assume!(!set.is_empty());
            let mut h = g.clone();
            for (&u, &v) in outside.iter().tuple_combinations() {
                if !h.has_edge(u, v) {
                    h.add_edge(u, v, ExtWeight::Infinite).unwrap();
                }
            }
            prop_assert_eq!(
                g.mst_induced(&set).map(|t| t.weight()),
                h.mst_induced(&set).map(|t| t.weight())
            );
        }
    }
}
