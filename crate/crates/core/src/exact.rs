//! Brute-force exact solvers. These are the oracles every reduction and
//! approximation is checked against, so they favour obviously-correct
//! enumeration over speed and refuse inputs above a size guard.
//!
//! Subset solvers enumerate vertex subsets by increasing size, then in
//! lexicographic order, and keep the first optimum found. Path and star
//! solvers compare candidates by `(weight, |U|, U, F)`. Both rules make
//! the returned solution, not just its value, reproducible.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{GraphError, GroupFamily, Vertex, WeightedGraph};
use crate::setcover::SetCoverInstance;
use crate::solution::{SolutionKind, SubgraphSolution};
use crate::weight::ExtWeight;

pub const DEFAULT_SUBSET_LIMIT: usize = 20;
pub const DEFAULT_PATH_LIMIT: usize = 14;
pub const DEFAULT_SET_LIMIT: usize = 22;
pub const DEFAULT_HP_LIMIT: usize = 12;

/// Vertex subsets are packed into `u64` masks.
const MASK_BITS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("{what} size {size} exceeds the oracle guard of {limit}")]
    GuardExceeded { what: &'static str, size: usize, limit: usize },
    #[error("instance has no vertices")]
    EmptyGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Result of an exact or approximate solve.
///
/// `Feasible` always carries a finite weight; candidates that only exist
/// at infinite weight are reported `Infeasible`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SolveOutcome<S> {
    Feasible { solution: S, weight: ExtWeight },
    Infeasible,
}

impl<S> SolveOutcome<S> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, SolveOutcome::Feasible { .. })
    }

    pub fn weight(&self) -> Option<ExtWeight> {
        match self {
            SolveOutcome::Feasible { weight, .. } => Some(*weight),
            SolveOutcome::Infeasible => None,
        }
    }

    pub fn solution(&self) -> Option<&S> {
        match self {
            SolveOutcome::Feasible { solution, .. } => Some(solution),
            SolveOutcome::Infeasible => None,
        }
    }

    pub fn into_solution(self) -> Option<S> {
        match self {
            SolveOutcome::Feasible { solution, .. } => Some(solution),
            SolveOutcome::Infeasible => None,
        }
    }
}

impl SolveOutcome<SubgraphSolution> {
    pub(crate) fn from_best(best: Option<SubgraphSolution>) -> Self {
        match best {
            Some(s) if s.weight().is_finite() => SolveOutcome::Feasible { weight: s.weight(), solution: s },
            _ => SolveOutcome::Infeasible,
        }
    }
}

fn guard(what: &'static str, size: usize, limit: usize) -> Result<(), SolveError> {
    let limit = limit.min(MASK_BITS);
    if size > limit {
        Err(SolveError::GuardExceeded { what, size, limit })
    } else {
        Ok(())
    }
}

fn guard_graph(g: &WeightedGraph, limit: usize) -> Result<(), SolveError> {
    if g.n() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    guard("vertex count", g.n(), limit)
}

/// Adjacency and closed-neighborhood masks.
struct Masks {
    adj: Vec<u64>,
    closed: Vec<u64>,
    full: u64,
}

impl Masks {
    fn new(g: &WeightedGraph) -> Self {
        let adj: Vec<u64> = (0..g.n())
            .map(|v| g.neighbors(v).fold(0, |m, (u, _)| m | 1 << u))
            .collect();
        let closed = adj.iter().enumerate().map(|(v, m)| m | 1 << v).collect();
        let full = if g.n() == MASK_BITS { u64::MAX } else { (1u64 << g.n()) - 1 };
        Masks { adj, closed, full }
    }

    fn dominates(&self, set: u64) -> bool {
        bits(set).fold(0, |m, v| m | self.closed[v]) == self.full
    }

    fn connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let mut seen = set & set.wrapping_neg();
        loop {
            let next = bits(seen).fold(seen, |m, v| m | (self.adj[v] & set));
            if next == seen {
                return seen == set;
            }
            seen = next;
        }
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn mask_of(vs: &[Vertex]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// Cheapest finite MST over connected vertex subsets accepted by `accept`.
fn best_tree_over_subsets(
    g: &WeightedGraph,
    masks: &Masks,
    accept: impl Fn(u64) -> bool,
) -> Result<Option<SubgraphSolution>, SolveError> {
    let mut best: Option<SubgraphSolution> = None;
    for k in 1..=g.n() {
        for combo in (0..g.n()).combinations(k) {
            let mask = mask_of(&combo);
            if !accept(mask) || !masks.connected(mask) {
                continue;
            }
            let tree = g.mst_induced(&combo)?;
            if !tree.weight().is_finite() {
                continue;
            }
            if best.as_ref().is_none_or(|b| tree.weight() < b.weight()) {
                best = Some(tree);
            }
        }
    }
    Ok(best)
}

/// Minimum-weight dominating tree.
pub fn exact_mdt(g: &WeightedGraph) -> Result<SolveOutcome<SubgraphSolution>, SolveError> {
    exact_mdt_with_limit(g, DEFAULT_SUBSET_LIMIT)
}

pub fn exact_mdt_with_limit(
    g: &WeightedGraph,
    limit: usize,
) -> Result<SolveOutcome<SubgraphSolution>, SolveError> {
    guard_graph(g, limit)?;
    let masks = Masks::new(g);
    let best = best_tree_over_subsets(g, &masks, |m| masks.dominates(m))?;
    Ok(SolveOutcome::from_best(best))
}

/// Minimum-weight tree hitting every group.
pub fn exact_gst(
    g: &WeightedGraph,
    groups: &GroupFamily,
) -> Result<SolveOutcome<SubgraphSolution>, SolveError> {
    exact_gst_with_limit(g, groups, DEFAULT_SUBSET_LIMIT)
}

pub fn exact_gst_with_limit(
    g: &WeightedGraph,
    groups: &GroupFamily,
    limit: usize,
) -> Result<SolveOutcome<SubgraphSolution>, SolveError> {
    guard_graph(g, limit)?;
    for grp in groups.iter() {
        for &v in grp {
            g.check_vertex(v)?;
        }
    }
    let masks = Masks::new(g);
    let group_masks: Vec<u64> = groups.iter().map(mask_of).collect();
    let best = best_tree_over_subsets(g, &masks, |m| group_masks.iter().all(|gm| gm & m != 0))?;
    Ok(SolveOutcome::from_best(best))
}

fn better(candidate: &SubgraphSolution, best: &Option<SubgraphSolution>) -> bool {
    let key = |s: &SubgraphSolution| (s.weight(), s.vertices().len(), s.vertices().to_vec(), s.edges().to_vec());
    best.as_ref().is_none_or(|b| key(candidate) < key(b))
}

fn best_star_at(g: &WeightedGraph, masks: &Masks, c: Vertex, best: &mut Option<SubgraphSolution>) {
    let leaves: Vec<(Vertex, u64)> = g
        .neighbors(c)
        .filter_map(|(v, w)| w.finite().map(|w| (v, w)))
        .collect();
    for k in 0..=leaves.len() {
        for chosen in leaves.iter().combinations(k) {
            let mask = chosen.iter().fold(1u64 << c, |m, (v, _)| m | 1 << v);
            if !masks.dominates(mask) {
                continue;
            }
            let Some(weight) = chosen.iter().try_fold(0u64, |acc, (_, w)| acc.checked_add(*w)) else {
                continue;
            };
            let mut vertices: Vec<Vertex> = chosen.iter().map(|(v, _)| *v).collect();
            vertices.push(c);
            let edges = chosen.iter().map(|(v, _)| (c, *v)).collect();
            let star = SubgraphSolution::from_parts(SolutionKind::Star, vertices, edges, weight.into());
            if better(&star, best) {
                *best = Some(star);
            }
        }
    }
}

/// Minimum-weight dominating star over all centers.
pub fn exact_mds(g: &WeightedGraph) -> Result<SolveOutcome<SubgraphSolution>, SolveError> {
    exact_mds_with_limit(g, DEFAULT_SUBSET_LIMIT)
}

pub fn exact_mds_with_limit(
    g: &WeightedGraph,
    limit: usize,
) -> Result<SolveOutcome<SubgraphSolution>, SolveError> {
    guard_graph(g, limit)?;
    let masks = Masks::new(g);
    let mut best = None;
    for c in 0..g.n() {
        best_star_at(g, &masks, c, &mut best);
    }
    Ok(SolveOutcome::from_best(best))
}

/// Minimum-weight dominating star whose center is `center`.
///
/// A singleton or one-edge star containing `center` counts, whichever
/// endpoint one calls its center.
pub fn exact_mds_centered(
    g: &WeightedGraph,
    center: Vertex,
) -> Result<SolveOutcome<SubgraphSolution>, SolveError> {
    guard_graph(g, DEFAULT_SUBSET_LIMIT)?;
    g.check_vertex(center)?;
    let masks = Masks::new(g);
    let mut best = None;
    best_star_at(g, &masks, center, &mut best);
    Ok(SolveOutcome::from_best(best))
}

/// Minimum-weight dominating simple path.
pub fn exact_mdp(g: &WeightedGraph) -> Result<SolveOutcome<SubgraphSolution>, SolveError> {
    exact_mdp_with_limit(g, DEFAULT_PATH_LIMIT)
}

pub fn exact_mdp_with_limit(
    g: &WeightedGraph,
    limit: usize,
) -> Result<SolveOutcome<SubgraphSolution>, SolveError> {
    guard_graph(g, limit)?;
    let masks = Masks::new(g);
    let finite_adj: Vec<Vec<(Vertex, u64)>> = (0..g.n())
        .map(|v| g.neighbors(v).filter_map(|(u, w)| w.finite().map(|w| (u, w))).collect())
        .collect();

    struct Search<'a> {
        g: &'a WeightedGraph,
        masks: &'a Masks,
        adj: &'a [Vec<(Vertex, u64)>],
        path: Vec<Vertex>,
        best: Option<SubgraphSolution>,
    }

    impl Search<'_> {
        fn visit(&mut self, visited: u64, weight: u64) {
            if self.best.as_ref().is_some_and(|b| ExtWeight::Finite(weight) > b.weight()) {
                return;
            }
            let first = self.path[0];
            let last = *self.path.last().unwrap();
            // each undirected path once: singletons, or first endpoint smaller
            if (self.path.len() == 1 || first < last) && self.masks.dominates(visited) {
                let cand = SubgraphSolution::path(self.g, &self.path).expect("path edges come from the graph");
                if better(&cand, &self.best) {
                    self.best = Some(cand);
                }
            }
            for i in 0..self.adj[last].len() {
                let (next, w) = self.adj[last][i];
                if visited >> next & 1 == 1 {
                    continue;
                }
                let Some(total) = weight.checked_add(w) else { continue };
                self.path.push(next);
                self.visit(visited | 1 << next, total);
                self.path.pop();
            }
        }
    }

    let mut search = Search { g, masks: &masks, adj: &finite_adj, path: Vec::new(), best: None };
    for s in 0..g.n() {
        search.path.push(s);
        search.visit(1 << s, 0);
        search.path.pop();
    }
    Ok(SolveOutcome::from_best(search.best))
}

/// Minimum-weight sub-collection covering the universe; returns sorted set
/// indices.
pub fn exact_set_cover(inst: &SetCoverInstance) -> Result<SolveOutcome<Vec<usize>>, SolveError> {
    exact_set_cover_with_limit(inst, DEFAULT_SET_LIMIT)
}

pub fn exact_set_cover_with_limit(
    inst: &SetCoverInstance,
    limit: usize,
) -> Result<SolveOutcome<Vec<usize>>, SolveError> {
    guard("set count", inst.set_count(), limit)?;
    if inst.uncoverable().is_some() {
        return Ok(SolveOutcome::Infeasible);
    }
    let bitsets: Vec<_> = (0..inst.set_count()).map(|i| inst.bitset(i)).collect();
    let mut best: Option<(u64, Vec<usize>)> = None;
    for k in 0..=inst.set_count() {
        for combo in (0..inst.set_count()).combinations(k) {
            let mut covered = fixedbitset::FixedBitSet::with_capacity(inst.universe_size());
            for &i in &combo {
                covered.union_with(&bitsets[i]);
            }
            if covered.count_ones(..) != inst.universe_size() {
                continue;
            }
            let Some(w) = combo.iter().try_fold(0u64, |acc, &i| acc.checked_add(inst.set_weight(i))) else {
                continue;
            };
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, combo));
            }
        }
    }
    Ok(match best {
        Some((w, cover)) => SolveOutcome::Feasible { solution: cover, weight: w.into() },
        None => SolveOutcome::Infeasible,
    })
}

/// Minimum-cardinality dominating set, weights ignored.
pub fn exact_dominating_set(g: &WeightedGraph) -> Result<Vec<Vertex>, SolveError> {
    exact_dominating_set_with_limit(g, DEFAULT_SUBSET_LIMIT)
}

pub fn exact_dominating_set_with_limit(g: &WeightedGraph, limit: usize) -> Result<Vec<Vertex>, SolveError> {
    guard("vertex count", g.n(), limit)?;
    let masks = Masks::new(g);
    for k in 0..=g.n() {
        if let Some(d) = (0..g.n()).combinations(k).find(|c| masks.dominates(mask_of(c))) {
            return Ok(d);
        }
    }
    unreachable!("the full vertex set dominates")
}

pub fn has_hamiltonian_path(g: &WeightedGraph) -> Result<bool, SolveError> {
    Ok(find_hamiltonian_path(g)?.is_some())
}

/// A Hamiltonian path in visiting order, weights ignored. The empty graph
/// has the empty path.
pub fn find_hamiltonian_path(g: &WeightedGraph) -> Result<Option<Vec<Vertex>>, SolveError> {
    find_hamiltonian_path_with_limit(g, DEFAULT_HP_LIMIT)
}

pub fn find_hamiltonian_path_with_limit(
    g: &WeightedGraph,
    limit: usize,
) -> Result<Option<Vec<Vertex>>, SolveError> {
    guard("vertex count", g.n(), limit)?;
    let n = g.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let adj: Vec<Vec<Vertex>> = (0..n).map(|v| g.neighbors(v).map(|(u, _)| u).collect()).collect();

    fn extend(adj: &[Vec<Vertex>], path: &mut Vec<Vertex>, visited: &mut [bool]) -> bool {
        if path.len() == adj.len() {
            return true;
        }
        let last = *path.last().unwrap();
        for &next in &adj[last] {
            if visited[next] {
                continue;
            }
            visited[next] = true;
            path.push(next);
            if extend(adj, path, visited) {
                return true;
            }
            path.pop();
            visited[next] = false;
        }
        false
    }

    for start in 0..n {
        let mut visited = vec![false; n];
        visited[start] = true;
        let mut path = vec![start];
        if extend(&adj, &mut path, &mut visited) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}
