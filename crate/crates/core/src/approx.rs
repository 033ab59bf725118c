//! Approximations: greedy weighted set cover, the dominating-star algorithm
//! built on it, and a dominating-tree pipeline through group Steiner trees.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use fixedbitset::FixedBitSet;
use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

use crate::exact::SolveOutcome;
use crate::graph::{GroupFamily, Vertex, WeightedGraph};
use crate::reductions::{lift_gst_to_mdt_solution, lift_sc_to_mds_solution, reduce_mds_to_sc, reduce_mdt_to_gst, LiftError, ReductionError};
use crate::setcover::SetCoverInstance;
use crate::solution::{check_solution, Problem, SolutionKind, SubgraphSolution};
use crate::weight::ExtWeight;

/// Above this many vertices `heuristic_gst` roots only at members of the
/// smallest group instead of at every vertex.
pub const ALL_ROOTS_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproxError {
    #[error("instance has no vertices")]
    EmptyGraph,
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Lift(#[from] LiftError),
}

/// An approximate solution next to an optional exact optimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxReport<S> {
    pub solution: S,
    pub weight: ExtWeight,
    pub oracle_weight: Option<ExtWeight>,
    /// `weight / oracle_weight`, present only when the oracle weight is
    /// finite and positive.
    pub ratio: Option<BigRational>,
}

impl<S> ApproxReport<S> {
    pub fn new(solution: S, weight: ExtWeight, oracle_weight: Option<ExtWeight>) -> Self {
        let ratio = match (weight, oracle_weight) {
            (ExtWeight::Finite(w), Some(ExtWeight::Finite(o))) if o > 0 => Some(ratio(w, o)),
            _ => None,
        };
        ApproxReport { solution, weight, oracle_weight, ratio }
    }
}

pub fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `H(m) = 1 + 1/2 + ... + 1/m`, exactly. `H(0) = 0`.
pub fn harmonic(m: usize) -> BigRational {
    (1..=m).fold(BigRational::zero(), |acc, k| acc + BigRational::new(BigInt::one(), BigInt::from(k)))
}

/// `approx <= bound * optimum`, with a zero optimum demanding a zero
/// approximation.
pub fn within_factor(approx: u64, optimum: u64, bound: &BigRational) -> bool {
    if optimum == 0 {
        approx == 0
    } else {
        ratio(approx, 1) <= bound * ratio(optimum, 1)
    }
}

/// Set indices in the order greedy picks them; `None` when some element is
/// in no set.
///
/// Each step takes the set with the least weight per newly covered element,
/// skipping sets that cover nothing new. Zero-weight sets therefore go
/// first. Ties go to the lower index.
pub fn greedy_pick_order(inst: &SetCoverInstance) -> Option<Vec<usize>> {
    let sets: Vec<FixedBitSet> = (0..inst.set_count()).map(|i| inst.bitset(i)).collect();
    let mut covered = FixedBitSet::with_capacity(inst.universe_size());
    let mut picked = Vec::new();
    while covered.count_ones(..) < inst.universe_size() {
        let mut best: Option<(usize, u64, usize)> = None;
        for (i, set) in sets.iter().enumerate() {
            let fresh = set.difference(&covered).count();
            if fresh == 0 {
                continue;
            }
            let w = inst.set_weight(i);
            let improves = match best {
                None => true,
                // w / fresh < bw / bfresh
                Some((_, bw, bfresh)) => (w as u128) * (bfresh as u128) < (bw as u128) * (fresh as u128),
            };
            if improves {
                best = Some((i, w, fresh));
            }
        }
        let (i, _, _) = best?;
        covered.union_with(&sets[i]);
        picked.push(i);
    }
    Some(picked)
}

/// Greedy weighted set cover; weight at most `H(m)` times optimal.
pub fn greedy_set_cover(inst: &SetCoverInstance) -> SolveOutcome<Vec<usize>> {
    match greedy_pick_order(inst) {
        Some(mut cover) => {
            cover.sort_unstable();
            let weight = inst.check_cover(&cover).expect("greedy output covers");
            SolveOutcome::Feasible { solution: cover, weight: weight.into() }
        }
        None => SolveOutcome::Infeasible,
    }
}

fn solution_key(s: &SubgraphSolution) -> (ExtWeight, usize, &[Vertex], &[(Vertex, Vertex)]) {
    (s.weight(), s.vertices().len(), s.vertices(), s.edges())
}

fn keep_best(best: &mut Option<SubgraphSolution>, cand: SubgraphSolution) {
    if best.as_ref().is_none_or(|b| solution_key(&cand) < solution_key(b)) {
        *best = Some(cand);
    }
}

/// Dominating star: greedy set cover for every possible center, best star
/// over all centers.
pub fn approx_mds(g: &WeightedGraph) -> Result<SolveOutcome<SubgraphSolution>, ApproxError> {
    if g.n() == 0 {
        return Err(ApproxError::EmptyGraph);
    }
    let mut best = None;
    for c in 0..g.n() {
        let art = reduce_mds_to_sc(g, c)?;
        if let SolveOutcome::Feasible { solution: cover, .. } = greedy_set_cover(&art.output) {
            keep_best(&mut best, lift_sc_to_mds_solution(&art, &cover)?);
        }
    }
    Ok(SolveOutcome::from_best(best))
}

/// Grows a tree from `root` by repeatedly attaching, along a shortest
/// finite-weight path, the nearest vertex of a group not yet hit (ties to
/// the lower vertex index); then drops leaves whose removal keeps every
/// group hit. `None` when some group cannot be reached.
pub fn grow_from_root(g: &WeightedGraph, groups: &GroupFamily, root: Vertex) -> Option<SubgraphSolution> {
    let n = g.n();
    let mut member_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, grp) in groups.iter().enumerate() {
        for &v in grp {
            member_of[v].push(i);
        }
    }
    let mut in_tree = vec![false; n];
    let mut hits = vec![0usize; groups.len()];
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let add_vertex = |v: Vertex, in_tree: &mut Vec<bool>, hits: &mut Vec<usize>| {
        in_tree[v] = true;
        for &i in &member_of[v] {
            hits[i] += 1;
        }
    };
    add_vertex(root, &mut in_tree, &mut hits);

    while hits.contains(&0) {
        let (dist, pred) = shortest_paths_from(g, &in_tree);
        let target = (0..n)
            .filter(|&v| !in_tree[v] && dist[v].is_some())
            .filter(|&v| member_of[v].iter().any(|&i| hits[i] == 0))
            .min_by_key(|&v| (dist[v], v))?;
        let mut v = target;
        while !in_tree[v] {
            let p = pred[v].expect("reached vertices have a predecessor");
            edges.push((p, v));
            add_vertex(v, &mut in_tree, &mut hits);
            v = p;
        }
    }

    // prune
    loop {
        let degree = |v: Vertex, edges: &[(Vertex, Vertex)]| edges.iter().filter(|(a, b)| *a == v || *b == v).count();
        let leaf = (0..n).find(|&v| {
            in_tree[v]
                && !edges.is_empty()
                && degree(v, &edges) == 1
                && member_of[v].iter().all(|&i| hits[i] >= 2)
        });
        let Some(v) = leaf else { break };
        in_tree[v] = false;
        for &i in &member_of[v] {
            hits[i] -= 1;
        }
        edges.retain(|&(a, b)| a != v && b != v);
    }

    let vertices = (0..n).filter(|&v| in_tree[v]).collect();
    SubgraphSolution::on_graph(g, SolutionKind::Tree, vertices, edges).ok()
}

/// Multi-source Dijkstra over finite-weight edges from every vertex with
/// `source[v]`. Heap order `(distance, vertex)` fixes predecessors.
fn shortest_paths_from(g: &WeightedGraph, source: &[bool]) -> (Vec<Option<u128>>, Vec<Option<Vertex>>) {
    let n = g.n();
    let mut dist: Vec<Option<u128>> = vec![None; n];
    let mut pred = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    for v in (0..n).filter(|&v| source[v]) {
        dist[v] = Some(0);
        heap.push(Reverse((0u128, v)));
    }
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for (v, w) in g.neighbors(u) {
            let Some(w) = w.finite() else { continue };
            let nd = d + w as u128;
            if dist[v].is_none_or(|old| nd < old) {
                dist[v] = Some(nd);
                pred[v] = Some(u);
                heap.push(Reverse((nd, v)));
            }
        }
    }
    (dist, pred)
}

/// Group Steiner tree heuristic: [`grow_from_root`] from every vertex (or,
/// above [`ALL_ROOTS_LIMIT`] vertices, from every member of the first
/// smallest group), keeping the lightest tree.
pub fn heuristic_gst(g: &WeightedGraph, groups: &GroupFamily) -> SolveOutcome<SubgraphSolution> {
    let roots: Vec<Vertex> = if g.n() <= ALL_ROOTS_LIMIT {
        (0..g.n()).collect()
    } else {
        groups
            .iter()
            .min_by_key(|grp| grp.len())
            .map_or_else(|| vec![0], <[Vertex]>::to_vec)
    };
    let mut best = None;
    for r in roots {
        if let Some(t) = grow_from_root(g, groups, r) {
            keep_best(&mut best, t);
        }
    }
    SolveOutcome::from_best(best)
}

/// Dominating tree through the closed-neighborhood group instance and
/// [`heuristic_gst`]. No approximation guarantee is claimed.
pub fn approx_mdt(g: &WeightedGraph) -> Result<SolveOutcome<SubgraphSolution>, ApproxError> {
    if g.n() == 0 {
        return Err(ApproxError::EmptyGraph);
    }
    let art = reduce_mdt_to_gst(g)?;
    match heuristic_gst(&art.output.graph, &art.output.groups) {
        SolveOutcome::Infeasible => Ok(SolveOutcome::Infeasible),
        SolveOutcome::Feasible { solution, .. } => {
            let tree = lift_gst_to_mdt_solution(&art, &solution)?;
            debug_assert!(check_solution(g, &tree, Problem::Mdt).is_ok());
            Ok(SolveOutcome::from_best(Some(tree)))
        }
    }
}
