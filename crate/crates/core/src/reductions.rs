//! Instance transformations between the domination problems, each paired
//! with solution lifts in both directions.
//!
//! Every transformation is weight-preserving: a lifted solution has exactly
//! the weight of the solution it came from, and every lift re-checks
//! feasibility on its target before returning.
//!
//! Index layout of the produced instances (originals first, gadgets after):
//!
//! | transformation | output vertices |
//! |----------------|-----------------|
//! | MDT → GST      | same graph; group `v` is `N[v]` |
//! | GST → MDT      | `0..n` originals, `n + i` for group `i` |
//! | DOM → MDS      | `v` left copies, `n + v` right copies, `2n` center |
//! | HP → MDP       | `v` originals, `n + v` pendant of `v` |
//!
//! MDS → SC produces a set cover instance whose elements are the vertices
//! outside `N[c]` (ascending) and whose sets are the finite-weight
//! neighbors of `c` (ascending).

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::exact::SolveOutcome;
use crate::graph::{GraphError, GroupFamily, Vertex, WeightedGraph};
use crate::setcover::{SetCoverError, SetCoverInstance};
use crate::solution::{check_gst, check_solution, check_structure, Problem, SolutionKind, SubgraphSolution, Violation};
use crate::weight::ExtWeight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("group family is empty")]
    NoGroups,
    #[error("vertex {0} is isolated; the dominating-star gadget needs minimum degree 1")]
    IsolatedVertex(Vertex),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("artifact is {found}, expected {expected}")]
    WrongReduction { expected: ReductionKind, found: ReductionKind },
    #[error("input solution rejected: {0}")]
    Precondition(Violation),
    #[error("input cover rejected: {0}")]
    Cover(SetCoverError),
    #[error("input solution has infinite weight")]
    InfiniteWeight,
    #[error("input solution uses gadget vertex {0}")]
    GadgetVertex(Vertex),
    #[error("input star is not centered at {0}")]
    NotCentered(Vertex),
    #[error("lifted solution fails its postcondition: {0}")]
    Postcondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    MdtToGst,
    GstToMdt,
    DomToMds,
    MdsToSc,
    HpToMdp,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 5] = [
        ReductionKind::MdtToGst,
        ReductionKind::GstToMdt,
        ReductionKind::DomToMds,
        ReductionKind::MdsToSc,
        ReductionKind::HpToMdp,
    ];

    /// Problem keywords of the source and produced instance.
    pub fn endpoints(self) -> (&'static str, &'static str) {
        match self {
            ReductionKind::MdtToGst => ("mdt", "gst"),
            ReductionKind::GstToMdt => ("gst", "mdt"),
            ReductionKind::DomToMds => ("dom", "mds"),
            ReductionKind::MdsToSc => ("mds", "sc"),
            ReductionKind::HpToMdp => ("hp", "mdp"),
        }
    }

    pub fn from_endpoints(from: &str, to: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.endpoints() == (from, to))
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.endpoints();
        write!(f, "{a}->{b}")
    }
}

/// What an output entity stands for in the source instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    /// Same vertex as in the source.
    Orig,
    /// Vertex (GST → MDT) or group (MDT → GST) standing for a group.
    Group,
    LCopy,
    RCopy,
    Center,
    Pendant,
    /// Set cover element standing for an undominated-by-center vertex.
    Element,
    /// Set cover set standing for a candidate leaf.
    Set,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Orig => "orig",
            Tag::Group => "group",
            Tag::LCopy => "lcopy",
            Tag::RCopy => "rcopy",
            Tag::Center => "center",
            Tag::Pendant => "pendant",
            Tag::Element => "element",
            Tag::Set => "set",
        }
    }

    pub fn parse(s: &str) -> Option<Tag> {
        Some(match s {
            "orig" => Tag::Orig,
            "group" => Tag::Group,
            "lcopy" => Tag::LCopy,
            "rcopy" => Tag::RCopy,
            "center" => Tag::Center,
            "pendant" => Tag::Pendant,
            "element" => Tag::Element,
            "set" => Tag::Set,
            _ => return None,
        })
    }
}

/// One row of the correspondence table. `source` is `None` only for the
/// dominating-star center, which stands for no source object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Correspondence {
    pub out_index: usize,
    pub tag: Tag,
    pub source: Option<usize>,
}

impl Correspondence {
    fn new(out_index: usize, tag: Tag, source: usize) -> Self {
        Correspondence { out_index, tag, source: Some(source) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightRelation {
    /// Lifted solutions weigh exactly what their preimages weigh.
    Identity,
}

/// Which edge set the dominating-star gadget uses.
///
/// `Closed` joins `u_l` to `v_r` for every `u ∈ N[v]`, i.e. it also adds
/// the infinite edge `v_l v_r`. `Open` uses only `u ∈ N(v)`. With `Open`
/// a star with leaves `D_l` dominates every right copy iff `D` is a
/// *total* dominating set, so the value equality with minimum dominating
/// set fails (on K2, 1 versus 2). `Closed` is the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DomGadget {
    #[default]
    Closed,
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GstInstance {
    pub graph: WeightedGraph,
    pub groups: GroupFamily,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CenteredGraph {
    pub graph: WeightedGraph,
    pub center: Vertex,
}

/// A produced instance together with its source and correspondence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact<S, O> {
    pub kind: ReductionKind,
    pub source: S,
    pub output: O,
    pub map: Vec<Correspondence>,
    pub weight_relation: WeightRelation,
    /// Only meaningful for DOM → MDS.
    pub gadget: DomGadget,
}

impl<S, O> ReductionArtifact<S, O> {
    fn expect(&self, expected: ReductionKind) -> Result<(), LiftError> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(LiftError::WrongReduction { expected, found: self.kind })
        }
    }
}

fn identity_map(n: usize) -> Vec<Correspondence> {
    (0..n).map(|v| Correspondence::new(v, Tag::Orig, v)).collect()
}

fn non_empty(g: &WeightedGraph) -> Result<(), ReductionError> {
    if g.n() == 0 {
        Err(ReductionError::EmptyGraph)
    } else {
        Ok(())
    }
}

fn post(cond: Result<(), Violation>, what: &str) -> Result<(), LiftError> {
    cond.map_err(|v| LiftError::Postcondition(format!("{what}: {v}")))
}

// ---------------------------------------------------------------- MDT -> GST

/// Same weighted graph; group `v` is the closed neighborhood of `v`.
pub fn reduce_mdt_to_gst(g: &WeightedGraph) -> Result<ReductionArtifact<WeightedGraph, GstInstance>, ReductionError> {
    non_empty(g)?;
    let groups = (0..g.n()).map(|v| g.closed_neighborhood(v)).collect::<Result<Vec<_>, _>>()?;
    let groups = GroupFamily::new(g.n(), groups)?;
    let mut map = identity_map(g.n());
    map.extend((0..g.n()).map(|v| Correspondence::new(v, Tag::Group, v)));
    Ok(ReductionArtifact {
        kind: ReductionKind::MdtToGst,
        source: g.clone(),
        output: GstInstance { graph: g.clone(), groups },
        map,
        weight_relation: WeightRelation::Identity,
        gadget: DomGadget::default(),
    })
}

/// A feasible group Steiner tree of the produced instance is a dominating
/// tree of the source (identity).
pub fn lift_gst_to_mdt_solution(
    art: &ReductionArtifact<WeightedGraph, GstInstance>,
    s: &SubgraphSolution,
) -> Result<SubgraphSolution, LiftError> {
    art.expect(ReductionKind::MdtToGst)?;
    check_gst(&art.output.graph, &art.output.groups, s).map_err(LiftError::Precondition)?;
    let lifted = s.clone().with_kind(SolutionKind::Tree);
    post(check_solution(&art.source, &lifted, Problem::Mdt), "dominating tree")?;
    Ok(lifted)
}

/// A dominating tree of the source is a feasible group Steiner tree of the
/// produced instance (identity).
pub fn embed_mdt_in_gst(
    art: &ReductionArtifact<WeightedGraph, GstInstance>,
    s: &SubgraphSolution,
) -> Result<SubgraphSolution, LiftError> {
    art.expect(ReductionKind::MdtToGst)?;
    check_solution(&art.source, s, Problem::Mdt).map_err(LiftError::Precondition)?;
    let embedded = s.clone().with_kind(SolutionKind::Tree);
    post(check_gst(&art.output.graph, &art.output.groups, &embedded), "group Steiner tree")?;
    Ok(embedded)
}

// ---------------------------------------------------------------- GST -> MDT

/// Adds one vertex per group, joined to its members, and completes the
/// original vertices to a clique. All new edges weigh `Infinite`.
pub fn reduce_gst_to_mdt(inst: &GstInstance) -> Result<ReductionArtifact<GstInstance, WeightedGraph>, ReductionError> {
    non_empty(&inst.graph)?;
    if inst.groups.is_empty() {
        return Err(ReductionError::NoGroups);
    }
    let n = inst.graph.n();
    let mut out = WeightedGraph::new(n + inst.groups.len());
    for (u, v, w) in inst.graph.edges() {
        out.add_edge(u, v, w)?;
    }
    for (u, v) in (0..n).tuple_combinations() {
        if !inst.graph.has_edge(u, v) {
            out.add_edge(u, v, ExtWeight::Infinite)?;
        }
    }
    for (i, group) in inst.groups.iter().enumerate() {
        for &v in group {
            out.add_edge(v, n + i, ExtWeight::Infinite)?;
        }
    }
    let mut map = identity_map(n);
    map.extend((0..inst.groups.len()).map(|i| Correspondence::new(n + i, Tag::Group, i)));
    Ok(ReductionArtifact {
        kind: ReductionKind::GstToMdt,
        source: inst.clone(),
        output: out,
        map,
        weight_relation: WeightRelation::Identity,
        gadget: DomGadget::default(),
    })
}

/// A finite dominating tree of the produced graph is a group Steiner tree
/// of the source.
///
/// The one finite dominating tree that touches a gadget vertex is the
/// singleton `{g_0}` when the only group is all of `V`; it lifts to the
/// singleton of the smallest vertex, also at weight 0.
pub fn lift_mdt_to_gst_solution(
    art: &ReductionArtifact<GstInstance, WeightedGraph>,
    s: &SubgraphSolution,
) -> Result<SubgraphSolution, LiftError> {
    art.expect(ReductionKind::GstToMdt)?;
    if !s.weight().is_finite() {
        return Err(LiftError::InfiniteWeight);
    }
    check_solution(&art.output, s, Problem::Mdt).map_err(LiftError::Precondition)?;
    let n = art.source.graph.n();
    let lifted = match s.vertices() {
        [g] if *g >= n => {
            let group = art.source.groups.group(g - n);
            SubgraphSolution::singleton(SolutionKind::Tree, group[0])
        }
        vs => {
            if let Some(&g) = vs.iter().find(|&&v| v >= n) {
                return Err(LiftError::GadgetVertex(g));
            }
            s.clone().with_kind(SolutionKind::Tree)
        }
    };
    post(check_gst(&art.source.graph, &art.source.groups, &lifted), "group Steiner tree")?;
    Ok(lifted)
}

/// A group Steiner tree of the source is a dominating tree of the produced
/// graph (identity embedding).
pub fn embed_gst_in_mdt(
    art: &ReductionArtifact<GstInstance, WeightedGraph>,
    s: &SubgraphSolution,
) -> Result<SubgraphSolution, LiftError> {
    art.expect(ReductionKind::GstToMdt)?;
    check_gst(&art.source.graph, &art.source.groups, s).map_err(LiftError::Precondition)?;
    let embedded = s.clone().with_kind(SolutionKind::Tree);
    post(check_solution(&art.output, &embedded, Problem::Mdt), "dominating tree")?;
    Ok(embedded)
}

// ---------------------------------------------------------------- DOM -> MDS

pub fn reduce_dom_to_mds(g: &WeightedGraph) -> Result<ReductionArtifact<WeightedGraph, WeightedGraph>, ReductionError> {
    reduce_dom_to_mds_with(g, DomGadget::default())
}

/// Left copies, right copies and a center joined to every left copy at
/// weight 1; left-right edges weigh `Infinite`. Weights of `g` are ignored.
pub fn reduce_dom_to_mds_with(
    g: &WeightedGraph,
    gadget: DomGadget,
) -> Result<ReductionArtifact<WeightedGraph, WeightedGraph>, ReductionError> {
    non_empty(g)?;
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(ReductionError::IsolatedVertex(v));
    }
    let n = g.n();
    let center = 2 * n;
    let mut out = WeightedGraph::new(2 * n + 1);
    for (u, v, _) in g.edges() {
        out.add_edge(u, n + v, ExtWeight::Infinite)?;
        out.add_edge(v, n + u, ExtWeight::Infinite)?;
    }
    if gadget == DomGadget::Closed {
        for v in 0..n {
            out.add_edge(v, n + v, ExtWeight::Infinite)?;
        }
    }
    for v in 0..n {
        out.add_edge(center, v, ExtWeight::Finite(1))?;
    }
    let mut map: Vec<Correspondence> = (0..n).map(|v| Correspondence::new(v, Tag::LCopy, v)).collect();
    map.extend((0..n).map(|v| Correspondence::new(n + v, Tag::RCopy, v)));
    map.push(Correspondence { out_index: center, tag: Tag::Center, source: None });
    Ok(ReductionArtifact {
        kind: ReductionKind::DomToMds,
        source: g.clone(),
        output: out,
        map,
        weight_relation: WeightRelation::Identity,
        gadget,
    })
}

/// A finite dominating star of the produced graph yields a dominating set
/// of the source whose size equals the star's weight.
pub fn lift_mds_to_dom_solution(
    art: &ReductionArtifact<WeightedGraph, WeightedGraph>,
    s: &SubgraphSolution,
) -> Result<Vec<Vertex>, LiftError> {
    art.expect(ReductionKind::DomToMds)?;
    let Some(weight) = s.weight().finite() else {
        return Err(LiftError::InfiniteWeight);
    };
    check_solution(&art.output, s, Problem::Mds).map_err(LiftError::Precondition)?;
    let n = art.source.n();
    let center = 2 * n;
    let set: Vec<Vertex> = s.vertices().iter().copied().filter(|&v| v != center).collect();
    if let Some(&r) = set.iter().find(|&&v| v >= n) {
        return Err(LiftError::GadgetVertex(r));
    }
    if set.len() as u64 != weight {
        return Err(LiftError::Postcondition(format!(
            "dominating set has {} vertices but the star weighs {weight}",
            set.len()
        )));
    }
    if let Some(v) = art.source.undominated(&set).expect("left copies are source vertices") {
        return Err(LiftError::Postcondition(format!("vertex {v} is not dominated")));
    }
    Ok(set)
}

/// Star centered at `c` whose leaves are the left copies of `set`.
///
/// With the `Open` gadget this star only dominates when `set` is a total
/// dominating set; the postcondition check reports that.
pub fn embed_dom_in_mds(
    art: &ReductionArtifact<WeightedGraph, WeightedGraph>,
    set: &[Vertex],
) -> Result<SubgraphSolution, LiftError> {
    art.expect(ReductionKind::DomToMds)?;
    let n = art.source.n();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(LiftError::Precondition(Violation::VertexOutOfRange(v)));
    }
    if let Some(v) = art.source.undominated(set).expect("indices checked") {
        return Err(LiftError::Precondition(Violation::Undominated(v)));
    }
    let center = 2 * n;
    let mut vertices = set.to_vec();
    vertices.push(center);
    let edges = set.iter().map(|&v| (center, v)).collect();
    let star = SubgraphSolution::on_graph(&art.output, SolutionKind::Star, vertices, edges)
        .map_err(LiftError::Precondition)?;
    post(check_solution(&art.output, &star, Problem::Mds), "dominating star")?;
    Ok(star)
}

// ----------------------------------------------------------------- MDS -> SC

/// Set cover instance for dominating stars centered at `center`.
///
/// Elements are the vertices outside `N[center]`; one set per finite-weight
/// neighbor `v` of the center, holding `N(v)` restricted to the elements,
/// weighted `w(center, v)`.
pub fn reduce_mds_to_sc(
    g: &WeightedGraph,
    center: Vertex,
) -> Result<ReductionArtifact<CenteredGraph, SetCoverInstance>, ReductionError> {
    non_empty(g)?;
    let closed = g.closed_neighborhood(center)?;
    let elements: Vec<Vertex> = (0..g.n()).filter(|v| closed.binary_search(v).is_err()).collect();
    let element_of = |v: Vertex| elements.binary_search(&v).ok();
    let leaves: Vec<(Vertex, u64)> =
        g.neighbors(center).filter_map(|(v, w)| w.finite().map(|w| (v, w))).collect();
    let sets = leaves
        .iter()
        .map(|&(v, w)| (g.neighbors(v).filter_map(|(x, _)| element_of(x)).collect(), w))
        .collect();
    let inst = SetCoverInstance::new(elements.len(), sets).expect("elements are indexed in range");
    let mut map: Vec<Correspondence> =
        elements.iter().enumerate().map(|(i, &v)| Correspondence::new(i, Tag::Element, v)).collect();
    map.extend(leaves.iter().enumerate().map(|(i, &(v, _))| Correspondence::new(i, Tag::Set, v)));
    Ok(ReductionArtifact {
        kind: ReductionKind::MdsToSc,
        source: CenteredGraph { graph: g.clone(), center },
        output: inst,
        map,
        weight_relation: WeightRelation::Identity,
        gadget: DomGadget::default(),
    })
}

fn leaf_of_set(art: &ReductionArtifact<CenteredGraph, SetCoverInstance>, i: usize) -> Vertex {
    art.map
        .iter()
        .find(|c| c.tag == Tag::Set && c.out_index == i)
        .and_then(|c| c.source)
        .expect("every set has a leaf")
}

/// Star at the center whose leaves are the vertices behind the chosen sets.
pub fn lift_sc_to_mds_solution(
    art: &ReductionArtifact<CenteredGraph, SetCoverInstance>,
    cover: &[usize],
) -> Result<SubgraphSolution, LiftError> {
    art.expect(ReductionKind::MdsToSc)?;
    let cover_weight = art.output.check_cover(cover).map_err(LiftError::Cover)?;
    let c = art.source.center;
    let leaves: Vec<Vertex> = cover.iter().map(|&i| leaf_of_set(art, i)).collect();
    let mut vertices = leaves.clone();
    vertices.push(c);
    let star = SubgraphSolution::on_graph(
        &art.source.graph,
        SolutionKind::Star,
        vertices,
        leaves.iter().map(|&l| (c, l)).collect(),
    )
    .map_err(LiftError::Precondition)?;
    post(check_solution(&art.source.graph, &star, Problem::Mds), "dominating star")?;
    if star.weight() != ExtWeight::Finite(cover_weight) {
        return Err(LiftError::Postcondition(format!(
            "star weighs {} but the cover weighs {cover_weight}",
            star.weight()
        )));
    }
    Ok(star)
}

/// Cover formed by the sets of a dominating star's leaves. The star must
/// contain the center and every other vertex must hang off it.
pub fn star_to_cover(
    art: &ReductionArtifact<CenteredGraph, SetCoverInstance>,
    s: &SubgraphSolution,
) -> Result<Vec<usize>, LiftError> {
    art.expect(ReductionKind::MdsToSc)?;
    let g = &art.source.graph;
    let c = art.source.center;
    if !s.weight().is_finite() {
        return Err(LiftError::InfiniteWeight);
    }
    check_solution(g, s, Problem::Mds).map_err(LiftError::Precondition)?;
    if s.vertices().binary_search(&c).is_err() || s.edges().iter().any(|&(a, b)| a != c && b != c) {
        return Err(LiftError::NotCentered(c));
    }
    let mut cover = Vec::new();
    for &v in s.vertices().iter().filter(|&&v| v != c) {
        let i = art
            .map
            .iter()
            .find(|m| m.tag == Tag::Set && m.source == Some(v))
            .map(|m| m.out_index)
            .ok_or(LiftError::InfiniteWeight)?;
        cover.push(i);
    }
    cover.sort_unstable();
    let w = art.output.check_cover(&cover).map_err(|e| LiftError::Postcondition(e.to_string()))?;
    if s.weight() != ExtWeight::Finite(w) {
        return Err(LiftError::Postcondition(format!("cover weighs {w} but the star weighs {}", s.weight())));
    }
    Ok(cover)
}

// ----------------------------------------------------------------- HP -> MDP

/// Every vertex gets a pendant copy on an infinite edge; original edges
/// weigh 0.
pub fn reduce_hp_to_mdp(g: &WeightedGraph) -> Result<ReductionArtifact<WeightedGraph, WeightedGraph>, ReductionError> {
    non_empty(g)?;
    let n = g.n();
    let mut out = WeightedGraph::new(2 * n);
    for (u, v, _) in g.edges() {
        out.add_edge(u, v, ExtWeight::ZERO)?;
    }
    for v in 0..n {
        out.add_edge(v, n + v, ExtWeight::Infinite)?;
    }
    let mut map = identity_map(n);
    map.extend((0..n).map(|v| Correspondence::new(n + v, Tag::Pendant, v)));
    Ok(ReductionArtifact {
        kind: ReductionKind::HpToMdp,
        source: g.clone(),
        output: out,
        map,
        weight_relation: WeightRelation::Identity,
        gadget: DomGadget::default(),
    })
}

/// Hamiltonian path of the source read off a zero-weight dominating path.
/// `Ok(None)` when the path weighs more than zero.
pub fn lift_mdp_to_hp(
    art: &ReductionArtifact<WeightedGraph, WeightedGraph>,
    s: &SubgraphSolution,
) -> Result<Option<Vec<Vertex>>, LiftError> {
    art.expect(ReductionKind::HpToMdp)?;
    check_solution(&art.output, s, Problem::Mdp).map_err(LiftError::Precondition)?;
    if s.weight() != ExtWeight::ZERO {
        return Ok(None);
    }
    let n = art.source.n();
    let order: Vec<Vertex> = s
        .path_order()
        .ok_or(LiftError::Precondition(Violation::NotTree("not a simple path")))?
        .into_iter()
        .map(|v| if v >= n { v - n } else { v })
        .collect();
    let witness = SubgraphSolution::path(&art.source, &order)
        .map_err(|v| LiftError::Postcondition(v.to_string()))?;
    if witness.vertices().len() != n {
        return Err(LiftError::Postcondition(format!(
            "zero-weight path spans {} of {n} vertices",
            witness.vertices().len()
        )));
    }
    post(check_structure(&art.source, &witness, SolutionKind::Path), "hamiltonian path")?;
    Ok(Some(order))
}

/// True iff `outcome` is a feasible dominating path of weight exactly 0,
/// in which case its vertex set is checked to be all of `V`.
pub fn decide_hp_via_mdp(
    art: &ReductionArtifact<WeightedGraph, WeightedGraph>,
    outcome: &SolveOutcome<SubgraphSolution>,
) -> Result<bool, LiftError> {
    art.expect(ReductionKind::HpToMdp)?;
    match outcome {
        SolveOutcome::Infeasible => Ok(false),
        SolveOutcome::Feasible { solution, weight } => {
            if *weight != solution.weight() {
                return Err(LiftError::Precondition(Violation::WeightMismatch {
                    claimed: *weight,
                    actual: solution.weight(),
                }));
            }
            Ok(lift_mdp_to_hp(art, solution)?.is_some())
        }
    }
}

/// A Hamiltonian path of the source is a zero-weight dominating path of the
/// produced graph.
pub fn embed_hp_in_mdp(
    art: &ReductionArtifact<WeightedGraph, WeightedGraph>,
    order: &[Vertex],
) -> Result<SubgraphSolution, LiftError> {
    art.expect(ReductionKind::HpToMdp)?;
    let n = art.source.n();
    if order.len() != n || order.iter().sorted().dedup().count() != n {
        return Err(LiftError::Precondition(Violation::NotTree("not a permutation of the vertices")));
    }
    let in_source = SubgraphSolution::path(&art.source, order).map_err(LiftError::Precondition)?;
    check_structure(&art.source, &in_source, SolutionKind::Path).map_err(LiftError::Precondition)?;
    let path = SubgraphSolution::path(&art.output, order).map_err(LiftError::Precondition)?;
    post(check_solution(&art.output, &path, Problem::Mdp), "dominating path")?;
    if path.weight() != ExtWeight::ZERO {
        return Err(LiftError::Postcondition(format!("path weighs {}", path.weight())));
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{exact_dominating_set, exact_gst, exact_mdp, exact_mdt, exact_mds, exact_set_cover};

    fn unit(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
        WeightedGraph::unweighted(n, edges.iter().copied()).unwrap()
    }

    fn p4() -> WeightedGraph {
        WeightedGraph::from_edges(4, [(0, 1, 1.into()), (1, 2, 2.into()), (2, 3, 3.into())]).unwrap()
    }

    fn c5() -> WeightedGraph {
        unit(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    }

    fn finite_edges(g: &WeightedGraph) -> Vec<(Vertex, Vertex, ExtWeight)> {
        g.edges().filter(|e| e.2.is_finite()).collect()
    }

    #[test]
    fn mdt_to_gst_groups() {
        let art = reduce_mdt_to_gst(&unit(4, &[(0, 1), (1, 2), (2, 3)])).unwrap();
        let groups: Vec<_> = art.output.groups.iter().map(<[_]>::to_vec).collect();
        assert_eq!(groups, vec![vec![0, 1], vec![0, 1, 2], vec![1, 2, 3], vec![2, 3]]);

        let k3 = unit(3, &[(0, 1), (1, 2), (0, 2)]);
        let art = reduce_mdt_to_gst(&k3).unwrap();
        assert!(art.output.groups.iter().all(|g| g == [0, 1, 2]));
        assert_eq!(art.output.graph, k3);

        let art = reduce_mdt_to_gst(&unit(3, &[(0, 1)])).unwrap();
        assert_eq!(art.output.groups.group(2), &[2]);
    }

    #[test]
    fn largest_group_is_max_degree_plus_one() {
        let star = unit(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let art = reduce_mdt_to_gst(&star).unwrap();
        assert_eq!(art.output.groups.len(), 5);
        assert_eq!(art.output.groups.iter().map(<[_]>::len).max(), Some(star.max_degree() + 1));
    }

    #[test]
    fn lift_gst_to_mdt_examples() {
        let g = p4();
        let art = reduce_mdt_to_gst(&g).unwrap();
        let t = SubgraphSolution::on_graph(&g, SolutionKind::Tree, vec![1, 2], vec![(1, 2)]).unwrap();
        let lifted = lift_gst_to_mdt_solution(&art, &t).unwrap();
        assert_eq!(lifted.weight(), ExtWeight::Finite(2));
        assert_eq!(Some(lifted.weight()), exact_mdt(&g).unwrap().weight());

        let k3 = unit(3, &[(0, 1), (1, 2), (0, 2)]);
        let art = reduce_mdt_to_gst(&k3).unwrap();
        let lifted = lift_gst_to_mdt_solution(&art, &SubgraphSolution::singleton(SolutionKind::Tree, 0)).unwrap();
        assert_eq!(lifted.weight(), ExtWeight::ZERO);

        let bad = SubgraphSolution::singleton(SolutionKind::Tree, 0);
        let art = reduce_mdt_to_gst(&g).unwrap();
        assert!(matches!(lift_gst_to_mdt_solution(&art, &bad), Err(LiftError::Precondition(_))));
    }

    /// The pentagon instance with groups {1,2}, {1,5}, {3,4}, zero-based.
    fn pentagon_gst() -> GstInstance {
        let graph = unit(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 0)]);
        let groups = GroupFamily::new(5, vec![vec![0, 1], vec![0, 4], vec![2, 3]]).unwrap();
        GstInstance { graph, groups }
    }

    #[test]
    fn gst_to_mdt_construction() {
        let inst = pentagon_gst();
        let art = reduce_gst_to_mdt(&inst).unwrap();
        let out = &art.output;
        assert_eq!(out.n(), 8);
        assert_eq!(out.closed_neighborhood(5).unwrap(), vec![0, 1, 5]);
        assert_eq!(out.closed_neighborhood(6).unwrap(), vec![0, 4, 6]);
        assert_eq!(out.closed_neighborhood(7).unwrap(), vec![2, 3, 7]);
        for (u, v) in (0..5).tuple_combinations() {
            assert!(out.has_edge(u, v));
        }
        for (u, v) in (5..8).tuple_combinations() {
            assert!(!out.has_edge(u, v));
        }
        assert_eq!(finite_edges(out), inst.graph.edges().collect::<Vec<_>>());
        assert_eq!(out.weight(0, 2), Some(ExtWeight::Infinite));
        assert!(art.map.contains(&Correspondence::new(6, Tag::Group, 1)));

        let k2 = GstInstance {
            graph: unit(2, &[(0, 1)]),
            groups: GroupFamily::new(2, vec![vec![1]]).unwrap(),
        };
        let art = reduce_gst_to_mdt(&k2).unwrap();
        assert_eq!(art.output.n(), 3);
        assert_eq!(art.output.closed_neighborhood(2).unwrap(), vec![1, 2]);
    }

    #[test]
    fn gst_mdt_lifts_on_pentagon() {
        let inst = pentagon_gst();
        let art = reduce_gst_to_mdt(&inst).unwrap();
        let t = SubgraphSolution::on_graph(&inst.graph, SolutionKind::Tree, vec![0, 3], vec![(0, 3)]).unwrap();
        let embedded = embed_gst_in_mdt(&art, &t).unwrap();
        assert_eq!(embedded.weight(), t.weight());

        // a tree hitting only group 0 is not a GST solution
        let partial = SubgraphSolution::on_graph(&inst.graph, SolutionKind::Tree, vec![0, 1], vec![(0, 1)]).unwrap();
        assert!(embed_gst_in_mdt(&art, &partial).is_err());

        let opt = exact_mdt(&art.output).unwrap();
        let lifted = lift_mdt_to_gst_solution(&art, opt.solution().unwrap()).unwrap();
        assert_eq!(Some(lifted.weight()), exact_gst(&inst.graph, &inst.groups).unwrap().weight());
        assert_eq!(lifted.weight(), ExtWeight::Finite(1));

        let through_gadget = SubgraphSolution::on_graph(&art.output, SolutionKind::Tree, vec![0, 5], vec![(0, 5)]).unwrap();
        assert!(matches!(lift_mdt_to_gst_solution(&art, &through_gadget), Err(LiftError::InfiniteWeight)));
    }

    #[test]
    fn single_full_group_gadget_singleton() {
        let inst = GstInstance {
            graph: unit(3, &[(0, 1), (1, 2)]),
            groups: GroupFamily::new(3, vec![vec![0, 1, 2]]).unwrap(),
        };
        let art = reduce_gst_to_mdt(&inst).unwrap();
        let gadget = SubgraphSolution::singleton(SolutionKind::Tree, 3);
        let lifted = lift_mdt_to_gst_solution(&art, &gadget).unwrap();
        assert_eq!(lifted.vertices(), &[0]);
        assert_eq!(lifted.weight(), ExtWeight::ZERO);
    }

    /// The graph drawn for the star hardness gadget: edges 1-2, 2-3, 3-4,
    /// 4-1, 4-5, 3-1 (zero-based here).
    fn star_figure_graph() -> WeightedGraph {
        unit(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (2, 0)])
    }

    #[test]
    fn dom_to_mds_construction() {
        for (g, m) in [(c5(), 5), (star_figure_graph(), 6)] {
            let open = reduce_dom_to_mds_with(&g, DomGadget::Open).unwrap();
            assert_eq!(open.output.n(), 11);
            let inf = open.output.edges().filter(|e| !e.2.is_finite()).count();
            assert_eq!(inf, 2 * m);
            assert_eq!(finite_edges(&open.output), (0..5).map(|v| (v, 10, ExtWeight::Finite(1))).collect::<Vec<_>>());

            let closed = reduce_dom_to_mds(&g).unwrap();
            let inf = closed.output.edges().filter(|e| !e.2.is_finite()).count();
            assert_eq!(inf, 2 * m + 5);
            assert!((0..5).all(|v| closed.output.weight(v, 5 + v) == Some(ExtWeight::Infinite)));
        }

        let k2 = reduce_dom_to_mds_with(&unit(2, &[(0, 1)]), DomGadget::Open).unwrap();
        let o = &k2.output;
        assert_eq!(o.weight(4, 0), Some(ExtWeight::Finite(1)));
        assert_eq!(o.weight(4, 1), Some(ExtWeight::Finite(1)));
        assert_eq!(o.weight(0, 3), Some(ExtWeight::Infinite));
        assert_eq!(o.weight(1, 2), Some(ExtWeight::Infinite));
        assert_eq!(o.edge_count(), 4);
        assert!(k2.map.contains(&Correspondence { out_index: 4, tag: Tag::Center, source: None }));
    }

    #[test]
    fn dom_to_mds_rejects_isolated_vertices() {
        assert_eq!(
            reduce_dom_to_mds(&unit(3, &[(0, 1)])).unwrap_err(),
            ReductionError::IsolatedVertex(2)
        );
    }

    #[test]
    fn open_gadget_counts_total_domination() {
        // K2: a single vertex dominates, but every right copy needs a
        // left copy of a *neighbor*
        let k2 = unit(2, &[(0, 1)]);
        assert_eq!(exact_dominating_set(&k2).unwrap().len(), 1);
        let open = reduce_dom_to_mds_with(&k2, DomGadget::Open).unwrap();
        assert_eq!(exact_mds(&open.output).unwrap().weight(), Some(ExtWeight::Finite(2)));
        assert!(embed_dom_in_mds(&open, &[0]).is_err());
        let closed = reduce_dom_to_mds(&k2).unwrap();
        assert_eq!(exact_mds(&closed.output).unwrap().weight(), Some(ExtWeight::Finite(1)));
    }

    #[test]
    fn dom_mds_lifts_on_c5() {
        let g = c5();
        let art = reduce_dom_to_mds(&g).unwrap();
        let all = embed_dom_in_mds(&art, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(all.weight(), ExtWeight::Finite(5));
        assert_eq!(lift_mds_to_dom_solution(&art, &all).unwrap(), vec![0, 1, 2, 3, 4]);

        // {1, 3} in one-based labels
        assert!(g.dominates(&[0, 2]).unwrap());
        let star = embed_dom_in_mds(&art, &[0, 2]).unwrap();
        assert_eq!(star.weight(), ExtWeight::Finite(2));
        assert_eq!(lift_mds_to_dom_solution(&art, &star).unwrap(), vec![0, 2]);

        let best = exact_mds(&art.output).unwrap();
        assert_eq!(best.weight(), Some(ExtWeight::Finite(exact_dominating_set(&g).unwrap().len() as u64)));
    }

    #[test]
    fn mds_to_sc_examples() {
        let p5 = unit(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let art = reduce_mds_to_sc(&p5, 2).unwrap();
        assert_eq!(art.output.universe_size(), 2);
        let sets: Vec<_> = art.output.sets().map(|(e, w)| (e.to_vec(), w)).collect();
        assert_eq!(sets, vec![(vec![0], 1), (vec![1], 1)]);
        assert_eq!(leaf_of_set(&art, 0), 1);
        assert_eq!(leaf_of_set(&art, 1), 3);

        let star = lift_sc_to_mds_solution(&art, &[0, 1]).unwrap();
        assert_eq!(star.vertices(), &[1, 2, 3]);
        assert_eq!(star.weight(), ExtWeight::Finite(2));
        assert_eq!(exact_mds(&p5).unwrap().weight(), Some(star.weight()));
        assert_eq!(star_to_cover(&art, &star).unwrap(), vec![0, 1]);

        let claw = unit(4, &[(0, 1), (0, 2), (0, 3)]);
        let art = reduce_mds_to_sc(&claw, 0).unwrap();
        assert_eq!(art.output.universe_size(), 0);
        let cover = exact_set_cover(&art.output).unwrap();
        assert_eq!(cover.solution(), Some(&vec![]));
        let star = lift_sc_to_mds_solution(&art, &[]).unwrap();
        assert_eq!(star.vertices(), &[0]);
        assert_eq!(star.weight(), ExtWeight::ZERO);

        let art = reduce_mds_to_sc(&p5, 1).unwrap();
        assert_eq!(art.output.universe_size(), 2);
        let sets: Vec<_> = art.output.sets().map(|(e, _)| e.to_vec()).collect();
        assert_eq!(sets, vec![vec![], vec![0]]);
        assert_eq!(exact_set_cover(&art.output).unwrap(), SolveOutcome::Infeasible);
        assert!(matches!(lift_sc_to_mds_solution(&art, &[1]), Err(LiftError::Cover(_))));
    }

    #[test]
    fn mds_to_sc_skips_infinite_leaves() {
        let g = WeightedGraph::from_edges(
            4,
            [(0, 1, ExtWeight::Infinite), (0, 2, 4.into()), (2, 3, 1.into()), (1, 3, 1.into())],
        )
        .unwrap();
        let art = reduce_mds_to_sc(&g, 0).unwrap();
        // 1 is dominated by the center anyway; only 2 is a candidate leaf
        assert_eq!(art.output.universe_size(), 1);
        assert_eq!(art.output.set_count(), 1);
        assert_eq!(art.output.set_weight(0), 4);
    }

    #[test]
    fn hp_to_mdp_examples() {
        let k3 = unit(3, &[(0, 1), (1, 2), (0, 2)]);
        let art = reduce_hp_to_mdp(&k3).unwrap();
        assert_eq!(art.output.n(), 6);
        assert_eq!(art.output.edges().filter(|e| e.2 == ExtWeight::ZERO).count(), 3);
        assert_eq!(art.output.edges().filter(|e| e.2 == ExtWeight::Infinite).count(), 3);
        let path = SubgraphSolution::path(&art.output, &[0, 1, 2]).unwrap();
        let outcome = SolveOutcome::Feasible { weight: path.weight(), solution: path };
        assert!(decide_hp_via_mdp(&art, &outcome).unwrap());

        let claw = unit(4, &[(0, 1), (0, 2), (0, 3)]);
        let art = reduce_hp_to_mdp(&claw).unwrap();
        let out = exact_mdp(&art.output).unwrap();
        assert!(!decide_hp_via_mdp(&art, &out).unwrap());

        let p4 = unit(4, &[(0, 1), (1, 2), (2, 3)]);
        let art = reduce_hp_to_mdp(&p4).unwrap();
        let out = exact_mdp(&art.output).unwrap();
        assert!(decide_hp_via_mdp(&art, &out).unwrap());
        assert_eq!(lift_mdp_to_hp(&art, out.solution().unwrap()).unwrap(), Some(vec![0, 1, 2, 3]));
        assert_eq!(embed_hp_in_mdp(&art, &[3, 2, 1, 0]).unwrap().weight(), ExtWeight::ZERO);
        assert!(embed_hp_in_mdp(&art, &[0, 2, 1, 3]).is_err());
    }

    #[test]
    fn hp_figure_graph_gets_seven_pendants() {
        let g = unit(
            7,
            &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 5), (2, 6), (3, 4), (3, 6), (4, 6), (5, 6)],
        );
        let art = reduce_hp_to_mdp(&g).unwrap();
        assert_eq!(art.output.n(), 14);
        assert_eq!(art.output.edges().filter(|e| e.2 == ExtWeight::Infinite).count(), 7);
        assert!((0..7).all(|v| art.output.has_edge(v, 7 + v)));
    }

    #[test]
    fn single_vertex_pendant_path_still_decides() {
        let art = reduce_hp_to_mdp(&WeightedGraph::new(1)).unwrap();
        let pendant = SubgraphSolution::singleton(SolutionKind::Path, 1);
        let outcome = SolveOutcome::Feasible { weight: ExtWeight::ZERO, solution: pendant };
        assert!(decide_hp_via_mdp(&art, &outcome).unwrap());
    }

    #[test]
    fn lifts_check_the_artifact_kind() {
        let g = unit(2, &[(0, 1)]);
        let hp = reduce_hp_to_mdp(&g).unwrap();
        let s = SubgraphSolution::singleton(SolutionKind::Star, 0);
        assert!(matches!(lift_mds_to_dom_solution(&hp, &s), Err(LiftError::WrongReduction { .. })));
    }
}
