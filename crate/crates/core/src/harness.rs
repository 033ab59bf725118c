//! Seeded instance generation and the suites that check the transformations
//! and approximations against the exact oracles.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`) and
//! only ever consumes raw `next_u64` outputs, in this order:
//!
//! 1. `n = n_min + r % (n_max - n_min + 1)`
//! 2. for each pair `u < v` in lexicographic order: the edge is present iff
//!    `r % den < num`, and a present edge then draws its weight
//!    `1 + r % weight_max`
//! 3. if a required flag fails, go back to step 1 with the same stream
//! 4. groups (GST only): `count = c_min + r % (c_max - c_min + 1)`, then
//!    per group `size = min(n, s_min + r % (s_max - s_min + 1))` and a
//!    partial Fisher-Yates shuffle of `0..n` where position `i` swaps with
//!    `i + r % (n - i)`
//!
//! Instance `i` of a suite seeded `s` is generated from the seed
//! `ChaCha8Rng::seed_from_u64(s)` with stream `i`, first output.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num::BigRational;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::approx::{approx_mds, approx_mdt, greedy_set_cover, harmonic, ratio, within_factor};
use crate::exact::{
    exact_dominating_set, exact_gst, exact_mds, exact_mds_centered, exact_mdp, exact_mdt, exact_set_cover,
    find_hamiltonian_path, SolveError, SolveOutcome,
};
use crate::graph::{GroupFamily, WeightedGraph};
use crate::io::{serialize_instance, InstanceFile, Kind};
use crate::reductions::{
    decide_hp_via_mdp, embed_dom_in_mds, embed_gst_in_mdt, embed_hp_in_mdp, embed_mdt_in_gst, lift_gst_to_mdt_solution,
    lift_mdp_to_hp, lift_mds_to_dom_solution, lift_mdt_to_gst_solution, lift_sc_to_mds_solution, reduce_dom_to_mds,
    reduce_gst_to_mdt, reduce_hp_to_mdp, reduce_mds_to_sc, reduce_mdt_to_gst, star_to_cover, GstInstance,
    ReductionError,
};
use crate::setcover::SetCoverInstance;
use crate::solution::{check_gst, check_solution, check_structure, Problem, SolutionKind, SubgraphSolution};
use crate::weight::ExtWeight;

pub const DEFAULT_MAX_RETRIES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupBounds {
    pub count_min: usize,
    pub count_max: usize,
    pub size_min: usize,
    pub size_max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenConfig {
    pub seed: u64,
    pub n_min: usize,
    pub n_max: usize,
    /// Edge probability `num / den`.
    pub edge_prob: (u64, u64),
    pub weight_max: u64,
    pub require_connected: bool,
    pub require_min_degree_1: bool,
    pub groups: Option<GroupBounds>,
    pub max_retries: usize,
}

impl GenConfig {
    pub fn new(seed: u64, n_min: usize, n_max: usize) -> Self {
        GenConfig {
            seed,
            n_min,
            n_max,
            edge_prob: (1, 2),
            weight_max: 10,
            require_connected: false,
            require_min_degree_1: false,
            groups: None,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        GenConfig { seed, ..self }
    }

    fn validate(&self) -> Result<(), GenError> {
        let bad = |s: &str| Err(GenError::InvalidConfig(s.to_string()));
        if self.n_min > self.n_max {
            return bad("n_min exceeds n_max");
        }
        let (num, den) = self.edge_prob;
        if den == 0 || num > den {
            return bad("edge probability must be num/den with num <= den and den > 0");
        }
        if self.weight_max == 0 {
            return bad("weight_max must be positive");
        }
        if let Some(gb) = self.groups {
            if gb.count_min > gb.count_max || gb.size_min > gb.size_max || gb.size_min == 0 {
                return bad("group bounds must be ordered and sizes positive");
            }
            if self.n_min == 0 && gb.count_max > 0 {
                return bad("groups need at least one vertex");
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
    #[error("no instance met the required flags within {0} attempts")]
    RetriesExhausted(usize),
}

/// Seed of instance `index` in a suite seeded `suite_seed`.
pub fn instance_seed(suite_seed: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(suite_seed);
    rng.set_stream(index);
    rng.next_u64()
}

fn below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    rng.next_u64() % bound
}

fn draw_graph(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> Result<WeightedGraph, GenError> {
    cfg.validate()?;
    let (num, den) = cfg.edge_prob;
    for _ in 0..cfg.max_retries.max(1) {
        let n = cfg.n_min + below(rng, (cfg.n_max - cfg.n_min + 1) as u64) as usize;
        let mut g = WeightedGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if below(rng, den) < num {
                    let w = 1 + below(rng, cfg.weight_max);
                    g.add_edge(u, v, ExtWeight::Finite(w)).expect("fresh pair");
                }
            }
        }
        let connected = !cfg.require_connected || g.is_connected();
        let min_deg = !cfg.require_min_degree_1 || (n > 0 && g.min_degree() >= 1);
        if connected && min_deg {
            return Ok(g);
        }
    }
    Err(GenError::RetriesExhausted(cfg.max_retries.max(1)))
}

/// Random weighted graph per the documented draw order.
pub fn gen_graph(cfg: &GenConfig) -> Result<WeightedGraph, GenError> {
    draw_graph(&mut ChaCha8Rng::seed_from_u64(cfg.seed), cfg)
}

/// Random graph plus groups; `cfg.groups` must be set.
pub fn gen_gst(cfg: &GenConfig) -> Result<GstInstance, GenError> {
    let Some(gb) = cfg.groups else {
        return Err(GenError::InvalidConfig("group bounds missing".into()));
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let graph = draw_graph(&mut rng, cfg)?;
    let n = graph.n();
    let count = gb.count_min + below(&mut rng, (gb.count_max - gb.count_min + 1) as u64) as usize;
    let mut groups = Vec::with_capacity(count);
    for _ in 0..count {
        let size = (gb.size_min + below(&mut rng, (gb.size_max - gb.size_min + 1) as u64) as usize).min(n);
        let mut perm: Vec<usize> = (0..n).collect();
        for i in 0..size {
            let j = i + below(&mut rng, (n - i) as u64) as usize;
            perm.swap(i, j);
        }
        perm.truncate(size);
        groups.push(perm);
    }
    let groups = GroupFamily::new(n, groups).expect("members are distinct and in range");
    Ok(GstInstance { graph, groups })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SetCoverConfig {
    pub seed: u64,
    pub universe_max: usize,
    pub sets_max: usize,
    pub weight_max: u64,
}

/// Random set cover instance: `m = 1 + r % universe_max`,
/// `k = 1 + r % sets_max`, then per set one draw per element (member iff
/// even) and a weight `r % (weight_max + 1)`.
pub fn gen_set_cover(cfg: &SetCoverConfig) -> SetCoverInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let m = 1 + below(&mut rng, cfg.universe_max.max(1) as u64) as usize;
    let k = 1 + below(&mut rng, cfg.sets_max.max(1) as u64) as usize;
    let sets = (0..k)
        .map(|_| {
            let elems = (0..m).filter(|_| rng.next_u64() % 2 == 0).collect();
            (elems, below(&mut rng, cfg.weight_max + 1))
        })
        .collect();
    SetCoverInstance::new(m, sets).expect("elements in range")
}

// ------------------------------------------------------------------ suites

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteKind {
    MdtGst,
    GstMdt,
    DomMds,
    MdsSc,
    HpMdp,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 5] =
        [SuiteKind::MdtGst, SuiteKind::GstMdt, SuiteKind::DomMds, SuiteKind::MdsSc, SuiteKind::HpMdp];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteKind::MdtGst => "mdt-gst",
            SuiteKind::GstMdt => "gst-mdt",
            SuiteKind::DomMds => "dom-mds",
            SuiteKind::MdsSc => "mds-sc",
            SuiteKind::HpMdp => "hp-mdp",
        }
    }

    /// Generator settings used by the acceptance runs.
    pub fn default_config(self, seed: u64) -> GenConfig {
        match self {
            SuiteKind::MdtGst => GenConfig { require_connected: true, ..GenConfig::new(seed, 2, 8) },
            SuiteKind::GstMdt => GenConfig {
                groups: Some(GroupBounds { count_min: 1, count_max: 3, size_min: 1, size_max: 3 }),
                ..GenConfig::new(seed, 1, 7)
            },
            SuiteKind::DomMds => GenConfig { weight_max: 1, require_min_degree_1: true, ..GenConfig::new(seed, 2, 7) },
            SuiteKind::MdsSc => GenConfig::new(seed, 1, 8),
            SuiteKind::HpMdp => GenConfig { weight_max: 1, ..GenConfig::new(seed, 1, 6) },
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        SuiteKind::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| s.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Skipped(String),
    Violation(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceRecord {
    pub index: usize,
    pub seed: u64,
    /// First 16 hex digits of the SHA-256 of the canonical instance text.
    pub digest: String,
    pub source_value: String,
    pub target_value: String,
    pub lifts_checked: usize,
    pub ratio: Option<BigRational>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub count: usize,
    pub records: Vec<InstanceRecord>,
    pub worst_ratio: Option<BigRational>,
    /// Set when an oracle guard stopped the suite early.
    pub aborted: Option<String>,
}

#[derive(Serialize)]
struct Summary<'a> {
    suite: &'a str,
    seed: u64,
    count: usize,
    violations: usize,
    worst_ratio: Option<String>,
}

impl SuiteReport {
    fn new(suite: impl Into<String>, seed: u64, count: usize) -> Self {
        SuiteReport { suite: suite.into(), seed, count, records: Vec::new(), worst_ratio: None, aborted: None }
    }

    fn push(&mut self, rec: InstanceRecord) {
        if let Some(r) = &rec.ratio {
            if self.worst_ratio.as_ref().is_none_or(|w| r > w) {
                self.worst_ratio = Some(r.clone());
            }
        }
        self.records.push(rec);
    }

    fn count_status(&self, f: impl Fn(&Status) -> bool) -> usize {
        self.records.iter().filter(|r| f(&r.status)).count()
    }

    pub fn passed_count(&self) -> usize {
        self.count_status(|s| *s == Status::Pass)
    }

    pub fn skipped(&self) -> usize {
        self.count_status(|s| matches!(s, Status::Skipped(_)))
    }

    pub fn violations(&self) -> usize {
        self.count_status(|s| matches!(s, Status::Violation(_)))
    }

    /// Zero violations and not aborted.
    pub fn passed(&self) -> bool {
        self.violations() == 0 && self.aborted.is_none()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} seed {} count {}\n", self.suite, self.seed, self.count);
        for r in &self.records {
            write!(
                out,
                "{} seed={:016x} digest={} src={} dst={} lifts={}",
                r.index, r.seed, r.digest, r.source_value, r.target_value, r.lifts_checked
            )
            .expect("string write");
            if let Some(q) = &r.ratio {
                write!(out, " ratio={q}").expect("string write");
            }
            match &r.status {
                Status::Pass => out.push_str(" ok\n"),
                Status::Skipped(why) => writeln!(out, " skipped: {why}").expect("string write"),
                Status::Violation(why) => writeln!(out, " VIOLATION: {why}").expect("string write"),
            }
        }
        if let Some(why) = &self.aborted {
            writeln!(out, "aborted: {why}").expect("string write");
        }
        let worst = self.worst_ratio.as_ref().map_or_else(|| "-".to_string(), |q| q.to_string());
        writeln!(
            out,
            "summary passed={} skipped={} violations={} worst_ratio={worst}",
            self.passed_count(),
            self.skipped(),
            self.violations()
        )
        .expect("string write");
        out
    }

    /// One-line JSON with fields `suite`, `seed`, `count`, `violations`,
    /// `worst_ratio` (a string `"p/q"` or null).
    pub fn summary_json(&self) -> String {
        serde_json::to_string(&Summary {
            suite: &self.suite,
            seed: self.seed,
            count: self.count,
            violations: self.violations() + usize::from(self.aborted.is_some()),
            worst_ratio: self.worst_ratio.as_ref().map(|q| q.to_string()),
        })
        .expect("summary serializes")
    }
}

pub fn digest(inst: &InstanceFile) -> String {
    let text = serialize_instance(inst).expect("integer weights at scale 1");
    hex::encode(&Sha256::digest(text.as_bytes())[..8])
}

fn value(outcome: Option<ExtWeight>) -> String {
    outcome.map_or_else(|| "infeasible".to_string(), |w| w.to_string())
}

/// What one instance produced: a record body, or an oracle guard error.
enum Check {
    Pass { src: String, dst: String, lifts: usize, ratio: Option<BigRational> },
    Skip(String),
    Fail { src: String, dst: String, why: String },
}

fn fail(src: impl Into<String>, dst: impl Into<String>, why: impl Into<String>) -> Check {
    Check::Fail { src: src.into(), dst: dst.into(), why: why.into() }
}

fn record(index: usize, seed: u64, digest: String, check: Check) -> InstanceRecord {
    let (source_value, target_value, lifts_checked, ratio, status) = match check {
        Check::Pass { src, dst, lifts, ratio } => (src, dst, lifts, ratio, Status::Pass),
        Check::Skip(why) => ("-".into(), "-".into(), 0, None, Status::Skipped(why)),
        Check::Fail { src, dst, why } => (src, dst, 0, None, Status::Violation(why)),
    };
    InstanceRecord { index, seed, digest, source_value, target_value, lifts_checked, ratio, status }
}

/// Shared outer loop: per-instance seed, generate, check, record; stop on
/// the first guard error.
fn run_seeded<T>(
    name: &str,
    seed: u64,
    count: usize,
    mut generate: impl FnMut(u64) -> Result<T, GenError>,
    mut describe: impl FnMut(&T) -> InstanceFile,
    mut check: impl FnMut(&T) -> Result<Check, SolveError>,
) -> SuiteReport {
    let mut report = SuiteReport::new(name, seed, count);
    for i in 0..count {
        let s = instance_seed(seed, i as u64);
        let (d, c) = match generate(s) {
            Err(e) => ("-".to_string(), Check::Skip(format!("generator: {e}"))),
            Ok(inst) => {
                let d = digest(&describe(&inst));
                match check(&inst) {
                    Ok(c) => (d, c),
                    Err(e) => {
                        report.aborted = Some(format!("instance {i}: {e}"));
                        return report;
                    }
                }
            }
        };
        report.push(record(i, s, d, c));
    }
    report
}

/// Generates `count` instances from `cfg` and checks one transformation on
/// each: equal optimal values (or mutual infeasibility), and both solution
/// maps applied to the oracle solutions keep feasibility and weight.
pub fn run_equivalence_suite(which: SuiteKind, cfg: &GenConfig, count: usize) -> SuiteReport {
    let cfg = *cfg;
    let graph_gen = move |s| gen_graph(&cfg.with_seed(s));
    match which {
        SuiteKind::MdtGst => {
            run_seeded(which.as_str(), cfg.seed, count, graph_gen, |g| InstanceFile::graph(Kind::Mdt, 1, g.clone()), check_mdt_gst)
        }
        SuiteKind::GstMdt => run_seeded(
            which.as_str(),
            cfg.seed,
            count,
            move |s| gen_gst(&cfg.with_seed(s)),
            |inst| InstanceFile::gst(1, inst.clone()),
            check_gst_mdt,
        ),
        SuiteKind::DomMds => {
            run_seeded(which.as_str(), cfg.seed, count, graph_gen, |g| InstanceFile::graph(Kind::Dom, 1, g.clone()), check_dom_mds)
        }
        SuiteKind::MdsSc => {
            run_seeded(which.as_str(), cfg.seed, count, graph_gen, |g| InstanceFile::graph(Kind::Mds, 1, g.clone()), check_mds_sc)
        }
        SuiteKind::HpMdp => {
            run_seeded(which.as_str(), cfg.seed, count, graph_gen, |g| InstanceFile::graph(Kind::Hp, 1, g.clone()), check_hp_mdp)
        }
    }
}

/// Every graph on `1..=max_n` labelled vertices (all edge subsets), checked
/// like the `hp-mdp` suite.
pub fn run_hp_exhaustive(max_n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("hp-mdp-exhaustive", 0, 0);
    let mut index = 0;
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u64..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            let g = WeightedGraph::unweighted(n, edges).expect("distinct pairs");
            let d = digest(&InstanceFile::graph(Kind::Hp, 1, g.clone()));
            match check_hp_mdp(&g) {
                Ok(c) => report.push(record(index, mask, d, c)),
                Err(e) => {
                    report.aborted = Some(format!("n={n} mask={mask}: {e}"));
                    return report;
                }
            }
            index += 1;
        }
    }
    report.count = index;
    report
}

fn same_value(src: Option<ExtWeight>, dst: Option<ExtWeight>) -> Result<(), String> {
    if src == dst {
        Ok(())
    } else {
        Err(format!("values differ: {} vs {}", value(src), value(dst)))
    }
}

fn same_weight(what: &str, got: ExtWeight, want: ExtWeight) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what} weighs {got}, expected {want}"))
    }
}

fn check_mdt_gst(g: &WeightedGraph) -> Result<Check, SolveError> {
    let src = exact_mdt(g)?;
    let art = reduce_mdt_to_gst(g).map_err(reduction_guard)?;
    let dst = exact_gst(&art.output.graph, &art.output.groups)?;
    let (sv, dv) = (value(src.weight()), value(dst.weight()));
    let verdict = (|| {
        same_value(src.weight(), dst.weight())?;
        let (Some(s), Some(d)) = (src.solution(), dst.solution()) else { return Ok(0) };
        let lifted = lift_gst_to_mdt_solution(&art, d).map_err(|e| format!("lift: {e}"))?;
        check_solution(g, &lifted, Problem::Mdt).map_err(|v| format!("lifted tree: {v}"))?;
        same_weight("lifted tree", lifted.weight(), d.weight())?;
        let embedded = embed_mdt_in_gst(&art, s).map_err(|e| format!("embed: {e}"))?;
        check_gst(&art.output.graph, &art.output.groups, &embedded).map_err(|v| format!("embedded tree: {v}"))?;
        same_weight("embedded tree", embedded.weight(), s.weight())?;
        Ok(2)
    })();
    Ok(finish(sv, dv, verdict, None))
}

fn check_gst_mdt(inst: &GstInstance) -> Result<Check, SolveError> {
    let src = exact_gst(&inst.graph, &inst.groups)?;
    let art = match reduce_gst_to_mdt(inst) {
        Ok(a) => a,
        Err(e) => return Ok(Check::Skip(e.to_string())),
    };
    let dst = exact_mdt(&art.output)?;
    let (sv, dv) = (value(src.weight()), value(dst.weight()));
    let verdict = (|| {
        same_value(src.weight(), dst.weight())?;
        let (Some(s), Some(d)) = (src.solution(), dst.solution()) else { return Ok(0) };
        let lifted = lift_mdt_to_gst_solution(&art, d).map_err(|e| format!("lift: {e}"))?;
        check_gst(&inst.graph, &inst.groups, &lifted).map_err(|v| format!("lifted tree: {v}"))?;
        same_weight("lifted tree", lifted.weight(), d.weight())?;
        let embedded = embed_gst_in_mdt(&art, s).map_err(|e| format!("embed: {e}"))?;
        check_solution(&art.output, &embedded, Problem::Mdt).map_err(|v| format!("embedded tree: {v}"))?;
        same_weight("embedded tree", embedded.weight(), s.weight())?;
        Ok(2)
    })();
    Ok(finish(sv, dv, verdict, None))
}

fn check_dom_mds(g: &WeightedGraph) -> Result<Check, SolveError> {
    let art = match reduce_dom_to_mds(g) {
        Ok(a) => a,
        Err(e @ ReductionError::IsolatedVertex(_)) => return Ok(Check::Skip(e.to_string())),
        Err(e) => return Err(reduction_guard(e)),
    };
    let set = exact_dominating_set(g)?;
    let size = ExtWeight::Finite(set.len() as u64);
    let dst = exact_mds(&art.output)?;
    let (sv, dv) = (size.to_string(), value(dst.weight()));
    let verdict = (|| {
        same_value(Some(size), dst.weight())?;
        let star = dst.solution().expect("same value as a finite size");
        let lifted = lift_mds_to_dom_solution(&art, star).map_err(|e| format!("lift: {e}"))?;
        if g.undominated(&lifted).expect("source vertices").is_some() || lifted.len() != set.len() {
            return Err(format!("lifted set {lifted:?} is not a minimum dominating set"));
        }
        let embedded = embed_dom_in_mds(&art, &set).map_err(|e| format!("embed: {e}"))?;
        same_weight("embedded star", embedded.weight(), size)?;
        Ok(2)
    })();
    Ok(finish(sv, dv, verdict, None))
}

fn check_mds_sc(g: &WeightedGraph) -> Result<Check, SolveError> {
    let overall = exact_mds(g)?;
    let mut best_center: Option<ExtWeight> = None;
    let mut lifts = 0;
    for c in 0..g.n() {
        let art = reduce_mds_to_sc(g, c).map_err(reduction_guard)?;
        let cover = exact_set_cover(&art.output)?;
        let star = exact_mds_centered(g, c)?;
        let verdict: Result<(), String> = (|| {
            same_value(star.weight(), cover.weight()).map_err(|e| format!("center {c}: {e}"))?;
            let (Some(x), Some(s)) = (cover.solution(), star.solution()) else { return Ok(()) };
            let lifted = lift_sc_to_mds_solution(&art, x).map_err(|e| format!("center {c} lift: {e}"))?;
            same_weight("lifted star", lifted.weight(), cover.weight().expect("feasible"))?;
            let back = star_to_cover(&art, s).map_err(|e| format!("center {c} star to cover: {e}"))?;
            let w = art.output.check_cover(&back).map_err(|e| format!("center {c}: {e}"))?;
            same_weight("cover of the star", ExtWeight::Finite(w), s.weight())?;
            Ok(())
        })();
        if let Err(why) = verdict {
            return Ok(fail(value(overall.weight()), value(cover.weight()), why));
        }
        if cover.is_feasible() {
            lifts += 2;
        }
        if let Some(w) = cover.weight() {
            best_center = Some(best_center.map_or(w, |b| b.min(w)));
        }
    }
    let (sv, dv) = (value(overall.weight()), value(best_center));
    Ok(finish(sv, dv, same_value(overall.weight(), best_center).map(|_| lifts), None))
}

fn check_hp_mdp(g: &WeightedGraph) -> Result<Check, SolveError> {
    let hp = find_hamiltonian_path(g)?;
    let art = reduce_hp_to_mdp(g).map_err(reduction_guard)?;
    let dst = exact_mdp(&art.output)?;
    let yes_no = |b: bool| if b { "yes" } else { "no" }.to_string();
    let verdict = (|| {
        let decided = decide_hp_via_mdp(&art, &dst).map_err(|e| format!("decide: {e}"))?;
        if decided != hp.is_some() {
            return Err(format!("decision {} but oracle says {}", yes_no(decided), yes_no(hp.is_some())));
        }
        let Some(order) = &hp else { return Ok(0) };
        let path = embed_hp_in_mdp(&art, order).map_err(|e| format!("embed: {e}"))?;
        same_weight("embedded path", path.weight(), ExtWeight::ZERO)?;
        let lifted = lift_mdp_to_hp(&art, dst.solution().expect("decided yes"))
            .map_err(|e| format!("lift: {e}"))?
            .ok_or("zero-weight path did not lift")?;
        let witness = SubgraphSolution::path(g, &lifted).map_err(|v| format!("lifted order: {v}"))?;
        check_structure(g, &witness, SolutionKind::Path).map_err(|v| format!("lifted order: {v}"))?;
        if witness.vertices().len() != g.n() {
            return Err("lifted path is not spanning".to_string());
        }
        Ok(2)
    })();
    Ok(finish(yes_no(hp.is_some()), value(dst.weight()), verdict, None))
}

fn reduction_guard(e: ReductionError) -> SolveError {
    match e {
        ReductionError::Graph(g) => SolveError::Graph(g),
        _ => SolveError::EmptyGraph,
    }
}

fn finish(src: String, dst: String, verdict: Result<usize, String>, ratio: Option<BigRational>) -> Check {
    match verdict {
        Ok(lifts) => Check::Pass { src, dst, lifts, ratio },
        Err(why) => fail(src, dst, why),
    }
}

/// Greedy versus exact set cover: feasibility agrees and greedy weighs at
/// most `H(m)` times the optimum. `worst_ratio` is the largest
/// greedy/optimum over instances with a positive optimum.
pub fn run_greedy_bound_suite(cfg: &SetCoverConfig, count: usize) -> SuiteReport {
    let cfg = *cfg;
    run_seeded(
        "greedy",
        cfg.seed,
        count,
        move |s| Ok(gen_set_cover(&SetCoverConfig { seed: s, ..cfg })),
        |inst| InstanceFile::sc(1, inst.clone()),
        |inst| {
            let exact = exact_set_cover(inst)?;
            let greedy = greedy_set_cover(inst);
            let (sv, dv) = (value(exact.weight()), value(greedy.weight()));
            let verdict = (|| {
                same_value(exact.weight().map(|_| ExtWeight::ZERO), greedy.weight().map(|_| ExtWeight::ZERO))
                    .map_err(|_| "feasibility differs".to_string())?;
                let (Some(e), Some(cover)) = (exact.weight(), greedy.solution()) else { return Ok((0, None)) };
                let w = inst.check_cover(cover).map_err(|e| format!("greedy cover: {e}"))?;
                let e = e.finite().expect("set weights are finite");
                if !within_factor(w, e, &harmonic(inst.universe_size())) {
                    return Err(format!("greedy {w} exceeds H({}) * {e}", inst.universe_size()));
                }
                Ok((1, (e > 0).then(|| ratio(w, e))))
            })();
            Ok(match verdict {
                Ok((lifts, r)) => Check::Pass { src: sv, dst: dv, lifts, ratio: r },
                Err(why) => fail(sv, dv, why),
            })
        },
    )
}

/// Approximations against the exact oracles on graphs from `cfg`.
///
/// The MDS half is asserted: feasibility agrees with `exact_mds`, the
/// result is a valid star, and its weight is at most `H(n)` times optimal
/// (a zero optimum demands zero). Its ratios feed `worst_ratio`.
///
/// The MDT half asserts only feasibility agreement, validity and
/// `approx >= exact`; its worst ratio goes to the second report.
pub fn run_ratio_suite(cfg: &GenConfig, count: usize) -> (SuiteReport, SuiteReport) {
    let cfg = *cfg;
    let mds = run_seeded(
        "ratio-mds",
        cfg.seed,
        count,
        move |s| gen_graph(&cfg.with_seed(s)),
        |g| InstanceFile::graph(Kind::Mds, 1, g.clone()),
        |g| {
            let exact = exact_mds(g)?;
            let approx = approx_mds(g).map_err(|_| SolveError::EmptyGraph)?;
            let bound = harmonic(g.n());
            Ok(compare_approx(g, Problem::Mds, &exact, &approx, Some(&bound)))
        },
    );
    let mdt = run_seeded(
        "ratio-mdt",
        cfg.seed,
        count,
        move |s| gen_graph(&cfg.with_seed(s)),
        |g| InstanceFile::graph(Kind::Mdt, 1, g.clone()),
        |g| {
            let exact = exact_mdt(g)?;
            let approx = approx_mdt(g).map_err(|_| SolveError::EmptyGraph)?;
            Ok(compare_approx(g, Problem::Mdt, &exact, &approx, None))
        },
    );
    (mds, mdt)
}

fn compare_approx(
    g: &WeightedGraph,
    problem: Problem,
    exact: &SolveOutcome<SubgraphSolution>,
    approx: &SolveOutcome<SubgraphSolution>,
    bound: Option<&BigRational>,
) -> Check {
    let (sv, dv) = (value(exact.weight()), value(approx.weight()));
    let verdict = (|| {
        if exact.is_feasible() != approx.is_feasible() {
            return Err("feasibility differs".to_string());
        }
        let (Some(e), Some(s)) = (exact.weight(), approx.solution()) else { return Ok((0, None)) };
        check_solution(g, s, problem).map_err(|v| format!("approximate solution: {v}"))?;
        let (e, a) = (e.finite().expect("feasible"), s.weight().finite().expect("feasible"));
        if a < e {
            return Err(format!("approximation {a} beats the optimum {e}"));
        }
        if let Some(b) = bound {
            if !within_factor(a, e, b) {
                return Err(format!("approximation {a} exceeds {b} * {e}"));
            }
        }
        Ok((1, (e > 0).then(|| ratio(a, e))))
    })();
    match verdict {
        Ok((lifts, r)) => Check::Pass { src: sv, dst: dv, lifts, ratio: r },
        Err(why) => fail(sv, dv, why),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_without_edges() {
        let cfg = GenConfig { edge_prob: (0, 1), ..GenConfig::new(1, 1, 1) };
        let g = gen_graph(&cfg).unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
    }

    #[test]
    fn generation_is_deterministic() {
        let cfg = GenConfig { require_connected: true, ..GenConfig::new(7, 2, 9) };
        assert_eq!(gen_graph(&cfg).unwrap(), gen_graph(&cfg).unwrap());
        let gcfg = SuiteKind::GstMdt.default_config(3);
        assert_eq!(gen_gst(&gcfg).unwrap(), gen_gst(&gcfg).unwrap());
        assert_ne!(instance_seed(1, 0), instance_seed(1, 1));
        assert_ne!(instance_seed(1, 0), instance_seed(2, 0));
    }

    #[test]
    fn flags_are_honored() {
        for s in 0..50 {
            let g = gen_graph(&SuiteKind::MdtGst.default_config(s)).unwrap();
            assert!(g.is_connected());
            assert!((2..=8).contains(&g.n()));
            assert!(g.edges().all(|(_, _, w)| (1..=10).contains(&w.finite().unwrap())));
            let d = gen_graph(&SuiteKind::DomMds.default_config(s)).unwrap();
            assert!(d.min_degree() >= 1);
        }
    }

    #[test]
    fn unsatisfiable_flags_exhaust_retries() {
        let cfg = GenConfig { require_min_degree_1: true, max_retries: 5, ..GenConfig::new(1, 1, 1) };
        assert_eq!(gen_graph(&cfg), Err(GenError::RetriesExhausted(5)));
        let bad = GenConfig { edge_prob: (3, 2), ..GenConfig::new(1, 1, 1) };
        assert!(matches!(gen_graph(&bad), Err(GenError::InvalidConfig(_))));
    }

    #[test]
    fn groups_within_bounds() {
        for s in 0..50 {
            let inst = gen_gst(&SuiteKind::GstMdt.default_config(s)).unwrap();
            assert!((1..=3).contains(&inst.groups.len()));
            for grp in inst.groups.iter() {
                assert!(!grp.is_empty() && grp.len() <= 3);
            }
        }
    }

    #[test]
    fn small_suites_pass() {
        for which in SuiteKind::ALL {
            let r = run_equivalence_suite(which, &which.default_config(11), 15);
            assert!(r.passed(), "{}", r.to_text());
            assert_eq!(r.records.len(), 15);
        }
        let r = run_greedy_bound_suite(&SetCoverConfig { seed: 5, universe_max: 10, sets_max: 12, weight_max: 10 }, 30);
        assert!(r.passed(), "{}", r.to_text());
        let (mds, mdt) = run_ratio_suite(&GenConfig::new(9, 1, 7), 15);
        assert!(mds.passed(), "{}", mds.to_text());
        assert!(mdt.passed(), "{}", mdt.to_text());
    }

    #[test]
    fn isolated_vertices_are_skipped() {
        let cfg = GenConfig { edge_prob: (0, 1), ..GenConfig::new(4, 2, 3) };
        let r = run_equivalence_suite(SuiteKind::DomMds, &cfg, 3);
        assert_eq!(r.skipped(), 3);
        assert!(r.passed());
    }

    #[test]
    fn reports_are_reproducible() {
        let cfg = SuiteKind::MdtGst.default_config(21);
        let a = run_equivalence_suite(SuiteKind::MdtGst, &cfg, 10);
        let b = run_equivalence_suite(SuiteKind::MdtGst, &cfg, 10);
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.summary_json(), b.summary_json());
        let json: serde_json::Value = serde_json::from_str(&a.summary_json()).unwrap();
        for field in ["suite", "seed", "count", "violations", "worst_ratio"] {
            assert!(json.get(field).is_some(), "{field}");
        }
        assert_eq!(json["violations"], 0);
    }

    #[test]
    fn exhaustive_hp_small() {
        let r = run_hp_exhaustive(4);
        assert_eq!(r.count, 1 + 2 + 8 + 64);
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn guard_aborts_with_partial_report() {
        let cfg = GenConfig::new(1, 30, 30);
        let r = run_equivalence_suite(SuiteKind::MdtGst, &cfg, 5);
        assert!(r.aborted.is_some());
        assert!(r.records.is_empty());
        assert!(!r.passed());
    }
}
