//! The `domtree` command line.
//!
//! Exit codes: 0 success, 1 infeasible or rejected solution, 2 input error,
//! 3 oracle guard exceeded. Diagnostics go to stderr.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::approx::{approx_mds, approx_mdt, greedy_set_cover, heuristic_gst, ApproxError};
use crate::exact::{
    exact_dominating_set, exact_gst, exact_mdp, exact_mds, exact_mdt, exact_set_cover, find_hamiltonian_path, SolveError,
    SolveOutcome,
};
use crate::graph::{Vertex, WeightedGraph};
use crate::harness::{
    gen_graph, gen_gst, gen_set_cover, run_equivalence_suite, run_greedy_bound_suite, run_hp_exhaustive,
    run_ratio_suite, GenConfig, GroupBounds, SetCoverConfig, SuiteKind, SuiteReport,
};
use crate::io::{
    parse_instance, parse_sidecar, parse_solution, serialize_instance, serialize_sidecar, serialize_solution, Body,
    InstanceFile, Kind, Sidecar, SolutionBody, SolutionFile,
};
use crate::reductions::{
    lift_gst_to_mdt_solution, lift_mdp_to_hp, lift_mds_to_dom_solution, lift_mdt_to_gst_solution,
    lift_sc_to_mds_solution, reduce_dom_to_mds_with, reduce_gst_to_mdt, reduce_hp_to_mdp, reduce_mds_to_sc,
    reduce_mdt_to_gst, Correspondence, DomGadget, GstInstance, LiftError, ReductionError, ReductionKind,
};
use crate::setcover::SetCoverInstance;
use crate::solution::{check_gst, check_solution, check_structure, Problem, SolutionKind, SubgraphSolution, Violation};
use crate::weight::ExtWeight;

#[derive(Debug, Parser)]
#[command(name = "domtree", version, about = "Dominating trees, stars and paths: exact solvers, reductions, approximations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an instance and print the solution.
    Solve {
        /// Problem to solve; defaults to the instance kind.
        #[arg(long)]
        problem: Option<Kind>,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        file: PathBuf,
    },
    /// Transform an instance and write the result plus a sidecar map.
    Reduce {
        #[arg(long)]
        from: Kind,
        #[arg(long)]
        to: Kind,
        /// Star center (mds -> sc).
        #[arg(long)]
        center: Option<Vertex>,
        #[arg(long, value_enum, default_value_t = Gadget::Closed)]
        gadget: Gadget,
        /// Instance destination; stdout if omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        sidecar: Option<PathBuf>,
        file: PathBuf,
    },
    /// Map a solution of a transformed instance back to its source.
    Lift {
        #[arg(long)]
        sidecar: PathBuf,
        #[arg(long)]
        solution: PathBuf,
    },
    /// Check a solution against an instance.
    Verify {
        #[arg(long)]
        problem: Option<Kind>,
        file: PathBuf,
        solution: PathBuf,
    },
    /// Generate a seeded random instance.
    Gen {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Edge probability as `num/den`.
        #[arg(long, default_value = "1/2")]
        edge_prob: String,
        #[arg(long, default_value_t = 10)]
        weight_max: u64,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        min_degree_1: bool,
        /// Group count range `min-max` (gst).
        #[arg(long, default_value = "1-3")]
        groups: String,
        /// Group size range `min-max` (gst).
        #[arg(long, default_value = "1-3")]
        group_size: String,
        /// Maximum set count (sc; the universe size is drawn up to n-max).
        #[arg(long, default_value_t = 12)]
        sets_max: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Run a seeded oracle suite and print its report.
    Suite {
        #[arg(long)]
        which: SuiteName,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Largest vertex count for hp-exhaustive.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Print the one-line JSON summary instead of the text report.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Exact,
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Gadget {
    Closed,
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    MdtGst,
    GstMdt,
    DomMds,
    MdsSc,
    HpMdp,
    HpExhaustive,
    Greedy,
    RatioMds,
    RatioMdt,
}

/// A failed command: message plus exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn input(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn rejected(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::GuardExceeded { .. } => Failure { code: 3, message: e.to_string() },
            _ => input(e.to_string()),
        }
    }
}

impl From<ReductionError> for Failure {
    fn from(e: ReductionError) -> Self {
        input(e.to_string())
    }
}

impl From<ApproxError> for Failure {
    fn from(e: ApproxError) -> Self {
        input(e.to_string())
    }
}

impl From<LiftError> for Failure {
    fn from(e: LiftError) -> Self {
        rejected(e.to_string())
    }
}

/// What a successful command prints, and whether it reports infeasibility.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "domtree: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command) -> Result<Output, Failure> {
    match cmd {
        Command::Solve { problem, method, file } => solve(&load(&file)?, problem, method),
        Command::Reduce { from, to, center, gadget, output, sidecar, file } => {
            let gadget = match gadget {
                Gadget::Closed => DomGadget::Closed,
                Gadget::Open => DomGadget::Open,
            };
            reduce(&load(&file)?, from, to, center, gadget, output.as_deref(), sidecar.as_deref())
        }
        Command::Lift { sidecar, solution } => lift(&read(&sidecar)?, &read(&solution)?),
        Command::Verify { problem, file, solution } => verify(&load(&file)?, problem, &read(&solution)?),
        Command::Gen {
            kind,
            seed,
            n_min,
            n_max,
            edge_prob,
            weight_max,
            connected,
            min_degree_1,
            groups,
            group_size,
            sets_max,
            output,
        } => {
            let (count_min, count_max) = range(&groups, "--groups")?;
            let (size_min, size_max) = range(&group_size, "--group-size")?;
            let cfg = GenConfig {
                edge_prob: fraction(&edge_prob)?,
                weight_max,
                require_connected: connected,
                require_min_degree_1: min_degree_1,
                groups: (kind == Kind::Gst).then_some(GroupBounds { count_min, count_max, size_min, size_max }),
                ..GenConfig::new(seed, n_min, n_max)
            };
            let inst = match kind {
                Kind::Sc => InstanceFile::sc(
                    1,
                    gen_set_cover(&SetCoverConfig { seed, universe_max: n_max, sets_max, weight_max }),
                ),
                Kind::Gst => InstanceFile::gst(1, gen_gst(&cfg).map_err(|e| input(e.to_string()))?),
                k => InstanceFile::graph(k, 1, gen_graph(&cfg).map_err(|e| input(e.to_string()))?),
            };
            emit(&text_of(&inst)?, output.as_deref())
        }
        Command::Suite { which, seed, count, max_n, json } => {
            let report = suite(which, seed, count, max_n);
            let code = if report.passed() { 0 } else { 1 };
            let text = if json { format!("{}\n", report.summary_json()) } else { report.to_text() };
            Ok(Output { text, code })
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<InstanceFile, Failure> {
    parse_instance(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn emit(text: &str, dest: Option<&Path>) -> Result<Output, Failure> {
    match dest {
        Some(p) => {
            fs::write(p, text).map_err(|e| input(format!("{}: {e}", p.display())))?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(text.to_string())),
    }
}

fn text_of(inst: &InstanceFile) -> Result<String, Failure> {
    serialize_instance(inst).map_err(|e| input(e.to_string()))
}

fn fraction(s: &str) -> Result<(u64, u64), Failure> {
    s.split_once('/')
        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
        .ok_or_else(|| input(format!("expected num/den, got {s:?}")))
}

fn range(s: &str, flag: &str) -> Result<(usize, usize), Failure> {
    s.split_once('-')
        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
        .ok_or_else(|| input(format!("{flag}: expected min-max, got {s:?}")))
}

fn graph_of(inst: &InstanceFile, problem: Kind) -> Result<&WeightedGraph, Failure> {
    match &inst.body {
        Body::Graph(g) => Ok(g),
        _ => Err(input(format!("{problem} needs a graph instance, got {}", inst.kind))),
    }
}

fn gst_of(inst: &InstanceFile) -> Result<&GstInstance, Failure> {
    match &inst.body {
        Body::Gst(g) => Ok(g),
        _ => Err(input(format!("gst needs a gst instance, got {}", inst.kind))),
    }
}

fn sc_of(inst: &InstanceFile) -> Result<&SetCoverInstance, Failure> {
    match &inst.body {
        Body::Sc(s) => Ok(s),
        _ => Err(input(format!("sc needs an sc instance, got {}", inst.kind))),
    }
}

fn problem_of(kind: Kind) -> Option<Problem> {
    match kind {
        Kind::Mdt => Some(Problem::Mdt),
        Kind::Mds => Some(Problem::Mds),
        Kind::Mdp => Some(Problem::Mdp),
        _ => None,
    }
}

fn write_solution(sol: &SolutionFile, scale: u64) -> Result<Output, Failure> {
    let text = serialize_solution(sol, scale).map_err(|e| input(e.to_string()))?;
    let code = if sol.body == SolutionBody::Infeasible { 1 } else { 0 };
    Ok(Output { text, code })
}

fn subgraph_file(outcome: SolveOutcome<SubgraphSolution>) -> SolutionFile {
    match outcome {
        SolveOutcome::Infeasible => SolutionFile { weight: None, body: SolutionBody::Infeasible },
        SolveOutcome::Feasible { solution, weight } => SolutionFile {
            weight: Some(weight),
            body: SolutionBody::Subgraph {
                kind: solution.kind(),
                vertices: solution.vertices().to_vec(),
                edges: solution.edges().to_vec(),
            },
        },
    }
}

fn cover_file(outcome: SolveOutcome<Vec<usize>>) -> SolutionFile {
    match outcome {
        SolveOutcome::Infeasible => SolutionFile { weight: None, body: SolutionBody::Infeasible },
        SolveOutcome::Feasible { solution, weight } => SolutionFile { weight: Some(weight), body: SolutionBody::Cover(solution) },
    }
}

fn solve(inst: &InstanceFile, problem: Option<Kind>, method: Method) -> Result<Output, Failure> {
    let problem = problem.unwrap_or(inst.kind);
    let scale = inst.scale;
    let approx = method == Method::Approx;
    let sol = match problem {
        Kind::Mdt | Kind::Mds | Kind::Mdp => {
            let g = graph_of(inst, problem)?;
            let outcome = match (problem, approx) {
                (Kind::Mdt, false) => exact_mdt(g)?,
                (Kind::Mdt, true) => approx_mdt(g)?,
                (Kind::Mds, false) => exact_mds(g)?,
                (Kind::Mds, true) => approx_mds(g)?,
                (_, false) => exact_mdp(g)?,
                (_, true) => return Err(input("no approximation method for mdp")),
            };
            subgraph_file(outcome)
        }
        Kind::Gst => {
            let GstInstance { graph, groups } = gst_of(inst)?;
            subgraph_file(if approx { heuristic_gst(graph, groups) } else { exact_gst(graph, groups)? })
        }
        Kind::Sc => {
            let sc = sc_of(inst)?;
            cover_file(if approx { greedy_set_cover(sc) } else { exact_set_cover(sc)? })
        }
        Kind::Dom => {
            if approx {
                return Err(input("no approximation method for dom"));
            }
            let set = exact_dominating_set(graph_of(inst, problem)?)?;
            let sol = SolutionFile { weight: Some(ExtWeight::Finite(set.len() as u64)), body: SolutionBody::Set(set) };
            return write_solution(&sol, 1);
        }
        Kind::Hp => {
            if approx {
                return Err(input("no approximation method for hp"));
            }
            let body = match find_hamiltonian_path(graph_of(inst, problem)?)? {
                Some(order) => SolutionBody::Order(order),
                None => SolutionBody::Infeasible,
            };
            return write_solution(&SolutionFile { weight: None, body }, 1);
        }
    };
    write_solution(&sol, scale)
}

// ------------------------------------------------------------------ reduce / lift

/// The result of re-running a reduction: produced instance plus map.
struct Reduced {
    output: InstanceFile,
    map: Vec<Correspondence>,
}

fn run_reduction(
    kind: ReductionKind,
    source: &InstanceFile,
    center: Option<Vertex>,
    gadget: DomGadget,
) -> Result<Reduced, Failure> {
    let scale = source.scale;
    let (from, _) = kind.endpoints();
    Ok(match kind {
        ReductionKind::MdtToGst => {
            let art = reduce_mdt_to_gst(graph_of(source, Kind::Mdt)?)?;
            Reduced { output: InstanceFile::gst(scale, art.output), map: art.map }
        }
        ReductionKind::GstToMdt => {
            let art = reduce_gst_to_mdt(gst_of(source)?)?;
            Reduced { output: InstanceFile::graph(Kind::Mdt, scale, art.output), map: art.map }
        }
        ReductionKind::DomToMds => {
            let art = reduce_dom_to_mds_with(graph_of(source, Kind::Dom)?, gadget)?;
            Reduced { output: InstanceFile::graph(Kind::Mds, 1, art.output), map: art.map }
        }
        ReductionKind::MdsToSc => {
            let c = center.ok_or_else(|| input(format!("{from} -> sc needs --center")))?;
            let art = reduce_mds_to_sc(graph_of(source, Kind::Mds)?, c)?;
            Reduced { output: InstanceFile::sc(scale, art.output), map: art.map }
        }
        ReductionKind::HpToMdp => {
            let art = reduce_hp_to_mdp(graph_of(source, Kind::Hp)?)?;
            Reduced { output: InstanceFile::graph(Kind::Mdp, 1, art.output), map: art.map }
        }
    })
}

fn reduce(
    inst: &InstanceFile,
    from: Kind,
    to: Kind,
    center: Option<Vertex>,
    gadget: DomGadget,
    output: Option<&Path>,
    sidecar: Option<&Path>,
) -> Result<Output, Failure> {
    let kind = ReductionKind::from_endpoints(from.as_str(), to.as_str())
        .ok_or_else(|| input(format!("no transformation from {from} to {to}")))?;
    let reduced = run_reduction(kind, inst, center, gadget)?;
    if let Some(p) = sidecar {
        let side = Sidecar {
            kind,
            gadget,
            center: (kind == ReductionKind::MdsToSc).then_some(center).flatten(),
            map: reduced.map,
            source: InstanceFile { kind: from, ..inst.clone() },
        };
        let text = serialize_sidecar(&side).map_err(|e| input(e.to_string()))?;
        fs::write(p, text).map_err(|e| input(format!("{}: {e}", p.display())))?;
    }
    emit(&text_of(&reduced.output)?, output)
}

/// Subgraph solution from a file, checked for edge existence and claimed
/// weight on `g`.
fn subgraph_on(g: &WeightedGraph, sol: &SolutionFile) -> Result<SubgraphSolution, Failure> {
    let SolutionBody::Subgraph { kind, vertices, edges } = &sol.body else {
        return Err(input("expected a tree, star or path solution"));
    };
    let s = SubgraphSolution::on_graph(g, *kind, vertices.clone(), edges.clone()).map_err(|v| rejected(v.to_string()))?;
    claimed(sol.weight, s.weight())?;
    Ok(s)
}

fn claimed(claim: Option<ExtWeight>, actual: ExtWeight) -> Result<(), Failure> {
    match claim {
        Some(c) if c != actual => Err(rejected(Violation::WeightMismatch { claimed: c, actual }.to_string())),
        _ => Ok(()),
    }
}

fn lift(sidecar_text: &str, solution_text: &str) -> Result<Output, Failure> {
    let side = parse_sidecar(sidecar_text).map_err(|e| input(format!("sidecar: {e}")))?;
    let reduced = run_reduction(side.kind, &side.source, side.center, side.gadget)?;
    if reduced.map != side.map {
        return Err(input("sidecar map does not match the transformation of its source"));
    }
    let sol = parse_solution(solution_text, reduced.output.scale).map_err(|e| input(format!("solution: {e}")))?;
    let infeasible = SolutionFile { weight: None, body: SolutionBody::Infeasible };
    if sol.body == SolutionBody::Infeasible {
        return write_solution(&infeasible, side.source.scale);
    }
    let src = &side.source;
    let scale = src.scale;
    let tree = |s: SubgraphSolution| subgraph_file(SolveOutcome::Feasible { weight: s.weight(), solution: s });
    match side.kind {
        ReductionKind::MdtToGst => {
            let art = reduce_mdt_to_gst(graph_of(src, Kind::Mdt)?)?;
            let s = subgraph_on(&art.output.graph, &sol)?;
            write_solution(&tree(lift_gst_to_mdt_solution(&art, &s)?), scale)
        }
        ReductionKind::GstToMdt => {
            let art = reduce_gst_to_mdt(gst_of(src)?)?;
            let s = subgraph_on(&art.output, &sol)?;
            write_solution(&tree(lift_mdt_to_gst_solution(&art, &s)?), scale)
        }
        ReductionKind::DomToMds => {
            let art = reduce_dom_to_mds_with(graph_of(src, Kind::Dom)?, side.gadget)?;
            let s = subgraph_on(&art.output, &sol)?;
            let set = lift_mds_to_dom_solution(&art, &s)?;
            let w = ExtWeight::Finite(set.len() as u64);
            write_solution(&SolutionFile { weight: Some(w), body: SolutionBody::Set(set) }, 1)
        }
        ReductionKind::MdsToSc => {
            let c = side.center.ok_or_else(|| input("sidecar lacks the center line"))?;
            let art = reduce_mds_to_sc(graph_of(src, Kind::Mds)?, c)?;
            let SolutionBody::Cover(cover) = &sol.body else {
                return Err(input("expected a cover solution"));
            };
            let mut cover = cover.clone();
            cover.sort_unstable();
            let w = art.output.check_cover(&cover).map_err(|e| rejected(e.to_string()))?;
            claimed(sol.weight, ExtWeight::Finite(w))?;
            write_solution(&tree(lift_sc_to_mds_solution(&art, &cover)?), scale)
        }
        ReductionKind::HpToMdp => {
            let art = reduce_hp_to_mdp(graph_of(src, Kind::Hp)?)?;
            let s = subgraph_on(&art.output, &sol)?;
            match lift_mdp_to_hp(&art, &s)? {
                Some(order) => write_solution(&SolutionFile { weight: None, body: SolutionBody::Order(order) }, 1),
                None => Err(rejected(format!("path weighs {} > 0; no Hamiltonian path to read off", s.weight()))),
            }
        }
    }
}

// ------------------------------------------------------------------ verify

fn verify(inst: &InstanceFile, problem: Option<Kind>, solution_text: &str) -> Result<Output, Failure> {
    let problem = problem.unwrap_or(inst.kind);
    let scale = match problem {
        Kind::Dom | Kind::Hp => 1,
        _ => inst.scale,
    };
    let sol = parse_solution(solution_text, scale).map_err(|e| input(format!("solution: {e}")))?;
    if sol.body == SolutionBody::Infeasible {
        // a claim of infeasibility is checked against the exact solver
        let solved = solve(inst, Some(problem), Method::Exact)?;
        return if solved.code == 1 {
            Ok(Output::ok("ok infeasible\n".into()))
        } else {
            Err(rejected("instance is feasible"))
        };
    }
    let weight = match problem {
        Kind::Mdt | Kind::Mds | Kind::Mdp => {
            let g = graph_of(inst, problem)?;
            let s = subgraph_on(g, &sol)?;
            check_solution(g, &s, problem_of(problem).expect("graph problem")).map_err(|v| rejected(v.to_string()))?;
            s.weight()
        }
        Kind::Gst => {
            let GstInstance { graph, groups } = gst_of(inst)?;
            let s = subgraph_on(graph, &sol)?;
            check_gst(graph, groups, &s).map_err(|v| rejected(v.to_string()))?;
            s.weight()
        }
        Kind::Sc => {
            let SolutionBody::Cover(cover) = &sol.body else {
                return Err(input("expected a cover solution"));
            };
            let mut cover = cover.clone();
            cover.sort_unstable();
            let w = ExtWeight::Finite(sc_of(inst)?.check_cover(&cover).map_err(|e| rejected(e.to_string()))?);
            claimed(sol.weight, w)?;
            w
        }
        Kind::Dom => {
            let g = graph_of(inst, problem)?;
            let SolutionBody::Set(set) = &sol.body else {
                return Err(input("expected a vertex set solution"));
            };
            let mut set = set.clone();
            set.sort_unstable();
            set.dedup();
            if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
                return Err(rejected(Violation::VertexOutOfRange(v).to_string()));
            }
            if let Some(v) = g.undominated(&set).expect("range checked") {
                return Err(rejected(Violation::Undominated(v).to_string()));
            }
            let w = ExtWeight::Finite(set.len() as u64);
            claimed(sol.weight, w)?;
            w
        }
        Kind::Hp => {
            let g = graph_of(inst, problem)?;
            let SolutionBody::Order(order) = &sol.body else {
                return Err(input("expected a vertex order solution"));
            };
            let s = SubgraphSolution::path(g, order).map_err(|v| rejected(v.to_string()))?;
            check_structure(g, &s, SolutionKind::Path).map_err(|v| rejected(v.to_string()))?;
            if s.vertices().len() != g.n() {
                return Err(rejected(format!("path visits {} of {} vertices", s.vertices().len(), g.n())));
            }
            ExtWeight::ZERO
        }
    };
    let shown = crate::io::format_weight(weight, scale).map_err(|e| input(e.to_string()))?;
    Ok(Output::ok(format!("ok weight {shown}\n")))
}

// ------------------------------------------------------------------ suite

fn suite(which: SuiteName, seed: u64, count: usize, max_n: usize) -> SuiteReport {
    let eq = |k: SuiteKind| run_equivalence_suite(k, &k.default_config(seed), count);
    match which {
        SuiteName::MdtGst => eq(SuiteKind::MdtGst),
        SuiteName::GstMdt => eq(SuiteKind::GstMdt),
        SuiteName::DomMds => eq(SuiteKind::DomMds),
        SuiteName::MdsSc => eq(SuiteKind::MdsSc),
        SuiteName::HpMdp => eq(SuiteKind::HpMdp),
        SuiteName::HpExhaustive => run_hp_exhaustive(max_n),
        SuiteName::Greedy => {
            run_greedy_bound_suite(&SetCoverConfig { seed, universe_max: 10, sets_max: 12, weight_max: 10 }, count)
        }
        SuiteName::RatioMds => run_ratio_suite(&SuiteKind::MdsSc.default_config(seed), count).0,
        SuiteName::RatioMdt => run_ratio_suite(&SuiteKind::MdtGst.default_config(seed), count).1,
    }
}
