//! Class-specific e.d.s. solvers and the dispatcher that picks one.
//!
//! Every solver returns a [`SolverOutcome`]. `Found` certificates have been
//! checked with [`is_eds`](crate::eds::is_eds); `NoEds` is only reported
//! after every root was searched exhaustively without hitting a cap.

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::eds::EdsCertificate;
use crate::graph::{Graph, Vertex};
use crate::recognize::Pattern;

mod dispatch;
mod levelsearch;
mod lp4;
mod p5;
mod p7;
mod p9deg3;
mod spider;

pub use dispatch::{dispatch, dispatch_with, solve_oracle, DispatchOptions, Strategy, DESK_SCALE};
pub use lp4::solve_lp4_free;
pub use p5::solve_p5_free;
pub use p7::solve_p7_free;
pub use p9deg3::solve_p9_deg3;
pub use spider::{
    enumerate_s222_free, enumerate_s222_free_unchecked, solve_s223_free, solve_s224_free,
    solve_spider_free, SpiderConfig,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    NotBipartite,
    /// The input contains the forbidden pattern.
    ClassViolation(String),
    /// The minimum eccentricity is too large for the path-free class.
    EccentricityBound { vertex: Vertex, eccentricity: usize },
    /// A homogeneous set exists.
    NotPrime,
    MaxDegreeExceeded,
    /// A per-root branch or enumeration cap was reached.
    CapExceeded,
    /// The exact fallback ran out of budget.
    BudgetExceeded,
    /// `--all` was requested from a solver that cannot enumerate.
    EnumerationUnsupported,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::NotBipartite => f.write_str("not bipartite"),
            Reason::ClassViolation(p) => write!(f, "contains an induced {p}"),
            Reason::EccentricityBound {
                vertex,
                eccentricity,
            } => write!(f, "minimum eccentricity {eccentricity} at vertex {vertex} too large"),
            Reason::NotPrime => f.write_str("not prime (homogeneous set)"),
            Reason::MaxDegreeExceeded => f.write_str("maximum degree above 3"),
            Reason::CapExceeded => f.write_str("search cap exceeded"),
            Reason::BudgetExceeded => f.write_str("oracle budget exceeded"),
            Reason::EnumerationUnsupported => f.write_str("solver cannot enumerate"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inapplicable {
    pub reason: Reason,
    pub witness: Option<Vec<Vertex>>,
}

impl Inapplicable {
    pub fn new(reason: Reason) -> Self {
        Inapplicable {
            reason,
            witness: None,
        }
    }

    pub fn violation(pattern: Pattern, witness: Vec<Vertex>) -> Self {
        Inapplicable {
            reason: Reason::ClassViolation(pattern.to_string()),
            witness: Some(witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Status {
    Found(EdsCertificate),
    NoEds,
    NotApplicable(Inapplicable),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolverStats {
    pub roots_explored: u64,
    pub branches: u64,
    pub candidates_tested: u64,
    pub oracle_nodes: u64,
}

impl SolverStats {
    pub fn absorb(&mut self, other: &SolverStats) {
        self.roots_explored += other.roots_explored;
        self.branches += other.branches;
        self.candidates_tested += other.candidates_tested;
        self.oracle_nodes += other.oracle_nodes;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolverOutcome {
    pub status: Status,
    pub stats: SolverStats,
    /// The solver that produced the status.
    pub solver: SolverKind,
    /// Short machine-readable remark, e.g. `"K33"` for the degree-3
    /// short-circuit.
    pub note: Option<String>,
}

impl SolverOutcome {
    pub fn new(solver: SolverKind, status: Status, stats: SolverStats) -> Self {
        SolverOutcome {
            status,
            stats,
            solver,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn not_applicable(solver: SolverKind, why: Inapplicable) -> Self {
        Self::new(solver, Status::NotApplicable(why), SolverStats::default())
    }

    pub fn certificate(&self) -> Option<&EdsCertificate> {
        match &self.status {
            Status::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.status, Status::Found(_))
    }

    pub fn is_no_eds(&self) -> bool {
        matches!(self.status, Status::NoEds)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub enum SolverKind {
    P5,
    P7,
    Lp4(usize),
    S222,
    S223,
    S224,
    P9Deg3,
    Oracle,
    Auto,
}

impl From<SolverKind> for String {
    fn from(k: SolverKind) -> String {
        k.to_string()
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverKind::P5 => f.write_str("p5"),
            SolverKind::P7 => f.write_str("p7"),
            SolverKind::Lp4(l) => write!(f, "lp4={l}"),
            SolverKind::S222 => f.write_str("s222"),
            SolverKind::S223 => f.write_str("s223"),
            SolverKind::S224 => f.write_str("s224"),
            SolverKind::P9Deg3 => f.write_str("p9deg3"),
            SolverKind::Oracle => f.write_str("oracle"),
            SolverKind::Auto => f.write_str("auto"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown class name {0:?} (expected auto, p5, p7, lp4=<l>, s222, s223, s224, p9deg3 or oracle)")]
pub struct UnknownClassName(pub String);

impl FromStr for SolverKind {
    type Err = UnknownClassName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        Ok(match t.as_str() {
            "auto" => SolverKind::Auto,
            "p5" => SolverKind::P5,
            "p7" => SolverKind::P7,
            "s222" => SolverKind::S222,
            "s223" => SolverKind::S223,
            "s224" => SolverKind::S224,
            "p9deg3" => SolverKind::P9Deg3,
            "oracle" => SolverKind::Oracle,
            _ => {
                let ell = t
                    .strip_prefix("lp4=")
                    .and_then(|l| l.parse::<usize>().ok())
                    .filter(|&l| l >= 1)
                    .ok_or_else(|| UnknownClassName(s.to_string()))?;
                SolverKind::Lp4(ell)
            }
        })
    }
}

/// What a single root search concluded.
pub(crate) enum RootOutcome {
    Found(Vec<Vertex>),
    /// Stop the whole solver with this verdict.
    Abort(Inapplicable),
    /// No e.d.s. contains this root (or the cap cut the search short).
    Exhausted { cap_hit: bool },
}

pub(crate) struct RootRun {
    pub outcome: RootOutcome,
    pub stats: SolverStats,
}

impl RootRun {
    pub fn exhausted(stats: SolverStats, cap_hit: bool) -> Self {
        RootRun {
            outcome: RootOutcome::Exhausted { cap_hit },
            stats,
        }
    }
}

/// Runs `search` over `roots` in parallel and reports the verdict of the
/// lowest-positioned root that found something or aborted. Statistics cover
/// exactly the roots up to that one, so they do not depend on scheduling.
pub(crate) fn run_roots<F>(g: &Graph, roots: &[Vertex], search: F) -> (Status, SolverStats)
where
    F: Fn(Vertex) -> RootRun + Sync,
{
    let per_root: Mutex<Vec<Option<(SolverStats, bool)>>> = Mutex::new(vec![None; roots.len()]);
    let hit = roots.par_iter().enumerate().find_map_first(|(pos, &v)| {
        let run = search(v);
        let mut stats = run.stats;
        stats.roots_explored += 1;
        let cap_hit = matches!(run.outcome, RootOutcome::Exhausted { cap_hit: true });
        per_root.lock().unwrap()[pos] = Some((stats, cap_hit));
        match run.outcome {
            RootOutcome::Found(d) => Some((pos, Ok(d))),
            RootOutcome::Abort(why) => Some((pos, Err(why))),
            RootOutcome::Exhausted { .. } => None,
        }
    });
    let per_root = per_root.into_inner().unwrap();
    let last = hit.as_ref().map_or(roots.len(), |(pos, _)| pos + 1);
    let mut stats = SolverStats::default();
    let mut cap_hit = false;
    for (s, c) in per_root[..last].iter().flatten() {
        stats.absorb(s);
        cap_hit |= c;
    }
    let status = match hit {
        Some((_, Ok(d))) => match EdsCertificate::new(g, d) {
            Ok(cert) => Status::Found(cert),
            Err(e) => panic!("solver produced an invalid certificate: {e}"),
        },
        Some((_, Err(why))) => Status::NotApplicable(why),
        None if cap_hit => Status::NotApplicable(Inapplicable::new(Reason::CapExceeded)),
        None => Status::NoEds,
    };
    (status, stats)
}

/// Solves each connected component separately and combines the answers:
/// an e.d.s. exists iff every component has one.
pub(crate) fn per_component<F>(g: &Graph, solver: SolverKind, solve: F) -> SolverOutcome
where
    F: Fn(&Graph) -> SolverOutcome,
{
    if g.n() == 0 {
        let empty = EdsCertificate::new(g, Vec::new()).expect("empty graph");
        return SolverOutcome::new(solver, Status::Found(empty), SolverStats::default());
    }
    let comps = g.components();
    if comps.len() == 1 {
        return solve(g);
    }
    let mut stats = SolverStats::default();
    let mut members = Vec::new();
    let mut pending: Option<SolverOutcome> = None;
    for comp in &comps {
        let sub = g.induced_subgraph(comp);
        let mut out = solve(&sub);
        stats.absorb(&out.stats);
        match out.status {
            Status::Found(cert) => members.extend(cert.lift(comp)),
            Status::NoEds => {
                out.stats = stats;
                out.solver = solver;
                return out;
            }
            Status::NotApplicable(ref mut why) => {
                if pending.is_none() {
                    if let Some(w) = why.witness.as_mut() {
                        for v in w.iter_mut() {
                            *v = comp[*v];
                        }
                    }
                    pending = Some(out);
                }
            }
        }
    }
    if let Some(mut out) = pending {
        out.stats = stats;
        out.solver = solver;
        return out;
    }
    let cert = EdsCertificate::new(g, members).expect("union of component certificates");
    SolverOutcome::new(solver, Status::Found(cert), stats)
}
