//! Efficient dominating sets: the verifier, the exact-cover oracle, partial
//! commitments and the root-forced rules.

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Levels, Vertex};

/// Number of members of `d` in `N[v]`, for every `v`.
pub fn domination_counts(g: &Graph, d: &[Vertex]) -> Vec<u32> {
    let mut count = vec![0u32; g.n()];
    for &u in d {
        count[u] += 1;
        for &w in g.neighbors(u) {
            count[w] += 1;
        }
    }
    count
}

/// `true` iff every vertex has exactly one member of `d` in its closed
/// neighbourhood. Repeated entries in `d` count twice.
pub fn is_eds(g: &Graph, d: &[Vertex]) -> bool {
    d.iter().all(|&u| u < g.n()) && domination_counts(g, d).iter().all(|&c| c == 1)
}

/// Vertices whose closed neighbourhood does not meet `d` exactly once.
pub fn violations(g: &Graph, d: &[Vertex]) -> Vec<(Vertex, u32)> {
    domination_counts(g, d)
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c != 1)
        .collect()
}

/// A verified e.d.s., stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct EdsCertificate(Vec<Vertex>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not an efficient dominating set: {violations:?} (vertex, count)")]
pub struct NotEfficient {
    pub violations: Vec<(Vertex, u32)>,
}

impl EdsCertificate {
    pub fn new(g: &Graph, mut members: Vec<Vertex>) -> Result<Self, NotEfficient> {
        members.sort_unstable();
        if is_eds(g, &members) {
            Ok(EdsCertificate(members))
        } else {
            Err(NotEfficient {
                violations: violations(g, &members),
            })
        }
    }

    pub fn members(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    /// Re-indexes a certificate of an induced subgraph into the host graph.
    pub(crate) fn lift(self, host_index: &[Vertex]) -> Vec<Vertex> {
        self.0.into_iter().map(|v| host_index[v]).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    First,
    All,
    Count,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("search budget of {budget} nodes exhausted")]
pub struct BudgetExceeded {
    pub budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OracleReport {
    /// Solutions found (empty in `Count` mode), each sorted, in discovery
    /// order.
    pub solutions: Vec<Vec<Vertex>>,
    pub count: u64,
    pub nodes: u64,
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Exact e.d.s. search, valid for every graph.
///
/// The closed neighbourhoods of an e.d.s. partition `V`, so the search is an
/// exact cover: take the lowest-index uncovered vertex `w` and branch over
/// the members of `N[w]` whose closed neighbourhood is entirely uncovered.
pub fn brute_force_eds(
    g: &Graph,
    mode: OracleMode,
    budget: u64,
) -> Result<OracleReport, BudgetExceeded> {
    let mut search = Oracle {
        g,
        mode,
        budget,
        covered: vec![false; g.n()],
        chosen: Vec::new(),
        report: OracleReport::default(),
    };
    search.descend(0)?;
    Ok(search.report)
}

/// First e.d.s. in oracle order, or `None`.
pub fn oracle_first(g: &Graph, budget: u64) -> Result<Option<EdsCertificate>, BudgetExceeded> {
    let report = brute_force_eds(g, OracleMode::First, budget)?;
    Ok(report
        .solutions
        .into_iter()
        .next()
        .map(EdsCertificate))
}

struct Oracle<'g> {
    g: &'g Graph,
    mode: OracleMode,
    budget: u64,
    covered: Vec<bool>,
    chosen: Vec<Vertex>,
    report: OracleReport,
}

impl Oracle<'_> {
    /// Returns `Ok(true)` once a `First` search can stop.
    fn descend(&mut self, from: Vertex) -> Result<bool, BudgetExceeded> {
        self.report.nodes += 1;
        if self.report.nodes > self.budget {
            return Err(BudgetExceeded {
                budget: self.budget,
            });
        }
        let Some(w) = (from..self.g.n()).find(|&v| !self.covered[v]) else {
            self.report.count += 1;
            if self.mode != OracleMode::Count {
                let mut sol = self.chosen.clone();
                sol.sort_unstable();
                self.report.solutions.push(sol);
            }
            return Ok(self.mode == OracleMode::First);
        };
        let g = self.g;
        for c in g.closed_neighborhood(w) {
            if self.covered[c] || g.neighbors(c).iter().any(|&x| self.covered[x]) {
                continue;
            }
            self.set(c, true);
            self.chosen.push(c);
            let stop = self.starved_near(c).is_none() && self.descend(w + 1)?;
            self.chosen.pop();
            self.set(c, false);
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn available(&self, c: Vertex) -> bool {
        !self.covered[c] && self.g.neighbors(c).iter().all(|&x| !self.covered[x])
    }

    /// An uncovered vertex within distance 3 of the new member `c` that no
    /// longer has an available dominator. Only those can have lost one.
    fn starved_near(&self, c: Vertex) -> Option<Vertex> {
        let g = self.g;
        let mut ring: Vec<Vertex> = vec![c];
        let mut seen = std::collections::HashSet::from([c]);
        for _ in 0..3 {
            let mut next = Vec::new();
            for &a in &ring {
                for &b in g.neighbors(a) {
                    if seen.insert(b) {
                        next.push(b);
                    }
                }
            }
            ring = next;
            let starved = ring.iter().copied().find(|&x| {
                !self.covered[x] && !g.closed_neighborhood(x).into_iter().any(|y| self.available(y))
            });
            if starved.is_some() {
                return starved;
            }
        }
        None
    }

    fn set(&mut self, c: Vertex, value: bool) {
        self.covered[c] = value;
        for &x in self.g.neighbors(c) {
            self.covered[x] = value;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Conflict {
    #[error("vertex {0} was excluded")]
    Excluded(Vertex),
    #[error("vertex {vertex} is within distance 2 of committed vertex {committed}")]
    TooClose { vertex: Vertex, committed: Vertex },
}

/// A partial e.d.s. `D'` together with what it already decides: `N[D']` is
/// dominated, and every vertex within distance 2 of `D'` (plus any vertex
/// excluded explicitly) can no longer join.
#[derive(Debug, Clone)]
pub struct ReducedInstance<'g> {
    graph: &'g Graph,
    committed: Vec<Vertex>,
    in_d: FixedBitSet,
    dominated: FixedBitSet,
    blocked: FixedBitSet,
}

impl<'g> ReducedInstance<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let n = graph.n();
        ReducedInstance {
            graph,
            committed: Vec::new(),
            in_d: FixedBitSet::with_capacity(n),
            dominated: FixedBitSet::with_capacity(n),
            blocked: FixedBitSet::with_capacity(n),
        }
    }

    /// Instance with `root` committed.
    pub fn rooted(graph: &'g Graph, root: Vertex) -> Self {
        let mut inst = Self::new(graph);
        inst.commit(root).expect("fresh instance");
        inst
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn committed(&self) -> &[Vertex] {
        &self.committed
    }

    #[inline]
    pub fn is_committed(&self, v: Vertex) -> bool {
        self.in_d.contains(v)
    }

    #[inline]
    pub fn is_dominated(&self, v: Vertex) -> bool {
        self.dominated.contains(v)
    }

    /// Can `v` still be added without breaking exactness?
    #[inline]
    pub fn is_eligible(&self, v: Vertex) -> bool {
        !self.blocked.contains(v)
    }

    pub fn undominated(&self) -> Vec<Vertex> {
        (0..self.graph.n()).filter(|&v| !self.is_dominated(v)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.dominated.count_ones(..) == self.graph.n()
    }

    /// Adds `u` to the partial solution.
    pub fn commit(&mut self, u: Vertex) -> Result<(), Conflict> {
        if self.blocked.contains(u) {
            return Err(self.explain(u));
        }
        let g = self.graph;
        self.committed.push(u);
        self.in_d.insert(u);
        self.dominated.insert(u);
        self.blocked.insert(u);
        for &x in g.neighbors(u) {
            self.dominated.insert(x);
            self.blocked.insert(x);
            for &y in g.neighbors(x) {
                self.blocked.insert(y);
            }
        }
        Ok(())
    }

    pub fn apply_forced(&self, u: Vertex) -> Result<Self, Conflict> {
        let mut next = self.clone();
        next.commit(u)?;
        Ok(next)
    }

    /// Rules `u` out of the solution.
    pub fn exclude(&mut self, u: Vertex) {
        if !self.in_d.contains(u) {
            self.blocked.insert(u);
        }
    }

    fn explain(&self, u: Vertex) -> Conflict {
        let g = self.graph;
        let near = std::iter::once(u)
            .chain(g.neighbors(u).iter().copied())
            .chain(g.neighbors(u).iter().flat_map(|&x| g.neighbors(x).iter().copied()))
            .filter(|&w| self.in_d.contains(w))
            .min();
        match near {
            Some(committed) => Conflict::TooClose {
                vertex: u,
                committed,
            },
            None => Conflict::Excluded(u),
        }
    }

    /// Subgraph on the undominated vertices, with its vertex map.
    pub fn residual(&self) -> (Graph, Vec<Vertex>) {
        let keep = self.undominated();
        (self.graph.induced_subgraph(&keep), keep)
    }

    /// The committed set as a certificate, if it already is an e.d.s.
    pub fn certificate(&self) -> Option<EdsCertificate> {
        if !self.is_complete() {
            return None;
        }
        EdsCertificate::new(self.graph, self.committed.clone()).ok()
    }
}

/// Which root-forced rule fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ForcedRule {
    /// An `N_2` vertex has no neighbour in `N_3`.
    Undominatable,
    /// An `N_2` vertex has exactly one neighbour in `N_3`.
    UniqueDominator,
    /// An `N_3` vertex has no neighbour in `N_4`.
    NoOutlet,
    /// Two vertices forced by `NoOutlet` share an `N_2` neighbour.
    ClashingOutlets,
    /// Forced vertices are too close to each other.
    Conflict,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no e.d.s. contains the root: rule {rule:?} at vertex {vertex}")]
pub struct NoEdsHere {
    pub rule: ForcedRule,
    pub vertex: Vertex,
}

/// Consequences of `root ∈ D` on the third stratum (`D` misses `N_1 ∪ N_2`).
/// Returns the forced subset of `N_3`, sorted.
pub fn v_forced_rules(g: &Graph, levels: &Levels) -> Result<Vec<Vertex>, NoEdsHere> {
    let mut forced = Vec::new();
    let mut outlet_less = vec![false; g.n()];
    for &y in levels.stratum(3) {
        if !g.neighbors(y).iter().any(|&z| levels.in_level(z, 4)) {
            outlet_less[y] = true;
            forced.push(y);
        }
    }
    for &x in levels.stratum(2) {
        let mut up = g.neighbors(x).iter().copied().filter(|&y| levels.in_level(y, 3));
        let Some(first) = up.next() else {
            return Err(NoEdsHere {
                rule: ForcedRule::Undominatable,
                vertex: x,
            });
        };
        let rest: Vec<_> = up.collect();
        if rest.is_empty() {
            forced.push(first);
        } else {
            let clash = std::iter::once(first)
                .chain(rest)
                .filter(|&y| outlet_less[y])
                .count();
            if clash > 1 {
                return Err(NoEdsHere {
                    rule: ForcedRule::ClashingOutlets,
                    vertex: x,
                });
            }
        }
    }
    // Fixpoint: commit, then look again with the eligibility the commits
    // imply.
    let mut inst = ReducedInstance::rooted(g, levels.root());
    while !forced.is_empty() {
        forced.sort_unstable();
        forced.dedup();
        for &y in &forced {
            if !inst.is_committed(y) && inst.commit(y).is_err() {
                return Err(NoEdsHere {
                    rule: ForcedRule::Conflict,
                    vertex: y,
                });
            }
        }
        forced.clear();
        for &x in levels.stratum(2) {
            if inst.is_dominated(x) {
                continue;
            }
            let mut up = g
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&y| levels.in_level(y, 3) && inst.is_eligible(y));
            match (up.next(), up.next()) {
                (None, _) => {
                    return Err(NoEdsHere {
                        rule: ForcedRule::Undominatable,
                        vertex: x,
                    })
                }
                (Some(y), None) => forced.push(y),
                _ => {}
            }
        }
    }
    let mut out = inst.committed()[1..].to_vec();
    out.sort_unstable();
    Ok(out)
}
