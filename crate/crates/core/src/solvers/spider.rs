//! `S_{2,2,k}`-free bipartite graphs (`k` = 2, 3, 4).
//!
//! From a root `v ∈ D` the strata are settled level by level. Besides the
//! general forced rules, two candidate filters narrow the dominator of an
//! undominated `x ∈ N'_i`:
//!
//! * *Outlet filter*, valid in every graph: `y` cannot be the dominator if
//!   some other candidate `y'` would then have no admissible dominator in
//!   `N_{i+2} \ N(y)`.
//! * *Inclusion filter*: the dominator's neighbourhood in `N_{i+2}` is
//!   contained in that of every other candidate. Otherwise two short legs
//!   through the candidates and a long leg of length `k` from `x` form an
//!   induced `S_{2,2,k}`. The filter is applied only when such a long leg is
//!   certified to avoid the short legs. For `i >= k` the BFS path back
//!   towards the root is such a leg. Below that, a leg through vertices
//!   that provably cannot touch the short legs is searched for.
//!
//! Where neither filter decides, the search branches. A per-root branch cap
//! turns runaway searches into `NotApplicable(CapExceeded)`.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::eds::EdsCertificate;
use crate::graph::{bipartition, distance_levels, Graph, Vertex};
use crate::levels::{inclusion_forced_dominator, LevelState};
use crate::recognize::{contains_induced, Pattern};

use super::p5::bipartite_violation;
use super::{per_component, run_roots, Inapplicable, Reason, RootOutcome, RootRun};
use super::{SolverKind, SolverOutcome, SolverStats};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpiderConfig {
    /// Length of the long leg of the excluded spider.
    pub k: usize,
    /// Branches allowed per root; `None` means `max(n^2, 16)`.
    pub branch_cap: Option<u64>,
}

impl SpiderConfig {
    pub fn new(k: usize) -> Self {
        SpiderConfig { k, branch_cap: None }
    }

    fn cap(&self, n: usize) -> u64 {
        self.branch_cap.unwrap_or(((n * n) as u64).max(16))
    }

    fn kind(&self) -> SolverKind {
        match self.k {
            2 => SolverKind::S222,
            3 => SolverKind::S223,
            _ => SolverKind::S224,
        }
    }
}

pub fn solve_s224_free(g: &Graph) -> SolverOutcome {
    solve_spider_free(g, SpiderConfig::new(4))
}

pub fn solve_s223_free(g: &Graph) -> SolverOutcome {
    solve_spider_free(g, SpiderConfig::new(3))
}

/// First e.d.s. found over roots `0, 1, …`.
pub fn solve_spider_free(g: &Graph, cfg: SpiderConfig) -> SolverOutcome {
    let kind = cfg.kind();
    if let Err(e) = bipartition(g) {
        return SolverOutcome::not_applicable(kind, bipartite_violation(e));
    }
    per_component(g, kind, |c| {
        let roots: Vec<_> = (0..c.n()).collect();
        let levels_cap = cfg.cap(c.n());
        let (status, stats) = run_roots(c, &roots, |v| {
            let mut search = Search::new(cfg.k, levels_cap, false);
            search.run(LevelState::from_levels(c, Arc::new(distance_levels(c, v))));
            search.into_root_run()
        });
        SolverOutcome::new(kind, status, stats)
    })
}

/// Every e.d.s. of an `S_{2,2,2}`-free bipartite graph, sorted. Checks the
/// class first.
pub fn enumerate_s222_free(g: &Graph) -> Result<Vec<EdsCertificate>, Inapplicable> {
    bipartition(g).map_err(bipartite_violation)?;
    let spider = Pattern::Spider(2, 2, 2);
    if let Some(w) = contains_induced(g, spider).expect("fits the cap") {
        return Err(Inapplicable::violation(spider, w));
    }
    enumerate_s222_free_unchecked(g)
}

/// As [`enumerate_s222_free`] without the class check.
pub fn enumerate_s222_free_unchecked(g: &Graph) -> Result<Vec<EdsCertificate>, Inapplicable> {
    bipartition(g).map_err(bipartite_violation)?;
    let mut combined: Vec<Vec<Vertex>> = vec![Vec::new()];
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        let local = enumerate_connected(&sub)?;
        let mut next = Vec::with_capacity(combined.len() * local.len());
        for base in &combined {
            for d in &local {
                let mut merged = base.clone();
                merged.extend(d.iter().map(|&v| comp[v]));
                next.push(merged);
            }
        }
        combined = next;
        if combined.is_empty() {
            break;
        }
    }
    let mut out: Vec<EdsCertificate> = combined
        .into_iter()
        .map(|d| EdsCertificate::new(g, d).expect("enumerated sets are verified"))
        .collect();
    out.sort();
    Ok(out)
}

fn enumerate_connected(g: &Graph) -> Result<Vec<Vec<Vertex>>, Inapplicable> {
    let cap = SpiderConfig::new(2).cap(g.n());
    let per_root: Vec<(Vec<Vec<Vertex>>, bool)> = (0..g.n())
        .into_par_iter()
        .map(|v| {
            let mut search = Search::new(2, cap, true);
            search.run(LevelState::from_levels(g, Arc::new(distance_levels(g, v))));
            (search.found, search.cap_hit)
        })
        .collect();
    let mut all = BTreeSet::new();
    for (found, cap_hit) in per_root {
        if cap_hit {
            return Err(Inapplicable::new(Reason::CapExceeded));
        }
        for mut d in found {
            d.sort_unstable();
            all.insert(d);
        }
    }
    Ok(all.into_iter().collect())
}

struct Search {
    k: usize,
    cap: u64,
    collect: bool,
    cap_hit: bool,
    found: Vec<Vec<Vertex>>,
    stats: SolverStats,
}

impl Search {
    fn new(k: usize, cap: u64, collect: bool) -> Self {
        Search {
            k,
            cap,
            collect,
            cap_hit: false,
            found: Vec::new(),
            stats: SolverStats::default(),
        }
    }

    fn into_root_run(mut self) -> RootRun {
        match self.found.pop() {
            Some(d) => RootRun {
                outcome: RootOutcome::Found(d),
                stats: self.stats,
            },
            None => RootRun::exhausted(self.stats, self.cap_hit),
        }
    }

    /// Returns `true` when the whole search should stop.
    fn run(&mut self, mut state: LevelState<'_>) -> bool {
        loop {
            if state.is_finished() {
                self.stats.candidates_tested += 1;
                if let Some(c) = state.certificate() {
                    self.found.push(c.into_vec());
                    return !self.collect;
                }
                return false;
            }
            match self.settle(&mut state) {
                Err(()) => return false,
                Ok(None) => {
                    if state.advance().is_err() {
                        return false;
                    }
                }
                Ok(Some(choices)) => {
                    for y in choices {
                        if self.stats.branches >= self.cap {
                            self.cap_hit = true;
                            return true;
                        }
                        self.stats.branches += 1;
                        let mut next = state.clone();
                        if next.commit(y).is_ok() && self.run(next) {
                            return true;
                        }
                    }
                    return false;
                }
            }
        }
    }

    /// Applies forced rules and both filters at the current level until
    /// nothing more is forced. Returns the smallest remaining choice set,
    /// or `None` once `N'_i` is fully dominated.
    fn settle(&mut self, state: &mut LevelState<'_>) -> Result<Option<Vec<Vertex>>, ()> {
        loop {
            state.apply_di_forced().map_err(|_| ())?;
            let mut best: Option<Vec<Vertex>> = None;
            let mut single = None;
            for x in state.undominated_at(state.level()) {
                let cands = state.candidates(x);
                let mut viable = outlet_survivors(state, &cands);
                if viable.len() > 1 && inclusion_applies(state, x, self.k) {
                    match inclusion_forced_dominator(state, x) {
                        Some(min) => viable.retain(|y| min.contains(y)),
                        None => viable.clear(),
                    }
                }
                match viable.len() {
                    0 => return Err(()),
                    1 => {
                        single = Some(viable[0]);
                        break;
                    }
                    len => {
                        if best.as_ref().map_or(true, |b| len < b.len()) {
                            best = Some(viable);
                        }
                    }
                }
            }
            match single {
                Some(y) => state.commit(y).map_err(|_| ())?,
                None => return Ok(best),
            }
        }
    }
}

/// Candidates `y` of `x` such that every other candidate keeps an eligible
/// neighbour in `N_{i+2}` outside `N(y)`.
fn outlet_survivors(state: &LevelState<'_>, cands: &[Vertex]) -> Vec<Vertex> {
    let g = state.graph();
    let outlets: Vec<Vec<Vertex>> = cands
        .iter()
        .map(|&y| {
            state
                .next_neighbors(y)
                .into_iter()
                .filter(|&z| state.instance().is_eligible(z))
                .collect()
        })
        .collect();
    (0..cands.len())
        .filter(|&a| {
            (0..cands.len())
                .all(|b| a == b || outlets[b].iter().any(|&z| !g.has_edge(cands[a], z)))
        })
        .map(|a| cands[a])
        .collect()
}

/// Is there an induced path of `k` edges from `x` that cannot touch the two
/// short legs through candidates of `x` and their `N_{i+2}` neighbours?
fn inclusion_applies(state: &LevelState<'_>, x: Vertex, k: usize) -> bool {
    if state.level() >= k {
        return true;
    }
    let mut path = vec![x];
    safe_leg(state, &mut path, k)
}

fn safe_leg(state: &LevelState<'_>, path: &mut Vec<Vertex>, k: usize) -> bool {
    if path.len() == k + 1 {
        return true;
    }
    let g = state.graph();
    let last = *path.last().unwrap();
    for &q in g.neighbors(last) {
        if path.contains(&q) || !is_safe(state, q) {
            continue;
        }
        if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, q)) {
            continue;
        }
        path.push(q);
        if safe_leg(state, path, k) {
            return true;
        }
        path.pop();
    }
    false
}

/// A vertex that cannot be adjacent to (or equal to) an eligible candidate
/// in `N_{i+1}` or an eligible vertex of `N_{i+2}` adjacent to one.
fn is_safe(state: &LevelState<'_>, p: Vertex) -> bool {
    let i = state.level();
    let inst = state.instance();
    let Some(lvl) = state.levels().level_of(p) else {
        return false;
    };
    lvl + 1 <= i
        || lvl >= i + 4
        || inst.is_committed(p)
        || (inst.is_dominated(p) && (lvl == i || lvl == i + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eds::{brute_force_eds, OracleMode, DEFAULT_BUDGET};
    use crate::graph::named::*;

    fn oracle_all(g: &Graph) -> Vec<Vec<Vertex>> {
        let mut s = brute_force_eds(g, OracleMode::All, DEFAULT_BUDGET)
            .unwrap()
            .solutions;
        s.sort();
        s
    }

    #[test]
    fn s224_examples() {
        assert_eq!(solve_s224_free(&path(7)).certificate().unwrap().members(), &[0, 3, 6]);
        assert_eq!(
            solve_s224_free(&cycle(12)).certificate().unwrap().members(),
            &[0, 3, 6, 9]
        );
        assert!(solve_s224_free(&cycle(4)).is_no_eds());
    }

    #[test]
    fn s223_examples() {
        assert_eq!(solve_s223_free(&path(7)).certificate().unwrap().members(), &[0, 3, 6]);
        assert!(solve_s223_free(&cycle(12)).is_found());
        assert!(solve_s223_free(&cycle(4)).is_no_eds());
        assert!(solve_s223_free(&cycle(8)).is_no_eds());
    }

    #[test]
    fn s222_enumeration_examples() {
        let c6: Vec<Vec<Vertex>> = enumerate_s222_free(&cycle(6))
            .unwrap()
            .into_iter()
            .map(EdsCertificate::into_vec)
            .collect();
        assert_eq!(c6, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert_eq!(enumerate_s222_free(&path(4)).unwrap().len(), 1);
        assert!(enumerate_s222_free(&cycle(4)).unwrap().is_empty());
        let err = enumerate_s222_free(&spider([2, 2, 2])).unwrap_err();
        assert_eq!(err.reason, Reason::ClassViolation("S2,2,2".into()));
    }

    #[test]
    fn s222_enumeration_matches_oracle_on_paths_and_cycles() {
        for n in 1..=12 {
            let got: Vec<Vec<Vertex>> = enumerate_s222_free(&path(n))
                .unwrap()
                .into_iter()
                .map(EdsCertificate::into_vec)
                .collect();
            assert_eq!(got, oracle_all(&path(n)), "P{n}");
        }
        for n in (4..=14).step_by(2) {
            let got: Vec<Vec<Vertex>> = enumerate_s222_free(&cycle(n))
                .unwrap()
                .into_iter()
                .map(EdsCertificate::into_vec)
                .collect();
            assert_eq!(got, oracle_all(&cycle(n)), "C{n}");
        }
    }

    #[test]
    fn disconnected_enumeration_takes_products() {
        // two disjoint C6
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend((0..6).map(|i| (6 + i, 6 + (i + 1) % 6)));
        let g = Graph::new(12, edges).unwrap();
        let all = enumerate_s222_free(&g).unwrap();
        assert_eq!(all.len(), 9);
    }

    #[test]
    fn tiny_cap_reports_cap_exceeded() {
        // identical twins at level 3 force branching only under the cap
        let g = complete_bipartite(3, 3);
        let out = solve_spider_free(&g, SpiderConfig { k: 4, branch_cap: Some(0) });
        assert!(!out.is_found());
    }
}
