use std::sync::Arc;

use crate::eds::v_forced_rules;
use crate::graph::{bipartition, distance_levels, find_homogeneous_set, square, Graph, Vertex};
use crate::levels::LevelState;
use crate::recognize::Pattern;

use super::levelsearch::LevelSearch;
use super::p5::bipartite_violation;
use super::{per_component, run_roots, Inapplicable, Reason, RootOutcome, RootRun};
use super::{SolverKind, SolverOutcome, SolverStats};

/// `ℓP_4`-free bipartite graphs, intended for prime inputs.
///
/// From any root every stratum at depth `5ℓ - 2` or more is empty, and in
/// a prime input each level admits at most `n^{2ℓ-2}` maximal independent
/// sets of the square on its candidate pool. Levels are completed by
/// enumerating those sets; exceeding the bound reports `CapExceeded`.
pub fn solve_lp4_free(g: &Graph, ell: usize) -> SolverOutcome {
    let kind = SolverKind::Lp4(ell);
    if let Err(e) = bipartition(g) {
        return SolverOutcome::not_applicable(kind, bipartite_violation(e));
    }
    per_component(g, kind, |c| solve_connected(c, ell))
}

fn solve_connected(g: &Graph, ell: usize) -> SolverOutcome {
    let kind = SolverKind::Lp4(ell);
    if let Some(module) = find_homogeneous_set(g) {
        return SolverOutcome::not_applicable(
            kind,
            Inapplicable {
                reason: Reason::NotPrime,
                witness: Some(module),
            },
        );
    }
    let n = g.n() as u64;
    let cap = n.saturating_pow(2 * ell as u32 - 2).max(1);
    let sq = square(g);
    // one vertex of D lies in N[u]; a minimum-degree u keeps the root list short
    let u = (0..g.n()).min_by_key(|&v| (g.degree(v), v)).expect("non-empty");
    let roots = g.closed_neighborhood(u);
    let (status, stats) = run_roots(g, &roots, |v| root_search(g, &sq, v, ell, cap));
    SolverOutcome::new(kind, status, stats)
}

fn root_search(g: &Graph, sq: &Graph, v: Vertex, ell: usize, cap: u64) -> RootRun {
    let levels = Arc::new(distance_levels(g, v));
    let limit = 5 * ell - 2;
    if levels.depth() >= limit {
        let far = levels.stratum(limit)[0];
        let mut path = levels.path_to_root(far);
        path.reverse();
        let witness: Vec<Vertex> = (0..ell).flat_map(|j| path[5 * j..5 * j + 4].to_vec()).collect();
        return RootRun {
            outcome: RootOutcome::Abort(Inapplicable::violation(
                Pattern::DisjointPaths { copies: ell, len: 4 },
                witness,
            )),
            stats: SolverStats::default(),
        };
    }
    if v_forced_rules(g, &levels).is_err() {
        return RootRun::exhausted(SolverStats::default(), false);
    }
    let mut search = LevelSearch {
        square: sq,
        cap,
        stats: SolverStats::default(),
        cap_hit: false,
    };
    let found = search.run(LevelState::from_levels(g, levels));
    match found {
        Some(d) => RootRun {
            outcome: RootOutcome::Found(d),
            stats: search.stats,
        },
        None => RootRun::exhausted(search.stats, search.cap_hit),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eds::{brute_force_eds, is_eds, OracleMode};
    use crate::graph::named::*;
    use crate::solvers::Status;

    #[test]
    fn examples() {
        assert!(solve_lp4_free(&cycle(6), 2).is_found());
        assert_eq!(solve_lp4_free(&path(4), 2).certificate().unwrap().members(), &[0, 3]);
        let k23 = solve_lp4_free(&complete_bipartite(2, 3), 2);
        assert!(matches!(
            k23.status,
            Status::NotApplicable(Inapplicable { reason: Reason::NotPrime, .. })
        ));
    }

    #[test]
    fn long_paths_give_a_linear_forest() {
        let out = solve_lp4_free(&path(10), 2);
        let Status::NotApplicable(Inapplicable {
            reason: Reason::ClassViolation(p),
            witness: Some(w),
        }) = out.status
        else {
            panic!("{:?}", out.status)
        };
        assert_eq!(p, "2P4");
        assert_eq!(w.len(), 8);
    }

    #[test]
    fn paths_and_cycles_match_the_oracle() {
        for k in 2..=8 {
            for g in [path(k), cycle(k.max(4) + k % 2)] {
                let out = solve_lp4_free(&g, 2);
                if let Status::NotApplicable(_) = out.status {
                    continue;
                }
                let exists = brute_force_eds(&g, OracleMode::First, u64::MAX).unwrap().count > 0;
                assert_eq!(out.is_found(), exists, "{g:?}");
                if let Some(c) = out.certificate() {
                    assert!(is_eds(&g, c.members()));
                }
            }
        }
    }
}
