use std::sync::Arc;

use crate::eds::v_forced_rules;
use crate::graph::{bipartition, distance_levels, find_central_vertex, square, Graph, GraphError};
use crate::graph::Vertex;
use crate::levels::LevelState;
use crate::recognize::{contains_induced, NamedSmall, Pattern};

use super::levelsearch::LevelSearch;
use super::p5::bipartite_violation;
use super::{per_component, run_roots, Inapplicable, Reason, RootOutcome, RootRun, Status};
use super::{SolverKind, SolverOutcome, SolverStats};

/// `P_9`-free bipartite graphs of maximum degree 3.
///
/// An induced `K_{3,3}` is a whole component with no e.d.s. Otherwise a
/// vertex `v0` of eccentricity at most 4 exists, and for each root in
/// `N[v0]` at most two members of `D` lie in `N_3` and at most two more in
/// `N_4` beyond the forced ones. Deeper strata are completed level by
/// level.
pub fn solve_p9_deg3(g: &Graph) -> SolverOutcome {
    let kind = SolverKind::P9Deg3;
    if let Err(e) = bipartition(g) {
        return SolverOutcome::not_applicable(kind, bipartite_violation(e));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        let mut witness = vec![v];
        witness.extend_from_slice(g.neighbors(v));
        return SolverOutcome::not_applicable(
            kind,
            Inapplicable {
                reason: Reason::MaxDegreeExceeded,
                witness: Some(witness),
            },
        );
    }
    let k33 = contains_induced(g, Pattern::Named(NamedSmall::K33)).expect("fixed pattern");
    if k33.is_some() {
        return SolverOutcome::new(kind, Status::NoEds, SolverStats::default()).with_note("K33");
    }
    per_component(g, kind, solve_connected)
}

fn solve_connected(g: &Graph) -> SolverOutcome {
    let kind = SolverKind::P9Deg3;
    let v0 = match find_central_vertex(g, 9) {
        Ok(v) => v,
        Err(GraphError::EccentricityBoundViolated {
            vertex,
            eccentricity,
            ..
        }) => {
            return SolverOutcome::not_applicable(
                kind,
                Inapplicable::new(Reason::EccentricityBound {
                    vertex,
                    eccentricity,
                }),
            )
        }
        Err(e) => unreachable!("component is connected: {e}"),
    };
    let sq = square(g);
    let roots = g.closed_neighborhood(v0);
    let (status, stats) = run_roots(g, &roots, |v| root_search(g, &sq, v));
    SolverOutcome::new(kind, status, stats)
}

fn root_search(g: &Graph, sq: &Graph, v: Vertex) -> RootRun {
    let levels = Arc::new(distance_levels(g, v));
    let mut stats = SolverStats::default();
    let Ok(forced) = v_forced_rules(g, &levels) else {
        return RootRun::exhausted(stats, false);
    };
    let mut base = LevelState::from_levels(g, levels.clone());
    for &y in &forced {
        if base.commit(y).is_err() {
            return RootRun::exhausted(stats, false);
        }
    }
    let mut search = LevelSearch {
        square: sq,
        cap: u64::MAX,
        stats: SolverStats::default(),
        cap_hit: false,
    };
    // level 2 -> 3: up to two further members of N_3
    for s3 in small_subsets(&base.pool()) {
        let mut at3 = base.clone();
        if s3.iter().any(|&y| at3.commit(y).is_err()) || at3.advance().is_err() {
            continue;
        }
        if at3.apply_di_forced().is_err() {
            continue;
        }
        // level 3 -> 4: up to two further members of N_4
        for s4 in small_subsets(&at3.pool()) {
            stats.branches += 1;
            let mut at4 = at3.clone();
            if s4.iter().any(|&y| at4.commit(y).is_err()) || at4.advance().is_err() {
                continue;
            }
            if let Some(d) = search.run(at4) {
                stats.absorb(&search.stats);
                return RootRun {
                    outcome: RootOutcome::Found(d),
                    stats,
                };
            }
        }
    }
    stats.absorb(&search.stats);
    RootRun::exhausted(stats, false)
}

/// Subsets of size at most 2, smallest first.
fn small_subsets(pool: &[Vertex]) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new()];
    out.extend(pool.iter().map(|&a| vec![a]));
    for (i, &a) in pool.iter().enumerate() {
        out.extend(pool[i + 1..].iter().map(|&b| vec![a, b]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn examples() {
        let p8 = path(8);
        let d = solve_p9_deg3(&p8).certificate().unwrap().members().to_vec();
        assert!(d == [0, 3, 6] || d == [1, 4, 7], "{d:?}");
        assert!(solve_p9_deg3(&cycle(8)).is_no_eds());
        assert!(solve_p9_deg3(&cycle(6)).is_found());
        let k33 = solve_p9_deg3(&complete_bipartite(3, 3));
        assert!(k33.is_no_eds());
        assert_eq!(k33.note.as_deref(), Some("K33"));
    }

    #[test]
    fn high_degree_is_rejected() {
        let out = solve_p9_deg3(&star(4));
        assert!(matches!(
            out.status,
            Status::NotApplicable(Inapplicable { reason: Reason::MaxDegreeExceeded, .. })
        ));
    }
}
