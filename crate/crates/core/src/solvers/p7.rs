use crate::eds::{is_eds, v_forced_rules, ReducedInstance};
use crate::graph::{bipartition, distance_levels, find_central_vertex, Graph, GraphError};
use crate::recognize::Pattern;

use super::p5::bipartite_violation;
use super::{per_component, run_roots, Inapplicable, Reason, RootOutcome, RootRun};
use super::{SolverKind, SolverOutcome, SolverStats};

/// `P_7`-free bipartite graphs.
///
/// Some vertex `v0` has eccentricity at most 3, and `v0` is dominated by a
/// member of `N[v0]`, so only those roots are tried. From a root `v` every
/// stratum past `N_4` is empty. Outlet-less `N_3` vertices are forced, at
/// most one further `N_3` vertex `y` joins `D`, and the undominated rest of
/// `N_4` is then forced wholesale.
pub fn solve_p7_free(g: &Graph) -> SolverOutcome {
    if let Err(e) = bipartition(g) {
        return SolverOutcome::not_applicable(SolverKind::P7, bipartite_violation(e));
    }
    per_component(g, SolverKind::P7, solve_connected)
}

fn solve_connected(g: &Graph) -> SolverOutcome {
    let v0 = match find_central_vertex(g, 7) {
        Ok(v) => v,
        Err(GraphError::EccentricityBoundViolated {
            vertex,
            eccentricity,
            ..
        }) => {
            return SolverOutcome::not_applicable(
                SolverKind::P7,
                Inapplicable::new(Reason::EccentricityBound {
                    vertex,
                    eccentricity,
                }),
            )
        }
        Err(e) => unreachable!("component is connected: {e}"),
    };
    let roots = g.closed_neighborhood(v0);
    let (status, stats) = run_roots(g, &roots, |v| root_search(g, v));
    SolverOutcome::new(SolverKind::P7, status, stats)
}

fn root_search(g: &Graph, v: usize) -> RootRun {
    let levels = distance_levels(g, v);
    let mut stats = SolverStats::default();
    if let Some(&far) = levels.stratum(5).first() {
        // only reachable when N[v0] has a vertex of eccentricity 5
        let mut path = levels.path_to_root(far);
        path.reverse();
        return RootRun {
            outcome: RootOutcome::Abort(Inapplicable::violation(Pattern::Path(7), path)),
            stats,
        };
    }
    let Ok(forced) = v_forced_rules(g, &levels) else {
        return RootRun::exhausted(stats, false);
    };
    let mut base = ReducedInstance::rooted(g, v);
    for &y in &forced {
        if base.commit(y).is_err() {
            return RootRun::exhausted(stats, false);
        }
    }
    let extra: Vec<_> = levels
        .stratum(3)
        .iter()
        .copied()
        .filter(|&y| base.is_eligible(y))
        .collect();
    for y in std::iter::once(None).chain(extra.into_iter().map(Some)) {
        stats.candidates_tested += 1;
        let mut inst = base.clone();
        if let Some(y) = y {
            inst.commit(y).expect("eligible");
        }
        let mut d = inst.committed().to_vec();
        d.extend(levels.stratum(4).iter().copied().filter(|&z| !inst.is_dominated(z)));
        if is_eds(g, &d) {
            return RootRun {
                outcome: RootOutcome::Found(d),
                stats,
            };
        }
    }
    RootRun::exhausted(stats, false)
}
