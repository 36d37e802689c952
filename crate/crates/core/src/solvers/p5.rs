use crate::eds::is_eds;
use crate::graph::{bipartition, distance_levels, Graph};
use crate::recognize::Pattern;

use super::{per_component, run_roots, Inapplicable, Reason, RootOutcome, RootRun};
use super::{SolverKind, SolverOutcome, SolverStats};

/// `P_5`-free bipartite graphs: from any root `v` nothing lies at distance 4,
/// so `D = {v} ∪ N_3` is the only candidate containing `v`.
///
/// The candidate is exact for every root whose eccentricity is at most 3.
/// A root with a nonempty fourth stratum aborts with an induced `P_5` (a
/// shortest path) as witness.
pub fn solve_p5_free(g: &Graph) -> SolverOutcome {
    if let Err(e) = bipartition(g) {
        return SolverOutcome::not_applicable(SolverKind::P5, bipartite_violation(e));
    }
    per_component(g, SolverKind::P5, |c| {
        let roots: Vec<_> = (0..c.n()).collect();
        let (status, stats) = run_roots(c, &roots, |v| {
            let levels = distance_levels(c, v);
            let stats = SolverStats {
                candidates_tested: 1,
                ..Default::default()
            };
            if let Some(&far) = levels.stratum(4).first() {
                let mut path = levels.path_to_root(far);
                path.reverse();
                return RootRun {
                    outcome: RootOutcome::Abort(Inapplicable::violation(Pattern::Path(5), path)),
                    stats,
                };
            }
            let mut d = vec![v];
            d.extend_from_slice(levels.stratum(3));
            if is_eds(c, &d) {
                RootRun {
                    outcome: RootOutcome::Found(d),
                    stats,
                }
            } else {
                RootRun::exhausted(stats, false)
            }
        });
        SolverOutcome::new(SolverKind::P5, status, stats)
    })
}

pub(crate) fn bipartite_violation(e: crate::graph::GraphError) -> Inapplicable {
    let witness = match e {
        crate::graph::GraphError::NotBipartite { cycle } => Some(cycle),
        _ => None,
    };
    Inapplicable {
        reason: Reason::NotBipartite,
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::solvers::Status;

    #[test]
    fn examples() {
        assert_eq!(solve_p5_free(&path(4)).certificate().unwrap().members(), &[0, 3]);
        assert!(solve_p5_free(&cycle(4)).is_no_eds());
        let out = solve_p5_free(&path(6));
        let Status::NotApplicable(why) = out.status else {
            panic!("P6 is not P5-free")
        };
        assert_eq!(why.reason, Reason::ClassViolation("P5".into()));
        assert_eq!(why.witness, Some(vec![0, 1, 2, 3, 4]));
        assert!(solve_p5_free(&cycle(6)).is_found());
    }

    #[test]
    fn rejects_odd_cycles() {
        let out = solve_p5_free(&cycle(5));
        assert!(matches!(
            out.status,
            Status::NotApplicable(Inapplicable {
                reason: Reason::NotBipartite,
                ..
            })
        ));
    }

    #[test]
    fn disconnected_inputs_combine() {
        // P4 plus K2 plus an isolated vertex
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (4, 5)]).unwrap();
        let out = solve_p5_free(&g);
        assert_eq!(out.certificate().unwrap().members(), &[0, 3, 4, 6]);
        // P4 plus C4
        let g = Graph::new(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (7, 4)]).unwrap();
        assert!(solve_p5_free(&g).is_no_eds());
    }
}
