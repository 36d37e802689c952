//! Level-by-level completion by maximal independent sets of the square.
//!
//! At level `i`, `Z = D ∩ N_{i+1}` lies inside the candidate set
//! `C = N(N'_i) ∩ W_{i+1}` (each member dominates a neighbour in `N_i`
//! that nothing below could have dominated), and every other member of `C`
//! shares a neighbour in `N'_i` with some vertex of `Z`. So `Z` is a
//! maximal independent set of `G^2[C]`, and enumerating those is exact.

use crate::graph::{Graph, Vertex};
use crate::levels::LevelState;
use crate::mis::maximal_independent_sets;

use super::SolverStats;

pub(crate) struct LevelSearch<'a> {
    pub square: &'a Graph,
    /// Maximal independent sets allowed per level.
    pub cap: u64,
    pub stats: SolverStats,
    pub cap_hit: bool,
}

impl LevelSearch<'_> {
    pub fn run(&mut self, mut state: LevelState<'_>) -> Option<Vec<Vertex>> {
        if state.apply_di_forced().is_err() {
            return None;
        }
        if state.is_finished() {
            self.stats.candidates_tested += 1;
            return state.certificate().map(|c| c.into_vec());
        }
        let frontier = state.frontier();
        if !frontier.uncoverable.is_empty() {
            return None;
        }
        let mut pool: Vec<Vertex> = frontier
            .candidates
            .into_iter()
            .flat_map(|(_, c)| c)
            .collect();
        pool.sort_unstable();
        pool.dedup();
        let sets = match maximal_independent_sets(self.square, &pool, self.cap) {
            Ok(sets) => sets,
            Err(_) => {
                self.cap_hit = true;
                return None;
            }
        };
        for z in sets {
            self.stats.branches += 1;
            if let Ok(next) = state.extend(&z) {
                if let Some(d) = self.run(next) {
                    return Some(d);
                }
            }
        }
        None
    }
}
