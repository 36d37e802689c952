//! Level-by-level construction of an e.d.s. containing a fixed root.
//!
//! With the root `v` in `D`, BFS strata are processed in order. At level `i`
//! the set `D_i = D ∩ (N_0 ∪ … ∪ N_i)` is fixed and everything below `N_i`
//! is dominated. What remains at level `i` is the undominated part `N'_i`,
//! which must be dominated exactly once from the eligible pool
//! `W_{i+1} ⊆ N_{i+1}`.

use std::sync::Arc;

use thiserror::Error;

use crate::eds::{Conflict, EdsCertificate, ForcedRule, NoEdsHere, ReducedInstance};
use crate::graph::{distance_levels, Graph, Levels, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("vertex {vertex} would be dominated {count} times")]
    NotExactlyOnce { vertex: Vertex, count: usize },
    #[error("vertices {a} and {b} are closer than distance 3")]
    DistanceViolation { a: Vertex, b: Vertex },
    #[error("vertex {0} is not in the candidate pool")]
    NotInPool(Vertex),
}

#[derive(Debug, Clone)]
pub struct LevelState<'g> {
    levels: Arc<Levels>,
    inst: ReducedInstance<'g>,
    level: usize,
}

/// Everything a solver needs to choose `Z_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frontier {
    pub level: usize,
    /// `N'_i`.
    pub undominated: Vec<Vertex>,
    /// `W_{i+1}`.
    pub pool: Vec<Vertex>,
    /// `(x, N(x) ∩ W_{i+1})` for every `x` in `N'_i`.
    pub candidates: Vec<(Vertex, Vec<Vertex>)>,
    /// Members of `N'_i` with no candidate at all.
    pub uncoverable: Vec<Vertex>,
}

/// State at level 2 with `D_2 = {v}`.
pub fn init_state(g: &Graph, v: Vertex) -> LevelState<'_> {
    LevelState::from_levels(g, Arc::new(distance_levels(g, v)))
}

impl<'g> LevelState<'g> {
    pub fn from_levels(g: &'g Graph, levels: Arc<Levels>) -> Self {
        LevelState {
            inst: ReducedInstance::rooted(g, levels.root()),
            levels,
            level: 2,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.inst.graph()
    }

    pub fn levels(&self) -> &Levels {
        &self.levels
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn instance(&self) -> &ReducedInstance<'g> {
        &self.inst
    }

    pub fn committed(&self) -> &[Vertex] {
        self.inst.committed()
    }

    /// Past the last stratum: every level has been settled.
    pub fn is_finished(&self) -> bool {
        self.level > self.levels.depth()
    }

    pub fn certificate(&self) -> Option<EdsCertificate> {
        self.inst.certificate()
    }

    /// `N'_j` for any level `j`.
    pub fn undominated_at(&self, j: usize) -> Vec<Vertex> {
        self.levels
            .stratum(j)
            .iter()
            .copied()
            .filter(|&x| !self.inst.is_dominated(x))
            .collect()
    }

    /// `W_{i+1}`.
    pub fn pool(&self) -> Vec<Vertex> {
        self.levels
            .stratum(self.level + 1)
            .iter()
            .copied()
            .filter(|&y| self.inst.is_eligible(y))
            .collect()
    }

    /// `N(x) ∩ W_{i+1}`.
    pub fn candidates(&self, x: Vertex) -> Vec<Vertex> {
        let up = self.level + 1;
        self.graph()
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&y| self.levels.in_level(y, up) && self.inst.is_eligible(y))
            .collect()
    }

    /// `N(y) ∩ N_{i+2}`.
    pub fn next_neighbors(&self, y: Vertex) -> Vec<Vertex> {
        let up = self.level + 2;
        self.graph()
            .neighbors(y)
            .iter()
            .copied()
            .filter(|&z| self.levels.in_level(z, up))
            .collect()
    }

    pub fn frontier(&self) -> Frontier {
        let undominated = self.undominated_at(self.level);
        let candidates: Vec<_> = undominated.iter().map(|&x| (x, self.candidates(x))).collect();
        let uncoverable = candidates
            .iter()
            .filter(|(_, c)| c.is_empty())
            .map(|&(x, _)| x)
            .collect();
        Frontier {
            level: self.level,
            undominated,
            pool: self.pool(),
            candidates,
            uncoverable,
        }
    }

    /// Commits a single vertex without changing level.
    pub fn commit(&mut self, y: Vertex) -> Result<(), Conflict> {
        self.inst.commit(y)
    }

    pub fn exclude(&mut self, y: Vertex) {
        self.inst.exclude(y);
    }

    /// `D_{i+1} = D_i ∪ Z`: checks that `Z ⊆ W_{i+1}`, that its members are
    /// pairwise at distance at least 3, and that it dominates `N'_i` exactly
    /// once; then moves to level `i + 1`.
    pub fn extend(&self, z: &[Vertex]) -> Result<LevelState<'g>, ExtendError> {
        let g = self.graph();
        let up = self.level + 1;
        for &y in z {
            if !self.levels.in_level(y, up) || !self.inst.is_eligible(y) {
                return Err(ExtendError::NotInPool(y));
            }
        }
        for (i, &a) in z.iter().enumerate() {
            for &b in &z[i + 1..] {
                let near = a == b
                    || g.has_edge(a, b)
                    || g.neighbors(a).iter().any(|&c| g.has_edge(c, b));
                if near {
                    return Err(ExtendError::DistanceViolation { a, b });
                }
            }
        }
        for x in self.undominated_at(self.level) {
            let count = g.neighbors(x).iter().filter(|y| z.contains(y)).count();
            if count != 1 {
                return Err(ExtendError::NotExactlyOnce { vertex: x, count });
            }
        }
        let mut next = self.clone();
        for &y in z {
            next.inst
                .commit(y)
                .expect("pool members are eligible and pairwise far apart");
        }
        next.level += 1;
        Ok(next)
    }

    /// Moves up a level once `N'_i` has been dominated by commits.
    pub fn advance(&mut self) -> Result<(), ExtendError> {
        if let Some(x) = self.undominated_at(self.level).into_iter().next() {
            return Err(ExtendError::NotExactlyOnce { vertex: x, count: 0 });
        }
        self.level += 1;
        Ok(())
    }

    /// One round of the level-`i` forced rules:
    /// an `x ∈ N'_i` without candidates is fatal, a unique candidate is
    /// forced, and an undominated `u ∈ N_{i+1}` without neighbours in
    /// `N_{i+2}` must dominate itself (fatal if it is not eligible).
    pub fn di_forced_candidates(&self) -> Result<Vec<Vertex>, NoEdsHere> {
        let mut forced = Vec::new();
        for x in self.undominated_at(self.level) {
            match self.candidates(x)[..] {
                [] => {
                    return Err(NoEdsHere {
                        rule: ForcedRule::Undominatable,
                        vertex: x,
                    })
                }
                [y] => forced.push(y),
                _ => {}
            }
        }
        let up = self.level + 1;
        for u in self.undominated_at(up) {
            let outlet = self
                .graph()
                .neighbors(u)
                .iter()
                .any(|&z| self.levels.in_level(z, up + 1));
            if !outlet {
                if !self.inst.is_eligible(u) {
                    return Err(NoEdsHere {
                        rule: ForcedRule::NoOutlet,
                        vertex: u,
                    });
                }
                forced.push(u);
            }
        }
        forced.sort_unstable();
        forced.dedup();
        let mut trial = self.inst.clone();
        for &y in &forced {
            if trial.commit(y).is_err() {
                return Err(NoEdsHere {
                    rule: ForcedRule::Conflict,
                    vertex: y,
                });
            }
        }
        Ok(forced)
    }

    /// Applies [`Self::di_forced_candidates`] until nothing changes. Returns
    /// every vertex committed along the way.
    pub fn apply_di_forced(&mut self) -> Result<Vec<Vertex>, NoEdsHere> {
        let mut all = Vec::new();
        loop {
            let forced = self.di_forced_candidates()?;
            if forced.is_empty() {
                return Ok(all);
            }
            for y in forced {
                self.inst.commit(y).map_err(|_| NoEdsHere {
                    rule: ForcedRule::Conflict,
                    vertex: y,
                })?;
                all.push(y);
            }
        }
    }
}

/// Among the candidates of `x ∈ N'_i`, those whose neighbourhood in
/// `N_{i+2}` is contained in that of every other candidate. `None` when no
/// candidate qualifies.
///
/// In graphs where the inclusion property holds for `x`, only these
/// candidates can dominate `x` in an e.d.s.
pub fn inclusion_forced_dominator(state: &LevelState<'_>, x: Vertex) -> Option<Vec<Vertex>> {
    let cands = state.candidates(x);
    let next: Vec<Vec<Vertex>> = cands.iter().map(|&y| state.next_neighbors(y)).collect();
    let minimal: Vec<Vertex> = (0..cands.len())
        .filter(|&a| {
            (0..cands.len()).all(|b| a == b || is_subset(&next[a], &next[b]))
        })
        .map(|a| cands[a])
        .collect();
    if minimal.is_empty() {
        None
    } else {
        Some(minimal)
    }
}

/// Sorted-slice containment.
pub(crate) fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}
