use crate::eds::{brute_force_eds, EdsCertificate, OracleMode, DEFAULT_BUDGET};
use crate::graph::{bipartition, diameter, find_homogeneous_set, Graph};
use crate::recognize::{classify_with, contains_induced, ClassifyOptions, NamedSmall, Pattern};

use super::{
    per_component, solve_lp4_free, solve_p5_free, solve_p7_free, solve_p9_deg3, solve_s223_free,
    solve_s224_free, solve_spider_free, Inapplicable, Reason, SolverKind, SolverOutcome,
    SolverStats, SpiderConfig, Status,
};

/// Components up to this many vertices are classified exactly before a
/// solver is picked; larger ones are solved optimistically.
pub const DESK_SCALE: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Class(SolverKind),
}

impl From<SolverKind> for Strategy {
    fn from(k: SolverKind) -> Self {
        match k {
            SolverKind::Auto => Strategy::Auto,
            k => Strategy::Class(k),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DispatchOptions {
    /// Node budget for the exact fallback.
    pub budget: u64,
    pub lp4_cap: usize,
    pub desk_scale: usize,
}

impl Default for DispatchOptions {
    fn default() -> Self {
        DispatchOptions {
            budget: DEFAULT_BUDGET,
            lp4_cap: ClassifyOptions::default().lp4_cap,
            desk_scale: DESK_SCALE,
        }
    }
}

pub fn dispatch(g: &Graph, strategy: Strategy) -> SolverOutcome {
    dispatch_with(g, strategy, DispatchOptions::default())
}

pub fn dispatch_with(g: &Graph, strategy: Strategy, opts: DispatchOptions) -> SolverOutcome {
    match strategy {
        Strategy::Auto | Strategy::Class(SolverKind::Auto) => {
            per_component(g, SolverKind::Auto, |c| auto_connected(c, opts))
        }
        Strategy::Class(kind) => run_named(g, kind, opts),
    }
}

fn run_named(g: &Graph, kind: SolverKind, opts: DispatchOptions) -> SolverOutcome {
    match kind {
        SolverKind::P5 => solve_p5_free(g),
        SolverKind::P7 => solve_p7_free(g),
        SolverKind::Lp4(ell) => solve_lp4_free(g, ell),
        SolverKind::S222 => solve_spider_free(g, SpiderConfig::new(2)),
        SolverKind::S223 => solve_s223_free(g),
        SolverKind::S224 => solve_s224_free(g),
        SolverKind::P9Deg3 => solve_p9_deg3(g),
        SolverKind::Oracle => solve_oracle(g, opts.budget),
        SolverKind::Auto => dispatch_with(g, Strategy::Auto, opts),
    }
}

/// The exact search, valid for every graph.
pub fn solve_oracle(g: &Graph, budget: u64) -> SolverOutcome {
    match brute_force_eds(g, OracleMode::First, budget) {
        Ok(report) => {
            let stats = SolverStats {
                oracle_nodes: report.nodes,
                ..SolverStats::default()
            };
            let status = match report.solutions.into_iter().next() {
                Some(d) => Status::Found(EdsCertificate::new(g, d).expect("oracle output")),
                None => Status::NoEds,
            };
            SolverOutcome::new(SolverKind::Oracle, status, stats)
        }
        Err(_) => SolverOutcome::not_applicable(
            SolverKind::Oracle,
            Inapplicable::new(Reason::BudgetExceeded),
        ),
    }
}

fn auto_connected(g: &Graph, opts: DispatchOptions) -> SolverOutcome {
    if bipartition(g).is_err() {
        return solve_oracle(g, opts.budget);
    }
    let maxdeg3 = g.max_degree() <= 3;
    let k33 = Pattern::Named(NamedSmall::K33);
    if maxdeg3 && contains_induced(g, k33).expect("fixed pattern").is_some() {
        return SolverOutcome::new(SolverKind::Auto, Status::NoEds, SolverStats::default())
            .with_note("K33");
    }
    if diameter(g).expect("connected") <= 3 {
        return solve_p5_free(g);
    }
    if g.n() > opts.desk_scale {
        return optimistic(g, opts);
    }
    let report = classify_with(g, ClassifyOptions { lp4_cap: opts.lp4_cap });
    let kind = if report.s222free.holds {
        SolverKind::S222
    } else if report.p7free.holds {
        SolverKind::P7
    } else if report.s223free.holds {
        SolverKind::S223
    } else if report.s224free.holds || report.s124free.holds {
        SolverKind::S224
    } else if report.p9free.holds && maxdeg3 {
        SolverKind::P9Deg3
    } else if let Some(ell) = report.min_lp4().filter(|_| find_homogeneous_set(g).is_none()) {
        SolverKind::Lp4(ell)
    } else {
        return solve_oracle(g, opts.budget);
    };
    let out = run_named(g, kind, opts);
    match out.status {
        Status::NotApplicable(_) => fallback(g, kind, opts, out.stats),
        _ => out,
    }
}

/// Above desk scale class membership is not checked, so only a found
/// certificate from a class solver is trusted.
fn optimistic(g: &Graph, opts: DispatchOptions) -> SolverOutcome {
    let mut stats = SolverStats::default();
    for kind in [SolverKind::P7, SolverKind::S224] {
        let out = run_named(g, kind, opts);
        if out.is_found() {
            return out;
        }
        stats.absorb(&out.stats);
    }
    fallback(g, SolverKind::S224, opts, stats)
}

fn fallback(g: &Graph, from: SolverKind, opts: DispatchOptions, spent: SolverStats) -> SolverOutcome {
    let mut out = solve_oracle(g, opts.budget).with_note(format!("fallback from {from}"));
    out.stats.absorb(&spent);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn examples() {
        let c6 = dispatch(&cycle(6), Strategy::Auto);
        assert_eq!(c6.solver, SolverKind::P5);
        assert!(c6.is_found());

        let k33 = dispatch(&complete_bipartite(3, 3), Strategy::Auto);
        assert!(k33.is_no_eds());
        assert_eq!(k33.note.as_deref(), Some("K33"));

        let p8 = dispatch(&path(8), Strategy::Auto);
        assert!(p8.is_found());
        assert_eq!(p8.solver, SolverKind::S222);
    }

    #[test]
    fn named_strategy_runs_that_solver() {
        let out = dispatch(&path(8), Strategy::Class(SolverKind::P9Deg3));
        assert_eq!(out.solver, SolverKind::P9Deg3);
        assert!(out.is_found());
        let odd = dispatch(&cycle(5), Strategy::Auto);
        assert_eq!(odd.solver, SolverKind::Oracle);
        assert!(odd.is_no_eds());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let out = solve_oracle(&cycle(30), 3);
        assert_eq!(
            out.status,
            Status::NotApplicable(Inapplicable::new(Reason::BudgetExceeded))
        );
    }

    #[test]
    fn large_inputs_fall_back_past_failed_class_solvers() {
        // C_{4k}: every class solver declines or finds nothing useful
        let c = cycle(40);
        let out = dispatch(&c, Strategy::Auto);
        assert!(out.is_no_eds() || out.is_found());
        assert_eq!(out.is_found(), 40 % 3 == 0);
    }
}
