mod common;

use eds_core::generators::Rng;
use eds_core::recognize::{contains_induced, Pattern};
use eds_core::solvers::{
    solve_lp4_free, solve_p5_free, solve_p7_free, solve_p9_deg3, solve_s223_free,
    solve_s224_free, SolverOutcome, Status,
};
use eds_core::graph::find_homogeneous_set;
use eds_core::{brute_force_eds, is_eds, Graph, OracleMode};

fn oracle_has_eds(g: &Graph) -> bool {
    brute_force_eds(g, OracleMode::First, u64::MAX).unwrap().count > 0
}

fn free(g: &Graph, p: Pattern) -> bool {
    contains_induced(g, p).unwrap().is_none()
}

/// Checks `solve` against the oracle on `wanted` accepted samples; returns
/// (found, no_eds) counts.
fn agree<A, S>(seed: u64, wanted: usize, sample: impl Fn(&mut Rng) -> Option<Graph>, accept: A, solve: S) -> (usize, usize)
where
    A: Fn(&Graph) -> bool,
    S: Fn(&Graph) -> SolverOutcome,
{
    let mut rng = Rng::seeded(seed);
    let (mut yes, mut no) = (0, 0);
    let mut tries = 0;
    while yes + no < wanted {
        tries += 1;
        assert!(tries < 200 * wanted, "sampler too selective");
        let Some(g) = sample(&mut rng) else { continue };
        if !accept(&g) {
            continue;
        }
        let out = solve(&g);
        let expected = oracle_has_eds(&g);
        match &out.status {
            Status::Found(c) => {
                assert!(is_eds(&g, c.members()));
                assert!(expected, "found on a graph without e.d.s.: {g:?}");
                yes += 1;
            }
            Status::NoEds => {
                assert!(!expected, "missed an e.d.s.: {g:?}");
                no += 1;
            }
            Status::NotApplicable(why) => panic!("{why:?} on {g:?}"),
        }
    }
    (yes, no)
}

fn mixed(rng: &mut Rng) -> Option<Graph> {
    let n = 4 + rng.below(9);
    let p = [0.15, 0.25, 0.4, 0.6][rng.below(4)];
    common::connected_bipartite(rng, n, p)
}

fn sparse(rng: &mut Rng) -> Option<Graph> {
    let n = 4 + rng.below(9);
    common::connected_bipartite_capped(rng, n, 3, 0.5)
}

#[test]
fn p5_free() {
    let (y, n) = agree(1, 150, mixed, |g| free(g, Pattern::Path(5)), solve_p5_free);
    assert!(y > 0 && n > 0);
}

#[test]
fn p7_free() {
    let (y, n) = agree(2, 150, mixed, |g| free(g, Pattern::Path(7)), solve_p7_free);
    assert!(y > 0 && n > 0);
}

#[test]
fn two_p4_free_prime() {
    let accept = |g: &Graph| {
        free(g, Pattern::DisjointPaths { copies: 2, len: 4 }) && find_homogeneous_set(g).is_none()
    };
    let (y, n) = agree(3, 150, mixed, accept, |g| solve_lp4_free(g, 2));
    assert!(y > 0 && n > 0);
}

#[test]
fn s223_free() {
    let (y, n) = agree(4, 150, mixed, |g| free(g, Pattern::Spider(2, 2, 3)), solve_s223_free);
    assert!(y > 0 && n > 0);
}

#[test]
fn s224_free() {
    let (y, n) = agree(5, 150, mixed, |g| free(g, Pattern::Spider(2, 2, 4)), solve_s224_free);
    assert!(y > 0 && n > 0);
}

#[test]
fn p9_free_degree_three() {
    let (y, n) = agree(6, 150, sparse, |g| free(g, Pattern::Path(9)), solve_p9_deg3);
    assert!(y > 0 && n > 0);
}
