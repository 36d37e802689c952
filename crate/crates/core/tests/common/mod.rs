#![allow(dead_code)]

use eds_core::generators::{random_bipartite, Rng};
use eds_core::Graph;

/// Connected random bipartite graph on `n` vertices with a random side split.
pub fn connected_bipartite(rng: &mut Rng, n: usize, p: f64) -> Option<Graph> {
    let nx = 1 + rng.below(n - 1);
    let g = random_bipartite(nx, n - nx, p, rng);
    g.is_connected().then_some(g)
}

/// Connected random bipartite graph with maximum degree at most `cap`:
/// candidate edges are visited in random order and kept while both ends
/// have room.
pub fn connected_bipartite_capped(rng: &mut Rng, n: usize, cap: usize, keep: f64) -> Option<Graph> {
    let nx = 1 + rng.below(n - 1);
    let mut pairs: Vec<(usize, usize)> = (0..nx)
        .flat_map(|a| (nx..n).map(move |b| (a, b)))
        .collect();
    rng.shuffle(&mut pairs);
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for (a, b) in pairs {
        if deg[a] < cap && deg[b] < cap && rng.bernoulli(keep) {
            deg[a] += 1;
            deg[b] += 1;
            edges.push((a, b));
        }
    }
    let g = Graph::new(n, edges).unwrap();
    g.is_connected().then_some(g)
}
