//! Exact cover by 3-sets reduced to efficient domination in bipartite
//! graphs of diameter at most 6, plus the subdivision gadget that removes
//! short cycles.
//!
//! For ground set `V = {v_0..v_{n-1}}` and triples `e_0..e_{m-1}` the graph
//! has vertices `V ∪ X ∪ Y ∪ {z, w, u}` with `v_i x_j` whenever `v_i ∈ e_j`,
//! `x_j y_j` for every `j`, `z` joined to all of `V`, and the path `z w u`.
//! The pendant `u` forces `w ∈ D`, which excludes `V ∪ {z}` from `D`. Each
//! `y_j` then forces exactly one of `x_j, y_j`, and the chosen `x_j`
//! dominate `V` exactly once iff their triples form an exact cover.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eds::{is_eds, BudgetExceeded};
use crate::graph::{Graph, Vertex};
use crate::recognize::shortest_induced_even_cycle_at_least;

pub use crate::graph::diameter;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct X3CInstance {
    n: usize,
    triples: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("triple {index} is invalid: {reason}")]
    InvalidTriple { index: usize, reason: String },
    #[error("invalid solution: {0}")]
    InvalidSolution(String),
    #[error("graph is not the output of the reduction: {0}")]
    NotAReductionGraph(String),
    #[error("a cycle of length {0} survived {1} subdivision rounds")]
    ShortCycleSurvived(usize, usize),
}

impl X3CInstance {
    /// Validates and stores the triples, each sorted ascending.
    pub fn new(n: usize, triples: Vec<[usize; 3]>) -> Result<Self, ReductionError> {
        let mut sorted = Vec::with_capacity(triples.len());
        for (index, t) in triples.into_iter().enumerate() {
            let mut t = t;
            t.sort_unstable();
            if t[2] >= n {
                return Err(ReductionError::InvalidTriple {
                    index,
                    reason: format!("element {} out of range for n = {n}", t[2]),
                });
            }
            if t[0] == t[1] || t[1] == t[2] {
                return Err(ReductionError::InvalidTriple {
                    index,
                    reason: "elements are not distinct".into(),
                });
            }
            sorted.push(t);
        }
        Ok(X3CInstance { n, triples: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.triples.len()
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    /// `true` iff the chosen triples partition the ground set.
    pub fn is_exact_cover(&self, chosen: &[usize]) -> bool {
        let mut hit = vec![0u32; self.n];
        for &j in chosen {
            let Some(t) = self.triples.get(j) else {
                return false;
            };
            for &i in t {
                hit[i] += 1;
            }
        }
        hit.iter().all(|&h| h == 1)
    }
}

/// What each vertex of a reduction graph stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum Role {
    Ground { element: usize },
    X { triple: usize },
    Y { triple: usize },
    Z,
    W,
    U,
    /// Interior vertex of the subdivided `x_triple – v_element` edge,
    /// `position` counted from the `x` end (1-based).
    Gadget {
        triple: usize,
        element: usize,
        position: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionMap {
    pub n: usize,
    pub m: usize,
    pub roles: Vec<Role>,
    /// Edges on each incidence path (1 before subdivision).
    pub path_length: usize,
    /// `(triple, element, path)` with `path` running from `x_triple` to
    /// `v_element` inclusive.
    pub incidence_paths: Vec<(usize, usize, Vec<Vertex>)>,
}

impl ReductionMap {
    pub fn ground(&self, i: usize) -> Vertex {
        i
    }

    pub fn x(&self, j: usize) -> Vertex {
        self.n + j
    }

    pub fn y(&self, j: usize) -> Vertex {
        self.n + self.m + j
    }

    pub fn z(&self) -> Vertex {
        self.n + 2 * self.m
    }

    pub fn w(&self) -> Vertex {
        self.z() + 1
    }

    pub fn u(&self) -> Vertex {
        self.z() + 2
    }
}

pub fn x3c_to_ed(h: &X3CInstance) -> (Graph, ReductionMap) {
    let (n, m) = (h.n(), h.m());
    let total = n + 2 * m + 3;
    let mut roles = Vec::with_capacity(total);
    roles.extend((0..n).map(|element| Role::Ground { element }));
    roles.extend((0..m).map(|triple| Role::X { triple }));
    roles.extend((0..m).map(|triple| Role::Y { triple }));
    roles.extend([Role::Z, Role::W, Role::U]);
    let mut map = ReductionMap {
        n,
        m,
        roles,
        path_length: 1,
        incidence_paths: Vec::new(),
    };
    let mut edges = Vec::new();
    for (j, t) in h.triples().iter().enumerate() {
        for &i in t {
            edges.push((map.x(j), map.ground(i)));
            map.incidence_paths.push((j, i, vec![map.x(j), map.ground(i)]));
        }
        edges.push((map.x(j), map.y(j)));
    }
    for i in 0..n {
        edges.push((map.z(), map.ground(i)));
    }
    edges.push((map.z(), map.w()));
    edges.push((map.w(), map.u()));
    let g = Graph::new(total, edges).expect("reduction edges are in range");
    (g, map)
}

/// Replaces every edge of every incidence path by a `P_5`, round after
/// round, until no induced even cycle of length at most `2k` remains. The
/// path length multiplies by 4 each round, so it stays `≡ 1 (mod 3)`, which
/// keeps e.d.s. existence unchanged.
pub fn subdivide_for_girth(
    g: &Graph,
    map: &ReductionMap,
    k: usize,
) -> Result<(Graph, ReductionMap), ReductionError> {
    const MAX_ROUNDS: usize = 6;
    check_shape(g, map)?;
    let mut cur = (g.clone(), map.clone());
    for round in 1..=MAX_ROUNDS {
        cur = subdivide_once(&cur.0, &cur.1);
        let short = shortest_induced_even_cycle_at_least(&cur.0, 4)
            .expect("subdivision keeps the graph bipartite")
            .map(|c| c.len())
            .filter(|&len| len <= 2 * k);
        match short {
            None => return Ok(cur),
            Some(len) if round == MAX_ROUNDS => {
                return Err(ReductionError::ShortCycleSurvived(len, round))
            }
            Some(_) => {}
        }
    }
    unreachable!()
}

fn check_shape(g: &Graph, map: &ReductionMap) -> Result<(), ReductionError> {
    if map.roles.len() != g.n() {
        return Err(ReductionError::NotAReductionGraph(format!(
            "{} roles for {} vertices",
            map.roles.len(),
            g.n()
        )));
    }
    for (_, _, path) in &map.incidence_paths {
        if path.len() != map.path_length + 1 || path.windows(2).any(|e| !g.has_edge(e[0], e[1])) {
            return Err(ReductionError::NotAReductionGraph(
                "incidence path missing from graph".into(),
            ));
        }
    }
    Ok(())
}

fn subdivide_once(g: &Graph, map: &ReductionMap) -> (Graph, ReductionMap) {
    let mut on_path = std::collections::HashSet::new();
    for (_, _, path) in &map.incidence_paths {
        for e in path.windows(2) {
            on_path.insert((e[0].min(e[1]), e[0].max(e[1])));
        }
    }
    let mut edges: Vec<(Vertex, Vertex)> =
        g.edges().filter(|e| !on_path.contains(e)).collect();
    // Keep the original n + 2m + 3 vertices in place and renumber gadgets.
    let base = map.n + 2 * map.m + 3;
    let mut roles: Vec<Role> = map.roles[..base].to_vec();
    let mut next = base;
    let new_len = map.path_length * 4;
    let mut paths = Vec::with_capacity(map.incidence_paths.len());
    for (triple, element, _) in &map.incidence_paths {
        let mut path = vec![map.x(*triple)];
        for position in 1..new_len {
            roles.push(Role::Gadget {
                triple: *triple,
                element: *element,
                position,
            });
            path.push(next);
            next += 1;
        }
        path.push(map.ground(*element));
        edges.extend(path.windows(2).map(|e| (e[0], e[1])));
        paths.push((*triple, *element, path));
    }
    let graph = Graph::new(next, edges).expect("subdivision stays simple");
    let out = ReductionMap {
        n: map.n,
        m: map.m,
        roles,
        path_length: new_len,
        incidence_paths: paths,
    };
    (graph, out)
}

/// Maps an exact cover to an e.d.s. of the (possibly subdivided) reduction
/// graph and verifies it.
pub fn cover_to_eds(
    h: &X3CInstance,
    g: &Graph,
    map: &ReductionMap,
    cover: &[usize],
) -> Result<Vec<Vertex>, ReductionError> {
    if !h.is_exact_cover(cover) {
        return Err(ReductionError::InvalidSolution(
            "triples do not partition the ground set".into(),
        ));
    }
    let mut chosen = vec![false; map.m];
    for &j in cover {
        chosen[j] = true;
    }
    let mut d = vec![map.w()];
    for j in 0..map.m {
        d.push(if chosen[j] { map.x(j) } else { map.y(j) });
    }
    let len = map.path_length;
    for (j, _, path) in &map.incidence_paths {
        let start = if chosen[*j] { 3 } else { 2 };
        d.extend((start..len).step_by(3).map(|p| path[p]));
    }
    d.sort_unstable();
    if !is_eds(g, &d) {
        return Err(ReductionError::InvalidSolution(
            "mapped set is not an e.d.s. of this graph".into(),
        ));
    }
    Ok(d)
}

/// Reads the exact cover `{j : x_j ∈ D}` off an e.d.s.
pub fn eds_to_cover(
    h: &X3CInstance,
    g: &Graph,
    map: &ReductionMap,
    d: &[Vertex],
) -> Result<Vec<usize>, ReductionError> {
    if !is_eds(g, d) {
        return Err(ReductionError::InvalidSolution("not an e.d.s.".into()));
    }
    if !d.contains(&map.w()) {
        return Err(ReductionError::InvalidSolution("w is not in D".into()));
    }
    let cover: Vec<usize> = (0..map.m).filter(|&j| d.contains(&map.x(j))).collect();
    if !h.is_exact_cover(&cover) {
        return Err(ReductionError::InvalidSolution(
            "selected triples do not partition the ground set".into(),
        ));
    }
    Ok(cover)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RoundTrip {
    CoverToEds(Vec<usize>),
    EdsToCover(Vec<Vertex>),
}

/// Either direction of the solution correspondence, verified on output.
pub fn round_trip(
    h: &X3CInstance,
    g: &Graph,
    map: &ReductionMap,
    input: RoundTrip,
) -> Result<Vec<usize>, ReductionError> {
    match input {
        RoundTrip::CoverToEds(cover) => cover_to_eds(h, g, map, &cover),
        RoundTrip::EdsToCover(d) => eds_to_cover(h, g, map, &d),
    }
}

/// Exact cover by backtracking on the lowest uncovered element. `Ok(None)`
/// when no cover exists (immediately when `3 ∤ n`).
pub fn solve_x3c_brute(h: &X3CInstance, budget: u64) -> Result<Option<Vec<usize>>, BudgetExceeded> {
    if h.n() % 3 != 0 {
        return Ok(None);
    }
    let mut by_min: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (j, t) in h.triples().iter().enumerate() {
        by_min[t[0]].push(j);
    }
    let mut covered = vec![false; h.n()];
    let mut chosen = Vec::new();
    let mut nodes = 0u64;
    if x3c_search(h, &by_min, &mut covered, &mut chosen, &mut nodes, budget)? {
        chosen.sort_unstable();
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

fn x3c_search(
    h: &X3CInstance,
    by_min: &[Vec<usize>],
    covered: &mut [bool],
    chosen: &mut Vec<usize>,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool, BudgetExceeded> {
    *nodes += 1;
    if *nodes > budget {
        return Err(BudgetExceeded { budget });
    }
    let Some(first) = covered.iter().position(|&c| !c) else {
        return Ok(true);
    };
    // a triple covering `first` must have it as its smallest member, since
    // everything below is covered already
    for &j in &by_min[first] {
        let t = h.triples()[j];
        if t.iter().any(|&i| covered[i]) {
            continue;
        }
        for &i in &t {
            covered[i] = true;
        }
        chosen.push(j);
        if x3c_search(h, by_min, covered, chosen, nodes, budget)? {
            return Ok(true);
        }
        chosen.pop();
        for &i in &t {
            covered[i] = false;
        }
    }
    Ok(false)
}
