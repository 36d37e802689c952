//! Immutable undirected simple graphs and the structural queries the solvers
//! are built on: bipartition, BFS distance strata, the graph square,
//! homogeneous sets and central vertices.
//!
//! Vertices are dense `0..n` indices. Every set-valued output is sorted
//! ascending.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("weight vector has {got} entries, expected {n}")]
    WeightLength { got: usize, n: usize },
    #[error("graph is not bipartite (odd cycle {cycle:?})")]
    NotBipartite { cycle: Vec<Vertex> },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("minimum eccentricity {eccentricity} (vertex {vertex}) exceeds the bound {bound}")]
    EccentricityBoundViolated {
        vertex: Vertex,
        eccentricity: usize,
        bound: usize,
    },
}

/// Undirected simple graph with sorted adjacency lists.
///
/// Optional vertex weights are carried for I/O; no algorithm in this crate
/// reads them.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
    weights: Option<Vec<f64>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
            weights: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            weights: None,
        }
    }

    /// Attaches vertex weights. An all-ones vector is stored as "no weights"
    /// so that unit-weight graphs compare equal however they were built.
    pub fn with_weights(mut self, weights: Vec<f64>) -> Result<Self, GraphError> {
        if weights.len() != self.n() {
            return Err(GraphError::WeightLength {
                got: weights.len(),
                n: self.n(),
            });
        }
        self.weights = if weights.iter().all(|&w| w == 1.0) {
            None
        } else {
            Some(weights)
        };
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let pos = self.adj[v].partition_point(|&u| u < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        out
    }

    pub fn weight(&self, v: Vertex) -> f64 {
        self.weights.as_ref().map_or(1.0, |w| w[v])
    }

    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&v| v <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut edge_count = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &u in &self.adj[v] {
                if index[u] != usize::MAX {
                    adj[i].push(index[u]);
                }
            }
            adj[i].sort_unstable();
            edge_count += adj[i].len();
        }
        let weights = self
            .weights
            .as_ref()
            .map(|w| vertices.iter().map(|&v| w[v]).collect::<Vec<_>>())
            .filter(|w| w.iter().any(|&x| x != 1.0));
        Graph {
            adj,
            edge_count: edge_count / 2,
            weights,
        }
    }

    /// Single-source BFS distances; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Eccentricity of `v`, or `None` if the graph is disconnected.
    pub fn eccentricity(&self, v: Vertex) -> Option<usize> {
        let mut ecc = 0;
        for d in self.bfs_distances(v) {
            ecc = ecc.max(d?);
        }
        Some(ecc)
    }

    /// Marks for a vertex set, sized to this graph.
    pub fn vertex_set<I: IntoIterator<Item = Vertex>>(&self, vertices: I) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.n());
        set.extend(vertices);
        set
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A proper 2-colouring. Within each component the lowest-index vertex is
/// on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn side(&self, v: Vertex) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn left(&self) -> Vec<Vertex> {
        self.members(Side::Left)
    }

    pub fn right(&self) -> Vec<Vertex> {
        self.members(Side::Right)
    }

    fn members(&self, s: Side) -> Vec<Vertex> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }
}

/// Two-colours `g`, or returns an odd cycle (in cycle order) as evidence
/// that no colouring exists.
pub fn bipartition(g: &Graph) -> Result<Bipartition, GraphError> {
    let n = g.n();
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::Left);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(su.flip());
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => {
                        return Err(GraphError::NotBipartite {
                            cycle: odd_cycle(u, w, &parent, &depth),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Bipartition {
        side: side.into_iter().map(Option::unwrap).collect(),
    })
}

/// Closes the BFS-tree paths from `a` and `b` at their lowest common ancestor.
fn odd_cycle(a: Vertex, b: Vertex, parent: &[usize], depth: &[usize]) -> Vec<Vertex> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// BFS distance strata `N_0 = {root}, N_1, ..., N_k` of the root's
/// component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Levels {
    root: Vertex,
    strata: Vec<Vec<Vertex>>,
    level_of: Vec<Option<usize>>,
    parent: Vec<Option<Vertex>>,
}

impl Levels {
    pub fn root(&self) -> Vertex {
        self.root
    }

    /// Index of the last nonempty stratum.
    pub fn depth(&self) -> usize {
        self.strata.len() - 1
    }

    /// `N_i`; empty past the last stratum.
    pub fn stratum(&self, i: usize) -> &[Vertex] {
        self.strata.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn strata(&self) -> &[Vec<Vertex>] {
        &self.strata
    }

    pub fn level_of(&self, v: Vertex) -> Option<usize> {
        self.level_of[v]
    }

    #[inline]
    pub fn in_level(&self, v: Vertex, i: usize) -> bool {
        self.level_of[v] == Some(i)
    }

    pub fn is_reachable(&self, v: Vertex) -> bool {
        self.level_of[v].is_some()
    }

    /// Shortest path from `v` back to the root, starting at `v`.
    pub fn path_to_root(&self, v: Vertex) -> Vec<Vertex> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path
    }

    /// `N_i^*`: members of `N_i` with a neighbour in `N_{i+1}`.
    pub fn star(&self, g: &Graph, i: usize) -> Vec<Vertex> {
        self.stratum(i)
            .iter()
            .copied()
            .filter(|&x| g.neighbors(x).iter().any(|&y| self.in_level(y, i + 1)))
            .collect()
    }

    /// `N_i^0`: members of `N_i` without a neighbour in `N_{i+1}`.
    pub fn zero(&self, g: &Graph, i: usize) -> Vec<Vertex> {
        self.stratum(i)
            .iter()
            .copied()
            .filter(|&x| !g.neighbors(x).iter().any(|&y| self.in_level(y, i + 1)))
            .collect()
    }
}

pub fn distance_levels(g: &Graph, root: Vertex) -> Levels {
    let n = g.n();
    let mut level_of = vec![None; n];
    let mut parent = vec![None; n];
    let mut strata = vec![vec![root]];
    level_of[root] = Some(0);
    loop {
        let i = strata.len() - 1;
        let mut next = Vec::new();
        for &u in &strata[i] {
            for &w in g.neighbors(u) {
                if level_of[w].is_none() {
                    level_of[w] = Some(i + 1);
                    parent[w] = Some(u);
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        strata.push(next);
    }
    Levels {
        root,
        strata,
        level_of,
        parent,
    }
}

/// `G^2`: same vertices, `xy` an edge iff `1 <= d(x, y) <= 2`.
pub fn square(g: &Graph) -> Graph {
    let n = g.n();
    let mut stamp = vec![usize::MAX; n];
    let mut adj = Vec::with_capacity(n);
    let mut edge_count = 0;
    for v in 0..n {
        stamp[v] = v;
        let mut list = Vec::new();
        for &u in g.neighbors(v) {
            if stamp[u] != v {
                stamp[u] = v;
                list.push(u);
            }
            for &w in g.neighbors(u) {
                if stamp[w] != v {
                    stamp[w] = v;
                    list.push(w);
                }
            }
        }
        list.sort_unstable();
        edge_count += list.len();
        adj.push(list);
    }
    Graph {
        adj,
        edge_count: edge_count / 2,
        weights: g.weights.clone(),
    }
}

/// Finds a homogeneous set (a module with at least two vertices that is not
/// all of `V`), or `None` when `g` is prime.
///
/// For every pair `{a, b}` the smallest module containing it is grown by
/// repeatedly absorbing a vertex that distinguishes the current set. The
/// first pair whose closure stays proper wins.
pub fn find_homogeneous_set(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let mut inside = vec![false; n];
    let mut hits = vec![0usize; n];
    for a in 0..n {
        for b in a + 1..n {
            if let Some(module) = module_closure(g, a, b, &mut inside, &mut hits) {
                return Some(module);
            }
        }
    }
    None
}

fn module_closure(
    g: &Graph,
    a: Vertex,
    b: Vertex,
    inside: &mut [bool],
    hits: &mut [usize],
) -> Option<Vec<Vertex>> {
    let n = g.n();
    inside.fill(false);
    hits.fill(0);
    let mut grow = Closure {
        g,
        inside,
        hits,
        members: Vec::new(),
        full: Vec::new(),
        pending: Vec::new(),
    };
    grow.absorb(a);
    grow.full = g.neighbors(a).iter().copied().filter(|&w| w != b).collect();
    grow.absorb(b);
    while let Some(x) = grow.pending.pop() {
        let h = grow.hits[x];
        if grow.inside[x] || h == 0 || h == grow.members.len() {
            continue;
        }
        grow.absorb(x);
        if grow.members.len() == n {
            return None;
        }
    }
    if grow.members.len() == n {
        return None;
    }
    let mut members = grow.members;
    members.sort_unstable();
    Some(members)
}

struct Closure<'a> {
    g: &'a Graph,
    inside: &'a mut [bool],
    hits: &'a mut [usize],
    members: Vec<Vertex>,
    /// Outside vertices adjacent to every member so far.
    full: Vec<Vertex>,
    /// Outside vertices that may distinguish the current members.
    pending: Vec<Vertex>,
}

impl Closure<'_> {
    fn absorb(&mut self, x: Vertex) {
        self.inside[x] = true;
        self.members.push(x);
        let size = self.members.len();
        for &w in self.g.neighbors(x) {
            self.hits[w] += 1;
            if !self.inside[w] && self.hits[w] == 1 && size > 1 {
                self.pending.push(w);
            }
        }
        let (inside, hits, pending) = (&*self.inside, &*self.hits, &mut self.pending);
        self.full.retain(|&w| {
            if inside[w] {
                false
            } else if hits[w] == size {
                true
            } else {
                pending.push(w);
                false
            }
        });
    }
}

/// A vertex of minimum eccentricity (lowest index on ties). Errors when the
/// graph is disconnected, or when that eccentricity exceeds `t / 2`, which
/// certifies that `g` contains an induced `P_t`.
pub fn find_central_vertex(g: &Graph, t: usize) -> Result<Vertex, GraphError> {
    if g.n() == 0 || !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let (vertex, eccentricity) = (0..g.n())
        .map(|v| (v, g.eccentricity(v).expect("connected")))
        .min_by_key(|&(v, e)| (e, v))
        .unwrap();
    if eccentricity > t / 2 {
        return Err(GraphError::EccentricityBoundViolated {
            vertex,
            eccentricity,
            bound: t / 2,
        });
    }
    Ok(vertex)
}

/// Largest BFS distance over all pairs.
pub fn diameter(g: &Graph) -> Result<usize, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok((0..g.n())
        .map(|v| g.eccentricity(v).expect("connected"))
        .max()
        .unwrap_or(0))
}

/// Convenience constructors for the small graphs used throughout the tests
/// and by the named generators.
pub mod named {
    use super::{Graph, Vertex};

    pub fn path(k: usize) -> Graph {
        Graph::new(k, (1..k).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(k: usize) -> Graph {
        assert!(k >= 3, "cycles need at least three vertices");
        Graph::new(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
    }

    /// `K_{a,b}` with the `a` side first.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(
            a + b,
            (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))),
        )
        .unwrap()
    }

    /// `S_{i,j,k}`: centre 0, then the three legs in order, each listed
    /// outward from the centre.
    pub fn spider(legs: [usize; 3]) -> Graph {
        let n = 1 + legs.iter().sum::<usize>();
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        let mut next = 1;
        for len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::new(n, edges).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(Graph::new(3, [(0, 0)]), Err(GraphError::SelfLoop(0))));
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::OutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn build_dedups_and_sorts() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.neighbors(0), &[1, 3]);
        assert_eq!(g.neighbors(3), &[0, 2]);
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn bipartition_examples() {
        let c4 = cycle(4);
        let b = bipartition(&c4).unwrap();
        assert_eq!(b.left(), vec![0, 2]);
        assert_eq!(b.right(), vec![1, 3]);

        let p3 = path(3);
        let b = bipartition(&p3).unwrap();
        assert_eq!(b.left(), vec![0, 2]);
        assert_eq!(b.side(1), Side::Right);

        match bipartition(&cycle(5)) {
            Err(GraphError::NotBipartite { cycle }) => {
                assert_eq!(cycle.len(), 5);
                for i in 0..5 {
                    assert!(cycle_edge(&cycle, i));
                }
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    fn cycle_edge(cycle: &[Vertex], i: usize) -> bool {
        let g = super::named::cycle(5);
        g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()])
    }

    #[test]
    fn odd_cycle_witness_in_larger_graph() {
        // triangle hanging off a path
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (4, 5)]).unwrap();
        let Err(GraphError::NotBipartite { cycle }) = bipartition(&g) else {
            panic!("triangle missed");
        };
        assert_eq!(cycle.len() % 2, 1);
        for i in 0..cycle.len() {
            assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    #[test]
    fn levels_examples() {
        let lv = distance_levels(&path(5), 0);
        assert_eq!(lv.strata(), &[vec![0], vec![1], vec![2], vec![3], vec![4]]);

        let lv = distance_levels(&cycle(6), 2);
        let sizes: Vec<_> = lv.strata().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 2, 1]);

        let lv = distance_levels(&star(3), 0);
        assert_eq!(lv.stratum(1), &[1, 2, 3]);
        assert_eq!(lv.depth(), 1);
        assert!(lv.stratum(7).is_empty());
    }

    #[test]
    fn levels_flag_unreachable() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let lv = distance_levels(&g, 0);
        assert!(lv.is_reachable(1));
        assert!(!lv.is_reachable(2));
        assert_eq!(lv.path_to_root(1), vec![1, 0]);
    }

    #[test]
    fn star_and_zero_partition_levels() {
        let g = path(5);
        let lv = distance_levels(&g, 0);
        assert_eq!(lv.star(&g, 3), vec![3]);
        assert_eq!(lv.zero(&g, 4), vec![4]);
        let g = spider([1, 1, 2]);
        let lv = distance_levels(&g, 0);
        assert_eq!(lv.star(&g, 1), vec![3]);
        assert_eq!(lv.zero(&g, 1), vec![1, 2]);
    }

    #[test]
    fn square_examples() {
        let sq = square(&path(4));
        let edges: Vec<_> = sq.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);

        let sq = square(&Graph::empty(1));
        assert_eq!(sq.n(), 1);
        assert_eq!(sq.edge_count(), 0);

        let sq = square(&cycle(6));
        for v in 0..6 {
            assert_eq!(sq.degree(v), 4);
            assert!(!sq.has_edge(v, (v + 3) % 6));
        }
    }

    #[test]
    fn homogeneous_examples() {
        assert_eq!(find_homogeneous_set(&path(4)), None);
        assert_eq!(find_homogeneous_set(&path(2)), None);
        let k23 = complete_bipartite(2, 3);
        let m = find_homogeneous_set(&k23).expect("twins are a module");
        assert!(is_module(&k23, &m));
        assert_eq!(m.len(), 2);
    }

    pub(crate) fn is_module(g: &Graph, m: &[Vertex]) -> bool {
        if m.len() < 2 || m.len() == g.n() {
            return false;
        }
        (0..g.n()).filter(|v| !m.contains(v)).all(|v| {
            let seen = m.iter().filter(|&&x| g.has_edge(v, x)).count();
            seen == 0 || seen == m.len()
        })
    }

    #[test]
    fn homogeneous_set_brute_force_agreement() {
        // every graph on 5 vertices
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let g = Graph::new(
                5,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p),
            )
            .unwrap();
            let brute = (0u32..32).any(|s| {
                let m: Vec<usize> = (0..5).filter(|&v| s >> v & 1 == 1).collect();
                is_module(&g, &m)
            });
            let found = find_homogeneous_set(&g);
            assert_eq!(found.is_some(), brute, "mask {mask:#x}");
            if let Some(m) = found {
                assert!(is_module(&g, &m));
            }
        }
    }

    #[test]
    fn central_vertex_examples() {
        assert_eq!(find_central_vertex(&path(6), 7), Ok(2));
        assert_eq!(find_central_vertex(&star(5), 7), Ok(0));
        assert_eq!(
            find_central_vertex(&path(8), 7),
            Err(GraphError::EccentricityBoundViolated {
                vertex: 3,
                eccentricity: 4,
                bound: 3
            })
        );
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(find_central_vertex(&g, 7), Err(GraphError::Disconnected));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&path(5)), Ok(4));
        assert_eq!(diameter(&cycle(6)), Ok(3));
        assert_eq!(diameter(&Graph::empty(2)), Err(GraphError::Disconnected));
    }

    #[test]
    fn weights_round_through_induced_subgraphs() {
        let g = path(3).with_weights(vec![1.0, 2.5, 1.0]).unwrap();
        assert_eq!(g.weight(1), 2.5);
        let h = g.induced_subgraph(&[1, 2]);
        assert_eq!(h.weights(), Some(&[2.5, 1.0][..]));
        let unit = path(3).with_weights(vec![1.0; 3]).unwrap();
        assert_eq!(unit, path(3));
    }
}
