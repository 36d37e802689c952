//! Induced-subgraph recognition for the fixed patterns the solvers are
//! parameterised by, plus a class report used for dispatch.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bipartition, named, Graph, GraphError, Vertex};

pub const DEFAULT_PATTERN_CAP: usize = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NamedSmall {
    /// `C_4` with a pendant vertex on one cycle vertex.
    A4,
    /// Domino (two `C_4`s sharing an edge) with a pendant `P_3` hung off a
    /// degree-2 vertex of the second square.
    H4,
    K23,
    K33,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    /// `P_k`, `k` vertices.
    Path(usize),
    /// `copies` disjoint `P_len`.
    DisjointPaths { copies: usize, len: usize },
    /// `S_{i,j,k}`: centre plus legs of `i`, `j` and `k` edges.
    Spider(usize, usize, usize),
    Cycle(usize),
    Named(NamedSmall),
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Pattern::Path(k) => write!(f, "P{k}"),
            Pattern::DisjointPaths { copies, len } => write!(f, "{copies}P{len}"),
            Pattern::Spider(i, j, k) => write!(f, "S{i},{j},{k}"),
            Pattern::Cycle(m) => write!(f, "C{m}"),
            Pattern::Named(NamedSmall::A4) => f.write_str("A4"),
            Pattern::Named(NamedSmall::H4) => f.write_str("H4"),
            Pattern::Named(NamedSmall::K23) => f.write_str("K2,3"),
            Pattern::Named(NamedSmall::K33) => f.write_str("K3,3"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern {pattern} has {size} vertices, above the cap of {cap}")]
    PatternTooLarge {
        pattern: Pattern,
        size: usize,
        cap: usize,
    },
    #[error("pattern {0} has a parameter out of range")]
    InvalidPattern(Pattern),
    #[error("cannot parse pattern {0:?}")]
    Parse(String),
}

impl std::str::FromStr for Pattern {
    type Err = PatternError;

    /// Accepts `P7`, `3P4`, `C6`, `S2,2,4`, `A4`, `H4`, `K2,3`, `K3,3`
    /// (case-insensitive, `_` allowed after the letter).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PatternError::Parse(s.to_string());
        let t = s.trim().to_ascii_uppercase().replace('_', "");
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
        let pattern = match t.as_str() {
            "A4" => Pattern::Named(NamedSmall::A4),
            "H4" => Pattern::Named(NamedSmall::H4),
            "K2,3" | "K23" => Pattern::Named(NamedSmall::K23),
            "K3,3" | "K33" => Pattern::Named(NamedSmall::K33),
            _ => {
                if let Some(rest) = t.strip_prefix('S') {
                    let legs: Vec<usize> = rest.split(',').map(num).collect::<Result<_, _>>()?;
                    let [i, j, k] = legs[..] else { return Err(bad()) };
                    Pattern::Spider(i, j, k)
                } else if let Some(rest) = t.strip_prefix('C') {
                    Pattern::Cycle(num(rest)?)
                } else if let Some(pos) = t.find('P') {
                    let len = num(&t[pos + 1..])?;
                    if pos == 0 {
                        Pattern::Path(len)
                    } else {
                        Pattern::DisjointPaths {
                            copies: num(&t[..pos])?,
                            len,
                        }
                    }
                } else {
                    return Err(bad());
                }
            }
        };
        pattern.validate()?;
        Ok(pattern)
    }
}

impl Pattern {
    pub fn size(&self) -> usize {
        match *self {
            Pattern::Path(k) => k,
            Pattern::DisjointPaths { copies, len } => copies * len,
            Pattern::Spider(i, j, k) => 1 + i + j + k,
            Pattern::Cycle(m) => m,
            Pattern::Named(NamedSmall::A4) => 5,
            Pattern::Named(NamedSmall::H4) => 8,
            Pattern::Named(NamedSmall::K23) => 5,
            Pattern::Named(NamedSmall::K33) => 6,
        }
    }

    fn validate(&self) -> Result<(), PatternError> {
        let ok = match *self {
            Pattern::Path(k) => k >= 1,
            Pattern::DisjointPaths { copies, len } => copies >= 1 && len >= 1,
            Pattern::Spider(i, j, k) => i >= 1 && j >= 1 && k >= 1,
            Pattern::Cycle(m) => m >= 3,
            Pattern::Named(_) => true,
        };
        if ok {
            Ok(())
        } else {
            Err(PatternError::InvalidPattern(*self))
        }
    }

    pub fn graph(&self) -> Graph {
        match *self {
            Pattern::Path(k) => named::path(k),
            Pattern::DisjointPaths { copies, len } => Graph::new(
                copies * len,
                (0..copies).flat_map(|c| (1..len).map(move |i| (c * len + i - 1, c * len + i))),
            )
            .unwrap(),
            Pattern::Spider(i, j, k) => named::spider([i, j, k]),
            Pattern::Cycle(m) => named::cycle(m),
            Pattern::Named(NamedSmall::A4) => {
                Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)]).unwrap()
            }
            // v1 y1 v2 v4 x3 v3 x5 v5
            Pattern::Named(NamedSmall::H4) => Graph::new(
                8,
                [
                    (0, 3),
                    (0, 1),
                    (1, 4),
                    (4, 3),
                    (1, 2),
                    (2, 5),
                    (5, 4),
                    (5, 6),
                    (6, 7),
                ],
            )
            .unwrap(),
            Pattern::Named(NamedSmall::K23) => named::complete_bipartite(2, 3),
            Pattern::Named(NamedSmall::K33) => named::complete_bipartite(3, 3),
        }
    }
}

/// Host vertices realising a pattern, listed in pattern-vertex order.
pub type Witness = Vec<Vertex>;

/// `true` iff `w` is an induced copy of `pattern` in `g`.
pub fn is_induced_copy(g: &Graph, pattern: &Graph, w: &[Vertex]) -> bool {
    if w.len() != pattern.n() {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !w.iter().all(|&v| v < g.n() && seen.insert(v)) {
        return false;
    }
    (0..w.len()).all(|a| (a + 1..w.len()).all(|b| g.has_edge(w[a], w[b]) == pattern.has_edge(a, b)))
}

pub fn contains_induced(g: &Graph, p: Pattern) -> Result<Option<Witness>, PatternError> {
    contains_induced_capped(g, p, DEFAULT_PATTERN_CAP)
}

pub fn contains_induced_capped(
    g: &Graph,
    p: Pattern,
    cap: usize,
) -> Result<Option<Witness>, PatternError> {
    p.validate()?;
    if p.size() > cap {
        return Err(PatternError::PatternTooLarge {
            pattern: p,
            size: p.size(),
            cap,
        });
    }
    let symmetric_copies = matches!(p, Pattern::DisjointPaths { .. });
    Ok(find_induced(g, &p.graph(), symmetric_copies))
}

/// Backtracking induced-subgraph search. Pattern vertices are placed in BFS
/// order per component so that each one after a component's first is
/// anchored to an already placed neighbour.
///
/// `symmetric_copies` promises that the pattern's components are identical
/// and interchangeable, which allows ordering their images.
pub fn find_induced(g: &Graph, pattern: &Graph, symmetric_copies: bool) -> Option<Witness> {
    let k = pattern.n();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > g.n() {
        return None;
    }
    let mut order = Vec::with_capacity(k);
    let mut anchor = vec![None; k];
    let mut comp_start = Vec::new();
    let mut placed = vec![false; k];
    for s in 0..k {
        if placed[s] {
            continue;
        }
        comp_start.push(order.len());
        placed[s] = true;
        order.push(s);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in pattern.neighbors(u) {
                if !placed[w] {
                    placed[w] = true;
                    anchor[w] = Some(u);
                    order.push(w);
                }
            }
        }
    }
    let mut search = Matcher {
        g,
        pattern,
        order,
        anchor,
        comp_start,
        symmetric_copies,
        image: vec![usize::MAX; k],
        used: vec![false; g.n()],
    };
    if search.place(0) {
        Some(search.image)
    } else {
        None
    }
}

struct Matcher<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    order: Vec<Vertex>,
    anchor: Vec<Option<Vertex>>,
    comp_start: Vec<usize>,
    symmetric_copies: bool,
    image: Vec<Vertex>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn place(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let p = self.order[pos];
        let candidates: Vec<Vertex> = match self.anchor[p] {
            Some(a) => self.g.neighbors(self.image[a]).to_vec(),
            None => {
                let floor = if self.symmetric_copies {
                    let c = self.comp_start.iter().position(|&s| s == pos).unwrap();
                    if c == 0 {
                        0
                    } else {
                        self.image[self.order[self.comp_start[c - 1]]] + 1
                    }
                } else {
                    0
                };
                (floor..self.g.n()).collect()
            }
        };
        let need = self.pattern.degree(p);
        for h in candidates {
            if self.used[h] || self.g.degree(h) < need {
                continue;
            }
            let consistent = self.order[..pos].iter().all(|&q| {
                self.g.has_edge(self.image[q], h) == self.pattern.has_edge(q, p)
            });
            if !consistent {
                continue;
            }
            self.image[p] = h;
            self.used[h] = true;
            if self.place(pos + 1) {
                return true;
            }
            self.used[h] = false;
        }
        self.image[p] = usize::MAX;
        false
    }
}

/// Shortest induced cycle of even length `>= min_len` in a bipartite graph,
/// in cycle order.
pub fn shortest_induced_even_cycle_at_least(
    g: &Graph,
    min_len: usize,
) -> Result<Option<Witness>, GraphError> {
    bipartition(g)?;
    let lo = min_len.max(4).next_multiple_of(2);
    let Some(first) = find_induced_cycle(g, |len| len >= lo && len % 2 == 0, g.n()) else {
        return Ok(None);
    };
    let mut len = lo;
    while len < first.len() {
        if let Some(c) = find_induced_cycle(g, |l| l == len, len) {
            return Ok(Some(c));
        }
        len += 2;
    }
    Ok(Some(first))
}

/// An induced cycle of length at least 5, if any.
pub fn contains_hole(g: &Graph) -> Option<Witness> {
    find_induced_cycle(g, |len| len >= 5, g.n())
}

/// Depth-first search for an induced cycle whose length satisfies `accept`,
/// rooted at its smallest vertex, extending only through larger vertices.
fn find_induced_cycle(
    g: &Graph,
    accept: impl Fn(usize) -> bool,
    max_len: usize,
) -> Option<Witness> {
    let n = g.n();
    let mut hits = vec![0u32; n];
    let mut on_path = vec![false; n];
    let mut path = Vec::new();
    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        for &w in g.neighbors(s) {
            hits[w] += 1;
        }
        let found = extend_cycle(g, s, &accept, max_len, &mut path, &mut on_path, &mut hits);
        for &w in g.neighbors(s) {
            hits[w] -= 1;
        }
        on_path[s] = false;
        if found {
            return Some(path.clone());
        }
    }
    None
}

fn extend_cycle(
    g: &Graph,
    s: Vertex,
    accept: &impl Fn(usize) -> bool,
    max_len: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    hits: &mut [u32],
) -> bool {
    let last = *path.last().unwrap();
    let closing_ok = path.len() >= 2;
    for &w in g.neighbors(last) {
        if w <= s || on_path[w] {
            continue;
        }
        let touches_start = path.len() > 1 && g.has_edge(w, s);
        if touches_start {
            // w closes the cycle; it must see exactly `last` and `s`
            if closing_ok && hits[w] == 2 && accept(path.len() + 1) {
                path.push(w);
                return true;
            }
            continue;
        }
        if hits[w] != 1 || path.len() + 2 > max_len {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        for &x in g.neighbors(w) {
            hits[x] += 1;
        }
        if extend_cycle(g, s, accept, max_len, path, on_path, hits) {
            return true;
        }
        for &x in g.neighbors(w) {
            hits[x] -= 1;
        }
        on_path[w] = false;
        path.pop();
    }
    false
}

/// Pattern membership with an optional witness for a negative answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Membership {
    fn free(witness: Option<Witness>) -> Self {
        Membership {
            holds: witness.is_none(),
            witness,
        }
    }

    fn implied_free() -> Self {
        Membership {
            holds: true,
            witness: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearForestMembership {
    pub ell: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub n: usize,
    pub m: usize,
    pub bipartite: Membership,
    pub connected: bool,
    pub maxdeg_le3: Membership,
    pub p5free: Membership,
    pub p6free: Membership,
    pub p7free: Membership,
    pub p9free: Membership,
    pub s222free: Membership,
    pub s223free: Membership,
    pub s224free: Membership,
    pub s124free: Membership,
    pub lp4free: Vec<LinearForestMembership>,
    pub chordal_bipartite: Membership,
    pub h4free: Membership,
    /// `holds` means an induced `K_{3,3}` is present.
    pub k33present: Membership,
    /// Vertices of degree 3 that lie in an induced `K_{2,3}` on its
    /// three-vertex side.
    pub k23_degree3_exclusions: Vec<Vertex>,
}

impl ClassReport {
    /// Smallest `ell` up to the cap for which the graph is `ell P_4`-free.
    pub fn min_lp4(&self) -> Option<usize> {
        self.lp4free.iter().find(|m| m.holds).map(|m| m.ell)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub lp4_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { lp4_cap: 3 }
    }
}

pub fn classify(g: &Graph) -> ClassReport {
    classify_with(g, ClassifyOptions::default())
}

/// Builds the report, skipping searches whose answer follows from an earlier
/// one (for example `P_5`-free implies `P_7`-free).
pub fn classify_with(g: &Graph, opts: ClassifyOptions) -> ClassReport {
    let find = |p: Pattern| contains_induced(g, p).expect("built-in patterns fit the cap");
    let bip = bipartition(g);
    let bipartite = Membership {
        holds: bip.is_ok(),
        witness: match &bip {
            Err(GraphError::NotBipartite { cycle }) => Some(cycle.clone()),
            _ => None,
        },
    };
    let maxdeg_le3 = {
        let v = (0..g.n()).find(|&v| g.degree(v) > 3);
        Membership {
            holds: v.is_none(),
            witness: v.map(|v| g.closed_neighborhood(v)),
        }
    };

    let chain = |ks: &[usize]| {
        let mut out = Vec::new();
        let mut free = false;
        for &k in ks {
            out.push(if free {
                Membership::implied_free()
            } else {
                let m = Membership::free(find(Pattern::Path(k)));
                free = m.holds;
                m
            });
        }
        out
    };
    let paths = chain(&[5, 6, 7, 9]);

    let s222free = Membership::free(find(Pattern::Spider(2, 2, 2)));
    let s223free = if s222free.holds {
        Membership::implied_free()
    } else {
        Membership::free(find(Pattern::Spider(2, 2, 3)))
    };
    let s124free = Membership::free(find(Pattern::Spider(1, 2, 4)));
    let s224free = if s223free.holds || s124free.holds {
        Membership::implied_free()
    } else {
        Membership::free(find(Pattern::Spider(2, 2, 4)))
    };

    let mut lp4free = Vec::new();
    let mut free = false;
    for ell in 1..=opts.lp4_cap {
        let witness = if free {
            None
        } else {
            find(Pattern::DisjointPaths { copies: ell, len: 4 })
        };
        free = witness.is_none();
        lp4free.push(LinearForestMembership {
            ell,
            holds: free,
            witness,
        });
    }

    let chordal_bipartite = if bipartite.holds {
        Membership::free(shortest_induced_even_cycle_at_least(g, 6).expect("bipartite"))
    } else {
        Membership {
            holds: false,
            witness: bipartite.witness.clone(),
        }
    };

    let k33 = find(Pattern::Named(NamedSmall::K33));
    let k33present = Membership {
        holds: k33.is_some(),
        witness: k33,
    };

    ClassReport {
        n: g.n(),
        m: g.edge_count(),
        bipartite,
        connected: g.is_connected(),
        maxdeg_le3,
        p5free: paths[0].clone(),
        p6free: paths[1].clone(),
        p7free: paths[2].clone(),
        p9free: paths[3].clone(),
        s222free,
        s223free,
        s224free,
        s124free,
        lp4free,
        chordal_bipartite,
        h4free: Membership::free(find(Pattern::Named(NamedSmall::H4))),
        k33present,
        k23_degree3_exclusions: k23_degree3_exclusions(g),
    }
}

/// The two degree-3 vertices of an induced `K_{2,3}` (twins with three
/// common neighbours). Neither can be in an e.d.s.: if one were, the other
/// would have no admissible dominator.
pub fn k23_degree3_exclusions(g: &Graph) -> Vec<Vertex> {
    (0..g.n())
        .filter(|&a| {
            g.degree(a) == 3
                && g.neighbors(a).iter().any(|&c| {
                    g.neighbors(c)
                        .iter()
                        .any(|&b| b != a && g.neighbors(b) == g.neighbors(a))
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named::*, square};

    fn brute_contains(g: &Graph, p: &Graph) -> bool {
        fn rec(g: &Graph, p: &Graph, start: usize, chosen: &mut Vec<Vertex>) -> bool {
            if chosen.len() == p.n() {
                return permutations_match(g, p, chosen);
            }
            for v in start..g.n() {
                chosen.push(v);
                if rec(g, p, v + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        fn permutations_match(g: &Graph, p: &Graph, set: &[Vertex]) -> bool {
            let sub = g.induced_subgraph(set);
            if sub.edge_count() != p.edge_count() {
                return false;
            }
            let mut perm: Vec<usize> = (0..set.len()).collect();
            loop {
                if (0..perm.len()).all(|a| {
                    (a + 1..perm.len()).all(|b| sub.has_edge(perm[a], perm[b]) == p.has_edge(a, b))
                }) {
                    return true;
                }
                if !next_permutation(&mut perm) {
                    return false;
                }
            }
        }
        rec(g, p, 0, &mut Vec::new())
    }

    fn next_permutation(a: &mut [usize]) -> bool {
        let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
            return false;
        };
        let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
        a.swap(i - 1, j);
        a[i..].reverse();
        true
    }

    #[test]
    fn pattern_parsing() {
        assert_eq!("P7".parse(), Ok(Pattern::Path(7)));
        assert_eq!("2P4".parse(), Ok(Pattern::DisjointPaths { copies: 2, len: 4 }));
        assert_eq!("S2,2,4".parse(), Ok(Pattern::Spider(2, 2, 4)));
        assert_eq!("s_1,2,4".parse(), Ok(Pattern::Spider(1, 2, 4)));
        assert_eq!("C6".parse(), Ok(Pattern::Cycle(6)));
        assert_eq!("K2,3".parse(), Ok(Pattern::Named(NamedSmall::K23)));
        assert!("S0,1,1".parse::<Pattern>().is_err());
        assert!("Q5".parse::<Pattern>().is_err());
        for p in ["P7", "2P4", "S2,2,4", "C6", "A4", "H4", "K2,3", "K3,3"] {
            assert_eq!(p.parse::<Pattern>().unwrap().to_string(), p);
        }
    }

    #[test]
    fn named_patterns_have_expected_shape() {
        let h4 = Pattern::Named(NamedSmall::H4).graph();
        assert_eq!((h4.n(), h4.edge_count()), (8, 9));
        assert!(bipartition(&h4).is_ok());
        let a4 = Pattern::Named(NamedSmall::A4).graph();
        assert_eq!((a4.n(), a4.edge_count()), (5, 5));
        let s = Pattern::Spider(2, 2, 4).graph();
        assert_eq!((s.n(), s.edge_count()), (9, 8));
    }

    #[test]
    fn contains_induced_examples() {
        let w = contains_induced(&path(7), Pattern::Path(7)).unwrap().unwrap();
        assert!(w == (0..7).collect::<Vec<_>>() || w == (0..7).rev().collect::<Vec<_>>());
        assert_eq!(contains_induced(&cycle(6), Pattern::Spider(1, 1, 1)).unwrap(), None);
        let s224 = spider([2, 2, 4]);
        let w = contains_induced(&s224, Pattern::Spider(1, 2, 4)).unwrap().unwrap();
        assert!(is_induced_copy(&s224, &Pattern::Spider(1, 2, 4).graph(), &w));
        assert!(matches!(
            contains_induced(&path(20), Pattern::Path(14)),
            Err(PatternError::PatternTooLarge { .. })
        ));
    }

    #[test]
    fn induced_means_induced() {
        // C_4 contains P_3 but no induced P_4
        assert!(contains_induced(&cycle(4), Pattern::Path(3)).unwrap().is_some());
        assert_eq!(contains_induced(&cycle(4), Pattern::Path(4)).unwrap(), None);
        // 2P_2 lives in P_5 and C_6 but not in C_4
        let two_k2 = Pattern::DisjointPaths { copies: 2, len: 2 };
        assert!(contains_induced(&path(5), two_k2).unwrap().is_some());
        assert!(contains_induced(&cycle(6), two_k2).unwrap().is_some());
        assert_eq!(contains_induced(&cycle(4), two_k2).unwrap(), None);
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        let patterns = [
            Pattern::Path(4),
            Pattern::Path(5),
            Pattern::Spider(1, 1, 2),
            Pattern::Cycle(4),
            Pattern::DisjointPaths { copies: 2, len: 2 },
            Pattern::Named(NamedSmall::A4),
        ];
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..120 {
            let n = 5 + round % 4;
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if next() % 100 < 35 {
                        edges.push((a, b));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            for p in patterns {
                let pg = p.graph();
                let got = contains_induced(&g, p).unwrap();
                assert_eq!(got.is_some(), brute_contains(&g, &pg), "{p} in round {round}");
                if let Some(w) = got {
                    assert!(is_induced_copy(&g, &pg, &w));
                }
            }
        }
    }

    #[test]
    fn even_cycle_examples() {
        let c = shortest_induced_even_cycle_at_least(&cycle(6), 6).unwrap().unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(
            shortest_induced_even_cycle_at_least(&complete_bipartite(2, 3), 6).unwrap(),
            None
        );
        assert_eq!(shortest_induced_even_cycle_at_least(&spider([2, 2, 4]), 4).unwrap(), None);
        assert!(matches!(
            shortest_induced_even_cycle_at_least(&cycle(5), 4),
            Err(GraphError::NotBipartite { .. })
        ));
    }

    #[test]
    fn shortest_cycle_is_shortest() {
        // C_8 and C_4 sharing a vertex
        let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.extend([(0, 8), (8, 9), (9, 10), (10, 0)]);
        let g = Graph::new(11, edges).unwrap();
        assert_eq!(shortest_induced_even_cycle_at_least(&g, 4).unwrap().unwrap().len(), 4);
        assert_eq!(shortest_induced_even_cycle_at_least(&g, 6).unwrap().unwrap().len(), 8);
    }

    #[test]
    fn hole_examples() {
        let c5 = contains_hole(&cycle(5)).unwrap();
        assert_eq!(c5.len(), 5);
        assert_eq!(contains_hole(&cycle(4)), None);
        assert_eq!(contains_hole(&complete_bipartite(3, 3)), None);
        let sq = square(&cycle(12));
        let hole = contains_hole(&sq).expect("square of C12 has a hole");
        let len = hole.len();
        for i in 0..len {
            assert!(sq.has_edge(hole[i], hole[(i + 1) % len]));
        }
        assert!(is_induced_copy(&sq, &cycle(len), &hole));
    }

    #[test]
    fn classify_examples() {
        let r = classify(&cycle(6));
        assert!(r.bipartite.holds && r.p7free.holds && r.s222free.holds);
        assert!(!r.p5free.holds);
        assert!(!r.chordal_bipartite.holds);

        let r = classify(&path(8));
        assert!(!r.p7free.holds);
        assert_eq!(r.p7free.witness.as_ref().unwrap().len(), 7);
        assert!(r.p9free.holds);
        assert!(r.chordal_bipartite.holds);

        let r = classify(&complete_bipartite(3, 3));
        assert!(r.k33present.holds);
        assert!(r.maxdeg_le3.holds);

        let r = classify(&spider([2, 2, 4]));
        assert!(!r.s224free.holds && !r.s124free.holds && !r.s222free.holds);
    }

    #[test]
    fn k23_exclusions() {
        assert_eq!(k23_degree3_exclusions(&complete_bipartite(2, 3)), vec![0, 1]);
        assert_eq!(k23_degree3_exclusions(&cycle(4)), Vec::<usize>::new());
        let k33 = complete_bipartite(3, 3);
        assert_eq!(k23_degree3_exclusions(&k33).len(), 6);
    }
}
