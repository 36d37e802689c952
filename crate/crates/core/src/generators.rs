//! Reproducible instance generators.
//!
//! All randomness comes from xoshiro256** seeded through SplitMix64
//! (`rand_xoshiro::Xoshiro256StarStar::seed_from_u64`). Derived draws are
//! fixed so that other implementations can reproduce instances exactly:
//!
//! * `bernoulli(p)`: `(next_u64 >> 11) * 2^-53 < p`
//! * `below(n)`: `(next_u64 as u128 * n) >> 64`
//! * shuffles are Fisher–Yates from the last position down, using `below`.

use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use thiserror::Error;

use crate::graph::{named, Graph, Vertex};
use crate::recognize::{contains_induced, Pattern, PatternError};
use crate::reductions::X3CInstance;

pub struct Rng(Xoshiro256StarStar);

impl Rng {
    pub fn seeded(seed: u64) -> Self {
        Rng(Xoshiro256StarStar::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    /// Uniform in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Spider(usize, usize, usize),
    CompleteBipartite(usize, usize),
}

impl NamedGraph {
    pub fn graph(&self) -> Graph {
        match *self {
            NamedGraph::Path(k) => named::path(k),
            NamedGraph::Cycle(k) => named::cycle(k),
            NamedGraph::Spider(i, j, k) => named::spider([i, j, k]),
            NamedGraph::CompleteBipartite(a, b) => named::complete_bipartite(a, b),
        }
    }
}

/// How the planted blocks are tied together by leaf–leaf edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// Last leaf of block `b` to the first leaf of block `b + 1`: a
    /// caterpillar.
    Path,
    /// Block 0 is the hub; every leaf of every other block is joined to
    /// every hub leaf.
    Star,
    /// A random spanning tree over the blocks plus extra edges.
    Random,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GenSpec {
    RandomBipartite {
        nx: usize,
        ny: usize,
        p: f64,
    },
    HFreeRejection {
        inner: Box<GenSpec>,
        pattern: Pattern,
        max_tries: u32,
    },
    /// One block per entry of `degrees`: a centre and that many private
    /// leaves. The centres form the planted e.d.s.
    PlantedEds {
        degrees: Vec<usize>,
        layout: Layout,
        extra_prob: f64,
        shuffle: bool,
    },
    RandomX3C {
        n: usize,
        m: usize,
    },
    Named(NamedGraph),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Generated {
    Graph {
        graph: Graph,
        planted: Option<Vec<Vertex>>,
    },
    X3C(X3CInstance),
}

impl Generated {
    pub fn into_graph(self) -> Option<Graph> {
        match self {
            Generated::Graph { graph, .. } => Some(graph),
            Generated::X3C(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("no {pattern}-free sample in {tries} tries")]
    RejectionExhausted { pattern: Pattern, tries: u32 },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

pub fn generate(spec: &GenSpec, seed: u64) -> Result<Generated, GenError> {
    let mut rng = Rng::seeded(seed);
    generate_with(spec, &mut rng)
}

pub fn generate_with(spec: &GenSpec, rng: &mut Rng) -> Result<Generated, GenError> {
    spec.validate()?;
    Ok(match spec {
        GenSpec::RandomBipartite { nx, ny, p } => Generated::Graph {
            graph: random_bipartite(*nx, *ny, *p, rng),
            planted: None,
        },
        GenSpec::HFreeRejection {
            inner,
            pattern,
            max_tries,
        } => {
            for _ in 0..*max_tries {
                let out = generate_with(inner, rng)?;
                let Generated::Graph { graph, .. } = &out else {
                    return Err(GenError::InvalidSpec("rejection needs a graph generator".into()));
                };
                if contains_induced(graph, *pattern)?.is_none() {
                    return Ok(out);
                }
            }
            return Err(GenError::RejectionExhausted {
                pattern: *pattern,
                tries: *max_tries,
            });
        }
        GenSpec::PlantedEds {
            degrees,
            layout,
            extra_prob,
            shuffle,
        } => {
            let (graph, planted) = planted(degrees, *layout, *extra_prob, *shuffle, rng);
            Generated::Graph {
                graph,
                planted: Some(planted),
            }
        }
        GenSpec::RandomX3C { n, m } => Generated::X3C(random_x3c(*n, *m, rng)),
        GenSpec::Named(g) => Generated::Graph {
            graph: g.graph(),
            planted: None,
        },
    })
}

impl GenSpec {
    fn validate(&self) -> Result<(), GenError> {
        let bad = |m: &str| Err(GenError::InvalidSpec(m.to_string()));
        match self {
            GenSpec::RandomBipartite { p, .. } | GenSpec::PlantedEds { extra_prob: p, .. }
                if !(0.0..=1.0).contains(p) =>
            {
                bad("probability outside [0, 1]")
            }
            GenSpec::PlantedEds { degrees, layout, .. } => {
                if degrees.is_empty() {
                    return bad("planted instance needs at least one block");
                }
                if *layout != Layout::Path || degrees.len() > 1 {
                    if degrees.iter().any(|&d| d == 0) {
                        return bad("linked blocks need at least one leaf each");
                    }
                }
                Ok(())
            }
            GenSpec::RandomX3C { n, m } if *m > 0 && *n < 3 => bad("triples need n >= 3"),
            GenSpec::Named(NamedGraph::Cycle(k)) if *k < 3 => bad("cycles need k >= 3"),
            _ => Ok(()),
        }
    }
}

/// Left vertices `0..nx`, right `nx..nx+ny`; pairs tested row by row.
pub fn random_bipartite(nx: usize, ny: usize, p: f64, rng: &mut Rng) -> Graph {
    let mut edges = Vec::new();
    for a in 0..nx {
        for b in 0..ny {
            if rng.bernoulli(p) {
                edges.push((a, nx + b));
            }
        }
    }
    Graph::new(nx + ny, edges).expect("in range")
}

fn planted(
    degrees: &[usize],
    layout: Layout,
    extra_prob: f64,
    shuffle: bool,
    rng: &mut Rng,
) -> (Graph, Vec<Vertex>) {
    // Block b: centre, then its leaves. `side[b]` is the centre's side.
    let mut centres = Vec::with_capacity(degrees.len());
    let mut leaves: Vec<Vec<Vertex>> = Vec::with_capacity(degrees.len());
    let mut next = 0;
    for &d in degrees {
        centres.push(next);
        leaves.push((next + 1..next + 1 + d).collect());
        next += 1 + d;
    }
    let n = next;
    let side: Vec<bool> = (0..degrees.len())
        .map(|b| match layout {
            Layout::Star => b != 0,
            _ => b % 2 == 1,
        })
        .collect();
    let mut edges = Vec::new();
    for b in 0..degrees.len() {
        for &l in &leaves[b] {
            edges.push((centres[b], l));
        }
    }
    match layout {
        Layout::Path => {
            for b in 1..degrees.len() {
                let (Some(&a), Some(&c)) = (leaves[b - 1].last(), leaves[b].first()) else {
                    continue;
                };
                edges.push((a, c));
            }
        }
        Layout::Star => {
            for b in 1..degrees.len() {
                for &l in &leaves[b] {
                    for &h in &leaves[0] {
                        edges.push((l, h));
                    }
                }
            }
        }
        Layout::Random => {
            for b in 1..degrees.len() {
                let earlier: Vec<usize> = (0..b).filter(|&a| side[a] != side[b]).collect();
                let a = earlier[rng.below(earlier.len())];
                let la = leaves[a][rng.below(leaves[a].len())];
                let lb = leaves[b][rng.below(leaves[b].len())];
                edges.push((la, lb));
            }
        }
    }
    if extra_prob > 0.0 {
        for a in 0..degrees.len() {
            for b in a + 1..degrees.len() {
                if side[a] == side[b] {
                    continue;
                }
                for &la in &leaves[a] {
                    for &lb in &leaves[b] {
                        if rng.bernoulli(extra_prob) {
                            edges.push((la, lb));
                        }
                    }
                }
            }
        }
    }
    let mut label: Vec<Vertex> = (0..n).collect();
    if shuffle {
        rng.shuffle(&mut label);
    }
    let graph = Graph::new(n, edges.into_iter().map(|(a, b)| (label[a], label[b])))
        .expect("planted edges are simple");
    let mut planted: Vec<Vertex> = centres.into_iter().map(|c| label[c]).collect();
    planted.sort_unstable();
    (graph, planted)
}

/// `m` triples, each three distinct elements drawn by partial Fisher–Yates.
pub fn random_x3c(n: usize, m: usize, rng: &mut Rng) -> X3CInstance {
    let mut triples = Vec::with_capacity(m);
    let mut pool: Vec<usize> = (0..n).collect();
    for _ in 0..m {
        for i in 0..3 {
            let j = i + rng.below(n - i);
            pool.swap(i, j);
        }
        triples.push([pool[0], pool[1], pool[2]]);
    }
    X3CInstance::new(n, triples).expect("distinct in-range elements")
}

impl FromStr for GenSpec {
    type Err = GenError;

    /// `named:P7|C6|S2,2,4|K2,3`, `bip:nx,ny,p`,
    /// `free:<pattern>:<tries>:<inner spec>`,
    /// `planted:<path|star|random>:d1,d2,...[:p[:noshuffle]]`, `x3c:n,m`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| GenError::InvalidSpec(format!("{s:?}: {why}"));
        let (kind, rest) = s.trim().split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let nums = |x: &str| -> Result<Vec<f64>, GenError> {
            x.split(',')
                .map(|t| t.trim().parse::<f64>().map_err(|_| bad("bad number")))
                .collect()
        };
        let int = |x: f64| -> Result<usize, GenError> {
            if x >= 0.0 && x.fract() == 0.0 {
                Ok(x as usize)
            } else {
                Err(bad("expected a non-negative integer"))
            }
        };
        match kind.trim().to_ascii_lowercase().as_str() {
            "named" => {
                let p: Pattern = rest.parse().map_err(|_| bad("unknown named graph"))?;
                let g = match p {
                    Pattern::Path(k) => NamedGraph::Path(k),
                    Pattern::Cycle(k) => NamedGraph::Cycle(k),
                    Pattern::Spider(i, j, k) => NamedGraph::Spider(i, j, k),
                    Pattern::Named(crate::recognize::NamedSmall::K23) => {
                        NamedGraph::CompleteBipartite(2, 3)
                    }
                    Pattern::Named(crate::recognize::NamedSmall::K33) => {
                        NamedGraph::CompleteBipartite(3, 3)
                    }
                    _ => return Err(bad("unsupported named graph")),
                };
                Ok(GenSpec::Named(g))
            }
            "bip" => {
                let v = nums(rest)?;
                let [nx, ny, p] = v[..] else {
                    return Err(bad("expected nx,ny,p"));
                };
                Ok(GenSpec::RandomBipartite {
                    nx: int(nx)?,
                    ny: int(ny)?,
                    p,
                })
            }
            "free" => {
                let mut parts = rest.splitn(3, ':');
                let (Some(pat), Some(tries), Some(inner)) = (parts.next(), parts.next(), parts.next())
                else {
                    return Err(bad("expected free:<pattern>:<tries>:<spec>"));
                };
                Ok(GenSpec::HFreeRejection {
                    pattern: pat.parse()?,
                    max_tries: tries.trim().parse().map_err(|_| bad("bad tries"))?,
                    inner: Box::new(inner.parse()?),
                })
            }
            "planted" => {
                let parts: Vec<&str> = rest.split(':').collect();
                if parts.len() < 2 || parts.len() > 4 {
                    return Err(bad("expected planted:<layout>:<degrees>[:p[:noshuffle]]"));
                }
                let layout = match parts[0].trim() {
                    "path" => Layout::Path,
                    "star" => Layout::Star,
                    "random" => Layout::Random,
                    _ => return Err(bad("layout must be path, star or random")),
                };
                let degrees = nums(parts[1])?.into_iter().map(int).collect::<Result<_, _>>()?;
                let extra_prob = match parts.get(2) {
                    Some(p) => p.trim().parse().map_err(|_| bad("bad probability"))?,
                    None => 0.0,
                };
                let shuffle = match parts.get(3).map(|t| t.trim()) {
                    None => true,
                    Some("noshuffle") => false,
                    Some(_) => return Err(bad("unknown planted flag")),
                };
                Ok(GenSpec::PlantedEds {
                    degrees,
                    layout,
                    extra_prob,
                    shuffle,
                })
            }
            "x3c" => {
                let v = nums(rest)?;
                let [n, m] = v[..] else {
                    return Err(bad("expected n,m"));
                };
                Ok(GenSpec::RandomX3C {
                    n: int(n)?,
                    m: int(m)?,
                })
            }
            _ => Err(bad("unknown generator kind")),
        }
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSpec::RandomBipartite { nx, ny, p } => write!(f, "bip:{nx},{ny},{p}"),
            GenSpec::HFreeRejection {
                inner,
                pattern,
                max_tries,
            } => write!(f, "free:{pattern}:{max_tries}:{inner}"),
            GenSpec::PlantedEds {
                degrees,
                layout,
                extra_prob,
                shuffle,
            } => {
                let layout = match layout {
                    Layout::Path => "path",
                    Layout::Star => "star",
                    Layout::Random => "random",
                };
                let d: Vec<String> = degrees.iter().map(usize::to_string).collect();
                write!(f, "planted:{layout}:{}:{extra_prob}", d.join(","))?;
                if !shuffle {
                    f.write_str(":noshuffle")?;
                }
                Ok(())
            }
            GenSpec::RandomX3C { n, m } => write!(f, "x3c:{n},{m}"),
            GenSpec::Named(NamedGraph::Path(k)) => write!(f, "named:P{k}"),
            GenSpec::Named(NamedGraph::Cycle(k)) => write!(f, "named:C{k}"),
            GenSpec::Named(NamedGraph::Spider(i, j, k)) => write!(f, "named:S{i},{j},{k}"),
            GenSpec::Named(NamedGraph::CompleteBipartite(a, b)) => write!(f, "named:K{a},{b}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eds::is_eds;
    use crate::graph::bipartition;

    #[test]
    fn rng_is_stable() {
        let mut a = Rng::seeded(7);
        let mut b = Rng::seeded(7);
        let xs: Vec<u64> = (0..4).map(|_| a.next_u64()).collect();
        let ys: Vec<u64> = (0..4).map(|_| b.next_u64()).collect();
        assert_eq!(xs, ys);
        let mut c = Rng::seeded(8);
        assert_ne!(xs[0], c.next_u64());
        for _ in 0..1000 {
            assert!(a.below(5) < 5);
            let u = a.unit();
            assert!((0.0..1.0).contains(&u));
        }
    }

    #[test]
    fn named_examples() {
        let g = generate(&"named:C6".parse().unwrap(), 1).unwrap().into_graph().unwrap();
        assert_eq!(g, named::cycle(6));
        let g = generate(&"named:K2,3".parse().unwrap(), 1).unwrap().into_graph().unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn planted_path_layout() {
        let spec = GenSpec::PlantedEds {
            degrees: vec![2, 3, 2],
            layout: Layout::Path,
            extra_prob: 0.0,
            shuffle: false,
        };
        let Generated::Graph { graph, planted } = generate(&spec, 3).unwrap() else {
            panic!()
        };
        let planted = planted.unwrap();
        assert_eq!(planted, vec![0, 3, 7]);
        assert!(is_eds(&graph, &planted));
        assert!(graph.is_connected());
        assert!(bipartition(&graph).is_ok());
    }

    #[test]
    fn planted_instances_are_valid() {
        for seed in 0..50 {
            for layout in ["path", "star", "random"] {
                let spec: GenSpec = format!("planted:{layout}:2,1,3,2,2:0.3").parse().unwrap();
                let Generated::Graph { graph, planted } = generate(&spec, seed).unwrap() else {
                    panic!()
                };
                let planted = planted.unwrap();
                assert!(is_eds(&graph, &planted), "{layout} seed {seed}");
                assert!(bipartition(&graph).is_ok());
                assert!(graph.is_connected());
            }
        }
    }

    #[test]
    fn rejection_respects_pattern() {
        let spec: GenSpec = "free:S2,2,4:100:bip:8,8,0.2".parse().unwrap();
        match generate(&spec, 11) {
            Ok(out) => {
                let g = out.into_graph().unwrap();
                assert!(contains_induced(&g, Pattern::Spider(2, 2, 4)).unwrap().is_none());
            }
            Err(e) => assert!(matches!(e, GenError::RejectionExhausted { .. })),
        }
        let hopeless: GenSpec = "free:P2:3:bip:4,4,1".parse().unwrap();
        assert_eq!(
            generate(&hopeless, 0),
            Err(GenError::RejectionExhausted {
                pattern: Pattern::Path(2),
                tries: 3
            })
        );
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "named:P7",
            "named:C6",
            "named:S2,2,4",
            "named:K2,3",
            "bip:5,6,0.25",
            "free:S2,2,4:100:bip:8,8,0.2",
            "planted:path:2,3,2:0",
            "planted:random:1,2:0.5:noshuffle",
            "x3c:6,4",
        ] {
            let spec: GenSpec = s.parse().unwrap();
            assert_eq!(spec.to_string().parse::<GenSpec>().unwrap(), spec, "{s}");
        }
        for s in ["", "bip:1,2", "planted:ring:1,2", "x3c:2,1", "named:Q3", "bip:2,2,1.5"] {
            let parsed = s.parse::<GenSpec>();
            assert!(parsed.is_err() || generate(&parsed.unwrap(), 0).is_err(), "{s}");
        }
    }

    #[test]
    fn x3c_generation_is_deterministic() {
        let spec: GenSpec = "x3c:9,6".parse().unwrap();
        let a = generate(&spec, 5).unwrap();
        let b = generate(&spec, 5).unwrap();
        assert_eq!(a, b);
        let Generated::X3C(h) = a else { panic!() };
        assert_eq!((h.n(), h.m()), (9, 6));
    }
}
