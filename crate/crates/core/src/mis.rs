//! Maximal independent set enumeration (Bron–Kerbosch on the complement,
//! with pivoting) over small vertex subsets.

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("more than {cap} maximal independent sets")]
pub struct TooManySets {
    pub cap: u64,
}

/// All maximal independent sets of `g[subset]`, each sorted, in
/// deterministic order. Fails once more than `cap` sets have been produced.
pub fn maximal_independent_sets(
    g: &Graph,
    subset: &[Vertex],
    cap: u64,
) -> Result<Vec<Vec<Vertex>>, TooManySets> {
    let k = subset.len();
    // conflict[a] = members of subset adjacent to subset[a]
    let mut index = std::collections::HashMap::with_capacity(k);
    for (i, &v) in subset.iter().enumerate() {
        index.insert(v, i);
    }
    let mut conflict = vec![FixedBitSet::with_capacity(k); k];
    for (a, &v) in subset.iter().enumerate() {
        for u in g.neighbors(v) {
            if let Some(&b) = index.get(u) {
                conflict[a].insert(b);
            }
        }
    }
    let mut out = Vec::new();
    let mut p = FixedBitSet::with_capacity(k);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(k);
    let mut r = Vec::new();
    expand(&conflict, &mut r, p, x, cap, &mut out)?;
    let mut sets: Vec<Vec<Vertex>> = out
        .into_iter()
        .map(|s: Vec<usize>| {
            let mut v: Vec<Vertex> = s.into_iter().map(|i| subset[i]).collect();
            v.sort_unstable();
            v
        })
        .collect();
    sets.sort();
    Ok(sets)
}

/// Bron–Kerbosch where "adjacent" means "not in conflict": a candidate `c`
/// keeps exactly the members of `p` and `x` that do not conflict with it.
fn expand(
    conflict: &[FixedBitSet],
    r: &mut Vec<usize>,
    p: FixedBitSet,
    x: FixedBitSet,
    cap: u64,
    out: &mut Vec<Vec<usize>>,
) -> Result<(), TooManySets> {
    if p.count_ones(..) == 0 {
        if x.count_ones(..) == 0 {
            if out.len() as u64 >= cap {
                return Err(TooManySets { cap });
            }
            out.push(r.clone());
        }
        return Ok(());
    }
    // pivot: the vertex of p ∪ x compatible with most of p
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| {
            let mut compatible = p.clone();
            compatible.difference_with(&conflict[u]);
            compatible.count_ones(..)
        })
        .unwrap();
    let mut branch = p.clone();
    let mut compat_pivot = p.clone();
    compat_pivot.difference_with(&conflict[pivot]);
    compat_pivot.set(pivot, false);
    branch.difference_with(&compat_pivot);

    let mut p = p;
    let mut x = x;
    for c in branch.ones().collect::<Vec<_>>() {
        let mut np = p.clone();
        np.difference_with(&conflict[c]);
        np.set(c, false);
        let mut nx = x.clone();
        nx.difference_with(&conflict[c]);
        nx.set(c, false);
        r.push(c);
        expand(conflict, r, np, nx, cap, out)?;
        r.pop();
        p.set(c, false);
        x.insert(c);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn brute(g: &Graph, subset: &[Vertex]) -> Vec<Vec<Vertex>> {
        let k = subset.len();
        let mut out = Vec::new();
        for mask in 0u32..(1 << k) {
            let s: Vec<Vertex> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| subset[i]).collect();
            let independent = s.iter().all(|&a| s.iter().all(|&b| !g.has_edge(a, b)));
            let maximal = subset
                .iter()
                .filter(|v| !s.contains(v))
                .all(|&v| s.iter().any(|&a| g.has_edge(a, v)));
            if independent && maximal {
                let mut s = s;
                s.sort_unstable();
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn small_examples() {
        assert_eq!(
            maximal_independent_sets(&path(3), &[0, 1, 2], 10).unwrap(),
            vec![vec![0, 2], vec![1]]
        );
        assert_eq!(
            maximal_independent_sets(&cycle(4), &[0, 1, 2, 3], 10).unwrap(),
            vec![vec![0, 2], vec![1, 3]]
        );
        assert_eq!(maximal_independent_sets(&path(3), &[], 10).unwrap(), vec![Vec::<usize>::new()]);
        assert_eq!(
            maximal_independent_sets(&cycle(6), &[0, 1, 2, 3, 4, 5], 1),
            Err(TooManySets { cap: 1 })
        );
    }

    #[test]
    fn matches_brute_force() {
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            seed >> 33
        };
        for n in 1..=10 {
            for _ in 0..20 {
                let mut edges = vec![];
                for a in 0..n {
                    for b in a + 1..n {
                        if next() % 3 == 0 {
                            edges.push((a, b));
                        }
                    }
                }
                let g = Graph::new(n, edges).unwrap();
                let subset: Vec<_> = (0..n).filter(|_| next() % 4 != 0).collect();
                assert_eq!(maximal_independent_sets(&g, &subset, u64::MAX).unwrap(), brute(&g, &subset));
            }
        }
    }
}
