//! Fixed benchmark instances shared by the criterion benches.

use eds_core::generators::{generate, GenSpec};
use eds_core::Graph;

/// Planted instance from a spec string, panicking on a bad spec.
pub fn planted(spec: &str, seed: u64) -> Graph {
    let spec: GenSpec = spec.parse().expect("valid generator spec");
    generate(&spec, seed).expect("generator succeeds").into_graph().expect("graph output")
}

/// Degree sequence of `count` dominators cycling through `pattern`.
pub fn degrees(pattern: &[usize], count: usize) -> String {
    let ds: Vec<String> = pattern.iter().cycle().take(count).map(usize::to_string).collect();
    ds.join(",")
}
