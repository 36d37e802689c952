//! Efficient domination (perfect codes) in bipartite graphs.
//!
//! A set `D` of vertices is an *efficient dominating set* when every vertex
//! has exactly one member of `D` in its closed neighbourhood. Deciding
//! whether one exists is NP-complete for bipartite graphs in general; this
//! crate implements polynomial solvers for several hereditary classes,
//! recognisers for those classes, an exact exponential oracle, the hardness
//! reduction from exact cover by 3-sets, and instance generators.

pub mod eds;
pub mod generators;
pub mod graph;
pub mod io;
pub mod levels;
pub mod mis;
pub mod recognize;
pub mod reductions;
pub mod solvers;

pub use eds::{brute_force_eds, is_eds, EdsCertificate, OracleMode, ReducedInstance};
pub use graph::{Bipartition, Graph, GraphError, Levels, Side, Vertex};
