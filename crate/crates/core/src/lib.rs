//! Exact treedepth via minimal separators.
//!
//! The treedepth of a connected non-complete graph is the minimum, over its
//! minimal separators `S`, of `|S|` plus the largest treedepth among the
//! components left after removing `S`. Only separators of size at most twice
//! the treewidth need to be considered.
//!
//! ```
//! use sepdepth::{generators::{basic, BasicKind}, treedepth, SolveConfig};
//!
//! let g = basic(BasicKind::Path(7)).unwrap();
//! let sol = treedepth(&g, &SolveConfig::default()).unwrap();
//! assert_eq!(sol.td, 3);
//! ```

pub mod budget;
pub mod classes;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod pace;
pub mod report;
pub mod separators;
pub mod solver;
pub mod treewidth;
pub mod vertex_set;

pub use budget::Budgets;
pub use error::{Error, Result};
pub use graph::{Graph, SubgraphView};
pub use separators::{
    enumerate_minimal_separators, is_minimal_separator, minimal_separators_bruteforce, SeparatorSet,
};
pub use solver::{
    optimal_top_separators, top_separator, treedepth, verify_treedepth_decomposition, Pruning,
    Solution, SolveConfig, SolveStats, TreedepthDecomposition, TwMode,
};
pub use treewidth::{
    treewidth_bounds, treewidth_exact, treewidth_lower, treewidth_upper, verify_tree_decomposition,
    TreeDecomposition, TwBounds,
};
pub use vertex_set::VertexSet;
