//! Color swap reconfiguration: deciding whether one proper coloring can be
//! turned into another by repeatedly exchanging the colors at the two ends
//! of an edge while staying proper.

pub mod cograph;
pub mod coloring;
pub mod error;
pub mod format;
pub mod gen;
pub mod graph;
pub mod ncl;
pub mod oracle;
pub mod path;
pub mod reductions;
pub mod routing;
pub mod small_k;
pub mod solve;
pub mod split;
pub mod svr;
pub mod swap;
pub mod token_sliding;

pub use coloring::{is_proper, is_proper_extended, is_valid, Color, Coloring, Instance};
pub use error::{Error, Result};
pub use graph::Graph;
pub use swap::{apply_swap, legal_swaps, ReconfSequence, SwapMove};
