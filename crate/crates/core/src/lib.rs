//! Exact machinery for cubic vertex-transitive graphs: permutation groups,
//! graph automorphisms, Praeger-Xu graph families and their split graphs,
//! 4-cycle decompositions, quotient classification, and constructive
//! search for semiregular subgroups.
//!
//! Everything is deterministic and exact; enumeration-backed operations
//! are cap-guarded and report [`error::Error::CapExceeded`] rather than
//! degrading silently.

pub mod construct;
pub mod decomp;
pub mod error;
pub mod finder;
pub mod graph;
pub mod perm;
pub mod quotient;

pub use error::{Error, Result};
pub use graph::Graph;
pub use perm::{PermGroup, Permutation, Subgroup};
