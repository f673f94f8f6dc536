//! Exact diameters of Kronecker (tensor) graph products.
//!
//! The crate computes parity-constrained shortest walks and primitive
//! exponents of undirected graphs (loops allowed), builds Kronecker products,
//! and predicts the diameter of `G1 ⊗ G2` from the diameters and exponents of
//! the factors. Every closed-form prediction can be checked against brute
//! force with the [`harness`] module.
//!
//! ```
//! use kronecker_diameter::{families, kronecker, predict, walk};
//!
//! let c5 = families::cycle(5).unwrap();
//! let c3 = families::cycle(3).unwrap();
//! let measured = walk::diameter(&kronecker::kronecker_product(&c5, &c3));
//! let predicted = predict::predict(&c5, &c3).unwrap();
//! assert_eq!(predicted.value, measured);
//! ```

mod bitset;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod harness;
pub mod kronecker;
pub mod length;
pub mod matrix;
pub mod predict;
pub mod walk;

pub use error::{Error, Result};
pub use graph::{edgelist, families, generate, Graph, VertexId};
pub use length::ExtLen;
