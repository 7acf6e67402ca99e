//! Binary linear codes generated by hypergraph incidence matrices.
//!
//! The code of a hypergraph `H = (V, E)` is the row space of its `|V| x |E|`
//! incidence matrix over GF(2). Its minimum distance can be computed two ways:
//! by enumerating the `2^k` messages of the code, or by enumerating the vertex
//! subsets `S` and counting the edges that meet `S` an odd number of times
//! ([`Hypergraph::eonv`]). Both engines live in [`codes`].
//!
//! Indexing is 0-based everywhere in this crate.

pub mod codes;
mod error;
pub mod gf2core;
pub mod gf2poly;
pub mod hypergraph;

pub use codes::{LinearCode, MinDistance, SearchLimits};
pub use error::{Error, Result};
pub use gf2core::{BitMatrix, BitVector, Rref};
pub use gf2poly::{Degree, GF2Poly};
pub use hypergraph::{Hypergraph, VertexSet};
