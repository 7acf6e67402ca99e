//! Packed-bit linear algebra over GF(2).

mod bitvec;
mod matrix;
pub mod search;

pub use bitvec::{BitVector, Support};
pub use matrix::{BitMatrix, Rref};
pub use search::{SearchLimits, DEFAULT_ENUM_CAP};

pub(crate) use matrix::parse_header;
