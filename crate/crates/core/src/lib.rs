//! Minimum locating-dominating codes in finite simple graphs.
//!
//! A code `S ⊆ V(G)` is *locating-dominating* when every vertex outside `S`
//! sees a nonempty set of codewords in its closed neighbourhood, and no two
//! such vertices see the same set. This crate computes the smallest such
//! codes exactly, enumerates all of them, and classifies vertices that lie in
//! every minimum code (*min-forced*) or in none (*min-void*).
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the `ld`
//! command-line tool live in the companion `locdom-cli` crate.
//!
//! Vertices are labelled `1..=n` throughout the public API. Codes are
//! [`VertexSet`] bitmasks, so every operation that takes or returns a code
//! requires `n <= 64`.
//!
//! ```
//! use locdom::{generators, solver};
//!
//! let p10 = generators::path(10).unwrap();
//! let census = solver::enumerate_minimum_ld_codes(&p10).unwrap();
//! assert_eq!(census.gamma, 4);
//! assert_eq!(census.codes.len(), 1);
//! assert_eq!(census.codes[0].to_vec(), vec![2, 4, 7, 9]);
//! ```
#![no_std]

extern crate alloc;

mod error;
mod set;

pub mod code;
pub mod colour;
pub mod forced;
pub mod generators;
pub mod graph;
pub mod paths;
pub mod solver;
pub mod subsets;

pub use code::{i_set, is_ld_code, is_ld_star_code};
pub use colour::ColourGraph;
pub use error::Error;
pub use forced::VertexClassification;
pub use graph::{Graph, Induced, Twins};
pub use set::VertexSet;
pub use solver::MinimumCodeCensus;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Largest graph order the exact solver accepts.
pub const SOLVER_LIMIT: usize = 64;
