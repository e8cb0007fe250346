//! Circular permutation pattern avoidance.
//!
//! Circular permutations avoiding a single size-4 pattern admit compact
//! structural encodings: avoiders of [1342] are binary words, avoiders of
//! [1324] are circled compositions, and avoiders of [1432] are Grassmannian
//! or inverse Grassmannian codes. This crate implements those encodings,
//! decides containment inside each of them, counts avoidance classes of
//! {size-4, size-k} pattern pairs exactly, evaluates the associated closed
//! forms, recurrences, and generating functions, and classifies pairs by
//! Wilf equivalence — all cross-checked against a brute-force oracle over
//! rotations.

pub mod binword;
pub mod circled1324;
pub mod error;
pub mod grass1432;
pub mod num_util;
pub mod oeis;
pub mod perm;
pub mod series;
pub mod wilf;
pub mod words1342;

pub use binword::BinaryWord;
pub use error::{Error, Result};
pub use perm::{CircularPermutation, LinearPermutation, PatternSet};
pub use series::TruncatedSeries;
