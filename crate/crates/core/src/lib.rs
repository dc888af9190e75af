//! Exact distance-based topological indices (Wiener, Szeged, revised Szeged)
//! together with the machinery needed to check extremal claims about
//! bicyclic graphs by exhaustive enumeration.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs; parallel drivers, file formats other than graph6,
//! and the command line live in the `revsz` companion crate.
//!
//! ```
//! use revsz_core::{constructions::build_bn, indices::{revised_szeged_x4, conjecture_bound_x4}};
//!
//! let b7 = build_bn(7).unwrap();
//! assert_eq!(revised_szeged_x4(&b7).unwrap(), conjecture_bound_x4(7).unwrap());
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canon;
pub mod constructions;
pub mod distance;
pub mod enumeration;
mod error;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod structure;
pub mod verify;

pub use canon::{canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, MAX_VERTICES};
pub use indices::QuarterValue;
