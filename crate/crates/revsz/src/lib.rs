//! Std companion to `revsz-core`: multi-threaded enumeration and
//! verification, CSV/JSON/table reports, and the `revsz` command line.
//!
//! ```
//! use revsz::parallel::conjecture_report;
//! use revsz_core::enumeration::Method;
//!
//! let report = conjecture_report(6, Method::Structural, 2).unwrap();
//! assert!(report.theorem_holds());
//! assert_eq!(report.max.to_string(), "61.5");
//! ```

pub mod cli;
pub mod parallel;
pub mod record;
pub mod render;
