//! Exhaustive generation of connected bicyclic graphs up to isomorphism.
//!
//! Two independent generators are provided so they can check each other:
//!
//! * [`enumerate_naive`] walks every `(n + 1)`-subset of the edges of `K_n`.
//! * [`enumerate_structural`] grows every theta and dumbbell skeleton by
//!   hanging rooted trees off its vertices.
//!
//! Both split their search space into independent work units (first edge
//! index, resp. skeleton) whose results merge by set union, so a parallel
//! driver can run units in any order on any number of workers.

mod naive;
mod structural;
pub mod trees;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{CanonicalForm, Error, Graph, Result};

pub use naive::{enumerate_naive, NaiveSearch};
pub use structural::{enumerate_structural, skeletons, StructuralSearch};

/// Orders the naive generator accepts.
pub const NAIVE_RANGE: (usize, usize) = (4, 9);
/// Orders the structural generator accepts.
pub const STRUCTURAL_RANGE: (usize, usize) = (4, 12);

/// Isomorphism classes of graphs on a common order, keyed by canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IsoClassSet {
    forms: BTreeSet<CanonicalForm>,
}

impl IsoClassSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns `true` if the class was not present yet.
    pub fn insert(&mut self, form: CanonicalForm) -> bool {
        self.forms.insert(form)
    }

    pub fn contains(&self, form: &CanonicalForm) -> bool {
        self.forms.contains(form)
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn merge(&mut self, other: IsoClassSet) {
        if self.forms.len() < other.forms.len() {
            let mine = core::mem::replace(&mut self.forms, other.forms);
            self.forms.extend(mine);
        } else {
            self.forms.extend(other.forms);
        }
    }

    /// Forms in sorted order.
    pub fn forms(&self) -> impl Iterator<Item = &CanonicalForm> + '_ {
        self.forms.iter()
    }

    /// Canonically labeled representatives in sorted order.
    pub fn representatives(&self) -> impl Iterator<Item = Graph> + '_ {
        self.forms.iter().map(CanonicalForm::to_graph)
    }

    /// One graph6 line per class, sorted by canonical form.
    pub fn graph6_lines(&self) -> Vec<String> {
        self.forms.iter().map(CanonicalForm::graph6).collect()
    }
}

impl FromIterator<CanonicalForm> for IsoClassSet {
    fn from_iter<I: IntoIterator<Item = CanonicalForm>>(iter: I) -> Self {
        IsoClassSet { forms: iter.into_iter().collect() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    #[default]
    Naive,
    Structural,
}

impl Method {
    pub fn range(self) -> (usize, usize) {
        match self {
            Method::Naive => NAIVE_RANGE,
            Method::Structural => STRUCTURAL_RANGE,
        }
    }

    pub fn check_order(self, n: usize) -> Result<()> {
        let (min, max) = self.range();
        if (min..=max).contains(&n) {
            Ok(())
        } else {
            Err(Error::OutOfRange { n, min, max })
        }
    }

    /// Independent work units for order `n`.
    pub fn work_units(self, n: usize) -> Result<usize> {
        match self {
            Method::Naive => Ok(NaiveSearch::new(n)?.units()),
            Method::Structural => Ok(StructuralSearch::new(n)?.units()),
        }
    }

    /// Runs unit `unit` of order `n`. Prefer the `*Search` types when running
    /// many units, they share setup work.
    pub fn run_unit(self, n: usize, unit: usize) -> Result<IsoClassSet> {
        match self {
            Method::Naive => Ok(NaiveSearch::new(n)?.run_unit(unit)),
            Method::Structural => Ok(StructuralSearch::new(n)?.run_unit(unit)),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Naive => "naive",
            Method::Structural => "structural",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Method::Naive),
            "structural" => Ok(Method::Structural),
            _ => Err(Error::InvalidShape("method must be `naive` or `structural`")),
        }
    }
}

pub fn enumerate(n: usize, method: Method) -> Result<IsoClassSet> {
    match method {
        Method::Naive => enumerate_naive(n),
        Method::Structural => enumerate_structural(n),
    }
}
