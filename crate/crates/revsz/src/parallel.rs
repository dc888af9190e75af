//! Work-unit parallelism over the core enumerators.
//!
//! Units run on a dedicated pool and their class sets merge by union, which
//! is order-independent; everything downstream is sorted by canonical form,
//! so results do not depend on the worker count.

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};
use revsz_core::enumeration::{IsoClassSet, Method, NaiveSearch, StructuralSearch};
use revsz_core::indices::conjecture_bound_x4;
use revsz_core::verify::{ClassRow, ConjectureReport, InequalityReport};
use revsz_core::Result;

/// Pool with `jobs` workers; `0` lets rayon pick from the available cores.
pub fn pool(jobs: usize) -> ThreadPool {
    ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool construction only fails on OS resource exhaustion")
}

fn union(mut a: IsoClassSet, b: IsoClassSet) -> IsoClassSet {
    a.merge(b);
    a
}

pub fn enumerate_parallel(n: usize, method: Method, jobs: usize) -> Result<IsoClassSet> {
    method.check_order(n)?;
    let pool = pool(jobs);
    Ok(match method {
        Method::Naive => {
            let search = NaiveSearch::new(n)?;
            pool.install(|| {
                (0..search.units())
                    .into_par_iter()
                    .map(|u| search.run_unit(u))
                    .reduce(IsoClassSet::new, union)
            })
        }
        Method::Structural => {
            let search = StructuralSearch::new(n)?;
            pool.install(|| {
                (0..search.units())
                    .into_par_iter()
                    .map(|u| search.run_unit(u))
                    .reduce(IsoClassSet::new, union)
            })
        }
    })
}

/// Per-class rows, sorted by canonical form.
pub fn class_rows(classes: &IsoClassSet, jobs: usize) -> Result<Vec<ClassRow>> {
    let forms: Vec<_> = classes.forms().copied().collect();
    pool(jobs).install(|| forms.par_iter().map(|&f| ClassRow::compute(f)).collect())
}

pub fn conjecture_report(n: usize, method: Method, jobs: usize) -> Result<ConjectureReport> {
    conjecture_bound_x4(n)?;
    let classes = enumerate_parallel(n, method, jobs)?;
    ConjectureReport::from_rows(n, method, class_rows(&classes, jobs)?)
}

pub fn inequality_report(n: usize, method: Method, jobs: usize) -> Result<InequalityReport> {
    conjecture_bound_x4(n)?;
    let classes = enumerate_parallel(n, method, jobs)?;
    InequalityReport::from_rows(n, &class_rows(&classes, jobs)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use revsz_core::enumeration::enumerate;

    #[test]
    fn matches_sequential() {
        for method in [Method::Naive, Method::Structural] {
            for n in 4..=6 {
                let seq = enumerate(n, method).unwrap();
                for jobs in [1, 3] {
                    assert_eq!(enumerate_parallel(n, method, jobs).unwrap(), seq);
                }
            }
        }
    }

    #[test]
    fn reports_are_worker_independent() {
        let a = conjecture_report(6, Method::Naive, 1).unwrap();
        let b = conjecture_report(6, Method::Naive, 4).unwrap();
        assert_eq!(a, b);
        assert!(a.passes());
        assert!(inequality_report(6, Method::Structural, 2).unwrap().passes());
        assert!(conjecture_report(5, Method::Naive, 1).is_err());
        assert!(enumerate_parallel(10, Method::Naive, 1).is_err());
    }
}
