//! Checks the extremal claims about the revised Szeged index of bicyclic
//! graphs against exhaustive enumeration.
//!
//! Reports are plain data. Each has a `passes` predicate, kept separate so a
//! failing run can still be rendered in full.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::canon::canonical_form;
use crate::constructions::{analyze_theta, build_bn, build_theta, SkeletonShape, ThetaEdgeAnalysis, ThetaEdgeCase, ThetaShape};
use crate::enumeration::{enumerate, skeletons, IsoClassSet, Method};
use crate::indices::{conjecture_bound_x4, summarize, QuarterValue};
use crate::structure::{classify_bicyclic, BicyclicClass};
use crate::{CanonicalForm, Edge, Result};

/// Index data for one isomorphism class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassRow {
    pub form: CanonicalForm,
    pub class: BicyclicClass,
    pub deviation_sum: u64,
    pub revised_szeged: QuarterValue,
}

impl ClassRow {
    pub fn compute(form: CanonicalForm) -> Result<Self> {
        let g = form.to_graph();
        let class = classify_bicyclic(&g)?;
        let s = summarize(&g)?;
        Ok(ClassRow { form, class, deviation_sum: s.deviation_sum, revised_szeged: s.revised_szeged })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n: usize,
    pub method: Method,
    pub bound: QuarterValue,
    pub max: QuarterValue,
    pub maximizers: Vec<CanonicalForm>,
    pub maximizer_is_bn: bool,
    pub maximizer_unique: bool,
    pub second: Option<QuarterValue>,
    pub second_place: Vec<CanonicalForm>,
    pub second_is_theta_1_2: bool,
    /// Sorted by canonical form.
    pub rows: Vec<ClassRow>,
}

impl ConjectureReport {
    /// Assembles the report from per-class rows given in any order.
    pub fn from_rows(n: usize, method: Method, mut rows: Vec<ClassRow>) -> Result<Self> {
        let bound = conjecture_bound_x4(n)?;
        rows.sort_by_key(|r| r.form);

        let mut values: Vec<QuarterValue> = rows.iter().map(|r| r.revised_szeged).collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        values.dedup();
        let max = values.first().copied().unwrap_or_default();
        let second = values.get(1).copied();
        let with_value = |v: Option<QuarterValue>| -> Vec<CanonicalForm> {
            rows.iter().filter(|r| Some(r.revised_szeged) == v).map(|r| r.form).collect()
        };
        let maximizers = with_value(Some(max));
        let second_place = with_value(second);

        let bn = canonical_form(&build_bn(n)?)?;
        let theta = canonical_form(&build_theta(1, 2, n - 2)?)?;
        Ok(ConjectureReport {
            n,
            method,
            bound,
            max,
            maximizer_is_bn: maximizers.contains(&bn),
            maximizer_unique: maximizers.len() == 1,
            maximizers,
            second,
            second_is_theta_1_2: second_place == [theta],
            second_place,
            rows,
        })
    }

    pub fn from_classes(n: usize, method: Method, classes: &IsoClassSet) -> Result<Self> {
        let rows = classes.forms().map(|&f| ClassRow::compute(f)).collect::<Result<Vec<_>>>()?;
        Self::from_rows(n, method, rows)
    }

    pub fn class_count(&self) -> usize {
        self.rows.len()
    }

    /// Some class exceeds the conjectured bound.
    pub fn counterexample(&self) -> bool {
        self.max > self.bound
    }

    /// The maximum equals the bound and `B_n` alone attains it.
    pub fn theorem_holds(&self) -> bool {
        self.max == self.bound && self.maximizer_unique && self.maximizer_is_bn
    }

    /// Theorem plus the claim that `Θ(1,2,n-2)` alone takes second place.
    pub fn passes(&self) -> bool {
        self.theorem_holds() && self.second_is_theta_1_2
    }
}

pub fn verify_conjecture(n: usize, method: Method) -> Result<ConjectureReport> {
    method.check_order(n)?;
    conjecture_bound_x4(n)?;
    ConjectureReport::from_classes(n, method, &enumerate(n, method)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma3Report {
    pub shape: ThetaShape,
    pub edges: Vec<ThetaEdgeAnalysis>,
}

impl Lemma3Report {
    pub fn zero_deviation_edges(&self) -> Vec<Edge> {
        self.edges.iter().filter(|r| r.actual == 0).map(|r| r.edge).collect()
    }

    pub fn formulas_hold(&self) -> bool {
        self.edges.iter().all(ThetaEdgeAnalysis::formula_holds)
    }

    /// Zero deviation exactly on middle edges of odd paths.
    pub fn zero_iff_middle(&self) -> bool {
        self.edges.iter().all(|r| (r.actual == 0) == r.middle_of_odd_path)
    }

    pub fn passes(&self) -> bool {
        self.formulas_hold() && self.zero_iff_middle() && self.zero_deviation_edges().len() <= 3
    }

    /// Whether some equidistant-hub edge meets the `a - 1` bound exactly,
    /// agrees with the shape having two shortest paths. `None` when no edge
    /// has an equidistant hub.
    pub fn case3_equality_matches(&self) -> Option<bool> {
        let mut equidistant = self.edges.iter().filter(|r| r.case == ThetaEdgeCase::HubEquidistant);
        let first = equidistant.next()?;
        let tight = first.actual == first.predicted || equidistant.any(|r| r.actual == r.predicted);
        Some(tight == (self.shape.a == self.shape.b))
    }
}

pub fn verify_lemma3(a: usize, b: usize, c: usize) -> Result<Lemma3Report> {
    let shape = ThetaShape::new(a, b, c)?;
    Ok(Lemma3Report { shape, edges: analyze_theta(shape) })
}

/// Every valid theta shape with `a + b + c <= max_total`.
pub fn theta_shapes(max_total: usize) -> Vec<ThetaShape> {
    let mut out = Vec::new();
    for a in 1..max_total {
        for b in a.max(2)..max_total {
            for c in b..=max_total.saturating_sub(a + b) {
                out.push(ThetaShape { a, b, c });
            }
        }
    }
    out
}

/// One inequality a class failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub form: CanonicalForm,
    pub class: BicyclicClass,
    pub deviation_sum: u64,
    pub rule: Rule,
    /// Smallest deviation sum the rule allows.
    pub required: u64,
}

/// Lower bounds on the deviation sum of a bicyclic class other than `B_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Any class: more than `n + 1`.
    AboveBnThreshold,
    /// Pendant edge: at least `(n - 2)^2`.
    PendantEdge,
    /// Dumbbell `(p, q, t)`: at least `2(n-p)^2 + 2(n-q)^2`.
    DumbbellJunctions,
    /// Dumbbell `(p, q, t)`: at least `(n - 1 + t)^2`.
    DumbbellPath,
    /// Theta with `a >= 3`: at least `m + 15`.
    ThetaLong,
    /// Theta with `a = 2 < b`: at least `m + 10`.
    ThetaTwo,
    /// Theta with `a = 1`, `b >= 3`: at least `m + 9`.
    ThetaOneLong,
    /// Theta with `a = 1`, `b = 2`: at least `m + 4`.
    ThetaOneTwo,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::AboveBnThreshold => "deviation_sum > n+1",
            Rule::PendantEdge => "pendant: >= (n-2)^2",
            Rule::DumbbellJunctions => "dumbbell: >= 2(n-p)^2+2(n-q)^2",
            Rule::DumbbellPath => "dumbbell: >= (n-1+t)^2",
            Rule::ThetaLong => "theta a>=3: >= m+15",
            Rule::ThetaTwo => "theta a=2<b: >= m+10",
            Rule::ThetaOneLong => "theta a=1,b>=3: >= m+9",
            Rule::ThetaOneTwo => "theta a=1,b=2: >= m+4",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityReport {
    pub n: usize,
    pub classes: usize,
    /// Rule and class pairs that were evaluated.
    pub checks: usize,
    pub bn_deviation: u64,
    /// `n` for even `n`, `n + 1` for odd.
    pub bn_expected: u64,
    /// The deviation sum `B_n` must have for its revised Szeged index to equal the bound.
    pub bn_from_bound: u64,
    pub violations: Vec<Violation>,
}

impl InequalityReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
            && self.bn_deviation == self.bn_expected
            && self.bn_from_bound == self.bn_expected
    }

    pub fn from_rows(n: usize, rows: &[ClassRow]) -> Result<Self> {
        let m = (n + 1) as u64;
        let nn = n as u64;
        let bn_form = canonical_form(&build_bn(n)?)?;
        let bn_deviation = summarize(&bn_form.to_graph())?.deviation_sum;
        let bn_expected = if n % 2 == 0 { nn } else { nn + 1 };
        // 4 Sz* = n^3 + n^2 - deviation_sum for bicyclic graphs
        let bn_from_bound = nn * nn * nn + nn * nn - conjecture_bound_x4(n)?.quarters();

        let shapes: BTreeMap<CanonicalForm, SkeletonShape> = skeletons(n)
            .into_iter()
            .filter(|s| s.order() == n)
            .map(|s| Ok((canonical_form(&s.build())?, s)))
            .collect::<Result<_>>()?;

        let mut checks = 0;
        let mut violations = Vec::new();
        for row in rows.iter().filter(|r| r.form != bn_form) {
            let mut rules: Vec<(Rule, u64)> = alloc::vec![(Rule::AboveBnThreshold, nn + 2)];
            match (row.class, shapes.get(&row.form)) {
                (BicyclicClass::Pendant { .. }, _) => {
                    rules.push((Rule::PendantEdge, (nn - 2).pow(2)));
                }
                (_, Some(SkeletonShape::Dumbbell(d))) => {
                    let (p, q, t) = (d.p as u64, d.q as u64, d.t as u64);
                    rules.push((Rule::DumbbellJunctions, 2 * (nn - p).pow(2) + 2 * (nn - q).pow(2)));
                    rules.push((Rule::DumbbellPath, (nn - 1 + t).pow(2)));
                }
                (BicyclicClass::Theta { a, b, .. }, _) => {
                    let rule = match (a, b) {
                        (a, _) if a >= 3 => Some((Rule::ThetaLong, m + 15)),
                        (2, b) if b > 2 => Some((Rule::ThetaTwo, m + 10)),
                        (1, b) if b >= 3 => Some((Rule::ThetaOneLong, m + 9)),
                        (1, 2) => Some((Rule::ThetaOneTwo, m + 4)),
                        _ => None,
                    };
                    rules.extend(rule);
                }
                _ => {}
            }
            for (rule, required) in rules {
                checks += 1;
                if row.deviation_sum < required {
                    violations.push(Violation {
                        form: row.form,
                        class: row.class,
                        deviation_sum: row.deviation_sum,
                        rule,
                        required,
                    });
                }
            }
        }
        Ok(InequalityReport {
            n,
            classes: rows.len(),
            checks,
            bn_deviation,
            bn_expected,
            bn_from_bound,
            violations,
        })
    }
}

pub fn verify_case_inequalities(n: usize, method: Method) -> Result<InequalityReport> {
    method.check_order(n)?;
    conjecture_bound_x4(n)?;
    let classes = enumerate(n, method)?;
    let rows = classes.forms().map(|&f| ClassRow::compute(f)).collect::<Result<Vec<_>>>()?;
    InequalityReport::from_rows(n, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjecture_at_six_and_seven() {
        let r6 = verify_conjecture(6, Method::Naive).unwrap();
        assert_eq!(r6.max, QuarterValue(246));
        assert!(r6.maximizer_is_bn && r6.maximizer_unique);
        assert!(r6.passes());
        let r7 = verify_conjecture(7, Method::Structural).unwrap();
        assert_eq!(r7.max, QuarterValue(384));
        assert!(r7.passes(), "{r7:?}");
        assert_eq!(r7.second_place, [canonical_form(&build_theta(1, 2, 5).unwrap()).unwrap()]);
        assert!(verify_conjecture(5, Method::Naive).is_err());
    }

    #[test]
    fn second_place_breaks_at_eight() {
        let r = verify_conjecture(8, Method::Structural).unwrap();
        assert!(r.theorem_holds());
        assert_eq!(r.second, Some(QuarterValue(556)));
        assert_eq!(r.second_place, [canonical_form(&build_theta(2, 3, 4).unwrap()).unwrap()]);
        assert!(!r.passes());
    }

    #[test]
    fn lemma3_examples() {
        let r = verify_lemma3(3, 3, 3).unwrap();
        assert_eq!(r.zero_deviation_edges().len(), 3);
        assert!(r.passes());
        let r = verify_lemma3(2, 2, 2).unwrap();
        assert!(r.zero_deviation_edges().is_empty());
        assert!(r.passes());
        assert_eq!(r.case3_equality_matches(), None);
        assert_eq!(verify_lemma3(2, 2, 3).unwrap().case3_equality_matches(), Some(true));
        assert!(verify_lemma3(1, 1, 2).is_err());
    }

    #[test]
    fn inequalities_at_six() {
        let r = verify_case_inequalities(6, Method::Naive).unwrap();
        assert_eq!(r.bn_deviation, 6);
        assert!(r.passes(), "{:?}", r.violations);
    }

    #[test]
    fn theta_shape_sweep_list() {
        let shapes = theta_shapes(5);
        assert_eq!(shapes, [ThetaShape { a: 1, b: 2, c: 2 }]);
        assert!(theta_shapes(20).iter().all(|s| s.a + s.b + s.c <= 20 && s.b >= 2));
    }
}
