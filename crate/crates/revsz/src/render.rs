//! Text renderings of records and verification reports.
//!
//! Tables are for people. CSV and JSON carry the same fields, with revised
//! Szeged values as integers `q = 4 * Sz*` under `_q4` keys.

use std::fmt::Write as _;

use serde::Serialize;
use revsz_core::constructions::ThetaEdgeCase;
use revsz_core::indices::QuarterValue;
use revsz_core::verify::{ConjectureReport, InequalityReport, Lemma3Report};
use revsz_core::CanonicalForm;

use crate::record::{self, ReportRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn joined(forms: &[CanonicalForm]) -> String {
    forms.iter().map(|f| f.graph6()).collect::<Vec<_>>().join(" ")
}

fn csv_text<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("flat rows serialize to CSV");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("CSV output is UTF-8")
}

fn json_text<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize infallibly");
    s.push('\n');
    s
}

pub fn records(records: &[ReportRecord], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut buf = Vec::new();
            record::write_csv(&mut buf, records).expect("in-memory writer");
            String::from_utf8(buf).expect("CSV output is UTF-8")
        }
        Format::Json => json_text(records),
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{:<14} {:>3} {:>3} {:>8} {:>8} {:>10} {:>8}  class",
                "graph6", "n", "m", "W", "Sz", "Sz*", "dev"
            );
            for r in records {
                let _ = writeln!(
                    s,
                    "{:<14} {:>3} {:>3} {:>8} {:>8} {:>10} {:>8}  {}",
                    r.graph6,
                    r.n,
                    r.m,
                    r.wiener,
                    r.szeged,
                    r.revised_szeged().to_string(),
                    r.deviation_sum,
                    r.class
                );
            }
            s
        }
    }
}

#[derive(Serialize)]
struct ConjectureSummary {
    n: usize,
    method: String,
    classes: usize,
    bound_q4: u64,
    max_q4: u64,
    maximizers: String,
    maximizer_is_bn: bool,
    maximizer_unique: bool,
    second_q4: Option<u64>,
    second_place: String,
    second_is_theta_1_2: bool,
    theorem: bool,
    passes: bool,
}

#[derive(Serialize)]
struct ClassJson {
    graph6: String,
    class: String,
    deviation_sum: u64,
    revised_szeged_q4: u64,
}

#[derive(Serialize)]
struct ConjectureJson {
    #[serde(flatten)]
    summary: ConjectureSummary,
    rows: Vec<ClassJson>,
}

fn conjecture_summary(r: &ConjectureReport) -> ConjectureSummary {
    ConjectureSummary {
        n: r.n,
        method: r.method.to_string(),
        classes: r.class_count(),
        bound_q4: r.bound.quarters(),
        max_q4: r.max.quarters(),
        maximizers: joined(&r.maximizers),
        maximizer_is_bn: r.maximizer_is_bn,
        maximizer_unique: r.maximizer_unique,
        second_q4: r.second.map(QuarterValue::quarters),
        second_place: joined(&r.second_place),
        second_is_theta_1_2: r.second_is_theta_1_2,
        theorem: r.theorem_holds(),
        passes: r.passes(),
    }
}

pub fn conjecture(reports: &[ConjectureReport], format: Format) -> String {
    match format {
        Format::Csv => csv_text(&reports.iter().map(conjecture_summary).collect::<Vec<_>>()),
        Format::Json => {
            let out: Vec<ConjectureJson> = reports
                .iter()
                .map(|r| ConjectureJson {
                    summary: conjecture_summary(r),
                    rows: r
                        .rows
                        .iter()
                        .map(|c| ClassJson {
                            graph6: c.form.graph6(),
                            class: c.class.to_string(),
                            deviation_sum: c.deviation_sum,
                            revised_szeged_q4: c.revised_szeged.quarters(),
                        })
                        .collect(),
                })
                .collect();
            json_text(&out)
        }
        Format::Table => {
            let mut s = String::new();
            for r in reports {
                let class_of = |f: &CanonicalForm| {
                    r.rows.iter().find(|c| c.form == *f).map(|c| c.class.to_string()).unwrap_or_default()
                };
                let who = |forms: &[CanonicalForm]| {
                    forms.iter().map(|f| format!("{} {}", f, class_of(f))).collect::<Vec<_>>().join(", ")
                };
                let _ = writeln!(
                    s,
                    "[{}] n={} theorem: classes={} max Sz*={} bound={} maximizers: {}{}{}",
                    pass(r.theorem_holds()),
                    r.n,
                    r.class_count(),
                    r.max,
                    r.bound,
                    who(&r.maximizers),
                    if r.maximizer_is_bn { " (B_n)" } else { "" },
                    if r.counterexample() { " COUNTEREXAMPLE above bound" } else { "" },
                );
                let second = r.second.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    s,
                    "[{}] n={} second place: Sz*={} held by: {}",
                    pass(r.second_is_theta_1_2),
                    r.n,
                    second,
                    who(&r.second_place),
                );
            }
            s
        }
    }
}

/// `n,max_q4,second_q4` rows for external plotting.
pub fn plot_csv(reports: &[ConjectureReport]) -> String {
    #[derive(Serialize)]
    struct Point {
        n: usize,
        max_q4: u64,
        second_q4: Option<u64>,
    }
    csv_text(
        &reports
            .iter()
            .map(|r| Point { n: r.n, max_q4: r.max.quarters(), second_q4: r.second.map(QuarterValue::quarters) })
            .collect::<Vec<_>>(),
    )
}

#[derive(Serialize)]
struct InequalitySummary {
    n: usize,
    classes: usize,
    checks: usize,
    bn_deviation: u64,
    bn_expected: u64,
    bn_from_bound: u64,
    violations: usize,
    passes: bool,
}

#[derive(Serialize)]
struct ViolationJson {
    graph6: String,
    class: String,
    deviation_sum: u64,
    rule: &'static str,
    required: u64,
}

#[derive(Serialize)]
struct InequalityJson {
    #[serde(flatten)]
    summary: InequalitySummary,
    violators: Vec<ViolationJson>,
}

fn inequality_summary(r: &InequalityReport) -> InequalitySummary {
    InequalitySummary {
        n: r.n,
        classes: r.classes,
        checks: r.checks,
        bn_deviation: r.bn_deviation,
        bn_expected: r.bn_expected,
        bn_from_bound: r.bn_from_bound,
        violations: r.violations.len(),
        passes: r.passes(),
    }
}

pub fn inequalities(reports: &[InequalityReport], format: Format) -> String {
    let violators = |r: &InequalityReport| -> Vec<ViolationJson> {
        r.violations
            .iter()
            .map(|v| ViolationJson {
                graph6: v.form.graph6(),
                class: v.class.to_string(),
                deviation_sum: v.deviation_sum,
                rule: v.rule.name(),
                required: v.required,
            })
            .collect()
    };
    match format {
        Format::Csv => csv_text(&reports.iter().map(inequality_summary).collect::<Vec<_>>()),
        Format::Json => json_text(
            &reports
                .iter()
                .map(|r| InequalityJson { summary: inequality_summary(r), violators: violators(r) })
                .collect::<Vec<_>>(),
        ),
        Format::Table => {
            let mut s = String::new();
            for r in reports {
                let _ = writeln!(
                    s,
                    "[{}] n={} classes={} checks={} B_n deviation_sum={} (expected {}, from bound {}) violations={}",
                    pass(r.passes()),
                    r.n,
                    r.classes,
                    r.checks,
                    r.bn_deviation,
                    r.bn_expected,
                    r.bn_from_bound,
                    r.violations.len()
                );
                for v in violators(r) {
                    let _ = writeln!(
                        s,
                        "    {} {} deviation_sum={} needs {} ({})",
                        v.graph6, v.class, v.deviation_sum, v.required, v.rule
                    );
                }
            }
            s
        }
    }
}

fn case_name(c: ThetaEdgeCase) -> &'static str {
    match c {
        ThetaEdgeCase::DifferentSets => "hubs-split",
        ThetaEdgeCase::SameSet => "hubs-same-side",
        ThetaEdgeCase::HubEquidistant => "hub-equidistant",
    }
}

#[derive(Serialize)]
struct EdgeRow {
    a: usize,
    b: usize,
    c: usize,
    edge: String,
    path: usize,
    position: usize,
    case: &'static str,
    hub_x_distance: usize,
    hub_y_distance: usize,
    girth_through: usize,
    predicted: usize,
    deviation: usize,
    middle_of_odd_path: bool,
    holds: bool,
}

#[derive(Serialize)]
struct Lemma3Json {
    a: usize,
    b: usize,
    c: usize,
    zero_deviation_edges: Vec<String>,
    formulas_hold: bool,
    zero_iff_middle: bool,
    case3_equality_matches: Option<bool>,
    passes: bool,
    edges: Vec<EdgeRow>,
}

pub fn lemma3(r: &Lemma3Report, format: Format) -> String {
    let s = r.shape;
    let rows: Vec<EdgeRow> = r
        .edges
        .iter()
        .map(|e| EdgeRow {
            a: s.a,
            b: s.b,
            c: s.c,
            edge: e.edge.to_string(),
            path: e.path,
            position: e.position,
            case: case_name(e.case),
            hub_x_distance: e.hub_x_distance,
            hub_y_distance: e.hub_y_distance,
            girth_through: e.girth_through,
            predicted: e.predicted,
            deviation: e.actual,
            middle_of_odd_path: e.middle_of_odd_path,
            holds: e.formula_holds(),
        })
        .collect();
    let zero: Vec<String> = r.zero_deviation_edges().iter().map(|e| e.to_string()).collect();
    match format {
        Format::Csv => csv_text(&rows),
        Format::Json => json_text(&Lemma3Json {
            a: s.a,
            b: s.b,
            c: s.c,
            zero_deviation_edges: zero,
            formulas_hold: r.formulas_hold(),
            zero_iff_middle: r.zero_iff_middle(),
            case3_equality_matches: r.case3_equality_matches(),
            passes: r.passes(),
            edges: rows,
        }),
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "theta({},{},{}) n={}", s.a, s.b, s.c, s.order());
            let _ = writeln!(
                out,
                "{:>6} {:>4} {:>3} {:<16} {:>4} {:>4} {:>4} {:>5} {:>4}  ok",
                "edge", "path", "pos", "case", "d(x)", "d(y)", "g", "pred", "dev"
            );
            for e in &rows {
                let _ = writeln!(
                    out,
                    "{:>6} {:>4} {:>3} {:<16} {:>4} {:>4} {:>4} {:>5} {:>4}  {}",
                    e.edge,
                    e.path,
                    e.position,
                    e.case,
                    e.hub_x_distance,
                    e.hub_y_distance,
                    e.girth_through,
                    e.predicted,
                    e.deviation,
                    if e.holds { "yes" } else { "NO" }
                );
            }
            let _ = writeln!(out, "zero-deviation edges: {} [{}]", zero.len(), zero.join(" "));
            let _ = writeln!(out, "[{}] theta({},{},{})", pass(r.passes()), s.a, s.b, s.c);
            out
        }
    }
}
