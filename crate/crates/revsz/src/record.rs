//! Per-graph index records and their CSV/JSON encodings.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};
use revsz_core::indices::{summarize, QuarterValue};
use revsz_core::structure::{classify_bicyclic, is_bicyclic};
use revsz_core::{graph6, Graph};

/// Column order of the CSV encoding.
pub const CSV_HEADER: &str = "graph6,n,m,wiener,szeged,revised_szeged_q4,deviation_sum,class";

/// Index values of one graph. The revised Szeged index is stored as the
/// integer `4 * Sz*` under the `_q4` key in every encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub wiener: u64,
    pub szeged: u64,
    pub revised_szeged_q4: u64,
    pub deviation_sum: u64,
    /// `pendant`, `cut-vertex` or `theta(a,b,c)`; empty unless the graph is bicyclic.
    pub class: String,
}

impl ReportRecord {
    pub fn from_graph(g: &Graph) -> revsz_core::Result<Self> {
        let s = summarize(g)?;
        let class = if is_bicyclic(g) { classify_bicyclic(g)?.to_string() } else { String::new() };
        Ok(ReportRecord {
            graph6: graph6::to_graph6(g)?,
            n: s.n,
            m: s.m,
            wiener: s.wiener,
            szeged: s.szeged,
            revised_szeged_q4: s.revised_szeged.quarters(),
            deviation_sum: s.deviation_sum,
            class,
        })
    }

    pub fn revised_szeged(&self) -> QuarterValue {
        QuarterValue(self.revised_szeged_q4)
    }
}

pub fn write_csv<W: Write>(out: W, records: &[ReportRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if records.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> csv::Result<Vec<ReportRecord>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

pub fn to_json(records: &[ReportRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize infallibly")
}

pub fn from_json(s: &str) -> serde_json::Result<Vec<ReportRecord>> {
    serde_json::from_str(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use revsz_core::constructions::build_bn;

    #[test]
    fn csv_header_and_values() {
        let rec = ReportRecord::from_graph(&build_bn(6).unwrap()).unwrap();
        assert_eq!(rec.revised_szeged().to_string(), "61.5");
        assert_eq!(rec.class, "theta(2,2,3)");
        let mut buf = Vec::new();
        write_csv(&mut buf, &[rec.clone()]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_HEADER);
        assert_eq!(read_csv(text.as_bytes()).unwrap(), vec![rec]);

        let mut empty = Vec::new();
        write_csv(&mut empty, &[]).unwrap();
        assert_eq!(String::from_utf8(empty).unwrap().trim_end(), CSV_HEADER);
    }

    #[test]
    fn non_bicyclic_has_empty_class() {
        let k2 = graph6::from_graph6("A_").unwrap();
        let rec = ReportRecord::from_graph(&k2).unwrap();
        assert_eq!((rec.wiener, rec.szeged, rec.revised_szeged_q4), (1, 1, 4));
        assert_eq!(rec.class, "");
        assert_eq!(from_json(&to_json(&[rec.clone()])).unwrap(), vec![rec]);
    }
}
