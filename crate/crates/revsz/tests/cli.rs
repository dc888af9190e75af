use std::process::{Command, Output, Stdio};
use std::io::Write;

use proptest::prelude::*;
use revsz::record::{from_json, read_csv, to_json, write_csv, ReportRecord, CSV_HEADER};
use revsz_core::graph6::from_graph6;

fn revsz(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_revsz"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_families() {
    let bn = revsz(&["construct", "bn", "6"], "");
    assert!(bn.status.success());
    let g = from_graph6(stdout(&bn).trim()).unwrap();
    assert_eq!(g.degree_sequence(), vec![3, 3, 2, 2, 2, 2]);

    let theta = from_graph6(stdout(&revsz(&["construct", "theta", "1", "2", "4"], "")).trim()).unwrap();
    assert_eq!((theta.order(), theta.size()), (6, 7));

    let bowtie = from_graph6(stdout(&revsz(&["construct", "dumbbell", "3", "3", "0"], "")).trim()).unwrap();
    assert_eq!(bowtie.degree_sequence(), vec![4, 2, 2, 2, 2]);

    let bad = revsz(&["construct", "dumbbell", "2", "3", "0"], "");
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("usage"));
}

#[test]
fn compute_examples() {
    let bn6 = stdout(&revsz(&["construct", "bn", "6"], ""));
    let c4 = "Cr\n";
    let input = format!("{bn6}A_\n{c4}");
    let table = revsz(&["compute"], &input);
    assert!(table.status.success());
    let text = stdout(&table);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[1].split_whitespace().any(|f| f == "61.5"));
    let k2: Vec<&str> = lines[2].split_whitespace().collect();
    assert_eq!(&k2[..7], &["A_", "2", "1", "1", "1", "1", "0"]);
    assert!(lines[3].split_whitespace().any(|f| f == "16"));

    let csv = stdout(&revsz(&["compute", "--format", "csv"], &input));
    let json = stdout(&revsz(&["compute", "--format", "json"], &input));
    assert_eq!(csv.lines().next().unwrap(), CSV_HEADER);
    // the two machine formats carry the same records
    assert_eq!(read_csv(csv.as_bytes()).unwrap(), from_json(&json).unwrap());
}

#[test]
fn compute_reports_bad_lines() {
    let out = revsz(&["compute"], "A_\nnot graph6\nA?\nC~\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 2:"));
    assert!(err.contains("line 3:"));
    assert!(!err.contains("line 4:"));
    assert_eq!(stdout(&out).lines().count(), 3);
}

#[test]
fn compute_from_file() {
    let dir = std::env::temp_dir().join(format!("revsz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("in.g6");
    let output = dir.join("out.csv");
    std::fs::write(&input, "C~\n").unwrap();
    let o = revsz(
        &["compute", input.to_str().unwrap(), "--format", "csv", "--output", output.to_str().unwrap()],
        "",
    );
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let recs = read_csv(std::fs::File::open(&output).unwrap()).unwrap();
    assert_eq!((recs[0].n, recs[0].m, recs[0].wiener), (4, 6, 6));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumerate_is_sorted_and_method_independent() {
    let naive = revsz(&["enumerate", "5"], "");
    let structural = revsz(&["enumerate", "5", "--method", "structural", "--jobs", "3"], "");
    assert!(naive.status.success());
    assert_eq!(stdout(&naive).lines().count(), 5);
    assert_eq!(naive.stdout, structural.stdout);

    let six = stdout(&revsz(&["enumerate", "6", "--jobs", "2"], ""));
    assert_eq!(six, stdout(&revsz(&["enumerate", "6", "--jobs", "1"], "")));
    assert_eq!(six.lines().count(), 19);

    assert_eq!(revsz(&["enumerate", "10"], "").status.code(), Some(3));
    assert_eq!(revsz(&["enumerate", "13", "--method", "structural"], "").status.code(), Some(3));
    assert_eq!(revsz(&["enumerate", "5", "--method", "magic"], "").status.code(), Some(2));
}

#[test]
fn verify_commands() {
    let conj = revsz(&["verify", "conjecture", "6", "7", "--method", "structural"], "");
    assert_eq!(conj.status.code(), Some(0));
    let text = stdout(&conj);
    for n in [6, 7] {
        assert!(text.contains(&format!("[PASS] n={n} theorem")), "{text}");
    }

    let csv = stdout(&revsz(&["verify", "conjecture", "6", "7", "--format", "csv"], ""));
    let mut rdr = csv::Reader::from_reader(csv.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(&headers[0], "n");
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    assert_eq!(&rows[0][col("max_q4")], "246");
    assert_eq!(&rows[1][col("max_q4")], "384");

    let json = stdout(&revsz(&["verify", "conjecture", "6", "--format", "json"], ""));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v[0]["rows"].as_array().unwrap().len(), 19);
    assert_eq!(v[0]["max_q4"], 246);

    let lemma = revsz(&["verify", "lemma3", "3", "3", "3"], "");
    assert!(lemma.status.success());
    assert!(stdout(&lemma).contains("zero-deviation edges: 3"));
    let lemma_json: serde_json::Value =
        serde_json::from_str(&stdout(&revsz(&["verify", "lemma3", "2", "2", "2", "--format", "json"], ""))).unwrap();
    assert_eq!(lemma_json["zero_deviation_edges"].as_array().unwrap().len(), 0);
    assert_eq!(revsz(&["verify", "lemma3", "1", "1", "2"], "").status.code(), Some(2));

    let ineq = revsz(&["verify", "inequalities", "6", "7", "--method", "structural"], "");
    assert!(ineq.status.success());
    assert_eq!(revsz(&["verify", "conjecture", "9", "10"], "").status.code(), Some(3));
    assert_eq!(revsz(&["verify", "conjecture", "5"], "").status.code(), Some(2));
}

#[test]
fn plot_file() {
    let path = std::env::temp_dir().join(format!("revsz-plot-{}.csv", std::process::id()));
    let o = revsz(
        &["verify", "conjecture", "6", "7", "--method", "structural", "--plot", path.to_str().unwrap()],
        "",
    );
    assert!(o.status.success());
    let plot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(plot, "n,max_q4,second_q4\n6,246,240\n7,384,380\n");
    std::fs::remove_file(&path).unwrap();
}

fn arb_record() -> impl Strategy<Value = ReportRecord> {
    (
        "[?-~]{1,12}",
        (0usize..64, 0usize..2016),
        (any::<u32>(), any::<u32>(), any::<u32>(), any::<u32>()),
        prop_oneof![
            Just(String::new()),
            Just("pendant".to_string()),
            Just("cut-vertex".to_string()),
            (1usize..9, 2usize..9, 2usize..9).prop_map(|(a, b, c)| format!("theta({a},{b},{c})")),
        ],
    )
        .prop_map(|(graph6, (n, m), (w, s, q, d), class)| ReportRecord {
            graph6,
            n,
            m,
            wiener: w as u64,
            szeged: s as u64,
            revised_szeged_q4: q as u64,
            deviation_sum: d as u64,
            class,
        })
}

proptest! {
    #[test]
    fn records_round_trip(records in proptest::collection::vec(arb_record(), 0..8)) {
        let mut buf = Vec::new();
        write_csv(&mut buf, &records).unwrap();
        prop_assert_eq!(&read_csv(buf.as_slice()).unwrap(), &records);
        prop_assert_eq!(&from_json(&to_json(&records)).unwrap(), &records);
    }
}
