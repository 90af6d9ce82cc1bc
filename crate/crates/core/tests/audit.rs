use colalg::audit::{run_audit, AuditOptions, RowVerdict};
use colalg::corpus::{generate_corpus, CorpusEntry};

fn small_corpus() -> Vec<CorpusEntry> {
    generate_corpus(0)
        .into_iter()
        .filter(|e| {
            [
                "a/worked_example",
                "b/abelian_2",
                "c/upper_triangular",
                "f/trialgebra_upper_triangular",
            ]
            .contains(&e.id.as_str())
        })
        .collect()
}

#[test]
fn timing_stays_out_of_the_machine_report() {
    let corpus = small_corpus();
    let plain = run_audit(&corpus, &AuditOptions::default());
    let timed = run_audit(
        &corpus,
        &AuditOptions {
            timing: true,
            ..Default::default()
        },
    );
    assert!(!plain.rows.is_empty());
    assert_eq!(plain.to_machine(), timed.to_machine());
    assert!(timed.rows.iter().all(|r| r.elapsed.is_some()));
    assert!(timed.to_text().contains(" ms)"));
    assert!(!plain.to_text().contains(" ms)"));
}

#[test]
fn summary_matches_rows() {
    let report = run_audit(&small_corpus(), &AuditOptions::default());
    let total: usize = [
        RowVerdict::Pass,
        RowVerdict::Fail,
        RowVerdict::Skipped,
        RowVerdict::Error,
    ]
    .iter()
    .map(|&v| report.count(v))
    .sum();
    assert_eq!(total, report.rows.len());
    assert_eq!(report.count(RowVerdict::Error), 0);
    let w: usize = report.rows.iter().map(|r| r.witness_count()).sum();
    assert_eq!(w, report.witness_count());
    assert!(report.to_text().ends_with(&format!("{}\n", report.summary_line())));
    let json: serde_json::Value = serde_json::from_str(&report.to_machine()).unwrap();
    assert_eq!(json["summary"]["rows"], report.rows.len());
}

#[test]
fn printed_comstrans_fails_with_witnesses_on_noncommutative_input() {
    let report = run_audit(&small_corpus(), &AuditOptions::default());
    let row = report
        .rows
        .iter()
        .find(|r| {
            r.theorem == "from_associative(comstrans)"
                && r.instance == "c/upper_triangular"
                && r.variant.is_some_and(|v| v.as_str() == "printed")
        })
        .expect("ledger row");
    assert!(row.ledger);
    assert_eq!(row.verdict, RowVerdict::Fail);
    assert!(row.witness_count() > 0);
}
