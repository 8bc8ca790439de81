use cycpres::oracle::VerifyConfig;
use cycpres::par::Execution;
use cycpres::record::{Record, RecordOptions};
use cycpres::sweep::{run_sweep, write_catalog, Format, Span, SweepSpec};

fn spec(exec: Execution) -> SweepSpec {
    let mut spec = SweepSpec::new(Span::new(1, 6), Span::new(0, 3), Span::new(-3, 3));
    spec.execution = exec;
    spec
}

#[test]
fn sequential_and_parallel_agree() {
    let seq = run_sweep(&spec(Execution::Sequential));
    let par = run_sweep(&spec(Execution::Parallel));
    assert_eq!(seq, par);
    let mut a = Vec::new();
    let mut b = Vec::new();
    write_catalog(&seq, Format::Json, &mut a).unwrap();
    write_catalog(&par, Format::Json, &mut b).unwrap();
    assert_eq!(a, b);
}

#[test]
fn json_catalog_round_trips() {
    let records = run_sweep(&spec(Execution::Parallel));
    let mut buf = Vec::new();
    write_catalog(&records, Format::Json, &mut buf).unwrap();
    let back: Vec<Record> = serde_json::from_slice(&buf).unwrap();
    assert_eq!(back, records);
}

#[test]
fn csv_has_one_row_per_record() {
    let records = run_sweep(&spec(Execution::Parallel));
    let mut buf = Vec::new();
    write_catalog(&records, Format::Csv, &mut buf).unwrap();
    let mut rdr = csv::Reader::from_reader(buf.as_slice());
    assert_eq!(rdr.records().count(), records.len());
}

#[test]
fn empty_range_gives_empty_catalog() {
    let s = SweepSpec::new(Span::new(4, 4), Span::new(2, 1), Span::new(0, 0));
    assert!(run_sweep(&s).is_empty());
    let mut buf = Vec::new();
    write_catalog(&[], Format::Json, &mut buf).unwrap();
    assert_eq!(buf, b"[]\n");
}

#[test]
fn verified_sweep_has_no_failures() {
    let mut s = SweepSpec::new(Span::new(1, 5), Span::new(0, 3), Span::new(-3, 3));
    s.record = RecordOptions {
        verify: Some(VerifyConfig::default()),
        ..RecordOptions::default()
    };
    for r in run_sweep(&s) {
        let v = r.verification.as_ref().unwrap();
        assert_eq!(v.failed, 0, "{}: {:?}", r.params, v.failures);
    }
}
