//! Parameter sweeps producing deterministic catalogs.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::classify::ParamsM;
use crate::par::{par_map, Execution};
use crate::record::{Record, RecordOptions};

/// Inclusive integer range; `lo > hi` is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub const fn new(lo: i64, hi: i64) -> Self {
        Span { lo, hi }
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }
}

impl std::str::FromStr for Span {
    type Err = String;

    /// `a..b` (inclusive) or a single integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
        match s.split_once("..") {
            Some((lo, hi)) => Ok(Span::new(parse(lo)?, parse(hi.trim_start_matches('='))?)),
            None => {
                let v = parse(s)?;
                Ok(Span::new(v, v))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (json or csv)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub n: Span,
    pub r: Span,
    pub s: Span,
    /// Fixed `f`, or every residue mod `n` satisfying the congruence.
    pub f: Option<i64>,
    /// Fixed `A`, or every residue mod `n`.
    pub a: Option<i64>,
    pub record: RecordOptions,
    pub execution: Execution,
}

impl SweepSpec {
    pub fn new(n: Span, r: Span, s: Span) -> Self {
        SweepSpec {
            n,
            r,
            s,
            f: None,
            a: None,
            record: RecordOptions::default(),
            execution: Execution::default(),
        }
    }

    /// Valid tuples in lexicographic `(n, r, s, f, A)` order. Tuples with
    /// `r < 0` or `n ≤ 0` are outside the parameter domain and skipped.
    pub fn tuples(&self) -> Vec<ParamsM> {
        let mut out = Vec::new();
        for n in self.n.iter().filter(|&n| n > 0) {
            for r in self.r.iter().filter(|&r| r >= 0) {
                for s in self.s.iter() {
                    let fs: Vec<i64> = match self.f {
                        Some(f) => vec![f.rem_euclid(n)],
                        None => (0..n).collect(),
                    };
                    let fs = fs.into_iter().filter(|f| (f * (r - s)).rem_euclid(n) == 0);
                    let as_: Vec<i64> = match self.a {
                        Some(a) => vec![a.rem_euclid(n)],
                        None => (0..n).collect(),
                    };
                    for f in fs {
                        for &a in &as_ {
                            out.push(ParamsM::new(r, n, s, f, a).expect("congruence checked"));
                        }
                    }
                }
            }
        }
        out
    }
}

pub fn run_sweep(spec: &SweepSpec) -> Vec<Record> {
    let tuples = spec.tuples();
    par_map(spec.execution, &tuples, |p| Record::build(p, &spec.record))
}

/// Write records as a pretty JSON array or as CSV rows with a header.
pub fn write_catalog<W: Write>(records: &[Record], format: Format, mut out: W) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, records)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if records.is_empty() {
                w.write_record(CSV_HEADER)?;
            }
            for r in records {
                w.serialize(r.csv_row())?;
            }
            w.flush()
        }
    }
}

const CSV_HEADER: [&str; 17] = [
    "n",
    "r",
    "s",
    "f",
    "A",
    "mu",
    "kind",
    "order_g",
    "order_e",
    "euler_E",
    "euler_G",
    "tits",
    "m_group",
    "decomposition",
    "verified",
    "fault",
    "warnings",
];
