use std::fmt::Write as _;
use std::io;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub input: Value,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: Value,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
    /// Observations that are tallied but not asserted.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: &str, params: Value) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            params,
            cases: Vec::new(),
            summary: Summary::default(),
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, input: Value, expected: Value, got: Value, pass: bool) {
        if pass {
            self.summary.pass += 1;
        } else {
            self.summary.fail += 1;
        }
        self.cases.push(CaseRecord {
            input,
            expected,
            got,
            pass,
        });
    }

    /// Pass iff `expected == got`.
    pub fn check(&mut self, input: Value, expected: Value, got: Value) {
        let pass = expected == got;
        self.push(input, expected, got, pass);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| !c.pass)
    }

    /// Appends every case of `other`, keeping this report's name and params.
    pub fn absorb(&mut self, other: VerificationReport) {
        for c in other.cases {
            self.push(c.input, c.expected, c.got, c.pass);
        }
        self.notes.extend(other.notes);
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report fields serialize")
    }

    /// One line per failing case plus a summary; passing cases are listed
    /// only when `verbose`.
    pub fn to_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        writeln!(out, "suite {} {}", self.suite, self.params).unwrap();
        for c in &self.cases {
            if verbose || !c.pass {
                writeln!(
                    out,
                    "  {} input={} expected={} got={}",
                    if c.pass { "ok  " } else { "FAIL" },
                    c.input,
                    c.expected,
                    c.got
                )
                .unwrap();
            }
        }
        for n in &self.notes {
            writeln!(out, "  note: {n}").unwrap();
        }
        writeln!(
            out,
            "  pass={} fail={} elapsed_ms={}",
            self.summary.pass, self.summary.fail, self.elapsed_ms
        )
        .unwrap();
        out
    }

    pub fn write_csv<W: io::Write>(&self, w: W) -> csv::Result<()> {
        write_csv_all(std::slice::from_ref(self), w)
    }
}

/// All cases of several reports under a single header.
pub fn write_csv_all<W: io::Write>(reports: &[VerificationReport], w: W) -> csv::Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    wr.write_record(["suite", "input", "expected", "got", "pass"])?;
    for r in reports {
        for c in &r.cases {
            wr.write_record([
                r.suite.as_str(),
                &compact(&c.input),
                &compact(&c.expected),
                &compact(&c.got),
                if c.pass { "true" } else { "false" },
            ])?;
        }
    }
    wr.flush()?;
    Ok(())
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Bundles several reports under one name.
pub fn combined(name: &str, reports: &[VerificationReport]) -> Value {
    let pass: usize = reports.iter().map(|r| r.summary.pass).sum();
    let fail: usize = reports.iter().map(|r| r.summary.fail).sum();
    json!({
        "suite": name,
        "reports": reports.iter().map(VerificationReport::to_json).collect::<Vec<_>>(),
        "summary": {"pass": pass, "fail": fail},
        "elapsed_ms": reports.iter().map(|r| r.elapsed_ms).sum::<u64>(),
    })
}
