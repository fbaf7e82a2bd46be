//! Output records and their text, JSON and CSV renderings.

use ramsum_core::Rational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::{self, Write};

/// An exact rational as decimal strings; the sign rides on `num`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Q {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for Q {
    fn from(v: &Rational) -> Self {
        Q {
            num: v.numer().to_string(),
            den: v.denom().to_string(),
        }
    }
}

impl Q {
    pub fn to_rational(&self) -> Option<Rational> {
        ramsum_core::rational::parse_rational(&format!("{}/{}", self.num, self.den))
    }
}

/// A value at an index: `B_n`, a coefficient of `x^n`, one entry of a table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub index: i64,
    pub value: Q,
}

/// One coefficient of an expansion in `λ` or `ε`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub power: i64,
    pub coeff: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Value(Q),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub footnotes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub kind: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divergent: Option<Vec<Term>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail: Option<Vec<Term>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Table>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<Check>>,
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Record {
            kind: kind.to_string(),
            ..Record::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn value(mut self, index: i64, v: &Rational) -> Self {
        self.values.push(Entry {
            index,
            value: v.into(),
        });
        self
    }
}

pub fn terms<'a>(it: impl IntoIterator<Item = (i64, &'a Rational)>) -> Vec<Term> {
    it.into_iter()
        .map(|(power, c)| Term {
            power,
            coeff: c.into(),
        })
        .collect()
}

/// What a command produced: records for the machine formats and lines for
/// people.
#[derive(Debug, Default)]
pub struct Report {
    pub records: Vec<Record>,
    pub lines: Vec<String>,
}

impl Report {
    pub fn push(&mut self, record: Record, line: impl Into<String>) {
        self.records.push(record);
        self.lines.push(line.into());
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    kind: &'a str,
    label: &'a str,
    index: i64,
    num: &'a str,
    den: &'a str,
    text: &'a str,
}

pub fn to_json(records: &[Record]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

pub fn emit(report: &Report, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Text => {
            for line in &report.lines {
                writeln!(out, "{line}")?;
            }
            Ok(())
        }
        Format::Json => out.write_all(to_json(&report.records).as_bytes()),
        Format::Csv => write_csv(&report.records, out),
    }
}

fn write_csv(records: &[Record], out: &mut dyn Write) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut row = |kind: &str, label: &str, index: i64, q: Option<&Q>, text: &str| {
        let (num, den) = q.map_or(("", ""), |q| (q.num.as_str(), q.den.as_str()));
        w.serialize(CsvRow {
            kind,
            label,
            index,
            num,
            den,
            text,
        })
    };
    for r in records {
        let method = r.method.as_deref().unwrap_or("");
        for e in &r.values {
            row(&r.kind, method, e.index, Some(&e.value), "")?;
        }
        for (label, list) in [("divergent", &r.divergent), ("tail", &r.tail)] {
            for t in list.iter().flatten() {
                row(&r.kind, label, t.power, Some(&t.coeff), "")?;
            }
        }
        if let Some(c) = &r.constant {
            row(&r.kind, "constant", 0, Some(c), "")?;
        }
        if let Some(t) = &r.table {
            for (i, cells) in t.rows.iter().enumerate() {
                for (name, cell) in t.columns.iter().zip(cells) {
                    match cell {
                        Cell::Value(q) => row(&r.kind, name, i as i64, Some(q), "")?,
                        Cell::Text(s) => row(&r.kind, name, i as i64, None, s)?,
                    }
                }
            }
        }
        for (i, c) in r.checks.iter().flatten().enumerate() {
            let status = if c.passed { "pass" } else { "fail" };
            row(&r.kind, &c.name, i as i64, None, status)?;
        }
    }
    w.flush()
}
