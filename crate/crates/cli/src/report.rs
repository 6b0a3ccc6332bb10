use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

pub const REPORT_SCHEMA: &str = "enriques-report/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: &str, headers: &[&str]) -> Table {
        Table { title: title.to_string(), headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push<I, S>(&mut self, row: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.rows.push(row.into_iter().map(|s| s.to_string()).collect());
    }
}

/// The output of one suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub suite: String,
    pub pass: bool,
    pub assertions: Vec<Assertion>,
    pub tables: Vec<Table>,
    pub notes: Vec<String>,
}

impl Section {
    pub fn new(suite: &str) -> Section {
        Section { suite: suite.to_string(), pass: true, assertions: Vec::new(), tables: Vec::new(), notes: Vec::new() }
    }

    pub fn assert(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.pass &= pass;
        self.assertions.push(Assertion { name: name.into(), pass, detail: detail.into() });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn failed(suite: &str, error: impl std::fmt::Display) -> Section {
        let mut s = Section::new(suite);
        s.assert("suite completed", false, error.to_string());
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub suite: String,
    pub config: serde_json::Value,
    pub pass: bool,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(suite: &str, config: serde_json::Value, sections: Vec<Section>) -> Report {
        let pass = sections.iter().all(|s| s.pass);
        Report { schema: REPORT_SCHEMA.to_string(), suite: suite.to_string(), config, pass, sections }
    }

    pub fn assertions(&self) -> impl Iterator<Item = (&str, &Assertion)> {
        self.sections.iter().flat_map(|s| s.assertions.iter().map(move |a| (s.suite.as_str(), a)))
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

fn md_table(out: &mut String, headers: &[String], rows: &[Vec<String>]) {
    let _ = writeln!(out, "| {} |", headers.iter().map(|h| md_cell(h)).collect::<Vec<_>>().join(" | "));
    let _ = writeln!(out, "|{}|", vec!["---"; headers.len()].join("|"));
    for r in rows {
        let _ = writeln!(out, "| {} |", r.iter().map(|c| md_cell(c)).collect::<Vec<_>>().join(" | "));
    }
    out.push('\n');
}

pub fn to_markdown(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Report: {}\n", r.suite);
    let _ = writeln!(out, "Verdict: **{}**\n", verdict(r.pass));
    let _ = writeln!(out, "Configuration: `{}`\n", r.config);
    for s in &r.sections {
        let _ = writeln!(out, "## {} ({})\n", s.suite, verdict(s.pass));
        let rows: Vec<Vec<String>> =
            s.assertions.iter().map(|a| vec![a.name.clone(), verdict(a.pass).to_string(), a.detail.clone()]).collect();
        md_table(&mut out, &["assertion".into(), "result".into(), "detail".into()], &rows);
        for t in &s.tables {
            let _ = writeln!(out, "### {}\n", t.title);
            md_table(&mut out, &t.headers, &t.rows);
        }
        for n in &s.notes {
            let _ = writeln!(out, "- {n}");
        }
        if !s.notes.is_empty() {
            out.push('\n');
        }
    }
    out
}

/// One record per line: `suite,kind,name,cells...`, with `kind` one of
/// `verdict`, `assertion`, `header`, `row`, `note`.
pub fn to_csv(r: &Report) -> String {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    let mut rec = |cells: Vec<&str>| w.write_record(cells).expect("in-memory csv");
    rec(vec![r.suite.as_str(), "verdict", "", verdict(r.pass)]);
    for s in &r.sections {
        rec(vec![s.suite.as_str(), "verdict", "", verdict(s.pass)]);
        for a in &s.assertions {
            rec(vec![s.suite.as_str(), "assertion", a.name.as_str(), verdict(a.pass), a.detail.as_str()]);
        }
        for t in &s.tables {
            let mut h = vec![s.suite.as_str(), "header", t.title.as_str()];
            h.extend(t.headers.iter().map(String::as_str));
            rec(h);
            for row in &t.rows {
                let mut c = vec![s.suite.as_str(), "row", t.title.as_str()];
                c.extend(row.iter().map(String::as_str));
                rec(c);
            }
        }
        for n in &s.notes {
            rec(vec![s.suite.as_str(), "note", "", n.as_str()]);
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 input")
}

pub fn to_json(r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}
