//! Text and JSON renderings of a check report.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::paperchecks::{Report, Verdict};
use crate::presented::GradedComponent;

/// Version of the JSON report layout.
pub const REPORT_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConfigEcho {
    pub max_degree: Option<u32>,
    pub per_check: BTreeMap<String, u32>,
    pub format: String,
    pub config: Option<String>,
}

#[derive(Serialize)]
struct JsonResult<'a> {
    name: &'a str,
    verdict: String,
    paper_anchor: &'a str,
    witnesses: Map<String, Value>,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct JsonSummary {
    pass: usize,
    fail: usize,
    error: usize,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    version: &'static str,
    config_echo: &'a ConfigEcho,
    results: Vec<JsonResult<'a>>,
    summary: JsonSummary,
}

pub fn report_json(report: &Report, echo: &ConfigEcho) -> String {
    let results = report
        .results
        .iter()
        .map(|r| JsonResult {
            name: &r.name,
            verdict: r.verdict.to_string(),
            paper_anchor: &r.anchor,
            witnesses: r
                .witnesses
                .iter()
                .map(|(l, w)| (l.clone(), Value::String(w.to_string())))
                .collect(),
            elapsed_ms: r.elapsed.as_secs_f64() * 1000.0,
        })
        .collect();
    let doc = JsonReport {
        version: REPORT_VERSION,
        config_echo: echo,
        results,
        summary: JsonSummary {
            pass: report.summary.pass,
            fail: report.summary.fail,
            error: report.summary.error,
        },
    };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

pub fn report_text(report: &Report) -> String {
    let mut s = String::new();
    for r in &report.results {
        let tag = match r.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Error => "ERROR",
        };
        s.push_str(&format!(
            "{tag} {} [{}] {:.1} ms\n",
            r.name,
            r.anchor,
            r.elapsed.as_secs_f64() * 1000.0
        ));
        for (label, w) in &r.witnesses {
            s.push_str(&format!("    {label}: {w}\n"));
        }
    }
    let m = &report.summary;
    s.push_str(&format!(
        "summary: {} pass, {} fail, {} error\n",
        m.pass, m.fail, m.error
    ));
    s
}

/// Exit status: 3 if any check errored, 1 if any failed, 0 otherwise.
pub fn exit_code(report: &Report) -> i32 {
    if report.summary.error > 0 {
        3
    } else if report.summary.fail > 0 {
        1
    } else {
        0
    }
}

pub fn hilbert_text(rows: &[GradedComponent]) -> String {
    rows.iter().map(|r| format!("{r}\n")).collect()
}

pub fn hilbert_json(name: &str, rows: &[GradedComponent]) -> String {
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            serde_json::json!({
                "degree": r.degree,
                "free_rank": r.free_rank,
                "torsion": r.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                "text": r.to_string(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&serde_json::json!({ "presentation": name, "components": rows }))
        .expect("table serializes")
}
