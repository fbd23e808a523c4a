//! Text and structured (JSON) rendering. Both are deterministic: maps are
//! ordered and no timestamps or paths are included.

use std::fmt::Write;

use crate::scenario::Report;

pub fn render_text(report: &Report) -> String {
    let mut s = String::new();
    let status = if report.passed { "PASS" } else { "FAIL" };
    let _ = writeln!(s, "scenario {} [{status}]", report.scenario);
    if !report.description.is_empty() {
        let _ = writeln!(s, "  {}", report.description);
    }
    for step in &report.steps {
        let _ = writeln!(s, "\nstep {} ({})", step.id, step.op);
        for (k, v) in &step.inputs {
            let _ = writeln!(s, "  in  {k} = {v}");
        }
        for (k, v) in &step.outputs {
            let _ = writeln!(s, "  out {k} = {v}");
        }
    }
    if !report.expectations.is_empty() {
        let _ = writeln!(s, "\nexpectations");
        for e in &report.expectations {
            let mark = if e.passed { "ok  " } else { "FAIL" };
            let actual = e.actual.as_deref().unwrap_or("<missing>");
            if e.passed {
                let _ = writeln!(s, "  {mark} {}.{} = {}", e.step, e.field, e.expected);
            } else {
                let _ = writeln!(
                    s,
                    "  {mark} {}.{}: expected {}, got {actual}",
                    e.step, e.field, e.expected
                );
            }
        }
    }
    for id in &report.unexpected_errors {
        let _ = writeln!(s, "  FAIL step {id} raised an unexpected error");
    }
    for t in &report.references {
        let _ = writeln!(s, "\nreference: {} ({})", t.title, t.name);
        for e in &t.entries {
            let _ = writeln!(s, "  - {e}");
        }
    }
    s
}

pub fn render_structured<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}
