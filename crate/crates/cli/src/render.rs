//! Serializes a [`RunReport`] as JSON, or as a plain table with `--pretty`.

use std::fmt::Write;

use crate::RunReport;

pub fn render(report: &RunReport, pretty: bool) -> String {
    if !pretty {
        let mut s = serde_json::to_string_pretty(report).expect("report is serializable");
        s.push('\n');
        return s;
    }
    let mut out = String::new();
    if !report.reports.is_empty() {
        let _ = writeln!(
            out,
            "{:>5}  {:<14} {:>22} {:>22} {:>12}  status",
            "trial", "label", "lhs", "rhs", "margin"
        );
        for r in &report.reports {
            let b = &r.report;
            let status = match (b.satisfied, b.fragile) {
                (true, _) => "ok",
                (false, true) => "VIOLATED (fragile)",
                (false, false) => "VIOLATED",
            };
            let _ = writeln!(
                out,
                "{:>5}  {:<14} {:>22.15e} {:>22.15e} {:>12.3e}  {status}",
                r.trial, b.label, b.lhs, b.rhs, b.margin
            );
        }
    }
    for g in &report.guarded {
        let _ = writeln!(out, "{:>5}  {:<14} guarded out: {}", g.trial, g.target, g.reason);
    }
    if let Some(obj) = report.result.as_ref().and_then(|v| v.as_object()) {
        for (k, v) in obj {
            let _ = writeln!(out, "{k:>14}: {v}");
        }
    }
    let c = &report.counts;
    let _ = writeln!(
        out,
        "checked {}  satisfied {}  violated {}  guarded out {}",
        c.checked, c.satisfied, c.violated, c.guarded_out
    );
    out
}
