//! Report serialization: JSON lines for tooling and a plain-text table.

use std::fmt::Write as _;

use crate::search::ReportRecord;
use crate::Error;

pub fn to_json_line(record: &ReportRecord) -> String {
    serde_json::to_string(record).expect("report records always serialize")
}

pub fn from_json_line(line: &str) -> Result<ReportRecord, serde_json::Error> {
    serde_json::from_str(line)
}

/// Every record as one JSON line, each terminated by `\n`.
pub fn to_json_lines(records: &[ReportRecord]) -> String {
    records.iter().map(|r| to_json_line(r) + "\n").collect()
}

/// Human-readable table with the same numeric content as the JSON form.
pub fn to_table(records: &[ReportRecord]) -> String {
    let width = records.iter().map(|r| r.vector.len()).max().unwrap_or(6).max(6);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3}  {:<width$}  {:>3}  {:<8}  {:<9}  {:<16}  {:<15}  {:>10}",
        "n", "vector", "d", "complete", "self_dual", "class", "strategy", "elapsed_ms"
    );
    for r in records {
        let _ = writeln!(
            out,
            "{:>3}  {:<width$}  {:>3}  {:<8}  {:<9}  {:<16}  {:<15}  {:>10}",
            r.n,
            r.vector,
            r.d,
            r.proof_complete,
            r.self_dual,
            r.classification.as_str(),
            strategy_name(r),
            r.elapsed_ms,
        );
        if let Some(seed) = r.seed {
            let _ = writeln!(out, "     seed {seed}");
        }
        if let Some(e) = &r.enumerator {
            let terms: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, a)| format!("A_{i}={a}"))
                .collect();
            let _ = writeln!(out, "     {}", terms.join(" "));
        }
    }
    out
}

fn strategy_name(r: &ReportRecord) -> String {
    serde_json::to_value(r.strategy)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

/// Process exit status for a failed request: 1 when an analysis was
/// refused by the cost guard, 2 for anything wrong with the input.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CostGuard { .. } => 1,
        _ => 2,
    }
}
