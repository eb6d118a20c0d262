//! Versioned JSON reports.

use serde::Serialize;

pub const FORMAT_VERSION: &str = "1";

#[derive(Serialize)]
struct Envelope<'a, T> {
    format_version: &'static str,
    kind: &'a str,
    report: &'a T,
}

/// `{"format_version": "1", "kind": ..., "report": ...}`, pretty-printed.
/// Keys follow struct field order, so the output is deterministic.
pub fn to_json<T: Serialize>(kind: &str, report: &T) -> String {
    let env = Envelope { format_version: FORMAT_VERSION, kind, report };
    let mut s = serde_json::to_string_pretty(&env).expect("reports serialize");
    s.push('\n');
    s
}
