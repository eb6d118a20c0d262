//! Graphviz export.

use std::fmt::Write as _;

use permrev_core::Dfa;

fn letter(c: usize) -> String {
    match u8::try_from(c).ok().filter(|&c| c < 26) {
        Some(c) => char::from(b'a' + c).to_string(),
        None => c.to_string(),
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per state (finals drawn with a double border), an invisible
/// point with an arrow into the start state, and one edge per state and
/// letter, all in index order.
pub fn emit_dot(dfa: &Dfa) -> String {
    let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n");
    for q in 0..dfa.num_states() {
        let shape = if dfa.is_final(q) { "doublecircle" } else { "circle" };
        let _ = writeln!(out, "  q{q} [label={}, shape={shape}];", quote(&dfa.display_name(q)));
    }
    let _ = writeln!(out, "  __start -> q{};", dfa.start());
    for q in 0..dfa.num_states() {
        for (c, &t) in dfa.row(q).iter().enumerate() {
            let _ = writeln!(out, "  q{q} -> q{t} [label={}];", quote(&letter(c)));
        }
    }
    out.push_str("}\n");
    out
}
