//! Line-oriented text format for DFAs.
//!
//! ```text
//! dfa 3 2
//! start 0
//! finals 0 1
//! state 0 12 : 2 0
//! state 1 13 : 1 1
//! state 2 23 : 0 2
//! ```
//!
//! After the `dfa <states> <letters>` header come one `start` line, one
//! `finals` line and one `state` line per state in any order. A state line
//! carries an optional label before the colon and the image of the state
//! under each letter after it. Blank lines and lines starting with `#` are
//! ignored.

use std::fmt::Write as _;

use permrev_core::Dfa;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: expected {expected}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
}

pub fn emit_dfa(dfa: &Dfa) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dfa {} {}", dfa.num_states(), dfa.alphabet_size());
    let _ = writeln!(out, "start {}", dfa.start());
    out.push_str("finals");
    for f in dfa.finals() {
        let _ = write!(out, " {f}");
    }
    out.push('\n');
    for q in 0..dfa.num_states() {
        let _ = write!(out, "state {q}");
        if let Some(l) = dfa.label(q) {
            let _ = write!(out, " {l}");
        }
        out.push_str(" :");
        for t in dfa.row(q) {
            let _ = write!(out, " {t}");
        }
        out.push('\n');
    }
    out
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain([(line.len(), ' ')]) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

struct Line<'a> {
    number: usize,
    end_column: usize,
    tokens: Vec<(usize, &'a str)>,
}

impl Line<'_> {
    fn err(&self, column: usize, expected: impl Into<String>) -> ParseError {
        ParseError { line: self.number, column, expected: expected.into() }
    }

    fn token(&self, i: usize, expected: &str) -> Result<(usize, &str), ParseError> {
        self.tokens.get(i).copied().ok_or_else(|| self.err(self.end_column, expected))
    }

    fn index(&self, i: usize, what: &str, bound: usize) -> Result<usize, ParseError> {
        let (col, tok) = self.token(i, what)?;
        let v: usize = tok.parse().map_err(|_| self.err(col, what))?;
        if v >= bound {
            return Err(self.err(col, format!("{what} below {bound}")));
        }
        Ok(v)
    }

    fn count(&self, i: usize, what: &str) -> Result<usize, ParseError> {
        let (col, tok) = self.token(i, what)?;
        match tok.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(self.err(col, what)),
        }
    }

    fn no_more(&self, i: usize) -> Result<(), ParseError> {
        match self.tokens.get(i) {
            Some(&(col, _)) => Err(self.err(col, "end of line")),
            None => Ok(()),
        }
    }
}

pub fn parse_dfa(text: &str) -> Result<Dfa, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| Line { number: i + 1, end_column: l.chars().count() + 1, tokens: tokens(l) })
        .filter(|l| l.tokens.first().is_some_and(|(_, t)| !t.starts_with('#')));

    let header =
        lines.next().ok_or(ParseError { line: 1, column: 1, expected: "header `dfa <states> <letters>`".into() })?;
    if header.tokens[0].1 != "dfa" {
        return Err(header.err(header.tokens[0].0, "header `dfa <states> <letters>`"));
    }
    let n = header.count(1, "state count (at least 1)")?;
    let k = header.count(2, "alphabet size (at least 1)")?;
    header.no_more(3)?;

    let mut start = None;
    let mut finals: Option<Vec<usize>> = None;
    let mut rows: Vec<Option<(Option<String>, Vec<usize>)>> = vec![None; n];
    let mut last_line = header.number;
    for line in lines {
        last_line = line.number;
        let (col, keyword) = line.tokens[0];
        match keyword {
            "start" => {
                if start.is_some() {
                    return Err(line.err(col, "a single `start` line"));
                }
                start = Some(line.index(1, "start state", n)?);
                line.no_more(2)?;
            }
            "finals" => {
                if finals.is_some() {
                    return Err(line.err(col, "a single `finals` line"));
                }
                finals =
                    Some((1..line.tokens.len()).map(|i| line.index(i, "final state", n)).collect::<Result<_, _>>()?);
            }
            "state" => {
                let q = line.index(1, "state index", n)?;
                if rows[q].is_some() {
                    return Err(line.err(line.tokens[1].0, format!("state {q} to be defined only once")));
                }
                let (mut at, label) = match line.token(2, "`:` or a label")? {
                    (_, ":") => (3, None),
                    (_, label) => {
                        let (col, colon) = line.token(3, "`:`")?;
                        if colon != ":" {
                            return Err(line.err(col, "`:`"));
                        }
                        (4, Some(label.to_string()))
                    }
                };
                let mut images = Vec::with_capacity(k);
                for _ in 0..k {
                    images.push(line.index(at, "target state", n)?);
                    at += 1;
                }
                line.no_more(at)?;
                rows[q] = Some((label, images));
            }
            _ => return Err(line.err(col, "`start`, `finals` or `state`")),
        }
    }

    let missing = |what: &str| ParseError { line: last_line + 1, column: 1, expected: what.to_string() };
    let start = start.ok_or_else(|| missing("a `start` line"))?;
    let finals = finals.ok_or_else(|| missing("a `finals` line"))?;
    let mut delta = Vec::with_capacity(n * k);
    let mut labels = Vec::with_capacity(n);
    for (q, row) in rows.into_iter().enumerate() {
        let (label, images) = row.ok_or_else(|| missing(&format!("a line for state {q}")))?;
        delta.extend(images);
        labels.push(label);
    }
    let mut dfa = Dfa::new(n, k, delta, start, finals).map_err(|e| missing(&e.to_string()))?;
    for (q, label) in labels.into_iter().enumerate() {
        dfa.set_label(q, label).map_err(|e| missing(&e.to_string()))?;
    }
    Ok(dfa)
}
