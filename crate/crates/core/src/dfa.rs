//! Complete deterministic automata over dense state and letter indices.

use alloc::collections::VecDeque;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A word over an indexed alphabet. Letters apply left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses letters written as `a`, `b`, `c`, ... (letter 0, 1, 2, ...).
    pub fn from_letters(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                'a'..='z' => Ok(ch as usize - 'a' as usize),
                _ => Err(Error::InvalidInput(alloc::format!("bad letter {ch:?} in word"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    /// Letters below 26 print as `a..z`; the empty word prints as `ε`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for &c in &self.0 {
            if c < 26 {
                write!(f, "{}", (b'a' + c as u8) as char)?;
            } else {
                write!(f, "<{c}>")?;
            }
        }
        Ok(())
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// A complete DFA. States are `0..num_states`, letters `0..alphabet_size`.
///
/// Transitions are stored row-major: the image of `(q, c)` lives at
/// `q * alphabet_size + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    num_states: usize,
    alphabet_size: usize,
    delta: Vec<usize>,
    start: usize,
    finals: Vec<bool>,
    labels: Vec<Option<String>>,
}

impl Dfa {
    pub fn new(
        num_states: usize,
        alphabet_size: usize,
        delta: Vec<usize>,
        start: usize,
        finals: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if num_states == 0 {
            return Err(Error::InvalidInput("a DFA needs at least one state".into()));
        }
        if alphabet_size == 0 {
            return Err(Error::InvalidInput("a DFA needs at least one letter".into()));
        }
        let cells = num_states
            .checked_mul(alphabet_size)
            .ok_or_else(|| Error::InvalidInput("transition table too large".into()))?;
        if delta.len() != cells {
            return Err(Error::SizeMismatch { expected: cells, found: delta.len() });
        }
        if let Some(&bad) = delta.iter().find(|&&t| t >= num_states) {
            return Err(Error::StateOutOfRange { state: bad, num_states });
        }
        if start >= num_states {
            return Err(Error::StateOutOfRange { state: start, num_states });
        }
        let mut final_mask = alloc::vec![false; num_states];
        for f in finals {
            if f >= num_states {
                return Err(Error::StateOutOfRange { state: f, num_states });
            }
            final_mask[f] = true;
        }
        Ok(Dfa { num_states, alphabet_size, delta, start, finals: final_mask, labels: alloc::vec![None; num_states] })
    }

    /// Builds a DFA from per-state rows of images, one entry per letter.
    pub fn from_rows(rows: &[Vec<usize>], start: usize, finals: impl IntoIterator<Item = usize>) -> Result<Self> {
        let alphabet_size = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != alphabet_size) {
            return Err(Error::SizeMismatch { expected: alphabet_size, found: r.len() });
        }
        let delta = rows.iter().flatten().copied().collect();
        Dfa::new(rows.len(), alphabet_size, delta, start, finals)
    }

    /// Attaches a label to every state.
    ///
    /// Labels must be non-empty and may not contain whitespace or `:`, so
    /// that they survive the line-oriented text format.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.num_states {
            return Err(Error::SizeMismatch { expected: self.num_states, found: labels.len() });
        }
        for l in &labels {
            check_label(l)?;
        }
        self.labels = labels.into_iter().map(Some).collect();
        Ok(self)
    }

    pub fn set_label(&mut self, q: usize, label: Option<String>) -> Result<()> {
        self.check_state(q)?;
        if let Some(l) = &label {
            check_label(l)?;
        }
        self.labels[q] = label;
        Ok(())
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    /// Final states in increasing order.
    pub fn finals(&self) -> Vec<usize> {
        (0..self.num_states).filter(|&q| self.finals[q]).collect()
    }

    pub fn num_finals(&self) -> usize {
        self.finals.iter().filter(|&&f| f).count()
    }

    pub fn label(&self, q: usize) -> Option<&str> {
        self.labels.get(q).and_then(|l| l.as_deref())
    }

    pub fn has_labels(&self) -> bool {
        self.labels.iter().any(Option::is_some)
    }

    /// Label of `q`, or its index when unlabeled.
    pub fn display_name(&self, q: usize) -> String {
        self.label(q).map_or_else(|| q.to_string(), ToString::to_string)
    }

    /// Image of `q` under letter `c`. Panics if either index is out of range.
    #[inline]
    pub fn step(&self, q: usize, c: usize) -> usize {
        assert!(c < self.alphabet_size, "letter out of range");
        self.delta[q * self.alphabet_size + c]
    }

    pub fn row(&self, q: usize) -> &[usize] {
        &self.delta[q * self.alphabet_size..(q + 1) * self.alphabet_size]
    }

    /// Same transition table, start state and final states; labels ignored.
    pub fn same_table(&self, other: &Dfa) -> bool {
        self.num_states == other.num_states
            && self.alphabet_size == other.alphabet_size
            && self.start == other.start
            && self.delta == other.delta
            && self.finals == other.finals
    }

    pub fn check_state(&self, q: usize) -> Result<()> {
        if q < self.num_states {
            Ok(())
        } else {
            Err(Error::StateOutOfRange { state: q, num_states: self.num_states })
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&c| c >= self.alphabet_size) {
            Some(&letter) => Err(Error::LetterOutOfRange { letter, alphabet_size: self.alphabet_size }),
            None => Ok(()),
        }
    }

    /// `q . w`: the fold of the transition function over `w`, left to right.
    pub fn apply_word(&self, q: usize, w: &Word) -> Result<usize> {
        self.check_state(q)?;
        self.check_word(w)?;
        Ok(w.0.iter().fold(q, |p, &c| self.delta[p * self.alphabet_size + c]))
    }

    pub fn accepts(&self, w: &Word) -> Result<bool> {
        Ok(self.finals[self.apply_word(self.start, w)?])
    }

    /// True iff every letter permutes the states.
    pub fn is_permutation_automaton(&self) -> bool {
        let mut hit = alloc::vec![false; self.num_states];
        (0..self.alphabet_size).all(|c| {
            hit.iter_mut().for_each(|h| *h = false);
            (0..self.num_states).all(|q| !core::mem::replace(&mut hit[self.step(q, c)], true))
        })
    }

    /// States reachable from the start, in breadth-first discovery order with
    /// letters tried in increasing index.
    pub fn reachable_states(&self) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.num_states];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.start]);
        seen[self.start] = true;
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for &t in self.row(q) {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        order
    }

    /// The reachable part, renumbered in breadth-first order. Labels follow
    /// their states.
    pub fn trim(&self) -> Dfa {
        let order = self.reachable_states();
        let mut index = alloc::vec![usize::MAX; self.num_states];
        for (i, &q) in order.iter().enumerate() {
            index[q] = i;
        }
        let delta = order.iter().flat_map(|&q| self.row(q).iter().map(|&t| index[t])).collect();
        Dfa {
            num_states: order.len(),
            alphabet_size: self.alphabet_size,
            delta,
            start: 0,
            finals: order.iter().map(|&q| self.finals[q]).collect(),
            labels: order.iter().map(|&q| self.labels[q].clone()).collect(),
        }
    }

    /// Same automaton with the set of final states complemented.
    pub fn complement(&self) -> Dfa {
        let mut d = self.clone();
        d.finals.iter_mut().for_each(|f| *f = !*f);
        d
    }
}

fn check_label(l: &str) -> Result<()> {
    if l.is_empty() || l.chars().any(|c| c.is_whitespace() || c == ':') {
        Err(Error::InvalidInput(alloc::format!("state label {l:?} is empty or contains whitespace or ':'")))
    } else {
        Ok(())
    }
}
