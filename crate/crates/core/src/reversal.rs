//! Reverse subset construction.
//!
//! For a DFA `(Q, Σ, ·, s, F)` the reverse automaton has subsets of `Q` as
//! states, starts in `F`, reads `c` by taking preimages
//! `S ↦ { q | q·c ∈ S }`, and accepts exactly the subsets containing `s`.
//! Only the part reachable from `F` is ever built.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use crate::dfa::{Dfa, Word};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_REVERSE_STATES: usize = 1_000_000;

/// A set of forward states, as a fixed-length bit vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetState {
    len: usize,
    words: Vec<u64>,
}

impl SubsetState {
    pub fn empty(len: usize) -> Self {
        SubsetState { len, words: alloc::vec![0; len.div_ceil(64)] }
    }

    pub fn from_states(len: usize, states: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = SubsetState::empty(len);
        for q in states {
            if q >= len {
                return Err(Error::StateOutOfRange { state: q, num_states: len });
            }
            s.insert(q);
        }
        Ok(s)
    }

    /// Number of forward states this set ranges over.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, q: usize) {
        assert!(q < self.len);
        self.words[q / 64] |= 1 << (q % 64);
    }

    pub fn contains(&self, q: usize) -> bool {
        q < self.len && self.words[q / 64] >> (q % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&q| self.contains(q))
    }
}

fn check_universe(fwd: &Dfa, s: &SubsetState) -> Result<()> {
    if s.len != fwd.num_states() {
        return Err(Error::SizeMismatch { expected: fwd.num_states(), found: s.len });
    }
    Ok(())
}

/// `{ q | q·c ∈ S }`.
pub fn reverse_step(fwd: &Dfa, s: &SubsetState, c: usize) -> Result<SubsetState> {
    check_universe(fwd, s)?;
    if c >= fwd.alphabet_size() {
        return Err(Error::LetterOutOfRange { letter: c, alphabet_size: fwd.alphabet_size() });
    }
    Ok(preimage(fwd, s, c))
}

fn preimage(fwd: &Dfa, s: &SubsetState, c: usize) -> SubsetState {
    let mut out = SubsetState::empty(s.len);
    for q in 0..fwd.num_states() {
        if s.contains(fwd.step(q, c)) {
            out.insert(q);
        }
    }
    out
}

/// Reads `w` left to right in the reverse automaton starting from `S`.
pub fn reverse_word(fwd: &Dfa, s: &SubsetState, w: &Word) -> Result<SubsetState> {
    check_universe(fwd, s)?;
    fwd.check_word(w)?;
    Ok(w.letters().iter().fold(s.clone(), |acc, &c| preimage(fwd, &acc, c)))
}

/// The reachable reverse automaton together with the subset each of its
/// states stands for.
#[derive(Debug, Clone)]
pub struct ReverseAutomaton {
    pub dfa: Dfa,
    pub subsets: Vec<SubsetState>,
}

/// Reachable part of the reverse subset construction, states numbered in
/// breadth-first discovery order from `F` (letters in increasing index).
///
/// Labels are the members' labels (or indices) joined by commas, `{}` for
/// the empty set.
pub fn reverse_dfa(fwd: &Dfa, max_states: usize) -> Result<Dfa> {
    reverse_with_subsets(fwd, max_states).map(|r| r.dfa)
}

pub fn reverse_with_subsets(fwd: &Dfa, max_states: usize) -> Result<ReverseAutomaton> {
    if max_states == 0 {
        return Err(Error::InvalidInput("max_states must be at least 1".into()));
    }
    let k = fwd.alphabet_size();
    let initial = SubsetState::from_states(fwd.num_states(), fwd.finals())?;
    let mut index: BTreeMap<SubsetState, usize> = BTreeMap::new();
    let mut subsets = alloc::vec![initial.clone()];
    index.insert(initial, 0);
    let mut delta = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for c in 0..k {
            let next = preimage(fwd, &subsets[i], c);
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    if subsets.len() >= max_states {
                        return Err(Error::CapacityExceeded {
                            what: "reverse subset construction",
                            limit: max_states,
                            reached: subsets.len(),
                        });
                    }
                    let j = subsets.len();
                    index.insert(next.clone(), j);
                    subsets.push(next);
                    queue.push_back(j);
                    j
                }
            };
            delta.push(j);
        }
    }
    // BFS pops states in index order, so `delta` is already row-major.
    let finals = subsets.iter().enumerate().filter(|(_, s)| s.contains(fwd.start())).map(|(i, _)| i);
    let dfa =
        Dfa::new(subsets.len(), k, delta, 0, finals)?.with_labels(subsets.iter().map(|s| subset_label(fwd, s)))?;
    Ok(ReverseAutomaton { dfa, subsets })
}

fn subset_label(fwd: &Dfa, s: &SubsetState) -> String {
    if s.is_empty() {
        return "{}".into();
    }
    let mut out = String::new();
    for (i, q) in s.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&fwd.display_name(q));
    }
    out
}
