//! Canonical minimization, language equivalence, distinguishing words and
//! accepting-state complexity.
//!
//! The minimal DFA of a language realizes its accepting-state complexity, so
//! `asc` is simply the number of final states after [`minimize`].

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use crate::dfa::{Dfa, Word};
use crate::error::{Error, Result};

/// Nerode classes of the reachable states of a DFA.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    /// Class of each state; `None` for unreachable states.
    pub class_of: Vec<Option<usize>>,
    pub num_classes: usize,
}

impl Partition {
    /// Blocks in order of class index, each listing its states increasingly.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = alloc::vec![Vec::new(); self.num_classes];
        for (q, c) in self.class_of.iter().enumerate() {
            if let Some(c) = c {
                blocks[*c].push(q);
            }
        }
        blocks
    }
}

/// Moore-style refinement: start from the final/non-final split of the
/// reachable states and split by successor classes until nothing changes.
pub fn nerode_partition(dfa: &Dfa) -> Partition {
    let reachable = dfa.reachable_states();
    let mut class: Vec<usize> = alloc::vec![usize::MAX; dfa.num_states()];
    let mut count = split(&reachable, &mut class, |q, _| [dfa.is_final(q) as usize].into_iter().collect());
    loop {
        let prev = class.clone();
        let next = split(&reachable, &mut class, |q, c: &[usize]| {
            core::iter::once(c[q]).chain(dfa.row(q).iter().map(|&t| c[t])).collect()
        });
        // refinement only ever splits blocks, so equal counts mean a fixpoint
        if next == count {
            class = prev;
            break;
        }
        count = next;
    }
    Partition {
        class_of: (0..dfa.num_states()).map(|q| (class[q] != usize::MAX).then_some(class[q])).collect(),
        num_classes: count,
    }
}

/// Reassigns `class` by the signature of each state, numbering new classes
/// in order of first appearance. Returns the number of classes.
fn split(states: &[usize], class: &mut Vec<usize>, signature: impl Fn(usize, &[usize]) -> Vec<usize>) -> usize {
    let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut next = alloc::vec![usize::MAX; class.len()];
    let mut sorted = states.to_vec();
    sorted.sort_unstable();
    for &q in &sorted {
        let sig = signature(q, class);
        let fresh = ids.len();
        next[q] = *ids.entry(sig).or_insert(fresh);
    }
    *class = next;
    ids.len()
}

/// The canonical minimal DFA: unreachable states dropped, equivalent states
/// merged, states numbered breadth-first from the start with letters in
/// increasing order.
///
/// A merged state keeps its members' labels joined by `|`.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let part = nerode_partition(dfa);
    let blocks = part.blocks();
    let k = dfa.alphabet_size();
    let delta = blocks
        .iter()
        .flat_map(|b| (0..k).map(move |c| (b[0], c)))
        .map(|(q, c)| part.class_of[dfa.step(q, c)].expect("successor of a reachable state is reachable"))
        .collect();
    let start = part.class_of[dfa.start()].expect("start is reachable");
    let finals = blocks.iter().enumerate().filter(|(_, b)| dfa.is_final(b[0])).map(|(i, _)| i);
    let mut quotient = Dfa::new(blocks.len(), k, delta, start, finals).expect("quotient is well formed");
    if dfa.has_labels() {
        for (i, b) in blocks.iter().enumerate() {
            let mut label = String::new();
            for (j, &q) in b.iter().enumerate() {
                if j > 0 {
                    label.push('|');
                }
                label.push_str(&dfa.display_name(q));
            }
            quotient.set_label(i, Some(label)).expect("labels of members are valid");
        }
    }
    quotient.trim()
}

/// True iff both automata accept the same language.
pub fn are_equivalent(d1: &Dfa, d2: &Dfa) -> Result<bool> {
    if d1.alphabet_size() != d2.alphabet_size() {
        return Err(Error::SizeMismatch { expected: d1.alphabet_size(), found: d2.alphabet_size() });
    }
    Ok(minimize(d1).same_table(&minimize(d2)))
}

/// Accepting-state complexity of `L(dfa)`.
pub fn asc(dfa: &Dfa) -> usize {
    minimize(dfa).num_finals()
}

/// A shortest word on which exactly one of `p·w`, `q·w` is final, or `None`
/// when `p` and `q` are equivalent. Both states must be reachable.
pub fn distinguishing_word(dfa: &Dfa, p: usize, q: usize) -> Result<Option<Word>> {
    dfa.check_state(p)?;
    dfa.check_state(q)?;
    let reachable = dfa.reachable_states();
    for s in [p, q] {
        if !reachable.contains(&s) {
            return Err(Error::InvalidInput(alloc::format!("state {s} is not reachable")));
        }
    }
    let n = dfa.num_states();
    let key = |a: usize, b: usize| a * n + b;
    // parent[pair] = (previous pair, letter)
    let mut parent: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut queue = VecDeque::from([(p, q)]);
    parent.insert(key(p, q), (usize::MAX, usize::MAX));
    while let Some((a, b)) = queue.pop_front() {
        if dfa.is_final(a) != dfa.is_final(b) {
            let mut letters = Vec::new();
            let mut at = key(a, b);
            while let Some(&(prev, c)) = parent.get(&at) {
                if prev == usize::MAX {
                    break;
                }
                letters.push(c);
                at = prev;
            }
            letters.reverse();
            return Ok(Some(Word(letters)));
        }
        for c in 0..dfa.alphabet_size() {
            let (a2, b2) = (dfa.step(a, c), dfa.step(b, c));
            if a2 != b2 && !parent.contains_key(&key(a2, b2)) {
                parent.insert(key(a2, b2), (key(a, b), c));
                queue.push_back((a2, b2));
            }
        }
    }
    Ok(None)
}

/// Shortest distinguishing words for every pair of states at once, from a
/// single backward breadth-first search over pairs.
///
/// [`DistinguishingTable::word`] returns the same word as
/// [`distinguishing_word`]: among the shortest, the first in letter order.
#[derive(Debug, Clone)]
pub struct DistinguishingTable<'a> {
    dfa: &'a Dfa,
    /// Length of the shortest distinguishing word; `u32::MAX` if equivalent.
    dist: Vec<u32>,
}

impl<'a> DistinguishingTable<'a> {
    pub fn new(dfa: &'a Dfa) -> Self {
        let n = dfa.num_states();
        let k = dfa.alphabet_size();
        let mut preimages = alloc::vec![Vec::new(); n * k];
        for q in 0..n {
            for c in 0..k {
                preimages[dfa.step(q, c) * k + c].push(q);
            }
        }
        let mut dist = alloc::vec![u32::MAX; n * n];
        let mut queue = VecDeque::new();
        for p in 0..n {
            for q in 0..n {
                if dfa.is_final(p) != dfa.is_final(q) {
                    dist[p * n + q] = 0;
                    queue.push_back((p, q));
                }
            }
        }
        while let Some((a, b)) = queue.pop_front() {
            let d = dist[a * n + b] + 1;
            for c in 0..k {
                for &p in &preimages[a * k + c] {
                    for &q in &preimages[b * k + c] {
                        if dist[p * n + q] == u32::MAX {
                            dist[p * n + q] = d;
                            queue.push_back((p, q));
                        }
                    }
                }
            }
        }
        DistinguishingTable { dfa, dist }
    }

    /// Length of the shortest distinguishing word, or `None` if equivalent.
    pub fn distance(&self, p: usize, q: usize) -> Option<usize> {
        let d = self.dist[p * self.dfa.num_states() + q];
        (d != u32::MAX).then_some(d as usize)
    }

    pub fn word(&self, mut p: usize, mut q: usize) -> Option<Word> {
        let mut left = self.distance(p, q)?;
        let mut letters = Vec::with_capacity(left);
        while left > 0 {
            let c = (0..self.dfa.alphabet_size())
                .find(|&c| self.distance(self.dfa.step(p, c), self.dfa.step(q, c)) == Some(left - 1))
                .expect("some letter shortens the distance");
            letters.push(c);
            p = self.dfa.step(p, c);
            q = self.dfa.step(q, c);
            left -= 1;
        }
        Some(Word(letters))
    }
}
