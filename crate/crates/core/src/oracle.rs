//! Reference constructions that share no code path with the main
//! algorithms, used to cross-check them.
//!
//! * [`table_filling`] is a pairwise-marking minimizer, independent of the
//!   refinement in [`crate::minimize`].
//! * [`transformation_reverse`] builds an automaton for the reversed language
//!   from transformations of the state set, `t_w(q) = q·reverse(w)`, rather
//!   than from preimage subsets.
//! * [`words_up_to`] and [`acceptance_signature`] enumerate words directly.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::dfa::{Dfa, Word};
use crate::error::{Error, Result};

/// State count and final-state count of the minimal automaton, computed by
/// marking distinguishable pairs of reachable states until stable.
pub fn table_filling(dfa: &Dfa) -> (usize, usize) {
    let reach = dfa.reachable_states();
    let mut pos = alloc::vec![usize::MAX; dfa.num_states()];
    for (i, &q) in reach.iter().enumerate() {
        pos[q] = i;
    }
    let r = reach.len();
    let mut marked = alloc::vec![false; r * r];
    for i in 0..r {
        for j in 0..r {
            marked[i * r + j] = dfa.is_final(reach[i]) != dfa.is_final(reach[j]);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..r {
            for j in (i + 1)..r {
                if marked[i * r + j] {
                    continue;
                }
                let hit = (0..dfa.alphabet_size()).any(|c| {
                    let a = pos[dfa.step(reach[i], c)];
                    let b = pos[dfa.step(reach[j], c)];
                    marked[a * r + b]
                });
                if hit {
                    marked[i * r + j] = true;
                    marked[j * r + i] = true;
                    changed = true;
                }
            }
        }
    }
    let mut classes = 0;
    let mut final_classes = 0;
    for i in 0..r {
        // i opens a new class iff it is distinguishable from every earlier state
        if (0..i).all(|j| marked[i * r + j]) {
            classes += 1;
            if dfa.is_final(reach[i]) {
                final_classes += 1;
            }
        }
    }
    (classes, final_classes)
}

/// Automaton for `reverse(L(dfa))` whose states are the maps
/// `q ↦ q·reverse(w)`. Reading `c` after `w` gives `q ↦ t_w(q·c)`; a state
/// accepts iff it sends the start into a final state.
pub fn transformation_reverse(dfa: &Dfa, max_states: usize) -> Result<Dfa> {
    let n = dfa.num_states();
    let k = dfa.alphabet_size();
    let id: Vec<usize> = (0..n).collect();
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut maps = alloc::vec![id.clone()];
    index.insert(id, 0);
    let mut delta = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for c in 0..k {
            let next: Vec<usize> = (0..n).map(|q| maps[i][dfa.step(q, c)]).collect();
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    if maps.len() >= max_states {
                        return Err(Error::CapacityExceeded {
                            what: "transformation automaton",
                            limit: max_states,
                            reached: maps.len(),
                        });
                    }
                    index.insert(next.clone(), maps.len());
                    maps.push(next);
                    queue.push_back(maps.len() - 1);
                    maps.len() - 1
                }
            };
            delta.push(j);
        }
    }
    let finals: Vec<usize> = (0..maps.len()).filter(|&i| dfa.is_final(maps[i][dfa.start()])).collect();
    Dfa::new(maps.len(), k, delta, 0, finals)
}

/// All words over `alphabet_size` letters of length at most `max_len`, by
/// length then lexicographically.
pub fn words_up_to(alphabet_size: usize, max_len: usize) -> Vec<Word> {
    let mut out = alloc::vec![Word::empty()];
    let mut layer = alloc::vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for c in 0..alphabet_size {
                let mut v = w.0.clone();
                v.push(c);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Acceptance bit of every word in `words`, evaluated by direct simulation.
pub fn acceptance_signature(dfa: &Dfa, words: &[Word]) -> Vec<bool> {
    words
        .iter()
        .map(|w| {
            let q = w.letters().iter().fold(dfa.start(), |q, &c| dfa.step(q, c));
            dfa.is_final(q)
        })
        .collect()
}
