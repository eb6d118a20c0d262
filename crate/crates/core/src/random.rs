//! Seeded random automata.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dfa::Dfa;

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_start_and_finals<R: Rng + ?Sized>(rng: &mut R, num_states: usize) -> (usize, Vec<usize>) {
    let start = rng.gen_range(0..num_states);
    let finals = (0..num_states).filter(|_| rng.gen_bool(0.5)).collect();
    (start, finals)
}

/// Uniform transition table; uniform start; each state final with
/// probability 1/2.
pub fn random_dfa<R: Rng + ?Sized>(rng: &mut R, num_states: usize, alphabet_size: usize) -> Dfa {
    let delta = (0..num_states * alphabet_size).map(|_| rng.gen_range(0..num_states)).collect();
    let (start, finals) = random_start_and_finals(rng, num_states);
    Dfa::new(num_states, alphabet_size, delta, start, finals).expect("random table is in range")
}

/// Each letter an independent uniform permutation of the states; start and
/// finals as in [`random_dfa`].
pub fn random_pfa<R: Rng + ?Sized>(rng: &mut R, num_states: usize, alphabet_size: usize) -> Dfa {
    let columns: Vec<Vec<usize>> = (0..alphabet_size)
        .map(|_| {
            let mut col: Vec<usize> = (0..num_states).collect();
            col.shuffle(rng);
            col
        })
        .collect();
    let delta = (0..num_states).flat_map(|q| columns.iter().map(move |col| col[q])).collect();
    let (start, finals) = random_start_and_finals(rng, num_states);
    Dfa::new(num_states, alphabet_size, delta, start, finals).expect("random table is in range")
}
