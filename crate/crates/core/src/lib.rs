//! Permutation automata and the accepting-state complexity of reversal.
//!
//! This crate is `no_std` (it needs `alloc`). It provides complete DFAs over
//! indexed states and letters, permutations of `[n]` acting on k-subsets, the
//! reverse subset construction, canonical minimization, and the star witness
//! family `A(m, alpha)` whose language has accepting-state complexity `m`
//! while its reversal has accepting-state complexity `alpha`.
//!
//! File formats, reports and the command-line front end live in the
//! `permrev` crate.

#![no_std]

extern crate alloc;

pub mod combin;
pub mod dfa;
mod error;
pub mod minimize;
pub mod oracle;
pub mod perm;
pub mod random;
pub mod reversal;
pub mod spectrum;
pub mod witness;

pub use dfa::{Dfa, Word};
pub use error::{Error, Result};
pub use minimize::{are_equivalent, asc, distinguishing_word, minimize};
pub use perm::{KSubset, Permutation};
pub use reversal::{reverse_dfa, reverse_step, reverse_word, SubsetState, DEFAULT_MAX_REVERSE_STATES};
pub use spectrum::{SpectrumReport, SpectrumRow};
pub use witness::{build_witness, verify_witness, WitnessParams, WitnessReport};
