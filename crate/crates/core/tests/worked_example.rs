//! The m = 3, alpha = 4 witness traced state by state, plus the smallest
//! witness A(2, 2) checked against brute-force enumeration.

use permrev_core::minimize::{are_equivalent, asc, distinguishing_word, minimize};
use permrev_core::perm::KSubset;
use permrev_core::reversal::{reverse_dfa, reverse_step, reverse_word, SubsetState};
use permrev_core::witness::{build_witness, classify_reverse_states, star_members, WitnessParams};
use permrev_core::{Dfa, Word};

fn a34() -> (WitnessParams, Dfa) {
    (WitnessParams::new(3, 4).unwrap(), build_witness(3, 4).unwrap())
}

fn state_of(d: &Dfa, label: &str) -> usize {
    (0..d.num_states()).find(|&q| d.label(q) == Some(label)).unwrap()
}

/// The subset of forward states forming the star with the given center.
fn star_set(params: &WitnessParams, fwd: &Dfa, center: &str) -> SubsetState {
    let star = star_members(params, &KSubset::parse_label(center).unwrap()).unwrap();
    SubsetState::from_states(fwd.num_states(), star.members.iter().map(|x| state_of(fwd, &x.label()))).unwrap()
}

fn word(s: &str) -> Word {
    Word::from_letters(s).unwrap()
}

#[test]
fn single_reverse_steps() {
    let (p, fwd) = a34();
    let s123 = star_set(&p, &fwd, "123");
    assert_eq!(reverse_step(&fwd, &s123, 0).unwrap(), star_set(&p, &fwd, "126"));
    let s234 = star_set(&p, &fwd, "234");
    assert_eq!(reverse_step(&fwd, &s234, 1).unwrap(), star_set(&p, &fwd, "134"));
}

#[test]
fn a_chain_and_mixed_word() {
    let (p, fwd) = a34();
    let s123 = star_set(&p, &fwd, "123");
    let chain = ["126", "156", "456", "345", "234"];
    let mut cur = s123.clone();
    for center in chain {
        cur = reverse_step(&fwd, &cur, 0).unwrap();
        assert_eq!(cur, star_set(&p, &fwd, center));
    }
    assert_eq!(reverse_word(&fwd, &s123, &word("aaaaa")).unwrap(), star_set(&p, &fwd, "234"));
    assert_eq!(reverse_word(&fwd, &s123, &word("aabaaaa")).unwrap(), star_set(&p, &fwd, "124"));
    assert_eq!(reverse_word(&fwd, &s123, &Word::empty()).unwrap(), s123);
}

#[test]
fn reverse_automaton_counts() {
    let (p, fwd) = a34();
    let rev = reverse_dfa(&fwd, 1_000_000).unwrap();
    assert_eq!(rev.num_states(), 20);
    assert_eq!(rev.num_finals(), 4);
    assert!(rev.is_permutation_automaton());
    let cls = classify_reverse_states(&fwd, &p, &rev).unwrap();
    let mut accepting: Vec<String> = rev.finals().iter().map(|&i| cls.centers[i].label()).collect();
    accepting.sort();
    assert_eq!(accepting, ["123", "124", "134", "234"]);
    // the initial reverse state is labeled by the forward final states
    assert_eq!(rev.label(0), Some("1234,1235,1236"));
}

#[test]
fn minimality_and_asc() {
    let (_, fwd) = a34();
    let rev = reverse_dfa(&fwd, 1_000_000).unwrap();
    let fm = minimize(&fwd);
    assert_eq!(fm.num_states(), 15);
    assert_eq!(minimize(&rev).num_states(), 20);
    assert_eq!(asc(&fwd), 3);
    assert_eq!(asc(&rev), 4);
    assert!(are_equivalent(&fwd, &fm).unwrap());
    let rev2 = reverse_dfa(&rev, 1_000_000).unwrap();
    assert!(are_equivalent(&fwd, &rev2).unwrap());
}

#[test]
fn distinguishing_1234_from_1235() {
    let (_, fwd) = a34();
    let (p, q) = (state_of(&fwd, "1234"), state_of(&fwd, "1235"));
    let w = distinguishing_word(&fwd, p, q).unwrap().expect("states of a minimal DFA differ");
    let fp = fwd.is_final(fwd.apply_word(p, &w).unwrap());
    let fq = fwd.is_final(fwd.apply_word(q, &w).unwrap());
    assert_ne!(fp, fq);
}

/// All subsets of the forward states reachable from F under preimage maps,
/// by iterating over bitmasks directly.
fn brute_force_reverse(fwd: &Dfa) -> (usize, usize) {
    let n = fwd.num_states();
    assert!(n <= 16);
    let mask_of = |f: &dyn Fn(usize) -> bool| (0..n).filter(|&q| f(q)).fold(0u32, |m, q| m | 1 << q);
    let start = mask_of(&|q| fwd.is_final(q));
    let mut reached = vec![false; 1 << n];
    reached[start as usize] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for s in 0..(1u32 << n) {
            if !reached[s as usize] {
                continue;
            }
            for c in 0..fwd.alphabet_size() {
                let pre = mask_of(&|q| s >> fwd.step(q, c) & 1 == 1);
                if !reached[pre as usize] {
                    reached[pre as usize] = true;
                    changed = true;
                }
            }
        }
    }
    let states: Vec<u32> = (0..(1u32 << n)).filter(|&s| reached[s as usize]).collect();
    let finals = states.iter().filter(|&&s| s >> fwd.start() & 1 == 1).count();
    (states.len(), finals)
}

#[test]
fn smallest_witness_by_brute_force() {
    let fwd = build_witness(2, 2).unwrap();
    let rev = reverse_dfa(&fwd, 100).unwrap();
    assert_eq!(brute_force_reverse(&fwd), (3, 2));
    assert_eq!((rev.num_states(), rev.num_finals()), (3, 2));
    let (p, q) = (WitnessParams::new(2, 2).unwrap(), &fwd);
    let cls = classify_reverse_states(q, &p, &rev).unwrap();
    let mut centers: Vec<String> = cls.centers.iter().map(KSubset::label).collect();
    centers.sort();
    assert_eq!(centers, ["1", "2", "3"]);
}

#[test]
fn brute_force_agrees_on_a34() {
    let (_, fwd) = a34();
    assert_eq!(brute_force_reverse(&fwd), (20, 4));
}
