//! The star witness family `A(m, alpha)`.
//!
//! Fix `m >= 2`, `alpha >= 2` and `n = m + alpha - 1`. The states are the
//! `alpha`-subsets of `[n]`, letter `a` acts by the n-cycle `(1 2 ... n)` and
//! letter `b` by the transposition `(1 2)`, the start is `{1, ..., alpha}`
//! and the final states are the star `S(T0)` of all states containing
//! `T0 = {1, ..., alpha - 1}`.
//!
//! The language has accepting-state complexity `m` and its reversal has
//! accepting-state complexity `alpha`. [`verify_witness`] checks every step
//! of that argument on the concrete automaton instead of trusting it.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::combin::{binomial, checked_binomial, colex_unrank, k_subsets};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::minimize::minimize;
use crate::perm::{act_on_subset, cycle_perm, perm_inverse, transposition_perm, KSubset, Permutation};
use crate::reversal::{reverse_step, reverse_with_subsets, SubsetState, DEFAULT_MAX_REVERSE_STATES};

/// Default bound on `binom(n, alpha)` for [`build_witness`].
pub const DEFAULT_WITNESS_STATE_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WitnessParams {
    pub m: usize,
    pub alpha: usize,
}

impl WitnessParams {
    pub fn new(m: usize, alpha: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Domain(format!("witness needs m >= 2 (got m = {m})")));
        }
        if alpha < 2 {
            return Err(Error::Domain(format!("witness needs alpha >= 2 (got alpha = {alpha})")));
        }
        Ok(WitnessParams { m, alpha })
    }

    pub fn n(&self) -> usize {
        self.m + self.alpha - 1
    }

    /// The start state `{1, ..., alpha}`.
    pub fn initial_state(&self) -> KSubset {
        KSubset::initial(self.alpha)
    }

    /// The center `{1, ..., alpha - 1}` of the final star.
    pub fn final_center(&self) -> KSubset {
        KSubset::initial(self.alpha - 1)
    }

    /// Letter actions on points: `[a, b]`.
    pub fn generators(&self) -> [Permutation; 2] {
        let n = self.n();
        [cycle_perm(n).expect("n >= 3"), transposition_perm(n).expect("n >= 3")]
    }

    pub fn num_states(&self) -> Option<usize> {
        checked_binomial(self.n(), self.alpha)
    }
}

/// `S(T)`: every `alpha`-subset containing the `(alpha - 1)`-subset `T`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Star {
    pub center: KSubset,
    /// Members in lexicographic order.
    pub members: Vec<KSubset>,
}

impl Star {
    pub fn label(&self) -> String {
        format!("S({})", self.center)
    }
}

impl fmt::Display for Star {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={{", self.label())?;
        for (i, x) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

pub fn star_members(params: &WitnessParams, center: &KSubset) -> Result<Star> {
    let n = params.n();
    if center.len() != params.alpha - 1 {
        return Err(Error::InvalidInput(format!(
            "star center must have {} points, got {}",
            params.alpha - 1,
            center.len()
        )));
    }
    if let Some(&bad) = center.members().iter().find(|&&p| p >= n) {
        return Err(Error::PointOutOfRange { point: bad, n });
    }
    let mut members: Vec<KSubset> = (0..n)
        .filter(|&u| !center.contains(u))
        .map(|u| KSubset::new(center.members().iter().copied().chain([u])).expect("u is not in the center"))
        .collect();
    members.sort();
    Ok(Star { center: center.clone(), members })
}

/// [`build_witness_capped`] with [`DEFAULT_WITNESS_STATE_CAP`].
pub fn build_witness(m: usize, alpha: usize) -> Result<Dfa> {
    build_witness_capped(&WitnessParams::new(m, alpha)?, DEFAULT_WITNESS_STATE_CAP)
}

/// `A(m, alpha)` over `{a, b}`. State `i` is the `alpha`-subset with colex
/// rank `i`, labeled like `1234`; the start is state 0.
pub fn build_witness_capped(params: &WitnessParams, max_states: usize) -> Result<Dfa> {
    let n = params.n();
    let size = params.num_states().unwrap_or(usize::MAX);
    if size > max_states {
        return Err(Error::CapacityExceeded { what: "witness state count", limit: max_states, reached: size });
    }
    let gens = params.generators();
    let states: Vec<KSubset> = k_subsets(n, params.alpha).map(|s| KSubset::new(s).expect("sorted")).collect();
    let mut delta = Vec::with_capacity(2 * size);
    for x in &states {
        for g in &gens {
            delta.push(act_on_subset(g, x)?.colex_rank());
        }
    }
    let t0 = params.final_center();
    let finals = states.iter().enumerate().filter(|(_, x)| t0.is_subset_of(x)).map(|(i, _)| i);
    let start = params.initial_state().colex_rank();
    Dfa::new(size, 2, delta, start, finals)?.with_labels(states.iter().map(KSubset::label))
}

/// Why a reverse automaton failed to consist of stars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarMismatch {
    ForwardShape {
        expected: usize,
        found: usize,
    },
    /// Two paths to the same reverse state produce different subsets.
    Inconsistent {
        state: usize,
    },
    Unreached {
        state: usize,
    },
    NotAStar {
        state: usize,
    },
    DuplicateCenter {
        state: usize,
    },
    WrongCount {
        expected: usize,
        found: usize,
    },
    LetterLaw {
        state: usize,
        letter: usize,
    },
}

impl fmt::Display for StarMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarMismatch::ForwardShape { expected, found } => {
                write!(f, "forward automaton has {found} states, expected {expected}")
            }
            StarMismatch::Inconsistent { state } => {
                write!(f, "reverse state {state} is reached with two different subsets")
            }
            StarMismatch::Unreached { state } => write!(f, "reverse state {state} is unreachable"),
            StarMismatch::NotAStar { state } => write!(f, "reverse state {state} is not a star"),
            StarMismatch::DuplicateCenter { state } => {
                write!(f, "reverse state {state} repeats the center of an earlier state")
            }
            StarMismatch::WrongCount { expected, found } => write!(f, "found {found} stars, expected {expected}"),
            StarMismatch::LetterLaw { state, letter } => {
                write!(f, "letter {letter} does not map the center of state {state} by its inverse")
            }
        }
    }
}

/// Star center of every state of a reverse automaton, indexed by state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarClassification {
    pub centers: Vec<KSubset>,
}

/// Recomputes the subset behind every state of `rev` by walking it in step
/// with the preimage map on `fwd`, then checks that each subset is a star
/// `S(T)`, that the centers are in bijection with all `(alpha - 1)`-subsets,
/// and that letter `c` sends `S(T)` to `S(T c^-1)`.
///
/// `fwd` must be `build_witness(params)`.
pub fn classify_reverse_states(
    fwd: &Dfa,
    params: &WitnessParams,
    rev: &Dfa,
) -> core::result::Result<StarClassification, StarMismatch> {
    let n = params.n();
    let expected_fwd = binomial(n, params.alpha);
    if fwd.num_states() != expected_fwd || fwd.alphabet_size() != 2 {
        return Err(StarMismatch::ForwardShape { expected: expected_fwd, found: fwd.num_states() });
    }
    let mut subsets: Vec<Option<SubsetState>> = alloc::vec![None; rev.num_states()];
    subsets[rev.start()] = Some(SubsetState::from_states(fwd.num_states(), fwd.finals()).expect("finals in range"));
    let mut queue = VecDeque::from([rev.start()]);
    while let Some(i) = queue.pop_front() {
        let s = subsets[i].clone().expect("queued states are assigned");
        for c in 0..2 {
            let next = reverse_step(fwd, &s, c).expect("sizes agree");
            let j = rev.step(i, c);
            match &subsets[j] {
                Some(known) if *known != next => return Err(StarMismatch::Inconsistent { state: j }),
                Some(_) => {}
                None => {
                    subsets[j] = Some(next);
                    queue.push_back(j);
                }
            }
        }
    }

    let fwd_subset = |q: usize| colex_unrank(q, params.alpha);
    let mut centers = Vec::with_capacity(rev.num_states());
    let mut seen = BTreeSet::new();
    for (state, s) in subsets.iter().enumerate() {
        let s = s.as_ref().ok_or(StarMismatch::Unreached { state })?;
        let center = star_center(s, params, &fwd_subset).ok_or(StarMismatch::NotAStar { state })?;
        if !seen.insert(center.clone()) {
            return Err(StarMismatch::DuplicateCenter { state });
        }
        centers.push(center);
    }
    let expected = binomial(n, params.alpha - 1);
    if centers.len() != expected {
        return Err(StarMismatch::WrongCount { expected, found: centers.len() });
    }

    let inverses = params.generators().map(|g| perm_inverse(&g));
    for (state, center) in centers.iter().enumerate() {
        for (letter, inv) in inverses.iter().enumerate() {
            let image = act_on_subset(inv, center).expect("center in range");
            if centers[rev.step(state, letter)] != image {
                return Err(StarMismatch::LetterLaw { state, letter });
            }
        }
    }
    Ok(StarClassification { centers })
}

/// The center `T` with `s == S(T)`, if there is one. Forward state `i` of
/// `build_witness(params)` is the subset with colex rank `i`.
pub fn subset_star_center(params: &WitnessParams, s: &SubsetState) -> Option<KSubset> {
    star_center(s, params, &|q| colex_unrank(q, params.alpha))
}

/// `S(T)` as a set of states of `build_witness(params)`.
pub fn star_subset(params: &WitnessParams, center: &KSubset) -> Result<SubsetState> {
    let star = star_members(params, center)?;
    let size = binomial(params.n(), params.alpha);
    SubsetState::from_states(size, star.members.iter().map(KSubset::colex_rank))
}

fn star_center(s: &SubsetState, params: &WitnessParams, fwd_subset: &impl Fn(usize) -> Vec<usize>) -> Option<KSubset> {
    if s.count() != params.m {
        return None;
    }
    let mut common: Option<Vec<usize>> = None;
    for q in s.iter() {
        let x = fwd_subset(q);
        common = Some(match common {
            None => x,
            Some(c) => c.into_iter().filter(|p| x.contains(p)).collect(),
        });
    }
    // m members all containing an (alpha-1)-set T are exactly S(T)
    let common = common?;
    (common.len() == params.alpha - 1).then(|| KSubset::new(common).expect("sorted"))
}

/// Replaces the labels of a classified reverse automaton by `S(T)`.
pub fn relabel_stars(rev: &Dfa, classification: &StarClassification) -> Dfa {
    rev.clone().with_labels(classification.centers.iter().map(|c| format!("S({c})"))).expect("star labels are valid")
}

/// A check performed by [`verify_witness`], in evaluation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum WitnessCheck {
    ForwardStateCount,
    ForwardFinalCount,
    ForwardMinimal,
    ReverseStateCount,
    ReverseStatesAreStars,
    ReverseFinalCount,
    AcceptingStars,
    ReverseMinimal,
    AscForward,
    AscReverse,
}

impl fmt::Display for WitnessCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessCheck::ForwardStateCount => "forward automaton has binom(n, alpha) reachable states",
            WitnessCheck::ForwardFinalCount => "forward automaton has m final states",
            WitnessCheck::ForwardMinimal => "forward automaton is minimal",
            WitnessCheck::ReverseStateCount => "reverse automaton has binom(n, alpha-1) reachable states",
            WitnessCheck::ReverseStatesAreStars => "reachable reverse states are exactly the stars",
            WitnessCheck::ReverseFinalCount => "reverse automaton has alpha final states",
            WitnessCheck::AcceptingStars => "accepting stars are those centered inside the start state",
            WitnessCheck::ReverseMinimal => "reverse automaton is minimal",
            WitnessCheck::AscForward => "asc of the language is m",
            WitnessCheck::AscReverse => "asc of the reversal is alpha",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WitnessReport {
    pub params: WitnessParams,
    pub n: usize,
    pub forward_states: usize,
    pub forward_finals: usize,
    pub forward_minimal: bool,
    pub reverse_states: usize,
    pub reverse_finals: usize,
    pub reverse_minimal: bool,
    pub stars_match: bool,
    pub accepting_stars_match: bool,
    pub asc_forward: usize,
    pub asc_reverse: usize,
    /// Accepting reverse states as stars, ordered by center.
    pub accepting_stars: Vec<Star>,
    /// The first check that failed, if any.
    pub failure: Option<WitnessCheck>,
    /// Detail for a failed star classification.
    pub star_mismatch: Option<String>,
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Limits used by [`verify_witness_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessCaps {
    pub max_forward_states: usize,
    pub max_reverse_states: usize,
}

impl Default for WitnessCaps {
    fn default() -> Self {
        WitnessCaps { max_forward_states: DEFAULT_WITNESS_STATE_CAP, max_reverse_states: DEFAULT_MAX_REVERSE_STATES }
    }
}

pub fn verify_witness(m: usize, alpha: usize) -> Result<WitnessReport> {
    verify_witness_with(&WitnessParams::new(m, alpha)?, WitnessCaps::default())
}

/// Builds `A(m, alpha)` and its reverse and checks every predicted property.
/// The asc values come from minimizing both automata.
pub fn verify_witness_with(params: &WitnessParams, caps: WitnessCaps) -> Result<WitnessReport> {
    let (m, alpha, n) = (params.m, params.alpha, params.n());
    let fwd = build_witness_capped(params, caps.max_forward_states)?;
    let fwd_min = minimize(&fwd);
    let rev = reverse_with_subsets(&fwd, caps.max_reverse_states)?.dfa;
    let rev_min = minimize(&rev);
    let classification = classify_reverse_states(&fwd, params, &rev);

    let q_init = params.initial_state();
    let mut accepting_stars = Vec::new();
    let mut accepting_ok = false;
    if let Ok(cls) = &classification {
        let mut accepting: Vec<KSubset> = rev.finals().into_iter().map(|i| cls.centers[i].clone()).collect();
        accepting.sort();
        let mut predicted: Vec<KSubset> = k_subsets(alpha, alpha - 1)
            .map(|t| KSubset::new(t.into_iter().map(|i| q_init.members()[i])).expect("sorted"))
            .collect();
        predicted.sort();
        accepting_ok = accepting == predicted;
        accepting_stars = accepting.iter().map(|c| star_members(params, c)).collect::<Result<Vec<_>>>()?;
    }

    let mut report = WitnessReport {
        params: *params,
        n,
        forward_states: fwd.num_states(),
        forward_finals: fwd.num_finals(),
        forward_minimal: fwd_min.num_states() == fwd.num_states(),
        reverse_states: rev.num_states(),
        reverse_finals: rev.num_finals(),
        reverse_minimal: rev_min.num_states() == rev.num_states(),
        stars_match: classification.is_ok(),
        accepting_stars_match: accepting_ok,
        asc_forward: fwd_min.num_finals(),
        asc_reverse: rev_min.num_finals(),
        accepting_stars,
        failure: None,
        star_mismatch: classification.as_ref().err().map(|e| format!("{e}")),
    };
    let expected_fwd = binomial(n, alpha);
    let checks = [
        (
            WitnessCheck::ForwardStateCount,
            report.forward_states == expected_fwd && fwd.reachable_states().len() == expected_fwd,
        ),
        (WitnessCheck::ForwardFinalCount, report.forward_finals == m),
        (WitnessCheck::ForwardMinimal, report.forward_minimal),
        (WitnessCheck::ReverseStateCount, report.reverse_states == binomial(n, alpha - 1)),
        (WitnessCheck::ReverseStatesAreStars, report.stars_match),
        (WitnessCheck::ReverseFinalCount, report.reverse_finals == alpha),
        (WitnessCheck::AcceptingStars, report.accepting_stars_match),
        (WitnessCheck::ReverseMinimal, report.reverse_minimal),
        (WitnessCheck::AscForward, report.asc_forward == m),
        (WitnessCheck::AscReverse, report.asc_reverse == alpha),
    ];
    report.failure = checks.iter().find(|(_, ok)| !ok).map(|(c, _)| *c);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::Word;
    use crate::reversal::reverse_dfa;
    use alloc::vec;

    fn set1(points: &[usize]) -> KSubset {
        KSubset::from_one_based(points.iter().copied()).unwrap()
    }

    fn labels(d: &Dfa, states: &[usize]) -> Vec<String> {
        states.iter().map(|&q| d.display_name(q)).collect()
    }

    #[test]
    fn parameters_are_checked() {
        assert!(matches!(build_witness(1, 4), Err(Error::Domain(_))));
        assert!(matches!(build_witness(3, 1), Err(Error::Domain(_))));
        let p = WitnessParams::new(3, 4).unwrap();
        assert!(matches!(build_witness_capped(&p, 14), Err(Error::CapacityExceeded { .. })));
    }

    #[test]
    fn a34_shape() {
        let d = build_witness(3, 4).unwrap();
        assert_eq!(d.num_states(), 15);
        assert_eq!(d.display_name(d.start()), "1234");
        assert_eq!(labels(&d, &d.finals()), ["1234", "1235", "1236"]);
        assert!(d.is_permutation_automaton());
        assert!(d.accepts(&Word::empty()).unwrap());
        assert!(!d.accepts(&Word::from_letters("a").unwrap()).unwrap());
        let after_a = d.apply_word(d.start(), &Word::from_letters("a").unwrap()).unwrap();
        assert_eq!(d.display_name(after_a), "2345");
    }

    #[test]
    fn a22_shape() {
        let d = build_witness(2, 2).unwrap();
        assert_eq!(labels(&d, &[0, 1, 2]), ["12", "13", "23"]);
        assert_eq!(d.display_name(d.start()), "12");
        assert_eq!(labels(&d, &d.finals()), ["12", "13"]);
    }

    #[test]
    fn a52_has_five_finals() {
        let d = build_witness(5, 2).unwrap();
        assert_eq!(d.num_states(), 15);
        assert_eq!(d.num_finals(), 5);
    }

    #[test]
    fn stars() {
        let p = WitnessParams::new(3, 4).unwrap();
        let s = star_members(&p, &set1(&[1, 2, 3])).unwrap();
        assert_eq!(s.members, [set1(&[1, 2, 3, 4]), set1(&[1, 2, 3, 5]), set1(&[1, 2, 3, 6])]);
        let s = star_members(&p, &set1(&[2, 3, 4])).unwrap();
        assert_eq!(s.members, [set1(&[1, 2, 3, 4]), set1(&[2, 3, 4, 5]), set1(&[2, 3, 4, 6])]);
        assert_eq!(alloc::format!("{s}"), "S(234)={1234,2345,2346}");
        let p = WitnessParams::new(2, 2).unwrap();
        assert_eq!(star_members(&p, &set1(&[3])).unwrap().members, [set1(&[1, 3]), set1(&[2, 3])]);
        assert!(star_members(&p, &set1(&[1, 2])).is_err());
    }

    #[test]
    fn a34_classification() {
        let p = WitnessParams::new(3, 4).unwrap();
        let fwd = build_witness(3, 4).unwrap();
        let rev = reverse_dfa(&fwd, 1000).unwrap();
        let cls = classify_reverse_states(&fwd, &p, &rev).unwrap();
        assert_eq!(cls.centers.len(), 20);
        assert_eq!(cls.centers[0], set1(&[1, 2, 3]));
        assert_eq!(cls.centers[rev.step(0, 0)], set1(&[1, 2, 6]));
        let named = relabel_stars(&rev, &cls);
        assert_eq!(named.label(0), Some("S(123)"));
    }

    #[test]
    fn a22_classification() {
        let p = WitnessParams::new(2, 2).unwrap();
        let fwd = build_witness(2, 2).unwrap();
        let rev = reverse_dfa(&fwd, 1000).unwrap();
        let cls = classify_reverse_states(&fwd, &p, &rev).unwrap();
        let mut centers = cls.centers.clone();
        centers.sort();
        assert_eq!(centers, [set1(&[1]), set1(&[2]), set1(&[3])]);
    }

    #[test]
    fn non_star_is_reported() {
        let p = WitnessParams::new(2, 2).unwrap();
        // same letters as A(2,2) but final set {12} is not a star
        let fwd = build_witness(2, 2).unwrap();
        let rows: Vec<Vec<usize>> = (0..3).map(|q| fwd.row(q).to_vec()).collect();
        let odd = Dfa::from_rows(&rows, 0, [0]).unwrap();
        let rev = reverse_dfa(&odd, 100).unwrap();
        assert!(matches!(classify_reverse_states(&odd, &p, &rev), Err(StarMismatch::NotAStar { .. })));
        // a reverse table that disagrees with the forward automaton
        let wrong = Dfa::from_rows(&[vec![0, 0], vec![1, 1], vec![2, 2]], 0, [0]).unwrap();
        assert!(classify_reverse_states(&fwd, &p, &wrong).is_err());
    }

    #[test]
    fn reports() {
        let r = verify_witness(3, 4).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!((r.forward_states, r.forward_finals, r.reverse_states, r.reverse_finals), (15, 3, 20, 4));
        assert_eq!((r.asc_forward, r.asc_reverse), (3, 4));
        let centers: Vec<String> = r.accepting_stars.iter().map(Star::label).collect();
        assert_eq!(centers, ["S(123)", "S(124)", "S(134)", "S(234)"]);

        let r = verify_witness(2, 2).unwrap();
        assert!(r.passed());
        assert_eq!((r.forward_states, r.forward_finals, r.reverse_states, r.reverse_finals), (3, 2, 3, 2));

        let r = verify_witness(4, 3).unwrap();
        assert!(r.passed());
        assert_eq!((r.forward_states, r.forward_finals, r.reverse_states, r.reverse_finals), (20, 4, 15, 3));
    }

    #[test]
    fn star_subsets_round_trip() {
        let p = WitnessParams::new(3, 4).unwrap();
        for t in k_subsets(p.n(), p.alpha - 1) {
            let center = KSubset::new(t).unwrap();
            let s = star_subset(&p, &center).unwrap();
            assert_eq!(s.count(), p.m);
            assert_eq!(subset_star_center(&p, &s), Some(center));
        }
        let not_star = SubsetState::from_states(15, [0, 1, 14]).unwrap();
        assert_eq!(subset_star_center(&p, &not_star), None);
        assert!(star_subset(&p, &KSubset::parse_label("12").unwrap()).is_err());
    }
}
