//! The reversal spectrum of accepting-state complexity for permutation
//! automata: which `asc(reverse(K))` occur for languages `K` with
//! `asc(K) = m`.
//!
//! | m    | attainable reverse asc |
//! |------|------------------------|
//! | 0    | {0}                    |
//! | 1    | {1}                    |
//! | >= 2 | {2, 3, 4, ...}         |
//!
//! The rows `m >= 2` are checked on the witnesses over a grid, the rows
//! `m = 0, 1` on the one-state automata, and the absence of reverse asc 1
//! for `m >= 2` by random sampling ([`magic_one_probe`]).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::minimize::asc;
use crate::random::{random_pfa, seeded_rng};
use crate::reversal::{reverse_dfa, DEFAULT_MAX_REVERSE_STATES};
use crate::witness::{build_witness_capped, WitnessCaps, WitnessParams};

/// Random draws allowed per sample while looking for an automaton with
/// `asc >= 2`.
pub const MAX_DRAWS_PER_SAMPLE: usize = 256;

/// Caveat attached to every probe and spectrum report.
pub const SAMPLING_LIMITATION: &str = "the m = 1 and magic-value-1 rows are checked only on sampled binary \
     permutation automata with few states; this is evidence, not a proof";

/// `(asc(L(A)), asc(reverse(L(A))))` for the witness `A(m, alpha)`.
pub fn spectrum_point(m: usize, alpha: usize) -> Result<(usize, usize)> {
    spectrum_point_with(&WitnessParams::new(m, alpha)?, WitnessCaps::default())
}

pub fn spectrum_point_with(params: &WitnessParams, caps: WitnessCaps) -> Result<(usize, usize)> {
    let fwd = build_witness_capped(params, caps.max_forward_states)?;
    let rev = reverse_dfa(&fwd, caps.max_reverse_states)?;
    Ok((asc(&fwd), asc(&rev)))
}

/// `(asc, reverse asc)` of a permutation automaton; anything else is refused.
pub fn asc_pair(dfa: &Dfa) -> Result<(usize, usize)> {
    if !dfa.is_permutation_automaton() {
        return Err(Error::NotPermutationAutomaton);
    }
    Ok((asc(dfa), asc(&reverse_dfa(dfa, DEFAULT_MAX_REVERSE_STATES)?)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TrivialRow {
    pub m: usize,
    pub language: String,
    pub asc_forward: usize,
    pub asc_reverse: usize,
    pub expected: (usize, usize),
    pub pass: bool,
}

/// The one-state unary permutation automata for the empty language and
/// for `a*`.
pub fn trivial_automata() -> [(usize, &'static str, Dfa); 2] {
    [
        (0, "empty", Dfa::new(1, 1, alloc::vec![0], 0, []).expect("valid")),
        (1, "a*", Dfa::new(1, 1, alloc::vec![0], 0, [0]).expect("valid")),
    ]
}

pub fn trivial_rows() -> Vec<TrivialRow> {
    trivial_automata()
        .into_iter()
        .map(|(m, language, dfa)| {
            let (asc_forward, asc_reverse) = asc_pair(&dfa).expect("one-state automata are permutation automata");
            TrivialRow {
                m,
                language: language.to_string(),
                asc_forward,
                asc_reverse,
                expected: (m, m),
                pass: (asc_forward, asc_reverse) == (m, m),
            }
        })
        .collect()
}

/// A probed automaton, kept in plain table form.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ProbeInstance {
    pub start: usize,
    pub finals: Vec<usize>,
    pub rows: Vec<Vec<usize>>,
    pub asc_forward: usize,
    pub asc_reverse: usize,
}

impl ProbeInstance {
    fn new(dfa: &Dfa, asc_forward: usize, asc_reverse: usize) -> Self {
        ProbeInstance {
            start: dfa.start(),
            finals: dfa.finals(),
            rows: (0..dfa.num_states()).map(|q| dfa.row(q).to_vec()).collect(),
            asc_forward,
            asc_reverse,
        }
    }

    pub fn to_dfa(&self) -> Result<Dfa> {
        Dfa::from_rows(&self.rows, self.start, self.finals.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MagicOneProbe {
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
    /// Automata with `asc >= 2` whose reversal was examined.
    pub examined: usize,
    /// Samples for which no automaton with `asc >= 2` turned up.
    pub unsatisfied_samples: usize,
    pub draws: usize,
    /// `asc >= 2` but reverse asc 1.
    pub counterexamples: Vec<ProbeInstance>,
    /// Drawn automata with `asc = 1`, whose reverse asc must also be 1.
    pub asc_one_checked: usize,
    pub asc_one_violations: Vec<ProbeInstance>,
    /// `(asc, reverse asc) -> count` over examined automata.
    pub histogram: Vec<((usize, usize), usize)>,
    pub limitation: String,
}

impl MagicOneProbe {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.asc_one_violations.is_empty()
    }
}

/// Draws `samples` random binary permutation automata with at most `n_max`
/// states and `asc >= 2` (rejection sampling, at most
/// [`MAX_DRAWS_PER_SAMPLE`] draws each) and records any whose reversal has
/// asc 1. Along the way every drawn automaton with asc 1 is checked to
/// have reverse asc 1.
pub fn magic_one_probe(n_max: usize, samples: usize, seed: u64) -> Result<MagicOneProbe> {
    if !(1..=8).contains(&n_max) {
        return Err(Error::InvalidInput(alloc::format!("n_max must be in 1..=8, got {n_max}")));
    }
    let mut rng = seeded_rng(seed);
    let mut probe = MagicOneProbe {
        n_max,
        samples,
        seed,
        examined: 0,
        unsatisfied_samples: 0,
        draws: 0,
        counterexamples: Vec::new(),
        asc_one_checked: 0,
        asc_one_violations: Vec::new(),
        histogram: Vec::new(),
        limitation: SAMPLING_LIMITATION.to_string(),
    };
    let mut histogram: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for _ in 0..samples {
        let mut satisfied = false;
        for _ in 0..MAX_DRAWS_PER_SAMPLE {
            use rand::Rng;
            let size = rng.gen_range(1..=n_max);
            let dfa = random_pfa(&mut rng, size, 2);
            probe.draws += 1;
            let forward = asc(&dfa);
            if forward == 0 {
                continue;
            }
            let reverse = asc(&reverse_dfa(&dfa, DEFAULT_MAX_REVERSE_STATES)?);
            if forward == 1 {
                probe.asc_one_checked += 1;
                if reverse != 1 {
                    probe.asc_one_violations.push(ProbeInstance::new(&dfa, forward, reverse));
                }
                continue;
            }
            probe.examined += 1;
            *histogram.entry((forward, reverse)).or_default() += 1;
            if reverse == 1 {
                probe.counterexamples.push(ProbeInstance::new(&dfa, forward, reverse));
            }
            satisfied = true;
            break;
        }
        if !satisfied {
            probe.unsatisfied_samples += 1;
        }
    }
    probe.histogram = histogram.into_iter().collect();
    Ok(probe)
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "status", rename_all = "snake_case"))]
pub enum RowOutcome {
    Computed { asc_forward: usize, asc_reverse: usize, pass: bool },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SpectrumRow {
    pub m: usize,
    pub alpha: usize,
    pub outcome: RowOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SpectrumReport {
    pub m_range: (usize, usize),
    pub alpha_range: (usize, usize),
    pub rows: Vec<SpectrumRow>,
    pub trivial_rows: Vec<TrivialRow>,
    pub skipped: usize,
    pub failed: usize,
    pub passed: bool,
    pub limitation: String,
}

/// Runs [`spectrum_point_with`] over the grid (values below 2 are left to
/// the trivial rows) and appends [`trivial_rows`]. Rows over a capacity
/// limit are recorded as skipped and do not fail the report.
pub fn spectrum_table(
    m_range: RangeInclusive<usize>,
    alpha_range: RangeInclusive<usize>,
    caps: WitnessCaps,
) -> SpectrumReport {
    let mut rows = Vec::new();
    for m in (*m_range.start()).max(2)..=*m_range.end() {
        for alpha in (*alpha_range.start()).max(2)..=*alpha_range.end() {
            let params = WitnessParams::new(m, alpha).expect("grid starts at 2");
            let outcome = match spectrum_point_with(&params, caps) {
                Ok((f, r)) => RowOutcome::Computed { asc_forward: f, asc_reverse: r, pass: (f, r) == (m, alpha) },
                Err(e) => RowOutcome::Skipped { reason: e.to_string() },
            };
            rows.push(SpectrumRow { m, alpha, outcome });
        }
    }
    let trivial = trivial_rows();
    let skipped = rows.iter().filter(|r| matches!(r.outcome, RowOutcome::Skipped { .. })).count();
    let failed = rows.iter().filter(|r| matches!(r.outcome, RowOutcome::Computed { pass: false, .. })).count()
        + trivial.iter().filter(|t| !t.pass).count();
    SpectrumReport {
        m_range: (*m_range.start(), *m_range.end()),
        alpha_range: (*alpha_range.start(), *alpha_range.end()),
        rows,
        trivial_rows: trivial,
        skipped,
        failed,
        passed: failed == 0,
        limitation: SAMPLING_LIMITATION.to_string(),
    }
}
