use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A state index was outside `0..num_states`.
    StateOutOfRange { state: usize, num_states: usize },
    /// A letter index was outside `0..alphabet_size`.
    LetterOutOfRange { letter: usize, alphabet_size: usize },
    /// A point was outside `0..n` for a permutation on `n` points.
    PointOutOfRange { point: usize, n: usize },
    /// Two objects that must agree in size did not.
    SizeMismatch { expected: usize, found: usize },
    /// Any other malformed input.
    InvalidInput(String),
    /// Witness parameters outside `m >= 2`, `alpha >= 2`.
    Domain(String),
    /// A construction grew past its configured limit.
    CapacityExceeded { what: &'static str, limit: usize, reached: usize },
    /// The target permutation is not in the group spanned by the generators.
    NotInGroup,
    /// An automaton that was required to be a permutation automaton is not.
    NotPermutationAutomaton,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::StateOutOfRange { state, num_states } => {
                write!(f, "state {state} out of range (automaton has {num_states} states)")
            }
            Error::LetterOutOfRange { letter, alphabet_size } => {
                write!(f, "letter {letter} out of range (alphabet has {alphabet_size} letters)")
            }
            Error::PointOutOfRange { point, n } => {
                write!(f, "point {} out of range 1..={n}", point + 1)
            }
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Domain(msg) => write!(f, "{msg}"),
            Error::CapacityExceeded { what, limit, reached } => {
                write!(f, "{what} exceeded limit {limit} (reached {reached})")
            }
            Error::NotInGroup => f.write_str("target permutation is not generated by the given generators"),
            Error::NotPermutationAutomaton => f.write_str("automaton is not a permutation automaton"),
        }
    }
}

impl core::error::Error for Error {}
