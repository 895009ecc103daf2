use thiserror::Error;

/// Errors raised by the hairpin library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HairpinError {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("letter {letter:?} at position {position} is not in the alphabet")]
    InvalidLetter { letter: char, position: usize },

    #[error("primer must be nonempty")]
    EmptyPrimer,

    #[error("primer {0} is its own complement")]
    PrimerSelfComplementary(String),

    #[error("word {word} is not in {primer}Σ* ∩ Σ*{primer_bar}")]
    Domain {
        word: String,
        primer: String,
        primer_bar: String,
    },

    #[error("word {word} is {primer}-crossing: the last {primer} starts at {last_primer}, the first {primer_bar} at {first_bar}")]
    Crossing {
        word: String,
        primer: String,
        primer_bar: String,
        last_primer: usize,
        first_bar: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("word contains letter {0:?} outside the automaton alphabet")]
    AlphabetMismatch(char),

    #[error("invalid expression: {0}")]
    InvalidExpr(String),
}

pub type Result<T, E = HairpinError> = std::result::Result<T, E>;
