//! Iterated hairpin completion of non-crossing words.
//!
//! For a primer `α` and a word `w ∈ αΣ* ∩ Σ*ᾱ` whose last `α` starts no later
//! than its first `ᾱ`, this crate decides whether the iterated completion
//! `H*α(w)` is a regular language. Regular cases come with a language
//! expression that compiles to a finite automaton; non-regular cases come
//! with pumping witnesses that [`member`] can check.
//!
//! ```
//! use hairpin_core::{decide, Alphabet, Primer};
//!
//! let dna = Alphabet::dna();
//! let primer = Primer::parse("A", &dna).unwrap();
//! let w = dna.word("ACAGTGT").unwrap();
//! let verdict = decide(&w, &primer).unwrap();
//! assert!(verdict.is_regular());
//! ```

pub mod analysis;
pub mod automaton;
pub mod decision;
pub mod dynamics;
pub mod error;
pub mod expr;
pub mod invariants;
pub mod star;
pub mod word;

pub use analysis::{
    alpha_prefixes, alpha_suffix_complements, analyze, in_primer_frame, is_non_crossing,
    is_non_crossing_by_minimal_factor, HairpinAnalysis,
};
pub use automaton::{accepts, compile, determinize, to_dot, Automaton};
pub use decision::{
    condition_holds, construct_regular, decide, decide_analyzed, witness_noncf, witness_nonregular,
    NonCfWitness, PumpFamily, Reduction, Verdict, VerdictKind, Witness,
};
pub use dynamics::{
    enumerate_bounded, hk_one_step, left_completions, member, one_step, right_completions, steps,
    DerivationStep, Side,
};
pub use error::{HairpinError, Result};
pub use expr::{enumerate_expr, LangExpr};
pub use star::{factorize, in_star};
pub use word::{alpha_index, in_alpha_quotient, occurrences, Alphabet, Primer, Word};
