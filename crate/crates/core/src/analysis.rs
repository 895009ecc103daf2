//! Structure of a non-crossing word: its α-prefixes, the complements of its
//! ᾱ-suffixes, the `(m, n)` classification and the index sets `I`, `J`.

use crate::error::{HairpinError, Result};
use crate::star::in_star;
use crate::word::{occurrences, Primer, Word};

/// Whether `w` is non-crossing: the last occurrence of `α` starts no later
/// than the first occurrence of `ᾱ`. Words missing either factor are
/// trivially non-crossing.
pub fn is_non_crossing(w: &Word, primer: &Primer) -> Result<bool> {
    primer.require_not_self_complementary()?;
    Ok(crossing_positions(w, primer).is_none())
}

/// `Some((last α start, first ᾱ start))` when those two occurrences cross.
fn crossing_positions(w: &Word, primer: &Primer) -> Option<(usize, usize)> {
    let last = *occurrences(primer.word().as_bytes(), w.as_bytes()).last()?;
    let first = *occurrences(primer.bar().as_bytes(), w.as_bytes()).first()?;
    (last > first).then_some((last, first))
}

/// `w ∈ αΣ* ∩ Σ*ᾱ`
pub fn in_primer_frame(w: &Word, primer: &Primer) -> bool {
    primer.word().is_prefix_of(w) && primer.bar().is_suffix_of(w)
}

/// Non-crossing test through minimal factors: `w` must contain exactly one
/// factor that is minimal with respect to `αΣ* ∩ Σ*ᾱ`.
///
/// Scans every factor, independently of [`is_non_crossing`].
pub fn is_non_crossing_by_minimal_factor(w: &Word, primer: &Primer) -> Result<bool> {
    if !in_primer_frame(w, primer) {
        return Err(domain_error(w, primer));
    }
    let bytes = w.as_bytes();
    let (a, abar) = (primer.word().as_bytes(), primer.bar().as_bytes());
    let mut framed = Vec::new();
    for i in 0..bytes.len() {
        for j in i + 1..=bytes.len() {
            let f = &bytes[i..j];
            if f.starts_with(a) && f.ends_with(abar) {
                framed.push((i, j));
            }
        }
    }
    let minimal = framed
        .iter()
        .filter(|&&(i, j)| {
            !framed
                .iter()
                .any(|&(p, q)| (p, q) != (i, j) && i <= p && q <= j)
        })
        .count();
    Ok(minimal == 1)
}

/// All `u` with `uα ≤ₚ w`, shortest first.
pub fn alpha_prefixes(w: &Word, primer: &Primer) -> Vec<Word> {
    occurrences(primer.word().as_bytes(), w.as_bytes())
        .into_iter()
        .map(|p| w.prefix(p))
        .collect()
}

/// The words `v` such that `v̄` is an ᾱ-suffix of `w`, shortest first.
pub fn alpha_suffix_complements(w: &Word, primer: &Primer) -> Vec<Word> {
    alpha_prefixes(&primer.complement(w), primer)
}

/// A validated non-crossing word `w ∈ αΣ* ∩ Σ*ᾱ` with its prefix and suffix
/// structure. Only [`analyze`] builds one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HairpinAnalysis {
    word: Word,
    primer: Primer,
    prefixes: Vec<Word>,
    suffix_complements: Vec<Word>,
    index_i: Vec<usize>,
    index_j: Vec<usize>,
}

pub fn analyze(w: &Word, primer: &Primer) -> Result<HairpinAnalysis> {
    primer.require_not_self_complementary()?;
    if !primer.alphabet().admits(w) {
        let position = w
            .as_bytes()
            .iter()
            .position(|&c| !primer.alphabet().contains(c))
            .unwrap_or(0);
        return Err(HairpinError::InvalidLetter {
            letter: w.as_bytes()[position] as char,
            position,
        });
    }
    if !in_primer_frame(w, primer) {
        return Err(domain_error(w, primer));
    }
    if let Some((last_primer, first_bar)) = crossing_positions(w, primer) {
        return Err(HairpinError::Crossing {
            word: w.to_string(),
            primer: primer.word().to_string(),
            primer_bar: primer.bar().to_string(),
            last_primer,
            first_bar,
        });
    }
    let prefixes = alpha_prefixes(w, primer);
    let suffix_complements = alpha_suffix_complements(w, primer);
    let index_i = unreachable_indices(&prefixes);
    let index_j = unreachable_indices(&suffix_complements);
    Ok(HairpinAnalysis {
        word: w.clone(),
        primer: primer.clone(),
        prefixes,
        suffix_complements,
        index_i,
        index_j,
    })
}

/// `{ i ∈ [1, len) : xs[i] ∉ {xs[1..i]}* }`
fn unreachable_indices(xs: &[Word]) -> Vec<usize> {
    (1..xs.len())
        .filter(|&i| !in_star(&xs[i], &xs[1..i]))
        .collect()
}

fn domain_error(w: &Word, primer: &Primer) -> HairpinError {
    HairpinError::Domain {
        word: w.to_string(),
        primer: primer.word().to_string(),
        primer_bar: primer.bar().to_string(),
    }
}

impl HairpinAnalysis {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn primer(&self) -> &Primer {
        &self.primer
    }

    /// `u₀ <ₚ u₁ <ₚ … <ₚ u_{m−1}`, with `u₀ = ε`.
    pub fn prefixes(&self) -> &[Word] {
        &self.prefixes
    }

    /// `v₀, …, v_{n−1}` with `v̄_j` the ᾱ-suffixes in ascending length, `v₀ = ε`.
    pub fn suffix_complements(&self) -> &[Word] {
        &self.suffix_complements
    }

    pub fn m(&self) -> usize {
        self.prefixes.len()
    }

    pub fn n(&self) -> usize {
        self.suffix_complements.len()
    }

    pub fn u(&self, i: usize) -> &Word {
        &self.prefixes[i]
    }

    pub fn v(&self, j: usize) -> &Word {
        &self.suffix_complements[j]
    }

    /// Index set `I`.
    pub fn index_i(&self) -> &[usize] {
        &self.index_i
    }

    /// Index set `J`.
    pub fn index_j(&self) -> &[usize] {
        &self.index_j
    }

    /// `u₁, …, u_{m−1}`
    pub fn prefix_generators(&self) -> &[Word] {
        &self.prefixes[1..]
    }

    /// `v₁, …, v_{n−1}`
    pub fn suffix_generators(&self) -> &[Word] {
        &self.suffix_complements[1..]
    }

    /// Analysis of `w̄`: prefixes and suffix complements trade places.
    pub fn mirror(&self) -> HairpinAnalysis {
        HairpinAnalysis {
            word: self.primer.complement(&self.word),
            primer: self.primer.clone(),
            prefixes: self.suffix_complements.clone(),
            suffix_complements: self.prefixes.clone(),
            index_i: self.index_j.clone(),
            index_j: self.index_i.clone(),
        }
    }
}
