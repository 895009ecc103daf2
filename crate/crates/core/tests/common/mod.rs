#![allow(dead_code)]

use hairpin_core::{Alphabet, Primer, Word};

pub fn dna() -> Alphabet {
    Alphabet::dna()
}

pub fn primer_a() -> Primer {
    Primer::parse("A", &dna()).unwrap()
}

pub fn w(s: &str) -> Word {
    dna().word(s).unwrap()
}

/// Every word over `letters` with length in `min..=max`, shortlex order.
pub fn all_words(letters: &[u8], min: usize, max: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer = vec![Vec::<u8>::new()];
    for len in 0..=max {
        if len >= min {
            out.extend(layer.iter().cloned().map(Word::from_bytes));
        }
        layer = layer
            .iter()
            .flat_map(|p| {
                letters.iter().map(move |&c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

/// Words `A·x·T` over DNA with total length at most `max_len`.
pub fn framed(max_len: usize) -> Vec<Word> {
    all_words(b"ACGT", 0, max_len.saturating_sub(2))
        .into_iter()
        .map(|x| Word::from_bytes([b"A".as_slice(), x.as_bytes(), b"T"].concat()))
        .collect()
}
