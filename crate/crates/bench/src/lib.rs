//! Fixtures shared by the criterion benches.

use hairpin_core::{analyze, Alphabet, Primer, Word};

/// Every non-crossing word in `AΣ* ∩ Σ*T` over the DNA alphabet with length
/// at most `max_len`, in shortlex order.
pub fn dna_corpus(max_len: usize) -> Vec<Word> {
    let dna = Alphabet::dna();
    let primer = Primer::parse("A", &dna).expect("valid primer");
    let mut layer = vec![Word::empty()];
    let mut out = Vec::new();
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                dna.letters()
                    .iter()
                    .map(move |&c| w.concat(&Word::from_bytes(vec![c])))
            })
            .collect();
        out.extend(
            layer
                .iter()
                .filter(|w| analyze(w, &primer).is_ok())
                .cloned(),
        );
    }
    out
}
