mod common;

use std::collections::{BTreeSet, HashSet};

use common::{framed, primer_a, w};
use hairpin_core::invariants;
use hairpin_core::{
    analyze, decide, enumerate_bounded, enumerate_expr, is_non_crossing,
    is_non_crossing_by_minimal_factor, member, VerdictKind, Word,
};
use rand::{Rng, SeedableRng};

#[test]
fn non_crossing_tests_agree_exhaustively() {
    let p = primer_a();
    let mut checked = 0;
    for word in framed(12) {
        assert_eq!(
            is_non_crossing(&word, &p).unwrap(),
            is_non_crossing_by_minimal_factor(&word, &p).unwrap(),
            "{word}"
        );
        checked += 1;
    }
    assert_eq!(checked, (4usize.pow(11) - 1) / 3);
}

#[test]
fn structural_properties_hold_on_small_corpus() {
    let p = primer_a();
    for word in framed(8) {
        let Ok(h) = analyze(&word, &p) else { continue };
        let bound = word.len() + 8;
        invariants::corpus_word(&h, bound).unwrap();
        invariants::lemma_branches(&h, bound).unwrap();
        invariants::reduction_partition(&h, bound).unwrap();
        let known: HashSet<Word> = enumerate_bounded(&word, &p, bound).into_iter().collect();
        invariants::lemma_sandwich_inclusion(&h, bound, &known).unwrap();
    }
}

#[test]
fn member_agrees_with_enumeration() {
    let p = primer_a();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for word in framed(7) {
        let Ok(h) = analyze(&word, &p) else { continue };
        let bound = word.len() + 8;
        let known: BTreeSet<Word> = enumerate_bounded(&word, &p, bound).into_iter().collect();
        for z in &known {
            assert!(member(z, &word, &p).unwrap(), "{z} from {word}");
        }
        // Perturbed members: mostly non-members that still contain w.
        for _ in 0..20 {
            let base: Vec<&Word> = known.iter().collect();
            let mut z = base[rng.gen_range(0..base.len())].as_bytes().to_vec();
            let pos = rng.gen_range(0..z.len());
            z[pos] = b"ACGT"[rng.gen_range(0..4)];
            if rng.gen_bool(0.3) {
                z.extend_from_slice(h.primer().bar().as_bytes());
            }
            let z = Word::from_bytes(z);
            if z.len() <= bound {
                assert_eq!(
                    member(&z, &word, &p).unwrap(),
                    known.contains(&z),
                    "{z} from {word}"
                );
            }
        }
    }
}

#[test]
fn verdicts_are_sound_and_mirror_consistent() {
    let p = primer_a();
    let dna = p.alphabet().clone();
    let mut kinds = [0usize; 2];
    for word in framed(8) {
        let Ok(h) = analyze(&word, &p) else { continue };
        let verdict = decide(&word, &p).unwrap();
        let mirror = decide(&dna.complement(&word), &p).unwrap();
        assert_eq!(verdict.kind, mirror.kind, "{word}");
        let bound = word.len() + 10;
        match verdict.kind {
            VerdictKind::Regular => {
                kinds[0] += 1;
                if h.m() >= 2 && h.n() >= 2 {
                    let e = verdict.construction.as_ref().unwrap();
                    e.validate().unwrap();
                    let expected: BTreeSet<Word> =
                        enumerate_bounded(&word, &p, bound).into_iter().collect();
                    assert_eq!(enumerate_expr(e, bound), expected, "{word}: {e}");
                } else {
                    assert!(verdict.construction_external);
                }
            }
            VerdictKind::NonRegular => {
                kinds[1] += 1;
                let wit = verdict.witness.as_ref().unwrap();
                let l = wit.n;
                assert!(member(&wit.aligned_word(l), &word, &p).unwrap());
                assert!(!member(&wit.mismatched_word(l, l + 1), &word, &p).unwrap());
            }
        }
    }
    assert!(kinds[0] > 0);
}

#[test]
fn named_words() {
    let p = primer_a();
    let v = decide(&w("ACAGTGT"), &p).unwrap();
    let got = enumerate_expr(v.construction.as_ref().unwrap(), 40);
    let want: BTreeSet<Word> = enumerate_bounded(&w("ACAGTGT"), &p, 40)
        .into_iter()
        .collect();
    assert_eq!(got, want);
}
