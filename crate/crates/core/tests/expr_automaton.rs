mod common;

use std::collections::BTreeSet;

use common::all_words;
use hairpin_core::{
    accepts, compile, decide, determinize, enumerate_bounded, enumerate_expr, to_dot, Alphabet,
    LangExpr, Primer, Word,
};
use proptest::prelude::*;

fn ab() -> Alphabet {
    "a:b".parse().unwrap()
}

fn atom_word() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(vec![b'a', b'b']), 1..=4).prop_map(Word::from_bytes)
}

/// Expressions with at most four atoms.
fn expr() -> impl Strategy<Value = LangExpr> {
    let leaf = prop_oneof![
        atom_word().prop_map(LangExpr::Atom),
        prop::collection::btree_set(atom_word(), 1..=2).prop_map(LangExpr::StarSet),
        (atom_word(), 0usize..3).prop_map(|(w, c)| LangExpr::AtLeast(w, c)),
    ];
    leaf.prop_recursive(2, 4, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 0..=3).prop_map(LangExpr::Concat),
            prop::collection::vec(inner, 0..=3).prop_map(LangExpr::Union),
        ]
    })
    .prop_filter("at most four atoms", |e| e.atoms().len() <= 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn enumeration_matches_automaton_filtering(e in expr()) {
        let alphabet = ab();
        let nfa = compile(&e, &alphabet);
        let dfa = determinize(&nfa);
        let bound = 10;
        let enumerated = enumerate_expr(&e, bound);
        let filtered: BTreeSet<Word> = all_words(b"ab", 0, bound)
            .into_iter()
            .filter(|z| accepts(&dfa, z).unwrap())
            .collect();
        prop_assert_eq!(&enumerated, &filtered);
        for z in enumerate_expr(&e, 14) {
            prop_assert!(accepts(&dfa, &z).unwrap());
            prop_assert!(accepts(&nfa, &z).unwrap());
        }
    }

    #[test]
    fn dual_denotes_the_complement_image(e in expr()) {
        let alphabet = ab();
        let direct: BTreeSet<Word> = enumerate_expr(&e, 12)
            .iter()
            .map(|z| alphabet.complement(z))
            .collect();
        prop_assert_eq!(enumerate_expr(&e.dual(&alphabet), 12), direct);
    }

    #[test]
    fn dot_output_is_stable(e in expr()) {
        let alphabet = ab();
        let once = to_dot(&determinize(&compile(&e, &alphabet)));
        let twice = to_dot(&determinize(&compile(&e.clone(), &alphabet)));
        prop_assert_eq!(once, twice);
    }
}

#[test]
fn decision_constructions_survive_automaton_compilation() {
    let dna = Alphabet::dna();
    let p = Primer::parse("A", &dna).unwrap();
    for s in ["ACAGTGT", "AGACATCT", "ACATCTGT", "ACATCT"] {
        let word = dna.word(s).unwrap();
        let e = decide(&word, &p).unwrap().construction.unwrap();
        let dfa = determinize(&compile(&e, &dna));
        let bound = word.len() + 6;
        let language: BTreeSet<Word> = enumerate_bounded(&word, &p, bound).into_iter().collect();
        let pads = all_words(b"ACGT", 0, 6);
        for x in &pads {
            for y in pads.iter().filter(|y| x.len() + y.len() <= 6) {
                let z = Word::join([x, &word, y]);
                assert_eq!(
                    accepts(&dfa, &z).unwrap(),
                    language.contains(&z),
                    "{s}: {z}"
                );
            }
        }
    }
}
