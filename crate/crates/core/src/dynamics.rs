//! Hairpin completion steps, bounded iteration, and a membership test for
//! the iterated completion of a non-crossing word.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::analysis::{alpha_prefixes, alpha_suffix_complements, analyze};
use crate::error::Result;
use crate::word::{occurrences, Alphabet, Primer, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// One completion `before → after`.
///
/// For [`Side::Right`], `before = stem·α·β·ᾱ` and `after = before·stem̄`.
/// For [`Side::Left`], `before = α·β·ᾱ·stem̄` and `after = stem·before`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationStep {
    pub side: Side,
    pub stem: Word,
    pub before: Word,
    pub after: Word,
}

/// All single completion steps applicable to `w`, identity steps included.
///
/// A step needs the two primer occurrences to be disjoint, i.e.
/// `|stem| + 2k ≤ |w|`.
pub fn steps(w: &Word, primer: &Primer) -> Vec<DerivationStep> {
    let k = primer.k();
    let mut out = Vec::new();
    if primer.bar().is_suffix_of(w) {
        for u in alpha_prefixes(w, primer) {
            if u.len() + 2 * k <= w.len() {
                out.push(DerivationStep {
                    side: Side::Right,
                    after: w.concat(&primer.complement(&u)),
                    stem: u,
                    before: w.clone(),
                });
            }
        }
    }
    if primer.word().is_prefix_of(w) {
        for v in alpha_suffix_complements(w, primer) {
            if v.len() + 2 * k <= w.len() {
                out.push(DerivationStep {
                    side: Side::Left,
                    after: v.concat(w),
                    stem: v,
                    before: w.clone(),
                });
            }
        }
    }
    out
}

pub fn right_completions(w: &Word, primer: &Primer) -> BTreeSet<Word> {
    completions(w, primer, Side::Right)
}

pub fn left_completions(w: &Word, primer: &Primer) -> BTreeSet<Word> {
    completions(w, primer, Side::Left)
}

fn completions(w: &Word, primer: &Primer, side: Side) -> BTreeSet<Word> {
    steps(w, primer)
        .into_iter()
        .filter(|s| s.side == side)
        .map(|s| s.after)
        .collect()
}

/// `Hα(w)`
pub fn one_step(w: &Word, primer: &Primer) -> BTreeSet<Word> {
    steps(w, primer).into_iter().map(|s| s.after).collect()
}

/// `{ z ∈ H*α(w) : |z| ≤ max_len }` in shortlex order.
///
/// Breadth-first closure of [`one_step`]; completions never shorten a word,
/// so pruning at `max_len` loses nothing.
pub fn enumerate_bounded(w: &Word, primer: &Primer, max_len: usize) -> Vec<Word> {
    if w.len() > max_len {
        return Vec::new();
    }
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(cur) = queue.pop_front() {
        for step in steps(&cur, primer) {
            if step.after.len() <= max_len && !seen.contains(&step.after) {
                seen.insert(step.after.clone());
                queue.push_back(step.after);
            }
        }
    }
    let mut out: Vec<Word> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Whether `z ∈ H*α(w)` for a non-crossing `w ∈ αΣ* ∩ Σ*ᾱ`.
///
/// Every word of `H*α(w)` contains `w` exactly once and grows only at its
/// ends, so a derivation of `z = x·w·y` is a walk over pairs
/// `(|x′|, |y′|)` where `x′` is a suffix of `x` and `y′` a prefix of `y`.
/// The walk is explored directly, which keeps the test polynomial in `|z|`.
pub fn member(z: &Word, w: &Word, primer: &Primer) -> Result<bool> {
    analyze(w, primer)?;
    let zb = z.as_bytes();
    let hits = occurrences(w.as_bytes(), zb);
    if hits.len() != 1 {
        return Ok(false);
    }
    let start = hits[0];
    let left_total = start;
    let right_total = zb.len() - start - w.len();
    let (a, abar) = (primer.word().as_bytes(), primer.bar().as_bytes());
    let k = a.len();
    let alphabet = primer.alphabet();

    let mut seen = vec![vec![false; right_total + 1]; left_total + 1];
    let mut stack = vec![(0usize, 0usize)];
    seen[0][0] = true;
    while let Some((i, j)) = stack.pop() {
        if (i, j) == (left_total, right_total) {
            return Ok(true);
        }
        let lo = start - i;
        let hi = start + w.len() + j;
        let cur = &zb[lo..hi];
        let mut push = |state: (usize, usize), stack: &mut Vec<(usize, usize)>| {
            if !seen[state.0][state.1] {
                seen[state.0][state.1] = true;
                stack.push(state);
            }
        };
        if cur.ends_with(abar) {
            // cur = γ·α·β·ᾱ with |γ| = p; append γ̄.
            for p in occurrences(a, cur) {
                if p == 0 || p + 2 * k > cur.len() || j + p > right_total {
                    continue;
                }
                let ext = &zb[hi..hi + p];
                let matches = ext
                    .iter()
                    .zip(cur[..p].iter().rev())
                    .all(|(&e, &g)| alphabet.complement_letter(g) == Some(e));
                if matches {
                    push((i, j + p), &mut stack);
                }
            }
        }
        if cur.starts_with(a) {
            // cur = α·β·ᾱ·γ̄ with |γ̄| = len; prepend γ.
            for q in occurrences(abar, cur) {
                let len = cur.len() - q - k;
                if len == 0 || len + 2 * k > cur.len() || i + len > left_total {
                    continue;
                }
                let ext = &zb[lo - len..lo];
                let tail = &cur[q + k..];
                let matches = ext
                    .iter()
                    .zip(tail.iter().rev())
                    .all(|(&e, &g)| alphabet.complement_letter(g) == Some(e));
                if matches {
                    push((i + len, j), &mut stack);
                }
            }
        }
    }
    Ok(false)
}

/// `Hₖ(w)`: one completion step with any primer of length `k`.
///
/// Only `α = w[..k]` can complete on the left and only `α = complement of
/// w's last k letters` on the right, so those two primers cover the union.
pub fn hk_one_step(w: &Word, k: usize, alphabet: &Alphabet) -> BTreeSet<Word> {
    assert!(k >= 1, "primer length must be positive");
    let mut out = BTreeSet::new();
    if w.len() < k {
        return out;
    }
    let candidates = [w.prefix(k), alphabet.complement(&w.suffix(k))];
    for (idx, cand) in candidates.iter().enumerate() {
        if idx == 1 && *cand == candidates[0] {
            continue;
        }
        if let Ok(primer) = Primer::new(cand.clone(), alphabet) {
            out.extend(one_step(w, &primer));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna(s: &str) -> Word {
        Alphabet::dna().word(s).unwrap()
    }

    fn a() -> Primer {
        Primer::parse("A", &Alphabet::dna()).unwrap()
    }

    fn set(xs: &[&str]) -> BTreeSet<Word> {
        xs.iter().map(|s| dna(s)).collect()
    }

    /// All words of length `k` over `alphabet`.
    fn all_words(alphabet: &Alphabet, k: usize) -> Vec<Word> {
        let mut acc = vec![Word::empty()];
        for _ in 0..k {
            acc = acc
                .iter()
                .flat_map(|w| {
                    alphabet
                        .letters()
                        .iter()
                        .map(move |&c| w.concat(&Word::from_bytes(vec![c])))
                })
                .collect();
        }
        acc
    }

    #[test]
    fn right_completion_examples() {
        assert_eq!(
            right_completions(&dna("ACAGTGT"), &a()),
            set(&["ACAGTGT", "ACAGTGTGT"])
        );
        assert_eq!(right_completions(&dna("AT"), &a()), set(&["AT"]));
        assert!(right_completions(&dna("CGC"), &a()).is_empty());
    }

    #[test]
    fn left_completion_examples() {
        assert_eq!(
            left_completions(&dna("ACAGTGT"), &a()),
            set(&["ACAGTGT", "ACACAGTGT"])
        );
        assert_eq!(
            left_completions(&dna("ACATCT"), &a()),
            set(&["ACATCT", "AGACATCT"])
        );
        assert_eq!(left_completions(&dna("AT"), &a()), set(&["AT"]));
    }

    #[test]
    fn one_step_examples() {
        assert_eq!(
            one_step(&dna("ACAGTGT"), &a()),
            set(&["ACAGTGT", "ACAGTGTGT", "ACACAGTGT"])
        );
        assert_eq!(one_step(&dna("AT"), &a()), set(&["AT"]));
        let w = "ACAGACTGGTGT";
        let expected: Vec<String> = vec![
            w.to_string(),
            format!("{w}GT"),
            format!("{w}CTGT"),
            format!("AC{w}"),
            format!("ACACC{w}"),
        ];
        let expected: BTreeSet<Word> = expected.iter().map(|s| dna(s)).collect();
        assert_eq!(one_step(&dna(w), &a()), expected);
    }

    #[test]
    fn step_records_are_consistent() {
        let p = a();
        for s in steps(&dna("ACAGACTGGTGT"), &p) {
            match s.side {
                Side::Right => {
                    assert_eq!(s.after, s.before.concat(&p.complement(&s.stem)));
                    assert!(s.stem.concat(p.word()).is_prefix_of(&s.before));
                }
                Side::Left => {
                    assert_eq!(s.after, s.stem.concat(&s.before));
                    assert!(p
                        .bar()
                        .concat(&p.complement(&s.stem))
                        .is_suffix_of(&s.before));
                }
            }
        }
    }

    #[test]
    fn bounded_enumeration_examples() {
        let got = enumerate_bounded(&dna("ACAGTGT"), &a(), 11);
        let mut expected = Vec::new();
        for x in 0..=2usize {
            for y in 0..=2 - x {
                expected.push(dna(&format!("{}ACAGTGT{}", "AC".repeat(x), "GT".repeat(y))));
            }
        }
        expected.sort();
        assert_eq!(got.len(), 6);
        assert_eq!(got, expected);

        assert_eq!(enumerate_bounded(&dna("AT"), &a(), 100), vec![dna("AT")]);
        assert_eq!(
            enumerate_bounded(&dna("ACATCT"), &a(), 8),
            vec![dna("ACATCT"), dna("ACATCTGT"), dna("AGACATCT")]
        );
        assert!(enumerate_bounded(&dna("ACATCT"), &a(), 5).is_empty());
    }

    #[test]
    fn membership_examples() {
        let w = dna("ACAGTGT");
        assert!(member(&dna("ACACAGTGTGT"), &w, &a()).unwrap());
        assert!(member(&w, &w, &a()).unwrap());
        assert!(!member(&dna("ACAGTGTG"), &w, &a()).unwrap());
        assert!(!member(&dna("ACAGTGTACAGTGT"), &w, &a()).unwrap());

        let w2 = dna("ACAGACTGGTGT");
        let mixed = format!(
            "ACAG{}ACACC{}{}CTGT",
            "AC".repeat(3),
            "ACAGACTGGTGT",
            "GT".repeat(4)
        );
        let z = dna(&mixed);
        assert!(!member(&z, &w2, &a()).unwrap());
        assert!(!enumerate_bounded(&w2, &a(), z.len()).contains(&z));
        assert!(member(&dna("ATAT"), &dna("ATAT"), &a()).is_err());
    }

    #[test]
    fn hk_examples() {
        let dna_ab = Alphabet::dna();
        assert_eq!(hk_one_step(&dna("AT"), 1, &dna_ab), set(&["AT"]));
        assert!(hk_one_step(&Word::empty(), 1, &dna_ab).is_empty());

        let w = dna("ACGCGT");
        let got = hk_one_step(&w, 2, &dna_ab);
        assert!(got.contains(&w));
        let mut brute = BTreeSet::new();
        for alpha in all_words(&dna_ab, 2) {
            brute.extend(one_step(&w, &Primer::new(alpha, &dna_ab).unwrap()));
        }
        assert_eq!(got, brute);
    }

    #[test]
    fn hk_matches_brute_force_union() {
        let ab = Alphabet::dna();
        for k in 1..=2 {
            for len in 0..=6 {
                for w in all_words(&ab, len) {
                    let mut brute = BTreeSet::new();
                    for alpha in all_words(&ab, k) {
                        brute.extend(one_step(&w, &Primer::new(alpha, &ab).unwrap()));
                    }
                    assert_eq!(hk_one_step(&w, k, &ab), brute, "w={w} k={k}");
                }
            }
        }
    }
}
