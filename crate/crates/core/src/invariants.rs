//! Executable structural properties of non-crossing words and their
//! iterated completions.
//!
//! Each check returns `Err` with a description of the first counterexample.
//! They are used by the test suites to sweep whole corpora of words.

use std::collections::{BTreeSet, HashSet};

use crate::analysis::{
    alpha_prefixes, alpha_suffix_complements, analyze, is_non_crossing,
    is_non_crossing_by_minimal_factor, HairpinAnalysis,
};
use crate::dynamics::{enumerate_bounded, member, one_step};
use crate::expr::{enumerate_expr, LangExpr};
use crate::star::in_star;
use crate::word::{alpha_index, in_alpha_quotient, occurrences, Word};

pub type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Field invariants of a [`HairpinAnalysis`], the prefix/suffix duality, and
/// agreement of the two non-crossing tests.
pub fn analysis_fields(h: &HairpinAnalysis) -> Check {
    let w = h.word();
    let p = h.primer();
    ensure!(
        h.u(0).is_empty() && h.v(0).is_empty(),
        "{w}: u₀ or v₀ is not empty"
    );
    for pair in h.prefixes().windows(2) {
        ensure!(
            pair[0].is_proper_prefix_of(&pair[1]),
            "{w}: prefixes out of order"
        );
    }
    let suffixes: Vec<Word> = h
        .suffix_complements()
        .iter()
        .map(|v| p.complement(v))
        .collect();
    for pair in suffixes.windows(2) {
        ensure!(
            pair[0].is_proper_suffix_of(&pair[1]),
            "{w}: suffixes out of order"
        );
    }
    for (i, u) in h.prefixes().iter().enumerate() {
        ensure!(u.concat(p.word()).is_prefix_of(w), "{w}: u_{i}α ≰ₚ w");
        ensure!(alpha_index(u, p) == i, "{w}: ind(u_{i}) ≠ {i}");
    }
    for (j, v) in h.suffix_complements().iter().enumerate() {
        ensure!(
            p.bar().concat(&p.complement(v)).is_suffix_of(w),
            "{w}: ᾱv̄_{j} is not a suffix"
        );
        ensure!(alpha_index(v, p) == j, "{w}: ind(v_{j}) ≠ {j}");
    }
    if h.m() >= 2 {
        ensure!(h.index_i().first() == Some(&1), "{w}: 1 ∉ I");
    }
    if h.n() >= 2 {
        ensure!(h.index_j().first() == Some(&1), "{w}: 1 ∉ J");
    }
    ensure!(
        h.suffix_complements() == alpha_prefixes(&p.complement(w), p).as_slice(),
        "{w}: suffix complements differ from the prefixes of w̄"
    );
    ensure!(
        alpha_suffix_complements(w, p) == h.suffix_complements(),
        "{w}: suffix complements not reproducible"
    );
    let by_scan = is_non_crossing(w, p).map_err(|e| e.to_string())?;
    let by_factor = is_non_crossing_by_minimal_factor(w, p).map_err(|e| e.to_string())?;
    ensure!(
        by_scan && by_factor,
        "{w}: non-crossing tests disagree ({by_scan} vs {by_factor})"
    );
    Ok(())
}

fn generators(h: &HairpinAnalysis) -> Vec<Word> {
    let mut g: Vec<Word> = h
        .prefix_generators()
        .iter()
        .chain(h.suffix_generators())
        .cloned()
        .collect();
    g.sort();
    g.dedup();
    g
}

/// `α ≤ₚ xα` for every `x ∈ P ∪ S̄`, and `α ≤ₚ x_ℓ⋯x₁α` for every sequence of
/// at most `max_seq` such words.
pub fn lemma_alpha(h: &HairpinAnalysis, max_seq: usize) -> Check {
    let p = h.primer();
    let mut pool: Vec<Word> = h.prefixes().to_vec();
    pool.extend(h.suffix_complements().iter().cloned());
    pool.sort();
    pool.dedup();
    for x in &pool {
        ensure!(in_alpha_quotient(x, p), "{}: α ≰ₚ {x}α", h.word());
    }
    let mut layer = vec![Word::empty()];
    for _ in 0..max_seq {
        let mut next = Vec::with_capacity(layer.len() * pool.len());
        for prefix in &layer {
            for x in &pool {
                let seq = x.concat(prefix);
                ensure!(in_alpha_quotient(&seq, p), "{}: α ≰ₚ {seq}α", h.word());
                next.push(seq);
            }
        }
        layer = next;
    }
    Ok(())
}

/// `|u_{m−1}| + 2k ≤ |w|` whenever `n ≥ 2`, and the mirror statement.
pub fn lemma_length_nonoverlap(h: &HairpinAnalysis) -> Check {
    let (w, k) = (h.word(), h.primer().k());
    if h.n() >= 2 {
        let u = h.u(h.m() - 1);
        ensure!(u.len() + 2 * k <= w.len(), "{w}: |u_(m-1)| + 2k > |w|");
    }
    if h.m() >= 2 {
        let v = h.v(h.n() - 1);
        ensure!(v.len() + 2 * k <= w.len(), "{w}: |v_(n-1)| + 2k > |w|");
    }
    Ok(())
}

/// For each `u_j` and each suffix `x ∈ αΣ*α⁻¹` of it, `u_j = u_{j−ind(x)}·x`;
/// likewise on the suffix side.
pub fn lemma_suffix_decomposition(h: &HairpinAnalysis) -> Check {
    let p = h.primer();
    for list in [h.prefixes(), h.suffix_complements()] {
        for (j, uj) in list.iter().enumerate() {
            for len in 0..=uj.len() {
                let x = uj.suffix(len);
                if !in_alpha_quotient(&x, p) {
                    continue;
                }
                let idx = alpha_index(&x, p);
                ensure!(idx <= j, "{}: ind({x}) > {j}", h.word());
                ensure!(
                    list[j - idx].concat(&x) == *uj,
                    "{}: {uj} ≠ {}·{x}",
                    h.word(),
                    list[j - idx]
                );
            }
        }
    }
    Ok(())
}

/// For `1 ≤ i < m` and `ind(x) ≤ i`:
/// `x ∈ {u₁..u_i}* ⇔ x ∈ {u₁..u_ind(x)}*`, over the given probes (and the
/// mirror statement over the suffix side).
pub fn lemma_index_truncation(h: &HairpinAnalysis, probes: &[Word]) -> Check {
    let p = h.primer();
    for list in [h.prefixes(), h.suffix_complements()] {
        for x in probes {
            let idx = alpha_index(x, p);
            for i in idx.max(1)..list.len() {
                let full = in_star(x, &list[1..=i]);
                let cut = in_star(x, &list[1..=idx.min(list.len() - 1)]);
                ensure!(
                    full == cut,
                    "{}: {x} (ind {idx}) in {{u₁..u_{i}}}* = {full} but truncated = {cut}",
                    h.word()
                );
            }
        }
    }
    Ok(())
}

/// All factors of `w` plus all products of two generators: a probe set for
/// [`lemma_index_truncation`].
pub fn truncation_probes(h: &HairpinAnalysis) -> Vec<Word> {
    let w = h.word();
    let mut out = BTreeSet::new();
    for i in 0..=w.len() {
        for j in i..=w.len() {
            out.insert(w.slice(i, j));
        }
    }
    let gens = generators(h);
    for a in &gens {
        for b in &gens {
            out.insert(a.concat(b));
        }
    }
    out.into_iter().collect()
}

/// For `u ∈ P`, `v ∈ S̄` with `v ∈ P(uα)*`: every `x ∈ P(vα)` is in `P(uα)*`.
pub fn lemma_inclusions(h: &HairpinAnalysis) -> Check {
    let p = h.primer();
    for u in h.prefixes() {
        let pu = alpha_prefixes(&u.concat(p.word()), p);
        for v in h.suffix_complements() {
            if !in_star(v, &pu) {
                continue;
            }
            for x in alpha_prefixes(&v.concat(p.word()), p) {
                ensure!(
                    in_star(&x, &pu),
                    "{}: {x} ∈ P({v}α) but ∉ P({u}α)*",
                    h.word()
                );
            }
        }
    }
    Ok(())
}

/// For `m, n ≥ 2`: `Hα(w) = {w} ∪ w·P̄ ∪ S̄·w`, built from the analysis alone.
pub fn first_step_shape(h: &HairpinAnalysis) -> Check {
    if h.m() < 2 || h.n() < 2 {
        return Ok(());
    }
    let (w, p) = (h.word(), h.primer());
    let mut expected = BTreeSet::from([w.clone()]);
    expected.extend(h.prefixes().iter().map(|u| w.concat(&p.complement(u))));
    expected.extend(h.suffix_complements().iter().map(|v| v.concat(w)));
    ensure!(one_step(w, p) == expected, "{w}: Hα(w) has the wrong shape");
    Ok(())
}

/// Properties of every enumerated `z ∈ H*α(w)`: `z` is non-crossing, holds
/// `w` exactly once, and `z = x·w·y` with `x ∈ (P ∪ S̄)*`, `y ∈ (P̄ ∪ S)*`.
pub fn enumerated_words(h: &HairpinAnalysis, words: &[Word]) -> Check {
    let (w, p) = (h.word(), h.primer());
    let left = generators(h);
    let right: Vec<Word> = left.iter().map(|x| p.complement(x)).collect();
    for z in words {
        ensure!(
            is_non_crossing(z, p).unwrap_or(false),
            "{w}: {z} is crossing"
        );
        let hits = occurrences(w.as_bytes(), z.as_bytes());
        ensure!(hits.len() == 1, "{w}: occurs {} times in {z}", hits.len());
        let x = z.prefix(hits[0]);
        let y = z.suffix(z.len() - hits[0] - w.len());
        ensure!(in_star(&x, &left), "{w}: left part {x} of {z} ∉ (P ∪ S̄)*");
        ensure!(in_star(&y, &right), "{w}: right part {y} of {z} ∉ (P̄ ∪ S)*");
    }
    Ok(())
}

/// For `u ∈ P`, `v ∈ S̄` with `v ∈ P(uα)*` and `u ∈ S̄(ᾱv̄)*`, the language
/// `P(uα)*·w·P̄(uα)*` lies inside `H*α(w)` (checked up to `bound`).
pub fn lemma_sandwich_inclusion(h: &HairpinAnalysis, bound: usize, known: &HashSet<Word>) -> Check {
    let (w, p) = (h.word(), h.primer());
    let mut done = BTreeSet::new();
    for u in h.prefix_generators() {
        let pu: Vec<Word> = alpha_prefixes(&u.concat(p.word()), p);
        for v in h.suffix_generators() {
            let sv = alpha_prefixes(&v.concat(p.word()), p);
            if !(in_star(v, &pu) && in_star(u, &sv)) || !done.insert(pu.clone()) {
                continue;
            }
            let e = LangExpr::concat(vec![
                LangExpr::star_set(pu.clone()).map_err(|e| e.to_string())?,
                LangExpr::atom(w.clone()),
                LangExpr::star_set(pu.iter().map(|x| p.complement(x)))
                    .map_err(|e| e.to_string())?,
            ]);
            for z in enumerate_expr(&e, bound) {
                ensure!(known.contains(&z), "{w}: {z} missing from H*α(w)");
                ensure!(
                    member(&z, w, p).map_err(|e| e.to_string())?,
                    "{w}: member rejects {z}"
                );
            }
        }
    }
    Ok(())
}

/// For `m, n ≥ 2`: if `u₁ ≠ v₁`, the completions of `w·ū_i` and `v_j·w` are
/// disjoint; for `i < j`, `H*(w·ū_j) ⊆ H*(w·ū_i)` when `u_j >ₛ u_i`, and the
/// two are disjoint otherwise. Checked on enumerations up to `bound`.
pub fn lemma_branches(h: &HairpinAnalysis, bound: usize) -> Check {
    if h.m() < 2 || h.n() < 2 {
        return Ok(());
    }
    let (w, p) = (h.word(), h.primer());
    let right: Vec<HashSet<Word>> = (1..h.m())
        .map(|i| {
            set_of(enumerate_bounded(
                &w.concat(&p.complement(h.u(i))),
                p,
                bound,
            ))
        })
        .collect();
    let left: Vec<HashSet<Word>> = (1..h.n())
        .map(|j| set_of(enumerate_bounded(&h.v(j).concat(w), p, bound)))
        .collect();
    if h.u(1) != h.v(1) {
        for (i, r) in right.iter().enumerate() {
            for (j, l) in left.iter().enumerate() {
                ensure!(
                    r.is_disjoint(l),
                    "{w}: H*(wū_{}) meets H*(v_{}w)",
                    i + 1,
                    j + 1
                );
            }
        }
    }
    for i in 1..h.m() {
        for j in i + 1..h.m() {
            let (ri, rj) = (&right[i - 1], &right[j - 1]);
            if h.u(i).is_proper_suffix_of(h.u(j)) {
                ensure!(rj.is_subset(ri), "{w}: H*(wū_{j}) ⊄ H*(wū_{i})");
            } else {
                ensure!(ri.is_disjoint(rj), "{w}: H*(wū_{i}) meets H*(wū_{j})");
            }
        }
    }
    Ok(())
}

/// For `u₁ ≠ v₁`: `H*α(w) = {w} ⊎ ⨄_{i∈I} H*(w·ū_i) ⊎ ⨄_{j∈J} H*(v_j·w)`,
/// compared on enumerations up to `bound`.
pub fn reduction_partition(h: &HairpinAnalysis, bound: usize) -> Check {
    if h.m() < 2 || h.n() < 2 || h.u(1) == h.v(1) {
        return Ok(());
    }
    let (w, p) = (h.word(), h.primer());
    let whole = set_of(enumerate_bounded(w, p, bound));
    let mut parts: Vec<HashSet<Word>> = vec![HashSet::from([w.clone()])];
    parts.extend(h.index_i().iter().map(|&i| {
        set_of(enumerate_bounded(
            &w.concat(&p.complement(h.u(i))),
            p,
            bound,
        ))
    }));
    parts.extend(
        h.index_j()
            .iter()
            .map(|&j| set_of(enumerate_bounded(&h.v(j).concat(w), p, bound))),
    );
    let total: usize = parts.iter().map(HashSet::len).sum();
    let union: HashSet<Word> = parts.into_iter().flatten().collect();
    ensure!(union.len() == total, "{w}: reduction parts overlap");
    ensure!(union == whole, "{w}: reduction parts do not cover H*α(w)");
    Ok(())
}

fn set_of(words: Vec<Word>) -> HashSet<Word> {
    words.into_iter().collect()
}

/// All checks that need only the analysis and one enumeration of `H*α(w)`
/// up to `bound`.
pub fn corpus_word(h: &HairpinAnalysis, bound: usize) -> Check {
    analysis_fields(h)?;
    lemma_alpha(h, 3)?;
    lemma_length_nonoverlap(h)?;
    lemma_suffix_decomposition(h)?;
    lemma_index_truncation(h, &truncation_probes(h))?;
    lemma_inclusions(h)?;
    first_step_shape(h)?;
    let words = enumerate_bounded(h.word(), h.primer(), bound);
    enumerated_words(h, &words)?;
    Ok(())
}

/// Re-analyzes `w` and runs [`corpus_word`].
pub fn corpus_word_from(w: &Word, primer: &crate::word::Primer, bound: usize) -> Check {
    let h = analyze(w, primer).map_err(|e| e.to_string())?;
    corpus_word(&h, bound)
}
