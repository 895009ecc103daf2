//! Regularity of `H*α(w)` for non-crossing `w`, with a regular construction
//! when it holds and pumping witnesses when it does not.

use std::fmt;

use crate::analysis::{analyze, HairpinAnalysis};
use crate::dynamics::enumerate_bounded;
use crate::error::{HairpinError, Result};
use crate::expr::LangExpr;
use crate::star::in_star;
use crate::word::{Primer, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Regular,
    NonRegular,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::Regular => "regular",
            VerdictKind::NonRegular => "non-regular",
        })
    }
}

/// Outcome of [`decide`].
///
/// A regular verdict for an `(m, n)`-word with `m, n ≥ 2` carries a
/// construction. For `m = 1` or `n = 1` the language is regular by a
/// construction that is not reproduced here, so only a bounded sample is
/// attached. A non-regular verdict always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub word: Word,
    pub kind: VerdictKind,
    pub construction: Option<LangExpr>,
    pub construction_external: bool,
    pub sample: Option<Vec<Word>>,
    pub witness: Option<Witness>,
    /// Sub-words `w·ū_i` (`i ∈ I`) and `v_j·w` (`j ∈ J`) when `u₁ ≠ v₁`.
    pub reduction: Option<Vec<Reduction>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub word: Word,
    pub verdict: Verdict,
}

impl Verdict {
    pub fn is_regular(&self) -> bool {
        self.kind == VerdictKind::Regular
    }
}

/// Letters added to `|w|` when sampling languages whose construction is external.
const SAMPLE_SLACK: usize = 8;
const SAMPLE_CAP: usize = 32;

/// Decides whether `H*α(w)` is regular.
pub fn decide(w: &Word, primer: &Primer) -> Result<Verdict> {
    let h = analyze(w, primer)?;
    decide_analysis(&h, true)
}

/// As [`decide`], for an existing analysis.
pub fn decide_analyzed(h: &HairpinAnalysis) -> Result<Verdict> {
    decide_analysis(h, true)
}

fn decide_analysis(h: &HairpinAnalysis, allow_reduction: bool) -> Result<Verdict> {
    let w = h.word().clone();
    if h.m() == 1 || h.n() == 1 {
        let mut sample = enumerate_bounded(&w, h.primer(), w.len() + SAMPLE_SLACK);
        sample.truncate(SAMPLE_CAP);
        return Ok(Verdict {
            word: w,
            kind: VerdictKind::Regular,
            construction: None,
            construction_external: true,
            sample: Some(sample),
            witness: None,
            reduction: None,
        });
    }
    if h.u(1) == h.v(1) {
        return Ok(if condition_holds(h) {
            Verdict {
                word: w,
                kind: VerdictKind::Regular,
                construction: Some(construct_regular(h)?),
                construction_external: false,
                sample: None,
                witness: None,
                reduction: None,
            }
        } else {
            Verdict {
                word: w,
                kind: VerdictKind::NonRegular,
                construction: None,
                construction_external: false,
                sample: None,
                witness: Some(witness_nonregular(h)?),
                reduction: None,
            }
        });
    }
    if !allow_reduction {
        return Err(HairpinError::InternalInvariantViolation(format!(
            "reduced word {w} still has u₁ = {} ≠ v₁ = {}",
            h.u(1),
            h.v(1)
        )));
    }

    let primer = h.primer();
    let subwords = h
        .index_i()
        .iter()
        .map(|&i| w.concat(&primer.complement(h.u(i))))
        .chain(h.index_j().iter().map(|&j| h.v(j).concat(&w)));
    let mut reduction = Vec::new();
    for sub in subwords {
        let sh = analyze(&sub, primer).map_err(|e| {
            HairpinError::InternalInvariantViolation(format!("reduced word {sub}: {e}"))
        })?;
        if sh.m() < 2 || sh.n() < 2 || sh.u(1) != sh.v(1) {
            return Err(HairpinError::InternalInvariantViolation(format!(
                "reduced word {sub} is a ({}, {})-word with u₁ = {:?}, v₁ = {:?}",
                sh.m(),
                sh.n(),
                sh.prefixes().get(1),
                sh.suffix_complements().get(1)
            )));
        }
        let verdict = decide_analysis(&sh, false)?;
        reduction.push(Reduction { word: sub, verdict });
    }

    let regular = reduction.iter().all(|r| r.verdict.is_regular());
    let (construction, witness) = if regular {
        let mut parts = vec![LangExpr::atom(w.clone())];
        parts.extend(
            reduction
                .iter()
                .map(|r| r.verdict.construction.clone().expect("regular sub-verdict")),
        );
        (Some(LangExpr::union(parts)), None)
    } else {
        let witness = reduction
            .iter()
            .find_map(|r| r.verdict.witness.clone())
            .expect("non-regular sub-verdict");
        (None, Some(witness))
    };
    Ok(Verdict {
        word: w,
        kind: if regular {
            VerdictKind::Regular
        } else {
            VerdictKind::NonRegular
        },
        construction,
        construction_external: false,
        sample: None,
        witness,
        reduction: Some(reduction),
    })
}

/// The characterization for `u₁ = v₁`:
///
/// 1. every `u_s` is in `S̄*` or `S̄ ⊆ {u₁..u_s}*`, and
/// 2. every `v_t` is in `P*` or `P ⊆ {v₁..v_t}*`,
///
/// where `P = {u₁..u_{m−1}}` and `S̄ = {v₁..v_{n−1}}`.
pub fn condition_holds(h: &HairpinAnalysis) -> bool {
    let p = h.prefix_generators();
    let s = h.suffix_generators();
    let side = |xs: &[Word], ys: &[Word]| {
        (0..xs.len()).all(|i| in_star(&xs[i], ys) || ys.iter().all(|y| in_star(y, &xs[..=i])))
    };
    side(p, s) && side(s, p)
}

fn require_equal_firsts(h: &HairpinAnalysis) -> Result<()> {
    if h.m() < 2 || h.n() < 2 {
        return Err(HairpinError::Precondition(format!(
            "{} is a ({}, {})-word; both counts must be at least 2",
            h.word(),
            h.m(),
            h.n()
        )));
    }
    if h.u(1) != h.v(1) {
        return Err(HairpinError::Precondition(format!(
            "u₁ = {} differs from v₁ = {}",
            h.u(1),
            h.v(1)
        )));
    }
    Ok(())
}

fn star(words: impl IntoIterator<Item = Word>) -> LangExpr {
    LangExpr::star_set(words).expect("generator sets hold nonempty words")
}

/// An expression for `H*α(w)` when `u₁ = v₁` and the characterization holds.
pub fn construct_regular(h: &HairpinAnalysis) -> Result<LangExpr> {
    require_equal_firsts(h)?;
    if !condition_holds(h) {
        return Err(HairpinError::Precondition(format!(
            "H*({}) is not regular",
            h.word()
        )));
    }
    let primer = h.primer();
    let w = h.word();
    let p = h.prefix_generators();
    let s = h.suffix_generators();
    let bar = |xs: &[Word]| xs.iter().map(|x| primer.complement(x)).collect::<Vec<_>>();

    let first_u_out = p.iter().position(|u| !in_star(u, s));
    let any_v_out = s.iter().any(|v| !in_star(v, p));
    match first_u_out {
        None if !any_v_out => Ok(LangExpr::concat(vec![
            star(p.to_vec()),
            LangExpr::atom(w.clone()),
            star(bar(p)),
        ])),
        Some(pos) => {
            // p[pos] = u_s with s = pos + 1; s ≥ 2 since u₁ = v₁.
            let s_idx = pos + 1;
            let mut parts = vec![LangExpr::concat(vec![
                star(s.to_vec()),
                LangExpr::atom(w.clone()),
                star(bar(&p[..s_idx - 1])),
            ])];
            for i in s_idx..h.m() {
                let gens = &p[..i];
                let gens_bar = bar(gens);
                parts.push(LangExpr::concat(vec![
                    star(gens.to_vec()),
                    LangExpr::atom(w.clone()),
                    star(gens_bar.clone()),
                    LangExpr::atom(primer.complement(h.u(i))),
                    star(gens_bar),
                ]));
            }
            Ok(LangExpr::union(parts))
        }
        None => {
            let mirror = h.mirror();
            if mirror
                .prefix_generators()
                .iter()
                .all(|u| in_star(u, mirror.suffix_generators()))
            {
                return Err(HairpinError::InternalInvariantViolation(format!(
                    "mirror of {} has no prefix-side violation",
                    w
                )));
            }
            Ok(construct_regular(&mirror)?.dual(primer.alphabet()))
        }
    }
}

/// A sequence of word segments, some of them raised to a shared exponent.
///
/// With `min = n` this describes both the regular probe
/// `u_s·u₁^{≥n}·v_t·w·ū₁^{≥n}·ū_s` and the pumped family
/// `{ u_s·u₁^ℓ·v_t·w·ū₁^ℓ·ū_s : ℓ ≥ n }` it cuts out of `H*α(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PumpFamily {
    segments: Vec<(Word, bool)>,
    min: usize,
}

impl PumpFamily {
    pub fn min(&self) -> usize {
        self.min
    }

    pub fn pumped_count(&self) -> usize {
        self.segments.iter().filter(|s| s.1).count()
    }

    /// Instantiates the pumped segments with `exps`, in order.
    pub fn word(&self, exps: &[usize]) -> Word {
        assert_eq!(
            exps.len(),
            self.pumped_count(),
            "one exponent per pumped segment"
        );
        let mut e = exps.iter();
        let mut out = Vec::new();
        for (w, pumped) in &self.segments {
            let times = if *pumped { *e.next().unwrap() } else { 1 };
            out.extend_from_slice(w.repeat(times).as_bytes());
        }
        Word::from_bytes(out)
    }

    /// The member of the family with every exponent equal to `l`.
    pub fn aligned(&self, l: usize) -> Word {
        self.word(&vec![l; self.pumped_count()])
    }

    /// Pumped segments become `word^{≥min}`.
    pub fn to_expr(&self) -> LangExpr {
        LangExpr::concat(
            self.segments
                .iter()
                .map(|(w, pumped)| {
                    if *pumped {
                        LangExpr::at_least(w.clone(), self.min)
                    } else {
                        LangExpr::atom(w.clone())
                    }
                })
                .collect(),
        )
    }

    /// `{ … : l >= min }`, with `base` spelled `w`.
    pub fn describe(&self, base: &Word) -> String {
        let body: Vec<String> = self
            .segments
            .iter()
            .map(|(w, pumped)| match (pumped, w == base) {
                (false, true) => "w".to_string(),
                (false, false) => format!("\"{w}\""),
                (true, _) => format!("\"{w}\"^l"),
            })
            .collect();
        format!("{{ {} : l >= {} }}", body.join("·"), self.min)
    }

    fn complemented(&self, primer: &Primer) -> PumpFamily {
        PumpFamily {
            segments: self
                .segments
                .iter()
                .rev()
                .map(|(w, p)| (primer.complement(w), *p))
                .collect(),
            min: self.min,
        }
    }
}

/// Evidence that `H*α(target)` is neither regular nor context-free.
///
/// Indices refer to the analysis of `base`. When `mirrored` is set, `base`
/// is the complement of `target` and both families were complemented so
/// that they describe words of `H*α(target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub target: Word,
    pub base: Word,
    pub mirrored: bool,
    pub s: usize,
    pub t: usize,
    pub u_s: Word,
    pub v_t: Word,
    pub u_1: Word,
    /// `n` of the `(m, n)`-word `base`; the minimum exponent.
    pub n: usize,
    /// `u_s·u₁^ℓ·v_t·w·ū₁^ℓ·ū_s`
    pub family: PumpFamily,
    /// `(u_s·u₁^ℓ·v_t)²·w·ū₁^ℓ·ū_s`
    pub doubled: PumpFamily,
}

impl Witness {
    /// The regular probe `R`.
    pub fn nonreg_expr(&self) -> LangExpr {
        self.family.to_expr()
    }

    /// `R ∩ H*α(target)`
    pub fn predicted_intersection(&self) -> String {
        self.family.describe(&self.target)
    }

    pub fn aligned_word(&self, l: usize) -> Word {
        self.family.aligned(l)
    }

    pub fn mismatched_word(&self, l1: usize, l2: usize) -> Word {
        self.family.word(&[l1, l2])
    }
}

/// The doubled probe `R′` and its predicted intersection with `H*α(target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonCfWitness {
    pub expr: LangExpr,
    pub predicted_intersection: String,
}

/// Minimal `s` with `u_s ∉ {v₁..v_{n−1}}*`, then minimal `t` with
/// `v_t ∉ {u₁..u_s}*`; kept only when `s ≤ t`.
fn select_indices(h: &HairpinAnalysis) -> Option<(usize, usize)> {
    let p = h.prefix_generators();
    let sg = h.suffix_generators();
    let s = 1 + p.iter().position(|u| !in_star(u, sg))?;
    let t = 1 + sg.iter().position(|v| !in_star(v, &p[..s]))?;
    (s <= t).then_some((s, t))
}

/// Witness for a non-regular `H*α(w)` when `u₁ = v₁`.
pub fn witness_nonregular(h: &HairpinAnalysis) -> Result<Witness> {
    require_equal_firsts(h)?;
    if condition_holds(h) {
        return Err(HairpinError::Precondition(format!(
            "H*({}) is regular; no witness exists",
            h.word()
        )));
    }
    let primer = h.primer();
    if let Some((s, t)) = select_indices(h) {
        return Ok(build_witness(h, s, t, None));
    }
    let mirror = h.mirror();
    if let Some((s, t)) = select_indices(&mirror) {
        return Ok(build_witness(&mirror, s, t, Some(primer)));
    }
    Err(HairpinError::InternalInvariantViolation(format!(
        "no index pair with s ≤ t for {} or its complement",
        h.word()
    )))
}

fn build_witness(h: &HairpinAnalysis, s: usize, t: usize, mirror: Option<&Primer>) -> Witness {
    let primer = h.primer();
    let base = h.word().clone();
    let (u_s, v_t, u_1) = (h.u(s).clone(), h.v(t).clone(), h.u(1).clone());
    let (u_s_bar, u_1_bar) = (primer.complement(&u_s), primer.complement(&u_1));
    let n = h.n();
    let family = PumpFamily {
        segments: vec![
            (u_s.clone(), false),
            (u_1.clone(), true),
            (v_t.clone(), false),
            (base.clone(), false),
            (u_1_bar.clone(), true),
            (u_s_bar.clone(), false),
        ],
        min: n,
    };
    let doubled = PumpFamily {
        segments: vec![
            (u_s.clone(), false),
            (u_1.clone(), true),
            (v_t.clone(), false),
            (u_s.clone(), false),
            (u_1.clone(), true),
            (v_t.clone(), false),
            (base.clone(), false),
            (u_1_bar, true),
            (u_s_bar, false),
        ],
        min: n,
    };
    let (target, family, doubled) = match mirror {
        None => (base.clone(), family, doubled),
        Some(p) => (
            p.complement(&base),
            family.complemented(p),
            doubled.complemented(p),
        ),
    };
    Witness {
        target,
        base,
        mirrored: mirror.is_some(),
        s,
        t,
        u_s,
        v_t,
        u_1,
        n,
        family,
        doubled,
    }
}

/// The doubled probe `R′ = (u_s·u₁^{≥n}·v_t)²·w·ū₁^{≥n}·ū_s`.
pub fn witness_noncf(witness: &Witness) -> NonCfWitness {
    NonCfWitness {
        expr: witness.doubled.to_expr(),
        predicted_intersection: witness.doubled.describe(&witness.target),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::analyze;
    use crate::word::Alphabet;

    fn dna(s: &str) -> Word {
        Alphabet::dna().word(s).unwrap()
    }

    fn a() -> Primer {
        Primer::parse("A", &Alphabet::dna()).unwrap()
    }

    #[test]
    fn sandwich_case() {
        let v = decide(&dna("ACAGTGT"), &a()).unwrap();
        assert!(v.is_regular());
        let e = v.construction.unwrap();
        assert_eq!(e.render_with_base(&dna("ACAGTGT")), "{AC}*·w·{GT}*");
    }

    #[test]
    fn nonregular_case() {
        let v = decide(&dna("ACAGACTGGTGT"), &a()).unwrap();
        assert_eq!(v.kind, VerdictKind::NonRegular);
        let wit = v.witness.unwrap();
        assert_eq!((wit.s, wit.t, wit.n), (2, 2, 3));
        assert!(!wit.mirrored);
        assert_eq!(wit.u_s, dna("ACAG"));
        assert_eq!(wit.v_t, dna("ACACC"));
        assert_eq!(
            wit.nonreg_expr().render_with_base(&dna("ACAGACTGGTGT")),
            "\"ACAG\"·\"AC\"^{>=3}·\"ACACC\"·w·\"GT\"^{>=3}·\"CTGT\""
        );
        assert_eq!(wit.aligned_word(3).len(), 37);
        let nc = witness_noncf(&wit);
        assert_eq!(
            nc.expr.render_with_base(&dna("ACAGACTGGTGT")),
            "\"ACAG\"·\"AC\"^{>=3}·\"ACACC\"·\"ACAG\"·\"AC\"^{>=3}·\"ACACC\"·w·\"GT\"^{>=3}·\"CTGT\""
        );
    }

    #[test]
    fn reduction_case() {
        let v = decide(&dna("ACATCT"), &a()).unwrap();
        assert!(v.is_regular());
        let red = v.reduction.as_ref().unwrap();
        let words: Vec<&Word> = red.iter().map(|r| &r.word).collect();
        assert_eq!(words, vec![&dna("ACATCTGT"), &dna("AGACATCT")]);
        assert!(red
            .iter()
            .all(|r| r.verdict.is_regular() && r.verdict.reduction.is_none()));
        match v.construction.unwrap() {
            LangExpr::Union(parts) => {
                assert_eq!(parts.len(), 3);
                assert_eq!(parts[0], LangExpr::atom(dna("ACATCT")));
            }
            other => panic!("expected a union, got {other}"),
        }
    }

    #[test]
    fn prefix_violation_construction() {
        let w = dna("AGACATCT");
        let h = analyze(&w, &a()).unwrap();
        let e = construct_regular(&h).unwrap();
        assert_eq!(
            e.render_with_base(&w),
            "{AG}*·w·{CT}* ∪ {AG,AGAC}*·w·{CT,GTCT}*·\"GTCT\"·{CT,GTCT}*"
        );
    }

    #[test]
    fn suffix_violation_uses_the_mirror() {
        let ab = Alphabet::dna();
        let w = dna("ACATCTGT");
        let h = analyze(&w, &a()).unwrap();
        let e = construct_regular(&h).unwrap();
        let mirror_expr = construct_regular(&analyze(&dna("ACAGATGT"), &a()).unwrap()).unwrap();
        assert_eq!(e, mirror_expr.dual(&ab));
    }

    #[test]
    fn external_construction_for_single_prefix() {
        let v = decide(&dna("AT"), &a()).unwrap();
        assert!(v.is_regular());
        assert!(v.construction_external);
        assert!(v.construction.is_none());
        assert_eq!(v.sample, Some(vec![dna("AT")]));
    }

    #[test]
    fn preconditions() {
        let h = analyze(&dna("ACAGTGT"), &a()).unwrap();
        assert!(matches!(
            witness_nonregular(&h),
            Err(HairpinError::Precondition(_))
        ));
        let h = analyze(&dna("ACAGACTGGTGT"), &a()).unwrap();
        assert!(matches!(
            construct_regular(&h),
            Err(HairpinError::Precondition(_))
        ));
        let h = analyze(&dna("ACATCT"), &a()).unwrap();
        assert!(matches!(
            construct_regular(&h),
            Err(HairpinError::Precondition(_))
        ));
        assert!(matches!(
            decide(&dna("ATAT"), &a()),
            Err(HairpinError::Crossing { .. })
        ));
    }
}
