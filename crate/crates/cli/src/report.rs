//! JSON and text reports.

use std::fmt::Write as _;

use hairpin_core::{
    witness_noncf, Alphabet, HairpinAnalysis, Primer, Reduction, Verdict, Witness, Word,
};
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Result of `hairpin analyze`. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub alphabet: String,
    pub word: String,
    pub primer: String,
    pub primer_complement: String,
    pub non_crossing: bool,
    pub m: usize,
    pub n: usize,
    pub prefixes: Vec<String>,
    pub suffix_complements: Vec<String>,
    pub index_set_i: Vec<usize>,
    pub index_set_j: Vec<usize>,
    pub verdict: String,
    pub construction: Option<String>,
    pub construction_external: bool,
    pub sample: Option<Vec<String>>,
    pub reduction: Option<Vec<ReductionReport>>,
    pub witness: Option<WitnessReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub word: String,
    pub verdict: String,
    pub construction: Option<String>,
    pub witness: Option<WitnessReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// The word whose completion language the witness is about.
    pub target: String,
    /// The word the indices refer to: `target` or its complement.
    pub base: String,
    pub mirrored: bool,
    pub s: usize,
    pub t: usize,
    pub u_s: String,
    pub v_t: String,
    pub u_1: String,
    pub n: usize,
    pub r: String,
    pub l: String,
    pub r_prime: String,
    pub r_prime_intersection: String,
}

fn strings(words: &[Word]) -> Vec<String> {
    words.iter().map(Word::to_string).collect()
}

impl WitnessReport {
    pub fn new(w: &Witness) -> Self {
        let noncf = witness_noncf(w);
        WitnessReport {
            target: w.target.to_string(),
            base: w.base.to_string(),
            mirrored: w.mirrored,
            s: w.s,
            t: w.t,
            u_s: w.u_s.to_string(),
            v_t: w.v_t.to_string(),
            u_1: w.u_1.to_string(),
            n: w.n,
            r: w.nonreg_expr().render_with_base(&w.target),
            l: w.predicted_intersection(),
            r_prime: noncf.expr.render_with_base(&w.target),
            r_prime_intersection: noncf.predicted_intersection,
        }
    }
}

fn reduction_report(r: &Reduction) -> ReductionReport {
    ReductionReport {
        word: r.word.to_string(),
        verdict: r.verdict.kind.to_string(),
        construction: r
            .verdict
            .construction
            .as_ref()
            .map(|e| e.render_with_base(&r.word)),
        witness: r.verdict.witness.as_ref().map(WitnessReport::new),
    }
}

impl Report {
    pub fn new(alphabet: &Alphabet, primer: &Primer, h: &HairpinAnalysis, v: &Verdict) -> Self {
        Report {
            version: TOOL_VERSION.to_string(),
            alphabet: alphabet.spec(),
            word: h.word().to_string(),
            primer: primer.word().to_string(),
            primer_complement: primer.bar().to_string(),
            non_crossing: true,
            m: h.m(),
            n: h.n(),
            prefixes: strings(h.prefixes()),
            suffix_complements: strings(h.suffix_complements()),
            index_set_i: h.index_i().to_vec(),
            index_set_j: h.index_j().to_vec(),
            verdict: v.kind.to_string(),
            construction: v
                .construction
                .as_ref()
                .map(|e| e.render_with_base(h.word())),
            construction_external: v.construction_external,
            sample: v.sample.as_deref().map(strings),
            reduction: v
                .reduction
                .as_ref()
                .map(|rs| rs.iter().map(reduction_report).collect()),
            witness: v.witness.as_ref().map(WitnessReport::new),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "word:                {}", self.word);
        let _ = writeln!(
            s,
            "primer:              {} (complement {})",
            self.primer, self.primer_complement
        );
        let _ = writeln!(s, "alphabet:            {}", self.alphabet);
        let _ = writeln!(s, "(m, n):              ({}, {})", self.m, self.n);
        let _ = writeln!(s, "α-prefixes:          {}", list(&self.prefixes));
        let _ = writeln!(s, "suffix complements:  {}", list(&self.suffix_complements));
        let _ = writeln!(
            s,
            "I = {{{}}}, J = {{{}}}",
            join(&self.index_set_i),
            join(&self.index_set_j)
        );
        let _ = writeln!(s, "verdict:             {}", self.verdict);
        if let Some(c) = &self.construction {
            let _ = writeln!(s, "construction:        {c}");
        }
        if self.construction_external {
            let _ = writeln!(s, "construction:        external ((m,1)/(1,n)-word)");
            if let Some(sample) = &self.sample {
                let _ = writeln!(s, "sample:              {}", list(sample));
            }
        }
        if let Some(red) = &self.reduction {
            let _ = writeln!(s, "reduction:");
            for r in red {
                let _ = writeln!(s, "  {} → {}", r.word, r.verdict);
                if let Some(c) = &r.construction {
                    let _ = writeln!(s, "    {c}");
                }
            }
        }
        if let Some(w) = &self.witness {
            s.push_str(&w.to_text());
        }
        s
    }
}

impl WitnessReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "witness (for H*({})):", self.target);
        if self.mirrored {
            let _ = writeln!(s, "  indices taken from the complement {}", self.base);
        }
        let _ = writeln!(s, "  s = {}, t = {}, n = {}", self.s, self.t, self.n);
        let _ = writeln!(
            s,
            "  u_s = {}, v_t = {}, u_1 = {}",
            self.u_s, self.v_t, self.u_1
        );
        let _ = writeln!(s, "  R  = {}", self.r);
        let _ = writeln!(s, "  R ∩ H* = {}", self.l);
        let _ = writeln!(s, "  R' = {}", self.r_prime);
        let _ = writeln!(s, "  R' ∩ H* = {}", self.r_prime_intersection);
        s
    }
}

fn list(words: &[String]) -> String {
    words
        .iter()
        .map(|w| if w.is_empty() { "ε" } else { w.as_str() })
        .collect::<Vec<_>>()
        .join(", ")
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
