//! Language expressions over whole-word atoms.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{HairpinError, Result};
use crate::word::{Alphabet, Word};

/// A regular language built from word atoms.
///
/// `StarSet(X)` denotes `X*`, `AtLeast(w, c)` denotes `w^{≥c}`. An empty
/// `Concat` denotes `{ε}` and an empty `Union` the empty language.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LangExpr {
    Atom(Word),
    StarSet(BTreeSet<Word>),
    AtLeast(Word, usize),
    Concat(Vec<LangExpr>),
    Union(Vec<LangExpr>),
}

impl LangExpr {
    pub fn atom(w: Word) -> Self {
        LangExpr::Atom(w)
    }

    /// `X*` for a nonempty set; empty words are dropped.
    pub fn star_set<I>(words: I) -> Result<Self>
    where
        I: IntoIterator<Item = Word>,
    {
        let set: BTreeSet<Word> = words.into_iter().filter(|w| !w.is_empty()).collect();
        if set.is_empty() {
            return Err(HairpinError::InvalidExpr(
                "star set needs at least one nonempty word".into(),
            ));
        }
        Ok(LangExpr::StarSet(set))
    }

    pub fn at_least(w: Word, count: usize) -> Self {
        LangExpr::AtLeast(w, count)
    }

    pub fn concat(parts: Vec<LangExpr>) -> Self {
        LangExpr::Concat(parts)
    }

    pub fn union(parts: Vec<LangExpr>) -> Self {
        LangExpr::Union(parts)
    }

    /// Checks the structural invariants: star sets nonempty and ε-free.
    pub fn validate(&self) -> Result<()> {
        match self {
            LangExpr::StarSet(set) => {
                if set.is_empty() || set.iter().any(Word::is_empty) {
                    Err(HairpinError::InvalidExpr(format!(
                        "star set {self} must be nonempty and ε-free"
                    )))
                } else {
                    Ok(())
                }
            }
            LangExpr::Concat(parts) | LangExpr::Union(parts) => {
                parts.iter().try_for_each(LangExpr::validate)
            }
            LangExpr::Atom(_) | LangExpr::AtLeast(..) => Ok(()),
        }
    }

    /// Every word mentioned by the expression.
    pub fn atoms(&self) -> Vec<&Word> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a Word>) {
        match self {
            LangExpr::Atom(w) | LangExpr::AtLeast(w, _) => out.push(w),
            LangExpr::StarSet(set) => out.extend(set.iter()),
            LangExpr::Concat(parts) | LangExpr::Union(parts) => {
                parts.iter().for_each(|p| p.collect_atoms(out))
            }
        }
    }

    /// The complement image: denotes `{ z̄ : z ∈ L(self) }`.
    ///
    /// Concatenations are reversed and every word is complemented.
    pub fn dual(&self, alphabet: &Alphabet) -> LangExpr {
        match self {
            LangExpr::Atom(w) => LangExpr::Atom(alphabet.complement(w)),
            LangExpr::StarSet(set) => {
                LangExpr::StarSet(set.iter().map(|w| alphabet.complement(w)).collect())
            }
            LangExpr::AtLeast(w, c) => LangExpr::AtLeast(alphabet.complement(w), *c),
            LangExpr::Concat(parts) => {
                LangExpr::Concat(parts.iter().rev().map(|p| p.dual(alphabet)).collect())
            }
            LangExpr::Union(parts) => {
                LangExpr::Union(parts.iter().map(|p| p.dual(alphabet)).collect())
            }
        }
    }

    /// Rendering with the whole-word `w` spelled as `w` instead of its letters.
    pub fn render_with_base(&self, base: &Word) -> String {
        let mut s = String::new();
        self.render(&mut s, Some(base), false);
        s
    }

    fn render(&self, out: &mut String, base: Option<&Word>, in_concat: bool) {
        match self {
            LangExpr::Atom(w) => {
                if base == Some(w) {
                    out.push('w');
                } else {
                    out.push_str(&format!("\"{w}\""));
                }
            }
            LangExpr::StarSet(set) => {
                let items: Vec<String> = set.iter().map(Word::to_string).collect();
                out.push_str(&format!("{{{}}}*", items.join(",")));
            }
            LangExpr::AtLeast(w, c) => out.push_str(&format!("\"{w}\"^{{>={c}}}")),
            LangExpr::Concat(parts) => {
                if parts.is_empty() {
                    out.push('ε');
                }
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        out.push('·');
                    }
                    p.render(out, base, true);
                }
            }
            LangExpr::Union(parts) => {
                if parts.is_empty() {
                    out.push('∅');
                    return;
                }
                let wrap = in_concat && parts.len() > 1;
                if wrap {
                    out.push('(');
                }
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" ∪ ");
                    }
                    p.render(out, base, false);
                }
                if wrap {
                    out.push(')');
                }
            }
        }
    }
}

impl fmt::Display for LangExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(&mut s, None, false);
        f.write_str(&s)
    }
}

/// `{ z ∈ L(e) : |z| ≤ max_len }` in shortlex order, by bounded expansion of
/// the expression tree.
pub fn enumerate_expr(e: &LangExpr, max_len: usize) -> BTreeSet<Word> {
    match e {
        LangExpr::Atom(w) => {
            let mut out = BTreeSet::new();
            if w.len() <= max_len {
                out.insert(w.clone());
            }
            out
        }
        LangExpr::StarSet(set) => star_closure(set.iter().filter(|w| !w.is_empty()), max_len),
        LangExpr::AtLeast(w, c) => {
            let mut out = BTreeSet::new();
            if w.is_empty() {
                out.insert(Word::empty());
                return out;
            }
            let mut j = *c;
            while j * w.len() <= max_len {
                out.insert(w.repeat(j));
                j += 1;
            }
            out
        }
        LangExpr::Concat(parts) => {
            let mut acc = BTreeSet::from([Word::empty()]);
            for p in parts {
                if acc.is_empty() {
                    break;
                }
                let shortest = acc.iter().next().map_or(0, Word::len);
                let tail = enumerate_expr(p, max_len - shortest);
                let mut next = BTreeSet::new();
                for a in &acc {
                    for b in &tail {
                        if a.len() + b.len() > max_len {
                            break;
                        }
                        next.insert(a.concat(b));
                    }
                }
                acc = next;
            }
            acc
        }
        LangExpr::Union(parts) => parts
            .iter()
            .flat_map(|p| enumerate_expr(p, max_len))
            .collect(),
    }
}

fn star_closure<'a, I>(tokens: I, max_len: usize) -> BTreeSet<Word>
where
    I: Iterator<Item = &'a Word>,
{
    let tokens: Vec<&Word> = tokens.collect();
    let mut out = BTreeSet::from([Word::empty()]);
    let mut frontier = vec![Word::empty()];
    while let Some(cur) = frontier.pop() {
        for t in &tokens {
            if cur.len() + t.len() <= max_len {
                let next = cur.concat(t);
                if out.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_bytes(s.as_bytes())
    }

    fn sample() -> LangExpr {
        LangExpr::concat(vec![
            LangExpr::star_set([w("AC")]).unwrap(),
            LangExpr::atom(w("ACAGTGT")),
            LangExpr::star_set([w("GT")]).unwrap(),
        ])
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_expr(&sample(), 11).len(), 6);
        assert!(enumerate_expr(&LangExpr::atom(w("AT")), 1).is_empty());
        let u = LangExpr::union(vec![LangExpr::atom(w("AT")), LangExpr::atom(w("AT"))]);
        assert_eq!(enumerate_expr(&u, 2), BTreeSet::from([w("AT")]));
    }

    #[test]
    fn at_least_counts() {
        let e = LangExpr::at_least(w("AC"), 3);
        let got: Vec<Word> = enumerate_expr(&e, 10).into_iter().collect();
        assert_eq!(got, vec![w("ACACAC"), w("ACACACAC"), w("ACACACACAC")]);
        assert_eq!(
            enumerate_expr(&LangExpr::at_least(Word::empty(), 4), 3),
            BTreeSet::from([Word::empty()])
        );
    }

    #[test]
    fn empty_constructs() {
        assert!(enumerate_expr(&LangExpr::union(vec![]), 5).is_empty());
        assert_eq!(
            enumerate_expr(&LangExpr::concat(vec![]), 5),
            BTreeSet::from([Word::empty()])
        );
        assert!(LangExpr::star_set([Word::empty()]).is_err());
        assert!(LangExpr::StarSet(BTreeSet::new()).validate().is_err());
        assert!(sample().validate().is_ok());
    }

    #[test]
    fn rendering() {
        assert_eq!(sample().to_string(), "{AC}*·\"ACAGTGT\"·{GT}*");
        assert_eq!(sample().render_with_base(&w("ACAGTGT")), "{AC}*·w·{GT}*");
        let e = LangExpr::concat(vec![
            LangExpr::union(vec![LangExpr::atom(w("A")), LangExpr::atom(w("C"))]),
            LangExpr::at_least(w("AC"), 3),
        ]);
        assert_eq!(e.to_string(), "(\"A\" ∪ \"C\")·\"AC\"^{>=3}");
        assert_eq!(LangExpr::union(vec![]).to_string(), "∅");
    }

    #[test]
    fn dual_reverses_and_complements() {
        let ab = Alphabet::dna();
        let d = sample().dual(&ab);
        assert_eq!(d.to_string(), "{AC}*·\"ACACTGT\"·{GT}*");
        let direct: BTreeSet<Word> = enumerate_expr(&sample(), 15)
            .iter()
            .map(|z| ab.complement(z))
            .collect();
        assert_eq!(enumerate_expr(&d, 15), direct);
    }
}
