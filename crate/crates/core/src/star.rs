//! Membership in the Kleene star of a finite word set.

use crate::word::Word;

/// Whether `x ∈ X*`. Empty words in `generators` are ignored.
pub fn in_star<'a, I>(x: &Word, generators: I) -> bool
where
    I: IntoIterator<Item = &'a Word>,
{
    let tokens = tokens(generators);
    suffix_table(x.as_bytes(), &tokens)[0]
}

/// A factorization of `x` over `generators`, if one exists.
///
/// At each position the longest token that still leaves a factorizable rest
/// is taken, so the result is deterministic.
pub fn factorize<'a, I>(x: &Word, generators: I) -> Option<Vec<Word>>
where
    I: IntoIterator<Item = &'a Word>,
{
    let mut tokens = tokens(generators);
    let bytes = x.as_bytes();
    let ok = suffix_table(bytes, &tokens);
    if !ok[0] {
        return None;
    }
    tokens.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let t = tokens
            .iter()
            .find(|t| bytes[pos..].starts_with(t) && ok[pos + t.len()])
            .expect("suffix table guarantees a continuation");
        out.push(Word::from_bytes(*t));
        pos += t.len();
    }
    Some(out)
}

fn tokens<'a, I>(generators: I) -> Vec<&'a [u8]>
where
    I: IntoIterator<Item = &'a Word>,
{
    let mut v: Vec<&[u8]> = generators
        .into_iter()
        .map(Word::as_bytes)
        .filter(|t| !t.is_empty())
        .collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// `ok[i]` iff `x[i..] ∈ X*`.
fn suffix_table(x: &[u8], tokens: &[&[u8]]) -> Vec<bool> {
    let n = x.len();
    let mut ok = vec![false; n + 1];
    ok[n] = true;
    for i in (0..n).rev() {
        ok[i] = tokens
            .iter()
            .any(|t| i + t.len() <= n && ok[i + t.len()] && x[i..].starts_with(t));
    }
    ok
}
