//! Alphabets with an involution, words, primers and the basic factor
//! predicates everything else is built on.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{HairpinError, Result};

/// A finite letter set together with its complement map.
///
/// Letters are printable ASCII symbols other than `,` and `:` (those two
/// delimit the textual form `A:T,C:G`). The complement map is an involution:
/// declaring `X:Y` fixes both `X̄ = Y` and `Ȳ = X`.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    bar: [u8; 128],
    letters: Vec<u8>,
}

impl Alphabet {
    /// The Watson-Crick alphabet `A:T,C:G`.
    pub fn dna() -> Self {
        Self::from_pairs([(b'A', b'T'), (b'C', b'G')]).expect("dna preset is valid")
    }

    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u8, u8)>,
    {
        let mut bar = [0u8; 128];
        for (x, y) in pairs {
            for c in [x, y] {
                if !is_letter_symbol(c) {
                    return Err(HairpinError::InvalidAlphabet(format!(
                        "{:?} cannot be used as a letter",
                        c as char
                    )));
                }
            }
            for (a, b) in [(x, y), (y, x)] {
                let slot = &mut bar[a as usize];
                if *slot != 0 && *slot != b {
                    return Err(HairpinError::InvalidAlphabet(format!(
                        "letter {:?} is paired with both {:?} and {:?}",
                        a as char, *slot as char, b as char
                    )));
                }
                *slot = b;
            }
        }
        let letters: Vec<u8> = (0u8..128).filter(|&c| bar[c as usize] != 0).collect();
        if letters.is_empty() {
            return Err(HairpinError::InvalidAlphabet("no letters declared".into()));
        }
        Ok(Alphabet { bar, letters })
    }

    /// Letters in ascending byte order.
    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn contains(&self, letter: u8) -> bool {
        letter < 128 && self.bar[letter as usize] != 0
    }

    pub fn complement_letter(&self, letter: u8) -> Option<u8> {
        if self.contains(letter) {
            Some(self.bar[letter as usize])
        } else {
            None
        }
    }

    /// Parses and validates a word over this alphabet.
    pub fn word(&self, text: &str) -> Result<Word> {
        for (position, c) in text.chars().enumerate() {
            if !c.is_ascii() || !self.contains(c as u8) {
                return Err(HairpinError::InvalidLetter {
                    letter: c,
                    position,
                });
            }
        }
        Ok(Word(text.as_bytes().to_vec()))
    }

    /// Whether every letter of `w` belongs to the alphabet.
    pub fn admits(&self, w: &Word) -> bool {
        w.0.iter().all(|&c| self.contains(c))
    }

    /// The anti-morphic extension of the involution: reverse, then complement
    /// letterwise.
    ///
    /// Letters outside the alphabet are left unchanged.
    pub fn complement(&self, w: &Word) -> Word {
        Word(
            w.0.iter()
                .rev()
                .map(|&c| self.complement_letter(c).unwrap_or(c))
                .collect(),
        )
    }

    /// Canonical textual form, e.g. `A:T,C:G`.
    pub fn spec(&self) -> String {
        self.letters
            .iter()
            .filter(|&&c| c <= self.bar[c as usize])
            .map(|&c| format!("{}:{}", c as char, self.bar[c as usize] as char))
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn is_letter_symbol(c: u8) -> bool {
    c.is_ascii_graphic() && c != b',' && c != b':'
}

impl FromStr for Alphabet {
    type Err = HairpinError;

    /// Accepts the preset name `dna` or a comma-separated list of `X:Y` pairs.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("dna") {
            return Ok(Self::dna());
        }
        let mut pairs = Vec::new();
        for item in s.split(',') {
            let item = item.trim();
            let bytes = item.as_bytes();
            if bytes.len() != 3 || bytes[1] != b':' {
                return Err(HairpinError::InvalidAlphabet(format!(
                    "expected a pair like X:Y, got {item:?}"
                )));
            }
            pairs.push((bytes[0], bytes[2]));
        }
        Self::from_pairs(pairs)
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({})", self.spec())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

/// A finite sequence of letters.
///
/// Words order shortlex: shorter words first, equal lengths lexicographically.
/// Sorted collections of words therefore come out in the order reports use.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Wraps raw letters without checking them against an alphabet.
    pub fn from_bytes(bytes: impl Into<Vec<u8>>) -> Self {
        Word(bytes.into())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn join<'a, I>(parts: I) -> Word
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut out = Vec::new();
        for p in parts {
            out.extend_from_slice(&p.0);
        }
        Word(out)
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// `self ≤ₚ w`
    pub fn is_prefix_of(&self, w: &Word) -> bool {
        w.0.starts_with(&self.0)
    }

    /// `self <ₚ w`
    pub fn is_proper_prefix_of(&self, w: &Word) -> bool {
        self.len() < w.len() && self.is_prefix_of(w)
    }

    /// `w ≥ₛ self`
    pub fn is_suffix_of(&self, w: &Word) -> bool {
        w.0.ends_with(&self.0)
    }

    /// `w >ₛ self`
    pub fn is_proper_suffix_of(&self, w: &Word) -> bool {
        self.len() < w.len() && self.is_suffix_of(w)
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix(&self, len: usize) -> Word {
        Word(self.0[self.len() - len..].to_vec())
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", String::from_utf8_lossy(&self.0))
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

/// Start positions of every occurrence of `pattern` in `w`, ascending,
/// overlapping occurrences included.
pub fn occurrences(pattern: &[u8], w: &[u8]) -> Vec<usize> {
    assert!(!pattern.is_empty(), "occurrences: empty pattern");
    if pattern.len() > w.len() {
        return Vec::new();
    }
    w.windows(pattern.len())
        .enumerate()
        .filter(|(_, win)| *win == pattern)
        .map(|(i, _)| i)
        .collect()
}

pub(crate) fn count_occurrences(pattern: &[u8], w: &[u8]) -> usize {
    if pattern.len() > w.len() {
        return 0;
    }
    w.windows(pattern.len())
        .filter(|win| *win == pattern)
        .count()
}

/// A primer `α` together with its complement `ᾱ` and the alphabet both live in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Primer {
    word: Word,
    bar: Word,
    alphabet: Alphabet,
}

impl Primer {
    /// Builds a primer. Self-complementary primers are allowed here; the
    /// decision procedures reject them separately.
    pub fn new(word: Word, alphabet: &Alphabet) -> Result<Self> {
        if word.is_empty() {
            return Err(HairpinError::EmptyPrimer);
        }
        if let Some(position) = word.0.iter().position(|&c| !alphabet.contains(c)) {
            return Err(HairpinError::InvalidLetter {
                letter: word.0[position] as char,
                position,
            });
        }
        let bar = alphabet.complement(&word);
        Ok(Primer {
            word,
            bar,
            alphabet: alphabet.clone(),
        })
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        Self::new(alphabet.word(text)?, alphabet)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// `ᾱ`
    pub fn bar(&self) -> &Word {
        &self.bar
    }

    /// The primer length `k`.
    pub fn k(&self) -> usize {
        self.word.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn complement(&self, w: &Word) -> Word {
        self.alphabet.complement(w)
    }

    pub fn is_self_complementary(&self) -> bool {
        self.word == self.bar
    }

    pub(crate) fn require_not_self_complementary(&self) -> Result<()> {
        if self.is_self_complementary() {
            Err(HairpinError::PrimerSelfComplementary(self.word.to_string()))
        } else {
            Ok(())
        }
    }
}

/// The α-index of `x`: occurrences of `α` in `xα`, not counting the final one.
pub fn alpha_index(x: &Word, primer: &Primer) -> usize {
    let xa = x.concat(primer.word());
    count_occurrences(primer.word().as_bytes(), xa.as_bytes()) - 1
}

/// `x ∈ αΣ*α⁻¹`, i.e. `α ≤ₚ xα`.
pub fn in_alpha_quotient(x: &Word, primer: &Primer) -> bool {
    primer.word().is_prefix_of(&x.concat(primer.word()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna(s: &str) -> Word {
        Alphabet::dna().word(s).unwrap()
    }

    fn primer(s: &str) -> Primer {
        Primer::parse(s, &Alphabet::dna()).unwrap()
    }

    #[test]
    fn complement_examples() {
        let a = Alphabet::dna();
        assert_eq!(a.complement(&dna("ACG")), dna("CGT"));
        assert_eq!(a.complement(&Word::empty()), Word::empty());
        assert_eq!(a.complement(&dna("GGTGT")), dna("ACACC"));
    }

    #[test]
    fn complement_matches_letterwise_then_reverse() {
        let a = Alphabet::dna();
        let w = dna("GGTGTAACC");
        let mut letterwise: Vec<u8> = w
            .as_bytes()
            .iter()
            .map(|c| match c {
                b'A' => b'T',
                b'T' => b'A',
                b'C' => b'G',
                _ => b'C',
            })
            .collect();
        letterwise.reverse();
        assert_eq!(a.complement(&w).as_bytes(), &letterwise[..]);
    }

    #[test]
    fn prefix_suffix_predicates() {
        let w = dna("ACAGTGT");
        assert!(dna("AC").is_prefix_of(&w));
        assert!(w.is_prefix_of(&w));
        assert!(!w.is_proper_prefix_of(&w));
        assert!(dna("TGT").is_suffix_of(&w));
        assert!(dna("TGT").is_proper_suffix_of(&w));
        assert!(Word::empty().is_prefix_of(&w));
        assert!(!dna("CA").is_prefix_of(&w));
    }

    #[test]
    fn occurrence_scan() {
        assert_eq!(occurrences(b"A", b"ACAGTGT"), vec![0, 2]);
        assert_eq!(occurrences(b"T", b"ACAGTGT"), vec![4, 6]);
        assert_eq!(occurrences(b"GT", b"TGTGT"), vec![1, 3]);
        assert_eq!(occurrences(b"AAA", b"AA"), Vec::<usize>::new());
        assert_eq!(occurrences(b"AA", b"AAAA"), vec![0, 1, 2]);
    }

    #[test]
    fn alpha_index_examples() {
        let a = primer("A");
        assert_eq!(alpha_index(&dna("AC"), &a), 1);
        assert_eq!(alpha_index(&Word::empty(), &a), 0);
        assert_eq!(alpha_index(&dna("ACAG"), &a), 2);
    }

    #[test]
    fn alphabet_parsing() {
        let a: Alphabet = "A:T,C:G".parse().unwrap();
        assert_eq!(a, Alphabet::dna());
        assert_eq!(a.spec(), "A:T,C:G");
        let b: Alphabet = "a:b, x:x".parse().unwrap();
        assert_eq!(b.complement_letter(b'x'), Some(b'x'));
        assert_eq!(b.complement_letter(b'b'), Some(b'a'));
        assert!("A:T,A:C".parse::<Alphabet>().is_err());
        assert!("AT".parse::<Alphabet>().is_err());
        assert!("A:,".parse::<Alphabet>().is_err());
        assert!("".parse::<Alphabet>().is_err());
    }

    #[test]
    fn words_reject_foreign_letters() {
        let err = Alphabet::dna().word("ACX").unwrap_err();
        assert_eq!(
            err,
            HairpinError::InvalidLetter {
                letter: 'X',
                position: 2
            }
        );
        assert!(Alphabet::dna().word("acgt").is_err());
    }

    #[test]
    fn primers() {
        assert!(Primer::parse("", &Alphabet::dna()).is_err());
        assert!(primer("AT").is_self_complementary());
        assert!(!primer("A").is_self_complementary());
        assert_eq!(primer("AC").bar(), &dna("GT"));
    }

    #[test]
    fn shortlex_order() {
        let mut v = vec![dna("T"), dna("AA"), dna("C"), Word::empty()];
        v.sort();
        assert_eq!(v, vec![Word::empty(), dna("C"), dna("T"), dna("AA")]);
    }
}
