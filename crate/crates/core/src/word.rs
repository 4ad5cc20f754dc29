//! Exact arithmetic on freely reduced and cyclically reduced words over a
//! free group of finite rank.
//!
//! Two grammars are accepted for words. The compact form uses ASCII letters:
//! lowercase `a`..`z` denote the generators `x1`..`x26` and uppercase their
//! inverses, with no separators. The indexed form uses whitespace-separated
//! tokens `x<k>` and `X<k>` with `k >= 1`. The parser auto-detects the form;
//! mixing them is a syntax error.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Rank of the ambient free group (number of generators, at least 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(u32);

impl Rank {
    pub fn new(g: u32) -> Result<Rank> {
        if g == 0 {
            return Err(Error::InvalidRank);
        }
        Ok(Rank(g))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// The `2g` signed letters in canonical order: `x1, X1, x2, X2, ...`
    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (1..=self.0).flat_map(|k| [Letter::new(k, false), Letter::new(k, true)])
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A signed generator: `+k` is the generator `x_k`, `-k` its inverse.
///
/// The total order is generator index ascending, positive before inverse
/// (`x1 < X1 < x2 < X2 < ...`); the canonical rotation of cyclic words and
/// every deterministic export relies on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    /// Panics if `generator` is zero.
    pub fn new(generator: u32, inverse: bool) -> Letter {
        assert!(generator > 0, "generator indices are 1-based");
        let k = generator as i32;
        Letter(if inverse { -k } else { k })
    }

    pub fn from_signed(code: i32) -> Result<Letter> {
        if code == 0 {
            return Err(Error::Syntax("letter code 0 is not a generator".into()));
        }
        Ok(Letter(code))
    }

    pub fn generator(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    pub fn signed(self) -> i32 {
        self.0
    }

    fn order_key(self) -> (u32, bool) {
        (self.generator(), self.is_inverse())
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl serde::Serialize for Letter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i32(self.0)
    }
}

impl<'de> serde::Deserialize<'de> for Letter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let code = i32::deserialize(d)?;
        Letter::from_signed(code).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.generator();
        if k <= 26 {
            let c = (b'a' + (k - 1) as u8) as char;
            if self.is_inverse() {
                write!(f, "{}", c.to_ascii_uppercase())
            } else {
                write!(f, "{c}")
            }
        } else if self.is_inverse() {
            write!(f, "X{k}")
        } else {
            write!(f, "x{k}")
        }
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    /// Free reduction: cancels every adjacent `l, l^-1` pair.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { letters: stack }
    }

    /// Parses either grammar, checking every generator index against `rank`.
    pub fn parse(text: &str, rank: Rank) -> Result<Word> {
        let letters = parse_letters(text)?;
        for l in &letters {
            if l.generator() > rank.get() {
                return Err(Error::RankExceeded {
                    index: l.generator(),
                    rank: rank.get(),
                });
            }
        }
        Ok(Word::from_letters(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        // The reverse of a reduced word is reduced.
        Word { letters }
    }

    /// Reduced product `self . other`.
    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// `conjugator . self . conjugator^-1`, reduced.
    pub fn conjugate_by(&self, conjugator: &Word) -> Word {
        conjugator.concat(self).concat(&conjugator.inverse())
    }

    /// Largest generator index appearing, or `None` for the identity.
    pub fn max_generator(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.generator()).max()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_letters(&self.letters, f)
    }
}

/// A cyclically reduced word stored in its canonical rotation, representing
/// a conjugacy class of the rank-`g` free group.
///
/// Canonical rotation: the lexicographically least rotation under the
/// `Letter` order. All rotations of the same cyclic sequence construct the
/// identical value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicWord {
    letters: Vec<Letter>,
    rank: Rank,
}

impl CyclicWord {
    /// Cyclically reduces `word`, returning the canonical core and a
    /// conjugator `u` with `word = u . core . u^-1`.
    pub fn reduce(word: &Word, rank: Rank) -> Result<(CyclicWord, Word)> {
        if let Some(max) = word.max_generator() {
            if max > rank.get() {
                return Err(Error::RankExceeded {
                    index: max,
                    rank: rank.get(),
                });
            }
        }
        let mut letters = word.letters().to_vec();
        let mut prefix: Vec<Letter> = Vec::new();
        while letters.len() >= 2 && *letters.first().unwrap() == letters.last().unwrap().inverse() {
            prefix.push(letters.remove(0));
            letters.pop();
        }
        let start = least_rotation(&letters);
        prefix.extend_from_slice(&letters[..start]);
        letters.rotate_left(start);
        let conjugator = Word { letters: prefix };
        Ok((CyclicWord { letters, rank }, conjugator))
    }

    /// Parses and cyclically reduces in one step, discarding the conjugator.
    pub fn parse(text: &str, rank: Rank) -> Result<CyclicWord> {
        let word = Word::parse(text, rank)?;
        Ok(CyclicWord::reduce(&word, rank)?.0)
    }

    /// Builds the canonical cyclic word from an already cyclically reduced
    /// sequence. Panics in debug builds if the sequence is not cyclically
    /// reduced; use [`CyclicWord::reduce`] for arbitrary input.
    pub fn from_cyclically_reduced<I: IntoIterator<Item = Letter>>(
        letters: I,
        rank: Rank,
    ) -> CyclicWord {
        let mut letters: Vec<Letter> = letters.into_iter().collect();
        debug_assert!(is_cyclically_reduced(&letters));
        let start = least_rotation(&letters);
        letters.rotate_left(start);
        CyclicWord { letters, rank }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The canonical rotation as a linear word.
    pub fn to_word(&self) -> Word {
        Word {
            letters: self.letters.clone(),
        }
    }

    /// Smallest rotational period: `self = root^exponent` with `exponent`
    /// maximal.
    pub fn root(&self) -> Result<(CyclicWord, u32)> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = self.letters.len();
        for d in 1..=n {
            if !n.is_multiple_of(d) {
                continue;
            }
            if (0..n).all(|i| self.letters[i] == self.letters[(i + d) % n]) {
                let root = CyclicWord {
                    letters: self.letters[..d].to_vec(),
                    rank: self.rank,
                };
                debug_assert_eq!(least_rotation(&root.letters), 0);
                return Ok((root, (n / d) as u32));
            }
        }
        unreachable!("period n always satisfies the scan");
    }

    /// Exactly the generator indices appearing in the word.
    pub fn support(&self) -> BTreeSet<u32> {
        self.letters.iter().map(|l| l.generator()).collect()
    }

    /// True when every generator `1..=g` appears.
    pub fn has_full_support(&self) -> bool {
        self.support().len() as u32 == self.rank.get()
    }

    /// Smallest generator index that does not appear, if any.
    pub fn omitted_generator(&self) -> Option<u32> {
        let support = self.support();
        (1..=self.rank.get()).find(|k| !support.contains(k))
    }

    /// The class of the inverse element.
    pub fn inverse(&self) -> CyclicWord {
        let inv: Vec<Letter> = self.letters.iter().rev().map(|l| l.inverse()).collect();
        CyclicWord::from_cyclically_reduced(inv, self.rank)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_letters(&self.letters, f)
    }
}

fn is_cyclically_reduced(letters: &[Letter]) -> bool {
    let freely = letters.windows(2).all(|w| w[0] != w[1].inverse());
    let ends =
        letters.len() <= 1 || letters.first().copied() != letters.last().map(|l| l.inverse());
    freely && ends
}

/// Index of the lexicographically least rotation under the `Letter` order.
fn least_rotation(letters: &[Letter]) -> usize {
    let n = letters.len();
    if n <= 1 {
        return 0;
    }
    let mut best = 0;
    for cand in 1..n {
        for i in 0..n {
            let a = letters[(cand + i) % n];
            let b = letters[(best + i) % n];
            match a.cmp(&b) {
                Ordering::Less => {
                    best = cand;
                    break;
                }
                Ordering::Greater => break,
                Ordering::Equal => {}
            }
        }
    }
    best
}

fn format_letters(letters: &[Letter], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let compact = letters.iter().all(|l| l.generator() <= 26);
    for (i, l) in letters.iter().enumerate() {
        if compact {
            write!(f, "{l}")?;
        } else {
            // one letter above z forces the whole word into indexed form
            if i > 0 {
                write!(f, " ")?;
            }
            let head = if l.is_inverse() { 'X' } else { 'x' };
            write!(f, "{head}{}", l.generator())?;
        }
    }
    Ok(())
}

fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let indexed = text
        .chars()
        .any(|c| c.is_ascii_digit() || c.is_whitespace());
    if indexed {
        parse_indexed(text)
    } else {
        parse_compact(text)
    }
}

fn parse_compact(text: &str) -> Result<Vec<Letter>> {
    text.chars()
        .map(|c| {
            if c.is_ascii_lowercase() {
                Ok(Letter::new(c as u32 - 'a' as u32 + 1, false))
            } else if c.is_ascii_uppercase() {
                Ok(Letter::new(c as u32 - 'A' as u32 + 1, true))
            } else {
                Err(Error::Syntax(format!("unexpected character {c:?}")))
            }
        })
        .collect()
}

fn parse_indexed(text: &str) -> Result<Vec<Letter>> {
    text.split_whitespace()
        .map(|token| {
            let mut chars = token.chars();
            let head = chars.next().unwrap();
            let inverse = match head {
                'x' => false,
                'X' => true,
                _ => return Err(Error::Syntax(format!("bad token {token:?}"))),
            };
            let digits = chars.as_str();
            if digits.is_empty()
                || digits.starts_with('0')
                || !digits.bytes().all(|b| b.is_ascii_digit())
            {
                return Err(Error::Syntax(format!("bad token {token:?}")));
            }
            let k: u32 = digits
                .parse()
                .map_err(|_| Error::Syntax(format!("bad token {token:?}")))?;
            Ok(Letter::new(k, inverse))
        })
        .collect()
}
