use std::fmt;

use smallvec::SmallVec;

use crate::alphabet::{Alphabet, Sym};

/// A monomial of the free algebra: a finite sequence of letters. The empty
/// word is the identity monomial.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(SmallVec<[Sym; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(s: Sym) -> Self {
        let mut v = SmallVec::new();
        v.push(s);
        Word(v)
    }

    pub fn from_letters(letters: &[Sym]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letters(&self) -> &[Sym] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = SmallVec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left · self · right`.
    pub fn sandwich(&self, left: &[Sym], right: &[Sym]) -> Word {
        let mut v = SmallVec::with_capacity(left.len() + self.len() + right.len());
        v.extend_from_slice(left);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(right);
        Word(v)
    }

    /// Replaces `len` letters at `pos` with `with`.
    pub fn splice(&self, pos: usize, len: usize, with: &[Sym]) -> Word {
        let mut v = SmallVec::with_capacity(self.len() - len + with.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(with);
        v.extend_from_slice(&self.0[pos + len..]);
        Word(v)
    }

    /// First position at which `pat` occurs as a contiguous subword.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.is_empty() {
            return Some(0);
        }
        self.0.windows(pat.len()).position(|w| w == pat.letters())
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.find(pat).is_some()
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay { word: self, alphabet }
    }
}

impl From<Vec<Sym>> for Word {
    fn from(v: Vec<Sym>) -> Self {
        Word(SmallVec::from_vec(v))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0.as_slice())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, &s) in self.word.letters().iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(self.alphabet.name(s))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splice_and_find() {
        let w = Word::from_letters(&[0, 0, 1, 0]);
        assert_eq!(w.find(&Word::from_letters(&[0, 1])), Some(1));
        assert_eq!(w.find(&Word::from_letters(&[1, 1])), None);
        assert_eq!(w.splice(0, 2, &[2]), Word::from_letters(&[2, 1, 0]));
        assert_eq!(w.splice(1, 2, &[]), Word::from_letters(&[0, 0]));
        assert_eq!(Word::letter(3).sandwich(&[1], &[2, 2]), Word::from_letters(&[1, 3, 2, 2]));
    }
}
