//! Monomial orders on words.
//!
//! Each order is realized by a sort key whose plain lexicographic `Ord`
//! agrees with the order. Keys start with a small header (total length, or
//! the per-group degree vector) followed by the letters, so the letters can
//! be read back from the key.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::alphabet::{Alphabet, Sym};
use crate::error::{AlgebraError, Result};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Letter-by-letter by rank; a proper prefix is smaller. Not
    /// multiplicative on the right, so completion under it may not
    /// terminate.
    Lex,
    /// Length first, then letter-by-letter by rank.
    GradedLex,
    /// Degree vector over the groups (highest group first), then
    /// letter-by-letter by rank.
    MultiGradedLex,
}

impl OrderKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::GradedLex => "graded-lex",
            OrderKind::MultiGradedLex => "multigraded-lex",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "lex" => Some(OrderKind::Lex),
            "graded-lex" | "deglex" => Some(OrderKind::GradedLex),
            "multigraded-lex" | "multigraded" => Some(OrderKind::MultiGradedLex),
            _ => None,
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A total order on words over one alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    alphabet: Arc<Alphabet>,
}

/// Sort key of a word; `Ord` on keys is the monomial order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SortKey(SmallVec<[u16; 16]>);

impl MonomialOrder {
    pub fn new(kind: OrderKind, alphabet: Arc<Alphabet>) -> Arc<Self> {
        Arc::new(MonomialOrder { kind, alphabet })
    }

    /// Builds the multigraded order described by an order spec such as
    /// `k1<k2<<u1<<u2`, with inverses inserted for `invertible`.
    pub fn from_spec(kind: OrderKind, spec: &str, invertible: &[&str]) -> Result<Arc<Self>> {
        Ok(Self::new(kind, Arc::new(Alphabet::from_order_spec(spec, invertible)?)))
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Same alphabet, different comparison rule.
    pub fn with_kind(&self, kind: OrderKind) -> Arc<Self> {
        Self::new(kind, self.alphabet.clone())
    }

    /// Whether `w·a·v < w·b·v` follows from `a < b` for all words.
    pub fn is_multiplicative(&self) -> bool {
        self.kind != OrderKind::Lex
    }

    pub(crate) fn header_len(&self) -> usize {
        match self.kind {
            OrderKind::Lex => 0,
            OrderKind::GradedLex => 1,
            OrderKind::MultiGradedLex => self.alphabet.groups() as usize,
        }
    }

    fn check(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|&&s| !self.alphabet.contains(s)) {
            Some(&s) => Err(AlgebraError::ForeignSymbol(s)),
            None => Ok(()),
        }
    }

    /// Compares two words, rejecting letters outside the alphabet.
    pub fn compare(&self, a: &Word, b: &Word) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.cmp_words(a, b))
    }

    /// Compares two words known to lie over this alphabet.
    pub fn cmp_words(&self, a: &Word, b: &Word) -> Ordering {
        match self.kind {
            OrderKind::Lex => a.letters().cmp(b.letters()),
            OrderKind::GradedLex => a.len().cmp(&b.len()).then_with(|| a.letters().cmp(b.letters())),
            OrderKind::MultiGradedLex => {
                let ga = self.degree_vector(a);
                let gb = self.degree_vector(b);
                ga.cmp(&gb).then_with(|| a.letters().cmp(b.letters()))
            }
        }
    }

    /// Per-group degrees, highest group first.
    fn degree_vector(&self, w: &Word) -> SmallVec<[u16; 16]> {
        let g = self.alphabet.groups() as usize;
        let mut v: SmallVec<[u16; 16]> = SmallVec::from_elem(0, g);
        for &s in w.letters() {
            v[g - 1 - self.alphabet.group(s) as usize] += 1;
        }
        v
    }

    pub fn sort_key(&self, w: &Word) -> SortKey {
        let mut key: SmallVec<[u16; 16]> = match self.kind {
            OrderKind::Lex => SmallVec::new(),
            OrderKind::GradedLex => SmallVec::from_elem(w.len() as u16, 1),
            OrderKind::MultiGradedLex => self.degree_vector(w),
        };
        key.extend_from_slice(w.letters());
        SortKey(key)
    }

    /// Recovers the word from a key made by this order.
    pub fn key_word(&self, key: &SortKey) -> Word {
        Word::from_letters(&key.0[self.header_len()..])
    }

    pub(crate) fn key_letters<'k>(&self, key: &'k SortKey) -> &'k [Sym] {
        &key.0[self.header_len()..]
    }

    /// Renders the order in `a<b<<c` notation, using `<` everywhere unless
    /// the order is multigraded.
    pub fn to_spec(&self) -> String {
        match self.kind {
            OrderKind::MultiGradedLex => self.alphabet.to_order_spec(),
            _ => self.alphabet.to_order_spec().replace("<<", "<"),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.to_spec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_order() -> Arc<MonomialOrder> {
        MonomialOrder::from_spec(OrderKind::MultiGradedLex, "x1<x2<x3<<x4", &[]).unwrap()
    }

    fn w(o: &MonomialOrder, names: &[&str]) -> Word {
        Word::from_letters(&names.iter().map(|n| o.alphabet().lookup(n).unwrap()).collect::<Vec<_>>())
    }

    #[test]
    fn multigraded_examples() {
        let o = x_order();
        let cmp = |a: &[&str], b: &[&str]| o.compare(&w(&o, a), &w(&o, b)).unwrap();
        assert_eq!(cmp(&["x1", "x2"], &["x2", "x1"]), Ordering::Less);
        assert_eq!(cmp(&["x3", "x2", "x1"], &["x4"]), Ordering::Less);
        assert_eq!(cmp(&["x3"], &["x1", "x2"]), Ordering::Less);
        assert_eq!(cmp(&["x4", "x1"], &["x4", "x1"]), Ordering::Equal);
    }

    #[test]
    fn keys_agree_with_compare() {
        let o = x_order();
        let words = [
            w(&o, &[]),
            w(&o, &["x4"]),
            w(&o, &["x1", "x4"]),
            w(&o, &["x3", "x3", "x3"]),
            w(&o, &["x2"]),
        ];
        for kind in [OrderKind::Lex, OrderKind::GradedLex, OrderKind::MultiGradedLex] {
            let o = o.with_kind(kind);
            for a in &words {
                assert_eq!(&o.key_word(&o.sort_key(a)), a);
                for b in &words {
                    assert_eq!(o.sort_key(a).cmp(&o.sort_key(b)), o.cmp_words(a, b));
                }
            }
        }
    }

    #[test]
    fn lex_prefix_is_smaller() {
        let o = x_order().with_kind(OrderKind::Lex);
        assert_eq!(o.cmp_words(&w(&o, &["x2"]), &w(&o, &["x2", "x1"])), Ordering::Less);
        assert_eq!(o.cmp_words(&w(&o, &["x2"]), &w(&o, &["x1", "x4"])), Ordering::Greater);
    }

    #[test]
    fn foreign_symbol_is_an_error() {
        let o = x_order();
        let bad = Word::letter(99);
        assert_eq!(o.compare(&bad, &Word::empty()), Err(AlgebraError::ForeignSymbol(99)));
    }
}
