//! Polynomials of the free algebra with rational coefficients.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::alphabet::Sym;
use crate::error::{AlgebraError, Result};
use crate::order::{MonomialOrder, SortKey};
use crate::rational::Rational;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub word: Word,
}

impl Term {
    pub fn new(coeff: Rational, word: Word) -> Self {
        Term { coeff, word }
    }
}

/// A polynomial normalized under a fixed monomial order: no zero
/// coefficients, distinct words, terms strictly descending.
#[derive(Clone)]
pub struct Polynomial {
    order: Arc<MonomialOrder>,
    terms: Vec<Term>,
}

pub(crate) fn same_order(a: &Arc<MonomialOrder>, b: &Arc<MonomialOrder>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(order: &Arc<MonomialOrder>) -> Self {
        Polynomial { order: order.clone(), terms: Vec::new() }
    }

    pub fn constant(order: &Arc<MonomialOrder>, c: Rational) -> Self {
        Self::monomial(order, c, Word::empty())
    }

    pub fn one(order: &Arc<MonomialOrder>) -> Self {
        Self::constant(order, Rational::ONE)
    }

    pub fn monomial(order: &Arc<MonomialOrder>, c: Rational, word: Word) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![Term::new(c, word)] };
        Polynomial { order: order.clone(), terms }
    }

    /// The single-letter polynomial for symbol `s`.
    pub fn var(order: &Arc<MonomialOrder>, s: Sym) -> Self {
        Self::monomial(order, Rational::ONE, Word::letter(s))
    }

    /// Normalizes an arbitrary list of terms: like words are combined,
    /// zero coefficients dropped, and the result sorted descending.
    pub fn from_terms<I>(order: &Arc<MonomialOrder>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Word)>,
    {
        let mut acc: BTreeMap<SortKey, Rational> = BTreeMap::new();
        for (c, w) in terms {
            if let Some(&s) = w.letters().iter().find(|&&s| !order.alphabet().contains(s)) {
                return Err(AlgebraError::ForeignSymbol(s));
            }
            if c.is_zero() {
                continue;
            }
            let key = order.sort_key(&w);
            match acc.entry(key) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += &c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        Ok(Self::from_key_map(order, acc))
    }

    pub(crate) fn from_key_map(order: &Arc<MonomialOrder>, acc: BTreeMap<SortKey, Rational>) -> Self {
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| Term::new(c, order.key_word(&k)))
            .collect();
        Polynomial { order: order.clone(), terms }
    }

    /// Wraps terms that are already normalized under `order`.
    pub(crate) fn from_sorted_unchecked(order: &Arc<MonomialOrder>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|p| order.cmp_words(&p[0].word, &p[1].word) == std::cmp::Ordering::Greater));
        Polynomial { order: order.clone(), terms }
    }

    pub fn order(&self) -> &Arc<MonomialOrder> {
        &self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The order-maximal term.
    pub fn lead_term(&self) -> Result<(&Rational, &Word)> {
        self.terms
            .first()
            .map(|t| (&t.coeff, &t.word))
            .ok_or(AlgebraError::EmptyPolynomial)
    }

    pub fn lead_word(&self) -> Option<&Word> {
        self.terms.first().map(|t| &t.word)
    }

    pub fn lead_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Length of the longest word.
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|t| t.word.len()).max().unwrap_or(0)
    }

    /// Every symbol occurring in some term.
    pub fn symbols(&self) -> BTreeSet<Sym> {
        self.terms.iter().flat_map(|t| t.word.letters().iter().copied()).collect()
    }

    pub fn unknowns(&self) -> BTreeSet<Sym> {
        let a = self.order.alphabet();
        self.symbols().into_iter().filter(|&s| a.is_unknown(s)).collect()
    }

    pub fn contains_symbol(&self, s: Sym) -> bool {
        self.terms.iter().any(|t| t.word.letters().contains(&s))
    }

    fn check_order(&self, other: &Polynomial) -> Result<()> {
        if same_order(&self.order, &other.order) {
            Ok(())
        } else {
            Err(AlgebraError::AlphabetMismatch)
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.order);
        }
        let terms = self.terms.iter().map(|t| Term::new(&t.coeff * c, t.word.clone())).collect();
        Polynomial { order: self.order.clone(), terms }
    }

    /// Scales so the lead coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.lead_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_order(other)?;
        Ok(self.merge(other, &Rational::ONE))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_order(other)?;
        Ok(self.merge(other, &-Rational::ONE))
    }

    /// `self + c·other` by a sorted merge.
    fn merge(&self, other: &Polynomial, c: &Rational) -> Polynomial {
        use std::cmp::Ordering::*;
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => self.order.cmp_words(&a.word, &b.word),
                (Some(_), None) => Greater,
                _ => Less,
            };
            match ord {
                Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Less => {
                    let b = &other.terms[j];
                    out.push(Term::new(&b.coeff * c, b.word.clone()));
                    j += 1;
                }
                Equal => {
                    let s = &self.terms[i].coeff + &(&other.terms[j].coeff * c);
                    if !s.is_zero() {
                        out.push(Term::new(s, self.terms[i].word.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { order: self.order.clone(), terms: out }
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_order(other)?;
        let prod = self.terms.iter().flat_map(|a| {
            other.terms.iter().map(move |b| (&a.coeff * &b.coeff, a.word.concat(&b.word)))
        });
        Polynomial::from_terms(&self.order, prod)
    }

    /// `left · self · right` for words `left`, `right`.
    pub fn sandwich(&self, left: &[Sym], right: &[Sym]) -> Polynomial {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term::new(t.coeff.clone(), t.word.sandwich(left, right)))
            .collect();
        if self.order.is_multiplicative() {
            Polynomial { order: self.order.clone(), terms }
        } else {
            Polynomial::from_terms(&self.order, terms.into_iter().map(|t| (t.coeff, t.word)))
                .expect("letters already checked")
        }
    }

    /// Re-expresses this polynomial under another order, matching symbols
    /// by name.
    pub fn with_order(&self, order: &Arc<MonomialOrder>) -> Result<Polynomial> {
        if same_order(&self.order, order) {
            return Ok(self.clone());
        }
        let from = self.order.alphabet();
        let to = order.alphabet();
        let mut map = vec![None; from.len()];
        let mut terms = Vec::with_capacity(self.len());
        for t in &self.terms {
            let mut letters = Vec::with_capacity(t.word.len());
            for &s in t.word.letters() {
                let m = match map[s as usize] {
                    Some(m) => m,
                    None => {
                        let name = from.name(s);
                        let m = to.lookup(name).ok_or_else(|| AlgebraError::UnknownSymbol {
                            name: name.to_string(),
                            offset: 0,
                        })?;
                        map[s as usize] = Some(m);
                        m
                    }
                };
                letters.push(m);
            }
            terms.push((t.coeff.clone(), Word::from(letters)));
        }
        Polynomial::from_terms(order, terms)
    }

    /// Applies a symbol substitution `s -> rename[s]` within the same
    /// alphabet and re-normalizes.
    pub fn rename(&self, rename: &[Sym]) -> Polynomial {
        let terms = self.terms.iter().map(|t| {
            let letters: Vec<Sym> = t.word.letters().iter().map(|&s| rename[s as usize]).collect();
            (t.coeff.clone(), Word::from(letters))
        });
        Polynomial::from_terms(&self.order, terms).expect("rename stays inside the alphabet")
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_order(&self.order, &other.order)
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    /// Panics on mismatched alphabets; see [`Polynomial::try_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("alphabet mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("alphabet mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("alphabet mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::ONE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderKind;
    use crate::parse::parse_polynomial;

    fn order() -> Arc<MonomialOrder> {
        MonomialOrder::from_spec(OrderKind::GradedLex, "x3<x2<x1", &[]).unwrap()
    }

    #[test]
    fn lead_term_examples() {
        let o = order();
        let p = parse_polynomial("x1 - x2*x3 + x1*x1", &o).unwrap();
        let (c, w) = p.lead_term().unwrap();
        assert!(c.is_one());
        assert_eq!(w.display(o.alphabet()).to_string(), "x1*x1");
        let five = Polynomial::constant(&o, Rational::from(5));
        assert_eq!(five.lead_term().unwrap(), (&Rational::from(5), &Word::empty()));
        assert_eq!(Polynomial::zero(&o).lead_term(), Err(AlgebraError::EmptyPolynomial));

        let ku = MonomialOrder::from_spec(OrderKind::MultiGradedLex, "k1<<u1", &[]).unwrap();
        let p = parse_polynomial("k1*u1 + k1", &ku).unwrap();
        let cands = [p.terms()[0].word.clone(), p.terms()[1].word.clone()];
        let oracle = cands.iter().max_by(|a, b| ku.compare(a, b).unwrap()).unwrap();
        assert_eq!(p.lead_word(), Some(oracle));
        assert_eq!(p.to_string(), "k1*u1 + k1");
    }

    #[test]
    fn ring_examples() {
        let o = order();
        let p = |s| parse_polynomial(s, &o).unwrap();
        assert_eq!(&p("x1 + 1") * &p("x1 - 1"), p("x1*x1 - 1"));
        assert_eq!(&p("x1 + x2") * &p("x2"), p("x1*x2 + x2*x2"));
        let q = p("3*x1*x2 - 1/2*x3 + 7");
        assert!((&q + &q.scale(&-Rational::ONE)).is_zero());
        assert_ne!(&p("x1") * &p("x2"), &p("x2") * &p("x1"));
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        let a = order();
        let b = MonomialOrder::from_spec(OrderKind::GradedLex, "y", &[]).unwrap();
        let p = Polynomial::one(&a);
        let q = Polynomial::one(&b);
        assert_eq!(p.try_add(&q), Err(AlgebraError::AlphabetMismatch));
        assert_eq!(p.try_mul(&q), Err(AlgebraError::AlphabetMismatch));
    }

    #[test]
    fn with_order_translates_by_name() {
        let a = order();
        let b = MonomialOrder::from_spec(OrderKind::GradedLex, "x1<x2<x3", &[]).unwrap();
        let p = parse_polynomial("x1*x1 - x2*x3", &a).unwrap();
        let q = p.with_order(&b).unwrap();
        assert_eq!(q.to_string(), "-x2*x3 + x1*x1");
        assert_eq!(q.with_order(&a).unwrap(), p);
    }
}
