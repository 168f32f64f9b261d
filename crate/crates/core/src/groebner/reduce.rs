use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::order::{MonomialOrder, SortKey};
use crate::poly::{Polynomial, Term};
use crate::rational::Rational;
use crate::word::Word;

use super::rules::RuleSet;

/// Outcome of a step-limited reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub result: Polynomial,
    /// Number of single rewrites performed.
    pub steps: usize,
    /// Whether `result` is a normal form.
    pub complete: bool,
}

/// Rewrites `p` until no rule lhs occurs in any of its words.
///
/// Terms are processed from the largest down. Each rewrite replaces one
/// occurrence `l·lhs·r` by `l·rhs·r`, choosing the leftmost match and, at
/// that position, the longest lhs.
pub fn reduce(p: &Polynomial, rules: &RuleSet) -> Polynomial {
    reduce_steps(p, rules, usize::MAX).result
}

/// Like [`reduce`] but stops after `max_steps` rewrites.
pub fn reduce_steps(p: &Polynomial, rules: &RuleSet, max_steps: usize) -> Reduction {
    let order = p.order();
    let pending = key_map(order, p.terms());
    run(order, pending, Vec::new(), rules, max_steps)
}

/// Reduces everything but the lead term.
pub(crate) fn reduce_tail(p: &Polynomial, rules: &RuleSet) -> Polynomial {
    let order = p.order();
    let Some((head, tail)) = p.terms().split_first() else {
        return p.clone();
    };
    let pending = key_map(order, tail);
    run(order, pending, vec![head.clone()], rules, usize::MAX).result
}

/// Normal form of `Σ c·l·p·r` without materializing the products.
pub(crate) fn reduce_combination(
    order: &Arc<MonomialOrder>,
    parts: &[(&Rational, &[u16], &Polynomial, &[u16])],
    rules: &RuleSet,
) -> Polynomial {
    let mut pending = BTreeMap::new();
    for &(c, l, p, r) in parts {
        for t in p.terms() {
            accumulate(&mut pending, order.sort_key(&t.word.sandwich(l, r)), c * &t.coeff);
        }
    }
    run(order, pending, Vec::new(), rules, usize::MAX).result
}

fn key_map(order: &MonomialOrder, terms: &[Term]) -> BTreeMap<SortKey, Rational> {
    terms.iter().map(|t| (order.sort_key(&t.word), t.coeff.clone())).collect()
}

fn accumulate(pending: &mut BTreeMap<SortKey, Rational>, key: SortKey, c: Rational) {
    match pending.entry(key) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn run(
    order: &Arc<MonomialOrder>,
    mut pending: BTreeMap<SortKey, Rational>,
    mut out: Vec<Term>,
    rules: &RuleSet,
    max_steps: usize,
) -> Reduction {
    let mut steps = 0usize;
    let mut complete = true;
    while let Some((key, c)) = pending.pop_last() {
        let letters = order.key_letters(&key);
        let hit = if steps < max_steps { rules.find_match(letters) } else { None };
        let Some((pos, id)) = hit else {
            if steps >= max_steps && complete && rules.matches(letters) {
                complete = false;
            }
            out.push(Term::new(c, Word::from_letters(letters)));
            continue;
        };
        let rule = rules.get(id).expect("matched rule is live");
        let span = rule.lhs.len();
        for t in rule.rhs.terms() {
            let mut w = Vec::with_capacity(letters.len() - span + t.word.len());
            w.extend_from_slice(&letters[..pos]);
            w.extend_from_slice(t.word.letters());
            w.extend_from_slice(&letters[pos + span..]);
            accumulate(&mut pending, order.sort_key(&Word::from(w)), &c * &t.coeff);
        }
        steps += 1;
    }
    let result = if order.is_multiplicative() {
        Polynomial::from_sorted_unchecked(order, out)
    } else {
        // Under lex a rewrite can produce a word above ones already emitted.
        Polynomial::from_terms(order, out.into_iter().map(|t| (t.coeff, t.word))).expect("same alphabet")
    };
    Reduction { result, steps, complete }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::rules::poly_to_rule;
    use crate::order::OrderKind;
    use crate::parse::parse_polynomial;

    fn setup(rules: &[&str]) -> (Arc<MonomialOrder>, RuleSet) {
        let o = MonomialOrder::from_spec(OrderKind::GradedLex, "x3<x2<x1", &[]).unwrap();
        let set = RuleSet::from_rules(&o, rules.iter().map(|r| poly_to_rule(&parse_polynomial(r, &o).unwrap()).unwrap()));
        (o, set)
    }

    #[test]
    fn example_with_two_rules() {
        let (o, set) = setup(&["x1*x1 - x2*x3 + x1", "x2*x3*x1 - 4*x1"]);
        let p = parse_polynomial("x1*x1*x2*x1 + x2*x3*x1 + x2", &o).unwrap();
        let r = reduce_steps(&p, &set, 2);
        assert_eq!(r.result.to_string(), "x2*x3*x2*x1 - x1*x2*x1 + 4*x1 + x2");
        assert_eq!(r.steps, 2);
        assert_eq!(reduce(&p, &set), r.result);
    }

    #[test]
    fn example_with_constant_rule() {
        let (o, set) = setup(&["x1*x2 + 3"]);
        let p = parse_polynomial("x2*x1*x2*x1 + x2", &o).unwrap();
        assert_eq!(reduce(&p, &set).to_string(), "-3*x2*x1 + x2");
    }

    #[test]
    fn no_rules_is_identity() {
        let (o, set) = setup(&[]);
        let p = parse_polynomial("x1*x2 - x3 + 7", &o).unwrap();
        assert_eq!(reduce(&p, &set), p);
    }

    #[test]
    fn step_limit_reports_incomplete() {
        let (o, set) = setup(&["x1*x2 + 3"]);
        let p = parse_polynomial("x1*x2*x1*x2", &o).unwrap();
        let r = reduce_steps(&p, &set, 1);
        assert!(!r.complete);
        assert_eq!(r.result.to_string(), "-3*x1*x2");
        assert_eq!(reduce(&p, &set).to_string(), "9");
    }

    #[test]
    fn tail_only() {
        let (o, set) = setup(&["x1*x2 + 3"]);
        let p = parse_polynomial("x1*x2*x1 + x1*x2", &o).unwrap();
        assert_eq!(reduce_tail(&p, &set).to_string(), "x1*x2*x1 - 3");
    }
}
