use std::sync::Arc;

use crate::alphabet::Sym;
use crate::error::Result;
use crate::order::MonomialOrder;
use crate::poly::{same_order, Polynomial};
use crate::word::Word;

/// `lhs → rhs`, built from a monic polynomial `lhs − rhs`. Every word of
/// `rhs` sits strictly below `lhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Polynomial,
}

impl RewriteRule {
    /// The monic polynomial `lhs − rhs` this rule came from.
    pub fn to_polynomial(&self) -> Polynomial {
        let order = self.rhs.order();
        &Polynomial::monomial(order, crate::Rational::ONE, self.lhs.clone()) - &self.rhs
    }
}

/// Turns `p` into its replacement rule: the lead word rewrites to the
/// negated remaining terms divided by the lead coefficient.
pub fn poly_to_rule(p: &Polynomial) -> Result<RewriteRule> {
    let (_, lead) = p.lead_term()?;
    let lhs = lead.clone();
    let monic = p.monic();
    let tail = monic.terms()[1..].to_vec();
    let rhs = -&Polynomial::from_sorted_unchecked(p.order(), tail);
    Ok(RewriteRule { lhs, rhs })
}

/// A set of rules indexed by a trie over their left-hand sides.
#[derive(Clone, Debug)]
pub struct RuleSet {
    order: Arc<MonomialOrder>,
    rules: Vec<Option<RewriteRule>>,
    nodes: Vec<Node>,
    width: usize,
    live: usize,
}

#[derive(Clone, Debug)]
struct Node {
    next: Box<[u32]>,
    rule: Option<u32>,
}

impl Node {
    fn new(width: usize) -> Self {
        Node { next: vec![0; width].into_boxed_slice(), rule: None }
    }
}

impl RuleSet {
    pub fn new(order: &Arc<MonomialOrder>) -> Self {
        let width = order.alphabet().len();
        RuleSet { order: order.clone(), rules: Vec::new(), nodes: vec![Node::new(width)], width, live: 0 }
    }

    /// Rules for every nonzero polynomial in `polys`.
    pub fn from_polys<'a>(order: &Arc<MonomialOrder>, polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let mut set = RuleSet::new(order);
        for p in polys {
            if let Ok(rule) = poly_to_rule(p) {
                set.insert(rule);
            }
        }
        set
    }

    pub fn from_rules(order: &Arc<MonomialOrder>, rules: impl IntoIterator<Item = RewriteRule>) -> Self {
        let mut set = RuleSet::new(order);
        for r in rules {
            set.insert(r);
        }
        set
    }

    pub fn order(&self) -> &Arc<MonomialOrder> {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.live
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    pub fn rules(&self) -> impl Iterator<Item = &RewriteRule> {
        self.rules.iter().flatten()
    }

    /// Adds a rule and returns its id. A rule whose lhs equals an existing
    /// lhs shadows it.
    pub fn insert(&mut self, rule: RewriteRule) -> usize {
        debug_assert!(same_order(rule.rhs.order(), &self.order));
        let id = self.rules.len();
        let mut node = 0usize;
        for &s in rule.lhs.letters() {
            let slot = self.nodes[node].next[s as usize];
            node = if slot == 0 {
                self.nodes.push(Node::new(self.width));
                let n = self.nodes.len() - 1;
                self.nodes[node].next[s as usize] = n as u32;
                n
            } else {
                slot as usize
            };
        }
        if let Some(old) = self.nodes[node].rule.replace(id as u32) {
            self.rules[old as usize] = None;
            self.live -= 1;
        }
        self.rules.push(Some(rule));
        self.live += 1;
        id
    }

    pub fn remove(&mut self, id: usize) -> Option<RewriteRule> {
        let rule = self.rules.get_mut(id)?.take()?;
        let mut node = 0usize;
        for &s in rule.lhs.letters() {
            node = self.nodes[node].next[s as usize] as usize;
        }
        if self.nodes[node].rule == Some(id as u32) {
            self.nodes[node].rule = None;
        }
        self.live -= 1;
        Some(rule)
    }

    pub fn get(&self, id: usize) -> Option<&RewriteRule> {
        self.rules.get(id)?.as_ref()
    }

    /// Leftmost occurrence of any lhs in `letters`; at that position the
    /// longest (hence largest) lhs wins. Returns `(position, rule id)`.
    pub fn find_match(&self, letters: &[Sym]) -> Option<(usize, usize)> {
        if self.live == 0 {
            return None;
        }
        if let Some(r) = self.nodes[0].rule {
            return Some((0, r as usize));
        }
        for start in 0..letters.len() {
            let mut node = 0usize;
            let mut best = None;
            for &s in &letters[start..] {
                let next = self.nodes[node].next[s as usize];
                if next == 0 {
                    break;
                }
                node = next as usize;
                if let Some(r) = self.nodes[node].rule {
                    best = Some(r as usize);
                }
            }
            if let Some(r) = best {
                return Some((start, r));
            }
        }
        None
    }

    /// Whether some lhs occurs in `letters`.
    pub fn matches(&self, letters: &[Sym]) -> bool {
        self.find_match(letters).is_some()
    }

    /// Ids of rules whose lhs contains `pat` as a subword.
    pub fn ids_containing(&self, pat: &Word) -> Vec<usize> {
        self.rules
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_ref().filter(|r| r.lhs.contains(pat)).map(|_| i))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderKind;
    use crate::parse::parse_polynomial;

    #[test]
    fn rules_from_examples() {
        let o = MonomialOrder::from_spec(OrderKind::GradedLex, "x3<x2<x1", &[]).unwrap();
        let r = poly_to_rule(&parse_polynomial("x1 - x2*x3 + x1*x1", &o).unwrap()).unwrap();
        assert_eq!(r.lhs.display(o.alphabet()).to_string(), "x1*x1");
        assert_eq!(r.rhs.to_string(), "x2*x3 - x1");

        let r = poly_to_rule(&parse_polynomial("x1*x2 + 3", &o).unwrap()).unwrap();
        assert_eq!(r.lhs.display(o.alphabet()).to_string(), "x1*x2");
        assert_eq!(r.rhs.to_string(), "-3");

        let r = poly_to_rule(&parse_polynomial("5*x1", &o).unwrap()).unwrap();
        assert!(r.rhs.is_zero());
        assert_eq!(r.to_polynomial().to_string(), "x1");

        assert!(poly_to_rule(&Polynomial::zero(&o)).is_err());
    }

    #[test]
    fn trie_prefers_leftmost_then_longest() {
        let o = MonomialOrder::from_spec(OrderKind::GradedLex, "a<b<c", &[]).unwrap();
        let p = |s| parse_polynomial(s, &o).unwrap();
        let mut set = RuleSet::new(&o);
        let ab = set.insert(poly_to_rule(&p("a*b")).unwrap());
        let abc = set.insert(poly_to_rule(&p("a*b*c")).unwrap());
        let bc = set.insert(poly_to_rule(&p("b*c")).unwrap());
        let w = |s: &str| parse_polynomial(s, &o).unwrap().lead_word().unwrap().clone();
        assert_eq!(set.find_match(w("c*a*b*c").letters()), Some((1, abc)));
        assert_eq!(set.find_match(w("c*b*c*a*b").letters()), Some((1, bc)));
        assert_eq!(set.find_match(w("c*c").letters()), None);
        set.remove(abc);
        assert_eq!(set.find_match(w("a*b*c").letters()), Some((0, ab)));
        assert_eq!(set.len(), 2);
    }
}
