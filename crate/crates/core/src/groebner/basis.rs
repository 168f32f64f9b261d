use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering as AtomicOrdering};
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::alphabet::Sym;
use crate::error::{AlgebraError, Result};
use crate::order::{MonomialOrder, SortKey};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::word::Word;

use super::reduce::{reduce, reduce_combination, reduce_tail};
use super::rules::{poly_to_rule, RuleSet};

/// Limits for [`make_partial_gb_with`].
#[derive(Clone, Debug)]
pub struct GbOptions {
    pub iterations: usize,
    /// Longest lead word kept; `None` means three times the longest
    /// generator word.
    pub max_degree: Option<usize>,
    pub max_polys: Option<usize>,
    /// Total terms the new S-polynomials of one iteration may hold.
    pub max_terms: Option<usize>,
    pub deadline: Option<Instant>,
    pub parallel: bool,
}

impl GbOptions {
    pub fn new(iterations: usize) -> Self {
        GbOptions { iterations, max_degree: None, max_polys: None, max_terms: None, deadline: None, parallel: true }
    }

    pub fn max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn max_polys(mut self, n: usize) -> Self {
        self.max_polys = Some(n);
        self
    }

    pub fn max_terms(mut self, n: usize) -> Self {
        self.max_terms = Some(n);
        self
    }

    pub fn deadline(mut self, at: Instant) -> Self {
        self.deadline = Some(at);
        self
    }

    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }
}

/// An ambiguity `l1·lead(p_i)·r1 = l2·lead(p_j)·r2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Obstruction {
    pub i: usize,
    pub j: usize,
    pub l1: Word,
    pub r1: Word,
    pub l2: Word,
    pub r2: Word,
}

impl Obstruction {
    /// The common word both sides produce.
    pub fn word(&self, leads: &[&Word]) -> Word {
        leads[self.i].sandwich(self.l1.letters(), self.r1.letters())
    }
}

/// Proper overlaps of `lead(p_i)` followed by `lead(p_j)` and containments
/// of `lead(p_j)` in `lead(p_i)`.
pub fn obstructions_between(i: usize, a: &Word, j: usize, b: &Word) -> Vec<Obstruction> {
    let (la, lb) = (a.letters(), b.letters());
    let mut out = Vec::new();
    for t in 1..la.len().min(lb.len()) {
        if la[la.len() - t..] == lb[..t] {
            out.push(Obstruction {
                i,
                j,
                l1: Word::empty(),
                r1: Word::from_letters(&lb[t..]),
                l2: Word::from_letters(&la[..la.len() - t]),
                r2: Word::empty(),
            });
        }
    }
    if i != j && lb.len() <= la.len() {
        for s in 0..=la.len() - lb.len() {
            if la[s..s + lb.len()] == *lb {
                out.push(Obstruction {
                    i,
                    j,
                    l1: Word::empty(),
                    r1: Word::empty(),
                    l2: Word::from_letters(&la[..s]),
                    r2: Word::from_letters(&la[s + lb.len()..]),
                });
            }
        }
    }
    out
}

/// A finite approximation to a Gröbner basis of the ideal its generators
/// span. Members are monic, interreduced and sorted by ascending lead word.
#[derive(Clone, Debug)]
pub struct PartialBasis {
    polys: Vec<Polynomial>,
    order: Arc<MonomialOrder>,
    iterations: usize,
    truncated: bool,
    aborted: bool,
    closed: bool,
    rules: RuleSet,
    earlier: Vec<RuleSet>,
}

impl PartialBasis {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn into_polys(self) -> Vec<Polynomial> {
        self.polys
    }

    pub fn order(&self) -> &Arc<MonomialOrder> {
        &self.order
    }

    /// Sweeps actually performed; smaller than requested when a sweep
    /// produced nothing new.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// Whether some reduced S-polynomial was dropped, by the degree cap or
    /// because a resource limit stopped the run. The basis still generates
    /// the ideal of its generators either way.
    pub fn truncated(&self) -> bool {
        self.truncated || self.aborted
    }

    /// Whether the deadline or polynomial budget stopped the run early.
    pub fn aborted(&self) -> bool {
        self.aborted
    }

    /// Whether the last sweep found every obstruction resolvable and
    /// nothing was truncated.
    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Normal form under the final rules.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        reduce(p, &self.rules)
    }

    /// Whether the rules of the final stage, or of any earlier stage,
    /// reduce `p` to zero. Partial bases need not be confluent, so a
    /// later stage can miss a reduction an earlier one found.
    pub fn certifies(&self, p: &Polynomial) -> bool {
        std::iter::once(&self.rules).chain(self.earlier.iter().rev()).any(|r| reduce(p, r).is_zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Yes,
    Unknown,
}

/// `Yes` when some stage of the basis reduces `p` to zero; a partial basis
/// cannot certify the converse.
pub fn is_member(p: &Polynomial, basis: &PartialBasis) -> Membership {
    if basis.certifies(p) {
        Membership::Yes
    } else {
        Membership::Unknown
    }
}

/// The basis members whose letters all lie in `allowed`.
pub fn extract_subalgebra(basis: &PartialBasis, allowed: &BTreeSet<Sym>) -> Vec<Polynomial> {
    basis
        .polys
        .iter()
        .filter(|p| p.terms().iter().all(|t| t.word.letters().iter().all(|s| allowed.contains(s))))
        .cloned()
        .collect()
}

/// Default degree cap for a generator list.
pub fn default_max_degree(gens: &[Polynomial]) -> usize {
    3 * gens.iter().map(Polynomial::degree).max().unwrap_or(0)
}

/// `k` iteration partial Gröbner basis with default limits.
pub fn make_partial_gb(gens: &[Polynomial], order: &Arc<MonomialOrder>, k: usize) -> Result<PartialBasis> {
    make_partial_gb_with(gens, order, &GbOptions::new(k))
}

pub fn make_partial_gb_with(gens: &[Polynomial], order: &Arc<MonomialOrder>, opts: &GbOptions) -> Result<PartialBasis> {
    if !order.is_multiplicative() {
        return Err(AlgebraError::InvalidOrder(format!("{} is not admissible for completion", order.kind())));
    }
    let gens = gens.iter().map(|g| g.with_order(order)).collect::<Result<Vec<_>>>()?;
    let cap = opts.max_degree.unwrap_or_else(|| default_max_degree(&gens));
    let mut truncated = false;
    let mut aborted = false;
    let mut basis = interreduce_polys(order, gens);
    let mut fresh = vec![true; basis.len()];
    let mut done = 0;
    let mut closed = false;
    let mut earlier = Vec::new();

    while done < opts.iterations {
        if past(opts.deadline) || opts.max_polys.is_some_and(|m| basis.len() > m) {
            aborted = true;
            break;
        }
        let leads: Vec<&Word> = basis.iter().map(|p| p.lead_word().expect("nonzero")).collect();
        let mut obs = Vec::new();
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if !(fresh[i] || fresh[j]) {
                    continue;
                }
                obs.extend(obstructions_between(i, leads[i], j, leads[j]));
            }
        }
        let rules = RuleSet::from_polys(order, &basis);
        let timed_out = AtomicBool::new(false);
        let terms = AtomicUsize::new(0);
        let spoly = |o: &Obstruction| -> Option<Polynomial> {
            if timed_out.load(AtomicOrdering::Relaxed) {
                return None;
            }
            if past(opts.deadline) {
                timed_out.store(true, AtomicOrdering::Relaxed);
                return None;
            }
            let neg = -Rational::ONE;
            let parts = [
                (&Rational::ONE, o.l1.letters(), &basis[o.i], o.r1.letters()),
                (&neg, o.l2.letters(), &basis[o.j], o.r2.letters()),
            ];
            let r = reduce_combination(order, &parts, &rules);
            if let Some(limit) = opts.max_terms {
                if terms.fetch_add(r.len(), AtomicOrdering::Relaxed) + r.len() > limit {
                    timed_out.store(true, AtomicOrdering::Relaxed);
                    return None;
                }
            }
            (!r.is_zero()).then(|| r.monic())
        };
        let found: Vec<Option<Polynomial>> =
            if opts.parallel { obs.par_iter().map(spoly).collect() } else { obs.iter().map(spoly).collect() };
        if timed_out.into_inner() {
            aborted = true;
            break;
        }
        done += 1;

        let mut seen: HashSet<Polynomial> = basis.iter().cloned().collect();
        let mut new: Vec<Polynomial> = Vec::new();
        for p in found.into_iter().flatten() {
            if p.lead_word().is_some_and(|w| w.len() > cap) {
                truncated = true;
            } else if seen.insert(p.clone()) {
                new.push(p);
            }
        }
        if new.is_empty() {
            closed = !truncated;
            break;
        }
        new.sort_by(|a, b| order.cmp_words(a.lead_word().unwrap(), b.lead_word().unwrap()));
        let old: HashSet<Polynomial> = basis.iter().cloned().collect();
        earlier.push(rules);
        let mut all = basis;
        all.append(&mut new);
        basis = interreduce_polys(order, all);
        fresh = basis.iter().map(|p| !old.contains(p)).collect();
    }
    let rules = RuleSet::from_polys(order, &basis);
    Ok(PartialBasis { polys: basis, order: order.clone(), iterations: done, truncated, aborted, closed, rules, earlier })
}

fn past(deadline: Option<Instant>) -> bool {
    deadline.is_some_and(|d| Instant::now() >= d)
}

/// Monic, interreduced form of `polys`: no lead word contains another, and
/// no tail word contains any lead word. Sorted by ascending lead word.
pub fn interreduce_polys(order: &Arc<MonomialOrder>, polys: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut work: BTreeMap<(SortKey, usize), Polynomial> = BTreeMap::new();
    let mut seq = 0usize;
    let mut push = |work: &mut BTreeMap<(SortKey, usize), Polynomial>, p: Polynomial| {
        if let Some(w) = p.lead_word() {
            work.insert((order.sort_key(w), seq), p);
            seq += 1;
        }
    };
    for p in polys {
        push(&mut work, p);
    }
    let mut kept = RuleSet::new(order);
    let mut kept_polys: BTreeMap<usize, Polynomial> = BTreeMap::new();
    while let Some((_, p)) = work.pop_first() {
        let r = reduce(&p, &kept);
        let Some(lead) = r.lead_word() else { continue };
        let r = r.monic();
        for id in kept.ids_containing(lead) {
            kept.remove(id);
            let q = kept_polys.remove(&id).expect("kept rule has a polynomial");
            push(&mut work, q);
        }
        let id = kept.insert(poly_to_rule(&r).expect("nonzero"));
        kept_polys.insert(id, r);
    }
    let mut out: Vec<Polynomial> = kept_polys.into_values().map(|p| reduce_tail(&p, &kept)).collect();
    out.sort_by(|a, b| order.cmp_words(a.lead_word().unwrap(), b.lead_word().unwrap()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderKind;
    use crate::parse::parse_polynomial;

    fn order() -> Arc<MonomialOrder> {
        MonomialOrder::from_spec(OrderKind::GradedLex, "x<k1<u1", &["k1"]).unwrap()
    }

    fn polys(o: &Arc<MonomialOrder>, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, o).unwrap()).collect()
    }

    #[test]
    fn inverse_pair() {
        let o = order();
        let gens = polys(&o, &["k1*Inv[k1] - 1", "Inv[k1]*k1 - 1"]);
        let gb = make_partial_gb(&gens, &o, 2).unwrap();
        for g in &gens {
            assert!(gb.polys().contains(g));
        }
        let p = parse_polynomial("k1*Inv[k1]*k1 - k1", &o).unwrap();
        assert_eq!(is_member(&p, &gb), Membership::Yes);
        let p = parse_polynomial("k1*Inv[k1]*k1*Inv[k1] - 1", &o).unwrap();
        assert_eq!(is_member(&p, &gb), Membership::Yes);
        assert_eq!(is_member(&Polynomial::zero(&o), &gb), Membership::Yes);
        assert_eq!(is_member(&Polynomial::var(&o, o.alphabet().lookup("u1").unwrap()), &gb), Membership::Unknown);
        assert!(gb.closed());
    }

    #[test]
    fn idempotent_self_overlap() {
        let o = order();
        let gens = polys(&o, &["x*x - x"]);
        let gb = make_partial_gb(&gens, &o, 1).unwrap();
        assert_eq!(gb.polys(), &gens[..]);
        assert!(!gb.truncated());
    }

    #[test]
    fn empty_generators() {
        let o = order();
        let gb = make_partial_gb(&[], &o, 3).unwrap();
        assert!(gb.is_empty());
    }

    #[test]
    fn extraction_filters_by_letters() {
        let o = MonomialOrder::from_spec(OrderKind::MultiGradedLex, "k1<k2<<u1", &[]).unwrap();
        let gens = polys(&o, &["k1*k2 - 1", "k1*u1 - k2"]);
        let gb = make_partial_gb(&gens, &o, 0).unwrap();
        let allowed: BTreeSet<Sym> = ["k1", "k2"].iter().map(|n| o.alphabet().lookup(n).unwrap()).collect();
        assert_eq!(extract_subalgebra(&gb, &allowed), polys(&o, &["k1*k2 - 1"]));
        let allowed: BTreeSet<Sym> = [o.alphabet().lookup("u1").unwrap()].into();
        assert!(extract_subalgebra(&gb, &allowed).is_empty());
    }

    #[test]
    fn interreduction_removes_redundant_leads() {
        let o = order();
        let gens = polys(&o, &["x*x*k1 - 1", "x*x - x", "2*x*k1 - 2"]);
        let out = interreduce_polys(&o, gens);
        assert_eq!(out, polys(&o, &["x*x - x", "x*k1 - 1"]));
    }

    #[test]
    fn overlaps_and_containments() {
        let a = Word::from_letters(&[0, 1, 0]);
        let b = Word::from_letters(&[1, 0]);
        let leads = [&a, &b];
        let mut obs = obstructions_between(0, &a, 1, &b);
        assert_eq!(obs.len(), 1);
        obs.extend(obstructions_between(1, &b, 0, &a));
        assert_eq!(obs.len(), 2);
        for o in &obs {
            assert_eq!(o.word(&leads), leads[o.j].sandwich(o.l2.letters(), o.r2.letters()));
        }
        let self_obs = obstructions_between(0, &a, 0, &a);
        assert_eq!(self_obs.len(), 1);
        assert_eq!(self_obs[0].word(&[&a]).letters(), &[0, 1, 0, 1, 0]);
    }

    #[test]
    fn lex_is_rejected() {
        let o = order().with_kind(OrderKind::Lex);
        assert!(make_partial_gb(&[], &o, 1).is_err());
    }
}
