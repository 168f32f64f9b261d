//! Strategies, oracles and property checks shared by the integration
//! targets.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use ncgb::groebner::{make_partial_gb, reduce, reduce_steps, PartialBasis, RuleSet};
use ncgb::numeric::{eval_with_scale, harvest, normalized, BlockAssignment, Matrix};
use ncgb::{MonomialOrder, OrderKind, Polynomial, Rational, Word};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const CASES: u32 = 500;

/// Reduced-term tolerance for numeric evaluation of rewrites.
pub const EVAL_TOL: f64 = 1e-7;

pub fn letters(n: u16, max_len: usize) -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(0..n, 0..=max_len)
}

pub fn coeff() -> impl Strategy<Value = i64> {
    prop_oneof![-3i64..=-1, 1i64..=3]
}

/// Sum of up to `max_terms` terms with small integer coefficients.
pub fn poly(order: Arc<MonomialOrder>, max_terms: usize, max_len: usize) -> impl Strategy<Value = Polynomial> {
    let n = order.alphabet().len() as u16;
    prop::collection::vec((coeff(), letters(n, max_len)), 1..=max_terms).prop_map(move |ts| {
        Polynomial::from_terms(&order, ts.into_iter().map(|(c, w)| (Rational::from(c), Word::from(w)))).unwrap()
    })
}

pub fn order(kind: OrderKind, n: usize) -> Arc<MonomialOrder> {
    let spec: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    MonomialOrder::from_spec(kind, &spec.join("<"), &[]).unwrap()
}

/// Orders on up to four letters in every kind, with one or two groups.
pub fn any_order() -> impl Strategy<Value = Arc<MonomialOrder>> {
    (prop_oneof![Just(OrderKind::Lex), Just(OrderKind::GradedLex), Just(OrderKind::MultiGradedLex)], 1usize..=4, any::<bool>())
        .prop_map(|(kind, n, split)| {
            let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            let spec = if split && n > 1 {
                format!("{}<<{}", names[..n / 2].join("<"), names[n / 2..].join("<"))
            } else {
                names.join("<")
            };
            MonomialOrder::from_spec(kind, &spec, &[]).unwrap()
        })
}

// ---------------------------------------------------------------------------
// Bounded-degree ideal membership over F_p

pub const PRIME: u64 = 2_147_483_647;

fn modp_int(n: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let r = ((n % &p) + &p) % &p;
    r.to_u64().unwrap()
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    pow(a, PRIME - 2)
}

/// `None` when the denominator vanishes mod p.
pub fn modp(c: &Rational) -> Option<u64> {
    let d = modp_int(&c.denom());
    if d.is_zero() {
        return None;
    }
    Some(modp_int(&c.numer()) * inv(d) % PRIME)
}

type Row = BTreeMap<usize, u64>;

/// Echelon span of `{l·g·r : |l| + deg g + |r| ≤ D}` mod p.
pub struct TruncatedIdeal {
    n: u16,
    degree: usize,
    columns: HashMap<Vec<u16>, usize>,
    pivots: HashMap<usize, Row>,
}

fn all_words(n: u16, len: usize) -> Vec<Vec<u16>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w| (0..n).map(move |s| [w.clone(), vec![s]].concat())).collect();
    }
    out
}

impl TruncatedIdeal {
    pub fn new(gens: &[Polynomial], n: u16, degree: usize) -> Option<Self> {
        let mut t = TruncatedIdeal { n, degree, columns: HashMap::new(), pivots: HashMap::new() };
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let free = degree.checked_sub(g.degree());
            let Some(free) = free else { continue };
            for total in 0..=free {
                for left in 0..=total {
                    for l in all_words(n, left) {
                        for r in all_words(n, total - left) {
                            let row = t.row(g, &l, &r)?;
                            t.insert(row);
                        }
                    }
                }
            }
        }
        Some(t)
    }

    fn column(&mut self, w: Vec<u16>) -> usize {
        let next = self.columns.len();
        *self.columns.entry(w).or_insert(next)
    }

    fn row(&mut self, p: &Polynomial, l: &[u16], r: &[u16]) -> Option<Row> {
        let mut row = Row::new();
        for t in p.terms() {
            let w = [l, t.word.letters(), r].concat();
            let c = modp(&t.coeff)?;
            let col = self.column(w);
            let e = row.entry(col).or_insert(0);
            *e = (*e + c) % PRIME;
        }
        row.retain(|_, v| *v != 0);
        Some(row)
    }

    fn eliminate(&self, mut row: Row) -> Row {
        loop {
            let hit = row.iter().find(|(c, _)| self.pivots.contains_key(c)).map(|(&c, &v)| (c, v));
            let Some((col, v)) = hit else { return row };
            for (&c, &pv) in &self.pivots[&col] {
                let e = row.entry(c).or_insert(0);
                *e = (*e + PRIME - v * pv % PRIME) % PRIME;
            }
            row.retain(|_, x| *x != 0);
        }
    }

    fn insert(&mut self, row: Row) {
        let row = self.eliminate(row);
        if let Some((&col, &v)) = row.iter().next() {
            let s = inv(v);
            let normalized: Row = row.into_iter().map(|(c, x)| (c, x * s % PRIME)).collect();
            self.pivots.insert(col, normalized);
        }
    }

    /// `None` when `p` is too long or cannot be reduced mod p.
    pub fn contains(&mut self, p: &Polynomial) -> Option<bool> {
        if p.degree() > self.degree {
            return None;
        }
        let row = self.row(p, &[], &[])?;
        Some(self.eliminate(row).is_empty())
    }

    pub fn letters(&self) -> u16 {
        self.n
    }
}

/// Every basis element and every polynomial the basis certifies must lie in
/// the ideal. Membership is read off the degree-4 span of the generators,
/// widened to degree 6 when the first look fails, since derivations chain
/// certificates of growing degree.
pub fn check_gb_soundness(order: &Arc<MonomialOrder>, gens: &[Polynomial], probes: &[Polynomial]) -> Result<(), TestCaseError> {
    let n = order.alphabet().len() as u16;
    let basis = make_partial_gb(gens, order, 1).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let Some(mut narrow) = TruncatedIdeal::new(gens, n, 4) else { return Ok(()) };
    let mut wide: Option<Option<TruncatedIdeal>> = None;
    let mut member = |p: &Polynomial| -> Option<bool> {
        match narrow.contains(p)? {
            true => Some(true),
            false => wide.get_or_insert_with(|| TruncatedIdeal::new(gens, n, 6)).as_mut()?.contains(p),
        }
    };
    if member(&Polynomial::one(order)) == Some(true) {
        return Ok(());
    }
    for b in basis.polys() {
        if let Some(m) = member(b) {
            prop_assert!(m, "basis element {} is not in the ideal", b);
        }
    }
    for p in probes.iter().filter(|p| basis.certifies(p)) {
        if let Some(m) = member(p) {
            prop_assert!(m, "certified {} is not in the ideal", p);
        }
    }
    Ok(())
}

/// Probes that the basis is likely to certify: combinations of the
/// generators themselves.
pub fn combinations(gens: &[Polynomial], picks: &[(usize, i64)]) -> Polynomial {
    let order = gens[0].order().clone();
    let mut acc = Polynomial::zero(&order);
    for &(i, c) in picks {
        acc = &acc + &gens[i % gens.len()].scale(&Rational::from(c));
    }
    acc
}

// ---------------------------------------------------------------------------
// Reduction against the sample problem, evaluated numerically

pub struct NumericFixture {
    pub order: Arc<MonomialOrder>,
    pub rules: RuleSet,
    pub basis: PartialBasis,
    pub points: Vec<(BlockAssignment, BTreeMap<String, Matrix>)>,
}

pub fn sample_fixture() -> &'static NumericFixture {
    static FIX: OnceLock<NumericFixture> = OnceLock::new();
    FIX.get_or_init(|| {
        let order = ncgb::fixtures::sample_order(OrderKind::MultiGradedLex);
        let rel = ncgb::fixtures::sample_relations(&order);
        let basis = make_partial_gb(&rel.all(), &order, 2).unwrap();
        let rules = basis.rules().clone();
        let points = (0..4)
            .map(|seed| {
                let h = harvest(&rel.matrices, 2, seed).unwrap();
                (h.knowns, h.unknowns)
            })
            .collect();
        NumericFixture { order, rules, basis, points }
    })
}

/// Reduction terminates in a normal form whose value matches the input on
/// every point satisfying the relations.
pub fn check_reduce_preserves_class(p: &Polynomial) -> Result<(), TestCaseError> {
    let fix = sample_fixture();
    let r = reduce_steps(p, &fix.rules, 1_000_000);
    prop_assert!(r.complete, "reduction did not finish");
    for t in r.result.terms() {
        prop_assert!(!fix.rules.matches(t.word.letters()), "{} is not normal", r.result);
    }
    prop_assert_eq!(&reduce(p, &fix.rules), &r.result);
    for (knowns, unknowns) in &fix.points {
        let (a, sa) = eval_with_scale(p, knowns, unknowns).unwrap();
        let (b, sb) = eval_with_scale(&r.result, knowns, unknowns).unwrap();
        let res = normalized(&(a - b), sa.max(sb));
        prop_assert!(res <= EVAL_TOL, "residual {res:e} for {p}");
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Orders

pub fn check_order_total(order: &MonomialOrder, a: &Word, b: &Word, c: &Word) -> Result<(), TestCaseError> {
    use std::cmp::Ordering::*;
    let ab = order.cmp_words(a, b);
    prop_assert_eq!(ab, order.cmp_words(b, a).reverse());
    prop_assert_eq!(ab == Equal, a == b);
    if ab != Greater && order.cmp_words(b, c) != Greater {
        prop_assert_ne!(order.cmp_words(a, c), Greater);
    }
    Ok(())
}

pub fn check_order_multiplicative(order: &MonomialOrder, a: &Word, b: &Word, l: &Word, r: &Word) -> Result<(), TestCaseError> {
    if order.is_multiplicative() {
        let lar = l.concat(a).concat(r);
        let lbr = l.concat(b).concat(r);
        prop_assert_eq!(order.cmp_words(a, b), order.cmp_words(&lar, &lbr));
    }
    Ok(())
}

pub fn check_lead_of_product(p: &Polynomial, q: &Polynomial) -> Result<(), TestCaseError> {
    if p.order().is_multiplicative() {
        let pq = p * q;
        prop_assert_eq!(pq.lead_word().unwrap(), &p.lead_word().unwrap().concat(q.lead_word().unwrap()));
    }
    Ok(())
}
