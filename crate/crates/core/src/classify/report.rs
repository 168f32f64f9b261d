use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::alphabet::Sym;
use crate::completion::Configuration;
use crate::groebner::{make_partial_gb_with, GbOptions, PartialBasis};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

/// Solution forms, worst first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerdictKind {
    Unclassified,
    FormallyBacksolvableWeak,
    EssentiallyDecoupledWeak,
    FormallyDecoupledWeak,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Unclassified => "unclassified",
            VerdictKind::FormallyBacksolvableWeak => "formally-backsolvable-weak",
            VerdictKind::EssentiallyDecoupledWeak => "essentially-decoupled-weak",
            VerdictKind::FormallyDecoupledWeak => "formally-decoupled-weak",
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for VerdictKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [
            VerdictKind::Unclassified,
            VerdictKind::FormallyBacksolvableWeak,
            VerdictKind::EssentiallyDecoupledWeak,
            VerdictKind::FormallyDecoupledWeak,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
        .ok_or_else(|| format!("unknown verdict `{s}`"))
    }
}

/// Outcome of the compatibility nondegeneracy check at level `ell`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Nondegeneracy {
    pub ell: usize,
    pub holds: bool,
    pub truncated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub compat: Option<Nondegeneracy>,
    pub truncated_basis: bool,
}

impl Verdict {
    pub fn at_least(&self, kind: VerdictKind) -> bool {
        self.kind >= kind
    }
}

/// A basis split into the parts of a decoupled or triangular answer.
#[derive(Clone, Debug)]
pub struct SolutionReport {
    pub order: Arc<MonomialOrder>,
    pub configuration: Option<Configuration>,
    pub iterations: usize,
    pub strongly_undetermined: bool,
    /// Equations in knowns only.
    pub compatibility_knowns: Vec<Polynomial>,
    /// Equations each involving exactly one unknown, keyed by it.
    pub one_unknown: BTreeMap<Sym, Vec<Polynomial>>,
    /// `u − g` with `u` a bare lead letter occurring nowhere else.
    pub singletons: BTreeMap<Sym, Polynomial>,
    pub residue: Vec<Polynomial>,
    pub verdict: Verdict,
    /// Unknowns in backsolving order.
    pub sigma: Vec<Sym>,
    /// Singleton unknowns in evaluation order.
    pub tau: Vec<Sym>,
}

impl SolutionReport {
    pub fn len(&self) -> usize {
        self.compatibility_knowns.len()
            + self.one_unknown.values().map(Vec::len).sum::<usize>()
            + self.singletons.len()
            + self.residue.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every polynomial of the report that contains an unknown.
    pub fn unknown_polys(&self) -> impl Iterator<Item = &Polynomial> {
        self.one_unknown.values().flatten().chain(self.singletons.values()).chain(&self.residue)
    }

    pub fn all_polys(&self) -> impl Iterator<Item = &Polynomial> {
        self.compatibility_knowns.iter().chain(self.unknown_polys())
    }

    pub fn name(&self, s: Sym) -> &str {
        self.order.alphabet().name(s)
    }
}

/// The unknown in `p` when `p` has the shape `u − g` with `u` a bare lead
/// letter that appears nowhere else in `p`.
pub fn singleton_unknown(p: &Polynomial) -> Option<Sym> {
    let alpha = p.order().alphabet();
    let lead = p.lead_word()?;
    let &[u] = lead.letters() else { return None };
    if !alpha.is_unknown(u) {
        return None;
    }
    let occurrences: usize = p.terms().iter().map(|t| t.word.letters().iter().filter(|&&s| s == u).count()).sum();
    (occurrences == 1).then_some(u)
}

/// Splits `polys` into compatibility conditions, equations in one unknown,
/// singletons and residue, then classifies the result.
pub fn split_polys(order: &Arc<MonomialOrder>, polys: &[Polynomial]) -> SolutionReport {
    let mut compat = Vec::new();
    let mut candidates: Vec<(Sym, &Polynomial)> = Vec::new();
    let mut rest: Vec<&Polynomial> = Vec::new();
    let mut single: BTreeMap<Sym, Vec<Polynomial>> = BTreeMap::new();
    for p in polys.iter().filter(|p| !p.is_zero()) {
        let unknowns = p.unknowns();
        if unknowns.is_empty() {
            compat.push(p.clone());
        } else if let Some(u) = singleton_unknown(p) {
            candidates.push((u, p));
        } else {
            rest.push(p);
        }
    }
    for p in &rest {
        let unknowns = p.unknowns();
        if unknowns.len() == 1 {
            single.entry(*unknowns.first().unwrap()).or_default().push((*p).clone());
        }
    }
    let mut residue: Vec<Polynomial> = rest.iter().filter(|p| p.unknowns().len() > 1).map(|p| (*p).clone()).collect();
    let mut singletons = BTreeMap::new();
    for (u, p) in candidates {
        if single.contains_key(&u) || singletons.contains_key(&u) {
            if p.unknowns().len() == 1 {
                single.entry(u).or_default().push(p.clone());
            } else {
                residue.push(p.clone());
            }
        } else {
            singletons.insert(u, p.clone());
        }
    }
    let mut report = SolutionReport {
        order: order.clone(),
        configuration: None,
        iterations: 0,
        strongly_undetermined: false,
        compatibility_knowns: compat,
        one_unknown: single,
        singletons,
        residue,
        verdict: Verdict { kind: VerdictKind::Unclassified, compat: None, truncated_basis: false },
        sigma: Vec::new(),
        tau: Vec::new(),
    };
    classify(&mut report);
    report
}

/// [`split_polys`] over a partial basis, recording its truncation flag.
pub fn split_report(basis: &PartialBasis) -> SolutionReport {
    let mut report = split_polys(basis.order(), basis.polys());
    report.iterations = basis.iterations();
    report.verdict.truncated_basis = basis.truncated();
    report
}

/// Decides the verdict and fills `sigma` and `tau`.
pub fn classify(report: &mut SolutionReport) {
    let unknowns: BTreeSet<Sym> = report.order.alphabet().unknowns().collect();
    let determined: BTreeSet<Sym> = report.one_unknown.keys().copied().collect();

    let mut resolved = determined.clone();
    let mut tau = Vec::new();
    let mut pending: Vec<(Sym, BTreeSet<Sym>)> = report
        .singletons
        .iter()
        .map(|(&u, p)| (u, p.unknowns().into_iter().filter(|&s| s != u).collect()))
        .collect();
    while let Some(i) = pending.iter().position(|(_, deps)| deps.is_subset(&resolved)) {
        let (u, _) = pending.remove(i);
        resolved.insert(u);
        tau.push(u);
    }
    let decoupled = pending.is_empty() && unknowns.is_subset(&resolved);

    let (kind, sigma) = if decoupled {
        let sigma: Vec<Sym> = determined.iter().copied().chain(tau.iter().copied()).collect();
        let kind =
            if report.residue.is_empty() { VerdictKind::FormallyDecoupledWeak } else { VerdictKind::EssentiallyDecoupledWeak };
        (kind, sigma)
    } else {
        match backsolve_order(report.unknown_polys(), &unknowns) {
            Some(sigma) => (VerdictKind::FormallyBacksolvableWeak, sigma),
            None => (VerdictKind::Unclassified, Vec::new()),
        }
    };
    report.verdict.kind = kind;
    report.sigma = sigma;
    report.tau = if decoupled { tau } else { Vec::new() };
}

/// Greedy triangular ordering: repeatedly place an unknown that, together
/// with the unknowns already placed, covers every unknown of some
/// polynomial containing it.
pub fn backsolve_order<'a>(
    polys: impl IntoIterator<Item = &'a Polynomial>,
    unknowns: &BTreeSet<Sym>,
) -> Option<Vec<Sym>> {
    let sets: Vec<BTreeSet<Sym>> = polys.into_iter().map(Polynomial::unknowns).filter(|s| !s.is_empty()).collect();
    let mut placed = BTreeSet::new();
    let mut sigma = Vec::new();
    while placed.len() < unknowns.len() {
        let next = unknowns.iter().copied().filter(|u| !placed.contains(u)).find(|&u| {
            sets.iter().any(|s| s.contains(&u) && s.iter().all(|v| *v == u || placed.contains(v)))
        })?;
        placed.insert(next);
        sigma.push(next);
    }
    Some(sigma)
}

/// Builds an `ell` iteration partial basis from the compatibility
/// conditions alone and checks that it reduces no equation involving an
/// unknown to zero.
pub fn check_compat_l_nondegenerate(report: &SolutionReport, ell: usize) -> Nondegeneracy {
    check_compat_l_nondegenerate_with(report, &GbOptions::new(ell))
}

/// Default degree cap for the nondegeneracy basis: the longest
/// compatibility condition or the longest run of known letters inside an
/// equation with unknowns, whichever is larger. Rules on knowns only match
/// inside such runs, and graded orders never lengthen them.
pub fn nondegeneracy_degree(report: &SolutionReport) -> usize {
    let alpha = report.order.alphabet();
    let gens = report.compatibility_knowns.iter().map(Polynomial::degree).max().unwrap_or(0);
    let runs = report
        .unknown_polys()
        .flat_map(|p| p.terms())
        .flat_map(|t| t.word.letters().split(|&s| alpha.is_unknown(s)).map(<[Sym]>::len))
        .max()
        .unwrap_or(0);
    gens.max(runs)
}

pub fn check_compat_l_nondegenerate_with(report: &SolutionReport, opts: &GbOptions) -> Nondegeneracy {
    let ell = opts.iterations;
    if report.compatibility_knowns.is_empty() {
        return Nondegeneracy { ell, holds: true, truncated: false };
    }
    let mut opts = opts.clone();
    if opts.max_degree.is_none() {
        opts.max_degree = Some(nondegeneracy_degree(report));
    }
    let gb = make_partial_gb_with(&report.compatibility_knowns, &report.order, &opts)
        .expect("report order is admissible");
    let holds = !report.unknown_polys().any(|p| gb.certifies(p));
    Nondegeneracy { ell, holds, truncated: gb.truncated() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderKind;
    use crate::parse::parse_polynomial;

    fn order() -> Arc<MonomialOrder> {
        MonomialOrder::from_spec(OrderKind::MultiGradedLex, "k1<k2<<u1<<u2", &[]).unwrap()
    }

    fn polys(o: &Arc<MonomialOrder>, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, o).unwrap()).collect()
    }

    #[test]
    fn mixed_system_split() {
        let o = order();
        let sys = polys(
            &o,
            &["k1 + k2*k1", "k1*u1 + k2*k1*u1", "k1*k2 + k1*u2*k2*u2 + k1*u2", "k2*k2*u2 + u1*k2*k1"],
        );
        let r = split_polys(&o, &sys);
        let u1 = o.alphabet().lookup("u1").unwrap();
        let u2 = o.alphabet().lookup("u2").unwrap();
        assert_eq!(r.compatibility_knowns, sys[..1]);
        assert_eq!(r.one_unknown[&u1], sys[1..2]);
        assert_eq!(r.one_unknown[&u2], sys[2..3]);
        assert_eq!(r.residue, sys[3..]);
        assert!(r.singletons.is_empty());
        assert_eq!(r.len(), sys.len());
        assert_eq!(r.verdict.kind, VerdictKind::EssentiallyDecoupledWeak);

        assert!(!check_compat_l_nondegenerate(&r, 1).holds);
        let without = split_polys(&o, &[sys[0].clone(), sys[2].clone(), sys[3].clone()]);
        assert!(check_compat_l_nondegenerate(&without, 1).holds);
    }

    #[test]
    fn knowns_only() {
        let o = order();
        let r = split_polys(&o, &polys(&o, &["k1*k2 - 1", "k2 - k1"]));
        assert_eq!(r.compatibility_knowns.len(), 2);
        assert_eq!(r.verdict.kind, VerdictKind::Unclassified);
        assert!(check_compat_l_nondegenerate(&r, 3).holds);
    }

    #[test]
    fn no_unknowns_is_vacuously_decoupled() {
        let o = MonomialOrder::from_spec(OrderKind::GradedLex, "k1<k2", &[]).unwrap();
        let r = split_polys(&o, &polys(&o, &["k1*k2 - 1"]));
        assert_eq!(r.verdict.kind, VerdictKind::FormallyDecoupledWeak);
    }

    #[test]
    fn triangular_but_not_decoupled() {
        let o = order();
        let r = split_polys(&o, &polys(&o, &["u1*k1*u1 - k2", "u2*u1*u2 - u1 - k1"]));
        assert_eq!(r.verdict.kind, VerdictKind::FormallyBacksolvableWeak);
        let u1 = o.alphabet().lookup("u1").unwrap();
        let u2 = o.alphabet().lookup("u2").unwrap();
        assert_eq!(r.sigma, [u1, u2]);
        let r = split_polys(&o, &polys(&o, &["u2*u1*u2 - u1 - k1"]));
        assert_eq!(r.verdict.kind, VerdictKind::Unclassified);
    }

    #[test]
    fn singleton_shape() {
        let o = order();
        let p = polys(&o, &["u2 - k1*u1", "u2*k1 - 1", "u2 - u2*k1*u1"]);
        assert_eq!(singleton_unknown(&p[0]), o.alphabet().lookup("u2"));
        assert_eq!(singleton_unknown(&p[1]), None);
        assert_eq!(singleton_unknown(&p[2]), None);
    }
}
