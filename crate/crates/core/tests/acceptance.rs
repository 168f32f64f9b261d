//! Acceptance gate. Each test prints one line:
//! `[NN] PASS|FAIL <name>: <detail> (<seconds> s, budget <seconds> s)`.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use ncgb::classify::{analyze_configuration, AnalyzeOptions, VerdictKind};
use ncgb::completion::{
    enumerate_representatives, equivalence_class, inverse_relations, is_strongly_undetermined, Configuration,
};
use ncgb::fixtures::*;
use ncgb::groebner::{make_partial_gb, reduce, reduce_steps, small_basis, RuleSet};
use ncgb::numeric::{harvest, solve_theorem2, NumericError};
use ncgb::{parse_polynomial, MonomialOrder, OrderKind, Polynomial};
use proptest::test_runner::{Config, TestRunner};

/// Residual tolerance for numeric completions.
const NUMERIC_TOL: f64 = 1e-8;
/// Exact class count for 3×3 configurations with seven unknowns.
const CLASSES_3_7: usize = 988;

fn gate(id: u32, name: &str, budget: Duration, run: impl FnOnce() -> (bool, String)) {
    let start = Instant::now();
    let (ok, detail) = run();
    let took = start.elapsed();
    let ok = ok && took <= budget;
    let line = format!(
        "[{id:02}] {} {name}: {detail} ({:.2} s, budget {} s)\n",
        if ok { "PASS" } else { "FAIL" },
        took.as_secs_f64(),
        budget.as_secs()
    );
    // Straight to the handle so the line shows even when output is captured.
    std::io::stderr().write_all(line.as_bytes()).unwrap();
    assert!(ok, "criterion {id} failed: {detail}");
}

fn parse(o: &Arc<MonomialOrder>, s: &str) -> Polynomial {
    parse_polynomial(s, o).unwrap()
}

/// First iteration at which each target is certified, up to `max`.
fn certify(gens: &[Polynomial], order: &Arc<MonomialOrder>, targets: &[Polynomial], max: usize) -> Vec<Option<usize>> {
    let mut found = vec![None; targets.len()];
    for k in 1..=max {
        if found.iter().all(Option::is_some) {
            break;
        }
        let basis = make_partial_gb(gens, order, k).unwrap();
        for (slot, t) in found.iter_mut().zip(targets) {
            if slot.is_none() && basis.certifies(t) {
                *slot = Some(k);
            }
        }
    }
    found
}

fn summary(found: &[Option<usize>]) -> (bool, String) {
    let ok = found.iter().all(Option::is_some);
    let worst = found.iter().flatten().max().copied().unwrap_or(0);
    let failed = found.iter().filter(|f| f.is_none()).count();
    (ok, format!("{} of {} certified, last at iteration {worst}, {failed} failed", found.len() - failed, found.len()))
}

#[test]
fn c01_order_fixtures() {
    gate(1, "order fixtures", Duration::from_secs(1), || {
        let o = MonomialOrder::from_spec(OrderKind::MultiGradedLex, "x1<x2<x3<<x4", &[]).unwrap();
        let w = |s: &str| parse(&o, s).lead_word().unwrap().clone();
        let lt = |a: &str, b: &str| o.cmp_words(&w(a), &w(b)).is_lt();
        let o2 = MonomialOrder::from_spec(OrderKind::MultiGradedLex, "x3<x2<x1", &[]).unwrap();
        let lead = parse(&o2, "x1 - x2*x3 + x1*x1").lead_word().unwrap().display(o2.alphabet()).to_string();
        let ok = lt("x1*x2", "x2*x1") && lt("x3*x2*x1", "x4") && lt("x3", "x1*x2") && lead == "x1*x1";
        (ok, format!("three comparisons hold, lead term {lead}"))
    });
}

#[test]
fn c02_reduction_fixtures() {
    gate(2, "reduction fixtures", Duration::from_secs(1), || {
        let o = MonomialOrder::from_spec(OrderKind::GradedLex, "x3<x2<x1", &[]).unwrap();
        let rules = RuleSet::from_polys(&o, &[parse(&o, "x1*x1 - x2*x3 + x1"), parse(&o, "x2*x3*x1 - 4*x1")]);
        let mid = reduce_steps(&parse(&o, "x1*x1*x2*x1 + x2*x3*x1 + x2"), &rules, 2).result.to_string();
        let rules = RuleSet::from_polys(&o, &[parse(&o, "x1*x2 + 3")]);
        let nf = reduce(&parse(&o, "x2*x1*x2*x1 + x2"), &rules).to_string();
        let ok = mid == "x2*x3*x2*x1 - x1*x2*x1 + 4*x1 + x2" && nf == "-3*x2*x1 + x2";
        (ok, format!("after two steps `{mid}`, normal form `{nf}`"))
    });
}

#[test]
fn c03_small_basis_fixtures() {
    gate(3, "small basis fixtures", Duration::from_secs(10), || {
        let o = MonomialOrder::from_spec(OrderKind::GradedLex, "x", &[]).unwrap();
        let up: Vec<_> = ["1", "x", "x*x", "x*x*x"].iter().map(|s| parse(&o, s)).collect();
        let down: Vec<_> = up.iter().rev().cloned().collect();
        let a = small_basis(&up, &o, 2).unwrap();
        let b = small_basis(&down, &o, 2).unwrap();
        let ok = a == up[..1] && b == down;
        (ok, format!("{} kept from ascending, {} kept from descending", a.len(), b.len()))
    });
}

#[test]
fn c04_sample_equivalence() {
    gate(4, "sample problem equivalence", Duration::from_secs(300), || {
        let o = sample_order(OrderKind::MultiGradedLex);
        let rel = sample_relations(&o);
        let fwd = certify(&rel.all(), &o, &sample_answer(&o), 4);
        let g = sample_order(OrderKind::GradedLex);
        let rel_g = sample_relations(&g);
        let mut gens = sample_answer(&g);
        gens.extend(inverse_relations(&g, &rel_g.matrices.knowns()));
        let back = certify(&gens, &g, &rel_g.products, 6);
        let (a, da) = summary(&fwd);
        let (b, db) = summary(&back);
        (a && b, format!("forward: {da}; converse: {db}"))
    });
}

#[test]
fn c05_theorem2_forward() {
    gate(5, "central problem forward", Duration::from_secs(1800), || {
        let o = central_order(OrderKind::MultiGradedLex);
        summary(&certify(&central_relations(&o).all(), &o, &central_answer(&o), 4))
    });
}

#[test]
fn c06_theorem2_converse() {
    gate(6, "central problem converse", Duration::from_secs(3600), || {
        let o = central_order(OrderKind::GradedLex);
        let rel = central_relations(&o);
        let mut gens = central_answer(&o);
        gens.extend(inverse_relations(&o, &rel.matrices.knowns()));
        summary(&certify(&gens, &o, &rel.products, 10))
    });
}

#[test]
fn c07_classification_fixtures() {
    gate(7, "classification fixtures", Duration::from_secs(600), || {
        let opts = AnalyzeOptions::default();
        let sample = analyze_configuration(&sample_configuration(), &opts).unwrap();
        let su = analyze_configuration(&strongly_undetermined_configuration(), &opts).unwrap();
        let central = analyze_configuration(&central_configuration(), &opts).unwrap();
        let bad = analyze_configuration(&backsolvable_configuration(), &opts.clone().iterations(3)).unwrap();
        let central_compat = central.verdict.compat.is_some_and(|c| c.holds && c.ell == 3);
        let ok = sample.verdict.kind == VerdictKind::FormallyDecoupledWeak
            && su.strongly_undetermined
            && su.iterations == 0
            && central.verdict.at_least(VerdictKind::EssentiallyDecoupledWeak)
            && central_compat
            && bad.verdict.at_least(VerdictKind::FormallyBacksolvableWeak);
        let note = if bad.verdict.at_least(VerdictKind::EssentiallyDecoupledWeak) {
            " (better than the recorded expectation)"
        } else {
            ""
        };
        (
            ok,
            format!(
                "sample {}, strongly undetermined {} with no basis, central {} compat-3 {}, backsolvable case {}{note}",
                sample.verdict.kind, su.strongly_undetermined, central.verdict.kind, central_compat, bad.verdict.kind
            ),
        )
    });
}

/// Orbit count by Burnside's lemma, built from the action's definition.
fn burnside(n: usize, unknowns: usize) -> usize {
    let perms = |k: usize| -> Vec<Vec<usize>> {
        let mut out = vec![];
        let mut p: Vec<usize> = (0..k).collect();
        fn rec(i: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == p.len() {
                out.push(p.clone());
                return;
            }
            for j in i..p.len() {
                p.swap(i, j);
                rec(i + 1, p, out);
                p.swap(i, j);
            }
        }
        rec(0, &mut p, &mut out);
        out
    };
    let group: Vec<(Vec<usize>, Vec<usize>)> =
        perms(n).into_iter().flat_map(|pi| perms(n).into_iter().map(move |psi| (pi.clone(), psi))).collect();
    let len = 2 * n * n;
    let mut total = 0usize;
    for (pi, psi) in &group {
        let mut image = vec![0; len];
        for r in 0..n {
            for c in 0..n {
                image[r * n + c] = pi[r] * n + psi[c];
                image[n * n + r * n + c] = n * n + psi[r] * n + pi[c];
            }
        }
        let mut seen = vec![false; len];
        let mut poly = vec![0usize; len + 1];
        poly[0] = 1;
        for s in 0..len {
            if seen[s] {
                continue;
            }
            let mut l = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = image[x];
                l += 1;
            }
            for d in (l..=len).rev() {
                poly[d] += poly[d - l];
            }
        }
        total += poly[unknowns];
    }
    total / group.len()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn c08_enumeration() {
    gate(8, "configuration enumeration", Duration::from_secs(120), || {
        let reps: Vec<Configuration> = enumerate_representatives(3, 7).collect();
        let sizes: Vec<usize> = reps.iter().map(|c| equivalence_class(c).len()).collect();
        let mut union = BTreeSet::new();
        for c in &reps {
            union.extend(equivalence_class(c));
        }
        let total = binomial(18, 7);
        let ok = total == 31_824
            && sizes.iter().all(|&s| s <= 36)
            && sizes.iter().sum::<usize>() == total
            && union.len() == total
            && reps.len() == CLASSES_3_7
            && burnside(3, 7) == CLASSES_3_7;
        (ok, format!("{} configurations in {} classes, largest class {}", union.len(), reps.len(), sizes.iter().max().unwrap()))
    });
}

#[test]
fn c09_survey_sample() {
    gate(9, "survey sample", Duration::from_secs(7200), || {
        use rand::seq::index::sample;
        use rand::SeedableRng;
        let pool: Vec<Configuration> = enumerate_representatives(3, 7).filter(|c| !is_strongly_undetermined(c)).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20);
        let mut picks: Vec<usize> = sample(&mut rng, pool.len(), 20).into_vec();
        picks.sort_unstable();
        let opts = AnalyzeOptions::default();
        let mut bad = Vec::new();
        for &i in &picks {
            let r = analyze_configuration(&pool[i], &opts).unwrap();
            let compat = r.verdict.compat.is_some_and(|c| c.holds && c.ell == 3);
            if !(r.verdict.at_least(VerdictKind::FormallyBacksolvableWeak) && compat && r.iterations <= 3) {
                bad.push(format!("{} {}", pool[i], r.verdict.kind));
            }
        }
        (bad.is_empty(), format!("{} of 20 backsolvable or better with compat-3 {:?}", 20 - bad.len(), bad))
    });
}

#[test]
fn c10_numeric_round_trip() {
    gate(10, "numeric round trip", Duration::from_secs(60), || {
        let o = central_order(OrderKind::MultiGradedLex);
        let mats = central_matrices(&o);
        let mut worst_res = 0.0f64;
        let mut worst_z = 0.0f64;
        let mut failures = Vec::new();
        let mut rejected = 0;
        for m in [1usize, 2, 4] {
            for seed in 0..25u64 {
                let h = harvest(&mats, m, 1000 * m as u64 + seed).unwrap();
                match solve_theorem2(&h.knowns) {
                    Ok(sol) => {
                        worst_res = worst_res.max(sol.residuals.max());
                        worst_z = worst_z.max(sol.z_agreement());
                        if !(sol.residuals.within(NUMERIC_TOL) && sol.z_agreement() <= NUMERIC_TOL) {
                            failures.push(format!("m={m} seed={seed}"));
                        }
                    }
                    Err(e) => failures.push(format!("m={m} seed={seed}: {e}")),
                }
            }
            let mut h = harvest(&mats, m, 77 + m as u64).unwrap();
            h.knowns.get_mut("j").unwrap()[(0, 0)] += 1.0;
            if matches!(solve_theorem2(&h.knowns), Err(NumericError::Incompatible { .. })) {
                rejected += 1;
            }
        }
        (
            failures.is_empty() && rejected == 3,
            format!(
                "75 instances, worst residual {worst_res:.1e}, worst z disagreement {worst_z:.1e}, {rejected} of 3 perturbed rejected, tol {NUMERIC_TOL:e} {failures:?}"
            ),
        )
    });
}

#[test]
fn c11_property_suites() {
    use proptest::prelude::*;
    gate(11, "property suites", Duration::from_secs(600), || {
        let config = || Config { cases: common::CASES, failure_persistence: None, ..Config::default() };
        let mut out = Vec::new();

        let mut runner = TestRunner::new(config());
        let orders = common::any_order().prop_flat_map(move |o| {
            let n = o.alphabet().len() as u16;
            let w = || common::letters(n, 5).prop_map(ncgb::Word::from);
            (Just(o), w(), w(), w(), w(), w())
        });
        let r = runner.run(&orders, |(o, a, b, c, l, r)| {
            common::check_order_total(&o, &a, &b, &c)?;
            common::check_order_multiplicative(&o, &a, &b, &l, &r)
        });
        out.push(("order", r.map_err(|e| e.to_string())));

        let mut runner = TestRunner::new(config());
        let fix = common::sample_fixture();
        let r = runner.run(&common::poly(fix.order.clone(), 4, 4), |p| common::check_reduce_preserves_class(&p));
        out.push(("reduce", r.map_err(|e| e.to_string())));

        let mut runner = TestRunner::new(config());
        let cases = (1usize..=3, any::<bool>()).prop_flat_map(|(n, graded)| {
            let kind = if graded { OrderKind::GradedLex } else { OrderKind::MultiGradedLex };
            let o = common::order(kind, n);
            (
                Just(o.clone()),
                prop::collection::vec(common::poly(o.clone(), 3, 2), 1..=3),
                prop::collection::vec(common::poly(o, 3, 2), 0..=2),
                prop::collection::vec((0usize..3, common::coeff()), 1..=3),
            )
        });
        let r = runner.run(&cases, |(o, gens, mut probes, picks)| {
            probes.push(common::combinations(&gens, &picks));
            common::check_gb_soundness(&o, &gens, &probes)
        });
        out.push(("gb soundness", r.map_err(|e| e.to_string())));

        let ok = out.iter().all(|(_, r)| r.is_ok());
        let detail: Vec<String> =
            out.iter().map(|(n, r)| format!("{n} {}", r.as_ref().map(|_| "ok".to_string()).unwrap_or_else(|e| e.clone()))).collect();
        (ok, format!("{} cases each: {}", common::CASES, detail.join(", ")))
    });
}
