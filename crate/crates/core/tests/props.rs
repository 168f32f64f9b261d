mod common;

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use ncgb::classify::split_polys;
use ncgb::completion::{
    class_representative, equivalence_class, is_strongly_undetermined, is_strongly_undetermined_by_lines,
    BlockPermutation, Configuration,
};
use ncgb::groebner::{make_partial_gb, make_partial_gb_with, GbOptions};
use ncgb::numeric::{harvest, rcond, solve_theorem2, BlockAssignment};
use ncgb::{parse_polynomial, OrderKind, Polynomial, Rational, Word};
use num_rational::BigRational;
use proptest::prelude::*;

use common::{any_order, coeff, letters, poly, CASES};

fn config(n: usize) -> impl Strategy<Value = Configuration> {
    prop::collection::vec(any::<bool>(), 2 * n * n).prop_map(move |f| Configuration::from_flags(n, &f).unwrap())
}

fn group_element(n: usize) -> impl Strategy<Value = BlockPermutation> {
    let count = BlockPermutation::all(n).len();
    (0..count).prop_map(move |i| BlockPermutation::all(n).swap_remove(i))
}

fn big(r: &Rational) -> BigRational {
    BigRational::new(r.numer(), r.denom())
}

// Smallest singular value relative to max(1, largest).
fn smallest(m: &DMatrix<f64>) -> f64 {
    let sv = m.singular_values();
    sv.min() / sv.max().max(1.0)
}

// The closed form inverts eight known blocks, a⁻¹b − d⁻¹e and da⁻¹ − eb⁻¹;
// its accuracy follows their conditioning, not that of A.
fn inverted_blocks_conditioned(k: &BlockAssignment, floor: f64) -> bool {
    let g = |n: &str| k.get(n).unwrap().clone();
    let inv = |n: &str| g(n).try_inverse().unwrap();
    let s1 = inv("a") * g("b") - inv("d") * g("e");
    let s2 = g("d") * inv("a") - g("e") * inv("b");
    ["a", "b", "c", "d", "f", "h", "i", "k"].iter().all(|n| rcond(&g(n)) >= floor) && rcond(&s1) >= floor && rcond(&s2) >= floor
}

fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| Rational::new(n, d)),
        (-50i64..50, 1i64..50).prop_map(|(n, d)| Rational::new(n, d)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: CASES, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn orders_are_total(o in any_order(), a in letters(4, 5), b in letters(4, 5), c in letters(4, 5)) {
        let n = o.alphabet().len() as u16;
        let clip = |w: Vec<u16>| Word::from(w.into_iter().map(|s| s % n).collect::<Vec<_>>());
        common::check_order_total(&o, &clip(a), &clip(b), &clip(c))?;
    }

    #[test]
    fn graded_orders_are_multiplicative(
        o in any_order(), a in letters(4, 4), b in letters(4, 4), l in letters(4, 3), r in letters(4, 3)
    ) {
        let n = o.alphabet().len() as u16;
        let clip = |w: Vec<u16>| Word::from(w.into_iter().map(|s| s % n).collect::<Vec<_>>());
        common::check_order_multiplicative(&o, &clip(a), &clip(b), &clip(l), &clip(r))?;
    }

    #[test]
    fn lead_of_product(
        (p, q) in (1usize..=3).prop_flat_map(|n| {
            let o = common::order(OrderKind::GradedLex, n);
            (poly(o.clone(), 4, 3), poly(o, 4, 3))
        })
    ) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        common::check_lead_of_product(&p, &q)?;
    }

    #[test]
    fn rational_arithmetic_matches_big(a in rational(), b in rational()) {
        prop_assert_eq!(big(&(&a + &b)), big(&a) + big(&b));
        prop_assert_eq!(big(&(&a - &b)), big(&a) - big(&b));
        prop_assert_eq!(big(&(&a * &b)), big(&a) * big(&b));
        if !b.is_zero() {
            prop_assert_eq!(big(&(&a / &b)), big(&a) / big(&b));
        }
        prop_assert_eq!(a.partial_cmp(&b), big(&a).partial_cmp(&big(&b)));
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn text_round_trip(p in poly(ncgb::fixtures::sample_order(OrderKind::MultiGradedLex), 5, 4)) {
        let back = parse_polynomial(&p.to_string(), p.order()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn reduction_preserves_residue_class(p in poly(common::sample_fixture().order.clone(), 4, 4)) {
        common::check_reduce_preserves_class(&p)?;
    }

    #[test]
    fn basis_is_sound(
        (o, gens, mut probes, picks) in (1usize..=3, any::<bool>()).prop_flat_map(|(n, graded)| {
            let kind = if graded { OrderKind::GradedLex } else { OrderKind::MultiGradedLex };
            let o = common::order(kind, n);
            (
                Just(o.clone()),
                prop::collection::vec(poly(o.clone(), 3, 2), 1..=3),
                prop::collection::vec(poly(o, 3, 2), 0..=2),
                prop::collection::vec((0usize..3, coeff()), 1..=3),
            )
        })
    ) {
        probes.push(common::combinations(&gens, &picks));
        common::check_gb_soundness(&o, &gens, &probes)?;
    }

    #[test]
    fn membership_is_monotone_and_deterministic(
        (o, gens, probes) in (2usize..=3).prop_flat_map(|n| {
            let o = common::order(OrderKind::GradedLex, n);
            (Just(o.clone()), prop::collection::vec(poly(o.clone(), 3, 2), 1..=3), prop::collection::vec(poly(o, 3, 3), 1..=4))
        })
    ) {
        let one = make_partial_gb(&gens, &o, 1).unwrap();
        let two = make_partial_gb(&gens, &o, 2).unwrap();
        let serial = make_partial_gb_with(&gens, &o, &GbOptions::new(2).sequential()).unwrap();
        prop_assert_eq!(two.polys(), serial.polys());
        let again = make_partial_gb(&gens, &o, 2).unwrap();
        prop_assert_eq!(two.polys(), again.polys());
        for b in two.polys() {
            prop_assert!(two.certifies(b));
        }
        for p in &probes {
            if one.certifies(p) {
                prop_assert!(two.certifies(p), "{} certified at 1 but not 2", p);
            }
        }
        let combo = common::combinations(&gens, &[(0, 1), (1, -2)]);
        let sum = &combo + &Polynomial::zero(&o);
        prop_assert_eq!(two.certifies(&combo), two.certifies(&sum));
    }

    #[test]
    fn classes_are_orbits(cfg in config(3), g in group_element(3)) {
        let moved = g.apply(&cfg);
        prop_assert_eq!(class_representative(&moved), class_representative(&cfg));
        let class = equivalence_class(&cfg);
        prop_assert!(class.contains(&moved));
        prop_assert_eq!(36 % class.len(), 0);
        prop_assert_eq!(class.iter().next().unwrap(), &class_representative(&cfg));
        prop_assert!(class.iter().all(|c| c.unknown_count() == cfg.unknown_count()));
    }

    #[test]
    fn strongly_undetermined_is_invariant(cfg in config(3), g in group_element(3)) {
        let su = is_strongly_undetermined(&cfg);
        prop_assert_eq!(su, is_strongly_undetermined(&g.apply(&cfg)));
        prop_assert_eq!(su, is_strongly_undetermined_by_lines(&cfg));
    }

    #[test]
    fn split_partitions_its_input(
        polys in prop::collection::vec(poly(ncgb::fixtures::sample_order(OrderKind::MultiGradedLex), 3, 3), 0..8)
    ) {
        let o = ncgb::fixtures::sample_order(OrderKind::MultiGradedLex);
        let polys: Vec<Polynomial> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        let r = split_polys(&o, &polys);
        let mut out: Vec<String> = r.all_polys().map(|p| p.to_string()).collect();
        let mut input: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
        out.sort();
        input.sort();
        prop_assert_eq!(out, input);
        prop_assert!(r.compatibility_knowns.iter().all(|p| p.unknowns().is_empty()));
        for (u, ps) in &r.one_unknown {
            prop_assert!(ps.iter().all(|p| p.unknowns().into_iter().collect::<Vec<_>>() == [*u]));
        }
        for (u, p) in &r.singletons {
            prop_assert_eq!(ncgb::classify::singleton_unknown(p), Some(*u));
        }
    }

    #[test]
    fn schur_complement_tracks_outer_invertibility(seed in any::<u64>(), singular in any::<bool>(), m in 1usize..=4) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || DMatrix::from_fn(m, m, |_, _| rng.gen_range(-1.0..1.0));
        let (a, b, d) = (draw(), draw(), draw());
        prop_assume!(rcond(&a) > 1e-4 && rcond(&d) > 1e-4);
        let ai = a.clone().try_inverse().unwrap();
        let e = if singular {
            let mut low = draw();
            low.row_mut(0).fill(0.0);
            &d * &ai * &b + low
        } else {
            draw()
        };
        let mut outer = DMatrix::zeros(2 * m, 2 * m);
        outer.view_mut((0, 0), (m, m)).copy_from(&a);
        outer.view_mut((0, m), (m, m)).copy_from(&b);
        outer.view_mut((m, 0), (m, m)).copy_from(&d);
        outer.view_mut((m, m), (m, m)).copy_from(&e);
        let s1 = &ai * &b - d.clone().try_inverse().unwrap() * &e;
        let cut = 1e-9;
        prop_assume!(singular || (rcond(&outer) > 1e-6 && smallest(&s1) > 1e-6));
        prop_assert_eq!(smallest(&outer) < cut, smallest(&s1) < cut);
        prop_assert_eq!(singular, smallest(&s1) < cut);
    }

    #[test]
    fn tolerance_is_monotone(seed in 0u64..10_000, m in 1usize..=3, shift in 0.0f64..1e-6, t in -12i32..-4, dt in 0i32..6) {
        let o = ncgb::fixtures::central_order(OrderKind::MultiGradedLex);
        let h = harvest(&ncgb::fixtures::central_matrices(&o), m, seed).unwrap();
        let mut k: BlockAssignment = h.knowns.clone();
        k.get_mut("j").unwrap()[(0, 0)] += shift;
        k.tolerance = 10f64.powi(t);
        let tight = solve_theorem2(&k).is_ok();
        k.tolerance = 10f64.powi(t + dt);
        prop_assert!(!tight || solve_theorem2(&k).is_ok());
    }

    #[test]
    fn theorem2_agrees_with_harvest(seed in 0u64..100_000, m in 1usize..=3) {
        let o = ncgb::fixtures::central_order(OrderKind::MultiGradedLex);
        let h = harvest(&ncgb::fixtures::central_matrices(&o), m, seed).unwrap();
        prop_assume!(inverted_blocks_conditioned(&h.knowns, 1e-3));
        let sol = solve_theorem2(&h.knowns).unwrap();
        prop_assert!(sol.z_agreement() <= 1e-8);
        prop_assert!(sol.residuals.within(1e-8), "{:?}", sol.residuals);
        let truth: &BTreeMap<_, _> = &h.unknowns;
        for (name, v) in &sol.unknowns {
            prop_assert!((v - &truth[name]).amax() <= 1e-6 * truth[name].amax().max(1.0));
        }
    }
}

#[test]
fn oracle_rejects_non_members() {
    let o = common::order(OrderKind::GradedLex, 2);
    let p = |s: &str| parse_polynomial(s, &o).unwrap();
    let mut ideal = common::TruncatedIdeal::new(&[p("x1*x1")], 2, 4).unwrap();
    assert_eq!(ideal.contains(&p("x2*x1*x1*x2")), Some(true));
    assert_eq!(ideal.contains(&p("x1*x2*x1")), Some(false));
    assert_eq!(ideal.contains(&p("x1")), Some(false));
    assert_eq!(ideal.contains(&p("x1*x1*x1*x1*x1")), None);
    let mut ideal = common::TruncatedIdeal::new(&[p("x1*x2 - x2*x1"), p("x1*x1 - 1")], 2, 4).unwrap();
    assert_eq!(ideal.contains(&p("x2*x1*x1 - x2")), Some(true));
    assert_eq!(ideal.contains(&p("x2 - x1*x2*x1")), Some(true));
    assert_eq!(ideal.contains(&p("x2 - x1")), Some(false));
}

#[test]
fn soundness_check_catches_a_planted_error() {
    let o = common::order(OrderKind::GradedLex, 2);
    let p = |s: &str| parse_polynomial(s, &o).unwrap();
    let mut ideal = common::TruncatedIdeal::new(&[p("x1*x2 - x2")], 2, 4).unwrap();
    assert_eq!(ideal.contains(&p("x1*x2 - x1")), Some(false));
}
