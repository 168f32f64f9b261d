use std::collections::BTreeMap;

use crate::alphabet::Sym;
use crate::classify::{SolutionReport, VerdictKind};
use crate::completion::{make_symbolic_matrices, SymbolicMatrices};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::word::Word;

use super::assignment::{BlockAssignment, Matrix};
use super::eval::{checked_inverse, eval_polynomial, residual, MIN_RCOND, rcond};
use super::verify::{verify_completion, CompletionResiduals};
use super::NumericError;

/// Unknown blocks recovered from a report.
#[derive(Clone, Debug)]
pub struct Completion {
    pub unknowns: BTreeMap<String, Matrix>,
    /// Largest normalized residual over every equation of the report.
    pub equation_residual: f64,
    /// Present when the report carries matrices to check against.
    pub residuals: Option<CompletionResiduals>,
}

/// Solves a decoupled report numerically.
///
/// Compatibility conditions are checked first. Each determined unknown is
/// taken from `presolved` or, failing that, from an equation of the form
/// `P·u + R = 0` or `u·P + R = 0` with `P, R` free of `u`. Singletons are
/// then evaluated in order. Every equation of the report is verified at the
/// end, and when `matrices` is given (or the report has a configuration)
/// so are `AB = I` and `BA = I`.
pub fn backsolve_decoupled(
    report: &SolutionReport,
    assignment: &BlockAssignment,
    presolved: &BTreeMap<String, Matrix>,
    matrices: Option<&SymbolicMatrices>,
) -> Result<Completion, NumericError> {
    if report.verdict.kind < VerdictKind::EssentiallyDecoupledWeak {
        return Err(NumericError::NotDecoupled(report.verdict.kind));
    }
    let tol = assignment.tolerance;
    let mut values: BTreeMap<String, Matrix> = BTreeMap::new();
    let check = |p: &Polynomial, values: &BTreeMap<String, Matrix>| -> Result<f64, NumericError> {
        let r = residual(p, assignment, values)?;
        if !(r <= tol) {
            return Err(NumericError::Incompatible { condition: p.to_string(), residual: r });
        }
        Ok(r)
    };
    let mut worst = 0.0f64;
    for p in &report.compatibility_knowns {
        worst = worst.max(check(p, &values)?);
    }

    for (&u, eqs) in &report.one_unknown {
        let name = report.name(u).to_string();
        let value = match presolved.get(&name) {
            Some(v) => v.clone(),
            None => {
                let eq = eqs.iter().find_map(|p| split_linear(p, u).map(|s| (p, s)));
                let Some((_, (side, coeff, rest))) = eq else {
                    let shown = eqs.first().map(|p| p.to_string()).unwrap_or_default();
                    return Err(NumericError::UnsupportedEquationForm(shown));
                };
                solve_linear(side, &eval_polynomial(&coeff, assignment, &values)?, &eval_polynomial(&rest, assignment, &values)?)?
            }
        };
        values.insert(name, value);
    }

    for &u in &report.tau {
        let p = &report.singletons[&u];
        let (c, _) = p.lead_term().expect("singletons are nonzero");
        let rest = Polynomial::from_terms(p.order(), p.terms()[1..].iter().map(|t| (t.coeff.clone(), t.word.clone())))
            .expect("same alphabet");
        let value = eval_polynomial(&rest, assignment, &values)? * (-1.0 / c.to_f64());
        values.insert(report.name(u).to_string(), value);
    }

    for p in report.unknown_polys() {
        worst = worst.max(check(p, &values)?);
    }

    let derived;
    let matrices = match (matrices, &report.configuration) {
        (Some(m), _) => Some(m),
        (None, Some(cfg)) => {
            derived = make_symbolic_matrices(cfg);
            Some(&derived)
        }
        _ => None,
    };
    let residuals = matrices.map(|m| verify_completion(m, assignment, &values)).transpose()?;
    Ok(Completion { unknowns: values, equation_residual: worst, residuals })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    /// `P·u`
    Left,
    /// `u·P`
    Right,
}

/// Splits `p = P·u + R` (or `u·P + R`) where `u` occurs once per term and
/// always at the same end.
fn split_linear(p: &Polynomial, u: Sym) -> Option<(Side, Polynomial, Polynomial)> {
    let order = p.order();
    let (with, without): (Vec<_>, Vec<_>) = p.terms().iter().partition(|t| t.word.letters().contains(&u));
    if with.iter().any(|t| t.word.letters().iter().filter(|&&s| s == u).count() != 1) {
        return None;
    }
    let rest = Polynomial::from_terms(order, without.iter().map(|t| (t.coeff.clone(), t.word.clone()))).ok()?;
    for side in [Side::Left, Side::Right] {
        let mut coeff: Vec<(Rational, Word)> = Vec::new();
        for t in &with {
            let l = t.word.letters();
            match side {
                Side::Left if l.last() == Some(&u) => coeff.push((t.coeff.clone(), Word::from_letters(&l[..l.len() - 1]))),
                Side::Right if l.first() == Some(&u) => coeff.push((t.coeff.clone(), Word::from_letters(&l[1..]))),
                _ => break,
            }
        }
        if coeff.len() == with.len() {
            return Some((side, Polynomial::from_terms(order, coeff).ok()?, rest));
        }
    }
    None
}

fn solve_linear(side: Side, coeff: &Matrix, rest: &Matrix) -> Result<Matrix, NumericError> {
    if rcond(coeff) < MIN_RCOND {
        return Err(NumericError::Singular("linear coefficient".into()));
    }
    let inv = checked_inverse("linear coefficient", coeff)?;
    Ok(match side {
        Side::Left => -(inv * rest),
        Side::Right => -(rest * inv),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{analyze_relations, AnalyzeOptions};
    use crate::completion::Configuration;
    use crate::fixtures::{central_answer, central_matrices, central_order, sample_answer, sample_matrices, sample_order};
    use crate::numeric::harvest;
    use crate::order::{MonomialOrder, OrderKind};
    use crate::parse::parse_polynomial;

    #[test]
    fn linear_split_both_sides() {
        let o = MonomialOrder::from_spec(OrderKind::GradedLex, "a<b<<u", &["a", "b"]).unwrap();
        let u = o.alphabet().lookup("u").unwrap();
        let p = parse_polynomial("a*b*u - 2*u + b", &o).unwrap();
        let (side, c, r) = split_linear(&p, u).unwrap();
        assert_eq!(side, Side::Left);
        assert_eq!(c.to_string(), "a*b - 2");
        assert_eq!(r.to_string(), "b");
        let p = parse_polynomial("u*a + a", &o).unwrap();
        assert_eq!(split_linear(&p, u).unwrap().0, Side::Right);
        assert!(split_linear(&parse_polynomial("a*u*b + a", &o).unwrap(), u).is_none());
        assert!(split_linear(&parse_polynomial("u*a*u", &o).unwrap(), u).is_none());
        assert!(split_linear(&parse_polynomial("a*u + u*b", &o).unwrap(), u).is_none());
    }

    #[test]
    fn central_answer_with_presolved_z() {
        let o = central_order(OrderKind::MultiGradedLex);
        let mats = central_matrices(&o);
        let h = harvest(&mats, 2, 5).unwrap();
        let report = analyze_relations(&o, &central_answer(&o), &AnalyzeOptions::default().iterations(1)).unwrap();
        let presolved: BTreeMap<_, _> = [("z".to_string(), h.unknowns["z"].clone())].into();
        let done = backsolve_decoupled(&report, &h.knowns, &presolved, Some(&mats)).unwrap();
        assert!(done.residuals.unwrap().within(1e-8));
        for (name, truth) in &h.unknowns {
            assert!((&done.unknowns[name] - truth).amax() < 1e-6, "{name}");
        }
    }

    #[test]
    fn sample_needs_its_quadratic_solved() {
        let o = sample_order(OrderKind::MultiGradedLex);
        let mats = sample_matrices(&o);
        let h = harvest(&mats, 3, 1).unwrap();
        let report = analyze_relations(&o, &sample_answer(&o), &AnalyzeOptions::default().iterations(1)).unwrap();
        assert!(matches!(
            backsolve_decoupled(&report, &h.knowns, &BTreeMap::new(), Some(&mats)),
            Err(NumericError::UnsupportedEquationForm(_))
        ));
        let presolved: BTreeMap<_, _> = [("u4".to_string(), h.unknowns["u4"].clone())].into();
        let done = backsolve_decoupled(&report, &h.knowns, &presolved, Some(&mats)).unwrap();
        assert!(done.residuals.unwrap().within(1e-8));
    }

    #[test]
    fn linear_one_unknown_equation() {
        let cfg: Configuration = "kukk kkkk".parse().unwrap();
        let report = crate::classify::analyze_configuration(&cfg, &AnalyzeOptions::default()).unwrap();
        assert!(report.verdict.at_least(VerdictKind::EssentiallyDecoupledWeak));
        let mats = make_symbolic_matrices(&cfg);
        let h = harvest(&mats, 3, 2).unwrap();
        let done = backsolve_decoupled(&report, &h.knowns, &BTreeMap::new(), None).unwrap();
        assert!(done.residuals.unwrap().within(1e-8));
        assert!((&done.unknowns["u1"] - &h.unknowns["u1"]).amax() < 1e-8);
    }
}
