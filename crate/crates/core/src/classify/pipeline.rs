use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use crate::alphabet::Sym;
use crate::completion::{is_strongly_undetermined, make_symbolic_matrices_with, Configuration};
use crate::error::Result;
use crate::groebner::{extract_subalgebra, make_partial_gb_with, reduce, GbOptions, PartialBasis};
use crate::order::{MonomialOrder, OrderKind};
use crate::poly::Polynomial;

use super::report::{check_compat_l_nondegenerate_with, split_polys, SolutionReport, VerdictKind};

/// Term budget per basis iteration; roughly a few hundred megabytes.
pub const DEFAULT_MAX_TERMS: usize = 2_000_000;

/// Settings for [`analyze_configuration`].
#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub gb_iters: usize,
    pub order_kind: OrderKind,
    /// Level of the compatibility nondegeneracy check; 0 skips it.
    pub ell: usize,
    /// Retry once at `gb_iters + 1` when the verdict falls short of the
    /// essentially decoupled form.
    pub escalate: bool,
    pub max_degree: Option<usize>,
    pub max_polys: Option<usize>,
    pub max_terms: Option<usize>,
    pub deadline: Option<Instant>,
    pub parallel: bool,
    /// Report strongly undetermined configurations as unclassified without
    /// computing a basis.
    pub skip_strongly_undetermined: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            gb_iters: 2,
            order_kind: OrderKind::MultiGradedLex,
            ell: 3,
            escalate: true,
            max_degree: None,
            max_polys: None,
            max_terms: Some(DEFAULT_MAX_TERMS),
            deadline: None,
            parallel: true,
            skip_strongly_undetermined: true,
        }
    }
}

impl AnalyzeOptions {
    pub fn iterations(mut self, k: usize) -> Self {
        self.gb_iters = k;
        self
    }

    fn gb(&self, iterations: usize) -> GbOptions {
        GbOptions {
            iterations,
            max_degree: self.max_degree,
            max_polys: self.max_polys,
            max_terms: self.max_terms,
            deadline: self.deadline,
            parallel: self.parallel,
        }
    }
}

/// Runs the whole pipeline for a configuration under its canonical
/// labeling: partial basis of the relations, compatibility conditions
/// extracted and completed one more iteration, unknown equations reduced
/// by them, then split and classified.
pub fn analyze_configuration(cfg: &Configuration, opts: &AnalyzeOptions) -> Result<SolutionReport> {
    let rel = make_symbolic_matrices_with(cfg, opts.order_kind).relations();
    let su = is_strongly_undetermined(cfg);
    let mut report = if su && opts.skip_strongly_undetermined {
        let mut r = split_polys(rel.order(), &[]);
        r.iterations = 0;
        r.verdict.kind = VerdictKind::Unclassified;
        r.sigma.clear();
        r.tau.clear();
        r
    } else {
        analyze_relations(rel.order(), &rel.all(), opts)?
    };
    report.configuration = Some(cfg.clone());
    report.strongly_undetermined = su;
    Ok(report)
}

/// The pipeline over arbitrary generators.
pub fn analyze_relations(order: &Arc<MonomialOrder>, gens: &[Polynomial], opts: &AnalyzeOptions) -> Result<SolutionReport> {
    let first = analyze_at(order, gens, opts, opts.gb_iters)?;
    if opts.escalate && first.verdict.kind < VerdictKind::EssentiallyDecoupledWeak {
        let second = analyze_at(order, gens, opts, opts.gb_iters + 1)?;
        if second.verdict.kind >= first.verdict.kind {
            return Ok(second);
        }
    }
    Ok(first)
}

fn analyze_at(order: &Arc<MonomialOrder>, gens: &[Polynomial], opts: &AnalyzeOptions, k: usize) -> Result<SolutionReport> {
    let basis = make_partial_gb_with(gens, order, &opts.gb(k))?;
    let mut report = report_from_basis(&basis, opts)?;
    report.iterations = k;
    Ok(report)
}

/// The post-processing half of the pipeline, starting from a basis.
pub fn report_from_basis(basis: &PartialBasis, opts: &AnalyzeOptions) -> Result<SolutionReport> {
    let order = basis.order();
    let knowns: BTreeSet<Sym> = order.alphabet().known_closure().collect();
    let compat = extract_subalgebra(basis, &knowns);
    let compat_gb = make_partial_gb_with(&compat, order, &opts.gb(1))?;
    let mut polys = compat.clone();
    for p in basis.polys().iter().filter(|p| !p.unknowns().is_empty()) {
        let r = reduce(p, compat_gb.rules());
        if !r.is_zero() {
            polys.push(r.monic());
        }
    }
    let mut report = split_polys(order, &polys);
    report.iterations = basis.iterations();
    report.verdict.truncated_basis = basis.truncated() || compat_gb.truncated();
    if basis.aborted() || compat_gb.aborted() {
        report.verdict.kind = VerdictKind::Unclassified;
        report.sigma.clear();
        report.tau.clear();
    }
    if opts.ell > 0 {
        report.verdict.compat = Some(check_compat_l_nondegenerate_with(&report, &opts.gb(opts.ell)));
    }
    Ok(report)
}
