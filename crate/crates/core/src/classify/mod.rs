//! Splitting a basis into the parts of a decoupled or triangular answer,
//! and deciding which form it has.

mod latex;
mod pipeline;
mod report;
mod text;

pub use latex::{latex_polynomial, latex_symbol, report_to_latex};
pub use pipeline::{analyze_configuration, analyze_relations, report_from_basis, AnalyzeOptions, DEFAULT_MAX_TERMS};
pub use report::{
    backsolve_order, check_compat_l_nondegenerate, check_compat_l_nondegenerate_with, classify, nondegeneracy_degree,
    singleton_unknown,
    split_polys, split_report, Nondegeneracy, SolutionReport, Verdict, VerdictKind,
};
pub use text::{parse_report, report_to_text, ReportError};
