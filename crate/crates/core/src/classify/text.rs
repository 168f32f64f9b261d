//! Plain-text form of a [`SolutionReport`].
//!
//! ```text
//! # order: multigraded-lex k1<Inv[k1]<<u1
//! # unknowns: u1
//! # verdict: formally-decoupled-weak
//! == compatibility conditions on knowns ==
//! == equations in one unknown (u1) ==
//! u1*k1*u1 - 1
//! == singletons ==
//! == residue ==
//! ```

use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::Arc;

use thiserror::Error;

use crate::alphabet::{Alphabet, Sym};
use crate::completion::Configuration;
use crate::error::AlgebraError;
use crate::order::{MonomialOrder, OrderKind};
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;

use super::report::{singleton_unknown, Nondegeneracy, SolutionReport, Verdict, VerdictKind};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("report has no `# order:` header")]
    MissingOrder,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

const COMPAT: &str = "== compatibility conditions on knowns ==";
const SINGLETONS: &str = "== singletons ==";
const RESIDUE: &str = "== residue ==";

fn names(report: &SolutionReport, syms: &[Sym]) -> String {
    syms.iter().map(|&s| report.name(s)).collect::<Vec<_>>().join(" ")
}

pub fn report_to_text(report: &SolutionReport) -> String {
    let alpha = report.order.alphabet();
    let mut out = String::new();
    let o = &mut out;
    if let Some(cfg) = &report.configuration {
        writeln!(o, "# configuration: {cfg}").unwrap();
    }
    writeln!(o, "# order: {} {}", report.order.kind(), alpha.to_order_spec()).unwrap();
    let unknowns: Vec<Sym> = alpha.unknowns().collect();
    writeln!(o, "# unknowns: {}", names(report, &unknowns)).unwrap();
    writeln!(o, "# iterations: {}", report.iterations).unwrap();
    writeln!(o, "# strongly-undetermined: {}", report.strongly_undetermined).unwrap();
    writeln!(o, "# verdict: {}", report.verdict.kind).unwrap();
    if let Some(c) = report.verdict.compat {
        writeln!(o, "# compat-{}-nondegenerate: {}", c.ell, c.holds).unwrap();
    }
    writeln!(o, "# truncated: {}", report.verdict.truncated_basis).unwrap();
    writeln!(o, "# sigma: {}", names(report, &report.sigma)).unwrap();
    writeln!(o, "# tau: {}", names(report, &report.tau)).unwrap();
    writeln!(o, "{COMPAT}").unwrap();
    for p in &report.compatibility_knowns {
        writeln!(o, "{p}").unwrap();
    }
    for (&u, ps) in &report.one_unknown {
        writeln!(o, "== equations in one unknown ({}) ==", report.name(u)).unwrap();
        for p in ps {
            writeln!(o, "{p}").unwrap();
        }
    }
    writeln!(o, "{SINGLETONS}").unwrap();
    for p in report.singletons.values() {
        writeln!(o, "{p}").unwrap();
    }
    writeln!(o, "{RESIDUE}").unwrap();
    for p in &report.residue {
        writeln!(o, "{p}").unwrap();
    }
    out
}

enum Section {
    None,
    Compat,
    One(Sym),
    Singletons,
    Residue,
}

/// Reads a report written by [`report_to_text`].
pub fn parse_report(text: &str) -> Result<SolutionReport, ReportError> {
    let mut headers: BTreeMap<String, (usize, String)> = BTreeMap::new();
    let mut body: Vec<(usize, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(h) = line.strip_prefix('#') {
            let (k, v) = h.split_once(':').ok_or_else(|| err(i, "header without `:`"))?;
            headers.insert(k.trim().to_string(), (i + 1, v.trim().to_string()));
        } else if !line.is_empty() {
            body.push((i + 1, line));
        }
    }
    let (order_line, order_text) = headers.get("order").ok_or(ReportError::MissingOrder)?;
    let (kind, spec) = order_text.split_once(' ').ok_or_else(|| err(*order_line - 1, "expected `<kind> <spec>`"))?;
    let kind = OrderKind::parse(kind).ok_or_else(|| err(*order_line - 1, "unknown order kind"))?;
    let mut alphabet = Alphabet::from_order_spec(spec.trim(), &[])?;
    if let Some((_, u)) = headers.get("unknowns") {
        let list: Vec<&str> = u.split_whitespace().collect();
        alphabet = alphabet.with_unknowns(&list)?;
    }
    let order = MonomialOrder::new(kind, Arc::new(alphabet));

    let flag = |key: &str| -> Result<Option<bool>, ReportError> {
        match headers.get(key) {
            None => Ok(None),
            Some((l, v)) => v.parse().map(Some).map_err(|_| err(l - 1, "expected true or false")),
        }
    };
    let syms = |key: &str| -> Result<Vec<Sym>, ReportError> {
        let Some((l, v)) = headers.get(key) else { return Ok(Vec::new()) };
        v.split_whitespace()
            .map(|n| order.alphabet().lookup(n).ok_or_else(|| err(l - 1, &format!("unknown symbol `{n}`"))))
            .collect()
    };
    let kind = match headers.get("verdict") {
        Some((l, v)) => v.parse().map_err(|e: String| err(l - 1, &e))?,
        None => VerdictKind::Unclassified,
    };
    let compat = headers
        .iter()
        .find_map(|(k, v)| {
            let ell = k.strip_prefix("compat-")?.strip_suffix("-nondegenerate")?.parse().ok()?;
            Some((ell, v))
        })
        .map(|(ell, (l, v))| {
            v.parse().map(|holds| Nondegeneracy { ell, holds, truncated: false }).map_err(|_| err(l - 1, "expected bool"))
        })
        .transpose()?;
    let configuration = match headers.get("configuration") {
        Some((_, v)) => Some(Configuration::parse(v)?),
        None => None,
    };
    let iterations = match headers.get("iterations") {
        Some((l, v)) => v.parse().map_err(|_| err(l - 1, "expected an integer"))?,
        None => 0,
    };

    let mut report = SolutionReport {
        order: order.clone(),
        configuration,
        iterations,
        strongly_undetermined: flag("strongly-undetermined")?.unwrap_or(false),
        compatibility_knowns: Vec::new(),
        one_unknown: BTreeMap::new(),
        singletons: BTreeMap::new(),
        residue: Vec::new(),
        verdict: Verdict { kind, compat, truncated_basis: flag("truncated")?.unwrap_or(false) },
        sigma: syms("sigma")?,
        tau: syms("tau")?,
    };
    let mut section = Section::None;
    for (line, text) in body {
        if text.starts_with("==") {
            section = if text == COMPAT {
                Section::Compat
            } else if text == SINGLETONS {
                Section::Singletons
            } else if text == RESIDUE {
                Section::Residue
            } else if let Some(name) =
                text.strip_prefix("== equations in one unknown (").and_then(|r| r.strip_suffix(") =="))
            {
                let u = order.alphabet().lookup(name).ok_or_else(|| err(line - 1, "unknown symbol"))?;
                report.one_unknown.entry(u).or_default();
                Section::One(u)
            } else {
                return Err(err(line - 1, "unknown section"));
            };
            continue;
        }
        let p: Polynomial = parse_polynomial(text, &order).map_err(|e| err(line - 1, &e.to_string()))?;
        match section {
            Section::None => return Err(err(line - 1, "polynomial outside a section")),
            Section::Compat => report.compatibility_knowns.push(p),
            Section::One(u) => report.one_unknown.entry(u).or_default().push(p),
            Section::Singletons => {
                let u = singleton_unknown(&p).ok_or_else(|| err(line - 1, "not a singleton"))?;
                report.singletons.insert(u, p);
            }
            Section::Residue => report.residue.push(p),
        }
    }
    Ok(report)
}

fn err(line0: usize, message: &str) -> ReportError {
    ReportError::Line { line: line0 + 1, message: message.to_string() }
}
