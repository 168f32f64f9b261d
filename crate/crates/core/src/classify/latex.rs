use std::fmt::Write;

use crate::alphabet::{Alphabet, Sym, SymbolKind};
use crate::completion::make_symbolic_matrices;
use crate::poly::Polynomial;
use crate::rational::Rational;

use super::report::SolutionReport;

/// `k12` as `k_{12}`, `Inv[k1]` as `k_{1}^{-1}`.
pub fn latex_symbol(alphabet: &Alphabet, s: Sym) -> String {
    match alphabet.kind(s) {
        SymbolKind::InverseOf(base) => format!("{}^{{-1}}", latex_name(alphabet.name(base))),
        _ => latex_name(alphabet.name(s)),
    }
}

fn latex_name(name: &str) -> String {
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (stem, digits) = name.split_at(split);
    match digits.len() {
        0 => stem.to_string(),
        1 => format!("{stem}_{digits}"),
        _ => format!("{stem}_{{{digits}}}"),
    }
}

fn latex_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn latex_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let alpha = p.order().alphabet();
    let mut out = String::new();
    for (i, t) in p.terms().iter().enumerate() {
        let neg = t.coeff.is_negative();
        out.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let c = t.coeff.abs();
        let word: Vec<String> = t.word.letters().iter().map(|&s| latex_symbol(alpha, s)).collect();
        if word.is_empty() {
            out.push_str(&latex_coeff(&c));
        } else {
            if !c.is_one() {
                out.push_str(&latex_coeff(&c));
                out.push(' ');
            }
            out.push_str(&word.join(" "));
        }
    }
    out
}

/// A standalone LaTeX document with the configuration's matrices (when
/// known) and every equation of the report, grouped by section.
pub fn report_to_latex(report: &SolutionReport) -> String {
    let mut o = String::new();
    o.push_str("\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n");
    if let Some(cfg) = &report.configuration {
        let m = make_symbolic_matrices(cfg);
        let alpha = m.order().alphabet().clone();
        let n = m.n();
        for (label, is_a) in [("A", true), ("B", false)] {
            writeln!(o, "\\[\n{label} = \\begin{{pmatrix}}").unwrap();
            for r in 0..n {
                let row: Vec<String> = (0..n)
                    .map(|c| latex_symbol(&alpha, if is_a { m.a(r, c) } else { m.b(r, c) }))
                    .collect();
                writeln!(o, "{} \\\\", row.join(" & ")).unwrap();
            }
            o.push_str("\\end{pmatrix}\n\\]\n");
        }
    }
    let mut section = |title: &str, polys: &[&Polynomial]| {
        if polys.is_empty() {
            return;
        }
        writeln!(o, "\\paragraph{{{title}}}\n\\begin{{align*}}").unwrap();
        let lines: Vec<String> = polys.iter().map(|p| format!("{} &= 0", latex_polynomial(p))).collect();
        writeln!(o, "{}", lines.join(" \\\\\n")).unwrap();
        o.push_str("\\end{align*}\n");
    };
    section("Compatibility conditions on the knowns", &report.compatibility_knowns.iter().collect::<Vec<_>>());
    for (&u, ps) in &report.one_unknown {
        let title = format!("Equations in ${}$", latex_symbol(report.order.alphabet(), u));
        section(&title, &ps.iter().collect::<Vec<_>>());
    }
    section("Singletons", &report.singletons.values().collect::<Vec<_>>());
    section("Residue", &report.residue.iter().collect::<Vec<_>>());
    o.push_str("\\end{document}\n");
    o
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{MonomialOrder, OrderKind};
    use crate::parse::parse_polynomial;

    #[test]
    fn symbols_and_polynomials() {
        let o = MonomialOrder::from_spec(OrderKind::GradedLex, "k1<k12<<u4", &["k1"]).unwrap();
        let a = o.alphabet();
        assert_eq!(latex_symbol(a, a.lookup("Inv[k1]").unwrap()), "k_1^{-1}");
        assert_eq!(latex_symbol(a, a.lookup("k12").unwrap()), "k_{12}");
        let p = parse_polynomial("u4*k1*u4 - 1/2*Inv[k1] + 3", &o).unwrap();
        assert_eq!(latex_polynomial(&p), "u_4 k_1 u_4 - \\frac{1}{2} k_1^{-1} + 3");
    }
}
