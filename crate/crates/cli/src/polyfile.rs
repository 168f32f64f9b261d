use std::collections::BTreeSet;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use ncgb::{parse_polynomial, MonomialOrder, OrderKind, Polynomial};

/// Reads a file, naming it in any error.
pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Lines holding a polynomial: blank lines and `#` comments are skipped.
fn poly_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Base names used inside `Inv[...]` anywhere in `texts`.
pub fn inverted_names<'a>(texts: impl IntoIterator<Item = &'a str>) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for t in texts {
        let mut rest = t;
        while let Some(i) = rest.find("Inv[") {
            rest = &rest[i + 4..];
            if let Some(j) = rest.find(']') {
                out.insert(rest[..j].trim().to_string());
                rest = &rest[j..];
            }
        }
    }
    out
}

/// Builds the order from `spec`, giving every symbol that appears inverted
/// in `texts` its inverse.
pub fn order_for(kind: OrderKind, spec: Option<&str>, texts: &[&str]) -> Result<Arc<MonomialOrder>> {
    let Some(spec) = spec else { bail!("this command needs --order <spec>, e.g. `a<b<<c`") };
    let inv = inverted_names(texts.iter().copied());
    let inv: Vec<&str> = inv.iter().map(String::as_str).collect();
    MonomialOrder::from_spec(kind, spec, &inv).with_context(|| format!("order spec `{spec}`"))
}

pub fn parse_polys(text: &str, order: &Arc<MonomialOrder>, source: &str) -> Result<Vec<Polynomial>> {
    poly_lines(text)
        .map(|(n, l)| parse_polynomial(l, order).with_context(|| format!("{source}:{n}")))
        .collect()
}

pub fn format_polys(polys: &[Polynomial]) -> String {
    polys.iter().map(|p| format!("{p}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_inverted_names() {
        let names = inverted_names(["a*Inv[b] + Inv[ c ]", "Inv[b]*d", "Inv[unterminated"]);
        assert_eq!(names.into_iter().collect::<Vec<_>>(), ["b", "c"]);
    }
}
