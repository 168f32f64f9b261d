//! Named indeterminates and their order groups.
//!
//! Symbol indices double as ranks: symbol `i` sits strictly below symbol
//! `i + 1` in letter comparisons, and groups never decrease along the
//! index sequence.

use std::collections::HashMap;
use std::fmt;

use crate::error::{AlgebraError, Result};

/// Index of a symbol inside its [`Alphabet`].
pub type Sym = u16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    Known,
    Unknown,
    /// The formal inverse of a known symbol.
    InverseOf(Sym),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol {
    pub name: String,
    pub kind: SymbolKind,
    pub group: u16,
}

#[derive(Clone, Debug)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    index: HashMap<String, Sym>,
    inverse: Vec<Option<Sym>>,
    groups: u16,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

pub fn inverse_name(base: &str) -> String {
    format!("Inv[{base}]")
}

impl Alphabet {
    /// Validates and indexes a symbol list given in ascending rank.
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        let bad = |m: String| Err(AlgebraError::InvalidAlphabet(m));
        if symbols.len() > Sym::MAX as usize {
            return bad("too many symbols".into());
        }
        let mut index = HashMap::with_capacity(symbols.len());
        let mut inverse = vec![None; symbols.len()];
        let mut expected_group = 0u16;
        for (i, s) in symbols.iter().enumerate() {
            if s.name.is_empty() {
                return bad(format!("symbol {i} has an empty name"));
            }
            if index.insert(s.name.clone(), i as Sym).is_some() {
                return bad(format!("duplicate symbol `{}`", s.name));
            }
            if s.group != expected_group {
                if i > 0 && s.group == expected_group + 1 {
                    expected_group += 1;
                } else {
                    return bad(format!(
                        "group of `{}` is {}, groups must be contiguous from 0 and nondecreasing",
                        s.name, s.group
                    ));
                }
            }
            if let SymbolKind::InverseOf(base) = s.kind {
                let b = base as usize;
                if b + 1 != i {
                    return bad(format!("`{}` must sit directly above its base", s.name));
                }
                let base_sym = &symbols[b];
                if base_sym.kind != SymbolKind::Known {
                    return bad(format!("`{}` inverts a symbol that is not known", s.name));
                }
                if base_sym.group != s.group {
                    return bad(format!("`{}` must share its base's group", s.name));
                }
                inverse[b] = Some(i as Sym);
            }
        }
        let groups = symbols.last().map_or(0, |s| s.group + 1);
        Ok(Alphabet { symbols, index, inverse, groups })
    }

    /// Parses `a<b<c<<d<<e`: `<` separates symbols within a group and `<<`
    /// starts a new group. Every name in `invertible` gets `Inv[name]`
    /// inserted directly above it unless the spec already lists it there.
    ///
    /// Names in group 0 and invertible names are known; everything else is
    /// unknown. Use [`Alphabet::with_unknowns`] to override.
    pub fn from_order_spec(spec: &str, invertible: &[&str]) -> Result<Self> {
        let groups = parse_order_groups(spec)?;
        let mut symbols: Vec<Symbol> = Vec::new();
        for (g, names) in groups.iter().enumerate() {
            let g = g as u16;
            for name in names {
                if let Some(base) = name.strip_prefix("Inv[").and_then(|r| r.strip_suffix(']')) {
                    let ok = symbols.last().is_some_and(|s| s.name == base && s.group == g);
                    if !ok {
                        return Err(AlgebraError::InvalidOrder(format!(
                            "`{name}` must directly follow `{base}` in the same group"
                        )));
                    }
                    let b = (symbols.len() - 1) as Sym;
                    symbols[b as usize].kind = SymbolKind::Known;
                    symbols.push(Symbol { name: name.clone(), kind: SymbolKind::InverseOf(b), group: g });
                    continue;
                }
                // Close out the previous symbol's implicit inverse first.
                push_pending_inverse(&mut symbols, invertible);
                let kind = if g == 0 || invertible.contains(&name.as_str()) {
                    SymbolKind::Known
                } else {
                    SymbolKind::Unknown
                };
                symbols.push(Symbol { name: name.clone(), kind, group: g });
            }
            push_pending_inverse(&mut symbols, invertible);
        }
        for name in invertible {
            if !symbols.iter().any(|s| s.name == *name) {
                return Err(AlgebraError::InvalidOrder(format!(
                    "invertible symbol `{name}` does not appear in the order"
                )));
            }
        }
        Alphabet::new(symbols)
    }

    /// Marks exactly the listed names as unknown and every other
    /// non-inverse symbol as known.
    pub fn with_unknowns(self, unknowns: &[&str]) -> Result<Self> {
        let mut symbols = self.symbols;
        for u in unknowns {
            if !symbols.iter().any(|s| s.name == *u) {
                return Err(AlgebraError::InvalidAlphabet(format!("unknown `{u}` is not a symbol")));
            }
        }
        for s in symbols.iter_mut() {
            if matches!(s.kind, SymbolKind::InverseOf(_)) {
                continue;
            }
            s.kind = if unknowns.contains(&s.name.as_str()) {
                SymbolKind::Unknown
            } else {
                SymbolKind::Known
            };
        }
        Alphabet::new(symbols)
    }

    /// Renders the order spec that reproduces this alphabet, listing
    /// inverses explicitly.
    pub fn to_order_spec(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                out.push_str(if s.group != self.symbols[i - 1].group { "<<" } else { "<" });
            }
            out.push_str(&s.name);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn groups(&self) -> u16 {
        self.groups
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol(&self, s: Sym) -> &Symbol {
        &self.symbols[s as usize]
    }

    pub fn name(&self, s: Sym) -> &str {
        &self.symbols[s as usize].name
    }

    pub fn kind(&self, s: Sym) -> SymbolKind {
        self.symbols[s as usize].kind
    }

    pub fn group(&self, s: Sym) -> u16 {
        self.symbols[s as usize].group
    }

    pub fn lookup(&self, name: &str) -> Option<Sym> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, s: Sym) -> bool {
        (s as usize) < self.symbols.len()
    }

    /// The inverse symbol of a known, if it has one.
    pub fn inverse_of(&self, s: Sym) -> Option<Sym> {
        self.inverse[s as usize]
    }

    pub fn is_unknown(&self, s: Sym) -> bool {
        self.kind(s) == SymbolKind::Unknown
    }

    pub fn knowns(&self) -> impl Iterator<Item = Sym> + '_ {
        (0..self.len() as Sym).filter(|&s| self.kind(s) == SymbolKind::Known)
    }

    pub fn unknowns(&self) -> impl Iterator<Item = Sym> + '_ {
        (0..self.len() as Sym).filter(|&s| self.is_unknown(s))
    }

    /// Knowns together with their inverses.
    pub fn known_closure(&self) -> impl Iterator<Item = Sym> + '_ {
        (0..self.len() as Sym).filter(|&s| !self.is_unknown(s))
    }
}

fn push_pending_inverse(symbols: &mut Vec<Symbol>, invertible: &[&str]) {
    let Some(last) = symbols.last() else { return };
    if matches!(last.kind, SymbolKind::InverseOf(_)) || !invertible.contains(&last.name.as_str()) {
        return;
    }
    let name = inverse_name(&last.name);
    if symbols.iter().any(|s| s.name == name) {
        return;
    }
    let base = (symbols.len() - 1) as Sym;
    let group = last.group;
    symbols[base as usize].kind = SymbolKind::Known;
    symbols.push(Symbol { name, kind: SymbolKind::InverseOf(base), group });
}

fn parse_order_groups(spec: &str) -> Result<Vec<Vec<String>>> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(AlgebraError::InvalidOrder("empty order".into()));
    }
    let mut groups = Vec::new();
    for group in compact.split("<<") {
        let mut names = Vec::new();
        for name in group.split('<') {
            if !is_symbol_name(name) {
                return Err(AlgebraError::InvalidOrder(format!("bad symbol `{name}` in `{spec}`")));
            }
            names.push(name.to_string());
        }
        groups.push(names);
    }
    Ok(groups)
}

fn is_symbol_name(s: &str) -> bool {
    if let Some(inner) = s.strip_prefix("Inv[").and_then(|r| r.strip_suffix(']')) {
        return is_plain_name(inner);
    }
    is_plain_name(s)
}

pub(crate) fn is_plain_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_order_spec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_inserts_inverses_above_base() {
        let a = Alphabet::from_order_spec("k1<k2<<u1<<u2", &["k1", "k2"]).unwrap();
        let names: Vec<_> = a.symbols().iter().map(|s| s.name.as_str()).collect();
        assert_eq!(names, ["k1", "Inv[k1]", "k2", "Inv[k2]", "u1", "u2"]);
        assert_eq!(a.groups(), 3);
        assert_eq!(a.kind(1), SymbolKind::InverseOf(0));
        assert_eq!(a.inverse_of(2), Some(3));
        assert!(a.is_unknown(4));
        assert_eq!(a.to_order_spec(), "k1<Inv[k1]<k2<Inv[k2]<<u1<<u2");
        let again = Alphabet::from_order_spec(&a.to_order_spec(), &[]).unwrap();
        assert_eq!(again, a);
    }

    #[test]
    fn rejects_bad_alphabets() {
        assert!(Alphabet::from_order_spec("a<a", &[]).is_err());
        assert!(Alphabet::from_order_spec("a<<Inv[a]", &[]).is_err());
        assert!(Alphabet::from_order_spec("a<b<<", &[]).is_err());
        assert!(Alphabet::from_order_spec("a<1b", &[]).is_err());
        assert!(Alphabet::from_order_spec("a", &["b"]).is_err());
        let bad = vec![
            Symbol { name: "x".into(), kind: SymbolKind::Known, group: 1 },
        ];
        assert!(Alphabet::new(bad).is_err());
        let orphan = vec![
            Symbol { name: "x".into(), kind: SymbolKind::Unknown, group: 0 },
            Symbol { name: "Inv[x]".into(), kind: SymbolKind::InverseOf(0), group: 0 },
        ];
        assert!(Alphabet::new(orphan).is_err());
    }

    #[test]
    fn unknown_override() {
        let a = Alphabet::from_order_spec("x<y<z", &[]).unwrap().with_unknowns(&["z"]).unwrap();
        assert_eq!(a.unknowns().collect::<Vec<_>>(), [2]);
        assert_eq!(a.knowns().collect::<Vec<_>>(), [0, 1]);
    }
}
