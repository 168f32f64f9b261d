use std::sync::Arc;

use crate::alphabet::{Sym, SymbolKind};
use crate::error::{AlgebraError, Result};
use crate::order::{MonomialOrder, OrderKind};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::word::Word;

use super::config::Configuration;

/// Two `n × n` matrices whose entries are symbols of one order.
#[derive(Clone, Debug)]
pub struct SymbolicMatrices {
    n: usize,
    a: Vec<Sym>,
    b: Vec<Sym>,
    order: Arc<MonomialOrder>,
}

impl SymbolicMatrices {
    /// Matrices with entries named explicitly, row-major. Every name must be
    /// in `order`'s alphabet.
    pub fn named(order: &Arc<MonomialOrder>, a: &[&str], b: &[&str]) -> Result<Self> {
        let n = (a.len() as f64).sqrt().round() as usize;
        if n == 0 || n * n != a.len() || b.len() != a.len() {
            return Err(AlgebraError::InvalidConfiguration("matrices must be square and of equal size".into()));
        }
        let look = |name: &&str| {
            order
                .alphabet()
                .lookup(name)
                .ok_or_else(|| AlgebraError::UnknownSymbol { name: name.to_string(), offset: 0 })
        };
        let a = a.iter().map(look).collect::<Result<_>>()?;
        let b = b.iter().map(look).collect::<Result<_>>()?;
        Ok(SymbolicMatrices { n, a, b, order: order.clone() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &Arc<MonomialOrder> {
        &self.order
    }

    pub fn a(&self, r: usize, c: usize) -> Sym {
        self.a[r * self.n + c]
    }

    pub fn b(&self, r: usize, c: usize) -> Sym {
        self.b[r * self.n + c]
    }

    pub fn name_a(&self, r: usize, c: usize) -> &str {
        self.order.alphabet().name(self.a(r, c))
    }

    pub fn name_b(&self, r: usize, c: usize) -> &str {
        self.order.alphabet().name(self.b(r, c))
    }

    /// Symbols that are known, in first-appearance order.
    pub fn knowns(&self) -> Vec<Sym> {
        self.entries().filter(|&s| self.order.alphabet().kind(s) == SymbolKind::Known).collect()
    }

    pub fn unknowns(&self) -> Vec<Sym> {
        self.entries().filter(|&s| self.order.alphabet().is_unknown(s)).collect()
    }

    fn entries(&self) -> impl Iterator<Item = Sym> + '_ {
        let mut seen = Vec::new();
        self.a.iter().chain(&self.b).copied().filter(move |s| {
            let fresh = !seen.contains(s);
            seen.push(*s);
            fresh
        })
    }

    /// The configuration these matrices realize.
    pub fn configuration(&self) -> Configuration {
        let alpha = self.order.alphabet();
        Configuration::new(
            self.n,
            self.a.iter().map(|&s| alpha.is_unknown(s)).collect(),
            self.b.iter().map(|&s| alpha.is_unknown(s)).collect(),
        )
        .expect("sizes agree")
    }

    /// Entry `(i, j)` of `XY − δ_ij`, where `X, Y` are `A, B` or `B, A`.
    pub fn product_entry(&self, ab: bool, i: usize, j: usize) -> Polynomial {
        let (x, y) = if ab { (&self.a, &self.b) } else { (&self.b, &self.a) };
        let n = self.n;
        let mut terms: Vec<(Rational, Word)> =
            (0..n).map(|k| (Rational::ONE, Word::from_letters(&[x[i * n + k], y[k * n + j]]))).collect();
        if i == j {
            terms.push((-Rational::ONE, Word::empty()));
        }
        Polynomial::from_terms(&self.order, terms).expect("symbols belong to the order")
    }

    /// The block relations and the inverse relations of every known.
    pub fn relations(&self) -> ProblemRelations {
        let n = self.n;
        let mut products = Vec::with_capacity(2 * n * n);
        for ab in [true, false] {
            for i in 0..n {
                for j in 0..n {
                    products.push(self.product_entry(ab, i, j));
                }
            }
        }
        let inverses = inverse_relations(&self.order, &self.knowns());
        ProblemRelations { matrices: self.clone(), products, inverses }
    }
}

/// `k·k⁻¹ − 1` and `k⁻¹·k − 1` for each listed known that has an inverse.
pub fn inverse_relations(order: &Arc<MonomialOrder>, knowns: &[Sym]) -> Vec<Polynomial> {
    let alpha = order.alphabet();
    let mut out = Vec::with_capacity(2 * knowns.len());
    for &k in knowns {
        if let Some(inv) = alpha.inverse_of(k) {
            for w in [[k, inv], [inv, k]] {
                let terms = [(Rational::ONE, Word::from_letters(&w)), (-Rational::ONE, Word::empty())];
                out.push(Polynomial::from_terms(order, terms).expect("symbols belong to the order"));
            }
        }
    }
    out
}

/// The ideal generators of a completion problem.
#[derive(Clone, Debug)]
pub struct ProblemRelations {
    pub matrices: SymbolicMatrices,
    /// Entries of `AB − I` then `BA − I`, row-major.
    pub products: Vec<Polynomial>,
    pub inverses: Vec<Polynomial>,
}

impl ProblemRelations {
    pub fn order(&self) -> &Arc<MonomialOrder> {
        self.matrices.order()
    }

    /// Products followed by inverse relations.
    pub fn all(&self) -> Vec<Polynomial> {
        self.products.iter().chain(&self.inverses).cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.products.len() + self.inverses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The canonical order for a configuration: `k1 < Inv[k1] < k2 < … ≪ u1 ≪ u2 ≪ …`.
pub fn canonical_order(known: usize, unknown: usize, kind: OrderKind) -> Arc<MonomialOrder> {
    let ks: Vec<String> = (1..=known).map(|i| format!("k{i}")).collect();
    let us: Vec<String> = (1..=unknown).map(|i| format!("u{i}")).collect();
    let mut spec = ks.join("<");
    for u in &us {
        if !spec.is_empty() {
            spec.push_str("<<");
        }
        spec.push_str(u);
    }
    let inv: Vec<&str> = ks.iter().map(String::as_str).collect();
    MonomialOrder::from_spec(kind, &spec, &inv).expect("generated spec is valid")
}

/// Labels knowns `k1, k2, …` and unknowns `u1, u2, …` scanning `A` then `B`
/// row-major, under the canonical multigraded order.
pub fn make_symbolic_matrices(cfg: &Configuration) -> SymbolicMatrices {
    make_symbolic_matrices_with(cfg, OrderKind::MultiGradedLex)
}

pub fn make_symbolic_matrices_with(cfg: &Configuration, kind: OrderKind) -> SymbolicMatrices {
    let order = canonical_order(cfg.known_count(), cfg.unknown_count(), kind);
    let (mut k, mut u) = (0, 0);
    let mut label = |unknown: bool| {
        if unknown {
            u += 1;
            format!("u{u}")
        } else {
            k += 1;
            format!("k{k}")
        }
    };
    let a: Vec<String> = cfg.mask_a().iter().map(|&x| label(x)).collect();
    let b: Vec<String> = cfg.mask_b().iter().map(|&x| label(x)).collect();
    let a: Vec<&str> = a.iter().map(String::as_str).collect();
    let b: Vec<&str> = b.iter().map(String::as_str).collect();
    SymbolicMatrices::named(&order, &a, &b).expect("labels come from the order")
}

pub fn build_relations(cfg: &Configuration) -> ProblemRelations {
    make_symbolic_matrices(cfg).relations()
}

/// Whether some entry of `AB` or `BA` involves unknowns only, found by
/// expanding every product entry.
pub fn is_strongly_undetermined(cfg: &Configuration) -> bool {
    let n = cfg.n();
    (0..n).any(|i| {
        (0..n).any(|j| {
            (0..n).all(|k| cfg.a_unknown(i, k) && cfg.b_unknown(k, j))
                || (0..n).all(|k| cfg.b_unknown(i, k) && cfg.a_unknown(k, j))
        })
    })
}

/// The same test phrased as an all-unknown row of one factor meeting an
/// all-unknown column of the other.
pub fn is_strongly_undetermined_by_lines(cfg: &Configuration) -> bool {
    let n = cfg.n();
    let row = |m: &dyn Fn(usize, usize) -> bool, i: usize| (0..n).all(|k| m(i, k));
    let col = |m: &dyn Fn(usize, usize) -> bool, j: usize| (0..n).all(|k| m(k, j));
    let a = |r, c| cfg.a_unknown(r, c);
    let b = |r, c| cfg.b_unknown(r, c);
    let hit = |x: &dyn Fn(usize, usize) -> bool, y: &dyn Fn(usize, usize) -> bool| {
        (0..n).any(|i| row(x, i)) && (0..n).any(|j| col(y, j))
    };
    hit(&a, &b) || hit(&b, &a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_labels_are_row_major() {
        let m = make_symbolic_matrices(&Configuration::parse("kuukukku").unwrap());
        let names = |f: &dyn Fn(usize, usize) -> String| (0..4).map(|i| f(i / 2, i % 2)).collect::<Vec<_>>();
        assert_eq!(names(&|r, c| m.name_a(r, c).to_string()), ["k1", "u1", "u2", "k2"]);
        assert_eq!(names(&|r, c| m.name_b(r, c).to_string()), ["u3", "k3", "k4", "u4"]);
        assert_eq!(m.order().to_spec(), "k1<Inv[k1]<k2<Inv[k2]<k3<Inv[k3]<k4<Inv[k4]<<u1<<u2<<u3<<u4");
    }

    #[test]
    fn one_by_one_all_known() {
        let rel = build_relations(&Configuration::all_known(1));
        let text: Vec<String> = rel.all().iter().map(|p| p.to_string()).collect();
        assert_eq!(
            text,
            ["k1*k2 - 1", "k2*k1 - 1", "k1*Inv[k1] - 1", "Inv[k1]*k1 - 1", "k2*Inv[k2] - 1", "Inv[k2]*k2 - 1"]
        );
    }

    #[test]
    fn counts() {
        let cfg = Configuration::parse("kukukkkkk kkukkukku").unwrap();
        let rel = build_relations(&cfg);
        assert_eq!(rel.len(), 18 + 2 * cfg.known_count());
        let words: usize = rel.products.iter().map(|p| p.terms().iter().filter(|t| t.word.len() == 2).count()).sum();
        assert_eq!(words, 2 * 27);
    }

    #[test]
    fn strongly_undetermined_entry() {
        let cfg = Configuration::parse("uuukkkkkk kkukuukku").unwrap();
        assert!(is_strongly_undetermined(&cfg));
        assert!(is_strongly_undetermined_by_lines(&cfg));
        let m = make_symbolic_matrices(&cfg);
        assert_eq!(m.product_entry(true, 0, 2).to_string(), "u3*u7 + u2*u6 + u1*u4");
        let all_known = Configuration::all_known(3);
        assert!(!is_strongly_undetermined(&all_known));
    }
}
