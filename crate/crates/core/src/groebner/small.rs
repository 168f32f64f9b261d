use std::sync::Arc;

use crate::error::Result;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

use super::basis::{make_partial_gb_with, GbOptions};

/// Walks `gens` in order, keeping a generator only when the partial basis
/// of the generators kept so far does not reduce it to zero. The answer
/// depends on the order of `gens`.
pub fn small_basis(gens: &[Polynomial], order: &Arc<MonomialOrder>, gb_iters: usize) -> Result<Vec<Polynomial>> {
    small_basis_with(gens, order, &GbOptions::new(gb_iters))
}

pub fn small_basis_with(gens: &[Polynomial], order: &Arc<MonomialOrder>, opts: &GbOptions) -> Result<Vec<Polynomial>> {
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut basis = None;
    for g in gens {
        let g = g.with_order(order)?;
        if g.is_zero() {
            continue;
        }
        if let Some(gb) = &basis {
            if super::basis::PartialBasis::reduce(gb, &g).is_zero() {
                continue;
            }
        }
        kept.push(g);
        let mut o = opts.clone();
        if o.max_degree.is_none() {
            o.max_degree = Some(super::basis::default_max_degree(gens));
        }
        basis = Some(make_partial_gb_with(&kept, order, &o)?);
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::OrderKind;
    use crate::parse::parse_polynomial;

    fn run(src: &[&str]) -> Vec<String> {
        let o = MonomialOrder::from_spec(OrderKind::GradedLex, "x", &[]).unwrap();
        let gens: Vec<_> = src.iter().map(|s| parse_polynomial(s, &o).unwrap()).collect();
        small_basis(&gens, &o, 2).unwrap().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn sequence_dependence() {
        assert_eq!(run(&["1", "x", "x*x", "x*x*x"]), ["1"]);
        assert_eq!(run(&["x*x*x", "x*x", "x", "1"]), ["x*x*x", "x*x", "x", "1"]);
        assert_eq!(run(&["x*x - 2"]), ["x*x - 2"]);
    }
}
