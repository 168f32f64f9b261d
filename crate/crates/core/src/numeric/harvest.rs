use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::SymbolKind;
use crate::completion::SymbolicMatrices;

use super::assignment::{BlockAssignment, Matrix};
use super::eval::rcond;
use super::NumericError;

/// Reciprocal condition number every harvested block must exceed.
pub const HARVEST_RCOND: f64 = 1e-6;
pub const HARVEST_ATTEMPTS: usize = 200;

/// A consistent instance of a completion problem: knowns and the unknowns
/// that complete them.
#[derive(Clone, Debug)]
pub struct Harvest {
    pub knowns: BlockAssignment,
    pub unknowns: BTreeMap<String, Matrix>,
    pub a: Matrix,
    pub b: Matrix,
}

/// Draws a random `nm × nm` matrix `A` with entries uniform in `[-1, 1]`,
/// sets `B = A⁻¹`, and reads every block off by name. Draws are repeated
/// until `A` and every known block are well conditioned. Deterministic in
/// `seed`.
pub fn harvest(matrices: &SymbolicMatrices, m: usize, seed: u64) -> Result<Harvest, NumericError> {
    if m == 0 {
        return Err(NumericError::Harvest("block size must be positive".into()));
    }
    let n = matrices.n();
    let size = n * m;
    let alpha = matrices.order().alphabet();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'draw: for _ in 0..HARVEST_ATTEMPTS {
        let a = Matrix::from_fn(size, size, |_, _| rng.gen_range(-1.0..=1.0));
        if rcond(&a) < HARVEST_RCOND {
            continue;
        }
        let Some(b) = a.clone().try_inverse() else { continue };
        let mut knowns = BlockAssignment::new(m);
        let mut unknowns = BTreeMap::new();
        for (big, is_a) in [(&a, true), (&b, false)] {
            for r in 0..n {
                for c in 0..n {
                    let (s, name) =
                        if is_a { (matrices.a(r, c), matrices.name_a(r, c)) } else { (matrices.b(r, c), matrices.name_b(r, c)) };
                    let block = big.view((r * m, c * m), (m, m)).into_owned();
                    if alpha.kind(s) == SymbolKind::Known {
                        if alpha.inverse_of(s).is_some() && rcond(&block) < HARVEST_RCOND {
                            continue 'draw;
                        }
                        knowns.insert(name, block)?;
                    } else {
                        unknowns.insert(name.to_string(), block);
                    }
                }
            }
        }
        return Ok(Harvest { knowns, unknowns, a, b });
    }
    Err(NumericError::Harvest(format!("no well-conditioned draw in {HARVEST_ATTEMPTS} attempts")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{central_matrices, central_order};
    use crate::order::OrderKind;

    #[test]
    fn blocks_come_from_inverse_pair() {
        let o = central_order(OrderKind::MultiGradedLex);
        let h = harvest(&central_matrices(&o), 3, 7).unwrap();
        assert_eq!(h.knowns.blocks().len(), 11);
        assert_eq!(h.unknowns.len(), 7);
        assert!((&h.a * &h.b - Matrix::identity(9, 9)).amax() < 1e-10);
        assert_eq!(h.knowns.get("a").unwrap(), &h.a.view((0, 0), (3, 3)).into_owned());
        assert_eq!(&h.unknowns["z"], &h.b.view((6, 6), (3, 3)).into_owned());
        let again = harvest(&central_matrices(&o), 3, 7).unwrap();
        assert_eq!(again.a, h.a);
    }
}
