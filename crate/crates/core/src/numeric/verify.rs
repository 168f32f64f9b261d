use std::collections::BTreeMap;

use crate::completion::SymbolicMatrices;

use super::assignment::{BlockAssignment, Matrix};
use super::NumericError;

/// Normalized residuals of `AB − I` and `BA − I`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompletionResiduals {
    pub ab: f64,
    pub ba: f64,
}

impl CompletionResiduals {
    pub fn max(&self) -> f64 {
        self.ab.max(self.ba)
    }

    pub fn within(&self, tol: f64) -> bool {
        self.max() <= tol
    }
}

/// Assembles `A` and `B` from knowns and unknowns.
pub fn assemble(
    matrices: &SymbolicMatrices,
    knowns: &BlockAssignment,
    unknowns: &BTreeMap<String, Matrix>,
) -> Result<(Matrix, Matrix), NumericError> {
    let n = matrices.n();
    let m = knowns.m();
    let mut a = Matrix::zeros(n * m, n * m);
    let mut b = Matrix::zeros(n * m, n * m);
    let get = |name: &str| {
        unknowns.get(name).or_else(|| knowns.get(name)).ok_or_else(|| NumericError::MissingSymbol(name.to_string()))
    };
    for r in 0..n {
        for c in 0..n {
            a.view_mut((r * m, c * m), (m, m)).copy_from(get(matrices.name_a(r, c))?);
            b.view_mut((r * m, c * m), (m, m)).copy_from(get(matrices.name_b(r, c))?);
        }
    }
    Ok((a, b))
}

/// Checks `AB = I` and `BA = I`. Each residual is the largest entry of the
/// defect divided by `max(1, largest entry of A or B)`.
pub fn verify_completion(
    matrices: &SymbolicMatrices,
    knowns: &BlockAssignment,
    unknowns: &BTreeMap<String, Matrix>,
) -> Result<CompletionResiduals, NumericError> {
    let (a, b) = assemble(matrices, knowns, unknowns)?;
    let id = Matrix::identity(a.nrows(), a.ncols());
    let scale = a.amax().max(b.amax()).max(1.0);
    Ok(CompletionResiduals { ab: (&a * &b - &id).amax() / scale, ba: (&b * &a - &id).amax() / scale })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::{make_symbolic_matrices, Configuration};

    #[test]
    fn scalar_pair() {
        let mats = make_symbolic_matrices(&Configuration::all_known(1));
        let mut k = BlockAssignment::new(1);
        k.insert("k1", Matrix::from_element(1, 1, 2.0)).unwrap();
        k.insert("k2", Matrix::from_element(1, 1, 0.5)).unwrap();
        let r = verify_completion(&mats, &k, &BTreeMap::new()).unwrap();
        assert_eq!(r, CompletionResiduals { ab: 0.0, ba: 0.0 });
    }

    #[test]
    fn zeroed_unknown_fails() {
        let cfg: Configuration = "kuuk ukku".parse().unwrap();
        let mats = make_symbolic_matrices(&cfg);
        let h = crate::numeric::harvest(&mats, 3, 9).unwrap();
        assert!(verify_completion(&mats, &h.knowns, &h.unknowns).unwrap().within(1e-10));
        for name in h.unknowns.keys() {
            let mut broken = h.unknowns.clone();
            broken.get_mut(name).unwrap().fill(0.0);
            assert!(!verify_completion(&mats, &h.knowns, &broken).unwrap().within(1e-8), "{name}");
        }
    }
}
