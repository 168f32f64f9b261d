use std::collections::{BTreeMap, HashMap};

use crate::alphabet::{Sym, SymbolKind};
use crate::poly::Polynomial;

use super::assignment::{BlockAssignment, Matrix};
use super::NumericError;

/// Smallest reciprocal condition number accepted when inverting.
pub const MIN_RCOND: f64 = 1e-12;

/// Reciprocal 2-norm condition number; 0 for singular input.
pub fn rcond(a: &Matrix) -> f64 {
    let s = a.singular_values();
    let max = s.max();
    if max == 0.0 {
        return 0.0;
    }
    s.min() / max
}

/// Inverse of `a`, refusing numerically singular matrices.
pub fn checked_inverse(name: &str, a: &Matrix) -> Result<Matrix, NumericError> {
    if rcond(a) < MIN_RCOND {
        return Err(NumericError::Singular(name.to_string()));
    }
    a.clone().try_inverse().ok_or_else(|| NumericError::Singular(name.to_string()))
}

/// `max|r| / max(1, scale)`.
pub fn normalized(r: &Matrix, scale: f64) -> f64 {
    r.amax() / scale.max(1.0)
}

/// Evaluates `p` with knowns from `assignment` and unknowns from `partial`;
/// inverse symbols become numeric inverses of their base.
pub fn eval_polynomial(
    p: &Polynomial,
    assignment: &BlockAssignment,
    partial: &BTreeMap<String, Matrix>,
) -> Result<Matrix, NumericError> {
    Ok(eval_with_scale(p, assignment, partial)?.0)
}

/// The value of `p` together with the largest entry of any single
/// evaluated term, the natural scale for its residual.
pub fn eval_with_scale(
    p: &Polynomial,
    assignment: &BlockAssignment,
    partial: &BTreeMap<String, Matrix>,
) -> Result<(Matrix, f64), NumericError> {
    let m = assignment.m();
    let alpha = p.order().alphabet();
    let mut values: HashMap<Sym, Matrix> = HashMap::new();
    for s in p.symbols() {
        let v = match alpha.kind(s) {
            SymbolKind::InverseOf(base) => {
                let name = alpha.name(base);
                checked_inverse(alpha.name(s), lookup(name, assignment, partial)?)?
            }
            _ => lookup(alpha.name(s), assignment, partial)?.clone(),
        };
        values.insert(s, v);
    }
    let mut total = Matrix::zeros(m, m);
    let mut scale = 0.0f64;
    for t in p.terms() {
        let mut w = Matrix::identity(m, m);
        for s in t.word.letters() {
            w *= &values[s];
        }
        w *= t.coeff.to_f64();
        scale = scale.max(w.amax());
        total += w;
    }
    Ok((total, scale))
}

fn lookup<'a>(
    name: &str,
    assignment: &'a BlockAssignment,
    partial: &'a BTreeMap<String, Matrix>,
) -> Result<&'a Matrix, NumericError> {
    partial.get(name).or_else(|| assignment.get(name)).ok_or_else(|| NumericError::MissingSymbol(name.to_string()))
}

/// Normalized residual of the equation `p = 0`.
pub fn residual(p: &Polynomial, assignment: &BlockAssignment, partial: &BTreeMap<String, Matrix>) -> Result<f64, NumericError> {
    let (v, scale) = eval_with_scale(p, assignment, partial)?;
    Ok(normalized(&v, scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{MonomialOrder, OrderKind};
    use crate::parse::parse_polynomial;

    #[test]
    fn nilpotent_pair() {
        let o = MonomialOrder::from_spec(OrderKind::GradedLex, "k1<k2", &["k1"]).unwrap();
        let mut a = BlockAssignment::new(2);
        a.insert("k1", Matrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0])).unwrap();
        a.insert("k2", Matrix::from_row_slice(2, 2, &[0.0, 0.0, 1.0, 0.0])).unwrap();
        let p = parse_polynomial("k1*k2 + k2*k1", &o).unwrap();
        assert_eq!(eval_polynomial(&p, &a, &BTreeMap::new()).unwrap(), Matrix::identity(2, 2));
        let one = parse_polynomial("1", &o).unwrap();
        assert_eq!(eval_polynomial(&one, &a, &BTreeMap::new()).unwrap(), Matrix::identity(2, 2));
        let inv = parse_polynomial("k1*Inv[k1] - 1", &o).unwrap();
        assert!(matches!(eval_polynomial(&inv, &a, &BTreeMap::new()), Err(NumericError::Singular(_))));
        a.insert("k1", Matrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 3.0])).unwrap();
        assert!(residual(&inv, &a, &BTreeMap::new()).unwrap() < 1e-15);
        let missing = parse_polynomial("Inv[k1]*k2", &o).unwrap();
        assert!(eval_polynomial(&missing, &BlockAssignment::new(2), &BTreeMap::new()).is_err());
    }
}
