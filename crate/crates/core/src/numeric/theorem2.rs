//! Direct numeric solution of the central 3×3 problem.

use std::collections::BTreeMap;

use crate::fixtures::{central_matrices, central_order};
use crate::order::OrderKind;

use super::assignment::{BlockAssignment, Matrix};
use super::eval::{checked_inverse, normalized, rcond, MIN_RCOND};
use super::verify::{verify_completion, CompletionResiduals};
use super::NumericError;

/// The seven unknown blocks and the checks made on the way.
#[derive(Clone, Debug)]
pub struct Theorem2Solution {
    pub unknowns: BTreeMap<String, Matrix>,
    /// `z` from the left-hand formula and from the right-hand one.
    pub z_left: Matrix,
    pub z_right: Matrix,
    /// Normalized residuals of the three compatibility conditions.
    pub compat: [f64; 3],
    pub residuals: CompletionResiduals,
}

impl Theorem2Solution {
    /// Relative disagreement between the two formulas for `z`.
    pub fn z_agreement(&self) -> f64 {
        normalized(&(&self.z_left - &self.z_right), self.z_right.amax())
    }
}

/// Known names `a, …, k` and unknown names `t, …, z` in the order the
/// canonical labeling of the central configuration numbers them.
pub const CENTRAL_KNOWN_LABELS: [&str; 11] = ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"];
pub const CENTRAL_UNKNOWN_LABELS: [&str; 7] = ["t", "u", "v", "w", "x", "y", "z"];

/// Renames blocks `k1, …, k11` and `u1, …, u7` of the canonically labeled
/// central configuration to the letter names. Other names pass through.
pub fn central_names_from_canonical(assignment: &BlockAssignment) -> BlockAssignment {
    let mut out = BlockAssignment::new(assignment.m());
    out.tolerance = assignment.tolerance;
    for (name, block) in assignment.blocks() {
        let renamed = canonical_index(name, 'k', &CENTRAL_KNOWN_LABELS)
            .or_else(|| canonical_index(name, 'u', &CENTRAL_UNKNOWN_LABELS))
            .unwrap_or(name);
        out.insert(renamed, block.clone()).expect("same size");
    }
    out
}

fn canonical_index<'a>(name: &str, prefix: char, labels: &[&'a str]) -> Option<&'a str> {
    let i: usize = name.strip_prefix(prefix)?.parse().ok()?;
    labels.get(i.checked_sub(1)?).copied()
}

fn maxabs(ms: &[&Matrix]) -> f64 {
    ms.iter().map(|m| m.amax()).fold(0.0, f64::max)
}

/// `z − zez − zdg − jbz + kci − jag`, with the largest term for scaling.
fn quadratic(z: &Matrix, k: &Knowns) -> f64 {
    let terms = [
        z.clone(),
        z * &k.e * z,
        z * &k.d * &k.g,
        &k.j * &k.b * z,
        &k.k * &k.c * &k.i,
        &k.j * &k.a * &k.g,
    ];
    let r = &terms[0] - &terms[1] - &terms[2] - &terms[3] + &terms[4] - &terms[5];
    normalized(&r, maxabs(&terms.iter().collect::<Vec<_>>()))
}

struct Knowns {
    a: Matrix,
    b: Matrix,
    c: Matrix,
    d: Matrix,
    e: Matrix,
    f: Matrix,
    g: Matrix,
    h: Matrix,
    i: Matrix,
    j: Matrix,
    k: Matrix,
}

/// Solves the central problem for knowns `a, …, k`.
///
/// Requires every known and the Schur complement `e − d a⁻¹ b` of the outer
/// corner block `[[a, b], [d, e]]` to be invertible. Fails with
/// [`NumericError::Incompatible`] when a compatibility condition is violated
/// beyond `assignment.tolerance`.
///
/// Blocks named `k1, …, k11` are accepted in place of `a, …, k`.
pub fn solve_theorem2(assignment: &BlockAssignment) -> Result<Theorem2Solution, NumericError> {
    let renamed;
    let assignment = if assignment.get("a").is_none() && assignment.get("k1").is_some() {
        renamed = central_names_from_canonical(assignment);
        &renamed
    } else {
        assignment
    };
    let tol = assignment.tolerance;
    let g = |n: &str| assignment.require(n).cloned();
    let k = Knowns {
        a: g("a")?,
        b: g("b")?,
        c: g("c")?,
        d: g("d")?,
        e: g("e")?,
        f: g("f")?,
        g: g("g")?,
        h: g("h")?,
        i: g("i")?,
        j: g("j")?,
        k: g("k")?,
    };
    let m = assignment.m();
    let inv = |n: &str, x: &Matrix| checked_inverse(n, x);
    let (ai, bi, ci, di, fi, hi, ii, ki) = (
        inv("a", &k.a)?,
        inv("b", &k.b)?,
        inv("c", &k.c)?,
        inv("d", &k.d)?,
        inv("f", &k.f)?,
        inv("h", &k.h)?,
        inv("i", &k.i)?,
        inv("k", &k.k)?,
    );

    let schur = &k.e - &k.d * &ai * &k.b;
    let s1 = &ai * &k.b - &di * &k.e;
    let s2 = &k.d * &ai - &k.e * &bi;
    if rcond(&schur) < MIN_RCOND || rcond(&s1) < MIN_RCOND || rcond(&s2) < MIN_RCOND {
        return Err(NumericError::SingularOuter);
    }
    let s1i = inv("a⁻¹b − d⁻¹e", &s1)?;
    let s2i = inv("da⁻¹ − eb⁻¹", &s2)?;

    let p = -(&ai * &hi * &k.i) + &ai * &k.b * &k.j * &hi * &k.i - &di - &di * &k.e * &k.j * &hi * &k.i;
    let q = -(&k.k * &fi * &ai) + &k.k * &fi * &k.g * &k.d * &ai - &bi - &k.k * &fi * &k.g * &k.e * &bi;

    let lhs = &p * &s2;
    let rhs = &s1 * &q;
    let cc1 = normalized(&(&lhs - &rhs), maxabs(&[&lhs, &rhs]));
    let z_right = &s1i * &p;
    let z_left = &q * &s2i;
    let cc2 = quadratic(&z_left, &k);
    let cc3 = quadratic(&z_right, &k);
    let compat = [cc1, cc2, cc3];
    for (idx, r) in compat.iter().enumerate() {
        if !(*r <= tol) {
            return Err(NumericError::Incompatible { condition: format!("compatibility condition {}", idx + 1), residual: *r });
        }
    }

    let z = z_right.clone();
    let mut out = BTreeMap::new();
    out.insert("t".to_string(), -(&k.a * &k.g * &ii) - &k.b * &z * &ii);
    out.insert("u".to_string(), -(&ki * &k.j * &k.a) - &ki * &z * &k.d);
    out.insert("v".to_string(), &ki - &ki * &k.j * &k.b - &ki * &z * &k.e);
    out.insert("w".to_string(), &ii - &k.d * &k.g * &ii - &k.e * &z * &ii);
    out.insert("x".to_string(), &ai + &k.f * &ki * &k.j - &k.g * &k.d * &ai + &k.f * &ki * &z * &k.d * &ai);
    out.insert(
        "y".to_string(),
        &ci * &ki * &k.j * &k.a * &k.f + &ci * &ki * &k.j * &k.b * &k.k + &ci * &ki * &z * &k.d * &k.f + &ci * &ki * &z * &k.e * &k.k,
    );
    out.insert("z".to_string(), z);
    debug_assert!(out.values().all(|x| x.nrows() == m));

    let order = central_order(OrderKind::MultiGradedLex);
    let residuals = verify_completion(&central_matrices(&order), assignment, &out)?;
    Ok(Theorem2Solution { unknowns: out, z_left, z_right, compat, residuals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::harvest;

    #[test]
    fn recovers_harvested_blocks() {
        let o = central_order(OrderKind::MultiGradedLex);
        let h = harvest(&central_matrices(&o), 2, 11).unwrap();
        let sol = solve_theorem2(&h.knowns).unwrap();
        assert!(sol.residuals.within(1e-8), "{:?}", sol.residuals);
        assert!(sol.z_agreement() < 1e-8);
        for (name, truth) in &h.unknowns {
            let got = &sol.unknowns[name];
            assert!((got - truth).amax() < 1e-6 * truth.amax().max(1.0), "{name}");
        }
    }

    #[test]
    fn perturbed_input_is_incompatible() {
        let o = central_order(OrderKind::MultiGradedLex);
        let mut h = harvest(&central_matrices(&o), 2, 12).unwrap();
        h.knowns.get_mut("j").unwrap()[(0, 0)] += 1.0;
        assert!(matches!(solve_theorem2(&h.knowns), Err(NumericError::Incompatible { .. })));
    }
}

#[cfg(test)]
mod canonical_tests {
    use super::*;
    use crate::completion::make_symbolic_matrices;
    use crate::fixtures::central_configuration;
    use crate::numeric::harvest;

    #[test]
    fn canonical_labels_are_accepted() {
        let mats = make_symbolic_matrices(&central_configuration());
        let h = harvest(&mats, 2, 3).unwrap();
        let sol = solve_theorem2(&h.knowns).unwrap();
        assert!(sol.residuals.within(1e-8));
        assert!((&sol.unknowns["z"] - &h.unknowns["u7"]).amax() < 1e-8);
        assert!((&sol.unknowns["t"] - &h.unknowns["u1"]).amax() < 1e-8);
    }
}
