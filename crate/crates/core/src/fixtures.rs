//! The worked problems: the 2×2 sample with its known answer, and the
//! 3×3 central problem with its nine solution relations.

use std::sync::Arc;

use crate::completion::{Configuration, ProblemRelations, SymbolicMatrices};
use crate::order::{MonomialOrder, OrderKind};
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;

fn parse_all(order: &Arc<MonomialOrder>, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| parse_polynomial(s, order).expect("fixture parses")).collect()
}

/// `k1 < k2 < k3 < k4 ≪ u4 ≪ u3 ≪ u2 ≪ u1`, inverses beside their base.
pub fn sample_order(kind: OrderKind) -> Arc<MonomialOrder> {
    MonomialOrder::from_spec(kind, "k1<k2<k3<k4<<u4<<u3<<u2<<u1", &["k1", "k2", "k3", "k4"]).expect("valid spec")
}

/// `A = [[k1, u2], [u1, k2]]`, `B = [[u3, k4], [k3, u4]]`.
pub fn sample_matrices(order: &Arc<MonomialOrder>) -> SymbolicMatrices {
    SymbolicMatrices::named(order, &["k1", "u2", "u1", "k2"], &["u3", "k4", "k3", "u4"]).expect("names in order")
}

pub fn sample_relations(order: &Arc<MonomialOrder>) -> ProblemRelations {
    sample_matrices(order).relations()
}

/// The known answer: one equation in `u4` and a formula for each of
/// `u1`, `u2`, `u3`.
pub fn sample_answer(order: &Arc<MonomialOrder>) -> Vec<Polynomial> {
    parse_all(
        order,
        &[
            "u4*k2*u4 - u4 - k3*k1*k4",
            "u1 - Inv[k4] + k2*u4*Inv[k4]",
            "u2 - Inv[k3] + Inv[k3]*u4*k2",
            "u3 - k4*k2*u4*Inv[k4]*Inv[k1]",
        ],
    )
}

pub fn sample_configuration() -> Configuration {
    Configuration::parse("kuukukku").expect("valid")
}

pub const CENTRAL_KNOWNS: [&str; 11] = ["a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"];
pub const CENTRAL_UNKNOWNS: [&str; 7] = ["z", "t", "u", "v", "w", "x", "y"];

/// `a < … < k ≪ z ≪ t ≪ u ≪ v ≪ w ≪ x ≪ y`, inverses beside each known.
pub fn central_order(kind: OrderKind) -> Arc<MonomialOrder> {
    let spec = format!("{}<<{}", CENTRAL_KNOWNS.join("<"), CENTRAL_UNKNOWNS.join("<<"));
    MonomialOrder::from_spec(kind, &spec, &CENTRAL_KNOWNS).expect("valid spec")
}

/// `A = [[a, t, b], [u, c, v], [d, w, e]]`, `B = [[x, f, g], [h, y, i], [j, k, z]]`.
pub fn central_matrices(order: &Arc<MonomialOrder>) -> SymbolicMatrices {
    SymbolicMatrices::named(order, &["a", "t", "b", "u", "c", "v", "d", "w", "e"], &["x", "f", "g", "h", "y", "i", "j", "k", "z"])
        .expect("names in order")
}

pub fn central_relations(order: &Arc<MonomialOrder>) -> ProblemRelations {
    central_matrices(order).relations()
}

pub fn central_configuration() -> Configuration {
    Configuration::parse("kukukukuk ukkkukkku").expect("valid")
}

/// The equation in `z` alone.
pub const CENTRAL_QUADRATIC: &str = "z - z*e*z - z*d*g - j*b*z + k*c*i - j*a*g";

/// The nine solution relations: three in `z` and knowns, then one formula
/// each for `t, u, v, w, x, y`.
pub const CENTRAL_ANSWER: [&str; 9] = [
    CENTRAL_QUADRATIC,
    "Inv[a]*Inv[h] - Inv[a]*b*j*Inv[h] + Inv[a]*b*z*Inv[i] + Inv[d]*Inv[i] + Inv[d]*e*j*Inv[h] - Inv[d]*e*z*Inv[i]",
    "Inv[f]*Inv[a] - Inv[f]*g*d*Inv[a] + Inv[k]*z*d*Inv[a] + Inv[k]*Inv[b] + Inv[f]*g*e*Inv[b] - Inv[k]*z*e*Inv[b]",
    "t + a*g*Inv[i] + b*z*Inv[i]",
    "u + Inv[k]*j*a + Inv[k]*z*d",
    "v - Inv[k] + Inv[k]*j*b + Inv[k]*z*e",
    "w - Inv[i] + d*g*Inv[i] + e*z*Inv[i]",
    "x - Inv[a] - f*Inv[k]*j + g*d*Inv[a] - f*Inv[k]*z*d*Inv[a]",
    "y - Inv[c]*Inv[k]*j*a*f - Inv[c]*Inv[k]*j*b*k - Inv[c]*Inv[k]*z*d*f - Inv[c]*Inv[k]*z*e*k",
];

pub fn central_answer(order: &Arc<MonomialOrder>) -> Vec<Polynomial> {
    parse_all(order, &CENTRAL_ANSWER)
}

/// A configuration whose best form found is triangular rather than
/// decoupled.
pub fn backsolvable_configuration() -> Configuration {
    Configuration::parse("kkkkkkuuu kkukukkuu").expect("valid")
}

/// A configuration with an equation in unknowns only.
pub fn strongly_undetermined_configuration() -> Configuration {
    Configuration::parse("uuukkkkkk kkukuukku").expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_masks_agree() {
        let o = central_order(OrderKind::MultiGradedLex);
        assert_eq!(central_matrices(&o).configuration(), central_configuration());
        assert_eq!(central_answer(&o).len(), 9);
        let s = sample_order(OrderKind::MultiGradedLex);
        assert_eq!(sample_matrices(&s).configuration(), sample_configuration());
    }
}
