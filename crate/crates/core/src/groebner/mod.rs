//! Replacement rules, reduction and partial Gröbner bases.

mod basis;
mod reduce;
mod rules;
mod small;

pub use basis::{
    default_max_degree, extract_subalgebra, interreduce_polys, is_member, make_partial_gb, make_partial_gb_with,
    obstructions_between, GbOptions, Membership, Obstruction, PartialBasis,
};
pub use reduce::{reduce, reduce_steps, Reduction};
pub use rules::{poly_to_rule, RewriteRule, RuleSet};
pub use small::{small_basis, small_basis_with};
