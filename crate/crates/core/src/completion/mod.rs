//! Block matrix inverse completion problems: configurations, their
//! relations, and equivalence under block permutations.

mod config;
mod equivalence;
mod relations;

pub use config::Configuration;
pub use equivalence::{
    class_count, class_representative, enumerate_representatives, equivalence_class, BlockPermutation,
    Representatives,
};
pub use relations::{
    build_relations, canonical_order, inverse_relations, is_strongly_undetermined, is_strongly_undetermined_by_lines,
    make_symbolic_matrices, make_symbolic_matrices_with, ProblemRelations, SymbolicMatrices,
};
