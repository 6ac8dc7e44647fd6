//! Condition checkers, closed-form counts and witness mappers.

pub mod conditions;
pub mod counts;

pub use conditions::{
    check_biclique_structure, check_regularity, check_stability, ConditionId, ConditionReport,
    ConditionViolation, RegularityReport, StabilityReport,
};
pub use counts::{
    binomial, convenient_count_perm4, convenient_count_perm6, structural_count,
    structural_count_perm6, target_perm4, target_perm6,
};

/// Witness mappers between consecutive levels of the reduction chain.
pub mod mappers {
    pub use crate::reductions::{
        map_assignment_to_coloring, map_biclique_to_clique, map_clique_to_biclique,
        map_coloring_to_assignment, map_coloring_to_selection, map_selection_to_coloring,
        map_selection_to_ordering,
    };
}
