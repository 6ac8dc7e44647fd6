//! The reduction chain
//! `3-SAT -> 3-Coloring -> D-DCnnC -> D-DCnnB -> arity-4 Permutation CSP`
//! and the side reduction from `n x n` Clique to arity 6.

pub mod certificate;
pub mod clique_to_biclique;
pub mod coloring_to_clique;
pub mod dummies;
pub mod gray;
pub mod partition;
pub mod perm4;
pub mod perm6;
pub mod sat_to_coloring;

pub use certificate::{map_selection_to_ordering, Lineage, ReductionCertificate, ReductionKind, Role};
pub use clique_to_biclique::{map_biclique_to_clique, map_clique_to_biclique, reduce_dcnnc_to_dcnnb};
pub use coloring_to_clique::{
    digits_for, map_coloring_to_selection, map_selection_to_coloring, reduce_coloring_to_dcnnc,
    reduce_coloring_to_dcnnc_capped, CliqueLineage, CliqueReduction, DEFAULT_ROW_CAP,
};
pub use dummies::{sufficient_dummies_perm4, sufficient_dummies_perm6};
pub use gray::{ternary_gray, GrayCode, MAX_GRAY_DIGITS};
pub use partition::distance3_partition;
pub use perm4::reduce_dcnnb_to_perm4;
pub use perm6::reduce_clique_to_perm6;
pub use sat_to_coloring::{
    map_assignment_to_coloring, map_coloring_to_assignment, reduce_sat_to_coloring,
    ColoringReduction, SatColoringLineage,
};
