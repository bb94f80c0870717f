//! Domino tableaux of arbitrary rank for the hyperoctahedral group: the
//! insertion correspondence, the cycle and moving-through calculus, the
//! rank-r operator family, and exhaustive cell verification at small sizes.

#![forbid(unsafe_code)]

pub mod cells;
pub mod cycles;
pub mod error;
pub mod insertion;
pub mod operators;
pub mod render;
pub mod signed_perm;
pub mod tableau;

pub use cells::{
    operator_components, operator_edges, partition_irreducible, partition_reducible,
    verify_bijectivity, verify_generation, verify_parabolic, verify_refinement, verify_stability,
    CellPartition, PartitionKind, Report,
};
pub use cycles::{
    cycle_through, cycles, extended_cycle, is_somewhat_special, move_through, move_through_pair,
    move_through_set, moved_domino, promote, special_form, Cycle, CycleKind, ExtendedCyclePair,
};
pub use error::{Error, Result, Violation};
pub use insertion::{insert_alpha, rs_inverse, rs_map, Side, TableauPair};
pub use operators::{
    applicable, apply, apply_in, apply_knuth, apply_op_tableau, apply_sc, in_applicable,
    knuth_applicable, lambda_set, sc_applicable, Operator,
};
pub use signed_perm::{
    enumerate_group, enumerate_group_capped, Root, SignedPermutation, DEFAULT_ENUMERATION_CAP,
};
pub use tableau::{
    square_kind, Domino, DominoTableau, ExtLabel, HcKind, HoleCorner, Square, SquareKind,
};
