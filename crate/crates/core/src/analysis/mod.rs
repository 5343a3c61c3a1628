//! Reductions, simplicity probes and singular-vector search.

pub mod claim;
pub mod conditions;
pub mod finite;
pub mod probe;
pub mod report;
pub mod singular;

pub use claim::{claim_reduce, claim_reduce_at, claim_step, descend_at, reduce_with, ReductionMode};
pub use conditions::{
    check_conditions_ab, check_gv_vanishing, gv_violation, local_nilpotency_check,
    slice_conditions, whittaker_simplicity_criterion, BaseSlice, LevelConditions, SliceConditions,
};
pub use finite::{finite_simple_check, DEFAULT_BUDGET};
pub use probe::{simplicity_probe, spin_within_cap, verify_invariant, ProbeOptions, Spin};
pub use report::{
    format_dense, ReductionStep, ReductionTrace, SimplicityReport, Verdict, Witness, WitnessVector,
};
pub use singular::{level_basis, pairing_matrix, singular_vectors, singular_vectors_in, verma_for_level};
