//! Masking toolkit for two-qubit quantum states.
//!
//! A qubit set is masked by a unitary when, after the unitary acts on each
//! input (padded with an ancilla), both single-party reduced density
//! matrices no longer depend on which input was chosen. This crate builds
//! the state families for which that is possible, quantifies the
//! entanglement the masking necessarily generates, and searches the
//! Cartan-parametrized unitaries for maskers.
//!
//! Start with the runnable programs in `examples/`; each one exercises a
//! major capability end to end. The `qmask` binary exposes the same
//! machinery as `scan`, `find-masker`, and `verify` subcommands.

pub mod entanglement;
pub mod error;
pub mod linalg;
pub mod masking;
pub mod optimizer;
pub mod scan;
pub mod states;
pub mod tol;
pub mod verify;

pub use entanglement::{
    binary_entropy, concurrence, entanglement_of_formation, entropic_gap, eof_from_concurrence,
    negativity, pure_entanglement_entropy, von_neumann_entropy, EntanglementReport,
};
pub use error::{Error, Result};
pub use linalg::{c64, ComplexMatrix, EigenSystem, Party};
pub use masking::{
    apply_masker, canonical_orthogonal_masker, cartan_unitary, masking_residual, phase_unitary,
    verify_convex_masking, MaskerParams, MaskingVerdict,
};
pub use optimizer::{
    entanglement_scan, find_masker, lemma2_grid_oracle, lemma3_grid_oracle,
    min_entanglement_masker, uniform_grid, OptimizationResult, OptimizerConfig,
};
pub use scan::{record_for, scan_records, ScanCase, ScanRecord};
pub use states::{
    bloch_to_pure, canonical_nonorthogonal_pair, canonical_orthogonal_pair,
    masked_mixture_nonorthogonal, masked_mixture_orthogonal, mix, walgate_orthogonal_pair,
    BlochAngles, DensityMatrix, PureQubit, PureState2Q,
};
pub use verify::{CheckResult, Suite, SuiteReport};
