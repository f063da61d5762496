//! Gallai-Ramsey numbers `gr_k(K3 : r·B3+, s·S3+, t·K3)`.
//!
//! The crate evaluates the closed form for these numbers, builds Gallai
//! colorings that attain the lower bound by iterated blow-ups, finds Gallai
//! partitions, and searches for the two-color Ramsey witnesses the
//! constructions are made of. Every produced coloring can be re-checked with
//! the detectors in [`detect`].

pub mod bitset;
pub mod cli;
pub mod construct;
pub mod detect;
pub mod error;
pub mod formula;
pub mod graph;
pub mod io;
pub mod partition;
pub mod pattern;
pub mod search;

pub use construct::{
    blow_up, construct_lower_bound, find_sharpness, verify_construction, Certificate, ColorRouting,
    SharpnessExample, SharpnessId, SharpnessLibrary, WitnessCache,
};
pub use detect::{find_mono_copy, forbidden_copy, is_gallai, rainbow_triangle, ForbiddenCopy};
pub use error::{Error, Result};
pub use formula::{
    check_inequalities, classical_ramsey, condition_label, f, gallai_ramsey_value, ColorRole, ConditionLabel,
    InequalityReport, Parameters,
};
pub use graph::{Color, EdgeColoredCompleteGraph};
pub use partition::{coarsen_to_minimal, find_gallai_partition, verify_partition, GallaiPartition};
pub use pattern::{Embedding, PatternGraph, PatternKind};
pub use search::{compute_ramsey, local_search_witness, witness_search, SearchBudget, SearchOutcome};
