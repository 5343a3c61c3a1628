//! Finite module specs, Whittaker data and truncated induced modules.

pub mod induced;
pub mod spec;
pub mod whittaker;

pub use induced::{induce, verma, IndKey, IndVector, InducedModule, VKey};
pub use spec::{extend_b1, extend_b2, BModuleSpec, Over, SpecFile, ValidationReport, Violation};
pub use whittaker::{check_homomorphism, whittaker_bmodule, WhittakerData};
