//! Minimal A∞-structures on `F` and their polyvector seeds.

mod eta;
mod extend;
mod morphism;
mod structure;

pub use eta::{build_eta, build_eta_tilde};
pub use extend::{extend_minimal, ExtensionReport, ObstructionRecord};
pub use morphism::{jacobian_det, morphism_obstruction, random_autspec, AutSpec, Certificate, Verdict};
pub use structure::{stasheff_sign, AInfStructure, StasheffMode, StasheffReport};
