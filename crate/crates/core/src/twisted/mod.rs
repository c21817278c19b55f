//! One-sided twisted complexes over a minimal A∞-structure on `F`.
//!
//! Objects are sums `⊕ Σ^{u_i} F` with a strictly lower-triangular
//! connection `δ` whose entry `δ_ij` has internal degree `u_i - u_j + 1`.
//! Operations on matrices follow the suspended convention: a chain of
//! matrices is sent through `m_L` entrywise along every index path, and the
//! result picks up `(-1)^{u_j}` from the source summand `j`.

mod complex;
mod endo;
mod ops;
mod search;

pub use complex::{TwMorphism, TwistedComplex};
pub use endo::{endo_invariant, EndoInvariant, EndoVerdict};
pub use ops::{entry_table, hom_complex, is_closed, mc_check, mu_tw, HomComplex, McReport};
pub use search::{small_monomials, subdiagonal_complex, subdiagonal_search, SubdiagonalSearch};
