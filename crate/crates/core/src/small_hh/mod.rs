//! Hochschild cohomology of small graded algebras by brute force, the
//! Künneth comparison, and the Koszul computation for `k[t, t^-1]`.

mod algebra;
mod bar;
mod laurent;

pub use algebra::{tensor_algebra, SmallAlgebra};
pub use bar::{hh_bruteforce, kunneth_check, BarComplex, HHTable, KunnethReport, DEFAULT_SIZE_LIMIT};
pub use laurent::{hh_laurent, LaurentReport};
