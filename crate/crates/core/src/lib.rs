//! Free resolutions of graded modules over `F_p[x_1, ..., x_n]` via Schreyer's
//! syzygy algorithm, with tree-structured lifting of leading syzygy terms.
//!
//! The pipeline is: reduced Groebner basis ([`groebner`]), leading syzygy
//! frame ([`frame`]), lifting of each frame term to a syzygy ([`lift`]), and
//! repetition on the resulting generators ([`resolution`]). Betti tables and
//! minimization are in [`betti`] and [`resolution`].

pub mod agr;
pub mod betti;
pub mod error;
pub mod field;
pub mod frame;
pub mod groebner;
pub mod hilbert;
pub mod io;
pub mod lift;
pub mod linalg;
pub mod monomial;
pub mod ordering;
pub mod resolution;
pub mod ring;
pub mod stats;
pub mod vector;

pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use lift::LiftAlgorithm;
pub use monomial::{ModuleMonomial, Monomial};
pub use ordering::{BaseOrdering, LevelOrdering, OrderingChain, OrderingKind};
pub use resolution::{resolve, Reorder, Resolution, ResolveOptions};
pub use ring::Ring;
pub use stats::StatCounters;
pub use vector::{ModuleVector, Term};
