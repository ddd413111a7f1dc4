//! Root systems, Weyl groups, Demazure characters and the cohomology of B-submodules
//! of the adjoint representation on Schubert varieties, assembled into verdicts on
//! the connected automorphism groups of Schubert varieties.
//!
//! Conventions: Bourbaki numbering; weights in the simple-root basis; `B` is the
//! negative Borel subgroup, so the weights of `g/b` are the positive roots. Simple
//! roots are indexed from 0 in this API and printed as `a1, a2, ...`.

pub mod autreport;
pub mod bmod;
pub mod charring;
pub mod error;
pub mod linalg;
pub mod report;
pub mod rootsys;
pub mod schubert;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{Root, RootSystem, TypeLetter, Weight};
pub use weyl::WeylElement;
