//! Exact computer algebra for the gap-p Virasoro algebra and its
//! Harish-Chandra modules.
//!
//! - [`algebra`]: elements, bracket, Lie-axiom and Virasoro-embedding checks
//! - [`mois`]: modules of intermediate series `V(α, β, F)`, their linkage,
//!   reducibility and isomorphism, and the 𝔤(0)-modules `A_j`, `B_j`, `V_j`
//! - [`verma`]: Verma modules, PBW straightening, singular vectors
//! - [`cover`]: the tensor module 𝔤″⊗M, the submodule J, π and ω operators
//! - [`corpus`]: the five worked examples of small-p matrices
//! - [`cli`]: the `gapvir` command line

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod cover;
pub mod error;
pub mod linalg;
pub mod mois;
pub mod scalar;
pub mod sparse;
pub mod verma;

pub use algebra::{bracket, AlgebraElement, GapParam, Generator};
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use sparse::SparseVec;
