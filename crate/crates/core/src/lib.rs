//! Entanglement detection for three-qubit density matrices.
//!
//! A three-qubit state admits six bipartite reductions: the three partial
//! traces onto the qubit pairs and three joint contractions, one per cut
//! A|BC, B|CA, C|AB. Every reduction of a density matrix is again a
//! density matrix, and every reduction of a separable state is separable.
//! Running the Peres-Horodecki PPT test on all six therefore gives a
//! cheap sufficient criterion: one negative partial-transpose eigenvalue
//! anywhere certifies the full state entangled. The converse fails —
//! see [`states::upb_state`] — so the other verdict is "inconclusive",
//! never "separable".
//!
//! The crate is organized as:
//!
//! - [`linalg`]: dense complex kernel (Jacobi eigenvalues, Kronecker
//!   product, partial trace/transpose, density-matrix validation);
//! - [`states`]: constructors for the named state families and seeded
//!   samplers;
//! - [`criterion`]: the six reductions, the PPT test and the verdict
//!   report;
//! - [`verify`]: the named, reproducible check suite;
//! - [`io`]: the JSON matrix-file format used by the CLI.

pub mod criterion;
mod error;
pub mod io;
pub mod linalg;
pub mod states;
pub mod verify;

pub use error::Error;
pub use linalg::{DensityMatrix4, DensityMatrix8, SquareMatrix};
pub use num_complex::Complex64;
