//! Context-free grammar derivatives that generate multivariate
//! Stirling-permutation polynomials, brute-force combinatorial oracles for
//! them, and exact checks of their real-rootedness and stability.
//!
//! The crate is organized bottom-up:
//!
//! * [`polyring`]: exact sparse polynomials over the integers.
//! * [`grammar`]: formal derivatives of substitution grammars, the grammar
//!   families, and first-order linear differential operators.
//! * [`structures`]: enumeration of permutations, partitions, Stirling,
//!   r-Stirling, Legendre-Stirling and marked Stirling words, with their
//!   statistics and weight polynomials.
//! * [`stability`]: Sturm sequences, upper-half-plane zero search, the
//!   product-test gate for linear operators and the classical identities.
//! * [`checks`]: named verification suites shared by the CLI and tests.
//! * [`cli`]: the `stablegram` command line.

pub mod checks;
pub mod cli;
mod error;
pub mod grammar;
pub mod polyring;
pub mod stability;
pub mod structures;

pub use error::Error;
pub use grammar::{FamilyKind, Grammar, LinearDiffOp, SurrogateKind};
pub use polyring::{GaussianRational, Monomial, Polynomial, Variable};
pub use structures::{LabeledWord, Letter, StructureFamily};
