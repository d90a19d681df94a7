//! Exact sum-product growth experiments over finite fields F_{p^k}:
//! table-driven field arithmetic with the full subfield lattice, bit-vector
//! set algebra (sumsets, ratio sets, the closure-case classification),
//! exact additive and mixed energies, covering-lemma checkers, and a
//! seed-deterministic measurement harness for the growth exponents.
//!
//! The `examples/` directory walks through each capability; the `ffgrowth`
//! binary exposes the same operations as subcommands.

mod error;

pub mod cli;
pub mod energy;
pub mod field;
pub mod harness;
pub mod lemmas;
pub mod set;
pub mod setfile;

pub use error::{Error, Result};
