//! Exact recursive minimal deformation of boson commutation relations.
//!
//! Every structure function, commutator and Casimir coefficient handled here
//! is a closed-form [`ExpPoly`]: a finite sum `Σ p_t(n)·b_t^n` with rational
//! polynomial coefficients and distinct rational bases. Operator identities
//! are checked in a square-root-free weighted-shift normal form over a
//! truncated Fock window, so every verdict is exact.
//!
//! Module map:
//! - [`exact`]: rationals, q-numbers, partial-fraction weights, [`ExpPoly`]
//! - [`deform`]: the minimal deformation step, chains, polynomial starts and
//!   the named oscillator catalog
//! - [`opalg`]: Fock windows and the weighted-shift operator algebra
//! - [`ordering`]: deformed brackets and normal-ordering tables
//! - [`inverse`]: rewriting a commutator as a simpler quommutator
//! - [`casimir`]: Casimir operators for both presentations
//! - [`qcalc`]: Jackson and multi-parameter q-derivatives
//! - [`cli`]: the `qoscil` command-line front end

pub mod casimir;
pub mod cli;
pub mod deform;
mod error;
pub mod exact;
pub mod inverse;
pub mod opalg;
pub mod ordering;
pub mod qcalc;

pub use error::{Error, Result};
pub use exact::{ExpPoly, Rational, WeightVector};
