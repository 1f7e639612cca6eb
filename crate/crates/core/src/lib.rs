//! Exact arithmetic for Eisenstein series q-expansions, classical and
//! p-adic, together with the finite Fourier analysis on (Z/N)^2, the
//! Bernoulli/L-value layer, the two-variable Eisenstein measure, and the
//! differential-equation verifier for syntomic pairs on the ordinary locus.
//!
//! Everything is computed over exact rings: Q, Q(zeta_N) as polynomial
//! residues modulo the cyclotomic polynomial, and Z\[zeta_N\]/p^M. Truncated
//! q-expansions carry their q-order and p-adic precision as metadata, and
//! equality always means agreement up to the smaller precision, which is the
//! q-expansion principle in executable form.
//!
//! The crate is primarily a library; see the `examples/` directory for one
//! runnable walkthrough per capability, and the thin `qeis` binary for a
//! scriptable interface emitting exact JSON/CSV tables.

pub mod arith;
pub mod cli;
pub mod eisenstein;
pub mod error;
pub mod level;
pub mod lfunc;
pub mod measure;
pub mod padic_eis;
pub mod qexp;
pub mod ring;
pub mod symh;

pub use arith::{CycRat, PadicCyc};
pub use error::{Error, Result};
pub use level::{GL2ModN, LevelFunction};
pub use lfunc::{BernoulliPoly, PeriodicFunction};
pub use measure::{EisensteinMeasure, TestFunction};
pub use padic_eis::PadicEisSpec;
pub use qexp::QExpansion;
pub use ring::{Coefficient, CycCoefficient};
pub use symh::{SymOneForm, SymSection};
