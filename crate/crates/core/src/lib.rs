//! Integral representations of the alternating group A4 over the 2-local
//! integers.
//!
//! The crate builds the irreducible lattices, the syzygy tower of the Klein
//! four-group and its lift to A4, decomposes tensor products with explicit
//! invertible intertwiners as witnesses, and checks the resulting structure
//! of the irreducible representation algebra.
//!
//! All arithmetic is exact. See `examples/` for one runnable program per
//! capability and the `repring-a4` binary for the batch verification report.

pub mod arith;
pub mod error;
pub mod g_modules;
pub mod groups;
pub mod rep_ring;
pub mod report;
pub mod reps;
pub mod syzygy;

pub use arith::{Lattice, Local2Rational, Matrix};
pub use error::{Error, Result};
