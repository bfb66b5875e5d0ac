//! Exact arithmetic over the integers localized at 2.
//!
//! The 2-adic integers are modelled by rationals with odd denominator. All
//! input data lives in this subring, invertibility of a matrix is decided by
//! its reduction mod 2, and intertwiner lattices commute with completion, so
//! equivalence and splitting questions have the same answers in both rings.

pub mod lattice;
pub mod lll;
pub mod local2;
pub mod matrix;
pub mod modp;
pub mod smith;

pub use lattice::{is_unimodular, kernel_lattice, lattice_contains, Lattice};
pub use lll::{integer_kernel, integral_kernel_lattice, lll_reduce};
pub use local2::{Local2Rational, Valuation};
pub use matrix::Matrix;
pub use smith::{smith_normal_form, SmithDecomposition};

/// 2-adic valuation; `None` encodes the valuation of zero (infinity).
pub fn val2(r: &Local2Rational) -> Valuation {
    r.val2()
}
