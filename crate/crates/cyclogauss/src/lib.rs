//! Exact Gauss-period spectra over finite fields.
//!
//! For q = p^f and N | q - 1 the Gauss periods are the character sums
//! eta_a = sum over x in C_a of psi(x), where C_0, ..., C_{N-1} are the
//! cyclotomic classes of order N in GF(q)* and psi is the canonical additive
//! character. Everything here is computed exactly over the integers: periods
//! come from trace histograms, never from floating-point character sums.
//!
//! The crate decides when a spectrum takes exactly three values, derives the
//! arithmetic invariants (t, u, v, r, s) of such a decomposition, checks the
//! necessary and sufficient conditions for three-valued-ness, and builds the
//! combinatorial objects attached to these spectra: circulant weighing
//! matrices and 3-class association schemes.

pub mod arith;
pub mod conditions;
pub mod cyclotomy;
pub mod error;
pub mod families;
pub mod field;
pub mod groupring;
pub(crate) mod par;
pub mod search;
pub mod structures;

pub use error::{Error, Result};
