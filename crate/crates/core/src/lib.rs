//! Latin squares of prime-power order as local permutation polynomials.
//!
//! A Latin square over GF(q) is the value table of a bivariate polynomial
//! `f(x, y)` whose every row and column section is a permutation
//! polynomial. This crate provides exact GF(q) arithmetic, canonical
//! polynomial representations, exhaustive censuses of permutation and local
//! permutation polynomials, isotopism machinery, complete mappings and
//! transversals, and a Gröbner-basis engine that describes the same sets as
//! algebraic varieties.

pub mod error;
pub mod gf;
pub mod groebner;
pub mod lpp;
pub mod perm;
pub mod poly;
pub mod pp;
pub mod text;

pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use perm::Permutation;
pub use poly::{BiPoly, Degree, UniPoly};

/// Enumeration guard for exhaustive searches.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Budget {
    #[default]
    Standard,
    /// Opt in to the slow end of a guarded range (q = 11 censuses, J_5 bases).
    Large,
}
