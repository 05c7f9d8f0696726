//! Multivariate polynomials over GF(q), Gröbner bases and the ideals
//! describing PPs and LPPs.

mod basis;
mod ideals;
mod monomial;
mod ring;

pub use basis::{
    buchberger, normal_form, quotient_dimension, reduce_basis, reduced_groebner_basis, standard_monomials, variety,
    GroebnerBasis, Ideal, BRUTE_FORCE_POINTS, DEFAULT_PAIR_BUDGET,
};
pub use ideals::{
    build_ideal_lpp, build_ideal_lpp_degree, build_ideal_pp, build_ideal_pp_degree, build_ideal_reduced,
    build_ideal_symmetric, lpp_ring, lpp_var, normalized_pp_count, pp_ring, pp_var, IdealKind,
};
pub use monomial::{Monomial, OrderKind, MAX_VARS};
pub use ring::{MultiPoly, Ring};
