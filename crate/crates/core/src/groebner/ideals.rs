//! The ideals whose zeros are the PPs and LPPs of GF(q), with their degree,
//! symmetric and reduced variants.
//!
//! A PP `Σ s_i x^i` (`i ≤ q-2`) is the point `(s_i)` of the ring in the
//! variables `x1, …, x{q-2}, x0`; an LPP `Σ s_ij x^i y^j` is the point
//! `(s_ij)` of the ring in `x00, x01, …, x{q-2}{q-2}` (row-major).

use std::fmt;
use std::str::FromStr;

use super::basis::{quotient_dimension, reduced_groebner_basis, Ideal, DEFAULT_PAIR_BUDGET};
use super::monomial::{Monomial, OrderKind};
use super::ring::{MultiPoly, Ring};
use crate::error::{usage, Error, Result};
use crate::gf::{Elem, Field};

fn require_q(field: &Field) -> Result<usize> {
    let q = field.order();
    if q < 3 {
        return usage(format!("the polynomial ideals need q >= 3 (got q = {q})"));
    }
    Ok(q)
}

/// Ring of PP coefficients, `x0` last so it is the smallest variable.
pub fn pp_ring(field: &Field, order: OrderKind) -> Result<Ring> {
    let q = require_q(field)?;
    let mut names: Vec<String> = (1..q - 1).map(|i| format!("x{i}")).collect();
    names.push("x0".into());
    Ring::new(field.clone(), names, order)
}

/// Ring index of the coefficient `x_i` in [`pp_ring`].
pub fn pp_var(q: usize, i: usize) -> usize {
    if i == 0 {
        q - 2
    } else {
        i - 1
    }
}

/// Ring of LPP coefficients `x_ij`, row-major.
pub fn lpp_ring(field: &Field, order: OrderKind) -> Result<Ring> {
    let q = require_q(field)?;
    let names = (0..q - 1).flat_map(|i| (0..q - 1).map(move |j| format!("x{i}{j}"))).collect();
    Ring::new(field.clone(), names, order)
}

/// Ring index of `x_ij` in [`lpp_ring`].
pub fn lpp_var(q: usize, i: usize, j: usize) -> usize {
    i * (q - 1) + j
}

fn all_field_equations(ring: &Ring) -> Vec<MultiPoly> {
    (0..ring.nvars()).map(|k| ring.field_equation(k)).collect()
}

/// `F(L) = L^(q-1) - 1`.
fn f_of(ring: &Ring, l: &MultiPoly) -> MultiPoly {
    let q = ring.field().order() as u64;
    ring.sub(&ring.pow(l, q - 1), &ring.one())
}

fn power(field: &Field, a: Elem, i: usize) -> Elem {
    // 0^0 = 1
    field.pow(a, i as u64)
}

fn push_unique(gens: &mut Vec<MultiPoly>, ring: &Ring, g: MultiPoly) {
    let g = ring.monic(&g);
    if !g.is_zero() && !gens.contains(&g) {
        gens.push(g);
    }
}

/// Unordered pairs `a < b` of field elements.
fn pairs(field: &Field) -> Vec<(Elem, Elem)> {
    let els: Vec<Elem> = field.elements().collect();
    let mut out = Vec::new();
    for (k, &a) in els.iter().enumerate() {
        for &b in &els[k + 1..] {
            out.push((a, b));
        }
    }
    out
}

/// `I_q`: field equations, then `F_{a,b} = F(Σ (a^i - b^i) x_i)` for
/// every pair `a ≠ b`. Default order degrevlex.
pub fn build_ideal_pp(field: &Field) -> Result<Ideal> {
    let ring = pp_ring(field, OrderKind::DegRevLex)?;
    let q = field.order();
    let mut gens = all_field_equations(&ring);
    for (a, b) in pairs(field) {
        let terms = (0..q - 1).map(|i| {
            let c = field.sub(power(field, a, i), power(field, b, i));
            (Monomial::var(pp_var(q, i), 1), c)
        });
        let l = ring.from_terms(terms);
        push_unique(&mut gens, &ring, f_of(&ring, &l));
    }
    Ok(Ideal::new(ring, gens))
}

/// `Σ_j c^j x_{ij}` when `by_row`, else `Σ_j c^j x_{ji}`.
fn section(ring: &Ring, q: usize, c: Elem, i: usize, by_row: bool) -> MultiPoly {
    let field = ring.field();
    ring.from_terms((0..q - 1).map(|j| {
        let k = if by_row { lpp_var(q, i, j) } else { lpp_var(q, j, i) };
        (Monomial::var(k, 1), power(field, c, j))
    }))
}

/// `J_q`, default order lex.
///
/// The plain form lists every `G^row_{a,b,c}` and `G^col_{a,b,c}`. The
/// optimized form instead substitutes the two sections `Σ_j c^j x_{ij}`
/// and `Σ_j c^j x_{ji}` into the reduced basis of `I_q`, for every `c`.
/// Both start with the field equations of all `x_ij`.
pub fn build_ideal_lpp(field: &Field, optimized: bool) -> Result<Ideal> {
    let ring = lpp_ring(field, OrderKind::Lex)?;
    let q = field.order();
    let mut gens = all_field_equations(&ring);
    if optimized {
        let pp = build_ideal_pp(field)?;
        let gb = reduced_groebner_basis(&pp, DEFAULT_PAIR_BUDGET)?;
        for c in field.elements() {
            for by_row in [true, false] {
                let mut images = vec![MultiPoly::zero(); q - 1];
                for i in 0..q - 1 {
                    images[pp_var(q, i)] = section(&ring, q, c, i, by_row);
                }
                for g in &gb.polys {
                    push_unique(&mut gens, &ring, ring.substitute(&pp.ring, g, &images)?);
                }
            }
        }
    } else {
        for c in field.elements() {
            for by_row in [true, false] {
                let secs: Vec<MultiPoly> = (0..q - 1).map(|i| section(&ring, q, c, i, by_row)).collect();
                for (a, b) in pairs(field) {
                    let mut l = MultiPoly::zero();
                    for (i, s) in secs.iter().enumerate() {
                        let w = field.sub(power(field, a, i), power(field, b, i));
                        l = ring.add_scaled(&l, w, &Monomial::ONE, s);
                    }
                    push_unique(&mut gens, &ring, f_of(&ring, &l));
                }
            }
        }
    }
    Ok(Ideal::new(ring, gens))
}

/// `I_{q,d} = I_q + <x_i : i > d> + <x_d^(q-1) - 1>`, `d ≤ q - 2`.
pub fn build_ideal_pp_degree(field: &Field, d: usize) -> Result<Ideal> {
    let q = require_q(field)?;
    if d > q - 2 {
        return usage(format!("PP degree {d} is out of range 0..={}", q - 2));
    }
    let mut ideal = build_ideal_pp(field)?;
    let ring = ideal.ring.clone();
    for i in d + 1..q - 1 {
        ideal.push(ring.var(pp_var(q, i)));
    }
    ideal.push(f_of(&ring, &ring.var(pp_var(q, d))));
    Ok(ideal)
}

fn lpp_degree_generators(ring: &Ring, q: usize, d: usize) -> Vec<MultiPoly> {
    let mut gens = Vec::new();
    let mut top = ring.one();
    for i in 0..q - 1 {
        for j in 0..q - 1 {
            let x = ring.var(lpp_var(q, i, j));
            if i + j > d {
                gens.push(x);
            } else if i + j == d {
                top = ring.mul(&top, &f_of(ring, &x));
            }
        }
    }
    gens.push(top);
    gens
}

fn check_lpp_degree(q: usize, d: usize) -> Result<()> {
    if d > 2 * q - 4 {
        return usage(format!("LPP degree {d} is out of range 0..={}", 2 * q - 4));
    }
    Ok(())
}

/// `J_{q,d} = J_q + <x_ij : i + j > d> + <Π_{i+j=d} (x_ij^(q-1) - 1)>`, `d ≤ 2q - 4`.
pub fn build_ideal_lpp_degree(field: &Field, d: usize, optimized: bool) -> Result<Ideal> {
    let q = require_q(field)?;
    check_lpp_degree(q, d)?;
    let mut ideal = build_ideal_lpp(field, optimized)?;
    let ring = ideal.ring.clone();
    for g in lpp_degree_generators(&ring, q, d) {
        ideal.push(g);
    }
    Ok(ideal)
}

fn lpp_base(field: &Field, degree: Option<usize>) -> Result<Ideal> {
    match degree {
        Some(d) => build_ideal_lpp_degree(field, d, true),
        None => build_ideal_lpp(field, true),
    }
}

/// Symmetric LPPs: `J_q` (or `J_{q,d}`) plus `x_ij - x_ji` for `i < j`.
pub fn build_ideal_symmetric(field: &Field, degree: Option<usize>) -> Result<Ideal> {
    let mut ideal = lpp_base(field, degree)?;
    let ring = ideal.ring.clone();
    let q = field.order();
    for i in 0..q - 1 {
        for j in i + 1..q - 1 {
            ideal.push(ring.sub(&ring.var(lpp_var(q, i, j)), &ring.var(lpp_var(q, j, i))));
        }
    }
    Ok(ideal)
}

/// Reduced LPPs: `J_q` (or `J_{q,d}`) plus `x00`, `x10 - 1`, `x01 - 1` and
/// `x0i`, `xi0` for `2 ≤ i ≤ q - 2`.
pub fn build_ideal_reduced(field: &Field, degree: Option<usize>) -> Result<Ideal> {
    let mut ideal = lpp_base(field, degree)?;
    let ring = ideal.ring.clone();
    let q = field.order();
    ideal.push(ring.var(lpp_var(q, 0, 0)));
    ideal.push(ring.sub(&ring.var(lpp_var(q, 1, 0)), &ring.one()));
    ideal.push(ring.sub(&ring.var(lpp_var(q, 0, 1)), &ring.one()));
    for i in 2..q - 1 {
        ideal.push(ring.var(lpp_var(q, 0, i)));
        ideal.push(ring.var(lpp_var(q, i, 0)));
    }
    Ok(ideal)
}

/// `N_q(d)` from the ideal of monic PPs of degree `d` with zero constant
/// term: `I_q + <x0> + <x_i : i > d> + <x_d - 1>`, whose quotient
/// dimension is multiplied by `q(q - 1)`.
pub fn normalized_pp_count(field: &Field, d: usize) -> Result<u64> {
    let q = require_q(field)?;
    if d > q - 2 {
        return usage(format!("PP degree {d} is out of range 0..={}", q - 2));
    }
    let mut ideal = build_ideal_pp(field)?;
    let ring = ideal.ring.clone();
    ideal.push(ring.var(pp_var(q, 0)));
    for i in d + 1..q - 1 {
        ideal.push(ring.var(pp_var(q, i)));
    }
    ideal.push(ring.sub(&ring.var(pp_var(q, d)), &ring.one()));
    let gb = reduced_groebner_basis(&ideal, DEFAULT_PAIR_BUDGET)?;
    Ok(quotient_dimension(&gb)? * (q * (q - 1)) as u64)
}

/// Ideal builders addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealKind {
    Pp,
    Lpp,
    PpDegree,
    LppDegree,
    Symmetric,
    Reduced,
}

impl IdealKind {
    pub const ALL: [IdealKind; 6] =
        [IdealKind::Pp, IdealKind::Lpp, IdealKind::PpDegree, IdealKind::LppDegree, IdealKind::Symmetric, IdealKind::Reduced];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Pp => "pp",
            IdealKind::Lpp => "lpp",
            IdealKind::PpDegree => "pp-deg",
            IdealKind::LppDegree => "lpp-deg",
            IdealKind::Symmetric => "symmetric",
            IdealKind::Reduced => "reduced",
        }
    }

    /// Order used by the published bases of this family.
    pub fn default_order(self) -> OrderKind {
        match self {
            IdealKind::Pp | IdealKind::PpDegree => OrderKind::DegRevLex,
            _ => OrderKind::Lex,
        }
    }

    pub fn is_lpp(self) -> bool {
        !matches!(self, IdealKind::Pp | IdealKind::PpDegree)
    }

    /// Builds the generators; `degree` is required by the `-deg` kinds,
    /// optional for symmetric and reduced and rejected otherwise.
    pub fn build(self, field: &Field, degree: Option<usize>) -> Result<Ideal> {
        match (self, degree) {
            (IdealKind::Pp, None) => build_ideal_pp(field),
            (IdealKind::Lpp, None) => build_ideal_lpp(field, true),
            (IdealKind::PpDegree, Some(d)) => build_ideal_pp_degree(field, d),
            (IdealKind::LppDegree, Some(d)) => build_ideal_lpp_degree(field, d, true),
            (IdealKind::Symmetric, d) => build_ideal_symmetric(field, d),
            (IdealKind::Reduced, d) => build_ideal_reduced(field, d),
            (IdealKind::PpDegree | IdealKind::LppDegree, None) => {
                usage(format!("ideal {} needs a degree", self.name()))
            }
            (IdealKind::Pp | IdealKind::Lpp, Some(_)) => {
                usage(format!("ideal {} takes no degree (use {}-deg)", self.name(), self.name()))
            }
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<IdealKind> {
        IdealKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| {
            let names: Vec<&str> = IdealKind::ALL.iter().map(|k| k.name()).collect();
            Error::Usage(format!("unknown ideal {s:?} (expected one of {})", names.join(", ")))
        })
    }
}
