//! Canonical univariate and bivariate polynomials over GF(q).
//!
//! Every polynomial is kept reduced modulo the field equations `x^q - x`
//! (and `y^q - y`), so a `UniPoly` is a length-`q` coefficient vector and a
//! `BiPoly` a `q x q` grid. Two polynomials are equal exactly when they
//! define the same function, which is what makes value tables and
//! interpolation interchangeable with symbolic composition.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{domain, usage, Result};
use crate::gf::{Elem, Field};
use crate::perm::{is_bijection, Permutation};
use crate::text::{self, Algebra};

/// Degree of a polynomial; the zero polynomial has degree `-inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Reduces an exponent modulo `x^q = x`.
#[inline]
pub(crate) fn fold_exponent(e: usize, q: usize) -> usize {
    if e < q {
        e
    } else {
        (e - 1) % (q - 1) + 1
    }
}

/// A univariate polynomial of degree `< q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly {
    coeffs: Vec<Elem>,
}

impl UniPoly {
    pub fn zero(q: usize) -> UniPoly {
        UniPoly { coeffs: vec![Elem::ZERO; q] }
    }

    pub fn constant(q: usize, c: Elem) -> UniPoly {
        let mut p = UniPoly::zero(q);
        p.coeffs[0] = c;
        p
    }

    /// The polynomial `x`.
    pub fn identity(q: usize) -> UniPoly {
        let mut p = UniPoly::zero(q);
        p.coeffs[1] = Elem::ONE;
        p
    }

    /// `c * x^e`, with `e` folded into `[0, q)`.
    pub fn monomial(q: usize, c: Elem, e: usize) -> UniPoly {
        let mut p = UniPoly::zero(q);
        p.coeffs[fold_exponent(e, q)] = c;
        p
    }

    /// Builds a polynomial from coefficients of arbitrary length, folding
    /// exponents `>= q` back with the field equation.
    pub fn from_coeffs(field: &Field, coeffs: &[Elem]) -> UniPoly {
        let q = field.order();
        let mut p = UniPoly::zero(q);
        for (e, &c) in coeffs.iter().enumerate() {
            let i = fold_exponent(e, q);
            p.coeffs[i] = field.add(p.coeffs[i], c);
        }
        p
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.iter().rposition(|c| !c.is_zero()) {
            Some(d) => Degree::Finite(d),
            None => Degree::NegInfinity,
        }
    }

    pub fn eval(&self, field: &Field, a: Elem) -> Elem {
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| field.add(field.mul(acc, a), c))
    }

    /// Values at every element, in code order.
    pub fn values(&self, field: &Field) -> Vec<Elem> {
        field.elements().map(|a| self.eval(field, a)).collect()
    }

    /// The unique polynomial of degree `< q` with `f(a) = values[a]`,
    /// i.e. `sum_a values[a] * (1 - (x - a)^(q-1))`.
    pub fn interpolate(field: &Field, values: &[Elem]) -> Result<UniPoly> {
        let q = field.order();
        if values.len() != q {
            return usage(format!("value table has {} entries, expected {q}", values.len()));
        }
        Ok(interpolate_unchecked(field, values))
    }

    pub fn from_permutation(field: &Field, perm: &Permutation) -> UniPoly {
        interpolate_unchecked(field, perm.table())
    }

    /// The permutation this polynomial induces, if it is a permutation polynomial.
    pub fn to_permutation(&self, field: &Field) -> Result<Permutation> {
        Permutation::from_table(self.values(field))
            .or_else(|_| domain(format!("{self} is not a permutation polynomial")))
    }

    pub fn add(&self, field: &Field, other: &UniPoly) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| field.add(a, b)).collect() }
    }

    pub fn scale(&self, field: &Field, c: Elem) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|&a| field.mul(a, c)).collect() }
    }

    pub fn mul(&self, field: &Field, other: &UniPoly) -> UniPoly {
        let q = self.order();
        let mut out = UniPoly::zero(q);
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, &b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let e = fold_exponent(i + j, q);
                out.coeffs[e] = field.add(out.coeffs[e], field.mul(a, b));
            }
        }
        out
    }

    /// `f(g(x))` reduced modulo `x^q - x`.
    pub fn compose(&self, field: &Field, g: &UniPoly) -> UniPoly {
        let values: Vec<Elem> = g.values(field).into_iter().map(|b| self.eval(field, b)).collect();
        interpolate_unchecked(field, &values)
    }

    /// The compositional inverse of a permutation polynomial.
    pub fn inverse_pp(&self, field: &Field) -> Result<UniPoly> {
        let perm = self.to_permutation(field)?;
        Ok(UniPoly::from_permutation(field, &perm.inverse()))
    }

    pub fn parse(field: &Field, src: &str) -> Result<UniPoly> {
        let bi = text::parse(&PolyAlgebra { field, allow_y: false }, src)?;
        Ok(bi.column_section_poly())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.code(), text::render_monomial(std::iter::once(("x", i as u32)))));
        write!(f, "{}", text::render_terms(terms))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

fn interpolate_unchecked(field: &Field, values: &[Elem]) -> UniPoly {
    let q = field.order();
    let mut coeffs = vec![Elem::ZERO; q];
    for (a, &v) in field.elements().zip(values) {
        if v.is_zero() {
            continue;
        }
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = field.add(*c, field.mul(v, field.indicator(a, i)));
        }
    }
    UniPoly { coeffs }
}

/// A bivariate polynomial with degree `< q` in each variable.
///
/// The coefficient of `x^i y^j` is stored at `i * q + j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiPoly {
    q: usize,
    coeffs: Vec<Elem>,
}

impl BiPoly {
    pub fn zero(q: usize) -> BiPoly {
        BiPoly { q, coeffs: vec![Elem::ZERO; q * q] }
    }

    /// `c * x^i * y^j`, exponents folded into `[0, q)`.
    pub fn monomial(q: usize, c: Elem, i: usize, j: usize) -> BiPoly {
        let mut p = BiPoly::zero(q);
        p.coeffs[fold_exponent(i, q) * q + fold_exponent(j, q)] = c;
        p
    }

    pub fn constant(q: usize, c: Elem) -> BiPoly {
        BiPoly::monomial(q, c, 0, 0)
    }

    pub fn x(q: usize) -> BiPoly {
        BiPoly::monomial(q, Elem::ONE, 1, 0)
    }

    pub fn y(q: usize) -> BiPoly {
        BiPoly::monomial(q, Elem::ONE, 0, 1)
    }

    /// Builds a polynomial from a `q x q` coefficient grid (row index = x-exponent).
    pub fn from_grid(q: usize, coeffs: Vec<Elem>) -> Result<BiPoly> {
        if coeffs.len() != q * q {
            return usage(format!("coefficient grid has {} entries, expected {}", coeffs.len(), q * q));
        }
        Ok(BiPoly { q, coeffs })
    }

    /// `g(x)` viewed as a bivariate polynomial.
    pub fn from_uni_x(g: &UniPoly) -> BiPoly {
        let q = g.order();
        let mut p = BiPoly::zero(q);
        for i in 0..q {
            p.coeffs[i * q] = g.coeff(i);
        }
        p
    }

    /// `g(y)` viewed as a bivariate polynomial.
    pub fn from_uni_y(g: &UniPoly) -> BiPoly {
        let q = g.order();
        let mut p = BiPoly::zero(q);
        p.coeffs[..q].copy_from_slice(g.coeffs());
        p
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Elem {
        self.coeffs[i * self.q + j]
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, c: Elem) {
        self.coeffs[i * self.q + j] = c;
    }

    pub fn grid(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Maximum `i + j` over nonzero coefficients.
    pub fn total_degree(&self) -> Degree {
        let q = self.q;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| Degree::Finite(k / q + k % q))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    pub fn is_symmetric(&self) -> bool {
        let q = self.q;
        (0..q).all(|i| (0..i).all(|j| self.coeff(i, j) == self.coeff(j, i)))
    }

    /// `f(y, x)`.
    pub fn transpose(&self) -> BiPoly {
        let q = self.q;
        let mut out = BiPoly::zero(q);
        for i in 0..q {
            for j in 0..q {
                out.coeffs[j * q + i] = self.coeffs[i * q + j];
            }
        }
        out
    }

    pub fn eval(&self, field: &Field, a: Elem, b: Elem) -> Elem {
        let q = self.q;
        let mut acc = Elem::ZERO;
        for i in 0..q {
            let row = &self.coeffs[i * q..(i + 1) * q];
            let inner = row.iter().rev().fold(Elem::ZERO, |s, &c| field.add(field.mul(s, b), c));
            acc = field.add(acc, field.mul(inner, field.pow_small(a, i)));
        }
        acc
    }

    /// Values `f(a, b)` in row-major order (`a` selects the row).
    pub fn table(&self, field: &Field) -> Vec<Elem> {
        let q = self.q;
        // partial[a][j] = sum_i c[i][j] a^i
        let mut partial = vec![Elem::ZERO; q * q];
        for a in field.elements() {
            for i in 0..q {
                let ai = field.pow_small(a, i);
                if ai.is_zero() {
                    continue;
                }
                for j in 0..q {
                    let c = self.coeffs[i * q + j];
                    if !c.is_zero() {
                        let slot = &mut partial[a.code() * q + j];
                        *slot = field.add(*slot, field.mul(c, ai));
                    }
                }
            }
        }
        let mut out = vec![Elem::ZERO; q * q];
        for a in 0..q {
            for b in field.elements() {
                let mut acc = Elem::ZERO;
                for j in 0..q {
                    acc = field.add(acc, field.mul(partial[a * q + j], field.pow_small(b, j)));
                }
                out[a * q + b.code()] = acc;
            }
        }
        out
    }

    /// The unique polynomial with per-variable degree `< q` whose value
    /// table (row-major, `a` selects the row) is `table`.
    pub fn interpolate(field: &Field, table: &[Elem]) -> Result<BiPoly> {
        let q = field.order();
        if table.len() != q * q {
            return usage(format!("value table has {} entries, expected {}", table.len(), q * q));
        }
        Ok(interpolate_bi_unchecked(field, table))
    }

    /// `f(a, y)` as a polynomial in one variable.
    pub fn row_section(&self, field: &Field, a: Elem) -> UniPoly {
        let q = self.q;
        let mut coeffs = vec![Elem::ZERO; q];
        for i in 0..q {
            let ai = field.pow_small(a, i);
            for (j, c) in coeffs.iter_mut().enumerate() {
                *c = field.add(*c, field.mul(self.coeffs[i * q + j], ai));
            }
        }
        UniPoly { coeffs }
    }

    /// `f(x, b)` as a polynomial in one variable.
    pub fn column_section(&self, field: &Field, b: Elem) -> UniPoly {
        self.transpose().row_section(field, b)
    }

    /// The x-only part, used when parsing univariate input.
    fn column_section_poly(&self) -> UniPoly {
        let q = self.q;
        UniPoly { coeffs: (0..q).map(|i| self.coeffs[i * q]).collect() }
    }

    pub fn add(&self, field: &Field, other: &BiPoly) -> BiPoly {
        BiPoly {
            q: self.q,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| field.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, field: &Field, c: Elem) -> BiPoly {
        BiPoly { q: self.q, coeffs: self.coeffs.iter().map(|&a| field.mul(a, c)).collect() }
    }

    pub fn mul(&self, field: &Field, other: &BiPoly) -> BiPoly {
        let q = self.q;
        let mut out = BiPoly::zero(q);
        let nz = |p: &BiPoly| -> Vec<(usize, usize, Elem)> {
            p.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, &c)| (k / q, k % q, c))
                .collect()
        };
        let (a, b) = (nz(self), nz(other));
        for &(i1, j1, c1) in &a {
            for &(i2, j2, c2) in &b {
                let k = fold_exponent(i1 + i2, q) * q + fold_exponent(j1 + j2, q);
                out.coeffs[k] = field.add(out.coeffs[k], field.mul(c1, c2));
            }
        }
        out
    }

    /// `f(g(x), h(y))`, the bracket product `f[g, h]`.
    pub fn substitute(&self, field: &Field, g: &UniPoly, h: &UniPoly) -> BiPoly {
        let q = self.q;
        let t = self.table(field);
        let gv = g.values(field);
        let hv = h.values(field);
        let mut out = vec![Elem::ZERO; q * q];
        for a in 0..q {
            for b in 0..q {
                out[a * q + b] = t[gv[a].code() * q + hv[b].code()];
            }
        }
        interpolate_bi_unchecked(field, &out)
    }

    /// `g(f(x, y))`.
    pub fn post_compose(&self, field: &Field, g: &UniPoly) -> BiPoly {
        let gv = g.values(field);
        let t: Vec<Elem> = self.table(field).into_iter().map(|v| gv[v.code()]).collect();
        interpolate_bi_unchecked(field, &t)
    }

    pub fn parse(field: &Field, src: &str) -> Result<BiPoly> {
        text::parse(&PolyAlgebra { field, allow_y: true }, src)
    }

    /// Terms in canonical print order: total degree descending, then x-exponent descending.
    pub fn terms(&self) -> Vec<(usize, usize, Elem)> {
        let q = self.q;
        let mut terms: Vec<(usize, usize, Elem)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| (k / q, k % q, c))
            .collect();
        terms.sort_by(|a, b| match (b.0 + b.1).cmp(&(a.0 + a.1)) {
            Ordering::Equal => b.0.cmp(&a.0),
            o => o,
        });
        terms
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms().into_iter().map(|(i, j, c)| {
            (c.code(), text::render_monomial([("x", i as u32), ("y", j as u32)].into_iter()))
        });
        write!(f, "{}", text::render_terms(terms))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

pub(crate) fn interpolate_bi_unchecked(field: &Field, table: &[Elem]) -> BiPoly {
    let q = field.order();
    // partial[a][j] = sum_b table[a][b] * ind_b[j]
    let mut partial = vec![Elem::ZERO; q * q];
    for a in 0..q {
        for b in field.elements() {
            let v = table[a * q + b.code()];
            if v.is_zero() {
                continue;
            }
            for j in 0..q {
                let slot = &mut partial[a * q + j];
                *slot = field.add(*slot, field.mul(v, field.indicator(b, j)));
            }
        }
    }
    let mut coeffs = vec![Elem::ZERO; q * q];
    for a in field.elements() {
        for i in 0..q {
            let w = field.indicator(a, i);
            if w.is_zero() {
                continue;
            }
            for j in 0..q {
                let slot = &mut coeffs[i * q + j];
                *slot = field.add(*slot, field.mul(w, partial[a.code() * q + j]));
            }
        }
    }
    BiPoly { q, coeffs }
}

/// Whether a value table is a permutation of the field.
pub(crate) fn table_is_permutation(values: &[Elem]) -> bool {
    is_bijection(values)
}

struct PolyAlgebra<'a> {
    field: &'a Field,
    allow_y: bool,
}

impl Algebra for PolyAlgebra<'_> {
    type Value = BiPoly;

    fn constant(&self, code: u64) -> Result<BiPoly> {
        let q = self.field.order();
        let c = self.field.elem(code as usize)?;
        Ok(BiPoly::constant(q, c))
    }

    fn variable(&self, name: &str) -> Result<BiPoly> {
        let q = self.field.order();
        match name {
            "x" => Ok(BiPoly::x(q)),
            "y" if self.allow_y => Ok(BiPoly::y(q)),
            _ => usage(format!("unknown variable {name:?}")),
        }
    }

    fn add(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        a.add(self.field, b)
    }

    fn neg(&self, a: &BiPoly) -> BiPoly {
        a.scale(self.field, self.field.neg(Elem::ONE))
    }

    fn mul(&self, a: &BiPoly, b: &BiPoly) -> BiPoly {
        a.mul(self.field, b)
    }
}
