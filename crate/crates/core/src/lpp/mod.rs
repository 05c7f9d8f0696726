//! Latin squares as local permutation polynomials (LPPs).
//!
//! A bivariate polynomial is an LPP when every section `f(x, a)` and
//! `f(a, x)` permutes GF(q); its value table is then a Latin square and
//! interpolation goes the other way.

mod conjugate;
mod enumerate;
mod isotopy;
mod mapping;

use std::fmt;

use crate::error::{domain, usage, Error, Result};
use crate::gf::{Elem, Field};
use crate::perm::is_bijection;
use crate::poly::BiPoly;

pub use conjugate::{conjugate, conjugates, is_totally_symmetric, ROLE_PERMUTATIONS};
pub use enumerate::{
    enumerate_latin_squares, enumerate_reduced_latin_squares, lpp_census, LatinSquares, LppCensus,
    LATIN_SQUARE_LIMIT, LPP_CENSUS_LIMIT,
};
pub use isotopy::{
    apply_isotopism, are_isotopic, generate_from_reduced, is_isolinear, isotopism_classes, least_zero,
    reduce_lpp, IsotopyClass, Isotopism, ISOLINEAR_LIMIT,
};
pub use mapping::{
    complete_mappings, hadamard_bi, hadamard_slices_are_transversals, hadamard_uni, is_transversal,
    map_complete_mapping, orthomorphisms, MAPPING_LIMIT, transversal_from_complete_mapping, transversals, Transversal,
};

/// A `q x q` Latin square over GF(q), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatinSquare {
    q: usize,
    cells: Vec<Elem>,
}

/// Whether every row and column of a row-major `q x q` table is a permutation.
pub(crate) fn table_is_latin(q: usize, cells: &[Elem]) -> bool {
    let mut col = vec![Elem::ZERO; q];
    (0..q).all(|r| is_bijection(&cells[r * q..(r + 1) * q]))
        && (0..q).all(|c| {
            for r in 0..q {
                col[r] = cells[r * q + c];
            }
            is_bijection(&col)
        })
}

impl LatinSquare {
    /// Validates the Latin property.
    pub fn new(q: usize, cells: Vec<Elem>) -> Result<LatinSquare> {
        if cells.len() != q * q {
            return usage(format!("square has {} cells, expected {}", cells.len(), q * q));
        }
        if !table_is_latin(q, &cells) {
            return domain("table is not a Latin square");
        }
        Ok(LatinSquare { q, cells })
    }

    pub(crate) fn new_unchecked(q: usize, cells: Vec<Elem>) -> LatinSquare {
        LatinSquare { q, cells }
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn get(&self, row: Elem, col: Elem) -> Elem {
        self.cells[row.code() * self.q + col.code()]
    }

    pub fn cells(&self) -> &[Elem] {
        &self.cells
    }

    /// Reduced: first row and first column are `0, 1, .., q-1`.
    pub fn is_reduced(&self) -> bool {
        (0..self.q).all(|a| self.cells[a].code() == a && self.cells[a * self.q].code() == a)
    }

    /// Entry triples `(row, column, symbol)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .map(move |(k, &s)| (Elem::from_code(k / self.q), Elem::from_code(k % self.q), s))
    }

    /// Parses the file format: a `q=<n>` line followed by `q` rows of codes.
    pub fn parse(src: &str) -> Result<LatinSquare> {
        let mut lines = src.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Usage("empty square file".into()))?;
        let q: usize = header
            .strip_prefix("q=")
            .and_then(|n| n.trim().parse().ok())
            .ok_or_else(|| Error::Usage(format!("expected header 'q=<n>', found {header:?}")))?;
        let mut cells = Vec::with_capacity(q * q);
        for (r, line) in lines.enumerate() {
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Usage(format!("bad element code {t:?} in row {r}"))))
                .collect::<Result<_>>()?;
            if row.len() != q {
                return usage(format!("row {r} has {} entries, expected {q}", row.len()));
            }
            if let Some(&bad) = row.iter().find(|&&c| c >= q) {
                return usage(format!("element code {bad} out of range for q = {q}"));
            }
            cells.extend(row.into_iter().map(Elem::from_code));
        }
        if cells.len() != q * q {
            return usage(format!("expected {q} rows, found {}", cells.len() / q.max(1)));
        }
        LatinSquare::new(q, cells)
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q={}", self.q)?;
        for row in self.cells.chunks(self.q) {
            let codes: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "{}", codes.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatinSquare({:?})", self.cells.iter().map(|c| c.code()).collect::<Vec<_>>())
    }
}

/// Every row and column section is a permutation polynomial.
pub fn is_lpp(field: &Field, f: &BiPoly) -> bool {
    table_is_latin(field.order(), &f.table(field))
}

/// Boundary sections are the identity: `f(x, 0) = x` and `f(0, y) = y`.
pub fn is_reduced(f: &BiPoly) -> bool {
    let q = f.order();
    (0..q).all(|i| {
        let expect = if i == 1 { Elem::ONE } else { Elem::ZERO };
        f.coeff(i, 0) == expect && f.coeff(0, i) == expect
    })
}

/// The square `L_f[a, b] = f(a, b)`.
pub fn square_from_lpp(field: &Field, f: &BiPoly) -> Result<LatinSquare> {
    let cells = f.table(field);
    if !table_is_latin(field.order(), &cells) {
        return domain(format!("{f} is not a local permutation polynomial"));
    }
    Ok(LatinSquare::new_unchecked(field.order(), cells))
}

/// The interpolating polynomial of a square.
pub fn lpp_from_square(field: &Field, square: &LatinSquare) -> Result<BiPoly> {
    if square.order() != field.order() {
        return usage(format!("square of order {} over GF({})", square.order(), field.order()));
    }
    Ok(crate::poly::interpolate_bi_unchecked(field, square.cells()))
}

pub(crate) fn require_lpp(field: &Field, f: &BiPoly) -> Result<Vec<Elem>> {
    if f.order() != field.order() {
        return usage(format!("polynomial over GF({}) used with GF({})", f.order(), field.order()));
    }
    let t = f.table(field);
    if table_is_latin(field.order(), &t) {
        Ok(t)
    } else {
        domain(format!("{f} is not a local permutation polynomial"))
    }
}
