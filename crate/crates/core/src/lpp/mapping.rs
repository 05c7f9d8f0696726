//! Hadamard quasigroup products, complete mappings, orthomorphisms and
//! transversals.

use std::fmt;

use super::{require_lpp, Isotopism, LatinSquare};
use crate::error::{capacity, domain, usage, Result};
use crate::gf::{Elem, Field};
use crate::perm::{is_bijection, next_permutation};
use crate::poly::{interpolate_bi_unchecked, BiPoly, UniPoly};

/// Largest order for complete-mapping and transversal enumeration.
pub const MAPPING_LIMIT: usize = 9;

/// `a ↦ f(g1(a), g2(a))`.
pub fn hadamard_uni(field: &Field, f: &BiPoly, g1: &UniPoly, g2: &UniPoly) -> Result<UniPoly> {
    let t = require_lpp(field, f)?;
    let q = field.order();
    let (v1, v2) = (g1.values(field), g2.values(field));
    let values: Vec<Elem> = (0..q).map(|a| t[v1[a].code() * q + v2[a].code()]).collect();
    UniPoly::interpolate(field, &values)
}

/// `(a, b) ↦ f(g1(a, b), g2(a, b))`. The result need not be an LPP.
pub fn hadamard_bi(field: &Field, f: &BiPoly, g1: &BiPoly, g2: &BiPoly) -> Result<BiPoly> {
    let t = require_lpp(field, f)?;
    let (t1, t2) = (require_lpp(field, g1)?, require_lpp(field, g2)?);
    let q = field.order();
    let cells: Vec<Elem> = t1.iter().zip(&t2).map(|(a, b)| t[a.code() * q + b.code()]).collect();
    Ok(interpolate_bi_unchecked(field, &cells))
}

/// `q` entries of a square, one per row, column and symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transversal {
    cells: Vec<(Elem, Elem, Elem)>,
}

impl Transversal {
    /// Entries `(row, column, symbol)`, sorted by row.
    pub fn cells(&self) -> &[(Elem, Elem, Elem)] {
        &self.cells
    }
}

impl fmt::Display for Transversal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, c, s) in &self.cells {
            writeln!(f, "{r} {c} {s}")?;
        }
        Ok(())
    }
}

/// Whether `cells` is a transversal of `square`.
pub fn is_transversal(square: &LatinSquare, cells: &[(Elem, Elem, Elem)]) -> bool {
    let q = square.order();
    cells.len() == q
        && cells.iter().all(|&(r, c, s)| r.code() < q && c.code() < q && square.get(r, c) == s)
        && is_bijection(&cells.iter().map(|t| t.0).collect::<Vec<_>>())
        && is_bijection(&cells.iter().map(|t| t.1).collect::<Vec<_>>())
        && is_bijection(&cells.iter().map(|t| t.2).collect::<Vec<_>>())
}

fn mapping_guard(q: usize) -> Result<()> {
    if q > MAPPING_LIMIT {
        return capacity(format!("enumeration for q = {q} exceeds the q <= {MAPPING_LIMIT} guard"));
    }
    Ok(())
}

/// Backtracking over rows; calls `visit` with the column chosen for each row.
fn search_transversals(square: &LatinSquare, mut visit: impl FnMut(&[usize])) {
    let q = square.order();
    let cells = square.cells();
    let mut cols = vec![0usize; q];
    let mut next = vec![0usize; q + 1];
    let (mut used_cols, mut used_syms) = (0u32, 0u32);
    let mut row = 0usize;
    if q == 0 {
        return;
    }
    loop {
        if row == q {
            visit(&cols);
            row -= 1;
            used_cols &= !(1 << cols[row]);
            used_syms &= !(1 << cells[row * q + cols[row]].code());
            continue;
        }
        let found = (next[row]..q).find(|&c| {
            used_cols & (1 << c) == 0 && used_syms & (1 << cells[row * q + c].code()) == 0
        });
        match found {
            Some(c) => {
                cols[row] = c;
                used_cols |= 1 << c;
                used_syms |= 1 << cells[row * q + c].code();
                next[row] = c + 1;
                row += 1;
                next[row] = 0;
            }
            None => {
                if row == 0 {
                    return;
                }
                row -= 1;
                used_cols &= !(1 << cols[row]);
                used_syms &= !(1 << cells[row * q + cols[row]].code());
            }
        }
    }
}

pub(crate) fn count_transversals(square: &LatinSquare) -> u64 {
    let mut n = 0;
    search_transversals(square, |_| n += 1);
    n
}

/// All transversals, in lexicographic order of their column sequences.
pub fn transversals(square: &LatinSquare) -> Result<Vec<Transversal>> {
    mapping_guard(square.order())?;
    let mut out = Vec::new();
    search_transversals(square, |cols| {
        let cells = cols
            .iter()
            .enumerate()
            .map(|(r, &c)| {
                let (r, c) = (Elem::from_code(r), Elem::from_code(c));
                (r, c, square.get(r, c))
            })
            .collect();
        out.push(Transversal { cells });
    });
    Ok(out)
}

/// Value tables of the complete mappings of `f`, by brute force over all permutations.
fn complete_mapping_tables(field: &Field, f: &BiPoly) -> Result<Vec<Vec<Elem>>> {
    let q = field.order();
    mapping_guard(q)?;
    let t = require_lpp(field, f)?;
    let mut g: Vec<u8> = (0..q as u8).collect();
    let mut out = Vec::new();
    let mut image = vec![Elem::ZERO; q];
    loop {
        for a in 0..q {
            image[a] = t[a * q + g[a] as usize];
        }
        if is_bijection(&image) {
            out.push(g.iter().map(|&c| Elem::from_code(c as usize)).collect());
        }
        if !next_permutation(&mut g) {
            break;
        }
    }
    Ok(out)
}

/// Every permutation polynomial `g` with `f(x, g(x))` also a permutation
/// polynomial, in lexicographic order of value tables.
pub fn complete_mappings(field: &Field, f: &BiPoly) -> Result<Vec<UniPoly>> {
    Ok(complete_mapping_tables(field, f)?
        .iter()
        .map(|v| UniPoly::interpolate(field, v).expect("table of length q"))
        .collect())
}

/// The orthomorphisms `f(x, g(x))`, one per complete mapping and in the same order.
pub fn orthomorphisms(field: &Field, f: &BiPoly) -> Result<Vec<UniPoly>> {
    let id = UniPoly::identity(field.order());
    complete_mappings(field, f)?.iter().map(|g| hadamard_uni(field, f, &id, g)).collect()
}

/// `h2 ∘ g ∘ h1^-1`: transports a complete mapping along an isotopism.
pub fn map_complete_mapping(field: &Field, g: &UniPoly, iso: &Isotopism) -> Result<UniPoly> {
    let gp = g.to_permutation(field)?;
    if iso.order() != field.order() {
        return usage(format!("isotopism of order {} used over GF({})", iso.order(), field.order()));
    }
    let [h1, h2, _] = iso.components();
    Ok(UniPoly::from_permutation(field, &h2.compose(&gp).compose(&h1.inverse())))
}

/// The transversal `{(a, g(a), f(a, g(a)))}` of a complete mapping `g`.
pub fn transversal_from_complete_mapping(field: &Field, f: &BiPoly, g: &UniPoly) -> Result<Transversal> {
    let t = require_lpp(field, f)?;
    let q = field.order();
    let cells: Vec<(Elem, Elem, Elem)> = field
        .elements()
        .map(|a| {
            let b = g.eval(field, a);
            (a, b, t[a.code() * q + b.code()])
        })
        .collect();
    if !is_transversal(&LatinSquare::new_unchecked(q, t), &cells) {
        return domain(format!("{g} is not a complete mapping of {f}"));
    }
    Ok(Transversal { cells })
}

/// Whether every row slice `{(g1(a, b), g2(a, b), h(a, b)) : b}` and every
/// column slice of `h = f(g1, g2)` is a transversal of the square of `f`.
pub fn hadamard_slices_are_transversals(field: &Field, f: &BiPoly, g1: &BiPoly, g2: &BiPoly) -> Result<bool> {
    let q = field.order();
    let square = LatinSquare::new_unchecked(q, require_lpp(field, f)?);
    let (t1, t2) = (require_lpp(field, g1)?, require_lpp(field, g2)?);
    let entry = |k: usize| (t1[k], t2[k], square.get(t1[k], t2[k]));
    Ok((0..q).all(|a| {
        let row: Vec<_> = (0..q).map(|b| entry(a * q + b)).collect();
        let col: Vec<_> = (0..q).map(|b| entry(b * q + a)).collect();
        is_transversal(&square, &row) && is_transversal(&square, &col)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpp::{apply_isotopism, enumerate_latin_squares, is_lpp, square_from_lpp};
    use crate::perm::Permutation;

    fn gf(q: usize) -> Field {
        Field::new(q).unwrap()
    }

    fn bi(f: &Field, s: &str) -> BiPoly {
        BiPoly::parse(f, s).unwrap()
    }

    fn uni(f: &Field, s: &str) -> UniPoly {
        UniPoly::parse(f, s).unwrap()
    }

    #[test]
    fn hadamard_examples() {
        let f = gf(4);
        let add = bi(&f, "x + y");
        let x = uni(&f, "x");
        assert!(hadamard_uni(&f, &add, &x, &x).unwrap().is_zero());
        assert_eq!(hadamard_uni(&f, &add, &x, &uni(&f, "2*x")).unwrap(), uni(&f, "3*x"));
        let g1 = bi(&f, "(x*y + x + y + 1)*x*y + x + y");
        assert!(hadamard_bi(&f, &add, &g1, &g1).unwrap().is_zero());
    }

    #[test]
    fn complete_mappings_of_order_4_representatives() {
        let f = gf(4);
        let add = bi(&f, "x + y");
        let cms = complete_mappings(&f, &add).unwrap();
        assert_eq!(cms.len(), 8);
        for g in &cms {
            let (s2, s1) = (g.coeff(2), g.coeff(1));
            assert!(s2.is_zero());
            assert_eq!(f.add(f.mul(s1, s1), s1), Elem::ONE);
        }
        for s1 in f.elements().filter(|&s1| f.add(f.mul(s1, s1), s1) == Elem::ONE) {
            for s0 in f.elements() {
                assert!(cms.contains(&UniPoly::from_coeffs(&f, &[s0, s1])));
            }
        }
        let g1 = bi(&f, "(x*y + x + y + 1)*x*y + x + y");
        assert!(complete_mappings(&f, &g1).unwrap().is_empty());
        assert_eq!(orthomorphisms(&f, &add).unwrap().len(), 8);
    }

    #[test]
    fn transversal_examples() {
        let f = gf(4);
        let add = bi(&f, "x + y");
        let sq = square_from_lpp(&f, &add).unwrap();
        let ts = transversals(&sq).unwrap();
        assert_eq!(ts.len(), 8);
        let g1 = bi(&f, "(x*y + x + y + 1)*x*y + x + y");
        assert!(transversals(&square_from_lpp(&f, &g1).unwrap()).unwrap().is_empty());

        let from_cms: Vec<Transversal> = complete_mappings(&f, &add)
            .unwrap()
            .iter()
            .map(|g| transversal_from_complete_mapping(&f, &add, g).unwrap())
            .collect();
        assert_eq!(from_cms, ts);
        assert!(transversal_from_complete_mapping(&f, &add, &uni(&f, "x")).is_err());
    }

    #[test]
    fn counts_agree_on_all_order_4_squares() {
        let f = gf(4);
        for sq in enumerate_latin_squares(&f).unwrap() {
            let p = interpolate_bi_unchecked(&f, sq.cells());
            let n = complete_mappings(&f, &p).unwrap().len();
            assert!(n == 8 || n == 0);
            assert_eq!(transversals(&sq).unwrap().len(), n);
        }
    }

    #[test]
    fn transport_along_isotopism() {
        let f = gf(4);
        let add = bi(&f, "x + y");
        let iso = Isotopism::new(
            Permutation::from_codes(&[2, 0, 3, 1]).unwrap(),
            Permutation::from_codes(&[1, 3, 0, 2]).unwrap(),
            Permutation::from_codes(&[3, 2, 0, 1]).unwrap(),
        )
        .unwrap();
        let image = apply_isotopism(&f, &add, &iso).unwrap();
        let mut pushed: Vec<UniPoly> = complete_mappings(&f, &add)
            .unwrap()
            .iter()
            .map(|g| map_complete_mapping(&f, g, &iso).unwrap())
            .collect();
        pushed.sort();
        let mut target = complete_mappings(&f, &image).unwrap();
        target.sort();
        assert_eq!(pushed, target);
        let g = uni(&f, "2*x");
        assert_eq!(map_complete_mapping(&f, &g, &Isotopism::identity(4)).unwrap(), g);
    }

    /// `f(g, a g)` is an LPP iff `a x` is a complete mapping of `f`.
    #[test]
    fn scaled_products() {
        let f = gf(4);
        for (src, expect_any) in [("x + y", true), ("(x*y + x + y + 1)*x*y + x + y", false)] {
            let p = bi(&f, src);
            let cms = complete_mappings(&f, &p).unwrap();
            let mut any = false;
            for a in f.elements().skip(1) {
                let ax = UniPoly::monomial(4, a, 1);
                let ag = p.post_compose(&f, &ax);
                let prod = hadamard_bi(&f, &p, &p, &ag).unwrap();
                let is = is_lpp(&f, &prod);
                assert_eq!(is, cms.contains(&ax));
                assert_eq!(is, hadamard_slices_are_transversals(&f, &p, &p, &ag).unwrap());
                any |= is;
            }
            assert_eq!(any, expect_any);
        }
    }
}
