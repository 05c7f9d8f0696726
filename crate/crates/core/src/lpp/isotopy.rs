//! Isotopisms of LPPs, reduction to reduced form, isolinearity and the
//! partition into isotopism classes.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;

use super::enumerate::{enumerate_latin_squares, enumerate_reduced_latin_squares, LPP_CENSUS_LIMIT};
use super::mapping::count_transversals;
use super::{require_lpp, LatinSquare};
use crate::error::{capacity, usage, Error, Result};
use crate::gf::{Elem, Field};
use crate::perm::Permutation;
use crate::poly::{interpolate_bi_unchecked, BiPoly, UniPoly};

/// Largest order accepted by [`is_isolinear`].
pub const ISOLINEAR_LIMIT: usize = 7;

/// A triple `(h1, h2, h3)` of permutations acting on rows, columns and symbols.
///
/// Acting on `f` it produces the `g` with `g[h1, h2] = h3 f`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Isotopism {
    theta: [Permutation; 3],
}

impl Isotopism {
    pub fn new(h1: Permutation, h2: Permutation, h3: Permutation) -> Result<Isotopism> {
        if h1.len() != h2.len() || h2.len() != h3.len() {
            return usage("isotopism components act on sets of different sizes");
        }
        Ok(Isotopism { theta: [h1, h2, h3] })
    }

    pub fn identity(q: usize) -> Isotopism {
        let id = Permutation::identity(q);
        Isotopism { theta: [id.clone(), id.clone(), id] }
    }

    /// Builds the triple from permutation polynomials.
    pub fn from_polys(field: &Field, h1: &UniPoly, h2: &UniPoly, h3: &UniPoly) -> Result<Isotopism> {
        Isotopism::new(h1.to_permutation(field)?, h2.to_permutation(field)?, h3.to_permutation(field)?)
    }

    pub fn components(&self) -> &[Permutation; 3] {
        &self.theta
    }

    /// The interpolated components `(h1, h2, h3)`.
    pub fn to_polys(&self, field: &Field) -> [UniPoly; 3] {
        self.theta.clone().map(|p| UniPoly::from_permutation(field, &p))
    }

    pub fn order(&self) -> usize {
        self.theta[0].len()
    }

    pub fn is_principal(&self) -> bool {
        self.theta[2].is_identity()
    }

    /// Componentwise `self ∘ other`: acting by the result equals acting by
    /// `other` and then by `self`.
    pub fn compose(&self, other: &Isotopism) -> Isotopism {
        Isotopism { theta: [0, 1, 2].map(|i| self.theta[i].compose(&other.theta[i])) }
    }

    pub fn inverse(&self) -> Isotopism {
        Isotopism { theta: [0, 1, 2].map(|i| self.theta[i].inverse()) }
    }

    /// `new[h1(a)][h2(b)] = h3(old[a][b])` on a row-major table.
    pub fn act_on_table(&self, q: usize, cells: &[Elem]) -> Vec<Elem> {
        let [t1, t2, t3] = &self.theta;
        let mut out = vec![Elem::ZERO; q * q];
        for a in 0..q {
            let ra = t1.table()[a].code();
            for b in 0..q {
                out[ra * q + t2.table()[b].code()] = t3.apply(cells[a * q + b]);
            }
        }
        out
    }

    pub fn act_on_square(&self, square: &LatinSquare) -> LatinSquare {
        LatinSquare::new_unchecked(square.order(), self.act_on_table(square.order(), square.cells()))
    }
}

fn check_order(field: &Field, iso: &Isotopism) -> Result<()> {
    if iso.order() != field.order() {
        return usage(format!("isotopism of order {} used over GF({})", iso.order(), field.order()));
    }
    Ok(())
}

/// The unique `g` with `g[h1, h2] = h3 f`.
pub fn apply_isotopism(field: &Field, f: &BiPoly, iso: &Isotopism) -> Result<BiPoly> {
    let t = require_lpp(field, f)?;
    check_order(field, iso)?;
    Ok(interpolate_bi_unchecked(field, &iso.act_on_table(field.order(), &t)))
}

/// Searches for an isotopism from `f` to `g`, i.e. a triple with `apply_isotopism(f, w) = g`.
///
/// Row and column permutations are tried in lexicographic order; the symbol
/// permutation is then forced by the first row. The identity is found first
/// when `f = g`.
pub fn are_isotopic(field: &Field, f: &BiPoly, g: &BiPoly) -> Result<Option<Isotopism>> {
    let q = field.order();
    if q > LPP_CENSUS_LIMIT {
        return capacity(format!("isotopism search for q = {q} exceeds the q <= {LPP_CENSUS_LIMIT} guard"));
    }
    let tf = require_lpp(field, f)?;
    let tg = require_lpp(field, g)?;
    let sf = LatinSquare::new_unchecked(q, tf.clone());
    let sg = LatinSquare::new_unchecked(q, tg.clone());
    if count_transversals(&sf) != count_transversals(&sg) {
        return Ok(None);
    }
    let perms: Vec<Permutation> = Permutation::all(q).collect();
    for t1 in &perms {
        for t2 in &perms {
            let r0 = t1.table()[0].code();
            let mut t3 = vec![Elem::ZERO; q];
            for b in 0..q {
                t3[tf[b].code()] = tg[r0 * q + t2.table()[b].code()];
            }
            let t3 = Permutation::from_table(t3).expect("row sections of an LPP are bijective");
            let iso = Isotopism { theta: [t1.clone(), t2.clone(), t3] };
            if iso.act_on_table(q, &tf) == tg {
                return Ok(Some(iso));
            }
        }
    }
    Ok(None)
}

/// Lexicographically least `(a, b)` with `f(a, b) = 0`.
pub fn least_zero(field: &Field, f: &BiPoly) -> Option<(Elem, Elem)> {
    let q = field.order();
    f.table(field)
        .iter()
        .position(|v| v.is_zero())
        .map(|k| (Elem::from_code(k / q), Elem::from_code(k % q)))
}

/// Principal isotopy to a reduced LPP through a zero `(a, b)` of `f`.
///
/// Returns `rho = f[p + a, q + b]` with `p = (f(x + a, b))^-1` and
/// `q = (f(a, x + b))^-1`, together with the witness `(p + a, q + b, x)`,
/// which maps `rho` back onto `f`.
pub fn reduce_lpp(field: &Field, f: &BiPoly, a: Elem, b: Elem) -> Result<(BiPoly, Isotopism)> {
    let t = require_lpp(field, f)?;
    let q = field.order();
    field.check(a)?;
    field.check(b)?;
    if !t[a.code() * q + b.code()].is_zero() {
        return Err(Error::Precondition(format!("f({a}, {b}) is not zero")));
    }
    let row: Vec<Elem> = field.elements().map(|x| t[field.add(x, a).code() * q + b.code()]).collect();
    let col: Vec<Elem> = field.elements().map(|y| t[a.code() * q + field.add(y, b).code()]).collect();
    let p = Permutation::from_table(row)?.inverse();
    let r = Permutation::from_table(col)?.inverse();
    let shift = |perm: &Permutation, c: Elem| {
        Permutation::from_table(perm.table().iter().map(|&v| field.add(v, c)).collect())
            .expect("translation of a permutation")
    };
    let h1 = shift(&p, a);
    let h2 = shift(&r, b);
    let mut rho = vec![Elem::ZERO; q * q];
    for x in 0..q {
        for y in 0..q {
            rho[x * q + y] = t[h1.table()[x].code() * q + h2.table()[y].code()];
        }
    }
    let witness = Isotopism { theta: [h1, h2, Permutation::identity(q)] };
    Ok((interpolate_bi_unchecked(field, &rho), witness))
}

/// Whether `f = h3(h1(x) + h2(y))` for some permutations.
///
/// Only `h3` is enumerated: `h1` and `h2` are forced by the boundary
/// sections `f(x, 0)` and `f(0, y)` once constants are absorbed.
pub fn is_isolinear(field: &Field, f: &BiPoly) -> Result<bool> {
    let q = field.order();
    if q > ISOLINEAR_LIMIT {
        return capacity(format!("isolinearity test for q = {q} exceeds the q <= {ISOLINEAR_LIMIT} guard"));
    }
    let t = require_lpp(field, f)?;
    Ok(Permutation::all(q).any(|h3| {
        let inv = h3.inverse();
        let h1: Vec<Elem> = (0..q).map(|x| inv.apply(t[x * q])).collect();
        let h2: Vec<Elem> = (0..q).map(|y| field.sub(inv.apply(t[y]), h1[0])).collect();
        (0..q).all(|x| (0..q).all(|y| h3.apply(field.add(h1[x], h2[y])) == t[x * q + y]))
    }))
}

/// Every `f[h, h']` with `f` reduced and `h, h'` permutation polynomials, deduplicated.
pub fn generate_from_reduced(field: &Field) -> Result<BTreeSet<BiPoly>> {
    let q = field.order();
    if q > LPP_CENSUS_LIMIT {
        return capacity(format!("generation for q = {q} exceeds the q <= {LPP_CENSUS_LIMIT} guard"));
    }
    let reduced: Vec<Vec<Elem>> = enumerate_reduced_latin_squares(field)?.map(|s| s.cells().to_vec()).collect();
    let perms: Vec<Permutation> = Permutation::all(q).collect();
    let out = reduced
        .par_iter()
        .flat_map_iter(|t| {
            let perms = &perms;
            perms.iter().flat_map(move |h| {
                perms.iter().map(move |h2| {
                    let mut cells = vec![Elem::ZERO; q * q];
                    for x in 0..q {
                        for y in 0..q {
                            cells[x * q + y] = t[h.table()[x].code() * q + h2.table()[y].code()];
                        }
                    }
                    cells
                })
            })
        })
        .collect::<HashSet<Vec<Elem>>>();
    Ok(out.into_par_iter().map(|cells| interpolate_bi_unchecked(field, &cells)).collect::<Vec<_>>().into_iter().collect())
}

/// One isotopism class of Latin squares of order `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotopyClass {
    /// Lexicographically least reduced square in the class.
    pub representative: LatinSquare,
    /// Its interpolating polynomial.
    pub representative_lpp: BiPoly,
    /// All squares in the class, sorted.
    pub members: Vec<LatinSquare>,
}

impl IsotopyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

fn pack(cells: &[Elem]) -> u128 {
    cells.iter().fold(0u128, |acc, c| (acc << 4) | c.code() as u128)
}

/// Orbits of all Latin squares of order `q` under isotopy, found by
/// breadth-first search with adjacent transpositions in each coordinate.
/// Classes are sorted by representative.
pub fn isotopism_classes(field: &Field) -> Result<Vec<IsotopyClass>> {
    let q = field.order();
    if q > LPP_CENSUS_LIMIT {
        return capacity(format!("isotopism classes for q = {q} exceed the q <= {LPP_CENSUS_LIMIT} guard"));
    }
    let mut generators = Vec::new();
    for i in 0..q.saturating_sub(1) {
        let t = Permutation::transposition(q, i, i + 1);
        let id = Permutation::identity(q);
        generators.push(Isotopism { theta: [t.clone(), id.clone(), id.clone()] });
        generators.push(Isotopism { theta: [id.clone(), t.clone(), id.clone()] });
        generators.push(Isotopism { theta: [id.clone(), id, t] });
    }
    let mut seen: HashSet<u128> = HashSet::new();
    let mut classes = Vec::new();
    for start in enumerate_latin_squares(field)? {
        if seen.contains(&pack(start.cells())) {
            continue;
        }
        seen.insert(pack(start.cells()));
        let mut members = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(sq) = queue.pop_front() {
            for g in &generators {
                let next = g.act_on_square(&sq);
                if seen.insert(pack(next.cells())) {
                    members.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        members.sort();
        let representative =
            members.iter().find(|s| s.is_reduced()).cloned().expect("every class contains a reduced square");
        let representative_lpp = interpolate_bi_unchecked(field, representative.cells());
        classes.push(IsotopyClass { representative, representative_lpp, members });
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpp::{is_lpp, is_reduced, square_from_lpp};

    fn gf(q: usize) -> Field {
        Field::new(q).unwrap()
    }

    fn bi(f: &Field, s: &str) -> BiPoly {
        BiPoly::parse(f, s).unwrap()
    }

    fn uni(f: &Field, s: &str) -> UniPoly {
        UniPoly::parse(f, s).unwrap()
    }

    /// `g_a = (xy + a(x + y) + a^2) xy + x + y` over GF(4).
    fn g_alpha(f: &Field, a: usize) -> BiPoly {
        bi(f, &format!("(x*y + {a}*(x + y) + {a}^2)*x*y + x + y"))
    }

    #[test]
    fn identity_acts_trivially() {
        let f = gf(4);
        let p = g_alpha(&f, 1);
        assert_eq!(apply_isotopism(&f, &p, &Isotopism::identity(4)).unwrap(), p);
    }

    #[test]
    fn square_level_action_matches_polynomial_definition() {
        let f = gf(5);
        let p = bi(&f, "x + 2*y + 3");
        let iso = Isotopism::from_polys(&f, &uni(&f, "2*x + 1"), &uni(&f, "x^3"), &uni(&f, "4*x + 2")).unwrap();
        let g = apply_isotopism(&f, &p, &iso).unwrap();
        let [h1, h2, h3] = iso.to_polys(&f);
        assert_eq!(g.substitute(&f, &h1, &h2), p.post_compose(&f, &h3));
        let sq = square_from_lpp(&f, &p).unwrap();
        assert_eq!(iso.act_on_square(&sq), square_from_lpp(&f, &g).unwrap());
    }

    #[test]
    fn g_u_is_isomorphic_to_g_1() {
        let f = gf(4);
        let (g1, gu) = (g_alpha(&f, 1), g_alpha(&f, 2));
        let h = uni(&f, "2*x^2");
        let iso = Isotopism::from_polys(&f, &h, &h, &h).unwrap();
        assert_eq!(apply_isotopism(&f, &gu, &iso).unwrap(), g1);
        assert_eq!(apply_isotopism(&f, &g1, &iso).unwrap(), gu);
        let w = are_isotopic(&f, &gu, &g1).unwrap().expect("isotopic");
        assert_eq!(apply_isotopism(&f, &gu, &w).unwrap(), g1);
    }

    #[test]
    fn linear_and_g_1_are_not_isotopic() {
        let f = gf(4);
        assert_eq!(are_isotopic(&f, &bi(&f, "x + y"), &g_alpha(&f, 1)).unwrap(), None);
        let p = g_alpha(&f, 3);
        assert_eq!(are_isotopic(&f, &p, &p).unwrap(), Some(Isotopism::identity(4)));
    }

    /// `f_2(a^2 c x, a^2 b y^2) = b^2 c^2 g_1 + d` for every admissible `a, b, c, d`.
    #[test]
    fn s2_family_maps_onto_g_1() {
        let f = gf(4);
        let g1 = g_alpha(&f, 1);
        for a in 1..4 {
            for b in 1..4 {
                for c in 1..4 {
                    for d in 0..4 {
                        let src = format!(
                            "({a}*x*y + {b}*x + {c}*y + {a}^2*{b}*{c})*x*y + {a}*{b}^2*{c}*x + {a}^2*{c}^2*y^2 + {d}"
                        );
                        let f2 = bi(&f, &src);
                        assert!(is_lpp(&f, &f2));
                        let h1 = uni(&f, &format!("{a}^2*{c}*x"));
                        let h2 = uni(&f, &format!("{a}^2*{b}*x^2"));
                        let h3 = uni(&f, &format!("{b}^2*{c}^2*x + {d}"));
                        let iso = Isotopism::from_polys(&f, &h1, &h2, &h3).unwrap();
                        assert_eq!(apply_isotopism(&f, &g1, &iso).unwrap(), f2);
                    }
                }
            }
        }
    }

    #[test]
    fn reduce_examples() {
        let f = gf(5);
        for c in f.elements() {
            let p = bi(&f, &format!("x + y + {c}"));
            let (rho, w) = reduce_lpp(&f, &p, f.neg(c), Elem::ZERO).unwrap();
            assert_eq!(rho.to_string(), "x + y");
            let [h1, h2, h3] = w.to_polys(&f);
            assert_eq!(h1, uni(&f, &format!("x - {c}")));
            assert_eq!(h2, uni(&f, "x"));
            assert_eq!(h3, uni(&f, "x"));
            assert_eq!(apply_isotopism(&f, &rho, &w).unwrap(), p);
        }
        let f4 = gf(4);
        let g = g_alpha(&f4, 2);
        let (rho, w) = reduce_lpp(&f4, &g, Elem::ZERO, Elem::ZERO).unwrap();
        assert_eq!(rho, g);
        assert_eq!(w, Isotopism::identity(4));
        assert!(matches!(reduce_lpp(&f, &bi(&f, "x + y + 1"), Elem::ZERO, Elem::ZERO), Err(Error::Precondition(_))));
        assert!(matches!(reduce_lpp(&f, &bi(&f, "x*y"), Elem::ZERO, Elem::ZERO), Err(Error::Domain(_))));
    }

    /// Each `f_i` of the S2 family at `(a_i, 0)` reduces to
    /// `(xy + b^2c^2(x + y) + bc) xy + x + y`.
    #[test]
    fn s2_family_reductions() {
        let f = gf(4);
        for a in 1..4 {
            for b in 1..4 {
                for c in 1..4 {
                    for d in 0..4 {
                        let head = format!("({a}*x*y + {b}*x + {c}*y + {a}^2*{b}*{c})*x*y");
                        let xs = [format!("{a}*{b}^2*{c}*x"), format!("{a}^2*{b}^2*x^2")];
                        let ys = [format!("{a}*{b}*{c}^2*y"), format!("{a}^2*{c}^2*y^2")];
                        let expected = bi(&f, &format!("(x*y + {b}^2*{c}^2*(x + y) + {b}*{c})*x*y + x + y"));
                        for xt in &xs {
                            for yt in &ys {
                                let fi = bi(&f, &format!("{head} + {xt} + {yt} + {d}"));
                                let ai = field_root_on_x_axis(&f, &fi);
                                let (rho, w) = reduce_lpp(&f, &fi, ai, Elem::ZERO).unwrap();
                                assert_eq!(rho, expected, "{fi}");
                                assert!(w.is_principal());
                            }
                        }
                    }
                }
            }
        }
    }

    fn field_root_on_x_axis(f: &Field, p: &BiPoly) -> Elem {
        f.elements().find(|&a| p.eval(f, a, Elem::ZERO).is_zero()).unwrap()
    }

    #[test]
    fn reduction_lands_in_reduced_family() {
        let f = gf(4);
        let reduced: BTreeSet<BiPoly> = (0..4).map(|a| g_alpha_family(&f, a)).collect();
        for sq in enumerate_latin_squares(&f).unwrap() {
            let p = interpolate_bi_unchecked(&f, sq.cells());
            let (a, b) = least_zero(&f, &p).unwrap();
            let (rho, w) = reduce_lpp(&f, &p, a, b).unwrap();
            assert!(is_reduced(&rho));
            assert!(reduced.contains(&rho));
            assert_eq!(apply_isotopism(&f, &rho, &w).unwrap(), p);
        }
    }

    /// `(a^3 xy + a(x+y) + a^2) xy + x + y`.
    fn g_alpha_family(f: &Field, a: usize) -> BiPoly {
        bi(f, &format!("({a}^3*x*y + {a}*(x + y) + {a}^2)*x*y + x + y"))
    }

    #[test]
    fn isolinearity() {
        for q in [2, 3] {
            let f = gf(q);
            for sq in enumerate_latin_squares(&f).unwrap() {
                assert!(is_isolinear(&f, &interpolate_bi_unchecked(&f, sq.cells())).unwrap());
            }
        }
        let f = gf(5);
        assert!(is_isolinear(&f, &bi(&f, "x^3 + 2*y + 1")).unwrap());
        let f4 = gf(4);
        assert!(!is_isolinear(&f4, &g_alpha(&f4, 1)).unwrap());
        assert!(is_isolinear(&f4, &bi(&f4, "2*x^2 + y")).unwrap());
    }

    #[test]
    fn generation_q2_and_q4() {
        let f2 = gf(2);
        let all: Vec<String> = generate_from_reduced(&f2).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(all, vec!["x + y", "x + y + 1"]);
        let f4 = gf(4);
        let gen = generate_from_reduced(&f4).unwrap();
        assert_eq!(gen.len(), 576);
        let listed: BTreeSet<BiPoly> =
            enumerate_latin_squares(&f4).unwrap().map(|s| interpolate_bi_unchecked(&f4, s.cells())).collect();
        assert_eq!(gen, listed);
        let separate = gen.iter().filter(|p| p.coeff(2, 2).is_zero()).count();
        assert_eq!((separate, gen.len() - separate), (144, 432));
    }

    #[test]
    fn classes_small() {
        let c3 = isotopism_classes(&gf(3)).unwrap();
        assert_eq!(c3.len(), 1);
        assert_eq!(c3[0].size(), 12);
        let f = gf(4);
        let c4 = isotopism_classes(&f).unwrap();
        let sizes: Vec<usize> = c4.iter().map(IsotopyClass::size).collect();
        assert_eq!(sizes, vec![144, 432]);
        assert_eq!(c4[0].representative_lpp.to_string(), "x + y");
        assert!(c4.iter().all(|c| c.representative.is_reduced()));
    }

    #[test]
    fn compose_and_inverse_act_as_group() {
        let f = gf(4);
        let p = g_alpha(&f, 1);
        let a = Isotopism::from_polys(&f, &uni(&f, "2*x^2 + 1"), &uni(&f, "x + 3"), &uni(&f, "3*x")).unwrap();
        let b = Isotopism::from_polys(&f, &uni(&f, "x^2"), &uni(&f, "2*x"), &uni(&f, "x^2 + 1")).unwrap();
        let ab = apply_isotopism(&f, &apply_isotopism(&f, &p, &b).unwrap(), &a).unwrap();
        assert_eq!(apply_isotopism(&f, &p, &a.compose(&b)).unwrap(), ab);
        let back = apply_isotopism(&f, &apply_isotopism(&f, &p, &a).unwrap(), &a.inverse()).unwrap();
        assert_eq!(back, p);
    }
}
