//! Conjugates: the six LPPs obtained by permuting the row, column and
//! symbol roles of the entry triples.

use super::{require_lpp, table_is_latin};
use crate::error::{domain, Result};
use crate::gf::{Elem, Field};
use crate::poly::{interpolate_bi_unchecked, BiPoly};

/// Role permutations in the order of the defining identities:
///
/// 1. `g(x, y) = f(x, y)`
/// 2. `g(x, y) = f(y, x)`
/// 3. `g(x, f(x, y)) = y`
/// 4. `g(f(x, y), x) = y`
/// 5. `g(f(x, y), y) = x`
/// 6. `g(y, f(x, y)) = x`
///
/// A permutation `s` sends the entry `t = (row, col, sym)` to `(t[s0], t[s1], t[s2])`.
pub const ROLE_PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 0, 1], [2, 1, 0], [1, 2, 0]];

fn conjugate_table(q: usize, t: &[Elem], roles: [usize; 3]) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO; q * q];
    for r in 0..q {
        for c in 0..q {
            let e = [r, c, t[r * q + c].code()];
            out[e[roles[0]] * q + e[roles[1]]] = Elem::from_code(e[roles[2]]);
        }
    }
    out
}

/// The conjugate of `f` under one role permutation.
pub fn conjugate(field: &Field, f: &BiPoly, roles: [usize; 3]) -> Result<BiPoly> {
    let mut sorted = roles;
    sorted.sort_unstable();
    if sorted != [0, 1, 2] {
        return domain(format!("{roles:?} is not a permutation of the three roles"));
    }
    let t = require_lpp(field, f)?;
    let out = conjugate_table(field.order(), &t, roles);
    debug_assert!(table_is_latin(field.order(), &out));
    Ok(interpolate_bi_unchecked(field, &out))
}

/// All six conjugates, in [`ROLE_PERMUTATIONS`] order.
pub fn conjugates(field: &Field, f: &BiPoly) -> Result<Vec<BiPoly>> {
    ROLE_PERMUTATIONS.iter().map(|&r| conjugate(field, f, r)).collect()
}

/// Whether all six conjugates coincide with `f`.
pub fn is_totally_symmetric(field: &Field, f: &BiPoly) -> Result<bool> {
    Ok(conjugates(field, f)?.iter().all(|g| g == f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpp::is_lpp;

    fn gf(q: usize) -> Field {
        Field::new(q).unwrap()
    }

    #[test]
    fn char_two_addition_is_totally_symmetric() {
        let f = gf(4);
        let p = BiPoly::parse(&f, "x + y").unwrap();
        assert!(is_totally_symmetric(&f, &p).unwrap());
        let g1 = BiPoly::parse(&f, "(x*y + x + y + 1)*x*y + x + y").unwrap();
        assert!(!is_totally_symmetric(&f, &g1).unwrap());
    }

    #[test]
    fn linear_conjugate_over_gf5() {
        let f = gf(5);
        let p = BiPoly::parse(&f, "x + y").unwrap();
        let g = conjugate(&f, &p, [0, 2, 1]).unwrap();
        assert_eq!(g, BiPoly::parse(&f, "y + 4*x").unwrap());
        let all = conjugates(&f, &p).unwrap();
        assert_eq!(all[0], p);
        assert_eq!(all[1], p);
    }

    /// Each conjugate satisfies its defining identity.
    #[test]
    fn defining_identities() {
        let f = gf(5);
        let p = BiPoly::parse(&f, "x^3 + 2*y + 1").unwrap();
        let gs = conjugates(&f, &p).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                let v = p.eval(&f, a, b);
                assert_eq!(gs[0].eval(&f, a, b), v);
                assert_eq!(gs[1].eval(&f, a, b), p.eval(&f, b, a));
                assert_eq!(gs[2].eval(&f, a, v), b);
                assert_eq!(gs[3].eval(&f, v, a), b);
                assert_eq!(gs[4].eval(&f, v, b), a);
                assert_eq!(gs[5].eval(&f, b, v), a);
            }
        }
        assert!(gs.iter().all(|g| is_lpp(&f, g)));
    }

    #[test]
    fn rejects_bad_roles() {
        let f = gf(3);
        let p = BiPoly::parse(&f, "x + y").unwrap();
        assert!(conjugate(&f, &p, [0, 0, 1]).is_err());
    }
}
