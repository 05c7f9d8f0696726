#![allow(dead_code)]

use latinpoly::lpp::{lpp_from_square, Isotopism, LatinSquare};
use latinpoly::{BiPoly, Elem, Field, Permutation, UniPoly};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn gf(q: usize) -> Field {
    Field::new(q).unwrap()
}

pub fn random_perm<R: Rng>(q: usize, rng: &mut R) -> Permutation {
    let mut codes: Vec<usize> = (0..q).collect();
    codes.shuffle(rng);
    Permutation::from_codes(&codes).unwrap()
}

pub fn random_pp<R: Rng>(f: &Field, rng: &mut R) -> UniPoly {
    UniPoly::from_permutation(f, &random_perm(f.order(), rng))
}

pub fn random_isotopism<R: Rng>(q: usize, rng: &mut R) -> Isotopism {
    Isotopism::new(random_perm(q, rng), random_perm(q, rng), random_perm(q, rng)).unwrap()
}

pub fn random_elem<R: Rng>(f: &Field, rng: &mut R) -> Elem {
    f.elem(rng.gen_range(0..f.order())).unwrap()
}

/// Row-by-row randomized backtracking; every Latin square has positive probability.
pub fn random_latin_square<R: Rng>(q: usize, rng: &mut R) -> LatinSquare {
    fn fill<R: Rng>(q: usize, pos: usize, cells: &mut Vec<usize>, rng: &mut R) -> bool {
        if pos == q * q {
            return true;
        }
        let (r, c) = (pos / q, pos % q);
        let mut symbols: Vec<usize> = (0..q)
            .filter(|&s| (0..c).all(|j| cells[r * q + j] != s) && (0..r).all(|i| cells[i * q + c] != s))
            .collect();
        symbols.shuffle(rng);
        for s in symbols {
            cells[pos] = s;
            if fill(q, pos + 1, cells, rng) {
                return true;
            }
        }
        false
    }
    let mut cells = vec![0; q * q];
    assert!(fill(q, 0, &mut cells, rng));
    let f = gf(q);
    LatinSquare::new(q, cells.into_iter().map(|c| f.elem(c).unwrap()).collect()).unwrap()
}

pub fn random_lpp<R: Rng>(f: &Field, rng: &mut R) -> BiPoly {
    lpp_from_square(f, &random_latin_square(f.order(), rng)).unwrap()
}

/// `(a^3 xy + a(x + y) + a^2) xy + x + y` over GF(4).
pub fn rlp4_member(f: &Field, a: Elem) -> BiPoly {
    let a2 = f.mul(a, a);
    let a3 = f.mul(a2, a);
    let mut p = BiPoly::zero(4);
    p.set_coeff(2, 2, a3);
    p.set_coeff(2, 1, a);
    p.set_coeff(1, 2, a);
    p.set_coeff(1, 1, a2);
    p.set_coeff(1, 0, Elem::ONE);
    p.set_coeff(0, 1, Elem::ONE);
    p
}
