//! Permutation polynomials: the predicate, exhaustive enumeration and the
//! degree census `N_q(d)`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{capacity, usage, Result};
use crate::gf::{Elem, Field};
use crate::perm::{next_permutation, Permutation};
use crate::poly::{table_is_permutation, Degree, UniPoly};
use crate::Budget;

/// Largest order enumerated without an explicit opt-in.
pub const STANDARD_PP_LIMIT: usize = 9;
/// Largest order enumerated at all (11! = 39,916,800 permutations).
pub const LARGE_PP_LIMIT: usize = 11;

pub fn is_pp(field: &Field, f: &UniPoly) -> bool {
    table_is_permutation(&f.values(field))
}

/// All `q!` permutation polynomials, in lexicographic order of their value tables.
pub fn enumerate_pps(field: &Field) -> Result<impl Iterator<Item = UniPoly> + '_> {
    let q = field.order();
    if q > LARGE_PP_LIMIT {
        return capacity(format!("enumerating {q}! permutations is beyond the q <= {LARGE_PP_LIMIT} guard"));
    }
    Ok(Permutation::all(q).map(move |p| UniPoly::from_permutation(field, &p)))
}

/// Number of permutation polynomials of each degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCensus {
    pub q: usize,
    /// Only degrees with a nonzero count are present.
    pub counts: BTreeMap<usize, u64>,
}

impl DegreeCensus {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, d: usize) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    /// Sum of `N_q(d)` over `d <= max_degree`.
    pub fn partial_sum(&self, max_degree: usize) -> u64 {
        self.counts.range(..=max_degree).map(|(_, c)| c).sum()
    }

    /// Checks `sum = q!`, `N_q(1) = q(q-1)` and `N_q(d) = 0` for `d > 1` dividing `q - 1`.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let q = self.q as u64;
        let fact: u64 = (1..=q).product();
        if self.total() != fact {
            return Err(format!("census sums to {}, expected {q}! = {fact}", self.total()));
        }
        if self.get(1) != q * (q - 1) {
            return Err(format!("N_{q}(1) = {}, expected {}", self.get(1), q * (q - 1)));
        }
        if q > 2 {
            for d in 2..q {
                if (q - 1).is_multiple_of(d) && self.get(d as usize) != 0 {
                    return Err(format!("N_{q}({d}) = {} but {d} divides q - 1", self.get(d as usize)));
                }
            }
        }
        Ok(())
    }
}

/// Degree of the interpolating polynomial of a value table, scanning
/// coefficients from the top so that most tables cost one dot product.
fn table_degree(field: &Field, values: &[Elem]) -> Degree {
    for i in (0..field.order()).rev() {
        let mut c = Elem::ZERO;
        for (a, &v) in field.elements().zip(values) {
            c = field.add(c, field.mul(v, field.indicator(a, i)));
        }
        if !c.is_zero() {
            return Degree::Finite(i);
        }
    }
    Degree::NegInfinity
}

/// Buckets all `q!` permutation polynomials by degree.
///
/// The permutation space is split by the image of `0` and the slices are
/// counted in parallel; the merged result does not depend on scheduling.
pub fn degree_census(field: &Field, budget: Budget) -> Result<DegreeCensus> {
    let q = field.order();
    let limit = match budget {
        Budget::Standard => STANDARD_PP_LIMIT,
        Budget::Large => LARGE_PP_LIMIT,
    };
    if q > limit {
        return capacity(format!("degree census for q = {q} exceeds the q <= {limit} guard"));
    }
    let counts = (0..q)
        .into_par_iter()
        .map(|first| {
            let mut local = vec![0u64; q];
            let mut rest: Vec<u8> = (0..q as u8).filter(|&c| c as usize != first).collect();
            let mut values = vec![Elem::ZERO; q];
            values[0] = Elem::from_code(first);
            loop {
                for (slot, &c) in values[1..].iter_mut().zip(&rest) {
                    *slot = Elem::from_code(c as usize);
                }
                if let Degree::Finite(d) = table_degree(field, &values) {
                    local[d] += 1;
                }
                if !next_permutation(&mut rest) {
                    break;
                }
            }
            local
        })
        .reduce(
            || vec![0u64; q],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(DegreeCensus {
        q,
        counts: counts.into_iter().enumerate().filter(|&(_, c)| c > 0).collect(),
    })
}

/// Closed-form coefficient test for permutation polynomials over GF(4) and GF(5):
///
/// * q = 4: `s3 = 0` and `s1^3 + s2^3 = 1`;
/// * q = 5: `s4 = 0`, `(s1 + s3)^4 = 1` and `s2^2 = 3 s1 s3`.
pub fn check_characterization(field: &Field, f: &UniPoly) -> Result<bool> {
    let s = |i: usize| f.coeff(i);
    match field.order() {
        4 => {
            let lhs = field.add(field.pow(s(1), 3), field.pow(s(2), 3));
            Ok(s(3).is_zero() && lhs == Elem::ONE)
        }
        5 => {
            let three = field.from_int(3);
            let first = field.pow(field.add(s(1), s(3)), 4) == Elem::ONE;
            let second = field.mul(s(2), s(2)) == field.mul(three, field.mul(s(1), s(3)));
            Ok(s(4).is_zero() && first && second)
        }
        q => usage(format!("closed-form characterization is only available for q = 4, 5 (got {q})")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn gf(q: usize) -> Field {
        Field::new(q).unwrap()
    }

    #[test]
    fn predicate_examples() {
        let f4 = gf(4);
        let f5 = gf(5);
        assert!(is_pp(&f4, &UniPoly::parse(&f4, "x^2").unwrap()));
        assert!(!is_pp(&f5, &UniPoly::parse(&f5, "x^2").unwrap()));
        assert!(is_pp(&f5, &UniPoly::parse(&f5, "3*x + 1").unwrap()));
    }

    #[test]
    fn enumeration_q2_and_q4() {
        let f2 = gf(2);
        let all: Vec<String> = enumerate_pps(&f2).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(all, vec!["x", "x + 1"]);

        let f4 = gf(4);
        let pps: Vec<UniPoly> = enumerate_pps(&f4).unwrap().collect();
        assert_eq!(pps.len(), 24);
        let deg = |d| pps.iter().filter(|p| p.degree() == Degree::Finite(d)).count();
        assert_eq!((deg(1), deg(2)), (12, 12));
    }

    #[test]
    fn enumeration_q5_avoids_divisor_degrees() {
        let f5 = gf(5);
        let pps: Vec<UniPoly> = enumerate_pps(&f5).unwrap().collect();
        assert_eq!(pps.len(), 120);
        assert!(pps.iter().all(|p| !matches!(p.degree(), Degree::Finite(2) | Degree::Finite(4))));
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(enumerate_pps(&gf(13)), Err(crate::Error::Capacity(_))));
        assert!(matches!(degree_census(&gf(11), Budget::Standard), Err(crate::Error::Capacity(_))));
    }

    /// Every polynomial of degree < 4 over GF(4) and GF(5) is a PP exactly
    /// when it appears in the enumeration.
    #[test]
    fn predicate_matches_enumeration() {
        for q in [4usize, 5] {
            let f = gf(q);
            let listed: BTreeSet<UniPoly> = enumerate_pps(&f).unwrap().collect();
            let mut coeffs = vec![Elem::ZERO; q];
            for n in 0..q.pow(q as u32) {
                for (i, c) in coeffs.iter_mut().enumerate() {
                    *c = Elem::from_code((n / q.pow(i as u32)) % q);
                }
                let p = UniPoly::from_coeffs(&f, &coeffs);
                assert_eq!(is_pp(&f, &p), listed.contains(&p));
            }
        }
    }

    #[test]
    fn characterization_examples() {
        let f4 = gf(4);
        assert!(check_characterization(&f4, &UniPoly::parse(&f4, "2*x^2 + 1").unwrap()).unwrap());
        assert!(!check_characterization(&f4, &UniPoly::parse(&f4, "x^2 + x").unwrap()).unwrap());
        let f5 = gf(5);
        let p = UniPoly::parse(&f5, "x^3 + x").unwrap();
        assert!(!check_characterization(&f5, &p).unwrap());
        assert!(!is_pp(&f5, &p));
        assert!(check_characterization(&gf(7), &p).is_err());
    }

    /// Over GF(5), x^3 + b x^2 + c x + d is a PP iff b^2 = 3c.
    #[test]
    fn cubic_criterion_over_gf5() {
        let f = gf(5);
        for b in f.elements() {
            for c in f.elements() {
                for d in f.elements() {
                    let p = UniPoly::from_coeffs(&f, &[d, c, b, Elem::ONE]);
                    let crit = f.mul(b, b) == f.mul(f.from_int(3), c);
                    assert_eq!(is_pp(&f, &p), crit);
                }
            }
        }
    }

    #[test]
    fn small_censuses() {
        let c4 = degree_census(&gf(4), Budget::Standard).unwrap();
        assert_eq!(c4.counts, BTreeMap::from([(1, 12), (2, 12)]));
        let c5 = degree_census(&gf(5), Budget::Standard).unwrap();
        assert_eq!(c5.counts, BTreeMap::from([(1, 20), (3, 100)]));
        c4.check_invariants().unwrap();
        c5.check_invariants().unwrap();
        let c3 = degree_census(&gf(3), Budget::Standard).unwrap();
        assert_eq!(c3.counts, BTreeMap::from([(1, 6)]));
    }

    /// The fast degree scan agrees with full interpolation.
    #[test]
    fn census_matches_interpolation() {
        let f = gf(7);
        let mut counts = BTreeMap::new();
        for p in enumerate_pps(&f).unwrap() {
            *counts.entry(p.degree().finite().unwrap()).or_insert(0u64) += 1;
        }
        assert_eq!(degree_census(&f, Budget::Standard).unwrap().counts, counts);
    }
}
