//! Permutations of GF(q) stored as value tables.

use std::fmt;

use crate::error::{domain, Result};
use crate::gf::Elem;

/// A bijection of `{0, .., q-1}`; `table[a]` is the image of the element with code `a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    table: Vec<Elem>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let codes: Vec<usize> = self.table.iter().map(|e| e.code()).collect();
        write!(f, "Permutation{codes:?}")
    }
}

/// Whether `values` hits every code in `[0, values.len())` exactly once.
pub fn is_bijection(values: &[Elem]) -> bool {
    let mut seen = 0u32;
    for v in values {
        let c = v.code();
        if c >= values.len() || seen & (1 << c) != 0 {
            return false;
        }
        seen |= 1 << c;
    }
    true
}

impl Permutation {
    pub fn identity(q: usize) -> Permutation {
        Permutation { table: (0..q).map(Elem::from_code).collect() }
    }

    pub fn from_table(table: Vec<Elem>) -> Result<Permutation> {
        if is_bijection(&table) {
            Ok(Permutation { table })
        } else {
            domain("value table is not a permutation")
        }
    }

    pub fn from_codes(codes: &[usize]) -> Result<Permutation> {
        if codes.iter().any(|&c| c >= codes.len()) {
            return domain("value table is not a permutation");
        }
        Permutation::from_table(codes.iter().map(|&c| Elem::from_code(c)).collect())
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(q: usize, i: usize, j: usize) -> Permutation {
        let mut p = Permutation::identity(q);
        p.table.swap(i, j);
        p
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.table[a.code()]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, e)| e.code() == i)
    }

    /// `self ∘ other`, i.e. `a ↦ self(other(a))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { table: other.table.iter().map(|&a| self.apply(a)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut table = vec![Elem::ZERO; self.table.len()];
        for (a, &b) in self.table.iter().enumerate() {
            table[b.code()] = Elem::from_code(a);
        }
        Permutation { table }
    }

    /// All permutations of `q` points in lexicographic order of their tables.
    pub fn all(q: usize) -> Permutations {
        Permutations { current: (0..q as u8).collect(), done: false }
    }
}

/// Rearranges `v` into the next permutation in lexicographic order.
/// Returns `false` (leaving `v` sorted ascending) after the last one.
pub fn next_permutation(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Lexicographic iterator over all permutations of a fixed size.
pub struct Permutations {
    current: Vec<u8>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation { table: self.current.iter().map(|&c| Elem::from_code(c as usize)).collect() };
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<Vec<usize>> =
            Permutation::all(3).map(|p| p.table().iter().map(|e| e.code()).collect()).collect();
        assert_eq!(
            all,
            vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2], vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0]]
        );
        assert_eq!(Permutation::all(5).count(), 120);
        assert_eq!(Permutation::all(1).count(), 1);
    }

    #[test]
    fn compose_and_inverse() {
        for p in Permutation::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert!(p.inverse().compose(&p).is_identity());
        }
        let t = Permutation::transposition(4, 1, 3);
        assert!(t.compose(&t).is_identity());
    }

    #[test]
    fn bijection_check() {
        assert!(Permutation::from_codes(&[1, 0, 2]).is_ok());
        assert!(Permutation::from_codes(&[1, 1, 2]).is_err());
        assert!(Permutation::from_codes(&[1, 3, 2]).is_err());
    }
}
