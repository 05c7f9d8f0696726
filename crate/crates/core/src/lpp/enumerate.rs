//! Backtracking enumeration of Latin squares and the LPP degree census.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::LatinSquare;
use crate::error::{capacity, Result};
use crate::gf::{Elem, Field};
use crate::perm::Permutation;
use crate::poly::{interpolate_bi_unchecked, Degree};

/// Largest order streamed by [`enumerate_latin_squares`].
pub const LATIN_SQUARE_LIMIT: usize = 6;
/// Largest order for the full census.
pub const LPP_CENSUS_LIMIT: usize = 5;

/// Row-major backtracking over all Latin squares, symbols tried in ascending order.
/// Cells may be pinned to a fixed symbol.
pub struct LatinSquares {
    q: usize,
    cells: Vec<u8>,
    fixed: Vec<Option<u8>>,
    next_try: Vec<u8>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
    pos: usize,
    done: bool,
}

impl LatinSquares {
    fn new(q: usize, fixed: Vec<Option<u8>>) -> LatinSquares {
        let n = q * q;
        let mut it = LatinSquares {
            q,
            cells: vec![0; n],
            fixed,
            next_try: vec![0; n + 1],
            row_used: vec![0; q],
            col_used: vec![0; q],
            pos: 0,
            done: q == 0,
        };
        it.next_try[0] = it.start(0);
        it
    }

    fn start(&self, pos: usize) -> u8 {
        self.fixed.get(pos).copied().flatten().unwrap_or(0)
    }

    fn limit(&self, pos: usize) -> u8 {
        match self.fixed[pos] {
            Some(s) => s + 1,
            None => self.q as u8,
        }
    }

    fn unplace(&mut self, pos: usize) {
        let (r, c) = (pos / self.q, pos % self.q);
        let bit = 1u32 << self.cells[pos];
        self.row_used[r] &= !bit;
        self.col_used[c] &= !bit;
    }
}

impl Iterator for LatinSquares {
    type Item = LatinSquare;

    fn next(&mut self) -> Option<LatinSquare> {
        let n = self.q * self.q;
        if self.done {
            return None;
        }
        if self.pos == n {
            self.pos -= 1;
            self.unplace(self.pos);
        }
        loop {
            if self.pos == n {
                let cells = self.cells.iter().map(|&c| Elem::from_code(c as usize)).collect();
                return Some(LatinSquare::new_unchecked(self.q, cells));
            }
            let pos = self.pos;
            let (r, c) = (pos / self.q, pos % self.q);
            let taken = self.row_used[r] | self.col_used[c];
            let found = (self.next_try[pos]..self.limit(pos)).find(|&s| taken & (1 << s) == 0);
            match found {
                Some(s) => {
                    self.cells[pos] = s;
                    self.row_used[r] |= 1 << s;
                    self.col_used[c] |= 1 << s;
                    self.next_try[pos] = s + 1;
                    self.pos += 1;
                    if self.pos < n {
                        self.next_try[self.pos] = self.start(self.pos);
                    }
                }
                None => {
                    if pos == 0 {
                        self.done = true;
                        return None;
                    }
                    self.pos -= 1;
                    self.unplace(self.pos);
                }
            }
        }
    }
}

fn guard(q: usize, limit: usize, what: &str) -> Result<()> {
    if q > limit {
        return capacity(format!("{what} for q = {q} exceeds the q <= {limit} guard"));
    }
    Ok(())
}

/// All Latin squares of order `q`, in a fixed deterministic order.
pub fn enumerate_latin_squares(field: &Field) -> Result<LatinSquares> {
    let q = field.order();
    guard(q, LATIN_SQUARE_LIMIT, "Latin square enumeration")?;
    Ok(LatinSquares::new(q, vec![None; q * q]))
}

/// Reduced Latin squares only (first row and column fixed to the identity).
pub fn enumerate_reduced_latin_squares(field: &Field) -> Result<LatinSquares> {
    let q = field.order();
    guard(q, LATIN_SQUARE_LIMIT, "reduced Latin square enumeration")?;
    Ok(LatinSquares::new(q, reduced_pins(q)))
}

fn reduced_pins(q: usize) -> Vec<Option<u8>> {
    let mut fixed = vec![None; q * q];
    for a in 0..q {
        fixed[a] = Some(a as u8);
        fixed[a * q] = Some(a as u8);
    }
    fixed
}

/// Per-degree counts of all, symmetric and reduced LPPs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LppCensus {
    pub q: usize,
    pub all: BTreeMap<usize, u64>,
    pub symmetric: BTreeMap<usize, u64>,
    pub reduced: BTreeMap<usize, u64>,
}

impl LppCensus {
    pub fn total(&self) -> u64 {
        self.all.values().sum()
    }

    pub fn total_symmetric(&self) -> u64 {
        self.symmetric.values().sum()
    }

    pub fn total_reduced(&self) -> u64 {
        self.reduced.values().sum()
    }

    /// Every degree seen in any of the three columns.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> =
            self.all.keys().chain(self.symmetric.keys()).chain(self.reduced.keys()).copied().collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `sum all = q! (q-1)! sum reduced`.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let q = self.q as u64;
        let fact: u64 = (1..=q).product();
        let expected = fact * (fact / q.max(1)) * self.total_reduced();
        if self.total() != expected {
            return Err(format!("census total {} differs from q!(q-1)!|RLP| = {expected}", self.total()));
        }
        Ok(())
    }

    fn bump(&mut self, d: usize, symmetric: bool, reduced: bool) {
        *self.all.entry(d).or_default() += 1;
        if symmetric {
            *self.symmetric.entry(d).or_default() += 1;
        }
        if reduced {
            *self.reduced.entry(d).or_default() += 1;
        }
    }

    fn merge(mut self, other: LppCensus) -> LppCensus {
        for (map, src) in [(&mut self.all, other.all), (&mut self.symmetric, other.symmetric), (&mut self.reduced, other.reduced)]
        {
            for (d, c) in src {
                *map.entry(d).or_default() += c;
            }
        }
        self
    }
}

/// Interpolates every Latin square of order `q` and buckets by total degree.
/// The work is split by first row and run in parallel.
pub fn lpp_census(field: &Field) -> Result<LppCensus> {
    let q = field.order();
    guard(q, LPP_CENSUS_LIMIT, "LPP census")?;
    let first_rows: Vec<Permutation> = Permutation::all(q).collect();
    let census = first_rows
        .par_iter()
        .map(|row| {
            let mut fixed = vec![None; q * q];
            for (slot, e) in fixed.iter_mut().zip(row.table()) {
                *slot = Some(e.code() as u8);
            }
            let mut local = LppCensus { q, ..Default::default() };
            for sq in LatinSquares::new(q, fixed) {
                let f = interpolate_bi_unchecked(field, sq.cells());
                if let Degree::Finite(d) = f.total_degree() {
                    local.bump(d, f.is_symmetric(), sq.is_reduced());
                }
            }
            local
        })
        .reduce(|| LppCensus { q, ..Default::default() }, LppCensus::merge);
    Ok(census)
}
