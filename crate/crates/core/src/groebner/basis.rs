//! Buchberger's algorithm, reduced bases, normal forms, standard monomials
//! and variety enumeration.

use std::fmt;

use super::monomial::Monomial;
use super::ring::{MultiPoly, Ring};
use crate::error::{capacity, domain, usage, Error, Result};
use crate::gf::Elem;

use super::monomial::OrderKind;

/// Default cap on the number of S-pairs reduced by [`buchberger`].
pub const DEFAULT_PAIR_BUDGET: usize = 2_000_000;
/// Largest search space enumerated point by point by [`variety`] without a lex basis.
pub const BRUTE_FORCE_POINTS: u64 = 10_000_000;

/// A generator list in a fixed ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub ring: Ring,
    pub gens: Vec<MultiPoly>,
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<MultiPoly>) -> Ideal {
        Ideal { ring, gens }
    }

    /// The same generators sorted for another monomial order.
    pub fn with_order(&self, order: OrderKind) -> Ideal {
        let ring = self.ring.with_order(order);
        let gens = self.gens.iter().map(|g| ring.reorder(g)).collect();
        Ideal { ring, gens }
    }

    pub fn push(&mut self, g: MultiPoly) {
        self.gens.push(g);
    }
}

/// A Gröbner basis; when `reduced` is set the generators are monic,
/// mutually reduced and sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub ring: Ring,
    pub polys: Vec<MultiPoly>,
    pub reduced: bool,
}

impl fmt::Display for GroebnerBasis {
    /// One generator per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.polys {
            writeln!(f, "{}", self.ring.render(p))?;
        }
        Ok(())
    }
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(MultiPoly::lm).collect()
    }

    /// Rendered generators, in basis order.
    pub fn lines(&self) -> Vec<String> {
        self.polys.iter().map(|p| self.ring.render(p)).collect()
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|p| p.lm().is_one())
    }
}

/// Full reduction of `p` modulo `basis` (any order of divisors; the
/// first divisor found is used).
pub(crate) fn reduce_by(ring: &Ring, p: &MultiPoly, basis: &[&MultiPoly]) -> MultiPoly {
    let f = ring.field();
    let mut p = p.clone();
    let mut rest: Vec<(Monomial, Elem)> = Vec::new();
    while let Some((m, c)) = p.leading_term() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let s = f.neg(f.div(c, g.lc()).expect("nonzero leading coefficient"));
                p = ring.add_scaled(&p, s, &m.div(&g.lm()), g);
            }
            None => {
                rest.push((m, c));
                p.pop_leading();
            }
        }
    }
    rest.reverse();
    MultiPoly::from_sorted(rest)
}

fn spoly(ring: &Ring, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let l = a.lm().lcm(&b.lm());
    let f = ring.field();
    let sa = f.inv(a.lc()).expect("nonzero");
    let sb = f.neg(f.inv(b.lc()).expect("nonzero"));
    let left = ring.add_scaled(&MultiPoly::zero(), sa, &l.div(&a.lm()), a);
    ring.add_scaled(&left, sb, &l.div(&b.lm()), b)
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer–Möller update of the pair set and basis after adding `polys[h]`.
fn update(polys: &[MultiPoly], g: &mut Vec<usize>, b: &mut Vec<Pair>, h: usize) {
    let lh = polys[h].lm();
    let mut c: Vec<Pair> = g.iter().map(|&k| Pair { i: h, j: k, lcm: lh.lcm(&polys[k].lm()) }).collect();
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = c.pop() {
        let coprime = lh.is_coprime(&polys[p.j].lm());
        if coprime || (!c.iter().any(|o| o.lcm.divides(&p.lcm)) && !d.iter().any(|o| o.lcm.divides(&p.lcm))) {
            d.push(p);
        }
    }
    let e = d.into_iter().filter(|p| !lh.is_coprime(&polys[p.j].lm()));
    b.retain(|p| {
        !lh.divides(&p.lcm) || lh.lcm(&polys[p.i].lm()) == p.lcm || lh.lcm(&polys[p.j].lm()) == p.lcm
    });
    b.extend(e);
    g.retain(|&k| !lh.divides(&polys[k].lm()));
    g.push(h);
}

/// A Gröbner basis of `ideal` (not yet reduced).
///
/// S-pairs are chosen by the normal strategy (least lcm first) and pruned
/// with the Gebauer–Möller criteria. Fails with [`Error::BudgetExceeded`]
/// after `max_pairs` reductions.
pub fn buchberger(ideal: &Ideal, max_pairs: usize) -> Result<GroebnerBasis> {
    let ring = &ideal.ring;
    if ideal.gens.is_empty() {
        return usage("cannot compute a Gröbner basis of an empty generator list");
    }
    let mut polys: Vec<MultiPoly> = Vec::new();
    let mut g: Vec<usize> = Vec::new();
    let mut b: Vec<Pair> = Vec::new();

    let mut gens: Vec<MultiPoly> = ideal.gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    gens.sort_by(|x, y| ring.cmp(&x.lm(), &y.lm()).then(x.len().cmp(&y.len())));
    for p in gens {
        let basis: Vec<&MultiPoly> = g.iter().map(|&k| &polys[k]).collect();
        let h = reduce_by(ring, &p, &basis);
        if !h.is_zero() {
            polys.push(ring.monic(&h));
            update(&polys, &mut g, &mut b, polys.len() - 1);
        }
    }

    let mut done = 0usize;
    while !b.is_empty() {
        let pick = (0..b.len())
            .min_by(|&x, &y| {
                b[x].lcm.degree().cmp(&b[y].lcm.degree()).then_with(|| ring.cmp(&b[x].lcm, &b[y].lcm))
            })
            .expect("nonempty");
        let pair = b.swap_remove(pick);
        done += 1;
        if done > max_pairs {
            return Err(Error::BudgetExceeded { pairs: max_pairs });
        }
        let s = spoly(ring, &polys[pair.i], &polys[pair.j]);
        let basis: Vec<&MultiPoly> = g.iter().map(|&k| &polys[k]).collect();
        let h = reduce_by(ring, &s, &basis);
        if !h.is_zero() {
            polys.push(ring.monic(&h));
            update(&polys, &mut g, &mut b, polys.len() - 1);
        }
    }
    Ok(GroebnerBasis { ring: ring.clone(), polys: g.into_iter().map(|k| polys[k].clone()).collect(), reduced: false })
}

/// The unique reduced basis: minimal, monic, tails reduced, sorted by
/// increasing leading monomial.
pub fn reduce_basis(gb: &GroebnerBasis) -> GroebnerBasis {
    let ring = &gb.ring;
    let mut polys: Vec<MultiPoly> = gb.polys.iter().filter(|p| !p.is_zero()).map(|p| ring.monic(p)).collect();
    polys.sort_by(|x, y| ring.cmp(&x.lm(), &y.lm()));
    let mut minimal: Vec<MultiPoly> = Vec::new();
    for p in polys {
        if !minimal.iter().any(|m| m.lm().divides(&p.lm())) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&MultiPoly> = minimal.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, p)| p).collect();
        out.push(ring.monic(&reduce_by(ring, &minimal[k], &others)));
    }
    out.sort_by(|x, y| ring.cmp(&x.lm(), &y.lm()));
    GroebnerBasis { ring: ring.clone(), polys: out, reduced: true }
}

/// Reduced Gröbner basis of an ideal.
pub fn reduced_groebner_basis(ideal: &Ideal, max_pairs: usize) -> Result<GroebnerBasis> {
    Ok(reduce_basis(&buchberger(ideal, max_pairs)?))
}

/// Remainder of `f` on division by the basis; zero exactly when `f` lies in the ideal.
pub fn normal_form(gb: &GroebnerBasis, f: &MultiPoly) -> MultiPoly {
    let basis: Vec<&MultiPoly> = gb.polys.iter().collect();
    reduce_by(&gb.ring, &gb.ring.reorder(f), &basis)
}

/// Bound `e` on each variable such that `x_k^e` is a leading monomial.
fn pure_power_bounds(gb: &GroebnerBasis) -> Result<Vec<u16>> {
    let n = gb.ring.nvars();
    let mut bounds = vec![u16::MAX; n];
    if gb.is_unit() {
        return Ok(vec![0; n]);
    }
    for m in gb.leading_monomials() {
        if let Some((k, e)) = m.pure_power() {
            bounds[k] = bounds[k].min(e);
        }
    }
    if let Some(k) = bounds.iter().position(|&b| b == u16::MAX) {
        return domain(format!(
            "ideal is not zero-dimensional: no leading monomial is a pure power of {}",
            gb.ring.names()[k]
        ));
    }
    Ok(bounds)
}

/// Monomials outside the initial ideal, depth first in variable order.
pub fn standard_monomials(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let bounds = pure_power_bounds(gb)?;
    let lms = gb.leading_monomials();
    let mut out = Vec::new();
    if gb.is_unit() {
        return Ok(out);
    }
    let n = bounds.len();
    let mut exps = vec![0u16; n];
    fn walk(k: usize, exps: &mut Vec<u16>, bounds: &[u16], lms: &[Monomial], out: &mut Vec<Monomial>) {
        let m = Monomial::from_exponents(exps);
        if lms.iter().any(|l| l.divides(&m)) {
            return;
        }
        if k == exps.len() {
            out.push(m);
            return;
        }
        for e in 0..bounds[k] {
            exps[k] = e;
            walk(k + 1, exps, bounds, lms, out);
        }
        exps[k] = 0;
    }
    walk(0, &mut exps, &bounds, &lms, &mut out);
    Ok(out)
}

/// `dim F_q[X] / I`, the number of standard monomials.
pub fn quotient_dimension(gb: &GroebnerBasis) -> Result<u64> {
    if !gb.reduced {
        return quotient_dimension(&reduce_basis(gb));
    }
    let bounds = pure_power_bounds(gb)?;
    if gb.is_unit() {
        return Ok(0);
    }
    let lms = gb.leading_monomials();
    let n = bounds.len();
    fn count(k: usize, exps: &mut Vec<u16>, bounds: &[u16], lms: &[Monomial]) -> u64 {
        let m = Monomial::from_exponents(exps);
        if lms.iter().any(|l| l.divides(&m)) {
            return 0;
        }
        if k == exps.len() {
            return 1;
        }
        let mut total = 0;
        for e in 0..bounds[k] {
            exps[k] = e;
            total += count(k + 1, exps, bounds, lms);
        }
        exps[k] = 0;
        total
    }
    Ok(count(0, &mut vec![0u16; n], &bounds, &lms))
}

/// All common zeros in GF(q)^n, sorted, coordinates in ring variable order.
///
/// Variables are assigned from the last to the first and each generator is
/// checked as soon as all its variables are fixed, so a lex basis prunes at
/// every level. Without one the search space must stay below
/// [`BRUTE_FORCE_POINTS`].
pub fn variety(gb: &GroebnerBasis) -> Result<Vec<Vec<Elem>>> {
    pure_power_bounds(gb)?;
    let ring = &gb.ring;
    let n = ring.nvars();
    let q = ring.field().order();
    let space = (q as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if ring.order() != OrderKind::Lex && space > BRUTE_FORCE_POINTS {
        return capacity(format!(
            "variety search over {q}^{n} points needs a lex basis (limit {BRUTE_FORCE_POINTS} points)"
        ));
    }
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    // checks[k]: generators whose smallest variable index is k
    let mut checks: Vec<Vec<&MultiPoly>> = vec![Vec::new(); n];
    for p in &gb.polys {
        let k = p.variables().into_iter().next().unwrap_or(0);
        checks[k].push(p);
    }
    let elems: Vec<Elem> = ring.field().elements().collect();
    let mut point = vec![Elem::ZERO; n];
    let mut out = Vec::new();
    fn walk(
        k: usize,
        point: &mut Vec<Elem>,
        ring: &Ring,
        checks: &[Vec<&MultiPoly>],
        elems: &[Elem],
        out: &mut Vec<Vec<Elem>>,
    ) {
        for &v in elems {
            point[k] = v;
            if checks[k].iter().all(|p| ring.eval(p, point).is_zero()) {
                if k == 0 {
                    out.push(point.clone());
                } else {
                    walk(k - 1, point, ring, checks, elems, out);
                }
            }
        }
        point[k] = Elem::ZERO;
    }
    walk(n - 1, &mut point, ring, &checks, &elems, &mut out);
    out.sort();
    Ok(out)
}
