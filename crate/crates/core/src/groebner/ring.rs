//! Sparse multivariate polynomials over GF(q).

use std::cmp::Ordering;
use std::collections::HashSet;

use super::monomial::{Monomial, OrderKind, MAX_VARS};
use crate::error::{capacity, usage, Result};
use crate::gf::{same_field, Elem, Field};
use crate::text::{self, render_monomial, render_terms, Algebra};

/// Field, variable names in precedence order (first is largest) and monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    field: Field,
    names: Vec<String>,
    order: OrderKind,
}

/// A polynomial with nonzero coefficients only, stored in increasing
/// monomial order so the leading term is last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, Elem)>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing order.
    pub fn terms(&self) -> &[(Monomial, Elem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(Monomial, Elem)> {
        self.terms.last().copied()
    }

    /// Leading monomial; panics on zero.
    pub fn lm(&self) -> Monomial {
        self.terms.last().expect("leading monomial of zero").0
    }

    pub fn lc(&self) -> Elem {
        self.terms.last().expect("leading coefficient of zero").1
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Wraps terms already sorted increasingly with no zero coefficients.
    pub(crate) fn from_sorted(terms: Vec<(Monomial, Elem)>) -> MultiPoly {
        MultiPoly { terms }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Elem)> {
        self.terms.pop()
    }

    /// Indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        (0..MAX_VARS).filter(|&k| self.terms.iter().any(|(m, _)| m.exp(k) > 0)).collect()
    }
}

impl Ring {
    pub fn new(field: Field, names: Vec<String>, order: OrderKind) -> Result<Ring> {
        if names.is_empty() {
            return usage("a ring needs at least one variable");
        }
        if names.len() > MAX_VARS {
            return capacity(format!("{} variables exceed the limit of {MAX_VARS}", names.len()));
        }
        let mut seen = HashSet::new();
        for n in &names {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return usage(format!("invalid variable name {n:?}"));
            }
            if !seen.insert(n) {
                return usage(format!("duplicate variable name {n:?}"));
            }
        }
        Ok(Ring { field, names, order })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> OrderKind {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same field and variables under another order.
    pub fn with_order(&self, order: OrderKind) -> Ring {
        Ring { order, ..self.clone() }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, Elem)>) -> MultiPoly {
        let mut v: Vec<(Monomial, Elem)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by(|a, b| self.cmp(&a.0, &b.0));
        let mut out: Vec<(Monomial, Elem)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(last.1, c),
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|t| t.1.is_zero()) {
                out.pop();
            }
        }
        MultiPoly { terms: out }
    }

    /// Re-sorts a polynomial written for another order of the same variables.
    pub fn reorder(&self, p: &MultiPoly) -> MultiPoly {
        let mut terms = p.terms.clone();
        terms.sort_by(|a, b| self.cmp(&a.0, &b.0));
        MultiPoly { terms }
    }

    pub fn constant(&self, c: Elem) -> MultiPoly {
        self.from_terms([(Monomial::ONE, c)])
    }

    pub fn one(&self) -> MultiPoly {
        self.constant(Elem::ONE)
    }

    pub fn var(&self, k: usize) -> MultiPoly {
        assert!(k < self.nvars());
        MultiPoly { terms: vec![(Monomial::var(k, 1), Elem::ONE)] }
    }

    pub fn monomial(&self, m: Monomial, c: Elem) -> MultiPoly {
        self.from_terms([(m, c)])
    }

    /// `a + s * t * b` for a scalar `s` and monomial `t`.
    pub fn add_scaled(&self, a: &MultiPoly, s: Elem, t: &Monomial, b: &MultiPoly) -> MultiPoly {
        if s.is_zero() {
            return a.clone();
        }
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut ia = a.terms.iter().peekable();
        let mut ib = b.terms.iter().map(|(m, c)| (m.mul(t), f.mul(*c, s))).peekable();
        loop {
            match (ia.peek(), ib.peek()) {
                (Some(&&(ma, ca)), Some(&(mb, cb))) => match self.cmp(&ma, &mb) {
                    Ordering::Less => {
                        out.push((ma, ca));
                        ia.next();
                    }
                    Ordering::Greater => {
                        out.push((mb, cb));
                        ib.next();
                    }
                    Ordering::Equal => {
                        let c = f.add(ca, cb);
                        if !c.is_zero() {
                            out.push((ma, c));
                        }
                        ia.next();
                        ib.next();
                    }
                },
                (Some(&&t), None) => {
                    out.push(t);
                    ia.next();
                }
                (None, Some(&t)) => {
                    out.push(t);
                    ib.next();
                }
                (None, None) => break,
            }
        }
        MultiPoly { terms: out }
    }

    pub fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        self.add_scaled(a, Elem::ONE, &Monomial::ONE, b)
    }

    pub fn sub(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        self.add_scaled(a, self.field.neg(Elem::ONE), &Monomial::ONE, b)
    }

    pub fn neg(&self, a: &MultiPoly) -> MultiPoly {
        self.scale(a, self.field.neg(Elem::ONE))
    }

    pub fn scale(&self, a: &MultiPoly, s: Elem) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: a.terms.iter().map(|&(m, c)| (m, self.field.mul(c, s))).collect() }
    }

    pub fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        let f = &self.field;
        self.from_terms(a.terms.iter().flat_map(|&(ma, ca)| b.terms.iter().map(move |&(mb, cb)| (ma.mul(&mb), f.mul(ca, cb)))))
    }

    pub fn pow(&self, a: &MultiPoly, mut e: u64) -> MultiPoly {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, a: &MultiPoly) -> MultiPoly {
        match a.leading_term() {
            None => MultiPoly::zero(),
            Some((_, c)) => self.scale(a, self.field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, p: &MultiPoly, point: &[Elem]) -> Elem {
        let f = &self.field;
        p.terms.iter().fold(Elem::ZERO, |acc, (m, c)| {
            let v = point.iter().enumerate().fold(*c, |v, (k, &x)| match m.exp(k) {
                0 => v,
                e => f.mul(v, f.pow(x, e as u64)),
            });
            f.add(acc, v)
        })
    }

    /// Replaces each variable `k` of `src` by `images[k]`, a polynomial of this ring.
    pub fn substitute(&self, src: &Ring, p: &MultiPoly, images: &[MultiPoly]) -> Result<MultiPoly> {
        same_field(&self.field, &src.field)?;
        if images.len() != src.nvars() {
            return usage(format!("{} images for {} variables", images.len(), src.nvars()));
        }
        let mut acc = MultiPoly::zero();
        for (m, c) in &p.terms {
            let mut t = self.constant(*c);
            for (k, img) in images.iter().enumerate() {
                if m.exp(k) > 0 {
                    t = self.mul(&t, &self.pow(img, m.exp(k) as u64));
                }
            }
            acc = self.add(&acc, &t);
        }
        Ok(acc)
    }

    /// `x_k^q - x_k`.
    pub fn field_equation(&self, k: usize) -> MultiPoly {
        let q = self.field.order() as u16;
        self.from_terms([(Monomial::var(k, q), Elem::ONE), (Monomial::var(k, 1), self.field.neg(Elem::ONE))])
    }

    pub fn parse(&self, src: &str) -> Result<MultiPoly> {
        text::parse(self, src)
    }

    /// Canonical text form, terms in decreasing order.
    pub fn render(&self, p: &MultiPoly) -> String {
        render_terms(p.terms.iter().rev().map(|(m, c)| {
            let vars = render_monomial(self.names.iter().enumerate().map(|(k, n)| (n.as_str(), m.exp(k) as u32)));
            (c.code(), vars)
        }))
    }
}

impl Algebra for Ring {
    type Value = MultiPoly;

    fn constant(&self, code: u64) -> Result<MultiPoly> {
        let c = self.field.elem(code as usize)?;
        Ok(Ring::constant(self, c))
    }

    fn variable(&self, name: &str) -> Result<MultiPoly> {
        match self.var_index(name) {
            Some(k) => Ok(self.var(k)),
            None => usage(format!("unknown variable {name:?}")),
        }
    }

    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        Ring::add(self, a, b)
    }

    fn neg(&self, a: &MultiPoly) -> MultiPoly {
        Ring::neg(self, a)
    }

    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        Ring::mul(self, a, b)
    }

    fn pow(&self, a: &MultiPoly, e: u64) -> Result<MultiPoly> {
        if a.terms.iter().any(|(m, _)| m.exponents().iter().any(|&x| x as u64 * e > u16::MAX as u64 / 2)) {
            return capacity(format!("exponent {e} is too large"));
        }
        Ok(Ring::pow(self, a, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(q: usize, names: &[&str], order: OrderKind) -> Ring {
        Ring::new(Field::new(q).unwrap(), names.iter().map(|s| s.to_string()).collect(), order).unwrap()
    }

    #[test]
    fn parse_render_round_trip() {
        let r = ring(4, &["x1", "x2", "x0"], OrderKind::DegRevLex);
        let p = r.parse("x1^3 + x1^2 x2 + x1*x2^2 + x2^3 + 1").unwrap();
        assert_eq!(r.render(&p), "x1^3 + x1^2*x2 + x1*x2^2 + x2^3 + 1");
        assert_eq!(r.parse(&r.render(&p)).unwrap(), p);
        assert_eq!(r.render(&r.parse("x1 + x1").unwrap()), "0");
        assert_eq!(r.render(&r.parse("2*x0 + 3").unwrap()), "2*x0 + 3");
        assert!(r.parse("x3").is_err());
        assert!(r.parse("x1^99999").is_err());
    }

    #[test]
    fn expansion_over_gf5() {
        let r = ring(5, &["x1", "x2", "x3", "x0"], OrderKind::DegRevLex);
        let p = r.parse("(x1 + x3)^4 - 1").unwrap();
        assert_eq!(r.render(&p), "x1^4 + 4*x1^3*x3 + x1^2*x3^2 + 4*x1*x3^3 + x3^4 + 4");
        let a = r.parse("x1 + 2*x2").unwrap();
        let b = r.parse("x1 - 2*x2").unwrap();
        assert_eq!(r.mul(&a, &b), r.parse("x1^2 + x2^2").unwrap());
        assert_eq!(r.sub(&a, &a), MultiPoly::zero());
    }

    #[test]
    fn lex_leading_terms() {
        let r = ring(4, &["a", "b"], OrderKind::Lex);
        let p = r.parse("b^3 + a").unwrap();
        assert_eq!(p.lm(), Monomial::var(0, 1));
        let rd = r.with_order(OrderKind::DegRevLex);
        assert_eq!(rd.reorder(&p).lm(), Monomial::var(1, 3));
    }

    #[test]
    fn evaluation_and_substitution() {
        let r = ring(5, &["x", "y"], OrderKind::Lex);
        let p = r.parse("x^2*y + 3*y + 1").unwrap();
        let pt = [Elem::from_code(2), Elem::from_code(3)];
        assert_eq!(r.eval(&p, &pt).code(), (4 * 3 + 9 + 1) % 5);
        let src = ring(5, &["t"], OrderKind::Lex);
        let t2 = src.parse("t^2 + 1").unwrap();
        let img = r.parse("x + y").unwrap();
        assert_eq!(r.substitute(&src, &t2, &[img]).unwrap(), r.parse("x^2 + 2*x*y + y^2 + 1").unwrap());
        let other = Ring::new(Field::new(7).unwrap(), vec!["t".into()], OrderKind::Lex).unwrap();
        assert!(r.substitute(&other, &t2, &[r.var(0)]).is_err());
    }

    #[test]
    fn ring_validation() {
        let f = Field::new(3).unwrap();
        assert!(Ring::new(f.clone(), vec![], OrderKind::Lex).is_err());
        assert!(Ring::new(f.clone(), vec!["x".into(), "x".into()], OrderKind::Lex).is_err());
        assert!(Ring::new(f.clone(), vec!["1x".into()], OrderKind::Lex).is_err());
        let many: Vec<String> = (0..17).map(|i| format!("v{i}")).collect();
        assert!(Ring::new(f, many, OrderKind::Lex).is_err());
    }
}
