//! Arithmetic in GF(q), q = p^k <= 16.
//!
//! Elements are identified with their canonical integer code
//! `sum coords[i] * p^i`, where `coords` are the coordinates in the
//! polynomial basis `1, u, ..., u^(k-1)` and `u` is a root of the field's
//! modulus. All operations are table lookups built once per [`Field`].

use std::fmt;

use crate::error::{domain, usage, Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: usize = 16;

const TABLE: usize = MAX_ORDER * MAX_ORDER;

/// An element of some GF(q), stored as its canonical code.
///
/// An `Elem` does not know which field it belongs to; it is interpreted by
/// the [`Field`] it is passed to. Codes outside `[0, q)` are rejected by
/// [`Field::elem`] and [`Field::check`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn code(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub(crate) const fn from_code(code: usize) -> Elem {
        Elem(code as u8)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The finite field GF(p^k) together with its lookup tables.
#[derive(Clone)]
pub struct Field {
    p: usize,
    k: usize,
    q: usize,
    modulus: Vec<u8>,
    add: [u8; TABLE],
    mul: [u8; TABLE],
    neg: [u8; MAX_ORDER],
    inv: [u8; MAX_ORDER],
    /// `pow[a * 16 + i] = a^i` for `i < q` (with `0^0 = 1`).
    pow: [u8; TABLE],
    /// `indicator[a * 16 + i]` is the coefficient of `x^i` in `1 - (x - a)^(q-1)`.
    indicator: [u8; TABLE],
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Splits `q` into `(p, k)` with `q = p^k`, if `q` is a prime power.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1 && is_prime(p)).then_some((p, k))
}

/// Built-in moduli, low coefficient first, monic.
fn default_modulus(p: usize, k: usize) -> Vec<u8> {
    match (p, k) {
        (_, 1) => vec![0, 1],
        (2, 2) => vec![1, 1, 1],    // u^2 + u + 1
        (2, 3) => vec![1, 1, 0, 1], // u^3 + u + 1
        (2, 4) => vec![1, 1, 0, 0, 1],
        (3, 2) => vec![2, 2, 1], // u^2 + 2u + 2
        _ => unreachable!("no built-in modulus for {p}^{k}"),
    }
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p); low coefficient first.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let off = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                r[off + i] = (r[off + i] + p - (lead * c) % p) % p;
            }
        }
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(modulus: &[u8], p: usize) -> bool {
    let m: Vec<usize> = modulus.iter().map(|&c| c as usize).collect();
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        for tail in 0..p.pow(d as u32) {
            let mut divisor: Vec<usize> = (0..d).map(|i| (tail / p.pow(i as u32)) % p).collect();
            divisor.push(1);
            if poly_rem(&m, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// GF(q) with the built-in modulus: `u^2+u+1` for q=4, `u^3+u+1` for q=8,
    /// `u^2+2u+2` for q=9, `u^4+u+1` for q=16, and plain residues for primes.
    pub fn new(q: usize) -> Result<Field> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::Usage(format!("{q} is not a prime power")))?;
        if q > MAX_ORDER {
            return usage(format!("field order {q} exceeds the supported maximum {MAX_ORDER}"));
        }
        Field::with_modulus(p, &default_modulus(p, k))
    }

    /// GF(p^k) defined by an explicit monic irreducible modulus of degree `k`,
    /// given low coefficient first.
    pub fn with_modulus(p: usize, modulus: &[u8]) -> Result<Field> {
        if !is_prime(p) {
            return usage(format!("characteristic {p} is not prime"));
        }
        if modulus.len() < 2 {
            return usage("modulus must have degree at least 1");
        }
        if modulus.iter().any(|&c| c as usize >= p) {
            return usage("modulus coefficients must lie in [0, p)");
        }
        if *modulus.last().unwrap() != 1 {
            return usage("modulus must be monic");
        }
        let k = modulus.len() - 1;
        let q = p.checked_pow(k as u32).filter(|&q| q <= MAX_ORDER).ok_or_else(|| {
            Error::Usage(format!("field order {p}^{k} exceeds the supported maximum {MAX_ORDER}"))
        })?;
        if !is_irreducible(modulus, p) {
            return usage("modulus is reducible");
        }
        let mut field = Field {
            p,
            k,
            q,
            modulus: modulus.to_vec(),
            add: [0; TABLE],
            mul: [0; TABLE],
            neg: [0; MAX_ORDER],
            inv: [0; MAX_ORDER],
            pow: [0; TABLE],
            indicator: [0; TABLE],
        };
        field.build_tables();
        Ok(field)
    }

    fn coords_of(&self, code: usize) -> Vec<usize> {
        (0..self.k).map(|i| (code / self.p.pow(i as u32)) % self.p).collect()
    }

    fn code_of(&self, coords: &[usize]) -> usize {
        coords.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn build_tables(&mut self) {
        let (p, q) = (self.p, self.q);
        let m: Vec<usize> = self.modulus.iter().map(|&c| c as usize).collect();
        for a in 0..q {
            let ca = self.coords_of(a);
            for b in 0..q {
                let cb = self.coords_of(b);
                let sum: Vec<usize> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                self.add[a * MAX_ORDER + b] = self.code_of(&sum) as u8;
                let mut prod = vec![0usize; 2 * self.k - 1];
                for (i, x) in ca.iter().enumerate() {
                    for (j, y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut red = poly_rem(&prod, &m, p);
                red.resize(self.k, 0);
                self.mul[a * MAX_ORDER + b] = self.code_of(&red) as u8;
            }
            let neg: Vec<usize> = ca.iter().map(|&x| (p - x) % p).collect();
            self.neg[a] = self.code_of(&neg) as u8;
        }
        for a in 0..q {
            let mut acc = 1u8;
            for i in 0..q {
                self.pow[a * MAX_ORDER + i] = acc;
                acc = self.mul[a * MAX_ORDER + acc as usize];
            }
        }
        for a in 1..q {
            self.inv[a] = self.pow_raw(a as u8, (q - 2) as u64);
        }
        // 1 - (x - a)^(q-1), expanded by repeated multiplication.
        for a in 0..q {
            let mut poly = vec![1u8];
            let neg_a = self.neg[a];
            for _ in 0..q - 1 {
                let mut next = vec![0u8; poly.len() + 1];
                for (i, &c) in poly.iter().enumerate() {
                    next[i + 1] = self.add[next[i + 1] as usize * MAX_ORDER + c as usize];
                    let t = self.mul[c as usize * MAX_ORDER + neg_a as usize];
                    next[i] = self.add[next[i] as usize * MAX_ORDER + t as usize];
                }
                poly = next;
            }
            for (i, &c) in poly.iter().enumerate() {
                let mut v = self.neg[c as usize];
                if i == 0 {
                    v = self.add[v as usize * MAX_ORDER + 1];
                }
                self.indicator[a * MAX_ORDER + i] = v;
            }
        }
    }

    fn pow_raw(&self, x: u8, mut e: u64) -> u8 {
        let mut base = x;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul[acc as usize * MAX_ORDER + base as usize];
            }
            base = self.mul[base as usize * MAX_ORDER + base as usize];
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn p(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.q
    }

    /// Modulus coefficients over GF(p), low coefficient first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// The element with the given code.
    pub fn elem(&self, code: usize) -> Result<Elem> {
        if code < self.q {
            Ok(Elem::from_code(code))
        } else {
            usage(format!("element code {code} does not belong to GF({})", self.q))
        }
    }

    /// Validates that `x` belongs to this field.
    pub fn check(&self, x: Elem) -> Result<Elem> {
        self.elem(x.code())
    }

    /// The image of the integer `n` under `Z -> GF(q)`.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem::from_code(n.rem_euclid(self.p as i64) as usize)
    }

    /// Coordinates of `x` in the basis `1, u, ..., u^(k-1)`.
    pub fn coords(&self, x: Elem) -> Vec<u8> {
        self.coords_of(x.code()).into_iter().map(|c| c as u8).collect()
    }

    /// All elements in ascending code order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.q).map(Elem::from_code)
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.add[x.code() * MAX_ORDER + y.code()])
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        Elem(self.neg[x.code()])
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.mul[x.code() * MAX_ORDER + y.code()])
    }

    /// Multiplicative inverse, `x^(q-2)`.
    pub fn inv(&self, x: Elem) -> Result<Elem> {
        if x.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Elem(self.inv[x.code()]))
        }
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^e` with `0^0 = 1`.
    pub fn pow(&self, x: Elem, e: u64) -> Elem {
        Elem(self.pow_raw(x.0, e))
    }

    /// `x^i` for `i < q`, by table lookup.
    #[inline]
    pub(crate) fn pow_small(&self, x: Elem, i: usize) -> Elem {
        Elem(self.pow[x.code() * MAX_ORDER + i])
    }

    /// Coefficient of `x^i` in the indicator polynomial `1 - (x - a)^(q-1)`.
    #[inline]
    pub(crate) fn indicator(&self, a: Elem, i: usize) -> Elem {
        Elem(self.indicator[a.code() * MAX_ORDER + i])
    }

    /// Checked addition for values whose provenance is not known.
    pub fn try_add(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.add(self.check(x)?, self.check(y)?))
    }

    /// Checked multiplication for values whose provenance is not known.
    pub fn try_mul(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(self.check(x)?, self.check(y)?))
    }

    /// Checked inverse; rejects foreign codes and zero.
    pub fn try_inv(&self, x: Elem) -> Result<Elem> {
        self.inv(self.check(x)?)
    }

    /// Human-readable description, e.g. `GF(4) = GF(2)[u]/(u^2 + u + 1)`.
    pub fn describe(&self) -> String {
        if self.k == 1 {
            return format!("GF({})", self.q);
        }
        let mut terms = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{i}"),
            };
            terms.push(match (c, var.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => var,
                _ => format!("{c}{var}"),
            });
        }
        format!("GF({}) = GF({})[u]/({})", self.q, self.p, terms.join(" + "))
    }
}

/// Rejects a field operation on codes from different fields.
pub(crate) fn same_field(a: &Field, b: &Field) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        domain(format!("mismatched fields GF({}) and GF({})", a.q, b.q))
    }
}
