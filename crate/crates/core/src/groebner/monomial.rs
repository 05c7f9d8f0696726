//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Most variables a ring may have.
pub const MAX_VARS: usize = 16;

/// An exponent vector; slot `k` belongs to the `k`-th variable of the ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |k| k + 1);
        write!(f, "Monomial{:?}", &self.exps[..last])
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS], deg: 0 };

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut m = Monomial::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m.deg = exps.iter().map(|&e| e as u32).sum();
        m
    }

    /// `x_k^e`.
    pub fn var(k: usize, e: u16) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[k] = e;
        m.deg = e as u32;
        m
    }

    #[inline]
    pub fn exp(&self, k: usize) -> u16 {
        self.exps[k]
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a += b;
        }
        m.deg += other.deg;
        m
    }

    /// `self / other`; `other` must divide `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a -= b;
        }
        m.deg -= other.deg;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a = (*a).max(*b);
        }
        m.deg = m.exps.iter().map(|&e| e as u32).sum();
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// The single variable of a pure power `x_k^e`, `e > 0`.
    pub fn pure_power(&self) -> Option<(usize, u16)> {
        let mut nz = self.exps.iter().enumerate().filter(|(_, &e)| e > 0);
        match (nz.next(), nz.next()) {
            (Some((k, &e)), None) => Some((k, e)),
            _ => None,
        }
    }

    /// Smallest variable index with a positive exponent.
    pub fn first_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }
}

/// Lexicographic or degree-reverse-lexicographic, always relative to the
/// ring's variable precedence (variable 0 is the largest).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum OrderKind {
    Lex,
    #[default]
    DegRevLex,
}

impl OrderKind {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            OrderKind::Lex => a.exps.cmp(&b.exps),
            OrderKind::DegRevLex => a.deg.cmp(&b.deg).then_with(|| {
                for k in (0..MAX_VARS).rev() {
                    if a.exps[k] != b.exps[k] {
                        return b.exps[k].cmp(&a.exps[k]);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::DegRevLex => "degrevlex",
        })
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<OrderKind, Error> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "degrevlex" | "grevlex" | "dp" => Ok(OrderKind::DegRevLex),
            other => Err(Error::Usage(format!("unknown monomial order {other:?} (expected lex or degrevlex)"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn lex_order() {
        let lex = OrderKind::Lex;
        assert_eq!(lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(lex.cmp(&m(&[1, 2]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(lex.cmp(&m(&[0, 0]), &m(&[0, 0])), Ordering::Equal);
    }

    #[test]
    fn degrevlex_order() {
        let o = OrderKind::DegRevLex;
        // x1^3 > x1^2 x2 > x1 x2^2 > x2^3 with x1 > x2
        let chain = [m(&[3, 0]), m(&[2, 1]), m(&[1, 2]), m(&[0, 3])];
        assert!(chain.windows(2).all(|w| o.cmp(&w[0], &w[1]) == Ordering::Greater));
        // x1 x3 < x2^2 in three variables
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 4]), &m(&[3, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn arithmetic() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert!(m(&[1, 0, 1]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(a.mul(&b).div(&b), a);
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
        assert_eq!(m(&[0, 4]).pure_power(), Some((1, 4)));
        assert_eq!(a.pure_power(), None);
        assert_eq!("lex".parse::<OrderKind>().unwrap(), OrderKind::Lex);
        assert!("foo".parse::<OrderKind>().is_err());
    }
}
