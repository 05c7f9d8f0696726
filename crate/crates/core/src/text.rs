//! Polynomial expression parsing shared by the univariate, bivariate and
//! multivariate representations.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Integer literals are field element codes. The canonical printed forms
//! produced by this crate only use `+`, `*`, `^`, codes and variable names,
//! so they parse back through the same grammar.

use crate::error::{usage, Error, Result};

/// Target of the parser: anything with ring operations and named variables.
pub trait Algebra {
    type Value: Clone;

    fn constant(&self, code: u64) -> Result<Self::Value>;
    fn variable(&self, name: &str) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;

    fn pow(&self, a: &Self::Value, mut e: u64) -> Result<Self::Value> {
        let mut acc = self.constant(1)?;
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
        Ok(acc)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::Open);
                i += 1
            }
            ')' => {
                out.push(Token::Close);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n = s.parse().map_err(|_| Error::Usage(format!("integer literal {s} is too large")))?;
                out.push(Token::Int(n));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return usage(format!("unexpected character {other:?} in polynomial")),
        }
    }
    Ok(out)
}

struct Parser<'a, A: Algebra> {
    tokens: Vec<Token>,
    pos: usize,
    alg: &'a A,
}

impl<A: Algebra> Parser<'_, A> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<A::Value> {
        let negate = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let first = self.term()?;
        let mut acc = if negate { self.alg.neg(&first) } else { first };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.alg.add(&acc, &t);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.alg.add(&acc, &self.alg.neg(&t));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<A::Value> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.alg.mul(&acc, &f);
                }
                Some(Token::Int(_)) | Some(Token::Ident(_)) | Some(Token::Open) => {
                    let f = self.factor()?;
                    acc = self.alg.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<A::Value> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.tokens.get(self.pos).cloned() {
                Some(Token::Int(e)) => {
                    self.pos += 1;
                    self.alg.pow(&base, e)
                }
                _ => usage("expected an integer exponent after '^'"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<A::Value> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Token::Int(n)) => self.alg.constant(n),
            Some(Token::Ident(name)) => self.alg.variable(&name),
            Some(Token::Open) => {
                let v = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return usage("unbalanced parentheses");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(t) => usage(format!("unexpected token {t:?}")),
            None => usage("unexpected end of polynomial"),
        }
    }
}

/// Parses `src` into a value of the given algebra.
pub fn parse<A: Algebra>(alg: &A, src: &str) -> Result<A::Value> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return usage("empty polynomial");
    }
    let mut parser = Parser { tokens, pos: 0, alg };
    let v = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return usage(format!("trailing input after position {}", parser.pos));
    }
    Ok(v)
}

/// Renders one monomial's variable part, e.g. `x^2*y`. Empty for the constant monomial.
pub(crate) fn render_monomial<'a>(factors: impl Iterator<Item = (&'a str, u32)>) -> String {
    factors
        .filter(|&(_, e)| e > 0)
        .map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Joins `(coefficient code, variable part)` terms in the canonical style.
pub(crate) fn render_terms(terms: impl Iterator<Item = (usize, String)>) -> String {
    let parts: Vec<String> = terms
        .map(|(c, vars)| match (c, vars.is_empty()) {
            (_, true) => c.to_string(),
            (1, false) => vars,
            _ => format!("{c}*{vars}"),
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Integers mod 7 with the single variable `t` evaluated at 3.
    struct Eval;

    impl Algebra for Eval {
        type Value = i64;
        fn constant(&self, code: u64) -> Result<i64> {
            Ok(code as i64 % 7)
        }
        fn variable(&self, name: &str) -> Result<i64> {
            if name == "t" {
                Ok(3)
            } else {
                usage(format!("unknown variable {name}"))
            }
        }
        fn add(&self, a: &i64, b: &i64) -> i64 {
            (a + b).rem_euclid(7)
        }
        fn neg(&self, a: &i64) -> i64 {
            (-a).rem_euclid(7)
        }
        fn mul(&self, a: &i64, b: &i64) -> i64 {
            (a * b).rem_euclid(7)
        }
    }

    #[test]
    fn precedence_and_implicit_products() {
        assert_eq!(parse(&Eval, "1 + 2*t^2").unwrap(), (1 + 2 * 9) % 7);
        assert_eq!(parse(&Eval, "2(t + 1)^2").unwrap(), (2 * 16) % 7);
        assert_eq!(parse(&Eval, "-t + 1").unwrap(), (-3i64 + 1).rem_euclid(7));
        assert_eq!(parse(&Eval, "t - t").unwrap(), 0);
    }

    #[test]
    fn errors() {
        assert!(parse(&Eval, "").is_err());
        assert!(parse(&Eval, "(t + 1").is_err());
        assert!(parse(&Eval, "t^").is_err());
        assert!(parse(&Eval, "s").is_err());
        assert!(parse(&Eval, "t $ 1").is_err());
        assert!(parse(&Eval, "t )").is_err());
    }

    #[test]
    fn rendering() {
        let s = render_terms(
            vec![(1, "x^2*y^2".to_string()), (3, "x*y".to_string()), (2, String::new())].into_iter(),
        );
        assert_eq!(s, "x^2*y^2 + 3*x*y + 2");
        assert_eq!(render_terms(std::iter::empty()), "0");
        assert_eq!(render_monomial([("x", 2), ("y", 0), ("z", 1)].into_iter()), "x^2*z");
    }
}
