//! Polynomial expressions such as `z0^5*z1 + z0*z2^3 + z1^4 + z3^3`.
//!
//! Grammar: a sum of terms separated by `+` or `-`; a term is a product of
//! factors, written by juxtaposition or with `*`; a factor is an integer or a
//! variable `zN` with an optional exponent `^K`. Positions in errors are
//! character offsets.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedPolynomial {
    pub support: Vec<Monomial>,
    pub num_vars: usize,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Int(BigInt),
    Var(usize),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |from: usize| {
        let mut j = from;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '0'..='9' => {
                let end = digits(i);
                let s: String = chars[i..end].iter().collect();
                out.push((i, Token::Int(s.parse().expect("ascii digits"))));
                i = end;
            }
            'z' => {
                let end = digits(i + 1);
                if end == i + 1 {
                    return Err(Error::Syntax {
                        position: i,
                        message: "variable name needs an index, e.g. z0".into(),
                    });
                }
                let s: String = chars[i + 1..end].iter().collect();
                let index = s.parse().map_err(|_| Error::Syntax {
                    position: i,
                    message: "variable index too large".into(),
                })?;
                out.push((i, Token::Var(index)));
                i = end;
            }
            other => {
                return Err(Error::Syntax {
                    position: i,
                    message: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn error<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.position(),
            message: message.to_string(),
        })
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(&Token::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        match self.peek().cloned() {
            Some(Token::Int(k)) => {
                let k = u32::try_from(k).or_else(|_| self.error("exponent too large"))?;
                self.pos += 1;
                Ok(k)
            }
            _ => self.error("expected an integer exponent after '^'"),
        }
    }

    /// One term: coefficient and exponents keyed by variable index.
    fn term(&mut self) -> Result<(BigInt, BTreeMap<usize, u32>)> {
        let mut coeff = BigInt::one();
        let mut exps = BTreeMap::new();
        let mut factors = 0;
        loop {
            match self.peek().cloned() {
                Some(Token::Int(c)) => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    coeff *= num_traits::pow(c, e as usize);
                }
                Some(Token::Var(v)) => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    *exps.entry(v).or_insert(0) += e;
                }
                _ => {
                    if factors == 0 {
                        return self.error("expected a coefficient or a variable");
                    }
                    return Ok((coeff, exps));
                }
            }
            factors += 1;
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
                if !matches!(self.peek(), Some(Token::Int(_)) | Some(Token::Var(_))) {
                    return self.error("expected a factor after '*'");
                }
            }
        }
    }
}

/// Parses `text` into a monomial support. With `num_vars` given, variable
/// indices must be below it; otherwise the count is one past the largest index.
pub fn parse_polynomial(text: &str, num_vars: Option<usize>) -> Result<ParsedPolynomial> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.chars().count(),
    };
    if p.peek().is_none() {
        return p.error("empty expression");
    }
    let mut terms: Vec<(usize, BigInt, BTreeMap<usize, u32>)> = Vec::new();
    let mut first = true;
    while p.peek().is_some() {
        let mut sign = BigInt::one();
        match p.peek() {
            Some(Token::Plus) => p.pos += 1,
            Some(Token::Minus) => {
                sign = -sign;
                p.pos += 1;
            }
            _ if !first => return p.error("expected '+' or '-' between terms"),
            _ => {}
        }
        first = false;
        let at = p.position();
        let (c, exps) = p.term()?;
        terms.push((at, sign * c, exps));
    }

    let max_index = terms
        .iter()
        .flat_map(|(_, _, e)| e.keys().copied())
        .max();
    let vars = match num_vars {
        Some(n) => {
            if let Some(&(at, _, _)) = terms
                .iter()
                .find(|(_, _, e)| e.keys().any(|&i| i >= n))
            {
                return Err(Error::Syntax {
                    position: at,
                    message: format!("variable index out of range for {n} variables"),
                });
            }
            n
        }
        None => max_index.map_or(1, |m| m + 1),
    };

    let mut merged: BTreeMap<Monomial, (BigInt, usize)> = BTreeMap::new();
    for (_, c, exps) in terms {
        let mut e = vec![0u32; vars];
        for (i, a) in exps {
            e[i] = a;
        }
        let entry = merged
            .entry(Monomial::new(e))
            .or_insert((BigInt::zero(), 0));
        entry.0 += c;
        entry.1 += 1;
    }
    let mut warnings = Vec::new();
    let mut support = Vec::new();
    for (m, (c, count)) in merged {
        if c.is_zero() {
            return Err(Error::CancelledMonomial {
                monomial: m.to_string(),
            });
        }
        if count > 1 {
            warnings.push(format!("monomial {m} appears {count} times; merged"));
        }
        support.push(m);
    }
    support.reverse();
    Ok(ParsedPolynomial {
        support,
        num_vars: vars,
        warnings,
    })
}
