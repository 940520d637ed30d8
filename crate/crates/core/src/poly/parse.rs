//! Recursive-descent parser for the polynomial syntax produced by the
//! display code: `3/2*x^2*y - (w + 1)*z^3`.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := rational | variable | 'w' | '(' expr ')'
//! ```
//!
//! Variables are `x, y, z` (up to three variables) or `x0, x1, ...`; `w`
//! denotes the number-field generator and is only accepted over extension
//! domains. A rational literal is `int` or `int/int`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::coeffs::{CoeffDomain, FieldElement};
use crate::error::{Error, Result};

use super::Polynomial;

/// Parse a polynomial in `num_vars` variables over `domain`.
pub fn parse_polynomial(input: &str, domain: &CoeffDomain, num_vars: usize) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        domain,
        num_vars,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parse_err(format!(
            "unexpected trailing input at token {:?}",
            parser.tokens[parser.pos]
        )));
    }
    Ok(poly)
}

/// Parse a single field element (a constant expression; `w` is allowed over
/// extension domains).
pub fn parse_element(input: &str, domain: &CoeffDomain) -> Result<FieldElement> {
    let poly = parse_polynomial(input, domain, 0)?;
    Ok(poly
        .coefficient(&super::Monomial::one(0))
        .cloned()
        .unwrap_or_else(|| domain.zero()))
}

fn parse_err(msg: String) -> Error {
    Error::Parse { line: 0, msg }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Integer(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '/' => {
                chars.next();
                tokens.push(Token::Slash);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Integer(digits.parse().unwrap()));
            }
            'a'..='z' | 'A'..='Z' => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() {
                        ident.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(ident));
            }
            other => {
                return Err(parse_err(format!("unexpected character {other:?}")));
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    domain: &'a CoeffDomain,
    num_vars: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.advance() {
            Some(found) if found == t => Ok(()),
            found => Err(parse_err(format!("expected {t:?}, found {found:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.advance();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.advance();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Token::Minus) => {
                    self.advance();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.advance();
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.advance();
            match self.advance() {
                Some(Token::Integer(e)) => {
                    let e: u32 = e.try_into().map_err(|_| {
                        parse_err("exponent does not fit in u32".into())
                    })?;
                    return Ok(base.pow(e));
                }
                found => return Err(parse_err(format!("expected exponent, found {found:?}"))),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.advance() {
            Some(Token::Integer(n)) => {
                // Rational literal: int or int/int.
                let mut value = BigRational::from(n);
                if self.peek() == Some(&Token::Slash) {
                    self.advance();
                    match self.advance() {
                        Some(Token::Integer(d)) => {
                            if d.is_zero() {
                                return Err(parse_err("zero denominator".into()));
                            }
                            value /= BigRational::from(d);
                        }
                        found => {
                            return Err(parse_err(format!(
                                "expected denominator, found {found:?}"
                            )))
                        }
                    }
                }
                Ok(Polynomial::constant(
                    self.domain,
                    self.num_vars,
                    self.domain.from_rational(value)?,
                ))
            }
            Some(Token::Ident(name)) => {
                if name == "w" {
                    let gen = self.domain.generator().map_err(|_| {
                        parse_err(format!(
                            "'w' is not valid over domain {}",
                            self.domain.name()
                        ))
                    })?;
                    return Ok(Polynomial::constant(self.domain, self.num_vars, gen));
                }
                let index = self.variable_index(&name)?;
                Ok(Polynomial::variable(self.domain, self.num_vars, index))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            found => Err(parse_err(format!("expected a term, found {found:?}"))),
        }
    }

    fn variable_index(&self, name: &str) -> Result<usize> {
        if self.num_vars <= 3 {
            if let Some(i) = ["x", "y", "z"].iter().position(|v| *v == name) {
                if i < self.num_vars {
                    return Ok(i);
                }
            }
        }
        if let Some(rest) = name.strip_prefix('x') {
            if let Ok(i) = rest.parse::<usize>() {
                if i < self.num_vars {
                    return Ok(i);
                }
            }
        }
        Err(parse_err(format!(
            "unknown variable {name:?} (polynomial has {} variables)",
            self.num_vars
        )))
    }
}
