//! Surface syntax for elements of the free group and the two actions.
//!
//! ```text
//! action  := product (('.' | ':') product)?
//! product := postfix postfix*          juxtaposition, left-associative
//! postfix := atom '\''*
//! atom    := ident | '1' | '(' action ')'
//! ident   := [a-z][a-z0-9]*
//! ```
//!
//! `.` and `:` do not chain: `x . y . z` must be parenthesised.

use std::fmt;

use crate::actions::{act_colon, act_dot};
use crate::error::{Error, Result};
use crate::terms::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Identity,
    Symbol(String),
    Inverse(Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    DotAct(Box<Expr>, Box<Expr>),
    ColonAct(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn sym(s: &str) -> Expr {
        Expr::Symbol(s.to_owned())
    }

    pub fn inverse(e: Expr) -> Expr {
        Expr::Inverse(Box::new(e))
    }

    pub fn product(a: Expr, b: Expr) -> Expr {
        Expr::Product(Box::new(a), Box::new(b))
    }

    pub fn dot(a: Expr, b: Expr) -> Expr {
        Expr::DotAct(Box::new(a), Box::new(b))
    }

    pub fn colon(a: Expr, b: Expr) -> Expr {
        Expr::ColonAct(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Identity => f.write_str("1"),
            Expr::Symbol(s) => f.write_str(s),
            Expr::Inverse(e) => write!(f, "({e})'"),
            Expr::Product(a, b) => write!(f, "({a}) ({b})"),
            Expr::DotAct(a, b) => write!(f, "({a}) . ({b})"),
            Expr::ColonAct(a, b) => write!(f, "({a}) : ({b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    One,
    Prime,
    Dot,
    Colon,
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            '\'' => Tok::Prime,
            '.' => Tok::Dot,
            ':' => Tok::Colon,
            '(' => Tok::Open,
            ')' => Tok::Close,
            c if c.is_ascii_lowercase() || c.is_ascii_digit() => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit())
                {
                    i += 1;
                }
                let word = &input[start..i];
                let tok = if word == "1" {
                    Tok::One
                } else if c.is_ascii_lowercase() {
                    Tok::Ident(word.to_owned())
                } else {
                    return Err(Error::Parse {
                        pos: start,
                        msg: format!("unknown token {word:?}"),
                    });
                };
                out.push((start, tok));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unknown token {other:?}"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn action(&mut self) -> Result<Expr> {
        let lhs = self.product()?;
        let op = match self.peek() {
            Some(Tok::Dot) => Tok::Dot,
            Some(Tok::Colon) => Tok::Colon,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let rhs = self.product()?;
        if matches!(self.peek(), Some(Tok::Dot | Tok::Colon)) {
            return self.err("`.` and `:` do not chain; add parentheses");
        }
        Ok(match op {
            Tok::Dot => Expr::dot(lhs, rhs),
            _ => Expr::colon(lhs, rhs),
        })
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.postfix()?;
        while matches!(self.peek(), Some(Tok::Ident(_) | Tok::One | Tok::Open)) {
            let rhs = self.postfix()?;
            acc = Expr::product(acc, rhs);
        }
        Ok(acc)
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        while self.peek() == Some(&Tok::Prime) {
            self.pos += 1;
            e = Expr::inverse(e);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Symbol(s))
            }
            Some(Tok::One) => {
                self.pos += 1;
                Ok(Expr::Identity)
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let e = self.action()?;
                if self.peek() != Some(&Tok::Close) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Close) => self.err("unbalanced `)`"),
            Some(t) => self.err(format!("unexpected {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(input)?,
        pos: 0,
        end: input.len(),
    };
    let e = p.action()?;
    match p.peek() {
        None => Ok(e),
        Some(Tok::Close) => p.err("unbalanced `)`"),
        Some(_) => p.err("trailing input"),
    }
}

pub fn eval_to_word(e: &Expr) -> Result<Word> {
    Ok(match e {
        Expr::Identity => Word::identity(),
        Expr::Symbol(s) => Word::letter(Letter::gen(s)?),
        Expr::Inverse(a) => eval_to_word(a)?.inv(),
        Expr::Product(a, b) => eval_to_word(a)?.mul(&eval_to_word(b)?),
        Expr::DotAct(a, b) => act_dot(&eval_to_word(a)?, &eval_to_word(b)?),
        Expr::ColonAct(a, b) => act_colon(&eval_to_word(a)?, &eval_to_word(b)?),
    })
}

/// Parses and evaluates in one go.
pub fn parse_word(input: &str) -> Result<Word> {
    eval_to_word(&parse(input)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Letter {
        Letter::gen(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse("(x . y) x").unwrap(),
            Expr::product(Expr::dot(Expr::sym("x"), Expr::sym("y")), Expr::sym("x"))
        );
        assert_eq!(
            parse("x x'").unwrap(),
            Expr::product(Expr::sym("x"), Expr::inverse(Expr::sym("x")))
        );
        assert!(matches!(parse("x . y . z"), Err(Error::Parse { pos: 6, .. })));
        assert!(matches!(parse("x : y . z"), Err(Error::Parse { .. })));
    }

    #[test]
    fn precedence() {
        // product binds tighter than the actions
        assert_eq!(
            parse("x . y z").unwrap(),
            Expr::dot(Expr::sym("x"), Expr::product(Expr::sym("y"), Expr::sym("z")))
        );
        assert_eq!(
            parse("x y z").unwrap(),
            Expr::product(Expr::product(Expr::sym("x"), Expr::sym("y")), Expr::sym("z"))
        );
        assert_eq!(
            parse("x''").unwrap(),
            Expr::inverse(Expr::inverse(Expr::sym("x")))
        );
        assert_eq!(parse("1").unwrap(), Expr::Identity);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse("x + y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse("(x y"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse("x y)"), Err(Error::Parse { pos: 3, .. })));
        assert!(parse("").is_err());
        assert!(parse("X").is_err());
        assert!(parse("12").is_err());
        assert!(parse("x .").is_err());
    }

    #[test]
    fn eval_examples() {
        let (x, y, z) = (g("x"), g("y"), g("z"));
        assert_eq!(
            parse_word("(x . y) x").unwrap(),
            Word::reduce([Letter::dot(x.clone(), y.clone()).unwrap(), x.clone()])
        );
        assert!(parse_word("x x'").unwrap().is_empty());
        assert_eq!(
            parse_word("x . (y z)").unwrap(),
            Word::reduce([
                Letter::dot(Letter::colon(z.clone(), x.clone()).unwrap(), y).unwrap(),
                Letter::dot(x, z).unwrap()
            ])
        );
        assert!(parse_word("1").unwrap().is_empty());
    }

    #[test]
    fn rendering_reparses() {
        for s in ["((y : x) . z)' x", "(x . y) x", "1", "x' y (x : (y . z))'"] {
            let w = parse_word(s).unwrap();
            assert_eq!(parse_word(&w.to_string()).unwrap(), w, "{s}");
        }
        assert_eq!(parse_word("((y : x) . z)' x").unwrap().to_string(), "((y : x) . z)' x");
    }
}
