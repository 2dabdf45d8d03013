//! Closed-form expressions in `n`: parsing, direct evaluation, and exact
//! conversion to [`QuasiPoly`].
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' POSINT)?
//! atom   := INT | 'n' | '(' expr ')' | '-' atom
//!         | ('floor' | 'round' | 'trunc') '(' expr '/' POSINT ')'
//! ```
//!
//! `trunc` is read as `floor`. The two agree on non-negative arguments,
//! which is all the certifier ever evaluates; for negative `n` the library
//! semantics are floor. `round` rounds half up.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Pow;

use crate::quasipoly::{QuasiPoly, QuasiPolyError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(BigInt),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Exponent is at least 1.
    Pow(Box<Expr>, u32),
    /// `⌊e / m⌋`, `m >= 1`.
    Floor(Box<Expr>, u64),
    /// Nearest integer to `e / m`, ties up, `m >= 1`.
    Round(Box<Expr>, u64),
}

impl Expr {
    pub fn constant(v: impl Into<BigInt>) -> Expr {
        Expr::Const(v.into())
    }

    /// Exact integer value at `n`.
    pub fn eval(&self, n: &BigInt) -> BigInt {
        match self {
            Expr::Const(c) => c.clone(),
            Expr::Var => n.clone(),
            Expr::Neg(e) => -e.eval(n),
            Expr::Add(a, b) => a.eval(n) + b.eval(n),
            Expr::Sub(a, b) => a.eval(n) - b.eval(n),
            Expr::Mul(a, b) => a.eval(n) * b.eval(n),
            Expr::Pow(e, k) => Pow::pow(e.eval(n), *k),
            Expr::Floor(e, m) => e.eval(n).div_floor(&BigInt::from(*m)),
            Expr::Round(e, m) => {
                let m = BigInt::from(*m);
                let twice: BigInt = e.eval(n) * 2 + &m;
                twice.div_floor(&(m * 2))
            }
        }
    }

    pub fn eval_i64(&self, n: i64) -> BigInt {
        self.eval(&BigInt::from(n))
    }

    /// Exact quasi-polynomial with the same value at every integer,
    /// canonicalized.
    pub fn to_quasi_poly(&self) -> Result<QuasiPoly, QuasiPolyError> {
        let qp = match self {
            Expr::Const(c) => QuasiPoly::constant(c.clone()),
            Expr::Var => QuasiPoly::var(),
            Expr::Neg(e) => -&e.to_quasi_poly()?,
            Expr::Add(a, b) => a.to_quasi_poly()?.checked_add(&b.to_quasi_poly()?)?,
            Expr::Sub(a, b) => a.to_quasi_poly()?.checked_sub(&b.to_quasi_poly()?)?,
            Expr::Mul(a, b) => a.to_quasi_poly()?.checked_mul(&b.to_quasi_poly()?)?,
            Expr::Pow(e, k) => e.to_quasi_poly()?.pow(*k)?,
            Expr::Floor(e, m) => e.to_quasi_poly()?.floor_div(divisor_i64(*m)?)?,
            Expr::Round(e, m) => e.to_quasi_poly()?.round_div(divisor_i64(*m)?)?,
        };
        Ok(qp.canonicalize())
    }

    /// Integer literals in pre-order: constants, exponents and divisors.
    pub fn literal_count(&self) -> usize {
        match self {
            Expr::Const(_) => 1,
            Expr::Var => 0,
            Expr::Neg(e) => e.literal_count(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.literal_count() + b.literal_count()
            }
            Expr::Pow(e, _) | Expr::Floor(e, _) | Expr::Round(e, _) => 1 + e.literal_count(),
        }
    }

    /// Copy of `self` with the `index`-th literal (pre-order, node before
    /// children) replaced by `value`. Exponents and divisors are only
    /// replaced by values at least 1; other requests return `None`.
    pub fn with_literal(&self, index: usize, value: &BigInt) -> Option<Expr> {
        let mut idx = index;
        self.replace_literal(&mut idx, value)
    }

    fn replace_literal(&self, idx: &mut usize, value: &BigInt) -> Option<Expr> {
        use num_traits::ToPrimitive;
        let here = |idx: &mut usize| {
            let hit = *idx == 0;
            *idx = idx.wrapping_sub(1);
            hit
        };
        let sub = |e: &Expr, idx: &mut usize| e.replace_literal(idx, value);
        Some(match self {
            Expr::Const(c) => {
                if here(idx) {
                    Expr::Const(value.clone())
                } else {
                    Expr::Const(c.clone())
                }
            }
            Expr::Var => Expr::Var,
            Expr::Neg(e) => Expr::Neg(Box::new(sub(e, idx)?)),
            Expr::Add(a, b) => Expr::Add(Box::new(sub(a, idx)?), Box::new(sub(b, idx)?)),
            Expr::Sub(a, b) => Expr::Sub(Box::new(sub(a, idx)?), Box::new(sub(b, idx)?)),
            Expr::Mul(a, b) => Expr::Mul(Box::new(sub(a, idx)?), Box::new(sub(b, idx)?)),
            Expr::Pow(e, k) => {
                let k = if here(idx) { value.to_u32().filter(|&v| v >= 1)? } else { *k };
                Expr::Pow(Box::new(sub(e, idx)?), k)
            }
            Expr::Floor(e, m) => {
                let m = if here(idx) { value.to_u64().filter(|&v| v >= 1)? } else { *m };
                Expr::Floor(Box::new(sub(e, idx)?), m)
            }
            Expr::Round(e, m) => {
                let m = if here(idx) { value.to_u64().filter(|&v| v >= 1)? } else { *m };
                Expr::Round(Box::new(sub(e, idx)?), m)
            }
        })
    }

    /// Value of the `index`-th literal in the same order as
    /// [`with_literal`](Self::with_literal).
    pub fn literal(&self, index: usize) -> Option<BigInt> {
        fn walk(e: &Expr, idx: &mut usize) -> Option<BigInt> {
            let take = |v: BigInt, idx: &mut usize| {
                if *idx == 0 {
                    Some(v)
                } else {
                    *idx -= 1;
                    None
                }
            };
            match e {
                Expr::Const(c) => take(c.clone(), idx),
                Expr::Var => None,
                Expr::Neg(e) => walk(e, idx),
                Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                    walk(a, idx).or_else(|| walk(b, idx))
                }
                Expr::Pow(e, k) => take(BigInt::from(*k), idx).or_else(|| walk(e, idx)),
                Expr::Floor(e, m) | Expr::Round(e, m) => {
                    take(BigInt::from(*m), idx).or_else(|| walk(e, idx))
                }
            }
        }
        let mut idx = index;
        walk(self, &mut idx)
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Pow(..) => 3,
            _ => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let wrap = self.precedence() < min;
        if wrap {
            f.write_str("(")?;
        }
        match self {
            Expr::Const(c) => write!(f, "{c}")?,
            Expr::Var => f.write_str("n")?,
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.write_at(f, 4)?;
            }
            Expr::Add(a, b) => {
                a.write_at(f, 1)?;
                f.write_str(" + ")?;
                b.write_at(f, 2)?;
            }
            Expr::Sub(a, b) => {
                a.write_at(f, 1)?;
                f.write_str(" - ")?;
                b.write_at(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.write_at(f, 2)?;
                f.write_str("*")?;
                b.write_at(f, 3)?;
            }
            Expr::Pow(e, k) => {
                e.write_at(f, 4)?;
                write!(f, "^{k}")?;
            }
            Expr::Floor(e, m) => {
                f.write_str("floor(")?;
                e.write_at(f, 1)?;
                write!(f, "/{m})")?;
            }
            Expr::Round(e, m) => {
                f.write_str("round(")?;
                e.write_at(f, 1)?;
                write!(f, "/{m})")?;
            }
        }
        if wrap {
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn divisor_i64(m: u64) -> Result<i64, QuasiPolyError> {
    i64::try_from(m).map_err(|_| QuasiPolyError::PeriodOverflow)
}

/// Prints in the concrete syntax accepted by [`parse`]. Negative constants
/// (which the parser never produces) print as `-k`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax {
        offset: usize,
        expected: String,
        found: String,
    },
    /// The divisor inside `floor(·/m)` or `round(·/m)` is not a positive
    /// integer literal.
    DivisorNotLiteral { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::DivisorNotLiteral { offset } => *offset,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax {
                offset,
                expected,
                found,
            } => write!(
                f,
                "syntax error at byte {offset}: expected {expected}, found {found}"
            ),
            ParseError::DivisorNotLiteral { offset } => write!(
                f,
                "divisor at byte {offset} must be a positive integer literal"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "integer {v}"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    tok: Tok,
    tok_start: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, ParseError> {
        let mut p = Parser {
            src,
            pos: 0,
            tok: Tok::End,
            tok_start: 0,
        };
        p.bump()?;
        Ok(p)
    }

    fn bump(&mut self) -> Result<(), ParseError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.tok_start = self.pos;
        let Some(&b) = bytes.get(self.pos) else {
            self.tok = Tok::End;
            return Ok(());
        };
        self.tok = match b {
            b'0'..=b'9' => {
                let end = bytes[self.pos..]
                    .iter()
                    .position(|c| !c.is_ascii_digit())
                    .map_or(bytes.len(), |k| self.pos + k);
                let digits = &self.src[self.pos..end];
                self.pos = end;
                Tok::Int(digits.parse().expect("ascii digits"))
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let end = bytes[self.pos..]
                    .iter()
                    .position(|c| !(c.is_ascii_alphanumeric() || *c == b'_'))
                    .map_or(bytes.len(), |k| self.pos + k);
                let word = &self.src[self.pos..end];
                self.pos = end;
                Tok::Ident(word.to_string())
            }
            _ => {
                let t = match b {
                    b'+' => Tok::Plus,
                    b'-' => Tok::Minus,
                    b'*' => Tok::Star,
                    b'^' => Tok::Caret,
                    b'/' => Tok::Slash,
                    b'(' => Tok::LParen,
                    b')' => Tok::RParen,
                    _ => {
                        let ch = self.src[self.pos..].chars().next().expect("non-empty");
                        return Err(ParseError::Syntax {
                            offset: self.pos,
                            expected: "a token".to_string(),
                            found: alloc::format!("character {ch:?}"),
                        });
                    }
                };
                self.pos += 1;
                t
            }
        };
        Ok(())
    }

    fn error<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.tok_start,
            expected: expected.to_string(),
            found: self.tok.to_string(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.tok == tok {
            self.bump()
        } else {
            self.error(what)
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.tok {
                Tok::Plus => {
                    self.bump()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.tok == Tok::Star {
            self.bump()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.tok != Tok::Caret {
            return Ok(base);
        }
        self.bump()?;
        let exponent = match &self.tok {
            Tok::Int(v) => u32::try_from(v.clone()).ok().filter(|&k| k >= 1),
            _ => None,
        };
        match exponent {
            Some(k) => {
                self.bump()?;
                Ok(Expr::Pow(Box::new(base), k))
            }
            None => self.error("positive integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.tok.clone() {
            Tok::Int(v) => {
                self.bump()?;
                Ok(Expr::Const(v))
            }
            Tok::Minus => {
                self.bump()?;
                Ok(Expr::Neg(Box::new(self.atom()?)))
            }
            Tok::LParen => {
                self.bump()?;
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "n" => {
                    self.bump()?;
                    Ok(Expr::Var)
                }
                "floor" | "trunc" | "round" => {
                    self.bump()?;
                    self.expect(Tok::LParen, "'('")?;
                    let inner = self.expr()?;
                    self.expect(Tok::Slash, "'/'")?;
                    let divisor = self.divisor()?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(if name == "round" {
                        Expr::Round(Box::new(inner), divisor)
                    } else {
                        Expr::Floor(Box::new(inner), divisor)
                    })
                }
                _ => self.error("'n', an integer, '(', '-', floor, round or trunc"),
            },
            _ => self.error("'n', an integer, '(', '-', floor, round or trunc"),
        }
    }

    fn divisor(&mut self) -> Result<u64, ParseError> {
        let offset = self.tok_start;
        match &self.tok {
            Tok::End => self.error("positive integer divisor"),
            Tok::Int(v) => {
                let m = u64::try_from(v.clone())
                    .ok()
                    .filter(|&m| m >= 1)
                    .ok_or(ParseError::DivisorNotLiteral { offset })?;
                self.bump()?;
                // `floor(n/4*2)` and friends: the divisor must stand alone
                if !matches!(self.tok, Tok::RParen | Tok::End) {
                    return Err(ParseError::DivisorNotLiteral { offset });
                }
                Ok(m)
            }
            _ => Err(ParseError::DivisorNotLiteral { offset }),
        }
    }
}

/// Parses the closed-form grammar described in the module docs.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    if p.tok != Tok::End {
        return p.error("operator or end of input");
    }
    Ok(e)
}
