//! Text syntax for ring elements.
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := power ('*' power)*
//! power   := unary ('^' INT)?
//! unary   := '-' unary | atom
//! atom    := INT ('/' INT)? | GEN | 'u(' expr ',' expr ',' expr ')'
//!          | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! `GEN` is the ring's generator prefix followed by a 1-based index. `u(p,q,r)`
//! only exists in the upper triangular ring and takes rational arguments.

use std::fmt;

use thiserror::Error;

use crate::algebra::Ring;
use crate::ring::{RingDescriptor, RingElement, RingKind};
use crate::Scalar;

const MAX_EXPONENT: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken { found: String, expected: &'static str },
    UnexpectedEnd { expected: &'static str },
    UnknownGenerator(String),
    GeneratorOutOfRange { index: usize, count: usize },
    ConstructorInWrongRing(RingKind),
    NonScalarArgument,
    DivisionByZero,
    ExponentTooLarge(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            Self::UnexpectedToken { found, expected } => {
                write!(f, "expected {expected}, found {found:?}")
            }
            Self::UnexpectedEnd { expected } => write!(f, "expected {expected}, found end of input"),
            Self::UnknownGenerator(s) => write!(f, "unknown generator {s:?}"),
            Self::GeneratorOutOfRange { index, count } => {
                write!(f, "generator index {index} out of range 1..={count}")
            }
            Self::ConstructorInWrongRing(kind) => {
                write!(f, "u(..) is only available in upper-triangular-2, not {}", kind.name())
            }
            Self::NonScalarArgument => write!(f, "u(..) arguments must be rational"),
            Self::DivisionByZero => write!(f, "division by zero"),
            Self::ExponentTooLarge(s) => write!(f, "exponent {s} exceeds {MAX_EXPONENT}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

fn integer<S: Scalar>(digits: &str) -> S {
    let chunk = S::from_int(1_000_000_000);
    let bytes = digits.as_bytes();
    let head = bytes.len() % 9;
    let mut acc = S::zero();
    for (i, part) in std::iter::once(&bytes[..head]).chain(bytes[head..].chunks(9)).enumerate() {
        if part.is_empty() {
            continue;
        }
        let v: i64 = std::str::from_utf8(part).unwrap().parse().unwrap();
        acc = if i == 0 { S::from_int(v) } else { acc * chunk.clone() + S::from_int(v) };
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) | Tok::Ident(s) => f.write_str(s),
            Tok::Sym(c) => write!(f, "{c}"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = src[i..].chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(src[start..i].to_string()), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
        } else if "+-*/^()[],".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(ParseError {
                kind: ParseErrorKind::UnexpectedChar(c),
                offset: i,
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a RingDescriptor,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            kind,
            offset: self.offset(),
        })
    }

    fn unexpected<T>(&self, expected: &'static str) -> Result<T, ParseError> {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken {
                found: t.to_string(),
                expected,
            }),
            None => self.err(ParseErrorKind::UnexpectedEnd { expected }),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, expected: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.unexpected(expected)
        }
    }

    fn expr<S: Scalar>(&mut self) -> Result<RingElement<S>, ParseError> {
        let mut acc = if self.eat('-') {
            self.term()?.negate()
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add_ref(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub_ref(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<S: Scalar>(&mut self) -> Result<RingElement<S>, ParseError> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = acc.mul_ref(&self.power()?);
        }
        Ok(acc)
    }

    fn power<S: Scalar>(&mut self) -> Result<RingElement<S>, ParseError> {
        let base = self.unary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let Some(Tok::Int(digits)) = self.peek().cloned() else {
            return self.unexpected("exponent");
        };
        let e: u32 = match digits.parse() {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return self.err(ParseErrorKind::ExponentTooLarge(digits)),
        };
        self.pos += 1;
        Ok((0..e).fold(RingElement::one(self.ring), |acc, _| acc.mul_ref(&base)))
    }

    fn unary<S: Scalar>(&mut self) -> Result<RingElement<S>, ParseError> {
        if self.eat('-') {
            Ok(self.unary()?.negate())
        } else {
            self.atom()
        }
    }

    fn literal<S: Scalar>(&mut self, digits: &str) -> Result<S, ParseError> {
        self.pos += 1;
        let num = integer::<S>(digits);
        if !self.eat('/') {
            return Ok(num);
        }
        let Some(Tok::Int(den)) = self.peek().cloned() else {
            return self.unexpected("denominator");
        };
        let den = integer::<S>(&den);
        if den.is_zero() {
            return self.err(ParseErrorKind::DivisionByZero);
        }
        self.pos += 1;
        Ok(num / den)
    }

    fn atom<S: Scalar>(&mut self) -> Result<RingElement<S>, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(digits)) => {
                let c = self.literal(&digits)?;
                Ok(RingElement::scalar(self.ring, c))
            }
            Some(Tok::Ident(name)) if name == "u" => self.triangular(),
            Some(Tok::Ident(name)) => {
                let g = self.generator(&name)?;
                self.pos += 1;
                Ok(g)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')', "')'")?;
                Ok(e)
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',', "','")?;
                let b = self.expr()?;
                self.expect(']', "']'")?;
                Ok(a.commutator(&b))
            }
            _ => self.unexpected("operand"),
        }
    }

    fn generator<S: Scalar>(&self, name: &str) -> Result<RingElement<S>, ParseError> {
        let prefix = self.ring.generator_prefix();
        let index = name
            .strip_prefix(prefix)
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .filter(|_| self.ring.kind().has_generators())
            .and_then(|d| d.parse::<usize>().ok());
        let Some(index) = index else {
            return self.err(ParseErrorKind::UnknownGenerator(name.to_string()));
        };
        RingElement::generator(self.ring, index).or_else(|_| {
            self.err(ParseErrorKind::GeneratorOutOfRange {
                index,
                count: self.ring.generator_count(),
            })
        })
    }

    fn triangular<S: Scalar>(&mut self) -> Result<RingElement<S>, ParseError> {
        if self.ring.kind() != RingKind::UpperTriangular2 {
            return self.err(ParseErrorKind::ConstructorInWrongRing(self.ring.kind()));
        }
        self.pos += 1;
        self.expect('(', "'('")?;
        let scalars = RingDescriptor::rational();
        let mut parts: Vec<S> = Vec::with_capacity(3);
        for i in 0..3 {
            if i > 0 {
                self.expect(',', "','")?;
            }
            let start = self.offset();
            let mut inner = Parser {
                ring: &scalars,
                toks: std::mem::take(&mut self.toks),
                pos: self.pos,
                end: self.end,
            };
            let arg = inner.expr::<S>();
            self.toks = inner.toks;
            self.pos = inner.pos;
            match arg?.as_scalar() {
                Some(c) => parts.push(c),
                None => {
                    return Err(ParseError {
                        kind: ParseErrorKind::NonScalarArgument,
                        offset: start,
                    })
                }
            }
        }
        self.expect(')', "')'")?;
        let [p, q, r]: [S; 3] = parts.try_into().ok().unwrap();
        Ok(RingElement::triangular(self.ring, p, q, r).expect("ring checked above"))
    }
}

/// Parses `src` as an element of `ring`.
pub fn parse_element<S: Scalar>(ring: &RingDescriptor, src: &str) -> Result<RingElement<S>, ParseError> {
    let mut p = Parser {
        ring,
        toks: lex(src)?,
        pos: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.unexpected("operator or end of input");
    }
    Ok(e)
}
