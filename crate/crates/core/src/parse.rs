//! Text syntax for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | 'y' | 'z' | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants, which is what lets
//! printed rational coefficients (`3/4*x^2`) parse back.

use thiserror::Error;

use crate::mono::Var;
use crate::poly::Poly;
use crate::rat::Rat;

const MAX_EXPONENT: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected character '{ch}' at column {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unexpected {found} at column {pos}")]
    UnexpectedToken { found: String, pos: usize },
    #[error("unexpected end of input at column {pos}")]
    UnexpectedEnd { pos: usize },
    #[error("exponent at column {pos} is not a non-negative integer literal")]
    NonIntegerExponent { pos: usize },
    #[error("exponent {value} at column {pos} exceeds the limit {MAX_EXPONENT}")]
    ExponentTooLarge { value: String, pos: usize },
    #[error("division by zero at column {pos}")]
    DivisionByZero { pos: usize },
    #[error("division by a non-constant polynomial at column {pos}")]
    NonConstantDivisor { pos: usize },
}

impl ParseError {
    /// 1-based column of the error, when there is one.
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::Empty => None,
            ParseError::UnexpectedChar { pos, .. }
            | ParseError::UnexpectedToken { pos, .. }
            | ParseError::UnexpectedEnd { pos }
            | ParseError::NonIntegerExponent { pos }
            | ParseError::ExponentTooLarge { pos, .. }
            | ParseError::DivisionByZero { pos }
            | ParseError::NonConstantDivisor { pos } => Some(*pos),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("number {s}"),
            Tok::Var(v) => format!("variable '{}'", v.name()),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(chars[start..i].iter().collect()), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => match Var::from_char(c) {
                Some(v) => Tok::Var(v),
                None => return Err(ParseError::UnexpectedChar { ch: c, pos }),
            },
        };
        out.push((tok, pos));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end_pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end_pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    /// Parses a sum and records where each top-level summand starts.
    fn expr(&mut self, summands: Option<&mut Vec<(usize, Poly)>>) -> Result<Poly, ParseError> {
        let mut local = Vec::new();
        let start = self.pos();
        let mut acc = self.term()?;
        local.push((start, acc.clone()));
        loop {
            let negate = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            let at = self.pos();
            self.bump();
            let rhs = self.term()?;
            let rhs = if negate { -rhs } else { rhs };
            acc = &acc + &rhs;
            local.push((at, rhs));
        }
        if let Some(s) = summands {
            *s = local;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(ParseError::DivisionByZero { pos });
                    }
                    if d.degree() != Some(0) {
                        return Err(ParseError::NonConstantDivisor { pos });
                    }
                    acc = acc.scale(&d.terms()[0].1.recip());
                }
                Some(Tok::Int(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(s)) => {
                let e: u32 = match s.parse() {
                    Ok(e) if e <= MAX_EXPONENT => e,
                    _ => return Err(ParseError::ExponentTooLarge { value: s, pos }),
                };
                Ok(base.pow(e))
            }
            None => Err(ParseError::UnexpectedEnd { pos }),
            Some(_) => Err(ParseError::NonIntegerExponent { pos }),
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(s)) => {
                let n: num_bigint::BigInt = s.parse().expect("digits");
                Ok(Poly::constant(Rat::from_bigint(n)))
            }
            Some(Tok::Var(v)) => Ok(Poly::var(v)),
            Some(Tok::LParen) => {
                let inner = self.expr(None)?;
                let close = self.pos();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    Some(t) => Err(ParseError::UnexpectedToken {
                        found: t.describe(),
                        pos: close,
                    }),
                    None => Err(ParseError::UnexpectedEnd { pos: close }),
                }
            }
            Some(t) => Err(ParseError::UnexpectedToken {
                found: t.describe(),
                pos,
            }),
            None => Err(ParseError::UnexpectedEnd { pos }),
        }
    }
}

/// A parsed polynomial together with its top-level summands and the column
/// at which each starts, for pointing at offending input.
#[derive(Debug, Clone)]
pub struct ParsedPoly {
    pub poly: Poly,
    pub summands: Vec<(usize, Poly)>,
}

impl ParsedPoly {
    /// Column of the first summand whose degree disagrees with the total
    /// degree, if the polynomial is not homogeneous.
    pub fn inhomogeneity_position(&self) -> Option<usize> {
        if self.poly.is_homogeneous() {
            return None;
        }
        let d = self.poly.degree()?;
        self.summands
            .iter()
            .find(|(_, s)| !s.is_homogeneous() || s.degree().is_some_and(|k| k != d))
            .map(|(p, _)| *p)
            .or(Some(1))
    }
}

pub fn parse_poly_spanned(text: &str) -> Result<ParsedPoly, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut p = Parser {
        toks,
        at: 0,
        end_pos: text.chars().count() + 1,
    };
    let mut summands = Vec::new();
    let poly = p.expr(Some(&mut summands))?;
    if let Some(t) = p.peek().cloned() {
        return Err(ParseError::UnexpectedToken {
            found: t.describe(),
            pos: p.pos(),
        });
    }
    Ok(ParsedPoly { poly, summands })
}

/// Parses and expands a polynomial into canonical form.
pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    parse_poly_spanned(text).map(|p| p.poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mono::Mono;

    #[test]
    fn nodal_cubic() {
        let f = parse_poly("xyz+x^3+y^3").unwrap();
        assert!(f.is_homogeneous());
        assert_eq!(f.degree(), Some(3));
        assert_eq!(f.len(), 3);
        assert_eq!(f.coeff(&Mono::new(1, 1, 1)), Rat::one());
    }

    #[test]
    fn zero_has_no_degree() {
        let z = parse_poly("0").unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn double_folium_expands() {
        let f = parse_poly("(x^2+y^2)^2-4xy^2z").unwrap();
        let g = parse_poly("x^4+2x^2y^2+y^4-4xy^2z").unwrap();
        assert_eq!(f, g);
        assert_eq!(f.to_string(), "x^4+2x^2y^2+y^4-4xy^2z");
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_poly("-x^2").unwrap(), -parse_poly("x*x").unwrap());
        assert_eq!(parse_poly("2x^2").unwrap(), parse_poly("2*(x^2)").unwrap());
        assert_eq!(parse_poly("(x+y)(x-y)").unwrap(), parse_poly("x^2-y^2").unwrap());
        assert_eq!(parse_poly("x*-y").unwrap(), parse_poly("-xy").unwrap());
        assert_eq!(parse_poly("3/4*x").unwrap().terms()[0].1, Rat::new(3, 4));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_poly(""), Err(ParseError::Empty));
        assert_eq!(parse_poly("   "), Err(ParseError::Empty));
        assert_eq!(
            parse_poly("x+w"),
            Err(ParseError::UnexpectedChar { ch: 'w', pos: 3 })
        );
        assert_eq!(parse_poly("x^y"), Err(ParseError::NonIntegerExponent { pos: 3 }));
        assert_eq!(parse_poly("x^-1"), Err(ParseError::NonIntegerExponent { pos: 3 }));
        assert_eq!(parse_poly("(x+y"), Err(ParseError::UnexpectedEnd { pos: 5 }));
        assert!(matches!(
            parse_poly("x+)"),
            Err(ParseError::UnexpectedToken { pos: 3, .. })
        ));
        assert_eq!(parse_poly("x/y"), Err(ParseError::NonConstantDivisor { pos: 3 }));
        assert_eq!(parse_poly("x/0"), Err(ParseError::DivisionByZero { pos: 3 }));
        assert!(matches!(
            parse_poly("x^999"),
            Err(ParseError::ExponentTooLarge { .. })
        ));
    }

    #[test]
    fn inhomogeneity_is_located() {
        let p = parse_poly_spanned("x^3+y^3+ z^2").unwrap();
        assert_eq!(p.inhomogeneity_position(), Some(8));
        let q = parse_poly_spanned("x^3+y^3").unwrap();
        assert_eq!(q.inhomogeneity_position(), None);
    }
}
