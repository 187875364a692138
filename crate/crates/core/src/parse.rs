//! Recursive-descent parser for field elements and polynomials.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' exp)?
//! exp   := ['-'] int | '(' ['-'] int ['/' int] ')'
//! atom  := int | 'X' | 't' | '(' expr ')'
//! ```
//!
//! Rational exponents are only allowed on `t`; `/` needs a divisor free of `X`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::base_fields::{FieldContext, FieldElement};
use crate::error::{Error, Result, Span};
use crate::polynomials::Polynomial;
use crate::value_group::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str, base: usize) -> Result<Vec<(Tok, Span)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((
                    Tok::Int(text[start..i].parse().unwrap()),
                    Span::new(base + start, base + i),
                ));
                continue;
            }
            'X' => Tok::X,
            't' => Tok::T,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                let len = c.len_utf8();
                return Err(Error::parse(
                    format!("unexpected character {c:?}"),
                    Span::new(base + start, base + start + len),
                ));
            }
        };
        i += 1;
        out.push((tok, Span::new(base + start, base + i)));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    end: usize,
    ctx: FieldContext,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn span(&self) -> Span {
        self.toks
            .get(self.pos)
            .map(|(_, s)| *s)
            .unwrap_or(Span::new(self.end, self.end))
    }

    fn bump(&mut self) -> Option<(Tok, Span)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<Span> {
        let span = self.span();
        match self.bump() {
            Some((t, s)) if t == want => Ok(s),
            _ => Err(Error::parse(format!("expected {what}"), span)),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let start = self.span();
                    let d = self.unary()?;
                    let span = Span::new(start.start, self.span().start.max(start.end));
                    if !d.is_constant() {
                        return Err(Error::parse("divisor must not involve X", span));
                    }
                    let c = d.coeff(0);
                    acc = acc
                        .div_scalar(&c)
                        .map_err(|e| Error::parse(e.to_string(), span))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let atom_span = self.span();
        let atom = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(match atom {
                Atom::T => self.t_pow(Rational::from_integer(1.into()), atom_span)?,
                Atom::Poly(p) => p,
            });
        }
        self.pos += 1;
        let exp_span = self.span();
        let exp = self.exponent()?;
        match atom {
            Atom::T => self.t_pow(exp, atom_span),
            Atom::Poly(p) => {
                if !exp.is_integer() {
                    return Err(Error::parse(
                        "rational exponents are only allowed on t",
                        exp_span,
                    ));
                }
                let n = exp
                    .to_integer()
                    .to_i64()
                    .filter(|n| n.abs() <= 1 << 16)
                    .ok_or_else(|| Error::parse("exponent too large", exp_span))?;
                let powered = p.pow(n.unsigned_abs() as u32);
                if n >= 0 {
                    return Ok(powered);
                }
                if !p.is_constant() {
                    return Err(Error::parse(
                        "negative power of a polynomial in X",
                        exp_span,
                    ));
                }
                let inv = powered
                    .coeff(0)
                    .inverse()
                    .map_err(|e| Error::parse(e.to_string(), exp_span))?;
                Ok(Polynomial::constant(inv))
            }
        }
    }

    fn t_pow(&self, exp: Rational, span: Span) -> Result<Polynomial> {
        let one = Rational::from_integer(1.into());
        let m = FieldElement::monomial(self.ctx, one, exp)
            .map_err(|_| Error::parse(format!("t is not defined in context {}", self.ctx), span))?;
        Ok(Polynomial::constant(m))
    }

    fn exponent(&mut self) -> Result<Rational> {
        let span = self.span();
        match self.bump() {
            Some((Tok::Int(n), _)) => Ok(Rational::from_integer(n)),
            Some((Tok::Minus, _)) => match self.bump() {
                Some((Tok::Int(n), _)) => Ok(Rational::from_integer(-n)),
                _ => Err(Error::parse("expected integer exponent", span)),
            },
            Some((Tok::LParen, _)) => {
                let neg = if self.peek() == Some(&Tok::Minus) {
                    self.pos += 1;
                    true
                } else {
                    false
                };
                let num = self.int("exponent numerator")?;
                let den = if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    self.int("exponent denominator")?
                } else {
                    BigInt::from(1)
                };
                let close = self.expect(Tok::RParen, "')'")?;
                if den.is_zero() {
                    return Err(Error::parse(
                        "zero denominator",
                        Span::new(span.start, close.end),
                    ));
                }
                let r = Rational::new(num, den);
                Ok(if neg { -r } else { r })
            }
            _ => Err(Error::parse("expected exponent", span)),
        }
    }

    fn int(&mut self, what: &str) -> Result<BigInt> {
        let span = self.span();
        match self.bump() {
            Some((Tok::Int(n), _)) => Ok(n),
            _ => Err(Error::parse(format!("expected {what}"), span)),
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        let span = self.span();
        match self.bump() {
            Some((Tok::Int(n), _)) => Ok(Atom::Poly(Polynomial::constant(
                FieldElement::from_rational(self.ctx, Rational::from_integer(n)),
            ))),
            Some((Tok::X, _)) => Ok(Atom::Poly(Polynomial::x(self.ctx))),
            Some((Tok::T, _)) => Ok(Atom::T),
            Some((Tok::LParen, _)) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Atom::Poly(inner))
            }
            Some(_) => Err(Error::parse("expected a number, X, t or '('", span)),
            None => Err(Error::parse("unexpected end of input", span)),
        }
    }
}

enum Atom {
    T,
    Poly(Polynomial),
}

pub(crate) fn parse_polynomial_at(
    text: &str,
    ctx: FieldContext,
    base: usize,
) -> Result<Polynomial> {
    let toks = tokenize(text, base)?;
    if toks.is_empty() {
        return Err(Error::parse(
            "empty expression",
            Span::new(base, base + text.len()),
        ));
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: base + text.len(),
        ctx,
    };
    let p = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return Err(Error::parse("unexpected trailing input", parser.span()));
    }
    Ok(p)
}

pub fn parse_polynomial(text: &str, ctx: FieldContext) -> Result<Polynomial> {
    parse_polynomial_at(text, ctx, 0)
}

pub(crate) fn parse_element_at(text: &str, ctx: FieldContext, base: usize) -> Result<FieldElement> {
    let p = parse_polynomial_at(text, ctx, base)?;
    if !p.is_constant() {
        return Err(Error::parse(
            "expected a field element, found X",
            Span::new(base, base + text.len()),
        ));
    }
    Ok(p.coeff(0))
}

pub fn parse_element(text: &str, ctx: FieldContext) -> Result<FieldElement> {
    parse_element_at(text, ctx, 0)
}

/// Comma-separated list of field elements, as used by `--roots`.
pub fn parse_element_list(text: &str, ctx: FieldContext) -> Result<Vec<FieldElement>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        if !part.trim().is_empty() {
            out.push(parse_element_at(part, ctx, offset)?);
        }
        offset += part.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tq() -> FieldContext {
        FieldContext::tadic()
    }

    #[test]
    fn element_syntax() {
        let e = parse_element("t^(1/2) + 2*t^3 - t^-1", tq()).unwrap();
        assert_eq!(e.terms().count(), 3);
        assert_eq!(parse_element("3/4", tq()).unwrap().to_string(), "3/4");
        assert!(parse_element("0", tq()).unwrap().is_zero());
        assert_eq!(
            parse_element("(t + t^2)/t", tq()).unwrap().to_string(),
            "1 + t"
        );
        assert_eq!(
            parse_element("t^(-3/2)", tq()).unwrap().to_string(),
            "t^(-3/2)"
        );
        assert_eq!(parse_element("(2*t)^2", tq()).unwrap().to_string(), "4*t^2");
        assert_eq!(parse_element("t^-2", tq()).unwrap().to_string(), "t^-2");
        assert_eq!(parse_element("(2)^-1", tq()).unwrap().to_string(), "1/2");
    }

    #[test]
    fn polynomial_syntax() {
        let p = parse_polynomial("(1/2)*X^3 + t^(1/2)*X", tq()).unwrap();
        assert_eq!(p.deg(), 3);
        let q = parse_polynomial("X*(X - t^-1)", tq()).unwrap();
        assert_eq!(q.to_string(), "X^2 - t^-1*X");
        assert_eq!(parse_polynomial("-X^2", tq()).unwrap().to_string(), "-X^2");
    }

    #[test]
    fn errors_carry_spans() {
        match parse_polynomial("X^2 + $", tq()) {
            Err(Error::Parse { span, .. }) => assert_eq!(span, Span::new(6, 7)),
            other => panic!("{other:?}"),
        }
        match parse_polynomial("X^(1/2)", tq()) {
            Err(Error::Parse { span, .. }) => assert_eq!(span.start, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("1/X", tq()).is_err());
        assert!(parse_polynomial("X +", tq()).is_err());
        assert!(parse_polynomial("(X", tq()).is_err());
        assert!(parse_polynomial("X X", tq()).is_err());
        assert!(parse_polynomial("", tq()).is_err());
        assert!(parse_element("X", tq()).is_err());
        assert!(parse_element("1/(1+t)", tq()).is_err());
    }

    #[test]
    fn element_lists() {
        let roots = parse_element_list("t^(1/2), -t^(1/2)", tq()).unwrap();
        assert_eq!(roots.len(), 2);
        match parse_element_list("t, $", tq()) {
            Err(Error::Parse { span, .. }) => assert_eq!(span.start, 3),
            other => panic!("{other:?}"),
        }
    }
}
