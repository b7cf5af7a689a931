//! Textual syntax for polynomials in `y, x1..xr` and for elements of `Q(q)`.
//!
//! Grammar: `expr := term (('+' | '-') term)*`, `term := unary (('*' | '/') unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' '-'? int)?`,
//! `atom := int | ident | '(' expr ')'`.

use super::{Poly, RatQ};
use crate::error::{parse_err, Result};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Int(i64),
    Ident(String),
    Sym(char),
}

pub(crate) fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = b[st..i].iter().collect();
            let v = t.parse::<i64>().or_else(|_| parse_err(st, "integer literal too large"))?;
            out.push((st, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == '_') {
                i += 1;
            }
            out.push((st, Tok::Ident(b[st..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return parse_err(i, format!("unexpected character '{}'", c));
        }
    }
    Ok(out)
}

/// Operations needed to evaluate an expression.
pub trait Scalar: Clone {
    fn from_int(n: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Option<Self>;
    fn inv(&self) -> Option<Self>;
}

struct Parser<'a, T, F> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    var: F,
    _m: std::marker::PhantomData<T>,
}

impl<'a, T: Scalar, F: Fn(&str, usize) -> Result<T>> Parser<'a, T, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<T> {
        let mut acc = self.term()?;
        while let Some(Tok::Sym(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<T> {
        let mut acc = self.unary()?;
        while let Some(Tok::Sym(c @ ('*' | '/'))) = self.peek().cloned() {
            let at = self.here();
            self.pos += 1;
            let t = self.unary()?;
            acc = if c == '*' {
                acc.mul(&t)
            } else {
                match acc.div(&t) {
                    Some(v) => v,
                    None => return parse_err(at, "division is not exact"),
                }
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<T> {
        if let Some(Tok::Sym('-')) = self.peek() {
            self.pos += 1;
            let v = self.unary()?;
            return Ok(T::from_int(0).sub(&v));
        }
        self.power()
    }

    fn power(&mut self) -> Result<T> {
        let base = self.atom()?;
        if let Some(Tok::Sym('^')) = self.peek() {
            self.pos += 1;
            let at = self.here();
            let neg = if let Some(Tok::Sym('-')) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = match self.peek() {
                Some(Tok::Int(e)) => *e,
                _ => return parse_err(at, "expected integer exponent"),
            };
            self.pos += 1;
            let mut acc = T::from_int(1);
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            if neg {
                return match acc.inv() {
                    Some(v) => Ok(v),
                    None => parse_err(at, "negative power is not allowed here"),
                };
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<T> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(T::from_int(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                (self.var)(&name, at)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                match self.peek() {
                    Some(Tok::Sym(')')) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => parse_err(self.here(), "expected ')'"),
                }
            }
            Some(t) => parse_err(at, format!("unexpected token {:?}", t)),
            None => parse_err(at, "unexpected end of input"),
        }
    }
}

/// Parses `s` as an expression, resolving identifiers with `var`.
pub fn parse_with<T: Scalar>(s: &str, var: impl Fn(&str, usize) -> Result<T>) -> Result<T> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks: &toks, pos: 0, end: s.len(), var, _m: std::marker::PhantomData };
    let v = p.expr()?;
    if p.pos != toks.len() {
        return parse_err(p.here(), "trailing input");
    }
    Ok(v)
}

/// Wrapper giving `Poly` a fixed ring for `Scalar::from_int`.
#[derive(Clone)]
struct RPoly(Poly, usize);

thread_local! {
    static RANK: std::cell::Cell<usize> = const { std::cell::Cell::new(0) };
}

impl Scalar for RPoly {
    fn from_int(n: i64) -> Self {
        let r = RANK.with(|c| c.get());
        RPoly(Poly::int(r + 1, n), r)
    }
    fn add(&self, o: &Self) -> Self {
        RPoly(&self.0 + &o.0, self.1)
    }
    fn sub(&self, o: &Self) -> Self {
        RPoly(&self.0 - &o.0, self.1)
    }
    fn mul(&self, o: &Self) -> Self {
        RPoly(&self.0 * &o.0, self.1)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if o.0.is_constant() && !o.0.is_zero() {
            Some(RPoly(self.0.scale(o.0.constant_term().inv()), self.1))
        } else {
            self.0.div_exact(&o.0).map(|p| RPoly(p, self.1))
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_constant() && !self.0.is_zero() {
            Some(RPoly(Poly::constant(self.1 + 1, self.0.constant_term().inv()), self.1))
        } else {
            None
        }
    }
}

/// Parses a polynomial in `y, x1..xr`.
pub fn parse_poly(r: usize, s: &str) -> Result<Poly> {
    RANK.with(|c| c.set(r));
    let v = parse_with(s, |name, at| {
        if name == "y" {
            return Ok(RPoly(Poly::y(r), r));
        }
        if let Some(ix) = name.strip_prefix('x') {
            if let Ok(i) = ix.parse::<usize>() {
                if (1..=r).contains(&i) {
                    return Ok(RPoly(Poly::x(r, i), r));
                }
            }
        }
        parse_err(at, format!("unknown variable '{}'", name))
    })?;
    Ok(v.0)
}

impl Scalar for RatQ {
    fn from_int(n: i64) -> Self {
        RatQ::int(n)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            None
        } else {
            Some(self / o)
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatQ::inv(self))
        }
    }
}

/// Parses an element of `Q(q)`.
pub fn parse_ratq(s: &str) -> Result<RatQ> {
    parse_with(s, |name, at| if name == "q" { Ok(RatQ::q()) } else { parse_err(at, format!("unknown variable '{}'", name)) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip() {
        let r = 3;
        for s in ["x1^2*y - 3/2*x2 + 1", "0", "-x3", "y^3 + 2*x1*x2*x3"] {
            let p = parse_poly(r, s).unwrap();
            assert_eq!(parse_poly(r, &p.to_string()).unwrap(), p);
        }
        assert_eq!(parse_poly(r, "(x1 + x2)*(x1 - x2)").unwrap(), parse_poly(r, "x1^2 - x2^2").unwrap());
    }

    #[test]
    fn ratq_round_trip() {
        for s in ["q + q^-1", "(q^2 - 1)/(q + 1)", "1/(1 + q)", "-2*q^-3 + 5"] {
            let v = parse_ratq(s).unwrap();
            assert_eq!(parse_ratq(&v.to_string()).unwrap(), v);
        }
        assert_eq!(parse_ratq("(q^2 - 1)/(q + 1)").unwrap(), parse_ratq("q - 1").unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly(2, "x1 + x7") {
            Err(crate::error::Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{:?}", other),
        }
    }
}
