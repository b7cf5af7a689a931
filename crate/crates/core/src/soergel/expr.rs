//! Morphism expressions built from generators, and their evaluation.

use super::element::{format_letters, parse_letters, BimElement, SoergelObject, Strand};
use super::gens::{apply_gen, Generator};
use crate::arith::Rat;
use crate::error::{parse_err, Error, Result};
use std::fmt;

/// Syntax tree of a morphism. `VComp(a, b)` is `a` after `b`; `HComp(a, b)` is `a` to the left of `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismExpr {
    Gen(Generator),
    Id(Vec<Strand>),
    VComp(Box<MorphismExpr>, Box<MorphismExpr>),
    HComp(Box<MorphismExpr>, Box<MorphismExpr>),
    Lin(Vec<(Rat, MorphismExpr)>),
    Zero(Vec<Strand>, Vec<Strand>),
}

use MorphismExpr as M;

impl From<Generator> for MorphismExpr {
    fn from(g: Generator) -> Self {
        M::Gen(g)
    }
}

impl MorphismExpr {
    pub fn id(letters: &[Strand]) -> Self {
        M::Id(letters.to_vec())
    }

    pub fn vcomp(a: impl Into<MorphismExpr>, b: impl Into<MorphismExpr>) -> Self {
        M::VComp(Box::new(a.into()), Box::new(b.into()))
    }

    pub fn hcomp(a: impl Into<MorphismExpr>, b: impl Into<MorphismExpr>) -> Self {
        M::HComp(Box::new(a.into()), Box::new(b.into()))
    }

    /// `ms[0] o ms[1] o ... o ms[n-1]`.
    pub fn vchain(ms: Vec<MorphismExpr>) -> Self {
        let mut it = ms.into_iter().rev();
        let first = it.next().expect("empty composition");
        it.fold(first, |acc, m| M::vcomp(m, acc))
    }

    /// `ms[0] (x) ms[1] (x) ... (x) ms[n-1]`.
    pub fn hchain(ms: Vec<MorphismExpr>) -> Self {
        let mut it = ms.into_iter();
        let first = it.next().expect("empty tensor product");
        it.fold(first, M::hcomp)
    }

    pub fn lin(terms: Vec<(Rat, MorphismExpr)>) -> Self {
        M::Lin(terms)
    }

    pub fn scaled(self, c: Rat) -> Self {
        M::Lin(vec![(c, self)])
    }

    pub fn plus(self, o: MorphismExpr) -> Self {
        M::Lin(vec![(Rat::one(), self), (Rat::one(), o)])
    }

    pub fn minus(self, o: MorphismExpr) -> Self {
        M::Lin(vec![(Rat::one(), self), (Rat::int(-1), o)])
    }

    pub fn source(&self, r: usize) -> Result<Vec<Strand>> {
        Ok(self.signature(r)?.0)
    }

    pub fn target(&self, r: usize) -> Result<Vec<Strand>> {
        Ok(self.signature(r)?.1)
    }

    /// Source and target words, checking every composition.
    pub fn signature(&self, r: usize) -> Result<(Vec<Strand>, Vec<Strand>)> {
        match self {
            M::Gen(g) => {
                g.validate(r)?;
                Ok((g.source(r), g.target(r)))
            }
            M::Id(l) => Ok((l.clone(), l.clone())),
            M::Zero(s, t) => Ok((s.clone(), t.clone())),
            M::VComp(a, b) => {
                let (sa, ta) = a.signature(r)?;
                let (sb, tb) = b.signature(r)?;
                if tb != sa {
                    return Err(Error::Mismatch(format!(
                        "composition {} after {}: {} vs {}",
                        a,
                        b,
                        format_letters(&tb),
                        format_letters(&sa)
                    )));
                }
                Ok((sb, ta))
            }
            M::HComp(a, b) => {
                let (mut sa, mut ta) = a.signature(r)?;
                let (sb, tb) = b.signature(r)?;
                sa.extend(sb);
                ta.extend(tb);
                Ok((sa, ta))
            }
            M::Lin(terms) => {
                let mut sig: Option<(Vec<Strand>, Vec<Strand>)> = None;
                for (_, m) in terms {
                    let s = m.signature(r)?;
                    match &sig {
                        None => sig = Some(s),
                        Some(t) if *t != s => {
                            return Err(Error::Mismatch(format!("summands of {} have different types", self)))
                        }
                        _ => {}
                    }
                }
                sig.ok_or_else(|| Error::Mismatch("empty linear combination".into()))
            }
        }
    }

    /// Degree, when all summands agree.
    pub fn degree(&self) -> Option<i64> {
        match self {
            M::Gen(g) => Some(g.degree()),
            M::Id(_) => Some(0),
            M::Zero(..) => None,
            M::VComp(a, b) | M::HComp(a, b) => Some(a.degree()? + b.degree()?),
            M::Lin(terms) => {
                let mut d = None;
                for (c, m) in terms {
                    if c.is_zero() {
                        continue;
                    }
                    let e = m.degree()?;
                    if d.is_some_and(|x| x != e) {
                        return None;
                    }
                    d = Some(e);
                }
                d
            }
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let m = p.expr()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return parse_err(p.pos, "trailing input");
        }
        Ok(m)
    }
}

impl fmt::Display for MorphismExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            M::Gen(g) => write!(f, "{}", g),
            M::Id(l) => write!(f, "id({})", format_letters(l)),
            M::Zero(s, t) => write!(f, "zero({};{})", format_letters(s), format_letters(t)),
            M::VComp(a, b) => write!(f, "vcomp({},{})", a, b),
            M::HComp(a, b) => write!(f, "hcomp({},{})", a, b),
            M::Lin(terms) => {
                for (k, (c, m)) in terms.iter().enumerate() {
                    match (k, c.is_negative()) {
                        (0, true) => write!(f, "-")?,
                        (0, false) => {}
                        (_, true) => write!(f, " - ")?,
                        (_, false) => write!(f, " + ")?,
                    }
                    write!(f, "{}*{}", c.abs(), m)?;
                }
                Ok(())
            }
        }
    }
}

/// Evaluates `m` on `e`, acting on the letters of `e` starting at `pos`.
pub fn apply_at(r: usize, m: &MorphismExpr, pos: usize, e: &BimElement) -> Result<BimElement> {
    match m {
        M::Gen(g) => apply_gen(r, g, pos, e),
        M::Id(l) => {
            check_letters(l, pos, e)?;
            Ok(e.clone())
        }
        M::Zero(s, t) => {
            check_letters(s, pos, e)?;
            Ok(BimElement::zero(r, replaced(&e.object, pos, s.len(), t)))
        }
        M::VComp(a, b) => {
            let mid = apply_at(r, b, pos, e)?;
            apply_at(r, a, pos, &mid)
        }
        M::HComp(a, b) => {
            let la = a.source(r)?.len();
            let mid = apply_at(r, b, pos + la, e)?;
            apply_at(r, a, pos, &mid)
        }
        M::Lin(_) => {
            let (s, t) = m.signature(r)?;
            check_letters(&s, pos, e)?;
            let mut out = BimElement::zero(r, replaced(&e.object, pos, s.len(), &t));
            if let M::Lin(terms) = m {
                for (c, t) in terms {
                    if !c.is_zero() {
                        out = out.add(&apply_at(r, t, pos, e)?.scale(*c));
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Evaluates `m` on an element of its source word.
pub fn apply_morphism(r: usize, m: &MorphismExpr, e: &BimElement) -> Result<BimElement> {
    let src = m.source(r)?;
    if src != e.object.letters {
        return Err(Error::Mismatch(format!(
            "morphism source {} does not match object {}",
            format_letters(&src),
            e.object
        )));
    }
    apply_at(r, m, 0, e)
}

fn check_letters(l: &[Strand], pos: usize, e: &BimElement) -> Result<()> {
    let letters = &e.object.letters;
    if pos + l.len() > letters.len() || letters[pos..pos + l.len()] != *l {
        return Err(Error::Mismatch(format!(
            "expected {} at position {} of {}",
            format_letters(l),
            pos,
            e.object
        )));
    }
    Ok(())
}

fn replaced(o: &SoergelObject, pos: usize, len: usize, t: &[Strand]) -> SoergelObject {
    let mut letters = o.letters[..pos].to_vec();
    letters.extend_from_slice(t);
    letters.extend_from_slice(&o.letters[pos + len..]);
    SoergelObject::new(letters, o.shift)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            parse_err(self.pos, format!("expected '{}'", c as char))
        }
    }

    fn expr(&mut self) -> Result<MorphismExpr> {
        let mut terms = Vec::new();
        let mut sign = Rat::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = Rat::int(-1);
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let (c, m) = self.term()?;
            terms.push((sign * c, m));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = Rat::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = Rat::int(-1);
                }
                _ => break,
            }
        }
        if terms.len() == 1 && terms[0].0.is_one() {
            Ok(terms.pop().unwrap().1)
        } else {
            Ok(M::Lin(terms))
        }
    }

    fn number(&mut self) -> Result<i128> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| parse_err(start, "expected a number"))
    }

    fn term(&mut self) -> Result<(Rat, MorphismExpr)> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.number()?;
            let mut c = Rat::new(n, 1);
            if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let d = self.number()?;
                if d == 0 {
                    return parse_err(self.pos, "zero denominator");
                }
                c = Rat::new(n, d);
            }
            self.expect(b'*')?;
            return Ok((c, self.atom()?));
        }
        Ok((Rat::one(), self.atom()?))
    }

    fn raw_until_close(&mut self) -> Result<String> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos] != b')' {
            self.pos += 1;
        }
        if self.pos == self.s.len() {
            return parse_err(start, "unclosed '('");
        }
        let raw = std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_string();
        self.pos += 1;
        Ok(raw)
    }

    fn color(&mut self) -> Result<usize> {
        self.skip_ws();
        let n = self.number()?;
        usize::try_from(n).or_else(|_| parse_err(self.pos, "color out of range"))
    }

    fn atom(&mut self) -> Result<MorphismExpr> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let m = self.expr()?;
            self.expect(b')')?;
            return Ok(m);
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_string();
        if name == "cap" || name == "cup" {
            let sign = self.s.get(self.pos).copied();
            self.pos += 1;
            return match (name.as_str(), sign) {
                ("cap", Some(b'+')) => Ok(M::Gen(Generator::CapPlus)),
                ("cap", Some(b'-')) => Ok(M::Gen(Generator::CapMinus)),
                ("cup", Some(b'+')) => Ok(M::Gen(Generator::CupPlus)),
                ("cup", Some(b'-')) => Ok(M::Gen(Generator::CupMinus)),
                _ => parse_err(start, format!("{} needs a sign", name)),
            };
        }
        self.expect(b'(')?;
        let g = |g: Generator| Ok(M::Gen(g));
        let out = match name.as_str() {
            "vcomp" | "hcomp" => {
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b')')?;
                return Ok(if name == "vcomp" { M::vcomp(a, b) } else { M::hcomp(a, b) });
            }
            "id" => {
                let raw = self.raw_until_close()?;
                return Ok(M::Id(parse_letters(usize::MAX, &raw)?));
            }
            "zero" => {
                let raw = self.raw_until_close()?;
                let (s, t) = raw.split_once(';').ok_or(Error::Parse { pos: start, msg: "zero(src;tgt)".into() })?;
                return Ok(M::Zero(parse_letters(usize::MAX, s)?, parse_letters(usize::MAX, t)?));
            }
            "box" => {
                if self.peek() == Some(b'y') {
                    self.pos += 1;
                    g(Generator::BoxY)
                } else {
                    g(Generator::BoxX(self.color()?))
                }
            }
            "v4" | "v6" => {
                let i = self.color()?;
                self.expect(b',')?;
                let j = self.color()?;
                g(if name == "v4" { Generator::V4(i, j) } else { Generator::V6(i, j) })
            }
            "enddot" => g(Generator::EndDot(self.color()?)),
            "startdot" => g(Generator::StartDot(self.color()?)),
            "merge" => g(Generator::Merge(self.color()?)),
            "split" => g(Generator::Split(self.color()?)),
            "m4ur" => g(Generator::M4Ur(self.color()?)),
            "m4ul" => g(Generator::M4Ul(self.color()?)),
            "m4dr" => g(Generator::M4Dr(self.color()?)),
            "m4dl" => g(Generator::M4Dl(self.color()?)),
            _ => return Err(Error::Unknown { kind: "generator", name }),
        };
        self.expect(b')')?;
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{root, Poly};

    #[test]
    fn parse_roundtrip() {
        for s in [
            "vcomp(enddot(2),startdot(2))",
            "hcomp(id(1,+),cap-)",
            "1*box(y) - 1/2*v4(1,3)",
            "zero(1,1;)",
            "vcomp(m4ur(3),hcomp(cup+,box(2)))",
        ] {
            let m = MorphismExpr::parse(s).unwrap();
            assert_eq!(MorphismExpr::parse(&m.to_string()).unwrap(), m);
        }
        assert!(MorphismExpr::parse("frob(1)").is_err());
        assert!(MorphismExpr::parse("vcomp(cap+").is_err());
    }

    #[test]
    fn dot_dot_on_last_color() {
        let r = 3;
        let m = MorphismExpr::parse("vcomp(enddot(3), startdot(3))").unwrap();
        let e = apply_morphism(r, &m, &BimElement::one(r, SoergelObject::unit())).unwrap();
        let want = &(&Poly::x(r, 1) - &Poly::x(r, 3)) - &Poly::y(r);
        assert_eq!(root(r, 3), want);
        assert_eq!(e.coeff(&[]), want);
    }

    #[test]
    fn composition_mismatch() {
        let m = MorphismExpr::parse("vcomp(enddot(1), startdot(2))").unwrap();
        assert!(m.source(3).is_err());
    }
}
