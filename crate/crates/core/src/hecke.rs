//! The extended affine Hecke algebra over `Q(q)` in the basis `T_w`, its KL generators,
//! bar involution, Kazhdan-Lusztig basis and braid-group images.

use crate::arith::parse::{parse_with, Scalar};
use crate::arith::{Laurent, RatQ};
use crate::error::{parse_err, Error, Result};
use crate::weyl::{format_word, parse_word, AffinePermutation, Gen, Letter};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A finite `Q(q)`-combination of basis symbols `T_w`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    r: usize,
    terms: BTreeMap<AffinePermutation, RatQ>,
}

impl HeckeElement {
    pub fn zero(r: usize) -> Self {
        HeckeElement { r, terms: BTreeMap::new() }
    }

    pub fn one(r: usize) -> Self {
        Self::t(AffinePermutation::identity(r))
    }

    pub fn scalar(r: usize, c: RatQ) -> Self {
        Self::one(r).scale(&c)
    }

    /// The basis symbol `T_w`.
    pub fn t(w: AffinePermutation) -> Self {
        let r = w.rank();
        let mut terms = BTreeMap::new();
        terms.insert(w, RatQ::one());
        HeckeElement { r, terms }
    }

    pub fn t_gen(r: usize, g: Gen) -> Result<Self> {
        Ok(Self::t(AffinePermutation::from_generator(r, g)?))
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffinePermutation, &RatQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &AffinePermutation) -> RatQ {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: AffinePermutation, c: &RatQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &RatQ) -> Self {
        let mut out = Self::zero(self.r);
        if c.is_zero() {
            return out;
        }
        for (w, a) in &self.terms {
            out.terms.insert(w.clone(), a * c);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, a) in &o.terms {
            out.add_term(w.clone(), a);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&RatQ::int(-1)))
    }

    /// `T_w T_v`, multiplying one reduced letter of `v` at a time.
    fn basis_product(w: &AffinePermutation, v: &AffinePermutation) -> BTreeMap<AffinePermutation, RatQ> {
        let r = w.rank();
        let (k, word) = v.normal_form();
        let start = w.compose(&AffinePermutation::rho_pow(r, k)).expect("rank checked");
        let mut cur: BTreeMap<AffinePermutation, RatQ> = BTreeMap::new();
        cur.insert(start, RatQ::one());
        let q2 = RatQ::qpow(1, 2);
        let q2m1 = &q2 - &RatQ::one();
        for i in word {
            let mut next: BTreeMap<AffinePermutation, RatQ> = BTreeMap::new();
            let mut push = |u: AffinePermutation, c: RatQ| {
                let e = next.entry(u).or_default();
                *e = &*e + &c;
            };
            for (u, c) in cur {
                let us = u.mul_simple(i);
                if u.has_right_descent(i) {
                    push(u.clone(), &c * &q2m1);
                    push(us, &c * &q2);
                } else {
                    push(us, c);
                }
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
        }
        cur
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.r != o.r {
            return Err(Error::RankMismatch(self.r, o.r));
        }
        let mut out = Self::zero(self.r);
        for (w, a) in &self.terms {
            for (v, b) in &o.terms {
                let ab = a * b;
                for (u, c) in Self::basis_product(w, v) {
                    out.add_term(u, &(&ab * &c));
                }
            }
        }
        Ok(out)
    }

    /// `T_{s_i}^{-1} = q^-2 T_{s_i} + (q^-2 - 1)`.
    pub fn t_simple_inverse(r: usize, i: usize) -> Result<Self> {
        let s = Self::t_gen(r, Gen::S(i))?;
        let qm2 = RatQ::qpow(1, -2);
        Ok(s.scale(&qm2).add(&Self::scalar(r, &qm2 - &RatQ::one())))
    }

    /// Image of one letter of an extended braid word.
    pub fn letter_image(r: usize, (g, e): Letter) -> Result<Self> {
        match (g, e < 0) {
            (Gen::S(i), false) => Self::t_gen(r, Gen::S(i)),
            (Gen::S(i), true) => Self::t_simple_inverse(r, i),
            (Gen::Rho, false) => Self::t_gen(r, Gen::Rho),
            (Gen::Rho, true) => Ok(Self::t(AffinePermutation::rho_pow(r, -1))),
            (Gen::T(_), _) => Err(Error::InvalidParams("translations are not braid letters".into())),
        }
    }

    /// The image of an extended braid word under `s_i -> T_{s_i}`, `rho -> T_rho`.
    pub fn braid_image(r: usize, word: &[Letter]) -> Result<Self> {
        let mut acc = Self::one(r);
        for &l in word {
            acc = acc.mul(&Self::letter_image(r, l)?)?;
        }
        Ok(acc)
    }

    /// `b_i = q^-1 (1 + T_{s_i})`.
    pub fn kl_gen(r: usize, i: usize) -> Result<Self> {
        let s = Self::t_gen(r, Gen::S(i))?;
        Ok(Self::one(r).add(&s).scale(&RatQ::qpow(1, -1)))
    }

    /// The bar involution: `q -> q^-1`, `T_{s_i} -> T_{s_i}^{-1}`, `T_rho -> T_rho`.
    pub fn bar(&self) -> Self {
        let r = self.r;
        let mut out = Self::zero(r);
        for (w, a) in &self.terms {
            let (k, word) = w.normal_form();
            let mut img = Self::t(AffinePermutation::rho_pow(r, k));
            for i in word {
                img = img.mul(&Self::t_simple_inverse(r, i).expect("valid color")).expect("same rank");
            }
            out = out.add(&img.scale(&a.bar()));
        }
        out
    }

    /// Coefficients in the normalized basis `H_w = q^{-l(w)} T_w`.
    pub fn h_coefficients(&self) -> BTreeMap<AffinePermutation, RatQ> {
        self.terms.iter().map(|(w, a)| (w.clone(), a * &RatQ::qpow(1, w.length() as i32))).collect()
    }
}

/// Memo table for Kazhdan-Lusztig elements of the non-extended part.
#[derive(Default)]
pub struct KlTable {
    memo: HashMap<AffinePermutation, HeckeElement>,
}

impl KlTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// The bar-invariant Laurent polynomial agreeing with `c` in nonnegative degrees.
fn symmetric_part(c: &Laurent) -> Laurent {
    let mut out = Laurent::zero();
    for (e, a) in c.terms() {
        if e > 0 {
            out = &out + &Laurent::mono(a, e);
            out = &out + &Laurent::mono(a, -e);
        } else if e == 0 {
            out = &out + &Laurent::mono(a, 0);
        }
    }
    out
}

/// `T_rho^k C'_{w'}` for `w = rho^k w'`, via the recursion `b_s C'_{sw} = C'_w + lower`.
pub fn kl_basis(w: &AffinePermutation, budget: usize, table: &mut KlTable) -> Result<HeckeElement> {
    let length = w.length();
    if length > budget {
        return Err(Error::BudgetExceeded { length, budget });
    }
    let r = w.rank();
    let k = w.rho_power();
    let wp = AffinePermutation::rho_pow(r, -k).compose(w)?;
    let c = kl_nonextended(&wp, table)?;
    HeckeElement::t(AffinePermutation::rho_pow(r, k)).mul(&c)
}

fn kl_nonextended(w: &AffinePermutation, table: &mut KlTable) -> Result<HeckeElement> {
    if let Some(c) = table.memo.get(w) {
        return Ok(c.clone());
    }
    let r = w.rank();
    let result = if w.is_identity() {
        HeckeElement::one(r)
    } else {
        let s = (1..=r).find(|&i| w.has_left_descent(i)).expect("nonidentity has a descent");
        let lower = w.simple_mul(s);
        let prev = kl_nonextended(&lower, table)?;
        let mut acc = HeckeElement::kl_gen(r, s)?.mul(&prev)?;
        loop {
            let h = acc.h_coefficients();
            let bad = h
                .iter()
                .filter(|(y, _)| *y != w)
                .filter_map(|(y, c)| {
                    let l = c.as_laurent().expect("KL coefficients are Laurent");
                    if l.high() >= 0 && !l.is_zero() {
                        Some((y.length(), y.clone(), l.clone()))
                    } else {
                        None
                    }
                })
                .max_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
            match bad {
                None => break,
                Some((_, y, l)) => {
                    let m = symmetric_part(&l);
                    let cy = kl_nonextended(&y, table)?;
                    acc = acc.sub(&cy.scale(&RatQ::from_laurent(m)));
                }
            }
        }
        acc
    };
    table.memo.insert(w.clone(), result.clone());
    Ok(result)
}

/// Checks that `c` is `H_w + sum_{y != w} p_y H_y` with `p_y` in `q^-1 Z[q^-1]`.
pub fn is_unitriangular(c: &HeckeElement, w: &AffinePermutation) -> bool {
    let k = w.rho_power();
    let r = w.rank();
    let stripped = match HeckeElement::t(AffinePermutation::rho_pow(r, -k)).mul(c) {
        Ok(s) => s,
        Err(_) => return false,
    };
    let wp = AffinePermutation::rho_pow(r, -k).compose(w).expect("same rank");
    let h = stripped.h_coefficients();
    if h.get(&wp).map(|c| c.is_one()) != Some(true) {
        return false;
    }
    h.iter().filter(|(y, _)| **y != wp).all(|(y, c)| {
        y.length() < wp.length() && c.as_laurent().map(|l| l.high() < 0).unwrap_or(false)
    })
}

/// All elements of the non-extended group of length at most `l`.
pub fn elements_up_to_length(r: usize, l: usize) -> Vec<AffinePermutation> {
    let mut seen: std::collections::BTreeSet<AffinePermutation> = std::collections::BTreeSet::new();
    let mut frontier = vec![AffinePermutation::identity(r)];
    seen.insert(AffinePermutation::identity(r));
    for _ in 0..l {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 1..=r {
                if !w.has_right_descent(i) {
                    let ws = w.mul_simple(i);
                    if seen.insert(ws.clone()) {
                        next.push(ws);
                    }
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let (k, word) = w.normal_form();
            let mut letters: Vec<Letter> = Vec::new();
            let rho = if k >= 0 { (Gen::Rho, 1) } else { (Gen::Rho, -1) };
            letters.extend(std::iter::repeat_n(rho, k.unsigned_abs() as usize));
            letters.extend(word.into_iter().map(|i| (Gen::S(i), 1)));
            if c.is_one() {
                write!(f, "T[{}]", format_word(&letters))?;
            } else {
                write!(f, "({})*T[{}]", c, format_word(&letters))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

thread_local! {
    static RANK: std::cell::Cell<usize> = const { std::cell::Cell::new(0) };
}

impl Scalar for HeckeElement {
    fn from_int(n: i64) -> Self {
        HeckeElement::scalar(RANK.with(|c| c.get()), RatQ::int(n))
    }
    fn add(&self, o: &Self) -> Self {
        HeckeElement::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        HeckeElement::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        HeckeElement::mul(self, o).expect("same rank")
    }
    fn div(&self, o: &Self) -> Option<Self> {
        o.as_scalar().filter(|c| !c.is_zero()).map(|c| self.scale(&c.inv()))
    }
    fn inv(&self) -> Option<Self> {
        if let Some(c) = self.as_scalar().filter(|c| !c.is_zero()) {
            return Some(HeckeElement::scalar(self.r, c.inv()));
        }
        if self.terms.len() == 1 {
            let (w, c) = self.terms.iter().next().expect("one term");
            let (k, word) = w.normal_form();
            let mut letters: Vec<Letter> = word.into_iter().rev().map(|i| (Gen::S(i), -1)).collect();
            letters.extend(std::iter::repeat_n((Gen::Rho, if k > 0 { -1 } else { 1 }), k.unsigned_abs() as usize));
            return HeckeElement::braid_image(self.r, &letters).ok().map(|h| h.scale(&c.inv()));
        }
        None
    }
}

impl HeckeElement {
    /// `Some(c)` if this is `c T_e`.
    pub fn as_scalar(&self) -> Option<RatQ> {
        let e = AffinePermutation::identity(self.r);
        match self.terms.len() {
            0 => Some(RatQ::zero()),
            1 => self.terms.get(&e).cloned(),
            _ => None,
        }
    }
}

/// Parses `T[w]`, `b[i]`, `C[w]` and `q` combined with `+ - * / ^`.
pub fn parse_hecke(r: usize, s: &str, table: &mut KlTable) -> Result<HeckeElement> {
    let mut masked = String::with_capacity(s.len());
    let mut atoms: HashMap<usize, HeckeElement> = HashMap::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let is_head = matches!(c, 'T' | 'b' | 'C')
            && bytes.get(i + 1) == Some(&b'[')
            && (i == 0 || !(bytes[i - 1] as char).is_ascii_alphanumeric());
        if !is_head {
            masked.push(c);
            i += 1;
            continue;
        }
        let close = match s[i..].find(']') {
            Some(p) => i + p,
            None => return parse_err(i + 1, "unclosed '['"),
        };
        let inner = &s[i + 2..close];
        let elt = match c {
            'b' => {
                let col = inner.trim().parse::<usize>().ok().filter(|k| (1..=r).contains(k));
                match col {
                    Some(k) => HeckeElement::kl_gen(r, k)?,
                    None => return parse_err(i + 2, format!("invalid color '{}'", inner)),
                }
            }
            _ => {
                let word = parse_word(r, inner).map_err(|e| shift_pos(e, i + 2))?;
                let w = AffinePermutation::from_word(r, &word)?;
                if c == 'T' {
                    HeckeElement::t(w)
                } else {
                    kl_basis(&w, usize::MAX, table)?
                }
            }
        };
        atoms.insert(i, elt);
        masked.push('Z');
        masked.extend(std::iter::repeat_n('z', close - i));
        i = close + 1;
    }
    RANK.with(|c| c.set(r));
    parse_with(&masked, |name, at| {
        if name == "q" {
            return Ok(HeckeElement::scalar(r, RatQ::q()));
        }
        match atoms.get(&at) {
            Some(e) if name.starts_with('Z') => Ok(e.clone()),
            _ => parse_err(at, format!("unknown symbol '{}'", name)),
        }
    })
}

fn shift_pos(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_ratq;

    fn t(r: usize, g: Gen) -> HeckeElement {
        HeckeElement::t_gen(r, g).unwrap()
    }

    fn rq(s: &str) -> RatQ {
        parse_ratq(s).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let r = 3;
        let s = t(r, Gen::S(1));
        let lhs = s.mul(&s).unwrap();
        let rhs = s.scale(&rq("q^2 - 1")).add(&HeckeElement::scalar(r, rq("q^2")));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rho_conjugation() {
        let r = 4;
        for i in 1..=r {
            let rho = t(r, Gen::Rho);
            let rhoinv = HeckeElement::t(AffinePermutation::rho_pow(r, -1));
            let lhs = rho.mul(&t(r, Gen::S(i))).unwrap().mul(&rhoinv).unwrap();
            assert_eq!(lhs, t(r, Gen::S(i % r + 1)));
        }
    }

    #[test]
    fn kl_generator_relations() {
        let r = 5;
        let b = |i| HeckeElement::kl_gen(r, i).unwrap();
        assert_eq!(b(1).mul(&b(1)).unwrap(), b(1).scale(&rq("q + q^-1")));
        assert_eq!(b(1).mul(&b(3)).unwrap(), b(3).mul(&b(1)).unwrap());
        let lhs = b(1).mul(&b(2)).unwrap().mul(&b(1)).unwrap().add(&b(2));
        let rhs = b(2).mul(&b(1)).unwrap().mul(&b(2)).unwrap().add(&b(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bar_examples() {
        let r = 3;
        let s = t(r, Gen::S(2));
        let expect = s.scale(&rq("q^-2")).add(&HeckeElement::scalar(r, rq("q^-2 - 1")));
        assert_eq!(s.bar(), expect);
        let b = HeckeElement::kl_gen(r, 2).unwrap();
        assert_eq!(b.bar(), b);
        assert_eq!(HeckeElement::one(r).bar(), HeckeElement::one(r));
    }

    #[test]
    fn braid_inverse() {
        let r = 3;
        let w = parse_word(r, "s1 s1^-1 rho rho^-1").unwrap();
        assert_eq!(HeckeElement::braid_image(r, &w).unwrap(), HeckeElement::one(r));
    }

    #[test]
    fn kl_small_elements() {
        let r = 5;
        let mut table = KlTable::new();
        let s1 = AffinePermutation::from_generator(r, Gen::S(1)).unwrap();
        assert_eq!(kl_basis(&s1, 4, &mut table).unwrap(), HeckeElement::kl_gen(r, 1).unwrap());
        let w = s1.mul_simple(3);
        let c = kl_basis(&w, 4, &mut table).unwrap();
        let b = HeckeElement::kl_gen(r, 1).unwrap().mul(&HeckeElement::kl_gen(r, 3).unwrap()).unwrap();
        assert_eq!(c, b);
        assert_eq!(c.bar(), c);
        assert!(matches!(kl_basis(&w, 1, &mut table), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn parse_round_trip() {
        let r = 3;
        let mut table = KlTable::new();
        let h = parse_hecke(r, "T[s1 rho] + q^2*T[e]", &mut table).unwrap();
        assert_eq!(parse_hecke(r, &h.to_string(), &mut table).unwrap(), h);
        let c = parse_hecke(r, "C[s1] - b[1]", &mut table).unwrap();
        assert!(c.is_zero());
        assert!(matches!(parse_hecke(r, "T[s9]", &mut table), Err(Error::Parse { pos: 2, .. })));
    }
}
