//! Tensor words of `B_i`, `B_rho`, `B_rho^{-1}` and their elements in left-module coordinates.
//!
//! A word with unoriented letters `c_1..c_m` splits into regions `0..=m`: region `s` starts right
//! after the `s`-th unoriented letter and may contain oriented letters. An element is stored as
//! `sum coef * (1 (x) t_1 (x) ... (x) t_m)` where `t_s in {1, b_{c_s}}` sits at the left end of
//! region `s`.

use crate::arith::{basis_b, rho_pow, split_invariant, Poly, Rat};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// One letter of a Soergel object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strand {
    Color(usize),
    Plus,
    Minus,
}

impl Strand {
    pub fn twist(self) -> i64 {
        match self {
            Strand::Plus => 1,
            Strand::Minus => -1,
            Strand::Color(_) => 0,
        }
    }

    pub fn color(self) -> Option<usize> {
        match self {
            Strand::Color(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strand::Color(i) => write!(f, "{}", i),
            Strand::Plus => write!(f, "+"),
            Strand::Minus => write!(f, "-"),
        }
    }
}

/// Formats a letter sequence as `1,+,3`.
pub fn format_letters(letters: &[Strand]) -> String {
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
}

/// Parses `1,+,3`; the empty string is the empty word.
pub fn parse_letters(r: usize, s: &str) -> Result<Vec<Strand>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| match t.trim() {
            "+" => Ok(Strand::Plus),
            "-" => Ok(Strand::Minus),
            t => {
                let i: usize = t.parse().map_err(|_| Error::Unknown { kind: "letter", name: t.to_string() })?;
                if (1..=r).contains(&i) {
                    Ok(Strand::Color(i))
                } else {
                    Err(Error::IndexOutOfRange { index: i as i64, max: r as i64 })
                }
            }
        })
        .collect()
}

/// A graded tensor word: letter `i` stands for `B_i{-1}`, `+` for `B_rho`, `-` for `B_rho^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SoergelObject {
    pub letters: Vec<Strand>,
    pub shift: i64,
}

impl SoergelObject {
    pub fn new(letters: Vec<Strand>, shift: i64) -> Self {
        SoergelObject { letters, shift }
    }

    pub fn unit() -> Self {
        SoergelObject::new(Vec::new(), 0)
    }

    pub fn parse(r: usize, s: &str) -> Result<Self> {
        Ok(SoergelObject::new(parse_letters(r, s)?, 0))
    }

    /// `(#+) - (#-)`.
    pub fn net_twist(&self) -> i64 {
        self.letters.iter().map(|l| l.twist()).sum()
    }

    /// Colors of the unoriented letters, in order.
    pub fn colors(&self) -> Vec<usize> {
        self.letters.iter().filter_map(|l| l.color()).collect()
    }

    pub fn num_unoriented(&self) -> usize {
        self.colors().len()
    }

    /// Net twist of each region `0..=m`.
    pub fn region_twists(&self) -> Vec<i64> {
        let mut out = vec![0];
        for l in &self.letters {
            match l {
                Strand::Color(_) => out.push(0),
                o => *out.last_mut().unwrap() += o.twist(),
            }
        }
        out
    }

    /// Concatenation, adding shifts.
    pub fn concat(&self, o: &SoergelObject) -> SoergelObject {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&o.letters);
        SoergelObject::new(letters, self.shift + o.shift)
    }

    pub fn shifted(&self, s: i64) -> SoergelObject {
        SoergelObject::new(self.letters.clone(), self.shift + s)
    }

    /// All basis tags, in lexicographic order.
    pub fn tags(&self) -> Vec<Vec<bool>> {
        let m = self.num_unoriented();
        (0..1usize << m).map(|bits| (0..m).map(|k| bits >> (m - 1 - k) & 1 == 1).collect()).collect()
    }
}

impl fmt::Display for SoergelObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "R")?;
        } else {
            write!(f, "{}", format_letters(&self.letters))?;
        }
        if self.shift != 0 {
            write!(f, "{{{}}}", self.shift)?;
        }
        Ok(())
    }
}

/// Formats a basis tag as `[b,1]`.
pub fn format_tag(tag: &[bool]) -> String {
    format!("[{}]", tag.iter().map(|&b| if b { "b" } else { "1" }).collect::<Vec<_>>().join(","))
}

/// An element of a Soergel object in canonical left-module coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimElement {
    pub r: usize,
    pub object: SoergelObject,
    pub coords: BTreeMap<Vec<bool>, Poly>,
}

impl BimElement {
    pub fn zero(r: usize, object: SoergelObject) -> Self {
        BimElement { r, object, coords: BTreeMap::new() }
    }

    /// The basis vector `1 (x) t_1 (x) ... (x) t_m`.
    pub fn basis(r: usize, object: SoergelObject, tag: Vec<bool>) -> Self {
        assert_eq!(tag.len(), object.num_unoriented(), "tag length");
        let mut e = BimElement::zero(r, object);
        e.coords.insert(tag, Poly::one(r + 1));
        e
    }

    /// `1 (x) 1 (x) ... (x) 1`.
    pub fn one(r: usize, object: SoergelObject) -> Self {
        let m = object.num_unoriented();
        BimElement::basis(r, object, vec![false; m])
    }

    /// Normalizes the pure tensor with polynomial `slots[s]` at the left end of region `s`.
    pub fn from_pure(r: usize, object: SoergelObject, slots: &[Poly]) -> Self {
        let colors = object.colors();
        assert_eq!(slots.len(), colors.len() + 1, "one slot per region");
        let twists = object.region_twists();
        let coords = normalize_pure(r, &colors, &twists, slots);
        BimElement { r, object, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, tag: &[bool]) -> Poly {
        self.coords.get(tag).cloned().unwrap_or_else(|| Poly::zero(self.r + 1))
    }

    pub fn add_term(&mut self, tag: Vec<bool>, c: &Poly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coords.entry(tag) {
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

    pub fn add(&self, o: &BimElement) -> BimElement {
        assert_eq!(self.object.letters, o.object.letters, "adding elements of different objects");
        let mut out = self.clone();
        for (t, c) in &o.coords {
            out.add_term(t.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &BimElement) -> BimElement {
        self.add(&o.scale(Rat::int(-1)))
    }

    pub fn scale(&self, c: Rat) -> BimElement {
        if c.is_zero() {
            return BimElement::zero(self.r, self.object.clone());
        }
        let coords = self.coords.iter().map(|(t, p)| (t.clone(), p.scale(c))).collect();
        BimElement { r: self.r, object: self.object.clone(), coords }
    }

    /// Left multiplication `p * e`.
    pub fn left_mul(&self, p: &Poly) -> BimElement {
        let mut out = BimElement::zero(self.r, self.object.clone());
        for (t, c) in &self.coords {
            out.add_term(t.clone(), &(p * c));
        }
        out
    }

    /// Right multiplication `e * p`, transported through the twists and split back to the left.
    pub fn right_mul(&self, p: &Poly) -> BimElement {
        let colors = self.object.colors();
        let twists = self.object.region_twists();
        let m = colors.len();
        let moved = rho_pow(self.r, twists[m], p);
        let mut out = BimElement::zero(self.r, self.object.clone());
        for (tag, c) in &self.coords {
            let mut slots = Vec::with_capacity(m + 1);
            slots.push(c.clone());
            for (k, &bit) in tag.iter().enumerate() {
                slots.push(tag_poly(self.r, colors[k], bit));
            }
            slots[m] = &slots[m] * &moved;
            for (t, v) in normalize_pure(self.r, &colors, &twists, &slots) {
                out.add_term(t, &v);
            }
        }
        out
    }

    /// Homogeneous degree, if the element is homogeneous and nonzero.
    ///
    /// A term `coef * tag` has degree `deg(coef) + 2 #b + shift - #unoriented`.
    pub fn degree(&self) -> Option<i64> {
        let base = self.object.shift - self.object.num_unoriented() as i64;
        let mut deg = None;
        for (t, c) in &self.coords {
            if !c.is_homogeneous() {
                return None;
            }
            let d = c.degree()? + 2 * t.iter().filter(|&&b| b).count() as i64 + base;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }
}

impl fmt::Display for BimElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coords.iter().map(|(t, c)| format!("({})*{}", c, format_tag(t))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `1` or `b_c`.
pub(crate) fn tag_poly(r: usize, c: usize, bit: bool) -> Poly {
    if bit {
        basis_b(r, c)
    } else {
        Poly::one(r + 1)
    }
}

/// Pushes all coefficients of a pure tensor to the left, splitting over `R^{s_c}` at each letter.
fn normalize_pure(r: usize, colors: &[usize], twists: &[i64], slots: &[Poly]) -> BTreeMap<Vec<bool>, Poly> {
    let m = colors.len();
    let mut cur: BTreeMap<Vec<bool>, Poly> = BTreeMap::new();
    if slots[m].is_zero() {
        return cur;
    }
    cur.insert(Vec::new(), slots[m].clone());
    for s in (1..=m).rev() {
        let mut next: BTreeMap<Vec<bool>, Poly> = BTreeMap::new();
        for (suffix, carry) in cur {
            let (a, b) = split_invariant(r, colors[s - 1], &carry);
            for (bit, part) in [(false, a), (true, b)] {
                if part.is_zero() {
                    continue;
                }
                let v = &slots[s - 1] * &rho_pow(r, twists[s - 1], &part);
                if v.is_zero() {
                    continue;
                }
                let mut key = Vec::with_capacity(suffix.len() + 1);
                key.push(bit);
                key.extend_from_slice(&suffix);
                match next.get_mut(&key) {
                    Some(x) => {
                        let sum = &*x + &v;
                        if sum.is_zero() {
                            next.remove(&key);
                        } else {
                            *x = sum;
                        }
                    }
                    None => {
                        next.insert(key, v);
                    }
                }
            }
        }
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;

    fn p(r: usize, s: &str) -> Poly {
        parse_poly(r, s).unwrap()
    }

    #[test]
    fn normalize_single_letter() {
        let r = 3;
        let obj = SoergelObject::parse(r, "2").unwrap();
        let e = BimElement::one(r, obj.clone()).right_mul(&p(r, "x3"));
        assert_eq!(e, BimElement::basis(r, obj.clone(), vec![true]));
        let e = BimElement::one(r, obj.clone()).right_mul(&p(r, "x2"));
        let mut want = BimElement::one(r, obj.clone()).left_mul(&p(r, "x2 + x3"));
        want.add_term(vec![true], &p(r, "-1"));
        assert_eq!(e, want);
    }

    #[test]
    fn twist_transport() {
        let r = 3;
        let obj = SoergelObject::parse(r, "+").unwrap();
        let e = BimElement::one(r, obj.clone()).right_mul(&p(r, "x3"));
        assert_eq!(e, BimElement::one(r, obj).left_mul(&p(r, "x1 - y")));
    }

    #[test]
    fn right_action_is_associative() {
        let r = 3;
        let obj = SoergelObject::parse(r, "1,+,3,2,-").unwrap();
        let e = BimElement::one(r, obj);
        let a = p(r, "x1^2 + y*x2");
        let b = p(r, "x3 - 2*x1");
        assert_eq!(e.right_mul(&a).right_mul(&b), e.right_mul(&(&a * &b)));
    }
}
