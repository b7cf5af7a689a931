//! The affine q-Schur algebra `S(n, r)` through its action on tensor space: generator words,
//! weight idempotents, an equality oracle on windows of pure tensors, the embedding of the
//! extended affine Hecke algebra, the anti-involution `rho`, the bilinear form and `iota_n`.

use crate::arith::parse::parse_ratq;
use crate::arith::{qint, Laurent, RatQ};
use crate::error::{parse_err, Error, Result};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;

/// All `lambda in N^n` with `sum lambda_i = r`.
pub fn compositions(n: usize, r: usize) -> Vec<Vec<i64>> {
    fn go(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=left).rev() {
            cur.push(a);
            go(n, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, r as i64, &mut Vec::new(), &mut out);
    }
    out
}

/// `(1^r)` padded with zeros to length `n`.
pub fn unit_weight(n: usize, r: usize) -> Vec<i64> {
    (0..n).map(|j| i64::from(j < r)).collect()
}

/// `alpha_i = e_i - e_{i+1}` for `i < n` and `alpha_n = e_n - e_1`.
pub fn simple_root(n: usize, i: usize) -> Vec<i64> {
    let mut a = vec![0; n];
    a[i - 1] += 1;
    a[i % n] -= 1;
    a
}

/// The residue of `t` in `1..=n`.
pub fn residue(n: usize, t: i64) -> usize {
    ((t - 1).rem_euclid(n as i64) + 1) as usize
}

/// The weight of a pure tensor.
pub fn weight_of(n: usize, t: &[i64]) -> Vec<i64> {
    let mut w = vec![0; n];
    for &a in t {
        w[residue(n, a) - 1] += 1;
    }
    w
}

/// A letter of a generator word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SLetter {
    /// `E_i` for `i > 0`, `E_{-i}` for negative values.
    E(i64),
    /// `K_i^e`.
    K(usize, i32),
    /// `R^e`.
    R(i32),
    /// The weight idempotent `1_lambda`.
    Idem(Vec<i64>),
}

/// A product of letters, written left to right; the rightmost letter acts first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GenWord(pub Vec<SLetter>);

impl GenWord {
    pub fn new(letters: Vec<SLetter>) -> Self {
        GenWord(letters)
    }

    pub fn letters(&self) -> &[SLetter] {
        &self.0
    }

    /// Number of non-idempotent letters.
    pub fn len(&self) -> usize {
        self.0.iter().filter(|l| !matches!(l, SLetter::Idem(_))).count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &GenWord) -> GenWord {
        let mut v = self.0.clone();
        v.extend(o.0.iter().cloned());
        GenWord(v)
    }

    /// `E_{i_1} ... E_{i_k}` from signed indices.
    pub fn es(idx: &[i64]) -> GenWord {
        GenWord(idx.iter().map(|&i| SLetter::E(i)).collect())
    }

    pub fn with_idem(mut self, lambda: &[i64]) -> GenWord {
        self.0.push(SLetter::Idem(lambda.to_vec()));
        self
    }

    pub fn idem_left(self, lambda: &[i64]) -> GenWord {
        let mut v = vec![SLetter::Idem(lambda.to_vec())];
        v.extend(self.0);
        GenWord(v)
    }

    /// The weight `lambda + sum of roots`, tracked through the word from a right idempotent.
    pub fn target_weight(&self, n: usize, source: &[i64]) -> Vec<i64> {
        let mut w = source.to_vec();
        for l in self.0.iter().rev() {
            if let SLetter::E(i) = l {
                let a = simple_root(n, i.unsigned_abs() as usize);
                let s = i.signum();
                for (x, d) in w.iter_mut().zip(a) {
                    *x += s * d;
                }
            }
        }
        w
    }

    fn validate(&self, n: usize) -> Result<()> {
        for l in &self.0 {
            let ok = match l {
                SLetter::E(i) => *i != 0 && i.unsigned_abs() as usize <= n,
                SLetter::K(i, _) => (1..=n).contains(i),
                SLetter::R(_) => true,
                SLetter::Idem(lam) => lam.len() == n,
            };
            if !ok {
                return Err(Error::InvalidParams(format!("letter {:?} invalid for n = {}", l, n)));
            }
        }
        Ok(())
    }
}

impl fmt::Display for SLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SLetter::E(i) => write!(f, "E{}", i),
            SLetter::K(i, e) if *e == 1 => write!(f, "K{}", i),
            SLetter::K(i, e) => write!(f, "K{}^{}", i, e),
            SLetter::R(e) if *e == 1 => write!(f, "R"),
            SLetter::R(e) => write!(f, "R^{}", e),
            SLetter::Idem(l) => {
                let parts: Vec<String> = l.iter().map(|a| a.to_string()).collect();
                write!(f, "1[({})]", parts.join(","))
            }
        }
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A finite `Q(q)`-combination of generator words for a fixed `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurElement {
    pub n: usize,
    terms: BTreeMap<GenWord, RatQ>,
}

impl SchurElement {
    pub fn zero(n: usize) -> Self {
        SchurElement { n, terms: BTreeMap::new() }
    }

    pub fn word(n: usize, w: GenWord) -> Self {
        Self::term(n, w, RatQ::one())
    }

    pub fn term(n: usize, w: GenWord, c: RatQ) -> Self {
        let mut s = Self::zero(n);
        s.add_term(w, &c);
        s
    }

    pub fn idem(n: usize, lambda: &[i64]) -> Self {
        Self::word(n, GenWord(vec![SLetter::Idem(lambda.to_vec())]))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GenWord, &RatQ)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: GenWord, c: &RatQ) {
        if c.is_zero() {
            return;
        }
        let s = self.terms.get(&w).map(|a| a + c).unwrap_or_else(|| c.clone());
        if s.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, s);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &RatQ) -> Self {
        let mut out = Self::zero(self.n);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), &(a * c));
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&RatQ::int(-1)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (w, a) in &self.terms {
            for (v, b) in &o.terms {
                out.add_term(w.concat(v), &(a * b));
            }
        }
        out
    }

    /// Longest word length, idempotents excluded.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Right idempotent weights if every word ends in one.
    fn right_weights(&self) -> Option<Vec<Vec<i64>>> {
        let mut out = Vec::new();
        for w in self.terms.keys() {
            match w.0.last() {
                Some(SLetter::Idem(l)) => out.push(l.clone()),
                _ => return None,
            }
        }
        out.sort();
        out.dedup();
        Some(out)
    }
}

impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| if c.is_one() { w.to_string() } else { format!("({})*{}", c, w) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A finite combination of pure tensors `e_{t_1} (x) ... (x) e_{t_r}`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorVector {
    terms: BTreeMap<Vec<i64>, RatQ>,
}

impl TensorVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(t: Vec<i64>) -> Self {
        let mut v = Self::zero();
        v.add_term(t, &RatQ::one());
        v
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &RatQ)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &[i64]) -> RatQ {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, t: Vec<i64>, c: &RatQ) {
        if c.is_zero() {
            return;
        }
        let s = self.terms.get(&t).map(|a| a + c).unwrap_or_else(|| c.clone());
        if s.is_zero() {
            self.terms.remove(&t);
        } else {
            self.terms.insert(t, s);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &o.terms {
            out.add_term(t.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &RatQ) -> Self {
        let mut out = Self::zero();
        for (t, a) in &self.terms {
            out.add_term(t.clone(), &(a * c));
        }
        out
    }

    /// Adds `k` to every index of every tensor factor.
    pub fn shift(&self, k: i64) -> Self {
        TensorVector { terms: self.terms.iter().map(|(t, c)| (t.iter().map(|a| a + k).collect(), c.clone())).collect() }
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, c)| {
                let tup: Vec<String> = t.iter().map(|a| a.to_string()).collect();
                if c.is_one() {
                    format!("({})", tup.join(","))
                } else {
                    format!("({})*({})", c, tup.join(","))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

type Sparse = BTreeMap<Vec<i64>, Laurent>;

fn push(out: &mut Sparse, t: Vec<i64>, c: Laurent) {
    if c.is_zero() {
        return;
    }
    let s = match out.get(&t) {
        Some(a) => a + &c,
        None => c,
    };
    if s.is_zero() {
        out.remove(&t);
    } else {
        out.insert(t, s);
    }
}

/// The action of one letter on a pure tensor.
fn act_letter(n: usize, l: &SLetter, t: &[i64], c: &Laurent, out: &mut Sparse) {
    let res = |a: i64| residue(n, a);
    match l {
        SLetter::E(i) if *i > 0 => {
            let i = *i as usize;
            let ip = i % n + 1;
            let mut tail = 0i32;
            for j in (0..t.len()).rev() {
                if res(t[j] - 1) == i {
                    let mut u = t.to_vec();
                    u[j] -= 1;
                    push(out, u, c.shift(tail));
                }
                tail += i32::from(res(t[j]) == i) - i32::from(res(t[j]) == ip);
            }
        }
        SLetter::E(i) => {
            let i = i.unsigned_abs() as usize;
            let ip = i % n + 1;
            let mut head = 0i32;
            for j in 0..t.len() {
                if res(t[j]) == i {
                    let mut u = t.to_vec();
                    u[j] += 1;
                    push(out, u, c.shift(head));
                }
                head += i32::from(res(t[j]) == ip) - i32::from(res(t[j]) == i);
            }
        }
        SLetter::K(i, e) => {
            let k = t.iter().filter(|&&a| res(a) == *i).count() as i32;
            push(out, t.to_vec(), c.shift(k * e));
        }
        SLetter::R(e) => push(out, t.iter().map(|a| a + *e as i64).collect(), c.clone()),
        SLetter::Idem(lam) => {
            if weight_of(n, t) == *lam {
                push(out, t.to_vec(), c.clone());
            }
        }
    }
}

fn act_word_basis(n: usize, w: &GenWord, t: &[i64]) -> Sparse {
    let mut cur: Sparse = BTreeMap::new();
    cur.insert(t.to_vec(), Laurent::one());
    for l in w.0.iter().rev() {
        let mut next = BTreeMap::new();
        for (u, c) in &cur {
            act_letter(n, l, u, c, &mut next);
        }
        cur = next;
        if cur.is_empty() {
            break;
        }
    }
    cur
}

fn act_basis(x: &SchurElement, t: &[i64]) -> TensorVector {
    let mut out = TensorVector::zero();
    for (w, c) in &x.terms {
        for (u, l) in act_word_basis(x.n, w, t) {
            out.add_term(u, &(c * &RatQ::from_laurent(l)));
        }
    }
    out
}

/// The action of a Schur element on a tensor vector.
pub fn act(x: &SchurElement, v: &TensorVector) -> Result<TensorVector> {
    for w in x.terms.keys() {
        w.validate(x.n)?;
    }
    let mut out = TensorVector::zero();
    for (t, c) in &v.terms {
        out = out.add(&act_basis(x, t).scale(c));
    }
    Ok(out)
}

pub fn act_word(n: usize, w: &GenWord, v: &TensorVector) -> Result<TensorVector> {
    act(&SchurElement::word(n, w.clone()), v)
}

/// Projection onto the `lambda`-weight space.
pub fn weight_project(n: usize, lambda: &[i64], v: &TensorVector) -> TensorVector {
    let mut out = TensorVector::zero();
    for (t, c) in &v.terms {
        if weight_of(n, t) == lambda {
            out.add_term(t.clone(), c);
        }
    }
    out
}

/// `<v, w>` with `<e_s, e_t> = delta_{st}` factorwise.
pub fn bilinear_form(v: &TensorVector, w: &TensorVector) -> RatQ {
    let mut acc = RatQ::zero();
    for (t, c) in &v.terms {
        if let Some(d) = w.terms.get(t) {
            acc = &acc + &(c * d);
        }
    }
    acc
}

/// Pure tensors of weight `lambda` with all indices in `[0, window)`.
pub fn tensors_of_weight(n: usize, lambda: &[i64], window: i64) -> Vec<Vec<i64>> {
    if lambda.iter().any(|&a| a < 0) {
        return Vec::new();
    }
    let r: i64 = lambda.iter().sum();
    let mut arrangements: Vec<Vec<usize>> = Vec::new();
    fn arrange(left: &mut Vec<i64>, cur: &mut Vec<usize>, r: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i + 1);
                arrange(left, cur, r, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    arrange(&mut lambda.to_vec(), &mut Vec::new(), r as usize, &mut arrangements);
    let mut out = Vec::new();
    for arr in arrangements {
        let choices: Vec<Vec<i64>> =
            arr.iter().map(|&res| (0..window).filter(|&t| residue(n, t) == res).collect()).collect();
        let mut idx = vec![0usize; arr.len()];
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        loop {
            out.push(idx.iter().zip(&choices).map(|(&k, c)| c[k]).collect());
            let mut p = 0;
            loop {
                if p == idx.len() {
                    break;
                }
                idx[p] += 1;
                if idx[p] < choices[p].len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
            if p == idx.len() {
                break;
            }
        }
    }
    out
}

/// All pure tensors with indices in `[0, window)`.
pub fn all_tensors(r: usize, window: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|t: Vec<i64>| {
                (0..window).map(move |a| {
                    let mut u = t.clone();
                    u.push(a);
                    u
                })
            })
            .collect();
    }
    out
}

/// The default window `n + 2 L + 2` for elements of word length at most `L`.
pub fn default_window(n: usize, x: &SchurElement, y: &SchurElement) -> i64 {
    (n + 2 * x.max_len().max(y.max_len()) + 2) as i64
}

/// A pure tensor on which `x` and `y` differ, within the window.
pub fn find_difference(x: &SchurElement, y: &SchurElement, r: usize, window: i64) -> Option<Vec<i64>> {
    let n = x.n;
    let tensors = match (x.right_weights(), y.right_weights()) {
        (Some(mut a), Some(b)) => {
            a.extend(b);
            a.sort();
            a.dedup();
            a.iter().filter(|l| l.iter().sum::<i64>() == r as i64).flat_map(|l| tensors_of_weight(n, l, window)).collect()
        }
        _ => all_tensors(r, window),
    };
    tensors.into_iter().find(|t| act_basis(x, t) != act_basis(y, t))
}

/// Whether `x` and `y` act identically on all pure tensors with indices in `[0, window)`.
pub fn equal(x: &SchurElement, y: &SchurElement, r: usize, window: i64) -> bool {
    find_difference(x, y, r, window).is_none()
}

/// The algebra anti-involution `rho`.
pub fn rho_antiinv(x: &SchurElement) -> SchurElement {
    let n = x.n;
    let mut out = SchurElement::zero(n);
    for (w, c) in &x.terms {
        let mut letters = Vec::new();
        let mut coef = c.clone();
        for l in w.0.iter().rev() {
            match l {
                SLetter::E(i) => {
                    let a = i.unsigned_abs() as usize;
                    let b = a % n + 1;
                    coef = &coef * &RatQ::q();
                    let s = if *i > 0 { 1 } else { -1 };
                    letters.push(SLetter::K(a, s));
                    letters.push(SLetter::K(b, -s));
                    letters.push(SLetter::E(-*i));
                }
                SLetter::K(i, e) => letters.push(SLetter::K(*i, *e)),
                SLetter::R(e) => letters.push(SLetter::R(-*e)),
                SLetter::Idem(l) => letters.push(SLetter::Idem(l.clone())),
            }
        }
        out.add_term(GenWord(letters), &coef);
    }
    out
}

/// Hecke generators whose images under `sigma_{n,r}` are displayed explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeckeSym {
    B(usize),
    Rho,
    RhoInv,
}

/// `sigma_{n,r}` on a generator, using the first displayed form.
pub fn sigma_embed(n: usize, r: usize, g: HeckeSym) -> Result<SchurElement> {
    if !(3..n).contains(&r) {
        return Err(Error::InvalidParams(format!("sigma embedding needs 3 <= r < n, got r = {}, n = {}", r, n)));
    }
    let (n64, r64) = (n as i64, r as i64);
    let idx: Vec<i64> = match g {
        HeckeSym::B(i) if (1..r).contains(&i) => vec![-(i as i64), i as i64],
        HeckeSym::B(i) if i == r => {
            let mut v: Vec<i64> = (r64..=n64).rev().map(|k| -k).collect();
            v.extend(r64..=n64);
            v
        }
        HeckeSym::B(i) => return Err(Error::IndexOutOfRange { index: i as i64, max: r64 }),
        HeckeSym::Rho => {
            let mut v: Vec<i64> = (r64 + 1..=n64).rev().map(|k| -k).collect();
            v.extend((1..=r64).map(|k| -k));
            v
        }
        HeckeSym::RhoInv => {
            let mut v: Vec<i64> = (1..=r64).rev().collect();
            v.extend(r64 + 1..=n64);
            v
        }
    };
    let u = unit_weight(n, r);
    Ok(SchurElement::word(n, GenWord::es(&idx).idem_left(&u).with_idem(&u)))
}

/// The second displayed forms of `sigma(b_i)` (`i < r`), `sigma(T_rho)` and `sigma(T_rho^-1)`.
pub fn sigma_embed_alt(n: usize, r: usize, g: HeckeSym) -> Result<SchurElement> {
    let (n64, r64) = (n as i64, r as i64);
    let idx: Vec<i64> = match g {
        HeckeSym::B(i) if (1..r).contains(&i) => vec![i as i64, -(i as i64)],
        HeckeSym::B(_) => return sigma_embed(n, r, g),
        HeckeSym::Rho => {
            let mut v = vec![-n64];
            v.extend((1..r64).map(|k| -k));
            v.extend((r64..n64).rev().map(|k| -k));
            v
        }
        HeckeSym::RhoInv => {
            let mut v: Vec<i64> = (r64..n64).collect();
            v.extend((1..r64).rev());
            v.push(n64);
            v
        }
    };
    let u = unit_weight(n, r);
    Ok(SchurElement::word(n, GenWord::es(&idx).idem_left(&u).with_idem(&u)))
}

/// `iota_n: S(n, r) -> S(n+1, r)`.
pub fn iota(x: &SchurElement, r: usize) -> Result<SchurElement> {
    let n = x.n;
    if n <= r {
        return Err(Error::InvalidParams(format!("iota needs n > r, got n = {}, r = {}", n, r)));
    }
    let n1 = n + 1;
    let mut out = SchurElement::zero(n1);
    for (w, c) in &x.terms {
        w.validate(n)?;
        let mut letters = Vec::new();
        for l in &w.0 {
            match l {
                SLetter::E(i) if i.unsigned_abs() as usize == n => {
                    if *i > 0 {
                        letters.push(SLetter::E(n as i64));
                        letters.push(SLetter::E(n1 as i64));
                    } else {
                        letters.push(SLetter::E(-(n1 as i64)));
                        letters.push(SLetter::E(-(n as i64)));
                    }
                }
                SLetter::E(i) => letters.push(SLetter::E(*i)),
                SLetter::Idem(lam) => {
                    let mut l2 = lam.clone();
                    l2.push(0);
                    letters.push(SLetter::Idem(l2));
                }
                other => {
                    return Err(Error::InvalidParams(format!("iota is defined on E and 1_lambda only, found {}", other)))
                }
            }
        }
        if matches!(letters.last(), Some(SLetter::Idem(_))) {
            out.add_term(GenWord(letters), c);
        } else {
            for lam in compositions(n, r) {
                let mut l2 = lam.clone();
                l2.push(0);
                out.add_term(GenWord(letters.clone()).with_idem(&l2), c);
            }
        }
    }
    Ok(out)
}

/// One instance of a defining relation, with `lhs = rhs` expected.
#[derive(Clone, Debug)]
pub struct RelationCase {
    pub id: String,
    pub lhs: SchurElement,
    pub rhs: SchurElement,
}

fn es_at(n: usize, idx: &[i64], lam: &[i64]) -> SchurElement {
    SchurElement::word(n, GenWord::es(idx).with_idem(lam))
}

fn fmt_weight(l: &[i64]) -> String {
    l.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
}

/// Every relation of the presentation of `S(n, r)`, instantiated over colors and weights.
pub fn presentation_cases(n: usize, r: usize) -> Vec<RelationCase> {
    let lams = compositions(n, r);
    let mut cases = Vec::new();
    let zero = SchurElement::zero(n);
    let ni = n as i64;
    let wrap = |i: i64| (i - 1).rem_euclid(ni) + 1;
    let distant = |i: i64, j: i64| i != j && wrap(i + 1) != j && wrap(j + 1) != i;
    for lam in &lams {
        let lw = fmt_weight(lam);
        for mu in &lams {
            let lhs = SchurElement::idem(n, lam).mul(&SchurElement::idem(n, mu));
            let rhs = if lam == mu { SchurElement::idem(n, lam) } else { zero.clone() };
            cases.push(RelationCase { id: format!("idem[{}|{}]", lw, fmt_weight(mu)), lhs, rhs });
        }
        for i in 1..=ni {
            for s in [1i64, -1] {
                let root = simple_root(n, i as usize);
                let target: Vec<i64> = lam.iter().zip(&root).map(|(a, b)| a + s * b).collect();
                let lhs = es_at(n, &[s * i], lam);
                let rhs = SchurElement::word(n, GenWord::es(&[s * i]).idem_left(&target));
                cases.push(RelationCase { id: format!("weight[E{}|{}]", s * i, lw), lhs, rhs });
            }
            for j in 1..=ni {
                let lhs = es_at(n, &[i, -j], lam).sub(&es_at(n, &[-j, i], lam));
                let rhs = if i == j {
                    let d = lam[(i - 1) as usize] - lam[(i % ni) as usize];
                    SchurElement::idem(n, lam).scale(&qint(d))
                } else {
                    zero.clone()
                };
                cases.push(RelationCase { id: format!("comm[{},{}|{}]", i, j, lw), lhs, rhs });
                if distant(i, j) {
                    for s in [1i64, -1] {
                        let lhs = es_at(n, &[s * i, s * j], lam).sub(&es_at(n, &[s * j, s * i], lam));
                        cases.push(RelationCase { id: format!("distant[{},{}|{}]", s * i, s * j, lw), lhs, rhs: zero.clone() });
                    }
                }
            }
            for s in [1i64, -1] {
                for d in [1i64, -1] {
                    let a = s * i;
                    let b = s * wrap(i + d);
                    let q2 = qint(2);
                    let lhs = es_at(n, &[a, a, b], lam)
                        .sub(&es_at(n, &[a, b, a], lam).scale(&q2))
                        .add(&es_at(n, &[b, a, a], lam));
                    cases.push(RelationCase { id: format!("serre[{},{}|{}]", a, b, lw), lhs, rhs: zero.clone() });
                }
            }
        }
    }
    let total = lams.iter().fold(SchurElement::zero(n), |acc, l| acc.add(&SchurElement::idem(n, l)));
    cases.push(RelationCase { id: "unit".into(), lhs: total, rhs: SchurElement::word(n, GenWord::default()) });
    cases
}

/// Outcome of an oracle check on one relation instance.
#[derive(Clone, Debug)]
pub struct CaseResult {
    pub id: String,
    pub pass: bool,
    pub witness: Option<Vec<i64>>,
}

/// Checks relation instances with the oracle, using the default window plus `extra`.
pub fn check_cases(cases: &[RelationCase], r: usize, extra: i64) -> Vec<CaseResult> {
    let mut out: Vec<CaseResult> = cases
        .par_iter()
        .map(|c| {
            let w = default_window(c.lhs.n, &c.lhs, &c.rhs) + extra;
            let witness = find_difference(&c.lhs, &c.rhs, r, w);
            CaseResult { id: c.id.clone(), pass: witness.is_none(), witness }
        })
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

/// Hecke relations for the images of `sigma_{n,r}`, as Schur relation instances.
pub fn sigma_cases(n: usize, r: usize) -> Result<Vec<RelationCase>> {
    let b = |i: usize| sigma_embed(n, r, HeckeSym::B((i - 1) % r + 1));
    let rho = sigma_embed(n, r, HeckeSym::Rho)?;
    let rhoinv = sigma_embed(n, r, HeckeSym::RhoInv)?;
    let one = SchurElement::idem(n, &unit_weight(n, r));
    let q2 = qint(2);
    let mut cases = Vec::new();
    let ring_dist = |i: usize, j: usize| i != j && i % r + 1 != j && j % r + 1 != i;
    for i in 1..=r {
        let bi = b(i)?;
        let bn = b(i + 1)?;
        cases.push(RelationCase { id: format!("H1[{}]", i), lhs: bi.mul(&bi), rhs: bi.scale(&q2) });
        for j in 1..=r {
            if ring_dist(i, j) {
                let bj = b(j)?;
                cases.push(RelationCase { id: format!("H2[{},{}]", i, j), lhs: bi.mul(&bj), rhs: bj.mul(&bi) });
            }
        }
        cases.push(RelationCase {
            id: format!("H3[{}]", i),
            lhs: bi.mul(&bn).mul(&bi).add(&bn),
            rhs: bn.mul(&bi).mul(&bn).add(&bi),
        });
        cases.push(RelationCase { id: format!("H4[{}]", i), lhs: rho.mul(&bi).mul(&rhoinv), rhs: bn.clone() });
        if i < r {
            cases.push(RelationCase {
                id: format!("form-b[{}]", i),
                lhs: bi.clone(),
                rhs: sigma_embed_alt(n, r, HeckeSym::B(i))?,
            });
        }
    }
    cases.push(RelationCase { id: "rho-inverse-left".into(), lhs: rho.mul(&rhoinv), rhs: one.clone() });
    cases.push(RelationCase { id: "rho-inverse-right".into(), lhs: rhoinv.mul(&rho), rhs: one });
    cases.push(RelationCase { id: "form-rho".into(), lhs: rho, rhs: sigma_embed_alt(n, r, HeckeSym::Rho)? });
    cases.push(RelationCase { id: "form-rho-inv".into(), lhs: rhoinv, rhs: sigma_embed_alt(n, r, HeckeSym::RhoInv)? });
    Ok(cases)
}

/// Splits at top-level `+`/`-` signs that follow whitespace or start the string.
fn split_terms(s: &str) -> Vec<(usize, bool, &str)> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    let mut i = 0;
    while i < b.len() {
        match b[i] {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let prev = s[..i].trim_end();
                let at_sep = prev.is_empty() || (i > 0 && b[i - 1].is_ascii_whitespace());
                let after_op = prev.ends_with('*');
                if at_sep && !after_op {
                    if !prev.is_empty() {
                        out.push((start, neg, &s[start..i]));
                    }
                    neg = b[i] == b'-';
                    start = i + 1;
                }
            }
            _ => {}
        }
        i += 1;
    }
    out.push((start, neg, &s[start..]));
    out
}

/// Splits `coef*rest` at the last top-level `*`.
fn split_coef(s: &str) -> (Option<&str>, &str, usize) {
    let b = s.as_bytes();
    let mut depth = 0i32;
    let mut cut = None;
    for (i, &c) in b.iter().enumerate() {
        match c {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b'*' if depth == 0 => cut = Some(i),
            _ => {}
        }
    }
    match cut {
        Some(i) => (Some(&s[..i]), &s[i + 1..], i + 1),
        None => (None, s, 0),
    }
}

/// Parses a generator word such as `E1 E-4 K3 R R^-1 1[(1,1,1,0)]`.
pub fn parse_word(n: usize, s: &str) -> Result<GenWord> {
    parse_word_at(n, s, 0)
}

fn parse_word_at(n: usize, s: &str, base: usize) -> Result<GenWord> {
    let b = s.as_bytes();
    let mut i = 0;
    let mut letters = Vec::new();
    while i < b.len() {
        if b[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let st = i;
        if s[i..].starts_with("1[") {
            let close = match s[i..].find(']') {
                Some(p) => i + p,
                None => return parse_err(base + st, "unclosed idempotent"),
            };
            let inner = s[i + 2..close].trim().trim_start_matches('(').trim_end_matches(')');
            let lam: std::result::Result<Vec<i64>, _> = inner.split(',').map(|x| x.trim().parse::<i64>()).collect();
            match lam {
                Ok(l) if l.len() == n => letters.push(SLetter::Idem(l)),
                _ => return parse_err(base + st, format!("invalid weight '{}'", inner)),
            }
            i = close + 1;
            continue;
        }
        while i < b.len() && !b[i].is_ascii_whitespace() {
            i += 1;
        }
        let tok = &s[st..i];
        let (head, exp) = match tok.split_once('^') {
            Some((h, e)) => match e.parse::<i32>() {
                Ok(v) => (h, v),
                Err(_) => return parse_err(base + st, format!("bad exponent in '{}'", tok)),
            },
            None => (tok, 1),
        };
        let letter = if head == "id" {
            None
        } else if head == "R" {
            Some(SLetter::R(exp))
        } else if let Some(ix) = head.strip_prefix('E') {
            match ix.parse::<i64>() {
                Ok(k) if k != 0 && k.unsigned_abs() as usize <= n && exp == 1 => Some(SLetter::E(k)),
                _ => return parse_err(base + st, format!("invalid generator '{}'", tok)),
            }
        } else if let Some(ix) = head.strip_prefix('K') {
            match ix.parse::<usize>() {
                Ok(k) if (1..=n).contains(&k) => Some(SLetter::K(k, exp)),
                _ => return parse_err(base + st, format!("invalid generator '{}'", tok)),
            }
        } else {
            return parse_err(base + st, format!("unknown generator '{}'", tok));
        };
        letters.extend(letter);
    }
    Ok(GenWord(letters))
}

fn parse_coef(c: &str, at: usize) -> Result<RatQ> {
    parse_ratq(c).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + at, msg },
        other => other,
    })
}

/// Parses a combination such as `E1 E-1 1[(1,1,1,0)] - (q + q^-1)*1[(1,1,1,0)]`.
pub fn parse_element(n: usize, s: &str) -> Result<SchurElement> {
    let mut out = SchurElement::zero(n);
    if s.trim() == "0" {
        return Ok(out);
    }
    for (at, neg, part) in split_terms(s) {
        let (coef, word, off) = split_coef(part);
        let mut c = match coef {
            Some(c) => parse_coef(c, at)?,
            None => RatQ::one(),
        };
        if neg {
            c = -c;
        }
        let w = parse_word_at(n, word, at + off)?;
        if w.is_empty() && word.trim().is_empty() {
            return parse_err(at + off, "empty term");
        }
        out.add_term(w, &c);
    }
    Ok(out)
}

/// Parses a combination of tuples such as `(1,2,3) - q*(2,2,3)`.
pub fn parse_tensor(r: usize, s: &str) -> Result<TensorVector> {
    let mut out = TensorVector::zero();
    if s.trim() == "0" {
        return Ok(out);
    }
    for (at, neg, part) in split_terms(s) {
        let (coef, tup, off) = split_coef(part);
        let mut c = match coef {
            Some(c) => parse_coef(c, at)?,
            None => RatQ::one(),
        };
        if neg {
            c = -c;
        }
        let inner = tup.trim();
        let inner = match inner.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
            Some(x) => x,
            None => return parse_err(at + off, "expected '(t1,...,tr)'"),
        };
        let t: std::result::Result<Vec<i64>, _> = inner.split(',').map(|x| x.trim().parse::<i64>()).collect();
        match t {
            Ok(t) if t.len() == r => out.add_term(t, &c),
            _ => return parse_err(at + off, format!("expected {} integer indices", r)),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i32) -> RatQ {
        RatQ::qpow(1, e)
    }

    #[test]
    fn single_factor_action() {
        let n = 4;
        let e1 = SchurElement::word(n, parse_word(n, "E1").unwrap());
        assert_eq!(act(&e1, &TensorVector::basis(vec![2])).unwrap(), TensorVector::basis(vec![1]));
        assert!(act(&e1, &TensorVector::basis(vec![3])).unwrap().is_zero());
        let k = SchurElement::word(n, parse_word(n, "K1").unwrap());
        assert_eq!(act(&k, &TensorVector::basis(vec![5])).unwrap(), TensorVector::basis(vec![5]).scale(&q(1)));
        let e4 = SchurElement::word(n, parse_word(n, "E-4").unwrap());
        assert_eq!(act(&e4, &TensorVector::basis(vec![4])).unwrap(), TensorVector::basis(vec![5]));
    }

    #[test]
    fn coproduct_on_two_factors() {
        let n = 4;
        let e = SchurElement::word(n, parse_word(n, "E2").unwrap());
        let v = act(&e, &TensorVector::basis(vec![3, 3])).unwrap();
        let expect = TensorVector::basis(vec![2, 3]).scale(&q(-1)).add(&TensorVector::basis(vec![3, 2]));
        assert_eq!(v, expect);
    }

    #[test]
    fn projections() {
        let (n, r) = (4, 3);
        let u = unit_weight(n, r);
        let v = TensorVector::basis(vec![1, 2, 3]);
        assert_eq!(weight_project(n, &u, &v), v);
        assert!(weight_project(n, &u, &TensorVector::basis(vec![1, 1, 3])).is_zero());
        assert_eq!(compositions(4, 3).len(), 20);
    }

    #[test]
    fn rho_adjoint_example() {
        let n = 4;
        let e1 = SchurElement::word(n, parse_word(n, "E1").unwrap());
        let v = TensorVector::basis(vec![2]);
        let w = TensorVector::basis(vec![1]);
        let lhs = bilinear_form(&act(&e1, &v).unwrap(), &w);
        let rhs = bilinear_form(&v, &act(&rho_antiinv(&e1), &w).unwrap());
        assert!(lhs.is_one() && rhs.is_one());
    }

    #[test]
    fn form_example() {
        let v = TensorVector::basis(vec![1]).add(&TensorVector::basis(vec![2]).scale(&q(1)));
        assert_eq!(bilinear_form(&v, &v), &RatQ::one() + &q(2));
    }

    #[test]
    fn commutator_oracle() {
        let (n, r) = (4, 3);
        for lam in compositions(n, r) {
            let lhs = es_at(n, &[1, -1], &lam).sub(&es_at(n, &[-1, 1], &lam));
            let rhs = SchurElement::idem(n, &lam).scale(&qint(lam[0] - lam[1]));
            assert!(equal(&lhs, &rhs, r, 12));
        }
    }

    #[test]
    fn parse_round_trips() {
        let n = 4;
        let x = parse_element(n, "E1 E-4 K3 R R^-1 1[(1,1,1,0)] - (q + q^-1)*1[(1,1,1,0)]").unwrap();
        assert_eq!(parse_element(n, &x.to_string()).unwrap(), x);
        let t = parse_tensor(3, "(1,2,3) - q*(2,-2,3)").unwrap();
        assert_eq!(parse_tensor(3, &t.to_string()).unwrap(), t);
        assert!(matches!(parse_word(n, "E1 E9"), Err(Error::Parse { pos: 3, .. })));
    }
}
