//! Tensor products of one-letter singular bimodules `Res Ind` (with a `rho` twist for color `n`),
//! reduced to a canonical form.
//!
//! A letter `E_a 1_mu` is the ring `R_F` of a refinement `F` of `mu` that splits one block into a
//! singleton `z` and a rest. The left action of the target ring is multiplication and the right
//! action of `a in R_mu` is multiplication by `rho^t(a)`. In a tensor word the relation
//! `p' rho^{t'}(a) (x) p = p' (x) a p` moves coefficients leftwards; `R_F` is free over the target
//! ring with basis `1, z, ..., z^m`, so every element is uniquely `sum c_e (x) z^{e_{m-1}} (x) ... (x) z^{e_1}`.

use super::sym::{elementary, swap};
use crate::arith::{rho_pow, Poly};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// One letter `E_label 1_src`, with `label` in `+-1..=+-n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub label: i64,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    /// Singleton variable of the fine ring.
    pub z: usize,
    /// Block of the target that contains `z`, as `(first, len)`.
    pub merged: (usize, usize),
    /// Right action of `a` is multiplication by `rho^twist(a)`.
    pub twist: i64,
    /// Singleton variable of the induced ring (before the twist).
    pub ind_z: usize,
    /// Block of the source that is split, as `(first, len)`.
    pub split: (usize, usize),
}

impl Step {
    pub fn new(n: usize, src: &[usize], label: i64) -> Result<Self> {
        let i = label.unsigned_abs() as usize;
        if src.len() != n || i == 0 || i > n {
            return Err(Error::InvalidParams(format!("letter {} on weight {:?} with n = {}", label, src, n)));
        }
        let r: usize = src.iter().sum();
        let k = |j: usize| -> usize { src[..j].iter().sum() };
        let empty = |b: usize| Error::InvalidParams(format!("E_{} 1_{:?} is zero: block {} is empty", label, src, b));
        let mut tgt = src.to_vec();
        let step = if i < n && label > 0 {
            if src[i] == 0 {
                return Err(empty(i + 1));
            }
            tgt[i - 1] += 1;
            tgt[i] -= 1;
            let z = k(i) + 1;
            Step { z, merged: (k(i - 1) + 1, src[i - 1] + 1), twist: 0, ind_z: z, split: (k(i) + 1, src[i]), label, src: src.to_vec(), tgt }
        } else if i < n {
            if src[i - 1] == 0 {
                return Err(empty(i));
            }
            tgt[i - 1] -= 1;
            tgt[i] += 1;
            let z = k(i);
            Step { z, merged: (k(i), src[i] + 1), twist: 0, ind_z: z, split: (k(i - 1) + 1, src[i - 1]), label, src: src.to_vec(), tgt }
        } else if label > 0 {
            if src[0] == 0 {
                return Err(empty(1));
            }
            tgt[0] -= 1;
            tgt[n - 1] += 1;
            Step { z: r, merged: (r - src[n - 1], src[n - 1] + 1), twist: -1, ind_z: 1, split: (1, src[0]), label, src: src.to_vec(), tgt }
        } else {
            if src[n - 1] == 0 {
                return Err(empty(n));
            }
            tgt[0] += 1;
            tgt[n - 1] -= 1;
            Step { z: 1, merged: (1, src[0] + 1), twist: 1, ind_z: r, split: (r - src[n - 1] + 1, src[n - 1]), label, src: src.to_vec(), tgt }
        };
        Ok(step)
    }

    pub fn rank(&self) -> usize {
        self.src.iter().sum()
    }

    /// Writes `p` in the fine ring as `sum_e a_e z^e` with `a_e` in the target ring.
    pub fn decompose_left(&self, p: &Poly) -> Vec<Poly> {
        decompose(self.rank(), p, self.merged, self.z)
    }

    /// Writes `b` in the induced ring as `sum_e b_e z'^e` with `b_e` in the source ring.
    pub fn decompose_right(&self, b: &Poly) -> Vec<Poly> {
        decompose(self.rank(), b, self.split, self.ind_z)
    }

    /// Converts an element `1 (x) b` of the induced ring into the fine ring.
    pub fn from_induced(&self, b: &Poly) -> Poly {
        rho_pow(self.rank(), self.twist, b)
    }

    /// Degree shift of the one-morphism.
    pub fn shift(&self) -> i64 {
        let lam = &self.src;
        let n = lam.len();
        let r: i64 = lam.iter().sum::<usize>() as i64;
        let k = |j: usize| -> i64 { lam[..j].iter().sum::<usize>() as i64 };
        let i = self.label.unsigned_abs() as usize;
        match (i < n, self.label > 0) {
            (true, true) => 1 + k(i - 1) + k(i) - k(i + 1),
            (true, false) => 1 - k(i),
            (false, true) => n as i64 - (r + k(1)) - (1..=n.saturating_sub(2)).map(k).sum::<i64>(),
            (false, false) => (1..n).map(k).sum(),
        }
    }
}

/// Coefficients of `p` in the basis `1, z, ..., z^{len-1}` over the ring symmetric in the block
/// `(first, len)`, by Newton interpolation at the block variables.
pub fn decompose(r: usize, p: &Poly, block: (usize, usize), z: usize) -> Vec<Poly> {
    let (s, len) = block;
    let pts: Vec<usize> = (s..s + len).collect();
    let mut dd: Vec<Poly> = pts.iter().map(|&v| swap(r, p, z, v)).collect();
    let mut newton = vec![dd[0].clone()];
    for level in 1..len {
        for j in (level..len).rev() {
            let num = &dd[j] - &dd[j - 1];
            let den = &Poly::x(r, pts[j]) - &Poly::x(r, pts[j - level]);
            dd[j] = num.div_exact(&den).expect("polynomial is not invariant in the split block");
        }
        newton.push(dd[level].clone());
    }
    let vars: Vec<Poly> = pts.iter().map(|&v| Poly::x(r, v)).collect();
    (0..len)
        .map(|e| {
            let mut a = Poly::zero(r + 1);
            for (k, c) in newton.iter().enumerate().skip(e) {
                let t = c * &elementary(r + 1, (k - e) as i64, &vars[..k]);
                a = if (k - e) % 2 == 0 { &a + &t } else { &a - &t };
            }
            a
        })
        .collect()
}

/// A composable word of letters, listed in the order they act (rightmost first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub n: usize,
    pub lambda: Vec<usize>,
    pub steps: Vec<Step>,
}

impl Word {
    pub fn new(n: usize, lambda: &[usize], labels: &[i64]) -> Result<Self> {
        if lambda.len() != n {
            return Err(Error::InvalidParams(format!("weight {:?} does not have {} parts", lambda, n)));
        }
        let mut steps: Vec<Step> = Vec::new();
        let mut cur = lambda.to_vec();
        for &l in labels {
            let s = Step::new(n, &cur, l)?;
            cur = s.tgt.clone();
            steps.push(s);
        }
        Ok(Word { n, lambda: lambda.to_vec(), steps })
    }

    pub fn rank(&self) -> usize {
        self.lambda.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn labels(&self) -> Vec<i64> {
        self.steps.iter().map(|s| s.label).collect()
    }

    /// The weight to the left of the first `k` letters.
    pub fn weight_after(&self, k: usize) -> Vec<usize> {
        if k == 0 {
            self.lambda.clone()
        } else {
            self.steps[k - 1].tgt.clone()
        }
    }

    pub fn top(&self) -> Vec<usize> {
        self.weight_after(self.len())
    }

    /// Total degree shift of the word.
    pub fn shift(&self) -> i64 {
        self.steps.iter().map(Step::shift).sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().rev().map(|s| format!("E{}", s.label)).collect();
        let lam: Vec<String> = self.lambda.iter().map(|x| x.to_string()).collect();
        write!(f, "{}1_({})", parts.join(""), lam.join(","))
    }
}

/// An element of the tensor product of a word, in canonical form.
///
/// Keys are the exponents `(e_1, ..., e_{m-1})` of the singletons of letters `0..m-1`; values are the
/// coefficients in the fine ring of the last letter (in `R_lambda` for the empty word).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    pub word: Word,
    pub terms: BTreeMap<Vec<u16>, Poly>,
}

impl TensorElement {
    pub fn zero(word: Word) -> Self {
        TensorElement { word, terms: BTreeMap::new() }
    }

    /// The pure tensor with factor `factors[j]` on letter `j` (one factor, in `R_lambda`, for the empty word).
    pub fn pure(word: &Word, factors: &[Poly]) -> Self {
        let mut e = TensorElement::zero(word.clone());
        e.add_pure(factors);
        e
    }

    pub fn one(word: &Word) -> Self {
        let r = word.rank();
        Self::pure(word, &vec![Poly::one(r + 1); word.len().max(1)])
    }

    fn add_coeff(&mut self, key: Vec<u16>, c: Poly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&key) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    /// Adds a pure tensor, reducing it to canonical form.
    pub fn add_pure(&mut self, factors: &[Poly]) {
        let m = self.word.len();
        assert_eq!(factors.len(), m.max(1), "wrong number of tensor factors");
        let mut level: Vec<(Vec<u16>, Poly)> = vec![(Vec::new(), factors[0].clone())];
        for j in 0..m.saturating_sub(1) {
            let step = &self.word.steps[j];
            let next = &self.word.steps[j + 1];
            let mut acc: BTreeMap<Vec<u16>, Poly> = BTreeMap::new();
            for (key, cur) in level {
                for (e, a) in step.decompose_left(&cur).into_iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let mut k = key.clone();
                    k.push(e as u16);
                    let v = &factors[j + 1] * &rho_pow(step.rank(), next.twist, &a);
                    let slot = acc.entry(k).or_insert_with(|| Poly::zero(v.nvars()));
                    *slot = &*slot + &v;
                }
            }
            level = acc.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        }
        for (k, c) in level {
            self.add_coeff(k, c);
        }
    }

    /// The pure tensors `(z^{e_1}, ..., c)` of the canonical terms.
    pub fn pure_terms(&self) -> Vec<Vec<Poly>> {
        let r = self.word.rank();
        self.terms
            .iter()
            .map(|(key, c)| {
                let mut f: Vec<Poly> = key
                    .iter()
                    .enumerate()
                    .map(|(j, &e)| Poly::x(r, self.word.steps[j].z).pow(e as u32))
                    .collect();
                f.push(c.clone());
                f
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.word, other.word, "adding elements of different words");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_coeff(k.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Left action of the top ring.
    pub fn left_mul(&self, a: &Poly) -> Self {
        let mut out = TensorElement::zero(self.word.clone());
        for (k, c) in &self.terms {
            out.add_coeff(k.clone(), c * a);
        }
        out
    }

    /// Right action of `R_lambda`.
    pub fn right_mul(&self, a: &Poly) -> Self {
        if self.word.is_empty() {
            return self.left_mul(a);
        }
        let a0 = self.word.steps[0].from_induced(a);
        let mut out = TensorElement::zero(self.word.clone());
        for mut f in self.pure_terms() {
            f[0] = &f[0] * &a0;
            out.add_pure(&f);
        }
        out
    }

    /// Multiplies the factor of letter `j` by `a` (which must lie in that letter's fine ring).
    pub fn mul_factor(&self, j: usize, a: &Poly) -> Self {
        let mut out = TensorElement::zero(self.word.clone());
        for mut f in self.pure_terms() {
            f[j] = &f[j] * a;
            out.add_pure(&f);
        }
        out
    }

    /// The `R_lambda` polynomial of an element of the empty word.
    pub fn scalar(&self) -> Option<Poly> {
        if !self.word.is_empty() {
            return None;
        }
        Some(self.terms.get(&Vec::new()).cloned().unwrap_or_else(|| Poly::zero(self.word.rank() + 1)))
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let e: Vec<String> = k.iter().rev().map(|x| x.to_string()).collect();
                format!("({})*[{}]", c, e.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;

    #[test]
    fn decompose_reconstructs() {
        let r = 4;
        let p = parse_poly(r, "x1^3*x4 + y*x2^2 + x1*x2*x3 + x1^4").unwrap();
        // p is symmetric in x2, x3 only after symmetrizing
        let p = &p + &swap(r, &p, 2, 3);
        let a = decompose(r, &p, (1, 3), 1);
        let mut back = Poly::zero(r + 1);
        for (e, c) in a.iter().enumerate() {
            assert_eq!(&swap(r, c, 1, 2), c);
            assert_eq!(&swap(r, c, 2, 3), c);
            back = &back + &(c * &Poly::x(r, 1).pow(e as u32));
        }
        assert_eq!(back, p);
    }

    #[test]
    fn letters_and_shapes() {
        let w = Word::new(4, &[1, 1, 1, 0], &[4, -4]).unwrap();
        assert_eq!(w.top(), vec![1, 1, 1, 0]);
        assert_eq!(w.steps[0].z, 3);
        assert_eq!(w.steps[1].z, 1);
        assert!(Word::new(4, &[0, 1, 1, 1], &[4]).is_err());
        assert_eq!(w.to_string(), "E-4E41_(1,1,1,0)");
    }

    #[test]
    fn canonical_form_moves_middle_coefficients() {
        let n = 4;
        let w = Word::new(n, &[1, 1, 1, 0], &[4, -4]).unwrap();
        let r = 3;
        // x1 + x2 + x3 is in the middle ring (0,1,1,1) and moves across with rho^{+1}
        let s = parse_poly(r, "x1 + x2 + x3").unwrap();
        let lhs = TensorElement::pure(&w, &[s.clone(), Poly::one(4)]);
        let rhs = TensorElement::pure(&w, &[Poly::one(4), rho_pow(r, 1, &s)]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn twist_weight_of_letters() {
        // sum x_i . e - e . sum x_i = t y e for a single twisted letter
        let r = 3;
        let s = parse_poly(r, "x1 + x2 + x3").unwrap();
        for (lam, l, t) in [(vec![1, 1, 1, 0], 4, -1), (vec![1, 1, 0, 1], -4, 1)] {
            let w = Word::new(4, &lam, &[l]).unwrap();
            let e = TensorElement::one(&w);
            let d = e.left_mul(&s).sub(&e.right_mul(&s));
            assert_eq!(d, e.left_mul(&Poly::y(r).scale(crate::arith::Rat::int(t))));
        }
    }
}
