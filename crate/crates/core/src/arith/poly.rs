//! Sparse polynomials over `Q` in the variables `y, x_1, ..., x_r` (all of degree 2).

use super::rat::Rat;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector: slot 0 is `y`, slot `k` is `x_k`.
pub type Mono = Vec<u16>;

/// A polynomial in `nvars` variables. For the ring `R = Q[y][x_1..x_r]`, `nvars = r + 1`.
///
/// Terms are keyed by exponent vectors in lexicographic order on `(y, x_1, ..., x_r)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rat::one())
    }

    pub fn int(nvars: usize, n: i64) -> Self {
        Poly::constant(nvars, Rat::int(n))
    }

    /// The variable in slot `k`.
    pub fn var(nvars: usize, k: usize) -> Self {
        assert!(k < nvars, "variable slot out of range");
        let mut m = vec![0; nvars];
        m[k] = 1;
        Poly::monomial(m, Rat::one())
    }

    pub fn monomial(m: Mono, c: Rat) -> Self {
        let nvars = m.len();
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// `y` in `Q[y][x_1..x_r]`.
    pub fn y(r: usize) -> Self {
        Poly::var(r + 1, 0)
    }

    /// `x_i` for `1 <= i <= r`.
    pub fn x(r: usize, i: usize) -> Self {
        assert!((1..=r).contains(&i), "x index out of range");
        Poly::var(r + 1, i)
    }

    /// The periodic variable `x_a`, `a` any integer, with `x_{a+r} = x_a - y`.
    pub fn xp(r: usize, a: i64) -> Self {
        let (j, m) = periodic_index(r, a);
        &Poly::x(r, j) + &Poly::y(r).scale(Rat::int(m))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of `x` variables when viewed as an element of `Q[y][x_1..x_r]`.
    pub fn rank(&self) -> usize {
        self.nvars - 1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u16]) -> Rat {
        self.terms.get(m).copied().unwrap_or_else(Rat::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rat {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    /// Leading term in lexicographic order.
    pub fn lead(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = *o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: Rat) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, &v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_mono(&self, m: &[u16], c: Rat) -> Self {
        let mut out = Poly::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (k, &v) in &self.terms {
            let nm: Mono = k.iter().zip(m).map(|(a, b)| a + b).collect();
            out.terms.insert(nm, v * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Degree with `deg(y) = deg(x_k) = 2`; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(mono_degree).max()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().map(mono_degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous(&self, d: i64) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| mono_degree(m) == d).map(|(m, &c)| (m.clone(), c)).collect(),
        }
    }

    /// Ring homomorphism sending slot `k` to `images[k]`.
    pub fn subst(&self, images: &[Poly]) -> Self {
        assert_eq!(images.len(), self.nvars, "substitution arity");
        let out_n = images.first().map(|p| p.nvars).unwrap_or(self.nvars);
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(p.nvars), p.clone()]).collect();
        let mut out = Poly::zero(out_n);
        for (m, &c) in &self.terms {
            let mut t = Poly::constant(out_n, c);
            for (k, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[k].len() <= e as usize {
                    let next = powers[k].last().unwrap() * &images[k];
                    powers[k].push(next);
                }
                t = &t * &powers[k][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Reinterprets the polynomial in a ring with `n >= nvars` variables (new slots appended).
    pub fn extend(&self, n: usize) -> Self {
        assert!(n >= self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| {
                let mut nm = m.clone();
                nm.resize(n, 0);
                (nm, c)
            })
            .collect();
        Poly { nvars: n, terms }
    }

    /// Drops trailing slots, which must not occur.
    pub fn truncate(&self, n: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| {
                assert!(m[n..].iter().all(|&e| e == 0), "truncating a used variable");
                (m[..n].to_vec(), c)
            })
            .collect();
        Poly { nvars: n, terms }
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.lead().expect("division by zero polynomial");
        let (dm, dc) = (dm.clone(), *dc);
        let mut rem = self.clone();
        let mut quo = Poly::zero(self.nvars);
        while let Some((lm, lc)) = rem.lead() {
            if lm.iter().zip(&dm).any(|(a, b)| a < b) {
                return None;
            }
            let qm: Mono = lm.iter().zip(&dm).map(|(a, b)| a - b).collect();
            let qc = *lc / dc;
            rem = &rem - &d.mul_mono(&qm, qc);
            quo.add_term(qm, qc);
        }
        Some(quo)
    }

    /// Collects the polynomial by powers of the variable in `slot`: `self = sum_k z^k c_k`.
    pub fn coefficients_in(&self, slot: usize) -> BTreeMap<u16, Poly> {
        let mut out: BTreeMap<u16, Poly> = BTreeMap::new();
        for (m, &c) in &self.terms {
            let mut nm = m.clone();
            let e = nm[slot];
            nm[slot] = 0;
            out.entry(e).or_insert_with(|| Poly::zero(self.nvars)).add_term(nm, c);
        }
        out
    }

    /// Highest exponent of the variable in `slot`.
    pub fn degree_in(&self, slot: usize) -> u16 {
        self.terms.keys().map(|m| m[slot]).max().unwrap_or(0)
    }
}

/// Splits an integer index `a` as `a = j - m r` with `1 <= j <= r`, returning `(j, m)`.
pub fn periodic_index(r: usize, a: i64) -> (usize, i64) {
    let r = r as i64;
    let j = (a - 1).rem_euclid(r) + 1;
    let m = (j - a) / r;
    (j as usize, m)
}

fn mono_degree(m: &Mono) -> i64 {
    2 * m.iter().map(|&e| e as i64).sum::<i64>()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars, "polynomial ring mismatch");
        let (big, small) = if self.terms.len() >= o.terms.len() { (self, o) } else { (o, self) };
        let mut out = big.clone();
        for (m, &c) in &small.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars, "polynomial ring mismatch");
        let mut out = self.clone();
        for (m, &c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars, "polynomial ring mismatch");
        let mut out = Poly::zero(self.nvars);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &o.terms {
                let m: Mono = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(-Rat::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut factors = Vec::new();
            for (k, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if k == 0 { "y".to_string() } else { format!("x{}", k) };
                factors.push(if e == 1 { name } else { format!("{}^{}", name, e) });
            }
            if factors.is_empty() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", a, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periodic_variables() {
        assert_eq!(periodic_index(3, 4), (1, -1));
        assert_eq!(periodic_index(3, 0), (3, 1));
        assert_eq!(periodic_index(3, 3), (3, 0));
        let r = 3;
        assert_eq!(Poly::xp(r, 4), &Poly::x(r, 1) - &Poly::y(r));
        assert_eq!(Poly::xp(r, 0), &Poly::x(r, 3) + &Poly::y(r));
    }

    #[test]
    fn exact_division() {
        let r = 2;
        let a = &Poly::x(r, 1) + &Poly::y(r);
        let b = &Poly::x(r, 2) - &Poly::x(r, 1);
        let p = &a * &b;
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(Poly::x(r, 1).div_exact(&b), None);
    }

    #[test]
    fn homogeneous_parts() {
        let r = 2;
        let p = &(&Poly::x(r, 1) * &Poly::y(r)) + &Poly::int(r + 1, 3);
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.homogeneous(0), Poly::int(r + 1, 3));
        assert!(!p.is_homogeneous());
    }
}
