//! The extended affine Weyl group of type `A_{r-1}` as window-periodic bijections of `Z`.

use crate::arith::{periodic_index, window_images, Poly};
use crate::error::{parse_err, Error, Result};
use std::fmt;

/// A bijection `f: Z -> Z` with `f(i + r) = f(i) + r`, stored as `[f(1), ..., f(r)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

/// Generators of the extended affine Weyl group (and letters of extended braid words).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    /// `s_i`, `1 <= i <= r`.
    S(usize),
    /// The length-zero rotation `rho`.
    Rho,
    /// The translation `t_{e_j}`.
    T(usize),
}

/// A generator with exponent `+1` or `-1`.
pub type Letter = (Gen, i32);

/// A level-zero weight `(kappa, 0, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GlWeight {
    pub kappa: Vec<i64>,
    pub m: i64,
}

impl GlWeight {
    pub fn new(kappa: Vec<i64>, m: i64) -> Self {
        GlWeight { kappa, m }
    }

    /// `(e_j, 0, m)`.
    pub fn unit(r: usize, j: usize, m: i64) -> Self {
        let mut kappa = vec![0; r];
        kappa[j - 1] = 1;
        GlWeight { kappa, m }
    }
}

impl AffinePermutation {
    pub fn identity(r: usize) -> Self {
        AffinePermutation { window: (1..=r as i64).collect() }
    }

    /// Validates that the residues of the window form a permutation of `1..=r`.
    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let r = window.len();
        if r == 0 {
            return Err(Error::InvalidParams("empty window".into()));
        }
        let mut seen = vec![false; r];
        for &a in &window {
            let (j, _) = periodic_index(r, a);
            if seen[j - 1] {
                return Err(Error::InvalidParams(format!("window {:?} is not a bijection", window)));
            }
            seen[j - 1] = true;
        }
        Ok(AffinePermutation { window })
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn from_generator(r: usize, g: Gen) -> Result<Self> {
        let check = |i: usize| {
            if (1..=r).contains(&i) {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange { index: i as i64, max: r as i64 })
            }
        };
        let mut w: Vec<i64> = (1..=r as i64).collect();
        match g {
            Gen::S(i) => {
                check(i)?;
                w = crate::arith::reflection_window(r, i);
            }
            Gen::Rho => {
                for x in w.iter_mut() {
                    *x += 1;
                }
            }
            Gen::T(j) => {
                check(j)?;
                w[j - 1] += r as i64;
            }
        }
        Ok(AffinePermutation { window: w })
    }

    pub fn from_letter(r: usize, (g, e): Letter) -> Result<Self> {
        let p = Self::from_generator(r, g)?;
        Ok(if e < 0 { p.inverse() } else { p })
    }

    /// The product of a word, composed left to right.
    pub fn from_word(r: usize, word: &[Letter]) -> Result<Self> {
        let mut acc = Self::identity(r);
        for &l in word {
            acc = acc.compose(&Self::from_letter(r, l)?)?;
        }
        Ok(acc)
    }

    pub fn rho_pow(r: usize, k: i64) -> Self {
        AffinePermutation { window: (1..=r as i64).map(|j| j + k).collect() }
    }

    /// `f(a)` for any integer `a`.
    pub fn eval(&self, a: i64) -> i64 {
        let r = self.rank() as i64;
        let (j, m) = periodic_index(self.rank(), a);
        self.window[j - 1] - m * r
    }

    /// `(u v)(x) = u(v(x))`.
    pub fn compose(&self, v: &AffinePermutation) -> Result<Self> {
        if self.rank() != v.rank() {
            return Err(Error::RankMismatch(self.rank(), v.rank()));
        }
        Ok(self.compose_unchecked(v))
    }

    fn compose_unchecked(&self, v: &AffinePermutation) -> Self {
        AffinePermutation { window: v.window.iter().map(|&a| self.eval(a)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let r = self.rank();
        let mut w = vec![0; r];
        for (i, &a) in self.window.iter().enumerate() {
            let (j, m) = periodic_index(r, a);
            w[j - 1] = i as i64 + 1 + m * r as i64;
        }
        AffinePermutation { window: w }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &a)| a == i as i64 + 1)
    }

    /// The exponent `k` of `rho` in `w = rho^k w'`.
    pub fn rho_power(&self) -> i64 {
        let r = self.rank() as i64;
        let s: i64 = self.window.iter().sum();
        (s - r * (r + 1) / 2) / r
    }

    /// Number of affine inversions.
    pub fn length(&self) -> usize {
        let r = self.rank();
        let mut l = 0;
        for i in 0..r {
            for j in i + 1..r {
                l += (self.window[j] - self.window[i]).div_euclid(r as i64).unsigned_abs() as usize;
            }
        }
        l
    }

    /// `w s_i < w`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.eval(i as i64) > self.eval(i as i64 + 1)
    }

    /// `s_i w < w`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    /// `w s_i`.
    pub fn mul_simple(&self, i: usize) -> Self {
        let r = self.rank();
        let mut w = self.window.clone();
        if i < r {
            w.swap(i - 1, i);
        } else {
            let a = w[r - 1];
            w[r - 1] = w[0] + r as i64;
            w[0] = a - r as i64;
        }
        AffinePermutation { window: w }
    }

    /// `s_i w`.
    pub fn simple_mul(&self, i: usize) -> Self {
        self.inverse().mul_simple(i).inverse()
    }

    /// `w = rho^k s_{i_1} ... s_{i_l}` with a reduced word, found by peeling right descents.
    pub fn normal_form(&self) -> (i64, Vec<usize>) {
        let r = self.rank();
        let mut w = self.clone();
        let mut peeled = Vec::new();
        'outer: loop {
            for i in 1..=r {
                if w.has_right_descent(i) {
                    w = w.mul_simple(i);
                    peeled.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        debug_assert_eq!(w, AffinePermutation::rho_pow(r, self.rho_power()));
        peeled.reverse();
        (self.rho_power(), peeled)
    }

    /// Action on level-zero weights: `(e_j, m)` corresponds to the integer `j - m r`.
    pub fn act_weight(&self, wt: &GlWeight) -> GlWeight {
        let r = self.rank();
        let mut kappa = vec![0; r];
        let mut m = wt.m;
        for (j, &k) in wt.kappa.iter().enumerate() {
            let (jj, mm) = periodic_index(r, self.window[j]);
            kappa[jj - 1] += k;
            m += k * mm;
        }
        GlWeight { kappa, m }
    }

    /// Action on `Q[y][x_1..x_r]`: `x_i -> x_{f(i)}` with `x_{a+r} = x_a - y`.
    pub fn act_poly(&self, p: &Poly) -> Poly {
        p.subst(&window_images(&self.window))
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Formats a word in the CLI syntax.
pub fn format_word(word: &[Letter]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter()
        .map(|&(g, e)| {
            let base = match g {
                Gen::S(i) => format!("s{}", i),
                Gen::Rho => "rho".into(),
                Gen::T(j) => format!("t{}", j),
            };
            if e < 0 {
                format!("{}^-1", base)
            } else {
                base
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a whitespace-separated word over `rho`, `rho^-1`, `s1..sr`, `t1..tr`
/// (any letter may carry `^-1`; `e` denotes the empty word).
pub fn parse_word(r: usize, s: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for tok in s.split_whitespace() {
        let pos = s[offset..].find(tok).map(|p| p + offset).unwrap_or(offset);
        offset = pos + tok.len();
        if tok == "e" {
            continue;
        }
        let (base, e) = match tok.strip_suffix("^-1") {
            Some(b) => (b, -1),
            None => match tok.strip_suffix("^1") {
                Some(b) => (b, 1),
                None => (tok, 1),
            },
        };
        let g = if base == "rho" {
            Gen::Rho
        } else if let Some(ix) = base.strip_prefix('s') {
            Gen::S(parse_index(ix, r, pos)?)
        } else if let Some(ix) = base.strip_prefix('t') {
            Gen::T(parse_index(ix, r, pos)?)
        } else {
            return parse_err(pos, format!("unknown generator '{}'", tok));
        };
        out.push((g, e));
    }
    Ok(out)
}

fn parse_index(ix: &str, r: usize, pos: usize) -> Result<usize> {
    match ix.parse::<usize>() {
        Ok(i) if (1..=r).contains(&i) => Ok(i),
        _ => parse_err(pos, format!("index '{}' not in 1..={}", ix, r)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(r: usize, x: Gen) -> AffinePermutation {
        AffinePermutation::from_generator(r, x).unwrap()
    }

    fn prod(r: usize, xs: &[Gen]) -> AffinePermutation {
        xs.iter().fold(AffinePermutation::identity(r), |acc, &x| acc.compose(&g(r, x)).unwrap())
    }

    #[test]
    fn presentation_relations() {
        for r in 3..=5 {
            for i in 1..=r {
                assert!(prod(r, &[Gen::S(i), Gen::S(i)]).is_identity());
                let j = i % r + 1;
                let lhs = prod(r, &[Gen::Rho, Gen::S(i)]).compose(&g(r, Gen::Rho).inverse()).unwrap();
                assert_eq!(lhs, g(r, Gen::S(j)));
                assert_eq!(prod(r, &[Gen::S(i), Gen::S(j), Gen::S(i)]), prod(r, &[Gen::S(j), Gen::S(i), Gen::S(j)]));
            }
        }
        assert_eq!(prod(5, &[Gen::S(1), Gen::S(3)]), prod(5, &[Gen::S(3), Gen::S(1)]));
    }

    #[test]
    fn rho_from_translation() {
        for r in 3..=5 {
            let mut xs = vec![Gen::T(1)];
            xs.extend((1..r).map(Gen::S));
            assert_eq!(prod(r, &xs), g(r, Gen::Rho));
        }
    }

    #[test]
    fn normal_forms() {
        let r = 4;
        assert_eq!(AffinePermutation::identity(r).normal_form(), (0, vec![]));
        assert_eq!(g(r, Gen::Rho).normal_form(), (1, vec![]));
        assert_eq!(g(r, Gen::T(1)).normal_form(), (1, vec![3, 2, 1]));
        assert_eq!(prod(3, &[Gen::S(1), Gen::S(2), Gen::S(1)]).length(), 3);
    }

    #[test]
    fn weight_action() {
        let r = 3;
        let w = g(r, Gen::S(r)).act_weight(&GlWeight::unit(r, 1, 5));
        assert_eq!(w, GlWeight::unit(r, r, 6));
        let k = GlWeight::new(vec![2, -1, 4], 7);
        assert_eq!(g(r, Gen::T(2)).act_weight(&k), GlWeight::new(vec![2, -1, 4], 8));
        assert_eq!(g(r, Gen::Rho).act_weight(&k), GlWeight::new(vec![4, 2, -1], 3));
    }

    #[test]
    fn poly_action() {
        let r = 3;
        assert_eq!(g(r, Gen::Rho).act_poly(&Poly::x(r, r)), &Poly::x(r, 1) - &Poly::y(r));
        assert_eq!(g(r, Gen::S(r)).act_poly(&Poly::x(r, 1)), &Poly::x(r, r) + &Poly::y(r));
        assert_eq!(g(r, Gen::T(2)).act_poly(&Poly::x(r, 2)), &Poly::x(r, 2) - &Poly::y(r));
    }

    #[test]
    fn word_parsing() {
        let w = parse_word(3, "rho s1 rho^-1 t2").unwrap();
        assert_eq!(w, vec![(Gen::Rho, 1), (Gen::S(1), 1), (Gen::Rho, -1), (Gen::T(2), 1)]);
        assert_eq!(parse_word(3, &format_word(&w)).unwrap(), w);
        assert!(parse_word(3, "s4").is_err());
    }
}
