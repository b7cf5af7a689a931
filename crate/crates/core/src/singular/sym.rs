//! Partial-invariant rings, elementary and complete symmetric functions, and the `rho`-power
//! ring isomorphisms between partial-invariant rings.

use crate::arith::{rho_pow, Poly, Rat};
use crate::error::{Error, Result};
use crate::report::Outcome;

/// Kind of a symmetric function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    /// Elementary `epsilon_p`.
    Elementary,
    /// Complete homogeneous `eta_p`.
    Complete,
}

/// `epsilon_p` or `eta_p` of a list of (possibly shifted) variables.
#[derive(Clone, Debug)]
pub struct SymFn {
    pub kind: SymKind,
    pub degree: i64,
    pub vars: Vec<Poly>,
}

impl SymFn {
    pub fn elementary(degree: i64, vars: Vec<Poly>) -> Self {
        SymFn { kind: SymKind::Elementary, degree, vars }
    }

    pub fn complete(degree: i64, vars: Vec<Poly>) -> Self {
        SymFn { kind: SymKind::Complete, degree, vars }
    }
}

/// Expands a symmetric function; negative degrees give 0. `nvars` is used for empty lists.
pub fn sym_eval(nvars: usize, f: &SymFn) -> Poly {
    match f.kind {
        SymKind::Elementary => elementary(nvars, f.degree, &f.vars),
        SymKind::Complete => complete(nvars, f.degree, &f.vars),
    }
}

/// `epsilon_p(vars)`.
pub fn elementary(nvars: usize, p: i64, vars: &[Poly]) -> Poly {
    if p < 0 || p as usize > vars.len() {
        return Poly::zero(nvars);
    }
    // e[k] = epsilon_k of the variables seen so far
    let mut e = vec![Poly::one(nvars)];
    for v in vars {
        e.push(Poly::zero(nvars));
        for k in (1..e.len()).rev() {
            e[k] = &e[k] + &(&e[k - 1] * v);
        }
    }
    e[p as usize].clone()
}

/// `eta_p(vars)`.
pub fn complete(nvars: usize, p: i64, vars: &[Poly]) -> Poly {
    if p < 0 {
        return Poly::zero(nvars);
    }
    if vars.is_empty() {
        return if p == 0 { Poly::one(nvars) } else { Poly::zero(nvars) };
    }
    // h[k] = eta_k of the variables seen so far
    let mut h = vec![Poly::zero(nvars); p as usize + 1];
    h[0] = Poly::one(nvars);
    for v in vars {
        for k in 1..h.len() {
            h[k] = &h[k] + &(&h[k - 1] * v);
        }
    }
    h[p as usize].clone()
}

/// The variables `x_a + s y, ..., x_b + s y` of `R` (rank `r`).
pub fn shifted_vars(r: usize, a: usize, b: usize, s: i64) -> Vec<Poly> {
    (a..=b).map(|i| &Poly::x(r, i) + &Poly::y(r).scale(Rat::int(s))).collect()
}

/// First variable index of every block of a composition.
pub fn block_starts(comp: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(comp.len());
    let mut k = 1;
    for &c in comp {
        out.push(k);
        k += c;
    }
    out
}

/// `R_{i_1...i_k}`: polynomials invariant under the parabolic subgroup `S_{i_1} x ... x S_{i_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialInvariantRing {
    pub composition: Vec<usize>,
}

impl PartialInvariantRing {
    pub fn new(composition: Vec<usize>) -> Self {
        PartialInvariantRing { composition }
    }

    pub fn rank(&self) -> usize {
        self.composition.iter().sum()
    }

    /// The variable ranges of the blocks, as `(first, len)`.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        block_starts(&self.composition).into_iter().zip(self.composition.iter().copied()).collect()
    }

    /// Invariance under every adjacent transposition inside a block.
    pub fn contains(&self, p: &Poly) -> bool {
        let r = self.rank();
        self.blocks().iter().all(|&(s, l)| (s..s + l.saturating_sub(1)).all(|a| &swap(r, p, a, a + 1) == p))
    }

    /// `y` followed by the elementary symmetric polynomials of each block.
    pub fn generators(&self) -> Vec<Poly> {
        let r = self.rank();
        let mut out = vec![Poly::y(r)];
        for (s, l) in self.blocks() {
            let vars: Vec<Poly> = (s..s + l).map(|i| Poly::x(r, i)).collect();
            out.extend((1..=l as i64).map(|p| elementary(r + 1, p, &vars)));
        }
        out
    }

    /// Sum over the parabolic subgroup.
    pub fn symmetrize(&self, p: &Poly) -> Poly {
        let r = self.rank();
        let mut acc = p.clone();
        for (s, l) in self.blocks() {
            for a in s..s + l {
                // acc <- sum over coset representatives moving position a into place
                let mut next = acc.clone();
                for b in s..a {
                    next = &next + &swap(r, &acc, b, a);
                }
                acc = next;
            }
        }
        acc
    }

    /// Writes an invariant polynomial as a polynomial in [`Self::generators`], returned as a
    /// polynomial in formal variables (slot `k` is generator `k`). `None` if `p` is not invariant.
    pub fn express(&self, p: &Poly) -> Option<Poly> {
        if !self.contains(p) {
            return None;
        }
        let r = self.rank();
        let gens = self.generators();
        let blocks = self.blocks();
        let mut rest = p.clone();
        let mut out = Poly::zero(gens.len());
        while let Some((m, &c)) = rest.lead() {
            let m = m.clone();
            let mut formal = vec![0u16; gens.len()];
            formal[0] = m[0];
            let mut slot = 1;
            for &(s, l) in &blocks {
                for j in 1..=l {
                    let here = m[s + j - 1];
                    let next = if j < l { m[s + j] } else { 0 };
                    if here < next {
                        return None;
                    }
                    formal[slot] = here - next;
                    slot += 1;
                }
            }
            let mut prod = Poly::one(r + 1);
            for (k, &e) in formal.iter().enumerate() {
                if e > 0 {
                    prod = &prod * &gens[k].pow(e as u32);
                }
            }
            let lc = prod.coeff(&m);
            rest = &rest - &prod.scale(c / lc);
            out = &out + &Poly::monomial(formal, c / lc);
        }
        Some(out)
    }
}

/// Exchanges `x_a` and `x_b`.
pub fn swap(r: usize, p: &Poly, a: usize, b: usize) -> Poly {
    if a == b {
        return p.clone();
    }
    let mut images: Vec<Poly> = (0..=r).map(|k| Poly::var(r + 1, k)).collect();
    images.swap(a, b);
    p.subst(&images)
}

/// `rho^{i_k}` applied to a polynomial of `R_{i_1...i_k}`; lands in `R_{i_k i_1...i_{k-1}}`.
pub fn rho_power_image(composition: &[usize], g: &Poly) -> Result<Poly> {
    let r: usize = composition.iter().sum();
    let last = *composition.last().ok_or_else(|| Error::InvalidParams("empty composition".into()))?;
    let ring = PartialInvariantRing::new(composition.to_vec());
    if g.nvars() != r + 1 || !ring.contains(g) {
        return Err(Error::InvalidParams("polynomial is not in the partial-invariant ring".into()));
    }
    Ok(rho_pow(r, last as i64, g))
}

/// The composition `(i_k, i_1, ..., i_{k-1})`.
pub fn rotate_right(composition: &[usize]) -> Vec<usize> {
    let mut c = composition.to_vec();
    c.rotate_right(1);
    c
}

/// `epsilon_p(x_1 - y, ..., x_m - y)` expanded as `sum_i (-1)^i C(m-p+i, i) y^i epsilon_{p-i}(x_1..x_m)`.
pub fn last_block_expansion(r: usize, m: usize, p: i64) -> Poly {
    let vars = shifted_vars(r, 1, m, 0);
    let mut acc = Poly::zero(r + 1);
    for i in 0..=p {
        let c = Rat::binom((m as i64 - p + i) as u64, i as u64) * Rat::int(if i % 2 == 0 { 1 } else { -1 });
        acc = &acc + &(&Poly::y(r).pow(i as u32) * &elementary(r + 1, p - i, &vars)).scale(c);
    }
    acc
}

/// `epsilon_{n-k}(a) = sum_i (-1)^i C(k+i, i) (s y)^i epsilon_{n-k-i}(a + s y)`, with `s = +-1`.
/// The variables `a_1..a_n` are slots `1..=n` and `y` is slot 0.
pub fn shifted_elementary_identity(n: usize, k: usize, s: i64) -> Result<bool> {
    if k > n || s.abs() != 1 {
        return Err(Error::InvalidParams(format!("need 0 <= k <= n and s = +-1, got n={}, k={}, s={}", n, k, s)));
    }
    let nv = n + 1;
    let a = shifted_vars(n, 1, n, 0);
    let shifted = shifted_vars(n, 1, n, s);
    let lhs = elementary(nv, (n - k) as i64, &a);
    let sy = Poly::y(n).scale(Rat::int(s));
    let mut rhs = Poly::zero(nv);
    for i in 0..=(n - k) {
        let c = Rat::binom((k + i) as u64, i as u64) * Rat::int(if i % 2 == 0 { 1 } else { -1 });
        let t = &sy.pow(i as u32) * &elementary(nv, (n - k - i) as i64, &shifted);
        rhs = &rhs + &t.scale(c);
    }
    Ok(lhs == rhs)
}

/// Ring-level checks for a composition `(i_1, ..., i_k)` of `r`: `rho^{i_k}` and `rho^{-i_1}` map
/// block generators into the rotated rings, inverse twists undo them, and the last block matches
/// the alternating expansion.
pub fn twist_ring_check(composition: &[usize]) -> Result<Vec<Outcome>> {
    if composition.is_empty() || composition.contains(&0) {
        return Err(Error::InvalidParams("composition must have positive parts".into()));
    }
    let r: usize = composition.iter().sum();
    let ring = PartialInvariantRing::new(composition.to_vec());
    let fwd = PartialInvariantRing::new(rotate_right(composition));
    let mut back_comp = composition.to_vec();
    back_comp.rotate_left(1);
    let back = PartialInvariantRing::new(back_comp);
    let first = composition[0] as i64;
    let last = *composition.last().unwrap() as i64;
    let tag = composition.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
    let mut out = Vec::new();
    for (gi, g) in ring.generators().iter().enumerate() {
        let up = rho_pow(r, last, g);
        let down = rho_pow(r, -first, g);
        let id = |what: &str| format!("twist({})[{}] {}", tag, gi, what);
        out.push(outcome(id("rho^ik lands"), fwd.contains(&up), &up));
        out.push(outcome(id("rho^-i1 lands"), back.contains(&down), &down));
        let u = rho_pow(r, -last, &up);
        out.push(outcome(id("inverse ik"), &u == g, &u));
        let d = rho_pow(r, first, &down);
        out.push(outcome(id("inverse i1"), &d == g, &d));
    }
    let (s, m) = ring.blocks()[composition.len() - 1];
    for p in 1..=m as i64 {
        let vars: Vec<Poly> = (s..s + m).map(|i| Poly::x(r, i)).collect();
        let img = rho_pow(r, last, &elementary(r + 1, p, &vars));
        let want = last_block_expansion(r, m, p);
        out.push(outcome(format!("twist({}) last-block e{}", tag, p), img == want, &img));
    }
    Ok(out)
}

fn outcome(id: String, ok: bool, p: &Poly) -> Outcome {
    if ok {
        Outcome::pass(id)
    } else {
        Outcome::fail(id, format!("got {}", p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;

    #[test]
    fn small_values() {
        let r = 3;
        let v = shifted_vars(r, 1, 3, 0);
        assert_eq!(elementary(4, 0, &v), Poly::one(4));
        assert_eq!(elementary(4, 2, &v), parse_poly(r, "x1*x2 + x1*x3 + x2*x3").unwrap());
        assert_eq!(elementary(4, 4, &v), Poly::zero(4));
        assert_eq!(complete(4, 2, &v[..2]), parse_poly(r, "x1^2 + x1*x2 + x2^2").unwrap());
        assert_eq!(complete(4, -1, &v), Poly::zero(4));
        assert_eq!(complete(4, 0, &[]), Poly::one(4));
    }

    #[test]
    fn lemma_small_cases() {
        for n in 0..=4 {
            for k in 0..=n {
                assert!(shifted_elementary_identity(n, k, 1).unwrap(), "n={} k={}", n, k);
                assert!(shifted_elementary_identity(n, k, -1).unwrap(), "n={} k={} minus", n, k);
            }
        }
        assert!(shifted_elementary_identity(2, 3, 1).is_err());
    }

    #[test]
    fn rho_images() {
        let r = 3;
        let img = rho_power_image(&[2, 1], &Poly::x(r, 3)).unwrap();
        assert_eq!(img, &Poly::x(r, 1) - &Poly::y(r));
        let e = elementary(4, 1, &shifted_vars(r, 1, 2, 0));
        assert_eq!(rho_power_image(&[2, 1], &e).unwrap(), elementary(4, 1, &shifted_vars(r, 2, 3, 0)));
        assert!(rho_power_image(&[2, 1], &Poly::x(r, 1)).is_err());
    }

    #[test]
    fn twist_checks() {
        for c in [vec![1, 1, 1], vec![2, 1], vec![1, 2], vec![3], vec![2, 2], vec![1, 3]] {
            for o in twist_ring_check(&c).unwrap() {
                assert!(o.pass, "{}", o);
            }
        }
    }

    #[test]
    fn generators_express_samples() {
        let ring = PartialInvariantRing::new(vec![2, 1]);
        let p = ring.symmetrize(&parse_poly(3, "x1^2*x3 + y*x2 + x1*x2^3").unwrap());
        assert!(ring.contains(&p));
        let f = ring.express(&p).unwrap();
        assert_eq!(f.subst(&ring.generators()), p);
        assert!(ring.express(&Poly::x(3, 1)).is_none());
    }
}
