//! Images of the color-`n` generating two-morphisms: cups, caps, crossings and dots.
//!
//! A two-letter element `x^{a1} (x) 1 (x) 1 (x) x^{a2}` has `x^{a1}` in the fine ring of the left
//! letter and `x^{a2}` in the induced ring of the right letter. Maps are extended to arbitrary
//! elements by splitting the outer factors over the outer rings.

use super::bimod::{Step, TensorElement, Word};
use super::sym::{complete, elementary, shifted_vars};
use crate::arith::{rho_pow, Poly, Rat};
use crate::error::{Error, Result};
use std::fmt;

/// Data available to a formula: rank, number of colors, the weight at the right and a second color.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub r: usize,
    pub n: usize,
    pub lam: Vec<usize>,
    /// The distant color of a crossing, 0 otherwise.
    pub j: usize,
}

impl Ctx {
    fn x(&self, i: usize) -> Poly {
        Poly::x(self.r, i)
    }

    fn y(&self) -> Poly {
        Poly::y(self.r)
    }

    /// `x_i + s y`.
    fn xs(&self, i: usize, s: i64) -> Poly {
        &self.x(i) + &self.y().scale(Rat::int(s))
    }

    fn k(&self, j: usize) -> usize {
        self.lam[..j].iter().sum()
    }

    fn one(&self) -> Poly {
        Poly::one(self.r + 1)
    }

    fn nv(&self) -> usize {
        self.r + 1
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn binom(n: u32, k: u32) -> Rat {
    Rat::binom(n as u64, k as u64)
}

/// A formula: exponents `(a1, a2)` to a sum of pure tensors, each listed from the right letter
/// (in its induced ring) to the left letter (in its fine ring). Caps give one polynomial.
pub type Formula = fn(&Ctx, u32, u32) -> Vec<Vec<Poly>>;

/// Which generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    /// `1_lambda -> E_{-n} E_n 1_lambda`.
    CupEF,
    /// `1_lambda -> E_n E_{-n} 1_lambda`.
    CupFE,
    /// `E_{-n} E_n 1_lambda -> 1_lambda`.
    CapEF,
    /// `E_n E_{-n} 1_lambda -> 1_lambda`.
    CapFE,
    /// Upward crossing of two `n` strands.
    CrossNNUp,
    /// Downward crossing of two `n` strands.
    CrossNNDown,
    /// Upward crossing, `n` at the bottom left and distant `j` at the bottom right.
    CrossUpNJ(usize),
    /// Upward crossing, distant `j` at the bottom left and `n` at the bottom right.
    CrossUpJN(usize),
    CrossDownNJ(usize),
    CrossDownJN(usize),
    /// Upward crossing, `1` at the bottom left and `n` at the bottom right.
    CrossUp1N,
    CrossDown1N,
    CrossUpN1,
    CrossDownN1,
    /// Upward crossing, `n` at the bottom left and `n-1` at the bottom right.
    CrossUpNM,
    CrossDownNM,
    CrossUpMN,
    CrossDownMN,
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Piece::*;
        match self {
            CupEF => write!(f, "cup-ef"),
            CupFE => write!(f, "cup-fe"),
            CapEF => write!(f, "cap-ef"),
            CapFE => write!(f, "cap-fe"),
            CrossNNUp => write!(f, "cross-nn-up"),
            CrossNNDown => write!(f, "cross-nn-down"),
            CrossUpNJ(j) => write!(f, "cross-up-n{}", j),
            CrossUpJN(j) => write!(f, "cross-up-{}n", j),
            CrossDownNJ(j) => write!(f, "cross-down-n{}", j),
            CrossDownJN(j) => write!(f, "cross-down-{}n", j),
            CrossUp1N => write!(f, "cross-up-1n"),
            CrossDown1N => write!(f, "cross-down-1n"),
            CrossUpN1 => write!(f, "cross-up-n1"),
            CrossDownN1 => write!(f, "cross-down-n1"),
            CrossUpNM => write!(f, "cross-up-n(n-1)"),
            CrossDownNM => write!(f, "cross-down-n(n-1)"),
            CrossUpMN => write!(f, "cross-up-(n-1)n"),
            CrossDownMN => write!(f, "cross-down-(n-1)n"),
        }
    }
}

/// A generator instantiated at a weight.
#[derive(Clone, Debug)]
pub struct LocalMap {
    pub piece: Piece,
    pub ctx: Ctx,
    /// Labels of the source and target words, in the order the letters act.
    pub src: Vec<i64>,
    pub tgt: Vec<i64>,
    /// Shift `{t}` attached to the target; an element of `M{t}` has degree lowered by `t`.
    pub extra_shift: i64,
    /// Degree from the generator table.
    pub expected_degree: i64,
    /// Displayed expressions for the same map.
    pub forms: Vec<Formula>,
}

impl LocalMap {
    pub fn new(piece: Piece, n: usize, lam: &[usize]) -> Result<Self> {
        use Piece::*;
        if lam.len() != n || n < 4 {
            return Err(Error::InvalidParams(format!("weight {:?} needs {} >= 4 parts", lam, n)));
        }
        let j = match piece {
            CrossUpNJ(j) | CrossUpJN(j) | CrossDownNJ(j) | CrossDownJN(j) => j,
            _ => 0,
        };
        let ctx = Ctx { r: lam.iter().sum(), n, lam: lam.to_vec(), j };
        let ni = n as i64;
        let lbar = lam[n - 1] as i64 - lam[0] as i64;
        let m = ni - 1;
        let distant = |j: usize| -> Result<i64> {
            if (2..=n - 2).contains(&j) {
                Ok(j as i64)
            } else {
                Err(Error::InvalidParams(format!("color {} is not distant from {}", j, n)))
            }
        };
        let (src, tgt, extra, deg, forms): (Vec<i64>, Vec<i64>, i64, i64, Vec<Formula>) = match piece {
            CupEF => (vec![], vec![ni, -ni], 0, 1 + lbar, vec![cup_ef_a, cup_ef_b]),
            CupFE => (vec![], vec![-ni, ni], 0, 1 - lbar, vec![cup_fe_a, cup_fe_b]),
            CapEF => (vec![ni, -ni], vec![], 0, 1 + lbar, vec![cap_ef_a, cap_ef_b]),
            CapFE => (vec![-ni, ni], vec![], 0, 1 - lbar, vec![cap_fe_a, cap_fe_b]),
            CrossNNUp => (vec![ni, ni], vec![ni, ni], 0, -2, vec![nn_up_a, nn_up_b]),
            CrossNNDown => (vec![-ni, -ni], vec![-ni, -ni], 0, -2, vec![nn_down_a, nn_down_b]),
            CrossUpNJ(j) => {
                let j = distant(j)?;
                (vec![j, ni], vec![ni, j], 0, 0, vec![up_nj])
            }
            CrossUpJN(j) => {
                let j = distant(j)?;
                (vec![ni, j], vec![j, ni], 0, 0, vec![up_jn])
            }
            CrossDownNJ(j) => {
                let j = distant(j)?;
                (vec![-j, -ni], vec![-ni, -j], 0, 0, vec![down_nj])
            }
            CrossDownJN(j) => {
                let j = distant(j)?;
                (vec![-ni, -j], vec![-j, -ni], 0, 0, vec![down_jn])
            }
            CrossUp1N => (vec![ni, 1], vec![1, ni], -1, 1, vec![up_1n_a, up_1n_b]),
            CrossDown1N => (vec![-ni, -1], vec![-1, -ni], -1, 1, vec![down_1n]),
            CrossUpN1 => (vec![1, ni], vec![ni, 1], 1, 1, vec![up_n1]),
            CrossDownN1 => (vec![-1, -ni], vec![-ni, -1], 1, 1, vec![down_n1_a, down_n1_b]),
            CrossUpNM => (vec![m, ni], vec![ni, m], -1, 1, vec![up_nm_a, up_nm_b]),
            CrossDownNM => (vec![-m, -ni], vec![-ni, -m], -1, 1, vec![down_nm]),
            CrossUpMN => (vec![ni, m], vec![m, ni], 1, 1, vec![up_mn]),
            CrossDownMN => (vec![-ni, -m], vec![-m, -ni], 1, 1, vec![down_mn_a, down_mn_b]),
        };
        let map = LocalMap { piece, ctx, src, tgt, extra_shift: extra, expected_degree: deg, forms };
        map.src_word()?;
        map.tgt_word()?;
        Ok(map)
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn lambda(&self) -> &[usize] {
        &self.ctx.lam
    }

    pub fn src_word(&self) -> Result<Word> {
        Word::new(self.ctx.n, &self.ctx.lam, &self.src)
    }

    pub fn tgt_word(&self) -> Result<Word> {
        Word::new(self.ctx.n, &self.ctx.lam, &self.tgt)
    }

    /// The formula's value as pure tensors of the target word, in fine-ring coordinates.
    pub fn raw(&self, form: usize, a1: u32, a2: u32) -> Result<Vec<Vec<Poly>>> {
        let tw = self.tgt_word()?;
        let vals = (self.forms[form])(&self.ctx, a1, a2);
        Ok(vals
            .into_iter()
            .map(|mut f| {
                if !tw.is_empty() {
                    f[0] = tw.steps[0].from_induced(&f[0]);
                }
                f
            })
            .collect())
    }

    /// The formula's value as a canonical element of the target word.
    pub fn value(&self, form: usize, a1: u32, a2: u32) -> Result<TensorElement> {
        let tw = self.tgt_word()?;
        let mut out = TensorElement::zero(tw);
        for f in self.raw(form, a1, a2)? {
            out.add_pure(&f);
        }
        Ok(out)
    }

    /// Evaluates the map on an arbitrary pure tensor `[f0, f1]` of the source word (`[]` for cups),
    /// by splitting `f1` over the top ring and `f0` over `R_lambda`.
    pub fn eval_pure(&self, form: usize, factors: &[Poly]) -> Result<TensorElement> {
        let sw = self.src_word()?;
        let tw = self.tgt_word()?;
        let mut out = TensorElement::zero(tw.clone());
        if sw.is_empty() {
            let p = factors.first().cloned().unwrap_or_else(|| self.ctx.one());
            let v = self.value(form, 0, 0)?;
            return Ok(v.right_mul(&p));
        }
        let lefts = sw.steps[1].decompose_left(&factors[1]);
        let b = rho_pow(self.ctx.r, -sw.steps[0].twist, &factors[0]);
        let rights = sw.steps[0].decompose_right(&b);
        for (a1, l) in lefts.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            for (a2, rr) in rights.iter().enumerate() {
                if rr.is_zero() {
                    continue;
                }
                let v = self.value(form, a1 as u32, a2 as u32)?;
                out = out.add(&v.left_mul(l).right_mul(rr));
            }
        }
        Ok(out)
    }
}

// cups

fn cup_ef_a(c: &Ctx, _: u32, _: u32) -> Vec<Vec<Poly>> {
    let ln = c.lam[c.n - 1] as i64;
    let vars = shifted_vars(c.r, c.r - ln as usize + 1, c.r, 1);
    (0..=ln)
        .map(|f| {
            let e = elementary(c.nv(), ln - f, &vars).scale(Rat::int(sign(ln - f)));
            vec![e, c.x(1).pow(f as u32)]
        })
        .collect()
}

fn cup_ef_b(c: &Ctx, _: u32, _: u32) -> Vec<Vec<Poly>> {
    let ln = c.lam[c.n - 1] as i64;
    let vars = shifted_vars(c.r, c.r - ln as usize + 1, c.r, 0);
    (0..=ln)
        .map(|f| {
            let e = elementary(c.nv(), ln - f, &vars).scale(Rat::int(sign(ln - f)));
            vec![e, c.xs(1, -1).pow(f as u32)]
        })
        .collect()
}

fn cup_fe_a(c: &Ctx, _: u32, _: u32) -> Vec<Vec<Poly>> {
    let l1 = c.lam[0] as i64;
    let vars = shifted_vars(c.r, 1, l1 as usize, 0);
    (0..=l1)
        .map(|f| {
            let e = elementary(c.nv(), l1 - f, &vars).scale(Rat::int(sign(l1) * sign(l1 - f)));
            vec![e, c.xs(c.r, 1).pow(f as u32)]
        })
        .collect()
}

fn cup_fe_b(c: &Ctx, _: u32, _: u32) -> Vec<Vec<Poly>> {
    let l1 = c.lam[0] as i64;
    let vars = shifted_vars(c.r, 1, l1 as usize, -1);
    (0..=l1)
        .map(|f| {
            let e = elementary(c.nv(), l1 - f, &vars).scale(Rat::int(sign(l1) * sign(l1 - f)));
            vec![e, c.x(c.r).pow(f as u32)]
        })
        .collect()
}

// caps

fn cap_ef_a(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    let l1 = c.lam[0] as i64;
    let vars = shifted_vars(c.r, 1, l1 as usize, 0);
    let h = complete(c.nv(), (a1 + a2) as i64 + 1 - l1, &vars);
    vec![vec![h.scale(Rat::int(sign(l1 + 1)))]]
}

fn cap_ef_b(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    let l1 = c.lam[0] as i64;
    let vars = shifted_vars(c.r, 1, l1 as usize, -1);
    let mut acc = Poly::zero(c.nv());
    for p in 0..=a1 {
        for q in 0..=a2 {
            let coef = binom(a1, p) * binom(a2, q);
            let t = &c.y().pow(a1 + a2 - p - q) * &complete(c.nv(), (p + q) as i64 + 1 - l1, &vars);
            acc = &acc + &t.scale(coef);
        }
    }
    vec![vec![acc.scale(Rat::int(sign(l1 + 1)))]]
}

/// The first expression for `cap-fe`, with the index of `eta` read as `p + q + 1 - lambda_n`.
fn cap_fe_a(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    cap_fe_first(c, a1, a2, false)
}

/// The first expression for `cap-fe` exactly as displayed, with index `a1 + a2 + 1 - lambda_n`.
pub fn cap_fe_displayed(c: &Ctx, a1: u32, a2: u32) -> Poly {
    cap_fe_first(c, a1, a2, true)[0][0].clone()
}

fn cap_fe_first(c: &Ctx, a1: u32, a2: u32, displayed: bool) -> Vec<Vec<Poly>> {
    let ln = c.lam[c.n - 1] as i64;
    let vars = shifted_vars(c.r, c.r - ln as usize + 1, c.r, 1);
    let mut acc = Poly::zero(c.nv());
    for p in 0..=a1 {
        for q in 0..=a2 {
            let coef = binom(a1, p) * binom(a2, q) * Rat::int(sign((a1 + a2 - p - q) as i64));
            let idx = if displayed { a1 + a2 } else { p + q } as i64 + 1 - ln;
            let t = &c.y().pow(a1 + a2 - p - q) * &complete(c.nv(), idx, &vars);
            acc = &acc + &t.scale(coef);
        }
    }
    vec![vec![acc]]
}

fn cap_fe_b(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    let ln = c.lam[c.n - 1] as i64;
    let vars = shifted_vars(c.r, c.r - ln as usize + 1, c.r, 0);
    vec![vec![complete(c.nv(), (a1 + a2) as i64 + 1 - ln, &vars)]]
}

// crossings of two n strands

fn nn_up_a(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    let (x1, xr, xry, y) = (c.x(1), c.x(c.r), c.xs(c.r, 1), c.y());
    let mut out = Vec::new();
    for p in 0..=a1 {
        for f in 0..p {
            let coef = binom(a1, p) * Rat::int(sign((a1 - p) as i64));
            let left = (&(&xry.pow(a2) * &y.pow(a1 - p)) * &xry.pow(p - 1 - f)).scale(coef);
            out.push(vec![x1.pow(f), left]);
        }
    }
    for g in 0..a2 {
        let left = -&(&xr.pow(a1) * &xry.pow(a2 - 1 - g));
        out.push(vec![x1.pow(g), left]);
    }
    out
}

fn nn_up_b(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    let (x1y, xr, xry, y) = (c.xs(1, -1), c.x(c.r), c.xs(c.r, 1), c.y());
    let mut out = Vec::new();
    for f in 0..a1 {
        out.push(vec![x1y.pow(f), &xry.pow(a2) * &xr.pow(a1 - 1 - f)]);
    }
    for q in 0..=a2 {
        for g in 0..q {
            let left = (&(&xr.pow(a1) * &y.pow(a2 - q)) * &xr.pow(q - 1 - g)).scale(-binom(a2, q));
            out.push(vec![x1y.pow(g), left]);
        }
    }
    out
}

fn nn_down_a(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    let (x1, x1y, xry, y) = (c.x(1), c.xs(1, -1), c.xs(c.r, 1), c.y());
    let mut out = Vec::new();
    for p in 0..=a2 {
        for f in 0..p {
            let coef = binom(a2, p) * Rat::int(sign((a2 - p) as i64));
            let left = (&(&x1.pow(a1) * &y.pow(a2 - p)) * &x1.pow(p - 1 - f)).scale(coef);
            out.push(vec![xry.pow(f), left]);
        }
    }
    for g in 0..a1 {
        let left = -&(&x1y.pow(a2) * &x1.pow(a1 - 1 - g));
        out.push(vec![xry.pow(g), left]);
    }
    out
}

fn nn_down_b(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    let (x1, x1y, xr, y) = (c.x(1), c.xs(1, -1), c.x(c.r), c.y());
    let mut out = Vec::new();
    for f in 0..a2 {
        out.push(vec![xr.pow(f), &x1.pow(a1) * &x1y.pow(a2 - 1 - f)]);
    }
    for q in 0..=a1 {
        for g in 0..q {
            let left = (&(&x1y.pow(a2) * &y.pow(a1 - q)) * &x1y.pow(q - 1 - g)).scale(-binom(a1, q));
            out.push(vec![xr.pow(g), left]);
        }
    }
    out
}

// crossings with a distant color j

fn up_nj(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    vec![vec![c.xs(1, -1).pow(a1), c.x(c.k(c.j)).pow(a2)]]
}

fn up_jn(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    vec![vec![c.x(c.k(c.j) + 1).pow(a1), c.xs(c.r, 1).pow(a2)]]
}

fn down_nj(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    vec![vec![c.xs(c.r, 1).pow(a1), c.x(c.k(c.j) + 1).pow(a2)]]
}

fn down_jn(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    vec![vec![c.x(c.k(c.j)).pow(a1), c.xs(1, -1).pow(a2)]]
}

// crossings with color 1

fn up_1n_a(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    let (x, xry) = (c.x(c.lam[0] + 1), c.xs(c.r, 1));
    vec![vec![x.pow(a1 + 1), xry.pow(a2)], vec![-&x.pow(a1), xry.pow(a2 + 1)]]
}

fn up_1n_b(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    let l = c.lam[0] + 1;
    let (x, xy, xr, xry) = (c.x(l), c.xs(l, -1), c.x(c.r), c.xs(c.r, 1));
    vec![vec![&x.pow(a1) * &xy, xry.pow(a2)], vec![-&x.pow(a1), &xr * &xry.pow(a2)]]
}

fn down_1n(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    vec![vec![c.x(c.lam[0]).pow(a1), c.xs(1, -1).pow(a2)]]
}

fn up_n1(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    vec![vec![c.xs(1, -1).pow(a1), c.x(c.lam[0]).pow(a2)]]
}

fn down_n1_a(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    let (x, xry) = (c.x(c.lam[0] + 1), c.xs(c.r, 1));
    vec![vec![xry.pow(a1), x.pow(a2 + 1)], vec![-&xry.pow(a1 + 1), x.pow(a2)]]
}

fn down_n1_b(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    let l = c.lam[0] + 1;
    let (x, xy, xr, xry) = (c.x(l), c.xs(l, -1), c.x(c.r), c.xs(c.r, 1));
    vec![vec![xry.pow(a1), &x.pow(a2) * &xy], vec![-&(&xr * &xry.pow(a1)), x.pow(a2)]]
}

// crossings with color n-1; X = x_{r - lambda_n}, X' = x_{r - lambda_n + 1}

fn big_x(c: &Ctx) -> usize {
    c.r - c.lam[c.n - 1]
}

/// The `(n, n-1)` upward crossing. The expressions as displayed carry `(X + y)^{a2}` where the
/// map is only well defined with `X^{a2}`; `displayed` keeps the printed version.
pub fn up_nm_variant(c: &Ctx, a1: u32, a2: u32, form: usize, displayed: bool) -> Vec<Vec<Poly>> {
    let (x, xy, x1y) = (c.x(big_x(c)), c.xs(big_x(c), 1), c.xs(1, -1));
    let lead = if displayed { xy.pow(a2) } else { x.pow(a2) };
    let u = x1y.pow(a1);
    if form == 0 {
        vec![vec![&u * &c.x(1), lead], vec![-&u, &xy * &x.pow(a2)]]
    } else {
        vec![vec![x1y.pow(a1 + 1), lead], vec![-&u, x.pow(a2 + 1)]]
    }
}

fn up_nm_a(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    up_nm_variant(c, a1, a2, 0, false)
}

fn up_nm_b(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    up_nm_variant(c, a1, a2, 1, false)
}

fn down_nm(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    vec![vec![c.xs(c.r, 1).pow(a1), c.x(big_x(c) + 1).pow(a2)]]
}

fn up_mn(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    vec![vec![c.x(big_x(c) + 1).pow(a1), c.xs(c.r, 1).pow(a2)]]
}

/// The `(n, n-1)` downward crossing, with the same correction as [`up_nm_variant`].
pub fn down_mn_variant(c: &Ctx, a1: u32, a2: u32, form: usize, displayed: bool) -> Vec<Vec<Poly>> {
    let (x, xy, x1y) = (c.x(big_x(c)), c.xs(big_x(c), 1), c.xs(1, -1));
    let lead = if displayed { xy.pow(a1) } else { x.pow(a1) };
    let u = x1y.pow(a2);
    if form == 0 {
        vec![vec![lead, &u * &c.x(1)], vec![-&(&xy * &x.pow(a1)), u]]
    } else {
        vec![vec![lead, x1y.pow(a2 + 1)], vec![-&x.pow(a1 + 1), u]]
    }
}

fn down_mn_a(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    down_mn_variant(c, a1, a2, 0, false)
}

fn down_mn_b(c: &Ctx, a1: u32, a2: u32) -> Vec<Vec<Poly>> {
    down_mn_variant(c, a1, a2, 1, false)
}

/// The dot on letter `j`: `x_r` on `E_n`, `x_1 - y` on `E_{-n}`, the singleton on other colors.
pub fn dot_poly(step: &Step, n: usize) -> Poly {
    let r = step.rank();
    if step.label == -(n as i64) {
        &Poly::x(r, step.z) - &Poly::y(r)
    } else {
        Poly::x(r, step.z)
    }
}

/// Applies `dots` dots on letter `j`.
pub fn apply_dots(e: &TensorElement, j: usize, dots: u32) -> TensorElement {
    let p = dot_poly(&e.word.steps[j], e.word.n).pow(dots);
    e.mul_factor(j, &p)
}

/// Applies a local map to the letters `pos..pos + src.len()` of `e`.
pub fn apply_local(e: &TensorElement, pos: usize, map: &LocalMap, form: usize) -> Result<TensorElement> {
    let w = &e.word;
    let len = map.src.len();
    if pos + len > w.len() || w.labels()[pos..pos + len] != map.src[..] || w.weight_after(pos) != map.ctx.lam {
        return Err(Error::Mismatch(format!("{} at {:?} does not apply to {} at position {}", map.piece, map.ctx.lam, w, pos)));
    }
    let mut labels = w.labels();
    labels.splice(pos..pos + len, map.tgt.iter().copied());
    let nw = Word::new(w.n, &w.lambda, &labels)?;
    let mut out = TensorElement::zero(nw.clone());
    let one = map.ctx.one();
    for f in e.pure_terms() {
        let (right, rest) = if w.is_empty() { (vec![], vec![]) } else { (f[..pos].to_vec(), f[pos + len..].to_vec()) };
        let local: Vec<Poly> = if w.is_empty() { vec![] } else { f[pos..pos + len].to_vec() };
        let value = if len == 0 {
            let v = map.eval_pure(form, &[])?;
            if w.is_empty() {
                v.right_mul(&f[0])
            } else {
                v
            }
        } else {
            map.eval_pure(form, &local)?
        };
        for g in value.pure_terms() {
            let mut full = right.clone();
            if map.tgt.is_empty() {
                let p = &g[0];
                if let Some(last) = full.last_mut() {
                    *last = &*last * p;
                    full.extend(rest.iter().cloned());
                } else if let Some(first) = rest.first() {
                    full.push(first * &nw.steps[pos].from_induced(p));
                    full.extend(rest[1..].iter().cloned());
                } else {
                    full.push(p.clone());
                }
            } else {
                full.extend(g);
                full.extend(rest.iter().cloned());
            }
            if full.is_empty() {
                full.push(one.clone());
            }
            out.add_pure(&full);
        }
    }
    Ok(out)
}
