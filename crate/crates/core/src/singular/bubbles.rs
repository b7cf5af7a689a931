//! Color-`n` bubbles as cap o dots o cup, and the images of the degree-two generators of
//! `END(1_r)` in `Q[y, x_1, ..., x_r]`.

use super::bimod::{TensorElement, Word};
use super::checks::compositions;
use super::fprime::{apply_dots, apply_local, LocalMap, Piece};
use crate::arith::Poly;
use crate::error::{Error, Result};
use crate::report::Outcome;
use crate::soergel::{apply_morphism, BimElement, Generator, MorphismExpr, SoergelObject};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cw" | "clockwise" => Ok(Orientation::Clockwise),
            "ccw" | "counterclockwise" => Ok(Orientation::CounterClockwise),
            _ => Err(Error::Unknown { kind: "orientation", name: s.to_string() }),
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Clockwise => write!(f, "cw"),
            Orientation::CounterClockwise => write!(f, "ccw"),
        }
    }
}

/// `lambda_n - lambda_1`.
fn lbar(lam: &[usize]) -> i64 {
    lam[lam.len() - 1] as i64 - lam[0] as i64
}

/// Degree of the bubble with `m` dots.
pub fn bubble_degree(lam: &[usize], o: Orientation, m: u32) -> i64 {
    match o {
        Orientation::Clockwise => 2 * (m as i64 + 1 - lbar(lam)),
        Orientation::CounterClockwise => 2 * (m as i64 + 1 + lbar(lam)),
    }
}

/// The color-`n` bubble with `m` dots in the region `lambda`. The counter-clockwise bubble is
/// `cap-ef o dots o cup-ef`, the clockwise one `cap-fe o dots o cup-fe`; zero if the inner
/// one-morphism is zero.
pub fn bubble_value_n(n: usize, lam: &[usize], o: Orientation, m: u32) -> Result<Poly> {
    let r: usize = lam.iter().sum();
    if lam.len() != n {
        return Err(Error::InvalidParams(format!("weight {:?} does not have {} parts", lam, n)));
    }
    let (cup, cap) = match o {
        Orientation::CounterClockwise => (Piece::CupEF, Piece::CapEF),
        Orientation::Clockwise => (Piece::CupFE, Piece::CapFE),
    };
    let (Ok(cup), Ok(cap)) = (LocalMap::new(cup, n, lam), LocalMap::new(cap, n, lam)) else {
        return Ok(Poly::zero(r + 1));
    };
    let unit = TensorElement::one(&Word::new(n, lam, &[])?);
    let e = apply_local(&unit, 0, &cup, 0)?;
    let e = apply_dots(&e, 1, m);
    let v = apply_local(&e, 0, &cap, 0)?;
    Ok(v.scalar().expect("cap lands in the empty word"))
}

/// Bubbles of negative degree vanish, degree-zero bubbles are `(-1)^{lambda_1}` (clockwise) or
/// `(-1)^{lambda_1 - 1}` (counter-clockwise), and every bubble is homogeneous of its degree.
pub fn bubble_checks(n: usize, r: usize) -> Vec<Outcome> {
    let mut out = Vec::new();
    for lam in compositions(n, r) {
        for o in [Orientation::Clockwise, Orientation::CounterClockwise] {
            for m in 0..=(r as u32 + 2) {
                let d = bubble_degree(&lam, o, m);
                if d > 4 {
                    break;
                }
                let tag = lam.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                let id = format!("bubble {} m={} ({})", o, m, tag);
                let v = match bubble_value_n(n, &lam, o, m) {
                    Ok(v) => v,
                    Err(e) => {
                        out.push(Outcome::fail(id, e.to_string()));
                        continue;
                    }
                };
                let sgn = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
                let ok = if d < 0 {
                    v.is_zero()
                } else if d == 0 {
                    let l1 = lam[0] as i64;
                    let want = match o {
                        Orientation::Clockwise if lbar(&lam) >= 1 => Some(sgn(l1)),
                        Orientation::CounterClockwise if lbar(&lam) <= -1 => Some(sgn(l1 - 1)),
                        _ => None,
                    };
                    match want {
                        Some(s) => v == Poly::int(r + 1, s),
                        None => v.is_constant(),
                    }
                } else {
                    v.is_zero() || (v.is_homogeneous() && v.degree() == Some(d))
                };
                out.push(if ok { Outcome::pass(id) } else { Outcome::fail(id, format!("degree {}, value {}", d, v)) });
            }
        }
    }
    out
}

/// Degree-two generators of `END(1_r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndGen {
    BoxY,
    /// The degree-two bubble of a color in `1..=n`.
    Bubble(usize),
}

impl FromStr for EndGen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "y" || s == "box_y" {
            return Ok(EndGen::BoxY);
        }
        s.strip_prefix("bubble")
            .and_then(|t| t.trim_matches(|c| c == '(' || c == ')' || c == '_').parse().ok())
            .map(EndGen::Bubble)
            .ok_or_else(|| Error::Unknown { kind: "END generator", name: s.to_string() })
    }
}

/// `box_y -> y`, `j-bubble -> x_{j+1} - x_j` (`j < r`), `r-bubble -> x_r`, `n-bubble -> x_1 - y`,
/// and the bubbles of colors `r+1..n-1` go to 0.
pub fn end_ring_image(r: usize, n: usize, g: EndGen) -> Result<Poly> {
    if r < 3 || n <= r {
        return Err(Error::InvalidParams(format!("need 3 <= r < n, got r={}, n={}", r, n)));
    }
    match g {
        EndGen::BoxY => Ok(Poly::y(r)),
        EndGen::Bubble(j) if (1..r).contains(&j) => Ok(&Poly::x(r, j + 1) - &Poly::x(r, j)),
        EndGen::Bubble(j) if j == r => Ok(Poly::x(r, r)),
        EndGen::Bubble(j) if j == n => Ok(&Poly::x(r, 1) - &Poly::y(r)),
        EndGen::Bubble(j) if j > r && j < n => Ok(Poly::zero(r + 1)),
        EndGen::Bubble(j) => Err(Error::IndexOutOfRange { index: j as i64, max: n as i64 }),
    }
}

/// Image of `-sum_{j=i}^{r-1} j-bubble + r-bubble`, the image of `box_i` under the embedding.
pub fn sigma_box_image(r: usize, n: usize, i: usize) -> Result<Poly> {
    if !(1..=r).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i as i64, max: r as i64 });
    }
    let mut acc = end_ring_image(r, n, EndGen::Bubble(r))?;
    for j in i..r {
        acc = &acc - &end_ring_image(r, n, EndGen::Bubble(j))?;
    }
    Ok(acc)
}

/// Image of `sum_{j<r} j-bubble - r-bubble + n-bubble + box_y`.
pub fn end_ring_relation(r: usize, n: usize) -> Result<Poly> {
    let mut acc = &end_ring_image(r, n, EndGen::Bubble(n))? + &end_ring_image(r, n, EndGen::BoxY)?;
    acc = &acc - &end_ring_image(r, n, EndGen::Bubble(r))?;
    for j in 1..r {
        acc = &acc + &end_ring_image(r, n, EndGen::Bubble(j))?;
    }
    Ok(acc)
}

fn box_action(r: usize, g: Generator) -> Result<Poly> {
    let e = BimElement::one(r, SoergelObject::unit());
    Ok(apply_morphism(r, &MorphismExpr::Gen(g), &e)?.coeff(&[]))
}

/// Both paths around the triangle: `box_i` acts on `R` as `x_i`, which must equal the image of its
/// embedding; likewise for `box_y`. Also compares the computed `n`-bubble at `(1^r, 0, ...)` with
/// its listed image.
pub fn triangle_check(r: usize, n: usize, i: usize) -> Result<Vec<Outcome>> {
    let direct = box_action(r, Generator::BoxX(i))?;
    let via = sigma_box_image(r, n, i)?;
    let mut out = vec![outcome(format!("triangle box{}", i), direct == via, &direct, &via)];
    let direct = box_action(r, Generator::BoxY)?;
    let via = end_ring_image(r, n, EndGen::BoxY)?;
    out.push(outcome("triangle box_y".into(), direct == via, &direct, &via));
    let mut lam = vec![1; r];
    lam.resize(n, 0);
    let bub = bubble_value_n(n, &lam, Orientation::CounterClockwise, 1)?;
    let listed = end_ring_image(r, n, EndGen::Bubble(n))?;
    out.push(outcome("triangle n-bubble".into(), bub == listed, &bub, &listed));
    Ok(out)
}

fn outcome(id: String, ok: bool, a: &Poly, b: &Poly) -> Outcome {
    if ok {
        Outcome::pass(id)
    } else {
        Outcome::fail(id, format!("{} vs {}", a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn end_ring_examples() {
        let (r, n) = (3, 4);
        assert_eq!(end_ring_image(r, n, EndGen::BoxY).unwrap(), Poly::y(r));
        assert!(end_ring_relation(r, n).unwrap().is_zero());
        for i in 1..=r {
            assert_eq!(sigma_box_image(r, n, i).unwrap(), Poly::x(r, i));
        }
        assert!(end_ring_image(r, n, EndGen::Bubble(5)).is_err());
        assert_eq!("bubble(2)".parse::<EndGen>().unwrap(), EndGen::Bubble(2));
    }

    #[test]
    fn ccw_bubble_with_one_dot() {
        let v = bubble_value_n(4, &[1, 1, 1, 0], Orientation::CounterClockwise, 1).unwrap();
        assert_eq!(v, &Poly::x(3, 1) - &Poly::y(3));
    }

    #[test]
    fn triangle_rank_three() {
        for i in 1..=3 {
            for o in triangle_check(3, 4, i).unwrap() {
                assert!(o.pass, "{}", o);
            }
        }
    }
}
