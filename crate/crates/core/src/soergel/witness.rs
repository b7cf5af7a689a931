//! Explicit decomposition and isomorphism witnesses, and the twist weight identity.

use super::element::{BimElement, SoergelObject, Strand};
use super::expr::MorphismExpr as M;
use super::gens::{distant, next_color, Generator as G};
use super::relations::compare_morphisms;
use crate::arith::{Poly, Rat};
use crate::error::{Error, Result};
use crate::report::Outcome;
use rand::Rng;

/// Named maps together with the identities they were checked against.
#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub kind: String,
    pub maps: Vec<(String, M)>,
    pub checks: Vec<Outcome>,
}

impl WitnessReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn c(i: usize) -> Strand {
    Strand::Color(i)
}

fn id(l: &[Strand]) -> M {
    M::id(l)
}

fn h(ms: Vec<M>) -> M {
    M::hchain(ms)
}

fn v(ms: Vec<M>) -> M {
    M::vchain(ms)
}

fn check(r: usize, name: &str, lhs: &M, rhs: &M) -> Result<Outcome> {
    Ok(Outcome::from_witness(name, compare_morphisms(r, lhs, rhs)?))
}

/// Builds and verifies the witness of kind `S1`, `S2`, `S3`, `S4` or `tiso2`.
pub fn decompose_witness(r: usize, kind: &str, colors: &[usize]) -> Result<WitnessReport> {
    let need = |n: usize| -> Result<()> {
        if colors.len() != n || colors.iter().any(|&x| !(1..=r).contains(&x)) {
            return Err(Error::InvalidParams(format!("{} needs {} colors in 1..={}", kind, n, r)));
        }
        Ok(())
    };
    let mut maps = Vec::new();
    let mut checks = Vec::new();
    match kind {
        "S1" => {
            need(1)?;
            let i = colors[0];
            let ci = [c(i)];
            let bb = M::vcomp(G::EndDot(i), G::StartDot(i));
            let i1 = M::Gen(G::Split(i));
            let p1 = h(vec![id(&ci), M::Gen(G::EndDot(i))]);
            let i2 = h(vec![id(&ci), M::Gen(G::StartDot(i))]).minus(v(vec![
                M::Gen(G::Split(i)),
                h(vec![id(&ci), bb]),
            ]));
            let p2 = M::Gen(G::Merge(i));
            let idi = id(&ci);
            let zero = M::Zero(ci.to_vec(), ci.to_vec());
            checks.push(check(r, "p1*i1=id", &M::vcomp(p1.clone(), i1.clone()), &idi)?);
            checks.push(check(r, "p2*i2=id", &M::vcomp(p2.clone(), i2.clone()), &idi)?);
            checks.push(check(r, "p1*i2=0", &M::vcomp(p1.clone(), i2.clone()), &zero)?);
            checks.push(check(r, "p2*i1=0", &M::vcomp(p2.clone(), i1.clone()), &zero)?);
            let sum = M::vcomp(i1.clone(), p1.clone()).plus(M::vcomp(i2.clone(), p2.clone()));
            checks.push(check(r, "i1*p1+i2*p2=id", &sum, &id(&[c(i), c(i)]))?);
            maps.extend([("i1".into(), i1), ("p1".into(), p1), ("i2".into(), i2), ("p2".into(), p2)]);
        }
        "S2" => {
            need(2)?;
            let (i, j) = (colors[0], colors[1]);
            if !distant(r, i, j) {
                return Err(Error::InvalidParams(format!("S2 needs distant colors, got {} and {}", i, j)));
            }
            let f = M::Gen(G::V4(i, j));
            let g = M::Gen(G::V4(j, i));
            checks.push(check(r, "g*f=id", &M::vcomp(g.clone(), f.clone()), &id(&[c(i), c(j)]))?);
            checks.push(check(r, "f*g=id", &M::vcomp(f.clone(), g.clone()), &id(&[c(j), c(i)]))?);
            maps.extend([("f".into(), f), ("g".into(), g)]);
        }
        "S3" => {
            need(2)?;
            let (i, j) = (colors[0], colors[1]);
            if r < 3 || !super::gens::adjacent(r, i, j) {
                return Err(Error::InvalidParams(format!("S3 needs adjacent colors, got {} and {}", i, j)));
            }
            let ci = [c(i)];
            let word = [c(i), c(j), c(i)];
            let e = M::vcomp(G::V6(j, i), G::V6(i, j));
            let iota = v(vec![h(vec![id(&ci), M::Gen(G::StartDot(j)), id(&ci)]), M::Gen(G::Split(i))]);
            let proj = v(vec![M::Gen(G::Merge(i)), h(vec![id(&ci), M::Gen(G::EndDot(j)), id(&ci)])])
                .scaled(Rat::int(-1));
            checks.push(check(r, "e*e=e", &M::vcomp(e.clone(), e.clone()), &e)?);
            checks.push(check(r, "p*i=id", &M::vcomp(proj.clone(), iota.clone()), &id(&ci))?);
            checks.push(check(r, "e*i=0", &M::vcomp(e.clone(), iota.clone()), &M::Zero(ci.to_vec(), word.to_vec()))?);
            checks.push(check(r, "p*e=0", &M::vcomp(proj.clone(), e.clone()), &M::Zero(word.to_vec(), ci.to_vec()))?);
            checks.push(check(r, "e+i*p=id", &e.clone().plus(M::vcomp(iota.clone(), proj.clone())), &id(&word))?);
            maps.extend([("e".into(), e), ("i".into(), iota), ("p".into(), proj)]);
        }
        "S4" => {
            need(1)?;
            let i = colors[0];
            let f = M::Gen(G::M4Ur(i));
            let g = M::Gen(G::M4Ul(i));
            checks.push(check(r, "g*f=id", &M::vcomp(g.clone(), f.clone()), &id(&[Strand::Plus, c(i)]))?);
            checks.push(check(r, "f*g=id", &M::vcomp(f.clone(), g.clone()), &id(&[c(next_color(r, i)), Strand::Plus]))?);
            maps.extend([("f".into(), f), ("g".into(), g)]);
        }
        "tiso2" => {
            need(1)?;
            let i = colors[0];
            let (f, g) = twist_iso(r, i);
            let mut src = vec![Strand::Plus; r];
            src.push(c(i));
            let mut tgt = vec![c(i)];
            tgt.extend(vec![Strand::Plus; r]);
            checks.push(check(r, "g*f=id", &M::vcomp(g.clone(), f.clone()), &id(&src))?);
            checks.push(check(r, "f*g=id", &M::vcomp(f.clone(), g.clone()), &id(&tgt))?);
            maps.extend([("f".into(), f), ("g".into(), g)]);
        }
        _ => return Err(Error::Unknown { kind: "witness", name: kind.to_string() }),
    }
    Ok(WitnessReport { kind: kind.to_string(), maps, checks })
}

/// `(+^r, i) -> (i, +^r)` and its inverse, built from mixed crossings.
fn twist_iso(r: usize, i: usize) -> (M, M) {
    let plus = |n: usize| vec![Strand::Plus; n];
    let mut fwd = Vec::new();
    let mut bwd = Vec::new();
    let mut col = i;
    for k in (0..r).rev() {
        fwd.push(h(vec![id(&plus(k)), M::Gen(G::M4Ur(col)), id(&plus(r - 1 - k))]));
        bwd.push(h(vec![id(&plus(k)), M::Gen(G::M4Ul(col)), id(&plus(r - 1 - k))]));
        col = next_color(r, col);
    }
    fwd.reverse();
    (v(fwd), v(bwd))
}

/// `(sum x_i) e - e (sum x_i) = k y e` where `k` is the net twist of the object.
pub fn twist_weight_check(e: &BimElement) -> bool {
    let r = e.r;
    let s = (1..=r).fold(Poly::zero(r + 1), |acc, i| &acc + &Poly::x(r, i));
    let lhs = e.left_mul(&s).sub(&e.right_mul(&s));
    let rhs = e.left_mul(&Poly::y(r).scale(Rat::int(e.object.net_twist())));
    lhs == rhs
}

/// A random element with small integer coefficients of degree at most `max_deg`.
pub fn random_element<R: Rng>(r: usize, object: SoergelObject, max_deg: u32, rng: &mut R) -> BimElement {
    let mut e = BimElement::zero(r, object.clone());
    for tag in object.tags() {
        let mut p = Poly::zero(r + 1);
        for _ in 0..3 {
            let mut m = vec![0u16; r + 1];
            for _ in 0..rng.gen_range(0..=max_deg) {
                m[rng.gen_range(0..=r)] += 1;
            }
            p = &p + &Poly::monomial(m, Rat::int(rng.gen_range(-3..=3)));
        }
        e.add_term(tag, &p);
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_rank_three() {
        for (kind, colors) in [("S1", vec![1]), ("S1", vec![3]), ("S3", vec![1, 2]), ("S3", vec![3, 1]), ("S4", vec![3]), ("tiso2", vec![1])] {
            let w = decompose_witness(3, kind, &colors).unwrap();
            assert!(w.pass(), "{} {:?}: {:?}", kind, colors, w.checks);
        }
        assert!(decompose_witness(3, "S2", &[1, 2]).is_err());
        assert!(decompose_witness(4, "S2", &[1, 3]).unwrap().pass());
    }

    #[test]
    fn twist_weight_examples() {
        let r = 3;
        for (s, k) in [("+", 1), ("+,+", 2), ("1,2", 0), ("-,1,+,+", 1)] {
            let obj = SoergelObject::parse(r, s).unwrap();
            let e = BimElement::one(r, obj.clone());
            assert!(twist_weight_check(&e), "{}", s);
            assert_eq!(obj.net_twist(), k);
        }
    }
}
