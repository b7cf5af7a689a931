//! Rouquier complexes of extended affine braids, `d^2 = 0` checks and Euler classes.

use crate::arith::{Rat, RatQ};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::report::Outcome;
use crate::soergel::{compare_morphisms, Generator, MorphismExpr, SoergelObject, Strand};
use crate::weyl::{AffinePermutation, Gen, Letter};
use std::collections::BTreeMap;
use std::fmt;

/// A bounded complex of Soergel objects.
///
/// `diff[k][a][b]` maps `terms[k][b]` to `terms[k+1][a]`; `None` is the zero map.
#[derive(Clone, Debug)]
pub struct BimComplex {
    pub r: usize,
    pub terms: BTreeMap<i64, Vec<SoergelObject>>,
    pub diff: BTreeMap<i64, Vec<Vec<Option<MorphismExpr>>>>,
}

impl BimComplex {
    /// `R` in degree 0.
    pub fn unit(r: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(0, vec![SoergelObject::unit()]);
        BimComplex { r, terms, diff: BTreeMap::new() }
    }

    fn two_term(r: usize, lo: (i64, SoergelObject), hi: SoergelObject, d: Generator) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lo.0, vec![lo.1]);
        terms.insert(lo.0 + 1, vec![hi]);
        let mut diff = BTreeMap::new();
        diff.insert(lo.0, vec![vec![Some(MorphismExpr::Gen(d))]]);
        BimComplex { r, terms, diff }
    }

    /// The complex of a single braid letter.
    pub fn letter(r: usize, (g, e): Letter) -> Result<Self> {
        let one = |l: Strand| {
            let mut terms = BTreeMap::new();
            terms.insert(0, vec![SoergelObject::new(vec![l], 0)]);
            BimComplex { r, terms, diff: BTreeMap::new() }
        };
        match (g, e < 0) {
            (Gen::S(i), false) => {
                check_color(r, i)?;
                Ok(Self::two_term(
                    r,
                    (-1, SoergelObject::new(vec![], 2)),
                    SoergelObject::new(vec![Strand::Color(i)], 1),
                    Generator::StartDot(i),
                ))
            }
            (Gen::S(i), true) => {
                check_color(r, i)?;
                Ok(Self::two_term(
                    r,
                    (0, SoergelObject::new(vec![Strand::Color(i)], -1)),
                    SoergelObject::new(vec![], -2),
                    Generator::EndDot(i),
                ))
            }
            (Gen::Rho, false) => Ok(one(Strand::Plus)),
            (Gen::Rho, true) => Ok(one(Strand::Minus)),
            (Gen::T(_), _) => Err(Error::InvalidParams("translations are not braid letters".into())),
        }
    }

    pub fn entry(&self, k: i64, a: usize, b: usize) -> Option<&MorphismExpr> {
        self.diff.get(&k).and_then(|m| m.get(a)).and_then(|row| row.get(b)).and_then(|x| x.as_ref())
    }

    fn objects(&self, k: i64) -> &[SoergelObject] {
        self.terms.get(&k).map(|v| v.as_slice()).unwrap_or(&[])
    }
}

fn check_color(r: usize, i: usize) -> Result<()> {
    if (1..=r).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i as i64, max: r as i64 })
    }
}

/// Total complex of the tensor product, with sign `(-1)^p` on the second factor's differential.
pub fn tensor(c1: &BimComplex, c2: &BimComplex) -> BimComplex {
    let r = c1.r;
    // index of (p, a, q, b) within its total degree
    let mut index: BTreeMap<(i64, usize, i64, usize), (i64, usize)> = BTreeMap::new();
    let mut terms: BTreeMap<i64, Vec<SoergelObject>> = BTreeMap::new();
    for (&p, objs1) in &c1.terms {
        for (&q, objs2) in &c2.terms {
            for (a, o1) in objs1.iter().enumerate() {
                for (b, o2) in objs2.iter().enumerate() {
                    let v = terms.entry(p + q).or_default();
                    index.insert((p, a, q, b), (p + q, v.len()));
                    v.push(o1.concat(o2));
                }
            }
        }
    }
    let mut diff: BTreeMap<i64, Vec<Vec<Option<MorphismExpr>>>> = BTreeMap::new();
    for (&n, objs) in &terms {
        let rows = terms.get(&(n + 1)).map_or(0, |v| v.len());
        if rows > 0 {
            diff.insert(n, vec![vec![None; objs.len()]; rows]);
        }
    }
    for (&(p, a, q, b), &(n, s)) in &index {
        let o1 = &c1.terms[&p][a];
        let o2 = &c2.terms[&q][b];
        if let Some(m) = c1.diff.get(&p) {
            for (a2, row) in m.iter().enumerate() {
                if let Some(f) = &row[a] {
                    let (_, t) = index[&(p + 1, a2, q, b)];
                    let e = MorphismExpr::hcomp(f.clone(), MorphismExpr::id(&o2.letters));
                    diff.get_mut(&n).unwrap()[t][s] = Some(e);
                }
            }
        }
        if let Some(m) = c2.diff.get(&q) {
            for (b2, row) in m.iter().enumerate() {
                if let Some(f) = &row[b] {
                    let (_, t) = index[&(p, a, q + 1, b2)];
                    let mut e = MorphismExpr::hcomp(MorphismExpr::id(&o1.letters), f.clone());
                    if p.rem_euclid(2) == 1 {
                        e = e.scaled(Rat::int(-1));
                    }
                    diff.get_mut(&n).unwrap()[t][s] = Some(e);
                }
            }
        }
    }
    BimComplex { r, terms, diff }
}

/// The Rouquier complex of an extended braid word.
pub fn braid_complex(r: usize, word: &[Letter]) -> Result<BimComplex> {
    let mut c = BimComplex::unit(r);
    for &l in word {
        c = tensor(&c, &BimComplex::letter(r, l)?);
    }
    Ok(c)
}

/// Checks every entry of `d o d` and the degree of every differential entry.
pub fn verify_d2(c: &BimComplex) -> Vec<Outcome> {
    let r = c.r;
    let mut out = Vec::new();
    for (&k, m) in &c.diff {
        for (a, row) in m.iter().enumerate() {
            for (b, f) in row.iter().enumerate() {
                let Some(f) = f else { continue };
                let want = c.objects(k)[b].shift - c.objects(k + 1)[a].shift;
                let id = format!("deg d{}[{},{}]", k, a, b);
                out.push(match f.degree() {
                    Some(d) if d == want => Outcome::pass(id),
                    d => Outcome::fail(id, format!("degree {:?}, expected {}", d, want)),
                });
            }
        }
    }
    for (&k, objs) in &c.terms {
        let tgt = c.objects(k + 2);
        let mid = c.objects(k + 1);
        for (s, so) in objs.iter().enumerate() {
            for (t, to) in tgt.iter().enumerate() {
                let terms: Vec<(Rat, MorphismExpr)> = (0..mid.len())
                    .filter_map(|m| {
                        let f = c.entry(k, m, s)?;
                        let g = c.entry(k + 1, t, m)?;
                        Some((Rat::one(), MorphismExpr::vcomp(g.clone(), f.clone())))
                    })
                    .collect();
                if terms.is_empty() {
                    continue;
                }
                let id = format!("d2 d{}[{},{}]", k, t, s);
                let zero = MorphismExpr::Zero(so.letters.clone(), to.letters.clone());
                out.push(match compare_morphisms(r, &MorphismExpr::lin(terms), &zero) {
                    Ok(w) => Outcome::from_witness(id, w),
                    Err(e) => Outcome::fail(id, format!("error: {}", e)),
                });
            }
        }
    }
    out
}

/// Class of a tensor word: `[i] = b_i`, `[+] = T_rho`, `[-] = T_rho^{-1}`, times `q^shift`.
pub fn object_class(r: usize, o: &SoergelObject) -> Result<HeckeElement> {
    let mut acc = HeckeElement::scalar(r, RatQ::qpow(1, o.shift as i32));
    for l in &o.letters {
        let x = match l {
            Strand::Color(i) => HeckeElement::kl_gen(r, *i)?,
            Strand::Plus => HeckeElement::t(AffinePermutation::rho_pow(r, 1)),
            Strand::Minus => HeckeElement::t(AffinePermutation::rho_pow(r, -1)),
        };
        acc = acc.mul(&x)?;
    }
    Ok(acc)
}

/// Alternating sum of the classes of the terms.
pub fn euler_class(c: &BimComplex) -> Result<HeckeElement> {
    let mut acc = HeckeElement::zero(c.r);
    for (&k, objs) in &c.terms {
        for o in objs {
            let x = object_class(c.r, o)?;
            acc = if k.rem_euclid(2) == 0 { acc.add(&x) } else { acc.sub(&x) };
        }
    }
    Ok(acc)
}

impl fmt::Display for BimComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, objs) in &self.terms {
            let parts: Vec<String> = objs.iter().map(|o| o.to_string()).collect();
            writeln!(f, "degree {}: {}", k, parts.join(" + "))?;
        }
        for (k, m) in &self.diff {
            for (a, row) in m.iter().enumerate() {
                for (b, e) in row.iter().enumerate() {
                    if let Some(e) = e {
                        writeln!(f, "d{}[{},{}] = {}", k, a, b, e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::parse_word;

    fn word(r: usize, s: &str) -> Vec<Letter> {
        parse_word(r, s).unwrap()
    }

    #[test]
    fn single_letters() {
        let r = 3;
        let e = euler_class(&braid_complex(r, &word(r, "s1")).unwrap()).unwrap();
        let q2 = HeckeElement::scalar(r, RatQ::qpow(1, 2));
        assert_eq!(e, q2.mul(&HeckeElement::t_simple_inverse(r, 1).unwrap()).unwrap());
        let e = euler_class(&braid_complex(r, &word(r, "s2^-1")).unwrap()).unwrap();
        let t = HeckeElement::t_gen(r, Gen::S(2)).unwrap().scale(&RatQ::qpow(1, -2));
        assert_eq!(e, t);
        let e = euler_class(&braid_complex(r, &word(r, "rho")).unwrap()).unwrap();
        assert_eq!(e, HeckeElement::t_gen(r, Gen::Rho).unwrap());
        assert_eq!(euler_class(&braid_complex(r, &[]).unwrap()).unwrap(), HeckeElement::one(r));
    }

    #[test]
    fn two_generator_tensor_shape() {
        let r = 3;
        let c = braid_complex(r, &word(r, "s1 s2")).unwrap();
        assert_eq!(c.terms[&-2], vec![SoergelObject::new(vec![], 4)]);
        assert_eq!(c.terms[&-1].len(), 2);
        assert_eq!(c.terms[&0].len(), 1);
        assert!(verify_d2(&c).iter().all(|o| o.pass));
    }

    #[test]
    fn corrupted_sign_is_located() {
        let r = 3;
        let mut c = braid_complex(r, &word(r, "s1 s2")).unwrap();
        assert!(verify_d2(&c).iter().all(|o| o.pass));
        let e = c.diff.get_mut(&-1).unwrap()[0][1].take().unwrap();
        c.diff.get_mut(&-1).unwrap()[0][1] = Some(e.scaled(Rat::int(-1)));
        let bad: Vec<_> = verify_d2(&c).into_iter().filter(|o| !o.pass).collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].id, "d2 d-2[0,0]");
    }
}
