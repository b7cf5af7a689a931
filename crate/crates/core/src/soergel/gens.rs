//! Generating diagrams and their bimodule images.

use super::element::{tag_poly, BimElement, SoergelObject, Strand};
use crate::arith::{root, rho_pow, Poly, Rat};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// A generating diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    EndDot(usize),
    StartDot(usize),
    Merge(usize),
    Split(usize),
    /// Crossing of distant colors, `(i,j) -> (j,i)`.
    V4(usize, usize),
    /// Six-valent vertex of adjacent colors, `(i,j,i) -> (j,i,j)`.
    V6(usize, usize),
    CapPlus,
    CapMinus,
    CupPlus,
    CupMinus,
    /// `(+,i) -> (i+1,+)`.
    M4Ur(usize),
    /// `(i+1,+) -> (+,i)`.
    M4Ul(usize),
    /// `(i,-) -> (-,i+1)`.
    M4Dr(usize),
    /// `(-,i+1) -> (i,-)`.
    M4Dl(usize),
    BoxX(usize),
    BoxY,
}

/// `i + 1` modulo `r`, in `1..=r`.
pub fn next_color(r: usize, i: usize) -> usize {
    i % r + 1
}

pub fn adjacent(r: usize, i: usize, j: usize) -> bool {
    i != j && (next_color(r, i) == j || next_color(r, j) == i)
}

pub fn distant(r: usize, i: usize, j: usize) -> bool {
    i != j && !adjacent(r, i, j)
}

impl Generator {
    pub fn source(&self, r: usize) -> Vec<Strand> {
        use Generator::*;
        use Strand::{Color as C, Minus, Plus};
        match *self {
            EndDot(i) | Split(i) => vec![C(i)],
            Merge(i) => vec![C(i), C(i)],
            StartDot(_) | CupPlus | CupMinus | BoxX(_) | BoxY => vec![],
            V4(i, j) => vec![C(i), C(j)],
            V6(i, j) => vec![C(i), C(j), C(i)],
            CapPlus => vec![Plus, Minus],
            CapMinus => vec![Minus, Plus],
            M4Ur(i) => vec![Plus, C(i)],
            M4Ul(i) => vec![C(next_color(r, i)), Plus],
            M4Dr(i) => vec![C(i), Minus],
            M4Dl(i) => vec![Minus, C(next_color(r, i))],
        }
    }

    pub fn target(&self, r: usize) -> Vec<Strand> {
        use Generator::*;
        use Strand::{Color as C, Minus, Plus};
        match *self {
            EndDot(_) | CapPlus | CapMinus | BoxX(_) | BoxY => vec![],
            StartDot(i) | Merge(i) => vec![C(i)],
            Split(i) => vec![C(i), C(i)],
            V4(i, j) => vec![C(j), C(i)],
            V6(i, j) => vec![C(j), C(i), C(j)],
            CupPlus => vec![Plus, Minus],
            CupMinus => vec![Minus, Plus],
            M4Ur(i) => vec![C(next_color(r, i)), Plus],
            M4Ul(i) => vec![Plus, C(i)],
            M4Dr(i) => vec![Minus, C(next_color(r, i))],
            M4Dl(i) => vec![C(i), Minus],
        }
    }

    /// Degree of the generator.
    pub fn degree(&self) -> i64 {
        use Generator::*;
        match self {
            EndDot(_) | StartDot(_) => 1,
            Merge(_) | Split(_) => -1,
            BoxX(_) | BoxY => 2,
            _ => 0,
        }
    }

    /// Checks colors against `r` and the adjacency conditions.
    pub fn validate(&self, r: usize) -> Result<()> {
        use Generator::*;
        let check = |i: usize| {
            if (1..=r).contains(&i) {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange { index: i as i64, max: r as i64 })
            }
        };
        match *self {
            EndDot(i) | StartDot(i) | Merge(i) | Split(i) | M4Ur(i) | M4Ul(i) | M4Dr(i) | M4Dl(i) | BoxX(i) => {
                check(i)
            }
            V4(i, j) => {
                check(i)?;
                check(j)?;
                if r < 3 || !distant(r, i, j) {
                    return Err(Error::InvalidParams(format!("v4({},{}) needs distant colors mod {}", i, j, r)));
                }
                Ok(())
            }
            V6(i, j) => {
                check(i)?;
                check(j)?;
                if r < 3 || !adjacent(r, i, j) {
                    return Err(Error::InvalidParams(format!("v6({},{}) needs adjacent colors mod {}", i, j, r)));
                }
                Ok(())
            }
            CapPlus | CapMinus | CupPlus | CupMinus | BoxY => Ok(()),
        }
    }

    /// Image of the basis vector `tag` of the source word, as an element of the target word.
    pub fn image(&self, r: usize, tag: &[bool]) -> BimElement {
        use Generator::*;
        let n = r + 1;
        let tgt = SoergelObject::new(self.target(r), 0);
        let one = Poly::one(n);
        match *self {
            EndDot(i) => {
                let mut e = BimElement::zero(r, tgt);
                e.add_term(vec![], &tag_poly(r, i, tag[0]));
                e
            }
            StartDot(i) => {
                let x = root(r, i);
                let half = Rat::new(1, 2);
                let a = BimElement::one(r, tgt.clone()).left_mul(&x.scale(half));
                let b = BimElement::from_pure(r, tgt, &[one, x.scale(half)]);
                a.add(&b)
            }
            Merge(_) => {
                if tag[0] {
                    BimElement::basis(r, tgt, vec![tag[1]])
                } else {
                    BimElement::zero(r, tgt)
                }
            }
            Split(_) => BimElement::basis(r, tgt, vec![false, tag[0]]),
            V4(i, j) => {
                let p = &tag_poly(r, i, tag[0]) * &tag_poly(r, j, tag[1]);
                BimElement::from_pure(r, tgt, &[one.clone(), one, p])
            }
            V6(i, j) => {
                let idx = tag.iter().fold(0usize, |acc, &b| acc * 2 + b as usize);
                v6_table(r, i, j)[idx].clone()
            }
            CapPlus | CapMinus | CupPlus | CupMinus => BimElement::one(r, tgt),
            M4Ur(i) | M4Dr(i) => BimElement::from_pure(r, tgt, &[one, rho_pow(r, 1, &tag_poly(r, i, tag[0]))]),
            M4Ul(i) | M4Dl(i) => {
                let c = next_color(r, i);
                BimElement::from_pure(r, tgt, &[one, rho_pow(r, -1, &tag_poly(r, c, tag[0]))])
            }
            BoxX(i) => BimElement::one(r, tgt).left_mul(&Poly::x(r, i)),
            BoxY => BimElement::one(r, tgt).left_mul(&Poly::y(r)),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Generator::*;
        match self {
            EndDot(i) => write!(f, "enddot({})", i),
            StartDot(i) => write!(f, "startdot({})", i),
            Merge(i) => write!(f, "merge({})", i),
            Split(i) => write!(f, "split({})", i),
            V4(i, j) => write!(f, "v4({},{})", i, j),
            V6(i, j) => write!(f, "v6({},{})", i, j),
            CapPlus => write!(f, "cap+"),
            CapMinus => write!(f, "cap-"),
            CupPlus => write!(f, "cup+"),
            CupMinus => write!(f, "cup-"),
            M4Ur(i) => write!(f, "m4ur({})", i),
            M4Ul(i) => write!(f, "m4ul({})", i),
            M4Dr(i) => write!(f, "m4dr({})", i),
            M4Dl(i) => write!(f, "m4dl({})", i),
            BoxX(i) => write!(f, "box({})", i),
            BoxY => write!(f, "box(y)"),
        }
    }
}

type V6Key = (usize, usize, usize);

fn v6_cache() -> &'static Mutex<HashMap<V6Key, Vec<BimElement>>> {
    static CACHE: OnceLock<Mutex<HashMap<V6Key, Vec<BimElement>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Images of the eight basis tags of `(a,b,a)` under the six-valent vertex.
///
/// The map is known on the bimodule generators `g0 = 1(x)1(x)1(x)1` and
/// `g1 = 1(x)X_b(x)1(x)1 + 1(x)1(x)X_b(x)1`. Right translates of these give a left basis;
/// the tag basis is recovered by inverting the change of basis over `R`.
fn v6_table(r: usize, a: usize, b: usize) -> Vec<BimElement> {
    if let Some(t) = v6_cache().lock().unwrap().get(&(r, a, b)) {
        return t.clone();
    }
    let table = build_v6_table(r, a, b);
    v6_cache().lock().unwrap().insert((r, a, b), table.clone());
    table
}

fn build_v6_table(r: usize, a: usize, b: usize) -> Vec<BimElement> {
    let n = r + 1;
    let one = Poly::one(n);
    let src = SoergelObject::new(vec![Strand::Color(a), Strand::Color(b), Strand::Color(a)], 0);
    let tgt = SoergelObject::new(vec![Strand::Color(b), Strand::Color(a), Strand::Color(b)], 0);
    let base = if next_color(r, a) == b { a } else { b } as i64;
    let u = |k: i64| Poly::xp(r, base + k - 1);
    let xb = root(r, b);
    let g0 = BimElement::one(r, src.clone());
    let g1 = BimElement::from_pure(r, src.clone(), &[one.clone(), xb.clone(), one.clone(), one.clone()])
        .add(&BimElement::from_pure(r, src.clone(), &[one.clone(), one.clone(), xb, one.clone()]));
    let g0t = BimElement::one(r, tgt.clone());

    let mut vectors = Vec::new();
    let mut images = Vec::new();
    for alpha in 0..3 {
        for beta in 0..2 {
            let c = &u(3).pow(alpha) * &u(2).pow(beta);
            vectors.push(g0.right_mul(&c));
            images.push(g0t.right_mul(&c));
        }
    }
    for c in [one.clone(), tag_poly(r, a, true)] {
        vectors.push(g1.right_mul(&c));
        images.push(BimElement::zero(r, tgt.clone()));
    }

    let tags = src.tags();
    let dim = tags.len();
    let mut m: Vec<Vec<Poly>> = vectors.iter().map(|v| tags.iter().map(|t| v.coeff(t)).collect()).collect();
    let mut w: Vec<Vec<Poly>> =
        (0..dim).map(|k| (0..dim).map(|l| if k == l { one.clone() } else { Poly::zero(n) }).collect()).collect();
    for col in 0..dim {
        let piv = (col..dim)
            .find(|&k| m[k][col].is_constant() && !m[k][col].is_zero())
            .expect("six-valent change of basis has no unit pivot");
        m.swap(col, piv);
        w.swap(col, piv);
        let inv = m[col][col].constant_term().inv();
        m[col] = m[col].iter().map(|p| p.scale(inv)).collect();
        w[col] = w[col].iter().map(|p| p.scale(inv)).collect();
        for k in 0..dim {
            if k == col || m[k][col].is_zero() {
                continue;
            }
            let f = m[k][col].clone();
            for l in 0..dim {
                m[k][l] = &m[k][l] - &(&f * &m[col][l]);
                w[k][l] = &w[k][l] - &(&f * &w[col][l]);
            }
        }
    }
    (0..dim)
        .map(|t| {
            let mut e = BimElement::zero(r, tgt.clone());
            for (k, img) in images.iter().enumerate() {
                if !w[t][k].is_zero() {
                    e = e.add(&img.left_mul(&w[t][k]));
                }
            }
            e
        })
        .collect()
}

/// Applies `g` to the letters of `e` starting at `pos`.
pub fn apply_gen(r: usize, g: &Generator, pos: usize, e: &BimElement) -> Result<BimElement> {
    g.validate(r)?;
    let src = g.source(r);
    let letters = &e.object.letters;
    if pos + src.len() > letters.len() || letters[pos..pos + src.len()] != src[..] {
        return Err(Error::Mismatch(format!("{} does not match letters at position {} of {}", g, pos, e.object)));
    }
    let left_obj = SoergelObject::new(letters[..pos].to_vec(), 0);
    let right = &letters[pos + src.len()..];
    let kl = left_obj.num_unoriented();
    let km = src.iter().filter(|l| l.color().is_some()).count();
    let mut out_letters = letters[..pos].to_vec();
    out_letters.extend(g.target(r));
    out_letters.extend_from_slice(right);
    let mut out = BimElement::zero(r, SoergelObject::new(out_letters, e.object.shift));
    let mut images: BTreeMap<Vec<bool>, BimElement> = BTreeMap::new();
    for (tag, coef) in &e.coords {
        let mid = tag[kl..kl + km].to_vec();
        let img = images.entry(mid.clone()).or_insert_with(|| g.image(r, &mid));
        let left = BimElement::basis(r, left_obj.clone(), tag[..kl].to_vec()).left_mul(coef);
        for (t2, c2) in &img.coords {
            for (t1, c1) in &left.right_mul(c2).coords {
                let mut key = t1.clone();
                key.extend_from_slice(t2);
                key.extend_from_slice(&tag[kl + km..]);
                out.add_term(key, c1);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(r: usize) -> BimElement {
        BimElement::one(r, SoergelObject::unit())
    }

    #[test]
    fn dot_then_dot_is_root() {
        for r in [3, 4] {
            for i in 1..=r {
                let e = apply_gen(r, &Generator::StartDot(i), 0, &unit(r)).unwrap();
                let e = apply_gen(r, &Generator::EndDot(i), 0, &e).unwrap();
                assert_eq!(e, unit(r).left_mul(&root(r, i)));
            }
        }
    }

    #[test]
    fn six_valent_fixes_one_and_kills_g1() {
        let r = 3;
        for (a, b) in [(1, 2), (2, 1), (3, 1), (1, 3)] {
            let src = SoergelObject::new(vec![Strand::Color(a), Strand::Color(b), Strand::Color(a)], 0);
            let tgt = SoergelObject::new(vec![Strand::Color(b), Strand::Color(a), Strand::Color(b)], 0);
            let g = Generator::V6(a, b);
            let e = apply_gen(r, &g, 0, &BimElement::one(r, src.clone())).unwrap();
            assert_eq!(e, BimElement::one(r, tgt));
            let one = Poly::one(r + 1);
            let xb = root(r, b);
            let g1 = BimElement::from_pure(r, src.clone(), &[one.clone(), xb.clone(), one.clone(), one.clone()])
                .add(&BimElement::from_pure(r, src, &[one.clone(), one.clone(), xb, one]));
            assert!(apply_gen(r, &g, 0, &g1).unwrap().is_zero());
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let r = 3;
        let e = BimElement::one(r, SoergelObject::parse(r, "1").unwrap());
        assert!(apply_gen(r, &Generator::EndDot(2), 0, &e).is_err());
    }
}
