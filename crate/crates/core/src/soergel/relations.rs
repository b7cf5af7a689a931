//! The defining relations of the diagrammatic category, evaluated on bimodules.

use super::element::{format_tag, BimElement, SoergelObject, Strand};
use super::expr::{apply_morphism, MorphismExpr as M};
use super::gens::{adjacent, apply_gen, distant, next_color, Generator as G};
use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::report::Outcome;
use rayon::prelude::*;

type Builder = fn(usize, &[usize]) -> Vec<(M, M)>;

/// One catalogued relation: each instance is a list of equalities `lhs = rhs`.
#[derive(Clone, Copy)]
pub struct Relation {
    pub id: &'static str,
    pub arity: usize,
    admissible: fn(usize, &[usize]) -> bool,
    build: Builder,
}

impl Relation {
    pub fn admissible(&self, r: usize, colors: &[usize]) -> bool {
        colors.len() == self.arity && colors.iter().all(|c| (1..=r).contains(c)) && (self.admissible)(r, colors)
    }

    pub fn instance(&self, r: usize, colors: &[usize]) -> Result<Vec<(M, M)>> {
        if !self.admissible(r, colors) {
            return Err(Error::InvalidParams(format!(
                "colors {:?} do not satisfy the side conditions of {} for r = {}",
                colors, self.id, r
            )));
        }
        Ok((self.build)(r, colors))
    }

    /// All admissible color assignments for rank `r`.
    pub fn color_patterns(&self, r: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..self.arity {
            out = out.into_iter().flat_map(|p| (1..=r).map(move |c| [p.clone(), vec![c]].concat())).collect();
        }
        out.retain(|p| self.admissible(r, p));
        out
    }
}

fn c(i: usize) -> Strand {
    Strand::Color(i)
}

const P: Strand = Strand::Plus;
const N: Strand = Strand::Minus;

fn id(l: &[Strand]) -> M {
    M::id(l)
}

fn g(x: G) -> M {
    M::Gen(x)
}

fn v(ms: Vec<M>) -> M {
    M::vchain(ms)
}

fn h(ms: Vec<M>) -> M {
    M::hchain(ms)
}

fn q(n: i64, d: i64) -> Rat {
    Rat::new(n as i128, d as i128)
}

fn cap(i: usize) -> M {
    M::vcomp(G::EndDot(i), G::Merge(i))
}

fn cup(i: usize) -> M {
    M::vcomp(G::Split(i), G::StartDot(i))
}

/// Broken strand: `enddot o startdot`.
fn bb(i: usize) -> M {
    M::vcomp(G::EndDot(i), G::StartDot(i))
}

/// A polynomial in boxes: `sum coef * (product of boxes)`.
fn boxes(terms: Vec<(Rat, Vec<G>)>) -> M {
    M::lin(
        terms
            .into_iter()
            .map(|(k, f)| (k, if f.is_empty() { id(&[]) } else { v(f.into_iter().map(g).collect()) }))
            .collect(),
    )
}

/// `(p (x) id_l, id_l (x) p)` for a closed diagram `p`.
fn commutes(p: M, l: &[Strand]) -> (M, M) {
    (h(vec![p.clone(), id(l)]), h(vec![id(l), p]))
}

fn prev_color(r: usize, i: usize) -> usize {
    (i + r - 2) % r + 1
}

/// Composite of braid moves along a path of words, each step a six-valent vertex or a crossing.
fn braid_path(r: usize, words: &[Vec<usize>]) -> M {
    let mut steps = Vec::new();
    for w in words.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let first = (0..a.len()).find(|&k| a[k] != b[k]).expect("repeated word in path");
        let last = (0..a.len()).rfind(|&k| a[k] != b[k]).unwrap();
        let gen = match last - first {
            1 => G::V4(a[first], a[first + 1]),
            2 => G::V6(a[first], a[first + 1]),
            _ => panic!("not a braid move"),
        };
        debug_assert!(gen.validate(r).is_ok());
        let left: Vec<Strand> = a[..first].iter().map(|&x| c(x)).collect();
        let right: Vec<Strand> = a[last + 1..].iter().map(|&x| c(x)).collect();
        steps.push(h(vec![id(&left), g(gen), id(&right)]));
    }
    steps.reverse();
    v(steps)
}

fn any(_: usize, _: &[usize]) -> bool {
    true
}

fn dist2(r: usize, x: &[usize]) -> bool {
    r >= 3 && distant(r, x[0], x[1])
}

fn adj2(r: usize, x: &[usize]) -> bool {
    r >= 3 && adjacent(r, x[0], x[1])
}

fn up2(r: usize, x: &[usize]) -> bool {
    r >= 3 && x[1] == next_color(r, x[0])
}

fn slide6m2(r: usize, x: &[usize]) -> bool {
    r >= 3 && x[0] == next_color(r, x[1])
}

fn not_last(r: usize, x: &[usize]) -> bool {
    x[0] != r
}

fn not_first(_: usize, x: &[usize]) -> bool {
    x[0] != 1
}

/// The full relation catalogue.
pub fn catalogue() -> Vec<Relation> {
    vec![
        Relation {
            id: "adj",
            arity: 1,
            admissible: any,
            build: |_, x| {
                let i = x[0];
                vec![
                    (v(vec![h(vec![cap(i), id(&[c(i)])]), h(vec![id(&[c(i)]), cup(i)])]), id(&[c(i)])),
                    (v(vec![h(vec![id(&[c(i)]), cap(i)]), h(vec![cup(i), id(&[c(i)])])]), id(&[c(i)])),
                ]
            },
        },
        Relation {
            id: "curldot",
            arity: 1,
            admissible: any,
            build: |_, x| {
                let i = x[0];
                vec![
                    (g(G::EndDot(i)), v(vec![cap(i), h(vec![id(&[c(i)]), g(G::StartDot(i))])])),
                    (g(G::EndDot(i)), v(vec![cap(i), h(vec![g(G::StartDot(i)), id(&[c(i)])])])),
                ]
            },
        },
        Relation {
            id: "v3rot",
            arity: 1,
            admissible: any,
            build: |_, x| {
                let i = x[0];
                let ci = [c(i)];
                vec![
                    (g(G::Merge(i)), v(vec![h(vec![cap(i), id(&ci)]), h(vec![id(&ci), g(G::Split(i))])])),
                    (g(G::Merge(i)), v(vec![h(vec![id(&ci), cap(i)]), h(vec![g(G::Split(i)), id(&ci)])])),
                ]
            },
        },
        Relation {
            id: "v4rot",
            arity: 2,
            admissible: dist2,
            build: |_, x| {
                let (i, j) = (x[0], x[1]);
                let (ci, cj) = ([c(i)], [c(j)]);
                vec![
                    (
                        g(G::V4(i, j)),
                        v(vec![
                            h(vec![id(&[c(j), c(i)]), cap(j)]),
                            h(vec![id(&cj), g(G::V4(j, i)), id(&cj)]),
                            h(vec![cup(j), id(&[c(i), c(j)])]),
                        ]),
                    ),
                    (
                        g(G::V4(i, j)),
                        v(vec![
                            h(vec![cap(i), id(&[c(j), c(i)])]),
                            h(vec![id(&ci), g(G::V4(j, i)), id(&ci)]),
                            h(vec![id(&[c(i), c(j)]), cup(i)]),
                        ]),
                    ),
                ]
            },
        },
        Relation {
            id: "v6rot",
            arity: 2,
            admissible: adj2,
            build: |_, x| {
                let (i, j) = (x[0], x[1]);
                let (ci, cj) = ([c(i)], [c(j)]);
                vec![
                    (
                        g(G::V6(i, j)),
                        v(vec![
                            h(vec![id(&[c(j), c(i), c(j)]), cap(i)]),
                            h(vec![id(&cj), g(G::V6(j, i)), id(&ci)]),
                            h(vec![cup(j), id(&[c(i), c(j), c(i)])]),
                        ]),
                    ),
                    (
                        g(G::V6(i, j)),
                        v(vec![
                            h(vec![cap(i), id(&[c(j), c(i), c(j)])]),
                            h(vec![id(&ci), g(G::V6(j, i)), id(&cj)]),
                            h(vec![id(&[c(i), c(j), c(i)]), cup(j)]),
                        ]),
                    ),
                ]
            },
        },
        Relation {
            id: "adjmu",
            arity: 0,
            admissible: any,
            build: |_, _| {
                vec![
                    (v(vec![h(vec![id(&[P]), g(G::CapMinus)]), h(vec![g(G::CupPlus), id(&[P])])]), id(&[P])),
                    (v(vec![h(vec![g(G::CapPlus), id(&[P])]), h(vec![id(&[P]), g(G::CupMinus)])]), id(&[P])),
                ]
            },
        },
        Relation {
            id: "adjmd",
            arity: 0,
            admissible: any,
            build: |_, _| {
                vec![
                    (v(vec![h(vec![id(&[N]), g(G::CapPlus)]), h(vec![g(G::CupMinus), id(&[N])])]), id(&[N])),
                    (v(vec![h(vec![g(G::CapMinus), id(&[N])]), h(vec![id(&[N]), g(G::CupPlus)])]), id(&[N])),
                ]
            },
        },
        Relation {
            id: "v4mrotu",
            arity: 1,
            admissible: any,
            build: |r, x| {
                let i = x[0];
                let ni = next_color(r, i);
                vec![
                    (
                        g(G::M4Ur(i)),
                        v(vec![
                            h(vec![g(G::CapPlus), id(&[c(ni), P])]),
                            h(vec![id(&[P]), g(G::M4Dr(i)), id(&[P])]),
                            h(vec![id(&[P, c(i)]), g(G::CupMinus)]),
                        ]),
                    ),
                    (
                        g(G::M4Ur(i)),
                        v(vec![
                            h(vec![id(&[c(ni), P]), cap(i)]),
                            h(vec![id(&[c(ni)]), g(G::M4Ul(i)), id(&[c(i)])]),
                            h(vec![cup(ni), id(&[P, c(i)])]),
                        ]),
                    ),
                ]
            },
        },
        Relation {
            id: "v4mrotd",
            arity: 1,
            admissible: any,
            build: |r, x| {
                let i = x[0];
                let ni = next_color(r, i);
                vec![
                    (
                        g(G::M4Dl(i)),
                        v(vec![
                            h(vec![g(G::CapMinus), id(&[c(i), N])]),
                            h(vec![id(&[N]), g(G::M4Ul(i)), id(&[N])]),
                            h(vec![id(&[N, c(ni)]), g(G::CupPlus)]),
                        ]),
                    ),
                    (
                        g(G::M4Dl(i)),
                        v(vec![
                            h(vec![id(&[c(i), N]), cap(ni)]),
                            h(vec![id(&[c(i)]), g(G::M4Dr(i)), id(&[c(ni)])]),
                            h(vec![cup(i), id(&[N, c(ni)])]),
                        ]),
                    ),
                ]
            },
        },
        Relation {
            id: "dumbrot",
            arity: 1,
            admissible: any,
            build: |_, x| {
                let i = x[0];
                let ci = [c(i)];
                let mid = M::vcomp(G::Split(i), G::Merge(i));
                vec![
                    (v(vec![h(vec![id(&ci), g(G::Merge(i))]), h(vec![g(G::Split(i)), id(&ci)])]), mid.clone()),
                    (v(vec![h(vec![g(G::Merge(i)), id(&ci)]), h(vec![id(&ci), g(G::Split(i))])]), mid),
                ]
            },
        },
        Relation {
            id: "lollipop",
            arity: 1,
            admissible: any,
            build: |_, x| {
                let i = x[0];
                vec![(M::vcomp(G::Merge(i), G::Split(i)), M::Zero(vec![c(i)], vec![c(i)]))]
            },
        },
        Relation {
            id: "deltam",
            arity: 1,
            admissible: any,
            build: |_, x| {
                let i = x[0];
                let (a, b) = commutes(bb(i), &[c(i)]);
                vec![(a.plus(b), M::vcomp(G::StartDot(i), G::EndDot(i)).scaled(Rat::int(2)))]
            },
        },
        Relation {
            id: "reid2dist",
            arity: 2,
            admissible: dist2,
            build: |_, x| {
                let (i, j) = (x[0], x[1]);
                vec![(M::vcomp(G::V4(j, i), G::V4(i, j)), id(&[c(i), c(j)]))]
            },
        },
        Relation {
            id: "slidedotdist",
            arity: 2,
            admissible: dist2,
            build: |_, x| {
                let (i, j) = (x[0], x[1]);
                vec![
                    (
                        v(vec![g(G::V4(i, j)), h(vec![g(G::StartDot(i)), id(&[c(j)])])]),
                        h(vec![id(&[c(j)]), g(G::StartDot(i))]),
                    ),
                    (
                        v(vec![h(vec![id(&[c(j)]), g(G::EndDot(i))]), g(G::V4(i, j))]),
                        h(vec![g(G::EndDot(i)), id(&[c(j)])]),
                    ),
                ]
            },
        },
        Relation {
            id: "slide3v",
            arity: 2,
            admissible: dist2,
            build: |_, x| {
                let (i, j) = (x[0], x[1]);
                vec![(
                    v(vec![g(G::V4(i, j)), h(vec![g(G::Merge(i)), id(&[c(j)])])]),
                    v(vec![
                        h(vec![id(&[c(j)]), g(G::Merge(i))]),
                        h(vec![g(G::V4(i, j)), id(&[c(i)])]),
                        h(vec![id(&[c(i)]), g(G::V4(i, j))]),
                    ]),
                )]
            },
        },
        Relation {
            id: "dot6v",
            arity: 2,
            admissible: adj2,
            build: |_, x| {
                let (i, j) = (x[0], x[1]);
                let (ci, cj) = ([c(i)], [c(j)]);
                let lhs = v(vec![g(G::V6(i, j)), h(vec![id(&ci), g(G::StartDot(j)), id(&ci)])]);
                let t1 = v(vec![h(vec![g(G::StartDot(j)), id(&ci), g(G::StartDot(j))]), g(G::Merge(i))]);
                let t2 = v(vec![h(vec![id(&cj), g(G::StartDot(i)), id(&cj)]), cup(j), cap(i)]);
                vec![(lhs, t1.plus(t2))]
            },
        },
        Relation {
            id: "reid3",
            arity: 2,
            admissible: adj2,
            build: |_, x| {
                let (i, j) = (x[0], x[1]);
                let ci = [c(i)];
                let iota = v(vec![h(vec![id(&ci), g(G::StartDot(j)), id(&ci)]), g(G::Split(i))]);
                let proj = v(vec![g(G::Merge(i)), h(vec![id(&ci), g(G::EndDot(j)), id(&ci)])]);
                vec![(M::vcomp(G::V6(j, i), G::V6(i, j)), id(&[c(i), c(j), c(i)]).plus(M::vcomp(iota, proj)))]
            },
        },
        Relation {
            id: "dumbsq",
            arity: 2,
            admissible: adj2,
            build: |_, x| {
                let (i, j) = (x[0], x[1]);
                vec![(
                    v(vec![g(G::V6(i, j)), h(vec![g(G::Merge(i)), id(&[c(j), c(i)])])]),
                    v(vec![
                        h(vec![id(&[c(j), c(i)]), g(G::Merge(j))]),
                        h(vec![g(G::V6(i, j)), id(&[c(j)])]),
                        h(vec![id(&[c(i)]), g(G::V6(i, j))]),
                    ]),
                )]
            },
        },
        Relation {
            id: "slidenext",
            arity: 2,
            admissible: adj2,
            build: |_, x| {
                let (i, j) = (x[0], x[1]);
                let (a, b) = commutes(bb(j), &[c(i)]);
                let (ai, bi) = commutes(bb(i), &[c(i)]);
                vec![(a.minus(b), bi.minus(ai).scaled(q(1, 2)))]
            },
        },
        Relation {
            id: "slide4v",
            arity: 3,
            admissible: |r, x| r >= 3 && distant(r, x[0], x[1]) && distant(r, x[0], x[2]) && distant(r, x[1], x[2]),
            build: |_, x| {
                let (i, j, k) = (x[0], x[1], x[2]);
                vec![(
                    v(vec![
                        h(vec![g(G::V4(j, k)), id(&[c(i)])]),
                        h(vec![id(&[c(j)]), g(G::V4(i, k))]),
                        h(vec![g(G::V4(i, j)), id(&[c(k)])]),
                    ]),
                    v(vec![
                        h(vec![id(&[c(k)]), g(G::V4(i, j))]),
                        h(vec![g(G::V4(i, k)), id(&[c(j)])]),
                        h(vec![id(&[c(i)]), g(G::V4(j, k))]),
                    ]),
                )]
            },
        },
        Relation {
            id: "slide6v",
            arity: 3,
            admissible: |r, x| r >= 3 && adjacent(r, x[0], x[1]) && distant(r, x[0], x[2]) && distant(r, x[1], x[2]),
            build: |_, x| {
                let (i, j, k) = (x[0], x[1], x[2]);
                vec![(
                    v(vec![
                        h(vec![id(&[c(k)]), g(G::V6(i, j))]),
                        h(vec![g(G::V4(i, k)), id(&[c(j), c(i)])]),
                        h(vec![id(&[c(i)]), g(G::V4(j, k)), id(&[c(i)])]),
                        h(vec![id(&[c(i), c(j)]), g(G::V4(i, k))]),
                    ]),
                    v(vec![
                        h(vec![g(G::V4(j, k)), id(&[c(i), c(j)])]),
                        h(vec![id(&[c(j)]), g(G::V4(i, k)), id(&[c(j)])]),
                        h(vec![id(&[c(j), c(i)]), g(G::V4(j, k))]),
                        h(vec![g(G::V6(i, j)), id(&[c(k)])]),
                    ]),
                )]
            },
        },
        Relation {
            id: "dumbdumbsquare",
            arity: 1,
            admissible: |r, x| {
                let (a, b) = (x[0], next_color(r, x[0]));
                let cc = next_color(r, b);
                r >= 4 && distant(r, a, cc)
            },
            build: |r, x| {
                let a = x[0];
                let b = next_color(r, a);
                let cc = next_color(r, b);
                let word = |s: &str| -> Vec<usize> {
                    s.bytes()
                        .map(|d| match d {
                            b'1' => a,
                            b'2' => b,
                            _ => cc,
                        })
                        .collect()
                };
                let p: Vec<_> = ["121321", "212321", "213231", "231231", "231213", "232123", "323123"]
                    .iter()
                    .map(|s| word(s))
                    .collect();
                let qw: Vec<_> =
                    ["121321", "123121", "123212", "132312", "312312", "312132", "321232", "321323", "323123"]
                        .iter()
                        .map(|s| word(s))
                        .collect();
                vec![(braid_path(r, &p), braid_path(r, &qw))]
            },
        },
        Relation {
            id: "orbub",
            arity: 0,
            admissible: any,
            build: |_, _| {
                vec![
                    (M::vcomp(G::CapPlus, G::CupPlus), id(&[])),
                    (M::vcomp(G::CapMinus, G::CupMinus), id(&[])),
                ]
            },
        },
        Relation {
            id: "capcupud",
            arity: 0,
            admissible: any,
            build: |_, _| vec![(M::vcomp(G::CupPlus, G::CapPlus), id(&[P, N]))],
        },
        Relation {
            id: "capcupdu",
            arity: 0,
            admissible: any,
            build: |_, _| vec![(M::vcomp(G::CupMinus, G::CapMinus), id(&[N, P]))],
        },
        Relation {
            id: "slide4mv",
            arity: 2,
            admissible: dist2,
            build: |r, x| {
                let (i, j) = (x[0], x[1]);
                let (ni, nj) = (next_color(r, i), next_color(r, j));
                vec![(
                    v(vec![
                        h(vec![g(G::V4(ni, nj)), id(&[P])]),
                        h(vec![id(&[c(ni)]), g(G::M4Ur(j))]),
                        h(vec![g(G::M4Ur(i)), id(&[c(j)])]),
                    ]),
                    v(vec![
                        h(vec![id(&[c(nj)]), g(G::M4Ur(i))]),
                        h(vec![g(G::M4Ur(j)), id(&[c(i)])]),
                        h(vec![id(&[P]), g(G::V4(i, j))]),
                    ]),
                )]
            },
        },
        Relation {
            id: "reid2ml",
            arity: 1,
            admissible: any,
            build: |r, x| {
                let i = x[0];
                vec![
                    (M::vcomp(G::M4Ul(i), G::M4Ur(i)), id(&[P, c(i)])),
                    (M::vcomp(G::M4Ur(i), G::M4Ul(i)), id(&[c(next_color(r, i)), P])),
                ]
            },
        },
        Relation {
            id: "reid2mr",
            arity: 1,
            admissible: any,
            build: |r, x| {
                let i = x[0];
                vec![
                    (M::vcomp(G::M4Dl(i), G::M4Dr(i)), id(&[c(i), N])),
                    (M::vcomp(G::M4Dr(i), G::M4Dl(i)), id(&[N, c(next_color(r, i))])),
                ]
            },
        },
        Relation {
            id: "slidedotdist-md",
            arity: 1,
            admissible: any,
            build: |r, x| {
                let i = x[0];
                let ni = next_color(r, i);
                vec![
                    (
                        v(vec![g(G::M4Dr(i)), h(vec![g(G::StartDot(i)), id(&[N])])]),
                        h(vec![id(&[N]), g(G::StartDot(ni))]),
                    ),
                    (
                        v(vec![h(vec![id(&[N]), g(G::EndDot(ni))]), g(G::M4Dr(i))]),
                        h(vec![g(G::EndDot(i)), id(&[N])]),
                    ),
                ]
            },
        },
        Relation {
            id: "slidedotdist-mu",
            arity: 1,
            admissible: any,
            build: |r, x| {
                let i = x[0];
                let ni = next_color(r, i);
                vec![
                    (
                        v(vec![g(G::M4Ur(i)), h(vec![id(&[P]), g(G::StartDot(i))])]),
                        h(vec![g(G::StartDot(ni)), id(&[P])]),
                    ),
                    (
                        v(vec![h(vec![g(G::EndDot(ni)), id(&[P])]), g(G::M4Ur(i))]),
                        h(vec![id(&[P]), g(G::EndDot(i))]),
                    ),
                ]
            },
        },
        Relation {
            id: "mslide3v",
            arity: 1,
            admissible: any,
            build: |r, x| {
                let i = x[0];
                let ni = next_color(r, i);
                vec![(
                    v(vec![g(G::M4Ur(i)), h(vec![id(&[P]), g(G::Merge(i))])]),
                    v(vec![
                        h(vec![g(G::Merge(ni)), id(&[P])]),
                        h(vec![id(&[c(ni)]), g(G::M4Ur(i))]),
                        h(vec![g(G::M4Ur(i)), id(&[c(i)])]),
                    ]),
                )]
            },
        },
        Relation { id: "slide6mv", arity: 2, admissible: up2, build: |r, x| slide6m(r, x[0], x[1]) },
        Relation { id: "slide6mv2", arity: 2, admissible: slide6m2, build: |r, x| slide6m(r, x[0], x[1]) },
        Relation {
            id: "box1",
            arity: 1,
            admissible: not_last,
            build: |r, x| {
                let i = x[0];
                vec![(bb(i), boxes(vec![(Rat::one(), vec![G::BoxX(next_color(r, i))]), (Rat::int(-1), vec![G::BoxX(i)])]))]
            },
        },
        Relation {
            id: "box12",
            arity: 0,
            admissible: any,
            build: |r, _| {
                vec![(
                    bb(r),
                    boxes(vec![
                        (Rat::one(), vec![G::BoxX(1)]),
                        (Rat::int(-1), vec![G::BoxX(r)]),
                        (Rat::int(-1), vec![G::BoxY]),
                    ]),
                )]
            },
        },
        Relation {
            id: "box13",
            arity: 1,
            admissible: any,
            build: |r, x| {
                let i = x[0];
                let p = boxes(vec![(Rat::one(), vec![G::BoxX(i)]), (Rat::one(), vec![G::BoxX(next_color(r, i))])]);
                vec![commutes(p, &[c(i)])]
            },
        },
        Relation {
            id: "box14",
            arity: 1,
            admissible: not_last,
            build: |_, x| {
                let i = x[0];
                vec![commutes(boxes(vec![(Rat::one(), vec![G::BoxX(i), G::BoxX(i + 1)])]), &[c(i)])]
            },
        },
        Relation {
            id: "box15",
            arity: 0,
            admissible: any,
            build: |r, _| {
                let p = boxes(vec![
                    (Rat::one(), vec![G::BoxX(r), G::BoxX(1)]),
                    (q(-1, 2), vec![G::BoxX(r), G::BoxY]),
                    (q(1, 2), vec![G::BoxY, G::BoxX(1)]),
                    (q(-1, 4), vec![G::BoxY, G::BoxY]),
                ]);
                vec![commutes(p, &[c(r)])]
            },
        },
        Relation {
            id: "box16",
            arity: 2,
            admissible: |r, x| x[1] != x[0] && x[1] != next_color(r, x[0]),
            build: |_, x| vec![commutes(g(G::BoxX(x[1])), &[c(x[0])])],
        },
        Relation { id: "box2", arity: 1, admissible: any, build: |_, x| vec![commutes(g(G::BoxY), &[c(x[0])])] },
        Relation { id: "box3", arity: 0, admissible: any, build: |_, _| vec![commutes(g(G::BoxY), &[P])] },
        Relation { id: "box31", arity: 0, admissible: any, build: |_, _| vec![commutes(g(G::BoxY), &[N])] },
        Relation {
            id: "box32",
            arity: 1,
            admissible: not_last,
            build: |_, x| {
                let i = x[0];
                vec![(h(vec![g(G::BoxX(i + 1)), id(&[P])]), h(vec![id(&[P]), g(G::BoxX(i))]))]
            },
        },
        Relation {
            id: "box33",
            arity: 0,
            admissible: any,
            build: |r, _| {
                let p = boxes(vec![(Rat::one(), vec![G::BoxX(1)]), (Rat::int(-1), vec![G::BoxY])]);
                vec![(h(vec![p, id(&[P])]), h(vec![id(&[P]), g(G::BoxX(r))]))]
            },
        },
        Relation {
            id: "box34",
            arity: 1,
            admissible: not_first,
            build: |_, x| {
                let i = x[0];
                vec![(h(vec![g(G::BoxX(i - 1)), id(&[N])]), h(vec![id(&[N]), g(G::BoxX(i))]))]
            },
        },
        Relation {
            id: "boxlast",
            arity: 0,
            admissible: any,
            build: |r, _| {
                let p = boxes(vec![(Rat::one(), vec![G::BoxX(r)]), (Rat::one(), vec![G::BoxY])]);
                vec![(h(vec![p, id(&[N])]), h(vec![id(&[N]), g(G::BoxX(1))]))]
            },
        },
    ]
}

/// Derived identities that must also hold under the functor.
pub fn remark_checks() -> Vec<Relation> {
    vec![
        Relation {
            id: "rem-v",
            arity: 0,
            admissible: any,
            build: |r, _| {
                let sum = M::lin((1..=r).map(|k| (Rat::int(-1), bb(k))).collect());
                vec![(g(G::BoxY), sum)]
            },
        },
        Relation {
            id: "rem-vi",
            arity: 1,
            admissible: |r, _| r >= 3,
            build: |r, x| {
                let i = x[0];
                let p = M::lin(
                    [prev_color(r, i), i, next_color(r, i)].into_iter().map(|k| (Rat::one(), bb(k))).collect(),
                );
                vec![commutes(p, &[c(i)])]
            },
        },
    ]
}

/// Sliding a `+` strand through a six-valent vertex of colors `(a, b)`.
fn slide6m(r: usize, a: usize, b: usize) -> Vec<(M, M)> {
    let (na, nb) = (next_color(r, a), next_color(r, b));
    vec![(
        v(vec![
            h(vec![g(G::V6(na, nb)), id(&[P])]),
            h(vec![id(&[c(na), c(nb)]), g(G::M4Ur(a))]),
            h(vec![id(&[c(na)]), g(G::M4Ur(b)), id(&[c(a)])]),
            h(vec![g(G::M4Ur(a)), id(&[c(b), c(a)])]),
        ]),
        v(vec![
            h(vec![id(&[c(nb), c(na)]), g(G::M4Ur(b))]),
            h(vec![id(&[c(nb)]), g(G::M4Ur(a)), id(&[c(b)])]),
            h(vec![g(G::M4Ur(b)), id(&[c(a), c(b)])]),
            h(vec![id(&[P]), g(G::V6(a, b))]),
        ]),
    )]
}

pub fn find_relation(id: &str) -> Result<Relation> {
    catalogue()
        .into_iter()
        .chain(remark_checks())
        .find(|rel| rel.id == id)
        .ok_or_else(|| Error::Unknown { kind: "relation", name: id.to_string() })
}

/// Compares two morphisms on every basis tag of their common source.
/// Returns a description of the first differing basis vector.
pub fn compare_morphisms(r: usize, lhs: &M, rhs: &M) -> Result<Option<String>> {
    let (s1, t1) = lhs.signature(r)?;
    let (s2, t2) = rhs.signature(r)?;
    if s1 != s2 || t1 != t2 {
        return Err(Error::Mismatch(format!("sides of {} = {} have different types", lhs, rhs)));
    }
    let obj = SoergelObject::new(s1, 0);
    for tag in obj.tags() {
        let e = BimElement::basis(r, obj.clone(), tag.clone());
        let a = apply_morphism(r, lhs, &e)?;
        let b = apply_morphism(r, rhs, &e)?;
        if a != b {
            return Ok(Some(format!("tag {}: lhs {} rhs {}", format_tag(&tag), a, b)));
        }
    }
    Ok(None)
}

fn case_id(id: &str, colors: &[usize]) -> String {
    if colors.is_empty() {
        id.to_string()
    } else {
        format!("{}[{}]", id, colors.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
    }
}

fn check_instance(r: usize, rel: &Relation, colors: &[usize]) -> Result<Outcome> {
    let id = case_id(rel.id, colors);
    for (k, (lhs, rhs)) in rel.instance(r, colors)?.iter().enumerate() {
        if let Some(w) = compare_morphisms(r, lhs, rhs)? {
            return Ok(Outcome::fail(id, format!("equation {}: {}", k + 1, w)));
        }
    }
    Ok(Outcome::pass(id))
}

/// Checks relation `id` for one color assignment.
pub fn check_relation(r: usize, id: &str, colors: &[usize]) -> Result<Outcome> {
    check_instance(r, &find_relation(id)?, colors)
}

/// Checks every relation over all admissible color patterns.
pub fn relation_sweep(r: usize) -> Vec<Outcome> {
    let cases: Vec<(Relation, Vec<usize>)> = catalogue()
        .into_iter()
        .chain(remark_checks())
        .flat_map(|rel| {
            rel.color_patterns(r).into_iter().map(move |p| (rel, p))
        })
        .collect();
    let out: Vec<Outcome> = cases
        .par_iter()
        .map(|(rel, p)| {
            check_instance(r, rel, p).unwrap_or_else(|e| Outcome::fail(case_id(rel.id, p), format!("error: {}", e)))
        })
        .collect();
    crate::report::sorted(out)
}

/// Every generator valid at rank `r`, over all colors.
pub fn all_generators(r: usize) -> Vec<G> {
    let mut out = vec![G::CapPlus, G::CapMinus, G::CupPlus, G::CupMinus, G::BoxY];
    for i in 1..=r {
        out.extend([
            G::EndDot(i),
            G::StartDot(i),
            G::Merge(i),
            G::Split(i),
            G::M4Ur(i),
            G::M4Ul(i),
            G::M4Dr(i),
            G::M4Dl(i),
            G::BoxX(i),
        ]);
        for j in 1..=r {
            if G::V4(i, j).validate(r).is_ok() {
                out.push(G::V4(i, j));
            }
            if G::V6(i, j).validate(r).is_ok() {
                out.push(G::V6(i, j));
            }
        }
    }
    out
}

/// Checks that every generator shifts the degree of each homogeneous basis vector by its table degree.
pub fn degree_audit(r: usize) -> Vec<Outcome> {
    let out = all_generators(r)
        .par_iter()
        .map(|gen| {
            let src = SoergelObject::new(gen.source(r), 0);
            for tag in src.tags() {
                let e = BimElement::basis(r, src.clone(), tag.clone());
                let d0 = e.degree().expect("basis vectors are homogeneous");
                let img = match apply_gen(r, gen, 0, &e) {
                    Ok(x) => x,
                    Err(err) => return Outcome::fail(format!("degree[{}]", gen), err.to_string()),
                };
                if img.is_zero() {
                    continue;
                }
                if img.degree() != Some(d0 + gen.degree()) {
                    return Outcome::fail(
                        format!("degree[{}]", gen),
                        format!("tag {}: image {} has degree {:?}, expected {}", format_tag(&tag), img, img.degree(), d0 + gen.degree()),
                    );
                }
            }
            Outcome::pass(format!("degree[{}]", gen))
        })
        .collect();
    crate::report::sorted(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lollipop_and_orbub() {
        assert!(check_relation(3, "lollipop", &[2]).unwrap().pass);
        assert!(check_relation(3, "orbub", &[]).unwrap().pass);
        assert!(check_relation(3, "deltam", &[1]).unwrap().pass);
    }

    #[test]
    fn invalid_colors_rejected() {
        assert!(check_relation(3, "reid2dist", &[1, 2]).is_err());
        assert!(check_relation(3, "nonsense", &[]).is_err());
    }

    #[test]
    fn degree_audit_passes() {
        for o in degree_audit(3) {
            assert!(o.pass, "{}", o);
        }
    }
}
