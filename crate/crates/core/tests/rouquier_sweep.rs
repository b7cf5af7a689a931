//! `d^2 = 0` on short braid words and braid invariance of Euler classes.

use affcat::hecke::HeckeElement;
use affcat::rouquier::{braid_complex, euler_class, verify_d2};
use affcat::weyl::{parse_word, Gen, Letter};
use rayon::prelude::*;

fn letters(r: usize) -> Vec<Letter> {
    let mut v = vec![(Gen::Rho, 1), (Gen::Rho, -1)];
    for i in 1..=r {
        v.push((Gen::S(i), 1));
        v.push((Gen::S(i), -1));
    }
    v
}

fn words(r: usize, max_len: usize) -> Vec<Vec<Letter>> {
    let mut all = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<Letter>| {
                letters(r).into_iter().map(move |l| {
                    let mut x = w.clone();
                    x.push(l);
                    x
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

#[test]
fn d_squared_vanishes_up_to_length_four() {
    let r = 3;
    let ws = words(r, 4);
    let failures: Vec<String> = ws
        .par_iter()
        .flat_map(|w| {
            let c = braid_complex(r, w).unwrap();
            verify_d2(&c).into_iter().filter(|o| !o.pass).map(|o| format!("{:?}: {}", w, o)).collect::<Vec<_>>()
        })
        .collect();
    assert!(failures.is_empty(), "{}", failures[..failures.len().min(5)].join("\n"));
}

#[test]
fn euler_class_is_multiplicative_and_matches_braid_image() {
    let r = 3;
    for w in words(r, 3) {
        let e = euler_class(&braid_complex(r, &w).unwrap()).unwrap();
        let mut prod = HeckeElement::one(r);
        for &l in &w {
            prod = prod.mul(&euler_class(&braid_complex(r, &[l]).unwrap()).unwrap()).unwrap();
        }
        assert_eq!(e, prod, "{:?}", w);
    }
}

#[test]
fn euler_class_respects_braid_relations() {
    for r in [3usize, 4] {
        let mut pairs: Vec<(String, String)> = Vec::new();
        for i in 1..=r {
            let j = i % r + 1;
            pairs.push((format!("s{} s{} s{}", i, j, i), format!("s{} s{} s{}", j, i, j)));
            pairs.push((format!("s{}^-1 s{}^-1 s{}^-1", i, j, i), format!("s{}^-1 s{}^-1 s{}^-1", j, i, j)));
            pairs.push((format!("rho s{} rho^-1", i), format!("s{}", j)));
            pairs.push((format!("s{} s{}^-1", i, i), "e".into()));
            pairs.push((format!("s{}^-1 s{}", i, i), "e".into()));
            pairs.push((format!("rho rho^-1 s{}", i), format!("s{}", i)));
            for k in 1..=r {
                let distant = k != i && k != j && i != k % r + 1;
                if distant {
                    pairs.push((format!("s{} s{}", i, k), format!("s{} s{}", k, i)));
                    pairs.push((format!("s{}^-1 s{}", i, k), format!("s{} s{}^-1", k, i)));
                }
            }
        }
        for (a, b) in pairs {
            let ea = euler_class(&braid_complex(r, &parse_word(r, &a).unwrap()).unwrap()).unwrap();
            let eb = euler_class(&braid_complex(r, &parse_word(r, &b).unwrap()).unwrap()).unwrap();
            assert_eq!(ea, eb, "r={} {} vs {}", r, a, b);
        }
    }
}

#[test]
fn euler_class_matches_renormalized_braid_image() {
    use affcat::arith::RatQ;
    let r = 3;
    for w in words(r, 3) {
        let e = euler_class(&braid_complex(r, &w).unwrap()).unwrap();
        let flipped: Vec<Letter> = w.iter().map(|&(g, x)| if let Gen::S(_) = g { (g, -x) } else { (g, x) }).collect();
        let k: i32 = w.iter().map(|&(g, x)| if let Gen::S(_) = g { 2 * x } else { 0 }).sum();
        let want = HeckeElement::braid_image(r, &flipped).unwrap().scale(&RatQ::qpow(1, k));
        assert_eq!(e, want, "{:?}", w);
    }
}
