//! Sweeps over weights: equality of displayed expressions, bimodule compatibility, degrees and
//! biadjunction zig-zags of the color-`n` maps.

use super::bimod::{TensorElement, Word};
use super::fprime::{apply_local, LocalMap, Piece};
use super::sym::PartialInvariantRing;
use crate::arith::Poly;
use crate::error::Result;
use crate::report::Outcome;
use rayon::prelude::*;

/// All compositions of `r` into `n` nonnegative parts.
pub fn compositions(n: usize, r: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if r == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=r {
        for mut rest in compositions(n - 1, r - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every color-`n` generator with a fixed shape.
pub fn pieces(n: usize) -> Vec<Piece> {
    use Piece::*;
    let mut v = vec![CupEF, CupFE, CapEF, CapFE, CrossNNUp, CrossNNDown];
    for j in 2..=n.saturating_sub(2) {
        v.extend([CrossUpNJ(j), CrossUpJN(j), CrossDownNJ(j), CrossDownJN(j)]);
    }
    v.extend([CrossUp1N, CrossDown1N, CrossUpN1, CrossDownN1, CrossUpNM, CrossDownNM, CrossUpMN, CrossDownMN]);
    v
}

fn lam_str(lam: &[usize]) -> String {
    lam.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Instances `(piece, lambda)` with nonzero source and target, `lambda_1, lambda_n <= cap`.
pub fn instances(n: usize, r: usize, cap: usize) -> Vec<LocalMap> {
    let mut out = Vec::new();
    for lam in compositions(n, r) {
        if lam[0] > cap || lam[n - 1] > cap {
            continue;
        }
        for p in pieces(n) {
            if let Ok(m) = LocalMap::new(p, n, &lam) {
                out.push(m);
            }
        }
    }
    out
}

fn exps(map: &LocalMap, amax: u32) -> Vec<(u32, u32)> {
    if map.src.is_empty() {
        return vec![(0, 0)];
    }
    (0..=amax).flat_map(|a| (0..=amax).map(move |b| (a, b))).collect()
}

fn first_failure(id: String, checks: impl Iterator<Item = Result<Option<String>>>) -> Outcome {
    for c in checks {
        match c {
            Ok(None) => {}
            Ok(Some(w)) => return Outcome::fail(id, w),
            Err(e) => return Outcome::fail(id, format!("error: {}", e)),
        }
    }
    Outcome::pass(id)
}

/// Both displayed expressions of the map agree for all exponents up to `amax`.
pub fn two_form_check(map: &LocalMap, amax: u32) -> Outcome {
    let id = format!("twoform {} ({})", map.piece, lam_str(map.lambda()));
    let checks = exps(map, amax).into_iter().map(|(a1, a2)| -> Result<Option<String>> {
        let v0 = map.value(0, a1, a2)?;
        for f in 1..map.forms.len() {
            let v = map.value(f, a1, a2)?;
            if v != v0 {
                return Ok(Some(format!("a=({},{}): {} vs {}", a1, a2, v0, v)));
            }
        }
        Ok(None)
    });
    first_failure(id, checks)
}

/// The map respects the tensor relation in the middle and the relations among powers of the
/// singletons, so it is a well-defined bimodule map. Cups must land in the centralizer of `R_lambda`.
pub fn bimodule_check(map: &LocalMap, form: usize, amax: u32) -> Outcome {
    let id = format!("bimodule {}#{} ({})", map.piece, form, lam_str(map.lambda()));
    let r = map.ctx.r;
    let checks: Vec<Result<Option<String>>> = if map.src.is_empty() {
        let gens = PartialInvariantRing::new(map.lambda().to_vec()).generators();
        gens.iter()
            .map(|g| {
                let c = map.value(form, 0, 0)?;
                let (l, rr) = (c.left_mul(g), c.right_mul(g));
                Ok(if l == rr { None } else { Some(format!("{} does not commute with {}", g, c)) })
            })
            .collect()
    } else {
        let sw = match map.src_word() {
            Ok(w) => w,
            Err(e) => return Outcome::fail(id, e.to_string()),
        };
        let mid = PartialInvariantRing::new(sw.weight_after(1)).generators();
        let (s0, s1) = (&sw.steps[0], &sw.steps[1]);
        let mut v = Vec::new();
        for a1 in 0..=amax + 1 {
            for a2 in 0..=amax + 1 {
                let f1 = Poly::x(r, s1.z).pow(a1);
                let f0 = s0.from_induced(&Poly::x(r, s0.ind_z).pow(a2));
                v.push((|| {
                    let direct = map.value(form, a1, a2)?;
                    let split = map.eval_pure(form, &[f0.clone(), f1.clone()])?;
                    if direct != split {
                        return Ok(Some(format!("a=({},{}): formula {} but reduced {}", a1, a2, direct, split)));
                    }
                    for g in &mid {
                        let lhs = map.eval_pure(form, &[&f0 * g, f1.clone()])?;
                        let rhs = map.eval_pure(form, &[f0.clone(), &f1 * &s1.from_induced(g)])?;
                        if lhs != rhs {
                            return Ok(Some(format!("a=({},{}), moving {}: {} vs {}", a1, a2, g, lhs, rhs)));
                        }
                    }
                    Ok(None)
                })());
            }
        }
        v
    };
    first_failure(id, checks.into_iter())
}

fn term_degrees(e: &TensorElement, extra: i64) -> Vec<i64> {
    e.terms
        .iter()
        .flat_map(|(k, c)| {
            let base = 2 * k.iter().map(|&x| x as i64).sum::<i64>() + e.word.shift() + extra;
            c.terms().map(move |(m, _)| base + 2 * m.iter().map(|&x| x as i64).sum::<i64>()).collect::<Vec<_>>()
        })
        .collect()
}

/// Every output term has degree `input + table degree`.
pub fn degree_check(map: &LocalMap, amax: u32) -> Outcome {
    let id = format!("degree {} ({})", map.piece, lam_str(map.lambda()));
    let checks = exps(map, amax).into_iter().map(|(a1, a2)| -> Result<Option<String>> {
        let sw = map.src_word()?;
        let input = 2 * (a1 + a2) as i64 + sw.shift();
        let v = map.value(0, a1, a2)?;
        for d in term_degrees(&v, -map.extra_shift) {
            if d - input != map.expected_degree {
                return Ok(Some(format!("a=({},{}): degree {}, expected {}", a1, a2, d - input, map.expected_degree)));
            }
        }
        Ok(None)
    });
    first_failure(id, checks)
}

/// The four zig-zag composites on `E_{+-n} 1_lambda`; each must be the identity.
pub fn zigzag_checks(n: usize, lam: &[usize]) -> Vec<Outcome> {
    let ni = n as i64;
    let mut out = Vec::new();
    let plans: [(i64, &str, Piece, usize, Piece, usize); 4] = [
        (ni, "up cup-ef/cap-fe", Piece::CupEF, 0, Piece::CapFE, 1),
        (ni, "up cup-fe/cap-ef", Piece::CupFE, 1, Piece::CapEF, 0),
        (-ni, "down cup-fe/cap-ef", Piece::CupFE, 0, Piece::CapEF, 1),
        (-ni, "down cup-ef/cap-fe", Piece::CupEF, 1, Piece::CapFE, 0),
    ];
    for (label, name, cup, cpos, cap, kpos) in plans {
        let Ok(w) = Word::new(n, lam, &[label]) else { continue };
        let id = format!("zigzag {} ({})", name, lam_str(lam));
        let res = (|| -> Result<Option<String>> {
            let one = TensorElement::one(&w);
            let cup_map = LocalMap::new(cup, n, &w.weight_after(cpos))?;
            let e = apply_local(&one, cpos, &cup_map, 0)?;
            let cap_map = LocalMap::new(cap, n, &e.word.weight_after(kpos))?;
            let back = apply_local(&e, kpos, &cap_map, 0)?;
            Ok(if back == one { None } else { Some(format!("got {}", back)) })
        })();
        out.push(first_failure(id, std::iter::once(res)));
    }
    out
}

/// Runs every check for `(n, r)`: displayed-form equalities (`lambda_1, lambda_n <= 3`), bimodule
/// compatibility, degrees and zig-zags (`lambda_1, lambda_n <= 2`).
pub fn fprime_sweep(n: usize, r: usize) -> Vec<Outcome> {
    let maps = instances(n, r, 3);
    let mut out: Vec<Outcome> = maps
        .par_iter()
        .flat_map_iter(|m| {
            let mut v = Vec::new();
            if m.forms.len() > 1 {
                v.push(two_form_check(m, 3));
            }
            for f in 0..m.forms.len() {
                v.push(bimodule_check(m, f, 2));
            }
            v.push(degree_check(m, 2));
            v
        })
        .collect();
    let lams: Vec<Vec<usize>> = compositions(n, r).into_iter().filter(|l| l[0] <= 2 && l[n - 1] <= 2).collect();
    out.extend(lams.par_iter().flat_map_iter(|l| zigzag_checks(n, l)).collect::<Vec<_>>());
    out
}

#[cfg(test)]
mod tests {
    use super::super::fprime::{cap_fe_displayed, down_mn_variant, up_nm_variant, Formula};
    use super::*;

    fn failures(v: &[Outcome]) -> Vec<String> {
        v.iter().filter(|o| !o.pass).map(|o| o.to_string()).collect()
    }

    #[test]
    fn sweep_rank_three() {
        let out = fprime_sweep(4, 3);
        assert!(out.len() > 300);
        assert_eq!(failures(&out), Vec::<String>::new());
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 3).len(), 20);
        assert_eq!(compositions(5, 4).len(), 70);
    }

    #[test]
    fn displayed_cap_fe_is_not_homogeneous() {
        let mut bad = 0;
        for lam in compositions(4, 3) {
            let Ok(mut m) = LocalMap::new(Piece::CapFE, 4, &lam) else { continue };
            let f: Formula = |c, a1, a2| vec![vec![cap_fe_displayed(c, a1, a2)]];
            m.forms.push(f);
            if !two_form_check(&m, 3).pass {
                bad += 1;
            }
        }
        assert!(bad > 0);
    }

    #[test]
    fn displayed_adjacent_crossings_fail() {
        let lam = [1, 0, 1, 1];
        let mut up = LocalMap::new(Piece::CrossUpNM, 4, &lam).unwrap();
        up.forms = vec![|c, a1, a2| up_nm_variant(c, a1, a2, 1, true)];
        assert!(!bimodule_check(&up, 0, 2).pass);
        let mut down = LocalMap::new(Piece::CrossDownMN, 4, &lam).unwrap();
        assert!(bimodule_check(&down, 0, 2).pass);
        down.forms = vec![|c, a1, a2| down_mn_variant(c, a1, a2, 1, true)];
        assert!(!bimodule_check(&down, 0, 2).pass);
    }
}
