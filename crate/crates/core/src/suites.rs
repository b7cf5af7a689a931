//! Named verification sweeps, shared by the command line and the acceptance harness. Each returns
//! one [`Outcome`] per case, sorted by case id.

use crate::arith::RatQ;
use crate::error::{Error, Result};
use crate::hecke::{elements_up_to_length, is_unitriangular, kl_basis, HeckeElement, KlTable};
use crate::report::{sorted, Outcome};
use crate::rouquier::{braid_complex, euler_class, tensor, verify_d2};
use crate::schur::{
    act, bilinear_form, check_cases, presentation_cases, rho_antiinv, sigma_cases, CaseResult, GenWord, SLetter,
    SchurElement, TensorVector,
};
use crate::singular;
use crate::soergel::{self, SoergelObject, Strand};
use crate::weyl::{parse_word, AffinePermutation, Gen, Letter};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 7] = ["weyl", "hecke", "schur", "soergel", "rouquier", "singular", "all"];

/// Parameters shared by the sweeps.
#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub r: usize,
    pub n: usize,
    /// Added to the default oracle window.
    pub window_extra: i64,
    pub max_length: usize,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { r: 3, n: 4, window_extra: 0, max_length: 4, seed: 7 }
    }
}

/// Runs the named suite; every case id is prefixed with the suite name.
pub fn run_suite(name: &str, p: &SuiteParams) -> Result<Vec<Outcome>> {
    let need_nr = || -> Result<()> {
        if p.r < 3 || p.n <= p.r {
            return Err(Error::InvalidParams(format!("this suite needs 3 <= r < n, got r = {}, n = {}", p.r, p.n)));
        }
        Ok(())
    };
    let out = match name {
        "weyl" => weyl_suite(p.r),
        "hecke" => {
            let mut v = hecke_suite(p.r);
            v.extend(associativity_suite(p.r, 200, 6, p.seed));
            v.extend(kl_suite(p.r, p.max_length));
            v
        }
        "schur" => {
            need_nr()?;
            let mut v = schur_suite(p.n, p.r, p.window_extra);
            v.extend(sigma_suite(p.n, p.r)?);
            v.extend(rho_adjoint_suite(p.n, p.r, 50, p.seed)?);
            v
        }
        "soergel" => {
            let mut v = soergel_suite(p.r);
            v.extend(witness_suite(p.r, 100, p.seed)?);
            v
        }
        "rouquier" => rouquier_suite(p.r, p.max_length)?,
        "singular" => {
            need_nr()?;
            singular_suite(p.n, p.r)?
        }
        "all" => {
            let mut v = Vec::new();
            for s in &SUITES[..6] {
                v.extend(run_suite(s, p)?);
            }
            return Ok(v);
        }
        _ => return Err(Error::Unknown { kind: "suite", name: name.to_string() }),
    };
    Ok(sorted(out.into_iter().map(|o| Outcome { id: format!("{} {}", name, o.id), ..o }).collect()))
}

fn perm(r: usize, word: &str) -> Result<AffinePermutation> {
    AffinePermutation::from_word(r, &parse_word(r, word)?)
}

fn same(id: String, a: Result<AffinePermutation>, b: Result<AffinePermutation>) -> Outcome {
    match (a, b) {
        (Ok(a), Ok(b)) if a == b => Outcome::pass(id),
        (Ok(a), Ok(b)) => Outcome::fail(id, format!("{} vs {}", a, b)),
        (Err(e), _) | (_, Err(e)) => Outcome::fail(id, e.to_string()),
    }
}

fn distant(r: usize, i: usize, j: usize) -> bool {
    i != j && i % r + 1 != j && j % r + 1 != i
}

/// The group presentation, `rho` as a product of a translation and simple reflections, and normal forms
/// of all elements of length at most 4.
pub fn weyl_suite(r: usize) -> Vec<Outcome> {
    let mut out = Vec::new();
    for i in 1..=r {
        let j = i % r + 1;
        out.push(same(format!("W1[{}]", i), perm(r, &format!("s{} s{}", i, i)), perm(r, "e")));
        out.push(same(format!("W3[{}]", i), perm(r, &format!("s{} s{} s{}", i, j, i)), perm(r, &format!("s{} s{} s{}", j, i, j))));
        out.push(same(format!("W4[{}]", i), perm(r, &format!("rho s{} rho^-1", i)), perm(r, &format!("s{}", j))));
        for k in 1..=r {
            if distant(r, i, k) {
                out.push(same(format!("W2[{},{}]", i, k), perm(r, &format!("s{} s{}", i, k)), perm(r, &format!("s{} s{}", k, i))));
            }
        }
    }
    let trans: String = std::iter::once("t1".to_string()).chain((1..r).map(|i| format!("s{}", i))).collect::<Vec<_>>().join(" ");
    out.push(same("rho-translation".into(), perm(r, &trans), perm(r, "rho")));
    out.push(same("rho-inverse".into(), perm(r, "rho rho^-1"), perm(r, "e")));
    for w in elements_up_to_length(r, 4) {
        for k in [-1i64, 0, 1] {
            let x = AffinePermutation::rho_pow(r, k).compose(&w).expect("same rank");
            let (kk, word) = x.normal_form();
            let back = word.iter().fold(AffinePermutation::rho_pow(r, kk), |acc, &i| acc.mul_simple(i));
            let id = format!("normal-form[{}]", x);
            out.push(if back == x && kk == k && word.len() == x.length() {
                Outcome::pass(id)
            } else {
                Outcome::fail(id, format!("rho^{} {:?}", kk, word))
            });
        }
    }
    sorted(out)
}

fn eq_outcome(id: String, a: Result<HeckeElement>, b: Result<HeckeElement>) -> Outcome {
    match (a, b) {
        (Ok(a), Ok(b)) if a == b => Outcome::pass(id),
        (Ok(a), Ok(b)) => Outcome::fail(id, format!("{} vs {}", a, b)),
        (Err(e), _) | (_, Err(e)) => Outcome::fail(id, e.to_string()),
    }
}

/// Relations among the KL generators `b_i` and the quadratic relation of `T_{s_i}`.
pub fn hecke_suite(r: usize) -> Vec<Outcome> {
    let b = |i: usize| HeckeElement::kl_gen(r, i);
    let mul = |x: Result<HeckeElement>, y: Result<HeckeElement>| x?.mul(&y?);
    let mut out = Vec::new();
    let qq = RatQ::qpow(1, 1) + RatQ::qpow(1, -1);
    for i in 1..=r {
        let j = i % r + 1;
        out.push(eq_outcome(format!("H1[{}]", i), mul(b(i), b(i)), b(i).map(|x| x.scale(&qq))));
        let lhs = mul(mul(b(i), b(j)), b(i)).and_then(|x| Ok(x.add(&b(j)?)));
        let rhs = mul(mul(b(j), b(i)), b(j)).and_then(|x| Ok(x.add(&b(i)?)));
        out.push(eq_outcome(format!("H3[{}]", i), lhs, rhs));
        let rho = HeckeElement::t(AffinePermutation::rho_pow(r, 1));
        let rhoinv = HeckeElement::t(AffinePermutation::rho_pow(r, -1));
        out.push(eq_outcome(format!("H4[{}]", i), mul(mul(Ok(rho), b(i)), Ok(rhoinv)), b(j)));
        for k in 1..=r {
            if distant(r, i, k) {
                out.push(eq_outcome(format!("H2[{},{}]", i, k), mul(b(i), b(k)), mul(b(k), b(i))));
            }
        }
        let t = HeckeElement::t_gen(r, Gen::S(i));
        let quad = t.clone().map(|t| t.scale(&(RatQ::qpow(1, 2) - RatQ::one())).add(&HeckeElement::scalar(r, RatQ::qpow(1, 2))));
        out.push(eq_outcome(format!("quadratic[{}]", i), mul(t.clone(), t), quad));
    }
    sorted(out)
}

fn random_hecke(r: usize, max_len: usize, rng: &mut ChaCha8Rng) -> HeckeElement {
    let mut letters: Vec<Letter> = (1..=r).map(|i| (Gen::S(i), 1)).collect();
    letters.extend([(Gen::Rho, 1), (Gen::Rho, -1)]);
    let mut h = HeckeElement::zero(r);
    for _ in 0..rng.gen_range(1..=2) {
        let len = rng.gen_range(0..=max_len);
        let word: Vec<Letter> = (0..len).map(|_| *letters.choose(rng).expect("nonempty")).collect();
        let w = AffinePermutation::from_word(r, &word).expect("valid letters");
        let c = RatQ::qpow(rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        h = h.add(&HeckeElement::t(w).scale(&c));
    }
    h
}

/// `(xy)z = x(yz)` on random elements built from words of length at most `max_len`.
pub fn associativity_suite(r: usize, count: usize, max_len: usize, seed: u64) -> Vec<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[HeckeElement; 3]> = (0..count)
        .map(|_| [random_hecke(r, max_len, &mut rng), random_hecke(r, max_len, &mut rng), random_hecke(r, max_len, &mut rng)])
        .collect();
    let out = triples
        .par_iter()
        .enumerate()
        .map(|(k, [x, y, z])| {
            let lhs = x.mul(y).and_then(|xy| xy.mul(z));
            let rhs = y.mul(z).and_then(|yz| x.mul(&yz));
            eq_outcome(format!("assoc[{:03}]", k), lhs, rhs)
        })
        .collect();
    sorted(out)
}

/// `C'_{s_i} = q^-1 (1 + T_{s_i})`, and bar invariance and unitriangularity of `T_rho^k C'_w` for
/// `l(w) <= max_len`, `k in {-1, 0, 1}`.
pub fn kl_suite(r: usize, max_len: usize) -> Vec<Outcome> {
    let mut table = KlTable::new();
    let mut out = Vec::new();
    for i in 1..=r {
        let s = AffinePermutation::from_generator(r, Gen::S(i)).expect("valid color");
        let direct = HeckeElement::t(s.clone()).add(&HeckeElement::one(r)).scale(&RatQ::qpow(1, -1));
        out.push(eq_outcome(format!("kl-gen[{}]", i), kl_basis(&s, max_len, &mut table), Ok(direct)));
    }
    for w in elements_up_to_length(r, max_len) {
        for k in [-1i64, 0, 1] {
            let x = AffinePermutation::rho_pow(r, k).compose(&w).expect("same rank");
            let id = format!("kl[{}]", x);
            out.push(match kl_basis(&x, max_len, &mut table) {
                Err(e) => Outcome::fail(id, e.to_string()),
                Ok(c) if c.bar() != c => Outcome::fail(id, "not bar invariant"),
                Ok(c) if !is_unitriangular(&c, &x) => Outcome::fail(id, format!("not unitriangular: {}", c)),
                Ok(_) => Outcome::pass(id),
            });
        }
    }
    sorted(out)
}

fn case_outcomes(tag: &str, res: Vec<CaseResult>) -> Vec<Outcome> {
    res.into_iter()
        .map(|c| {
            let id = format!("{}{}", tag, c.id);
            match c.witness {
                None if c.pass => Outcome::pass(id),
                w => Outcome::fail(id, format!("tensor {:?}", w.unwrap_or_default())),
            }
        })
        .collect()
}

/// Every defining relation of `S(n, r)` against the tensor-space oracle, with the default window
/// plus `extra`, and again with the window grown by 2.
pub fn schur_suite(n: usize, r: usize, extra: i64) -> Vec<Outcome> {
    let cases = presentation_cases(n, r);
    let mut out = case_outcomes("", check_cases(&cases, r, extra));
    out.extend(case_outcomes("wide ", check_cases(&cases, r, extra + 2)));
    sorted(out)
}

/// Hecke relations for the images of `sigma_{n,r}`, agreement of both displayed forms and
/// `sigma(T_rho) sigma(T_rho^-1) = 1_r`.
pub fn sigma_suite(n: usize, r: usize) -> Result<Vec<Outcome>> {
    Ok(sorted(case_outcomes("sigma ", check_cases(&sigma_cases(n, r)?, r, 0))))
}

fn random_letter(n: usize, rng: &mut ChaCha8Rng) -> SLetter {
    let i = rng.gen_range(1..=n);
    match rng.gen_range(0..4) {
        0 => SLetter::E(i as i64),
        1 => SLetter::E(-(i as i64)),
        2 => SLetter::K(i, if rng.gen_bool(0.5) { 1 } else { -1 }),
        _ => SLetter::R(if rng.gen_bool(0.5) { 1 } else { -1 }),
    }
}

fn random_tensor(r: usize, lo: i64, hi: i64, rng: &mut ChaCha8Rng) -> TensorVector {
    let mut v = TensorVector::zero();
    for _ in 0..3 {
        let t: Vec<i64> = (0..r).map(|_| rng.gen_range(lo..hi)).collect();
        v = v.add(&TensorVector::basis(t).scale(&RatQ::qpow(rng.gen_range(-2..=2), rng.gen_range(-1..=1))));
    }
    v
}

/// `<Xv, w> = <v, rho(X) w>` for every single generator and `count` random words of length at most 3.
/// The vector `w` always contains the support of `Xv`, so the pairing is not trivially zero.
pub fn rho_adjoint_suite(n: usize, r: usize, count: usize, seed: u64) -> Result<Vec<Outcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut words: Vec<(String, GenWord)> = Vec::new();
    for i in 1..=n {
        let ii = i as i64;
        for l in [SLetter::E(ii), SLetter::E(-ii), SLetter::K(i, 1), SLetter::K(i, -1)] {
            words.push((format!("gen {}", l), GenWord::new(vec![l])));
        }
    }
    words.push(("gen R".into(), GenWord::new(vec![SLetter::R(1)])));
    words.push(("gen R^-1".into(), GenWord::new(vec![SLetter::R(-1)])));
    for k in 0..count {
        let len = rng.gen_range(1..=3);
        words.push((format!("word {:02}", k), GenWord::new((0..len).map(|_| random_letter(n, &mut rng)).collect())));
    }
    let mut out = Vec::new();
    let hi = 2 * n as i64 + 2;
    for (name, w) in words {
        let x = SchurElement::word(n, w);
        let v = random_tensor(r, -(n as i64), hi, &mut rng);
        let xv = act(&x, &v)?;
        let mut wv = random_tensor(r, -(n as i64), hi, &mut rng);
        for (t, _) in xv.terms() {
            wv = wv.add(&TensorVector::basis(t.clone()).scale(&RatQ::qpow(1, rng.gen_range(-1..=1))));
        }
        let lhs = bilinear_form(&xv, &wv);
        let rhs = bilinear_form(&v, &act(&rho_antiinv(&x), &wv)?);
        let id = format!("adjoint {} {}", name, x);
        out.push(if lhs == rhs { Outcome::pass(id) } else { Outcome::fail(id, format!("{} vs {}", lhs, rhs)) });
    }
    Ok(sorted(out))
}

/// Every relation over all admissible color patterns and the degree audit of every generator.
pub fn soergel_suite(r: usize) -> Vec<Outcome> {
    let mut out = soergel::relation_sweep(r);
    out.extend(soergel::degree_audit(r));
    sorted(out)
}

/// Decomposition and isomorphism witnesses, and the twist weight identity on `count` random elements.
/// `S2` needs two distant colors and is built at rank `max(r, 4)`.
pub fn witness_suite(r: usize, count: usize, seed: u64) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    let mut jobs: Vec<(usize, &str, Vec<usize>)> = Vec::new();
    for i in 1..=r {
        jobs.push((r, "S1", vec![i]));
        jobs.push((r, "S4", vec![i]));
        jobs.push((r, "tiso2", vec![i]));
        jobs.push((r, "S3", vec![i, i % r + 1]));
        jobs.push((r, "S3", vec![i % r + 1, i]));
    }
    let r2 = r.max(4);
    jobs.push((r2, "S2", vec![1, 3]));
    for (rank, kind, colors) in jobs {
        let rep = soergel::decompose_witness(rank, kind, &colors)?;
        for c in rep.checks {
            out.push(Outcome { id: format!("witness r={} {}{:?} {}", rank, kind, colors, c.id), ..c });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..count {
        let len = rng.gen_range(0..=3);
        let letters: Vec<Strand> = (0..len)
            .map(|_| match rng.gen_range(0..r + 2) {
                x if x < r => Strand::Color(x + 1),
                x if x == r => Strand::Plus,
                _ => Strand::Minus,
            })
            .collect();
        let e = soergel::random_element(r, SoergelObject::new(letters, 0), 2, &mut rng);
        let id = format!("twist-weight[{:03}]", k);
        out.push(if soergel::twist_weight_check(&e) { Outcome::pass(id) } else { Outcome::fail(id, e.to_string()) });
    }
    Ok(sorted(out))
}

fn braid_letters(r: usize) -> Vec<Letter> {
    let mut v = vec![(Gen::Rho, 1), (Gen::Rho, -1)];
    for i in 1..=r {
        v.push((Gen::S(i), 1));
        v.push((Gen::S(i), -1));
    }
    v
}

/// All braid words of length at most `max_len` in `s_i^{+-1}`, `rho^{+-1}`.
pub fn braid_words(r: usize, max_len: usize) -> Vec<Vec<Letter>> {
    let mut all = vec![vec![]];
    let mut layer: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                braid_letters(r).into_iter().map(move |l| {
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

fn word_str(w: &[Letter]) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        crate::weyl::format_word(w)
    }
}

/// `d^2 = 0` for all words of length at most `max_len`, Euler classes multiplicative under tensor
/// product, invariant under braid and `rho`-conjugation rewrites, and `euler(F(rho)) = T_rho`.
pub fn rouquier_suite(r: usize, max_len: usize) -> Result<Vec<Outcome>> {
    let words = braid_words(r, max_len);
    let mut out: Vec<Outcome> = words
        .par_iter()
        .map(|w| {
            let id = format!("d2[{}]", word_str(w));
            match braid_complex(r, w) {
                Err(e) => Outcome::fail(id, e.to_string()),
                Ok(c) => match verify_d2(&c).into_iter().find(|o| !o.pass) {
                    None => Outcome::pass(id),
                    Some(o) => Outcome::fail(id, o.to_string()),
                },
            }
        })
        .collect();
    let short = braid_words(r, 2);
    for a in &short {
        for b in short.iter().filter(|b| b.len() + a.len() <= 3) {
            let id = format!("euler-tensor[{} | {}]", word_str(a), word_str(b));
            let res = (|| -> Result<bool> {
                let (ca, cb) = (braid_complex(r, a)?, braid_complex(r, b)?);
                Ok(euler_class(&tensor(&ca, &cb))? == euler_class(&ca)?.mul(&euler_class(&cb)?)?)
            })();
            out.push(match res {
                Ok(true) => Outcome::pass(id),
                Ok(false) => Outcome::fail(id, "classes differ"),
                Err(e) => Outcome::fail(id, e.to_string()),
            });
        }
    }
    let mut pairs: Vec<(String, String)> = Vec::new();
    for i in 1..=r {
        let j = i % r + 1;
        pairs.push((format!("s{} s{} s{}", i, j, i), format!("s{} s{} s{}", j, i, j)));
        pairs.push((format!("s{}^-1 s{}^-1 s{}^-1", i, j, i), format!("s{}^-1 s{}^-1 s{}^-1", j, i, j)));
        pairs.push((format!("rho s{} rho^-1", i), format!("s{}", j)));
        pairs.push((format!("rho s{}^-1 rho^-1", i), format!("s{}^-1", j)));
        pairs.push((format!("s{} s{}^-1", i, i), "e".into()));
        pairs.push((format!("rho^-1 rho s{}", i), format!("s{}", i)));
        for k in 1..=r {
            if distant(r, i, k) {
                pairs.push((format!("s{} s{}", i, k), format!("s{} s{}", k, i)));
            }
        }
    }
    for (a, b) in pairs {
        let id = format!("euler-rewrite[{} = {}]", a, b);
        let ea = braid_complex(r, &parse_word(r, &a)?).and_then(|c| euler_class(&c));
        let eb = braid_complex(r, &parse_word(r, &b)?).and_then(|c| euler_class(&c));
        out.push(eq_outcome(id, ea, eb));
    }
    let rho = braid_complex(r, &[(Gen::Rho, 1)]).and_then(|c| euler_class(&c));
    out.push(eq_outcome("euler-rho".into(), rho, Ok(HeckeElement::t(AffinePermutation::rho_pow(r, 1)))));
    Ok(sorted(out))
}

/// The shifted elementary identity for `n <= 6`, the ring twists, the color-`n` sweep, bubbles, the
/// `END(1_r)` relation and the commuting triangle.
pub fn singular_suite(n: usize, r: usize) -> Result<Vec<Outcome>> {
    let mut out = lemma_suite(6)?;
    for comp in block_compositions(r) {
        out.extend(singular::twist_ring_check(&comp)?);
    }
    out.extend(singular::fprime_sweep(n, r));
    out.extend(singular::bubble_checks(n, r));
    let rel = singular::end_ring_relation(r, n)?;
    out.push(if rel.is_zero() { Outcome::pass("end-ring relation") } else { Outcome::fail("end-ring relation", rel.to_string()) });
    for i in 1..=r {
        out.extend(singular::triangle_check(r, n, i)?);
    }
    Ok(sorted(out))
}

/// The shifted elementary identity for every `1 <= n <= max_n`, `0 <= k <= n`, both shifts.
pub fn lemma_suite(max_n: usize) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for k in 0..=n {
            for s in [1i64, -1] {
                let id = format!("lemma n={} k={} s={:+}", n, k, s);
                out.push(if singular::shifted_elementary_identity(n, k, s)? { Outcome::pass(id) } else { Outcome::fail(id, "identity fails") });
            }
        }
    }
    Ok(out)
}

/// Compositions of `r` into positive parts.
pub fn block_compositions(r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=r {
        for mut rest in block_compositions(r - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failures(v: &[Outcome]) -> Vec<String> {
        v.iter().filter(|o| !o.pass).map(|o| o.to_string()).collect()
    }

    #[test]
    fn weyl_and_hecke_rank_three() {
        assert_eq!(failures(&weyl_suite(3)), Vec::<String>::new());
        assert_eq!(failures(&hecke_suite(5)), Vec::<String>::new());
        assert_eq!(failures(&associativity_suite(3, 20, 4, 1)), Vec::<String>::new());
    }

    #[test]
    fn block_compositions_count() {
        assert_eq!(block_compositions(4).len(), 8);
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", &SuiteParams::default()).is_err());
        let p = SuiteParams { r: 4, n: 4, ..SuiteParams::default() };
        assert!(matches!(run_suite("schur", &p), Err(Error::InvalidParams(_))));
    }
}
