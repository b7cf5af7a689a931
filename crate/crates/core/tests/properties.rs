//! Randomized invariants across the modules.

use affcat::arith::parse::{parse_poly, parse_ratq};
use affcat::arith::{Poly, Rat, RatQ};
use affcat::hecke::{parse_hecke, HeckeElement, KlTable};
use affcat::schur::{act, bilinear_form, parse_element, rho_antiinv, GenWord, SLetter, SchurElement, TensorVector};
use affcat::singular::{decompose, PartialInvariantRing, TensorElement, Word};
use affcat::soergel::{random_element, twist_weight_check, MorphismExpr, SoergelObject, Strand};
use affcat::weyl::{AffinePermutation, Gen, Letter};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const R: usize = 3;

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![
        (1..=R).prop_map(|i| (Gen::S(i), 1)),
        Just((Gen::Rho, 1)),
        Just((Gen::Rho, -1)),
        (1..=R).prop_map(|i| (Gen::T(i), 1)),
    ]
}

fn perm() -> impl Strategy<Value = AffinePermutation> {
    prop::collection::vec(letter(), 0..6).prop_map(|w| AffinePermutation::from_word(R, &w).unwrap())
}

fn hecke() -> impl Strategy<Value = HeckeElement> {
    prop::collection::vec((perm(), -2i64..=2, -2i32..=2), 1..3).prop_map(|ts| {
        ts.into_iter().fold(HeckeElement::zero(R), |acc, (w, c, e)| acc.add(&HeckeElement::t(w).scale(&RatQ::qpow(c, e))))
    })
}

fn poly(r: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u16..3, r + 1), -3i64..=3), 0..4).prop_map(move |ts| {
        ts.into_iter().fold(Poly::zero(r + 1), |acc, (m, c)| &acc + &Poly::monomial(m, Rat::int(c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(a in perm(), b in perm(), c in perm()) {
        let l = a.compose(&b).unwrap().compose(&c).unwrap();
        let r = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn inverse_and_normal_form(w in perm()) {
        prop_assert!(w.compose(&w.inverse()).unwrap().is_identity());
        let (k, word) = w.normal_form();
        prop_assert_eq!(k, w.rho_power());
        prop_assert_eq!(word.len(), w.length());
        let back = word.iter().fold(AffinePermutation::rho_pow(R, k), |acc, &i| acc.mul_simple(i));
        prop_assert_eq!(back, w);
    }

    #[test]
    fn length_is_subadditive(a in perm(), b in perm()) {
        prop_assert!(a.compose(&b).unwrap().length() <= a.length() + b.length());
    }

    #[test]
    fn hecke_product_is_associative(a in hecke(), b in hecke(), c in hecke()) {
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn bar_is_a_ring_involution(a in hecke(), b in hecke()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(a.mul(&b).unwrap().bar(), a.bar().mul(&b.bar()).unwrap());
    }

    #[test]
    fn hecke_parse_print_round_trip(a in hecke()) {
        let s = a.to_string();
        prop_assert_eq!(parse_hecke(R, &s, &mut KlTable::new()).unwrap(), a);
    }

    #[test]
    fn poly_parse_print_round_trip(p in poly(R)) {
        prop_assert_eq!(parse_poly(R, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn ratq_field_identities(a in -3i64..=3, e in -3i32..=3, b in 1i64..=3, f in -3i32..=3) {
        let x = RatQ::qpow(a, e);
        let y = &RatQ::qpow(b, f) + &RatQ::one();
        let z = &(&x / &y) * &y;
        prop_assert_eq!(z, x.clone());
        prop_assert_eq!(parse_ratq(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn schur_rho_is_adjoint(ws in prop::collection::vec(0usize..10, 1..3), v in prop::collection::vec(-3i64..8, R), w in prop::collection::vec(-3i64..8, R)) {
        let n = 4;
        let letters: Vec<SLetter> = ws.iter().map(|&k| match k {
            0..=3 => SLetter::E(k as i64 + 1),
            4..=7 => SLetter::E(-(k as i64 - 3)),
            8 => SLetter::R(1),
            _ => SLetter::K(1 + k % n, 1),
        }).collect();
        let x = SchurElement::word(n, GenWord::new(letters));
        let v = TensorVector::basis(v);
        let xv = act(&x, &v).unwrap();
        let wv = xv.terms().fold(TensorVector::basis(w), |acc, (t, _)| acc.add(&TensorVector::basis(t.clone())));
        prop_assert_eq!(bilinear_form(&xv, &wv), bilinear_form(&v, &act(&rho_antiinv(&x), &wv).unwrap()));
    }

    #[test]
    fn schur_parse_print_round_trip(ws in prop::collection::vec(0usize..9, 0..4), c in -2i64..=2) {
        let n = 4;
        let letters: Vec<SLetter> = ws.iter().map(|&k| match k {
            0..=3 => SLetter::E(k as i64 + 1),
            4..=7 => SLetter::E(-(k as i64 - 3)),
            _ => SLetter::R(-1),
        }).collect();
        let x = SchurElement::term(n, GenWord::new(letters), RatQ::qpow(c, 1));
        prop_assert_eq!(parse_element(n, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn soergel_twist_weight(seed in 0u64..1000, letters in prop::collection::vec(0usize..R + 2, 0..4)) {
        let strands: Vec<Strand> = letters.iter().map(|&k| match k {
            k if k < R => Strand::Color(k + 1),
            k if k == R => Strand::Plus,
            _ => Strand::Minus,
        }).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_element(R, SoergelObject::new(strands, 0), 2, &mut rng);
        prop_assert!(twist_weight_check(&e));
    }

    #[test]
    fn morphism_parse_print_round_trip(i in 1..=R, j in 1..=R) {
        let s = format!("vcomp(hcomp(enddot({}), id({})), split({}))", i, j, i);
        let m = MorphismExpr::parse(&s).unwrap();
        prop_assert_eq!(MorphismExpr::parse(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn decomposition_reconstructs(p in poly(4), right_end in any::<bool>()) {
        let r = 4;
        // x1 | x2 x3 | x4; the singleton x1 (or x4) is merged with the middle block
        let fine = PartialInvariantRing::new(vec![1, 2, 1]);
        let (block, z, merged) = if right_end { ((2, 3), 4, vec![1, 3]) } else { ((1, 3), 1, vec![3, 1]) };
        let p = fine.symmetrize(&p);
        let coeffs = decompose(r, &p, block, z);
        let merged = PartialInvariantRing::new(merged);
        let mut back = Poly::zero(r + 1);
        for (e, c) in coeffs.iter().enumerate() {
            prop_assert!(merged.contains(c));
            back = &back + &(c * &Poly::x(r, z).pow(e as u32));
        }
        prop_assert_eq!(back, p);
    }

    #[test]
    fn tensor_elements_are_bimodules(a in poly(3), b in poly(3)) {
        let w = Word::new(4, &[1, 1, 1, 0], &[4, -4]).unwrap();
        let e = TensorElement::one(&w);
        let ring = PartialInvariantRing::new(vec![1, 1, 1]);
        let (sa, sb) = (ring.symmetrize(&a), ring.symmetrize(&b));
        prop_assert_eq!(e.left_mul(&sa).right_mul(&sb), e.right_mul(&sb).left_mul(&sa));
    }
}
