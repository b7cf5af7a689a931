//! Exact coefficient arithmetic: `Q(q)`, polynomials in `y, x_1..x_r`, Demazure operators
//! and the rank-two splitting of `R` over `R^{s_i}`.

mod laurent;
pub mod parse;
mod poly;
mod rat;

pub use laurent::{qint, Laurent, RatQ};
pub use poly::{periodic_index, Mono, Poly};
pub use rat::Rat;

/// Images `x_k -> x_{f(k)}` (periodic) of the generators of `R` under a window `f`.
pub fn window_images(window: &[i64]) -> Vec<Poly> {
    let r = window.len();
    let mut v = vec![Poly::y(r)];
    v.extend(window.iter().map(|&a| Poly::xp(r, a)));
    v
}

/// The window of the simple reflection `s_i`.
pub fn reflection_window(r: usize, i: usize) -> Vec<i64> {
    let mut w: Vec<i64> = (1..=r as i64).collect();
    if i < r {
        w.swap(i - 1, i);
    } else {
        w[r - 1] = r as i64 + 1;
        w[0] = 0;
    }
    w
}

fn check_color(r: usize, i: usize) {
    assert!((1..=r).contains(&i), "color {} out of range 1..={}", i, r);
}

/// The action of `s_i` on a polynomial.
pub fn sigma(r: usize, i: usize, p: &Poly) -> Poly {
    check_color(r, i);
    p.subst(&window_images(&reflection_window(r, i)))
}

/// The action of `rho^k` on a polynomial: `x_j -> x_{j+k}` periodically.
pub fn rho_pow(r: usize, k: i64, p: &Poly) -> Poly {
    if k == 0 {
        return p.clone();
    }
    let w: Vec<i64> = (1..=r as i64).map(|j| j + k).collect();
    p.subst(&window_images(&w))
}

/// `X_i = x_{i+1} - x_i` for `i < r`, and `X_r = x_1 - x_r - y`.
pub fn root(r: usize, i: usize) -> Poly {
    check_color(r, i);
    &Poly::xp(r, i as i64 + 1) - &Poly::x(r, i)
}

/// The second basis element of `R` over `R^{s_i}`: `x_{i+1}` for `i < r`, `x_1` for `i = r`.
pub fn basis_b(r: usize, i: usize) -> Poly {
    check_color(r, i);
    if i < r {
        Poly::x(r, i + 1)
    } else {
        Poly::x(r, 1)
    }
}

/// The Demazure operator `(p - s_i p) / X_i`.
pub fn demazure(r: usize, i: usize, p: &Poly) -> Poly {
    let diff = p - &sigma(r, i, p);
    diff.div_exact(&root(r, i)).expect("Demazure quotient not exact: s_i action is inconsistent")
}

/// Splits `p = A + b_i B` with `A, B` both `s_i`-invariant and `B = d_i(p)`.
pub fn split_invariant(r: usize, i: usize, p: &Poly) -> (Poly, Poly) {
    let b = demazure(r, i, p);
    let a = p - &(&basis_b(r, i) * &b);
    (a, b)
}

pub fn is_invariant(r: usize, i: usize, p: &Poly) -> bool {
    &sigma(r, i, p) == p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demazure_examples() {
        let r = 3;
        let x = |i| Poly::x(r, i);
        assert!(demazure(r, 1, &(&x(1) + &x(2))).is_zero());
        assert_eq!(demazure(r, 1, &x(1)), Poly::int(r + 1, -1));
        assert_eq!(demazure(r, r, &x(1)), Poly::int(r + 1, 1));
    }

    #[test]
    fn sigma_r_table() {
        let r = 4;
        assert_eq!(sigma(r, r, &Poly::x(r, 1)), &Poly::x(r, r) + &Poly::y(r));
        assert_eq!(sigma(r, r, &Poly::x(r, r)), &Poly::x(r, 1) - &Poly::y(r));
        assert_eq!(rho_pow(r, 1, &Poly::x(r, r)), &Poly::x(r, 1) - &Poly::y(r));
        assert_eq!(rho_pow(r, -1, &rho_pow(r, 1, &Poly::x(r, 2))), Poly::x(r, 2));
    }

    #[test]
    fn split_examples() {
        let r = 3;
        let (a, b) = split_invariant(r, 1, &Poly::x(r, 2));
        assert!(a.is_zero());
        assert!(b == Poly::one(r + 1));
        let half = Rat::new(1, 2);
        let g = &(&Poly::x(r, r) + &Poly::y(r).scale(half)) * &(&Poly::x(r, 1) - &Poly::y(r).scale(half));
        let (a, b) = split_invariant(r, r, &g);
        assert_eq!(a, g);
        assert!(b.is_zero());
    }
}
