//! Integer Laurent polynomials in `q` and the field `Q(q)` of rational functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer Laurent polynomial `sum c[k] q^(lo+k)`, trimmed at both ends.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Laurent {
    lo: i32,
    c: Vec<i64>,
}

fn ck_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn ck_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { lo: 0, c: Vec::new() }
    }

    pub fn one() -> Self {
        Laurent::mono(1, 0)
    }

    /// `coef * q^e`.
    pub fn mono(coef: i64, e: i32) -> Self {
        Laurent { lo: e, c: vec![coef] }.trim()
    }

    pub fn from_coeffs(lo: i32, c: Vec<i64>) -> Self {
        Laurent { lo, c }.trim()
    }

    fn trim(mut self) -> Self {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|&&x| x == 0).count();
        if lead > 0 {
            self.c.drain(..lead);
            self.lo += lead as i32;
        }
        if self.c.is_empty() {
            self.lo = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.c == [1]
    }

    pub fn low(&self) -> i32 {
        self.lo
    }

    pub fn high(&self) -> i32 {
        self.lo + self.c.len() as i32 - 1
    }

    pub fn coeff(&self, e: i32) -> i64 {
        let k = e - self.lo;
        if k < 0 || k as usize >= self.c.len() {
            0
        } else {
            self.c[k as usize]
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(move |(k, &v)| (self.lo + k as i32, v))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms().count() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.lo == 0 && self.c.len() == 1)
    }

    pub fn lead(&self) -> i64 {
        *self.c.last().unwrap_or(&0)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Laurent { lo: self.lo + k, c: self.c.clone() }
    }

    pub fn scale(&self, s: i64) -> Self {
        Laurent { lo: self.lo, c: self.c.iter().map(|&x| ck_mul(x, s)).collect() }.trim()
    }

    /// `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.c.clone();
        c.reverse();
        Laurent { lo: -self.high(), c }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Laurent::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn content(&self) -> i64 {
        self.c.iter().fold(0i64, |g, &x| super::rat::gcd_i64(g, x))
    }

    fn div_scalar(&self, s: i64) -> Self {
        Laurent { lo: self.lo, c: self.c.iter().map(|&x| x / s).collect() }
    }

    /// Exact polynomial division in `Z[q, q^-1]`; `None` if not exact.
    pub fn div_exact(&self, d: &Laurent) -> Option<Laurent> {
        assert!(!d.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let mut rem: Vec<i128> = self.c.iter().map(|&x| x as i128).collect();
        let dl = d.c.len();
        if rem.len() < dl {
            return None;
        }
        let dlead = d.lead() as i128;
        let mut quo = vec![0i64; rem.len() - dl + 1];
        for k in (0..quo.len()).rev() {
            let top = rem[k + dl - 1];
            if top % dlead != 0 {
                return None;
            }
            let t = top / dlead;
            quo[k] = i64::try_from(t).expect("Laurent coefficient overflow");
            for (j, &dc) in d.c.iter().enumerate() {
                rem[k + j] -= t * dc as i128;
            }
        }
        if rem.iter().any(|&x| x != 0) {
            return None;
        }
        Some(Laurent { lo: self.lo - d.lo, c: quo }.trim())
    }

    /// Pseudo-remainder of polynomials (exponents shifted to start at 0).
    fn prem(a: &[i128], b: &[i128]) -> Vec<i128> {
        let mut r = a.to_vec();
        let bl = b.len();
        let lb = b[bl - 1];
        while r.len() >= bl && !r.is_empty() {
            let lr = r[r.len() - 1];
            let shift = r.len() - bl;
            for x in r.iter_mut() {
                *x = x.checked_mul(lb).expect("Laurent gcd overflow");
            }
            for (j, &bc) in b.iter().enumerate() {
                r[shift + j] -= lr * bc;
            }
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        r
    }

    fn primitive(v: &mut Vec<i128>) {
        let g = v.iter().fold(0i128, |g, &x| num_integer::Integer::gcd(&g, &x));
        if g > 1 {
            for x in v.iter_mut() {
                *x /= g;
            }
        }
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    /// Greatest common divisor in `Z[q]` of the polynomial parts (monomial factors ignored),
    /// with positive leading coefficient.
    pub fn gcd(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.normalize_sign().with_lo(0);
        }
        if other.is_zero() {
            return self.normalize_sign().with_lo(0);
        }
        let cg = super::rat::gcd_i64(self.content(), other.content());
        let mut a: Vec<i128> = self.c.iter().map(|&x| x as i128).collect();
        let mut b: Vec<i128> = other.c.iter().map(|&x| x as i128).collect();
        Self::primitive(&mut a);
        Self::primitive(&mut b);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let mut r = Self::prem(&a, &b);
            Self::primitive(&mut r);
            a = b;
            b = r;
        }
        // strip factors of q
        let lead_zeros = a.iter().take_while(|&&x| x == 0).count();
        a.drain(..lead_zeros);
        let mut g = Laurent {
            lo: 0,
            c: a.into_iter().map(|x| i64::try_from(x).expect("Laurent gcd overflow")).collect(),
        }
        .trim();
        if g.lead() < 0 {
            g = -g;
        }
        g.scale(cg)
    }

    fn normalize_sign(&self) -> Laurent {
        if self.lead() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn with_lo(&self, lo: i32) -> Laurent {
        if self.is_zero() {
            return self.clone();
        }
        Laurent { lo, c: self.c.clone() }
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = self.high().max(o.high());
        let mut c = vec![0i64; (hi - lo + 1) as usize];
        for (e, v) in self.terms().chain(o.terms()) {
            let k = (e - lo) as usize;
            c[k] = ck_add(c[k], v);
        }
        Laurent { lo, c }.trim()
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, o: &Laurent) -> Laurent {
        self + &(-o.clone())
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        let mut c = vec![0i64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = ck_add(c[i + j], ck_mul(a, b));
            }
        }
        Laurent { lo: self.lo + o.lo, c }.trim()
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { lo: self.lo, c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, v) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let (sign, a) = if v < 0 { ("-", -v) } else { ("+", v) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            match (a, e) {
                (_, 0) => write!(f, "{}", a)?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "q^{}", e)?,
                (_, 1) => write!(f, "{}*q", a)?,
                (_, _) => write!(f, "{}*q^{}", a, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of `Q(q)` stored as a reduced fraction of integer Laurent polynomials.
///
/// The denominator is a polynomial with nonzero constant term and positive leading
/// coefficient, coprime to the numerator in `Z[q]`, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatQ {
    num: Laurent,
    den: Laurent,
}

impl RatQ {
    pub fn new(num: Laurent, den: Laurent) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(q)");
        if num.is_zero() {
            return RatQ::zero();
        }
        let num = num.shift(-den.lo);
        let den = den.with_lo(0);
        if den.is_constant() {
            let d = den.lead();
            let g = super::rat::gcd_i64(num.content(), d);
            let s = if d < 0 { -g } else { g };
            return RatQ { num: num.div_scalar(s), den: Laurent::mono(d / s, 0) };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g.with_lo(0)).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let shift = den.lo;
        den = den.with_lo(0);
        num = num.shift(-shift);
        if den.lead() < 0 {
            num = -num;
            den = -den;
        }
        RatQ { num, den }
    }

    pub fn zero() -> Self {
        RatQ { num: Laurent::zero(), den: Laurent::one() }
    }

    pub fn one() -> Self {
        RatQ::from_laurent(Laurent::one())
    }

    pub fn int(n: i64) -> Self {
        RatQ::from_laurent(Laurent::mono(n, 0))
    }

    /// `coef * q^e`.
    pub fn qpow(coef: i64, e: i32) -> Self {
        RatQ::from_laurent(Laurent::mono(coef, e))
    }

    pub fn q() -> Self {
        RatQ::qpow(1, 1)
    }

    pub fn from_laurent(l: Laurent) -> Self {
        RatQ { num: l, den: Laurent::one() }
    }

    pub fn num(&self) -> &Laurent {
        &self.num
    }

    pub fn den(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial, if the denominator is 1.
    pub fn as_laurent(&self) -> Option<&Laurent> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in Q(q)");
        RatQ::new(self.den.clone(), self.num.clone())
    }

    pub fn bar(&self) -> Self {
        RatQ::new(self.num.bar(), self.den.bar())
    }

    pub fn pow(&self, e: i32) -> Self {
        let mut acc = RatQ::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * self;
        }
        if e < 0 {
            acc.inv()
        } else {
            acc
        }
    }
}

impl Default for RatQ {
    fn default() -> Self {
        RatQ::zero()
    }
}

impl Add for &RatQ {
    type Output = RatQ;
    fn add(self, o: &RatQ) -> RatQ {
        if self.den.is_one() && o.den.is_one() {
            return RatQ::from_laurent(&self.num + &o.num);
        }
        RatQ::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &RatQ {
    type Output = RatQ;
    fn sub(self, o: &RatQ) -> RatQ {
        self + &(-o.clone())
    }
}

impl Mul for &RatQ {
    type Output = RatQ;
    fn mul(self, o: &RatQ) -> RatQ {
        if self.den.is_one() && o.den.is_one() {
            return RatQ::from_laurent(&self.num * &o.num);
        }
        RatQ::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl std::ops::Div for &RatQ {
    type Output = RatQ;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &RatQ) -> RatQ {
        self * &o.inv()
    }
}

impl Neg for RatQ {
    type Output = RatQ;
    fn neg(self) -> RatQ {
        RatQ { num: -self.num, den: self.den }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
    };
}

owned_ops!(Laurent);
owned_ops!(RatQ);

impl fmt::Display for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The quantum integer `[a] = (q^a - q^-a)/(q - q^-1)`.
pub fn qint(a: i64) -> RatQ {
    let n = a.unsigned_abs() as i32;
    let mut l = Laurent::zero();
    for k in 0..n {
        l = &l + &Laurent::mono(1, n - 1 - 2 * k);
    }
    let v = RatQ::from_laurent(l);
    if a < 0 {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(lo: i32, c: &[i64]) -> Laurent {
        Laurent::from_coeffs(lo, c.to_vec())
    }

    #[test]
    fn qint_values() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(2), RatQ::from_laurent(lp(-1, &[1, 0, 1])));
        assert_eq!(qint(3), RatQ::from_laurent(lp(-2, &[1, 0, 1, 0, 1])));
        assert_eq!(qint(-3), -qint(3));
    }

    #[test]
    fn qint_matches_quotient_formula() {
        let qm = RatQ::q() - RatQ::q().inv();
        for a in -5..=5 {
            let num = RatQ::qpow(1, a as i32) - RatQ::qpow(1, -a as i32);
            assert_eq!(&num / &qm, qint(a));
        }
    }

    #[test]
    fn fraction_reduction() {
        let a = RatQ::new(lp(0, &[-1, 0, 1]), lp(0, &[1, 1]));
        assert_eq!(a, RatQ::from_laurent(lp(0, &[-1, 1])));
        let b = RatQ::new(lp(0, &[2]), lp(0, &[-4]));
        assert_eq!(b, RatQ::new(lp(0, &[-1]), lp(0, &[2])));
        let c = RatQ::new(lp(3, &[1]), lp(2, &[1, 1]));
        assert_eq!(c.den(), &lp(0, &[1, 1]));
        assert_eq!(c.num(), &lp(1, &[1]));
    }

    #[test]
    fn bar_involution() {
        let a = RatQ::new(lp(-1, &[1, 2, 3]), lp(0, &[1, 0, 2]));
        assert_eq!(a.bar().bar(), a);
        assert_eq!(qint(4).bar(), qint(4));
    }
}
