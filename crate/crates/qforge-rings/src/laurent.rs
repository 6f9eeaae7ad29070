//! Laurent polynomials over a generic scalar ring.

use crate::poly::Poly;
use crate::ring::{Field, Ring};

/// sum c[i] x^{lo+i}, trimmed at both ends; zero is the empty vector.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<T: Ring> {
    pub lo: i64,
    pub c: Vec<T>,
}

impl<T: Ring> std::fmt::Debug for LaurentPoly<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Laurent(x^{} * {:?})", self.lo, self.c)
    }
}

impl<T: Ring> LaurentPoly<T> {
    pub fn new(lo: i64, mut c: Vec<T>) -> Self {
        while c.last().map_or(false, |t| t.is_zero()) {
            c.pop();
        }
        let mut lo = lo;
        let lead_zeros = c.iter().take_while(|t| t.is_zero()).count();
        if lead_zeros > 0 {
            c.drain(..lead_zeros);
            lo += lead_zeros as i64;
        }
        if c.is_empty() {
            lo = 0;
        }
        LaurentPoly { lo, c }
    }

    pub fn zero() -> Self {
        LaurentPoly { lo: 0, c: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(T::one())
    }

    pub fn constant(t: T) -> Self {
        LaurentPoly::new(0, vec![t])
    }

    pub fn monomial(t: T, e: i64) -> Self {
        LaurentPoly::new(e, vec![t])
    }

    pub fn x() -> Self {
        LaurentPoly::monomial(T::one(), 1)
    }

    pub fn from_poly(p: &Poly<T>) -> Self {
        LaurentPoly::new(0, p.c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Lowest exponent; None for zero.
    pub fn val(&self) -> Option<i64> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.lo)
        }
    }

    /// Highest exponent; None for zero.
    pub fn deg(&self) -> Option<i64> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.lo + self.c.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, e: i64) -> T {
        let i = e - self.lo;
        if i < 0 || i as usize >= self.c.len() {
            T::zero()
        } else {
            self.c[i as usize].clone()
        }
    }

    pub fn lead(&self) -> &T {
        self.c.last().expect("leading coefficient of zero")
    }

    pub fn trail(&self) -> &T {
        self.c.first().expect("trailing coefficient of zero")
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.deg().unwrap().max(rhs.deg().unwrap());
        let mut c = Vec::with_capacity((hi - lo + 1) as usize);
        for e in lo..=hi {
            c.push(self.coeff(e).add(&rhs.coeff(e)));
        }
        LaurentPoly::new(lo, c)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { lo: self.lo, c: self.c.iter().map(|t| t.neg()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut c = vec![T::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        LaurentPoly::new(self.lo + rhs.lo, c)
    }

    pub fn scale(&self, t: &T) -> Self {
        LaurentPoly::new(self.lo, self.c.iter().map(|a| a.mul(t)).collect())
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { lo: self.lo + k, c: self.c.clone() }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes x -> x^k for positive k.
    pub fn stretch(&self, k: i64) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut c = vec![T::zero(); (self.c.len() - 1) * k as usize + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[i * k as usize] = a.clone();
        }
        LaurentPoly::new(self.lo * k, c)
    }

    /// Substitutes x -> 1/x.
    pub fn invert_var(&self) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut c = self.c.clone();
        c.reverse();
        LaurentPoly::new(-(self.deg().unwrap()), c)
    }

    /// x d/dx, which is degree-preserving on Laurent monomials.
    pub fn theta(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(i, a)| a.mul(&T::from_i64(self.lo + i as i64)))
            .collect();
        LaurentPoly::new(self.lo, c)
    }

    /// Plain derivative d/dx.
    pub fn derivative(&self) -> Self {
        self.theta().shift(-1)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> LaurentPoly<U> {
        LaurentPoly::new(self.lo, self.c.iter().map(f).collect())
    }

    /// The polynomial x^{-lo} * self when lo <= 0, or self as polynomial.
    pub fn to_poly_shifted(&self) -> (Poly<T>, i64) {
        (Poly::new(self.c.clone()), self.lo)
    }

    pub fn eval<U: Ring>(&self, x: &U, xinv: &U, embed: impl Fn(&T) -> U) -> U {
        let mut acc = U::zero();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let e = self.lo + i as i64;
            let pw = if e >= 0 { pow_ring(x, e as u64) } else { pow_ring(xinv, (-e) as u64) };
            acc = acc.add(&embed(a).mul(&pw));
        }
        acc
    }
}

fn pow_ring<U: Ring>(x: &U, e: u64) -> U {
    let mut acc = U::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        base = base.mul(&base);
        e >>= 1;
    }
    acc
}

impl<T: Field> LaurentPoly<T> {
    /// Exact division; panics if not divisible in the Laurent ring.
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero");
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let (pn, sn) = self.to_poly_shifted();
        let (pd, sd) = d.to_poly_shifted();
        let (q, r) = pn.divrem(&pd);
        assert!(r.is_zero(), "inexact Laurent division");
        LaurentPoly::from_poly(&q).shift(sn - sd)
    }

    /// Tries exact division, returning None on failure.
    pub fn try_div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (pn, sn) = self.to_poly_shifted();
        let (pd, sd) = d.to_poly_shifted();
        let (q, r) = pn.divrem(&pd);
        if r.is_zero() {
            Some(LaurentPoly::from_poly(&q).shift(sn - sd))
        } else {
            None
        }
    }
}

impl<T: Ring> Ring for LaurentPoly<T> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        LaurentPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        LaurentPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        LaurentPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn from_i64(n: i64) -> Self {
        LaurentPoly::constant(T::from_i64(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_i, Rat};

    fn lp(lo: i64, v: &[i64]) -> LaurentPoly<Rat> {
        LaurentPoly::new(lo, v.iter().map(|&n| rat_i(n)).collect())
    }

    #[test]
    fn arithmetic() {
        let a = lp(-2, &[1, 0, 3]); // x^-2 + 3
        let b = lp(1, &[2]); // 2x
        assert_eq!(a.mul(&b), lp(-1, &[2, 0, 6]));
        assert_eq!(a.add(&b), lp(-2, &[1, 0, 3, 2]));
        assert_eq!(a.coeff(0), rat_i(3));
    }

    #[test]
    fn theta_and_invert() {
        let a = lp(-1, &[5, 0, 7]); // 5x^-1 + 7x
        assert_eq!(a.theta(), lp(-1, &[-5, 0, 7]));
        assert_eq!(a.invert_var(), lp(-1, &[7, 0, 5]));
    }

    #[test]
    fn exact_division() {
        let a = lp(-3, &[1, 2, 1]); // x^-3 (1 + x)^2
        let d = lp(-1, &[1, 1]);
        let q = a.div_exact(&d);
        assert_eq!(q.mul(&d), a);
        assert!(lp(0, &[1, 1, 1]).try_div_exact(&d).is_none());
    }
}
