//! Dense univariate polynomials over a generic scalar ring.

use crate::ring::{Field, Ring};

/// Polynomial with coefficients stored low degree first.
/// Invariant: no trailing zero coefficient; the zero polynomial is empty.
#[derive(Clone, PartialEq)]
pub struct Poly<T: Ring> {
    pub c: Vec<T>,
}

impl<T: Ring> std::fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly{:?}", self.c)
    }
}

impl<T: Ring> Poly<T> {
    pub fn new(mut c: Vec<T>) -> Self {
        while c.last().map_or(false, |t| t.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn constant(t: T) -> Self {
        Poly::new(vec![t])
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly::new(vec![T::zero(), T::one()])
    }

    /// The monomial c * x^k.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k];
        v.push(c);
        Poly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    /// Leading coefficient. Panics on zero.
    pub fn lead(&self) -> &T {
        self.c.last().expect("leading coefficient of zero polynomial")
    }

    pub fn coeff(&self, k: usize) -> T {
        self.c.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&rhs.coeff(i)));
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly { c: self.c.iter().map(|t| t.neg()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, t: &T) -> Self {
        Poly::new(self.c.iter().map(|a| a.mul(t)).collect())
    }

    /// Multiplies by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![T::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(a);
        }
        acc
    }

    /// Evaluates at a point in any ring that the coefficients map into.
    pub fn eval_map<U: Ring>(&self, x: &U, embed: impl Fn(&T) -> U) -> U {
        let mut acc = U::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(&embed(a));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.c.len() - 1);
        for (i, a) in self.c.iter().enumerate().skip(1) {
            out.push(a.mul(&T::from_i64(i as i64)));
        }
        Poly::new(out)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.c.iter().map(f).collect())
    }

    /// Substitutes x -> x^k.
    pub fn stretch(&self, k: usize) -> Self {
        assert!(k >= 1, "stretch exponent must be positive");
        let mut out = vec![T::zero(); self.c.len().saturating_sub(1) * k + 1];
        for (i, a) in self.c.iter().enumerate() {
            out[i * k] = a.clone();
        }
        Poly::new(out)
    }

    /// Substitutes x -> g(x).
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(a.clone()));
        }
        acc
    }
}

impl<T: Field> Poly<T> {
    /// Euclidean division: returns (quotient, remainder) with
    /// deg rem < deg divisor. Panics if the divisor is zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let dl = d.lead().inv();
        let mut rem = self.clone();
        let mut quo = vec![T::zero(); self.c.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = rem.lead().mul(&dl);
            let k = rd - dd;
            quo[k] = f.clone();
            // rem -= f * x^k * d
            let sub = d.scale(&f).shift_up(k);
            rem = rem.sub(&sub);
        }
        (Poly::new(quo), rem)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let li = self.lead().inv();
        self.scale(&li)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            // keeping the divisor monic stops coefficient blowup in the
            // remainder sequence
            b = b.monic();
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Extended gcd: returns (g, u, v) with u*self + v*rhs = g, g monic (or zero).
    pub fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        let mut s0 = Poly::one();
        let mut s1 = Poly::zero();
        let mut t0 = Poly::zero();
        let mut t1 = Poly::one();
        while !r1.is_zero() {
            // normalize each remainder row; the Bezout identity survives a
            // common scale and coefficient growth stays tame
            let li = r1.lead().inv();
            r1 = r1.scale(&li);
            s1 = s1.scale(&li);
            t1 = t1.scale(&li);
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let li = r0.lead().inv();
        (r0.scale(&li), s0.scale(&li), t0.scale(&li))
    }
}

impl<T: Ring> Ring for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Poly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn from_i64(n: i64) -> Self {
        Poly::constant(T::from_i64(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_i, Rat};

    fn p(v: &[i64]) -> Poly<Rat> {
        Poly::new(v.iter().map(|&n| rat_i(n)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[1, 0, -3, 4, 7]);
        let b = p(&[2, 1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap() < b.degree().unwrap());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[1, 2, 1]); // (1+x)^2
        let b = p(&[1, 1]).mul(&p(&[3, 1])); // (1+x)(3+x)
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(g, p(&[1, 1]));
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
    }

    #[test]
    fn compose_and_stretch() {
        let f = p(&[1, 1, 1]);
        assert_eq!(f.stretch(2), p(&[1, 0, 1, 0, 1]));
        assert_eq!(f.compose(&p(&[0, 0, 1])), f.stretch(2));
    }
}
