//! Rational functions num/den over a field of coefficients, kept reduced
//! with monic denominator.

use crate::poly::Poly;
use crate::ring::{Field, Ring};

#[derive(Clone, PartialEq)]
pub struct RatFunc<T: Field> {
    pub num: Poly<T>,
    pub den: Poly<T>,
}

impl<T: Field> std::fmt::Debug for RatFunc<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl<T: Field> RatFunc<T> {
    pub fn new(num: Poly<T>, den: Poly<T>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let g = num.gcd(&den);
        let (num, den) = if g.degree().map_or(false, |d| d > 0) {
            (num.div_exact(&g), den.div_exact(&g))
        } else {
            (num, den)
        };
        let li = den.lead().inv();
        RatFunc { num: num.scale(&li), den: den.scale(&li) }
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(t: T) -> Self {
        Self::from_poly(Poly::constant(t))
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn as_poly(&self) -> Option<Poly<T>> {
        if self.is_polynomial() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn eval(&self, x: &T) -> T {
        let d = self.den.eval(x);
        assert!(!d.is_zero(), "evaluation at a pole");
        self.num.eval(x).mul(&d.inv())
    }

    pub fn derivative(&self) -> Self {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        RatFunc::new(n, self.den.mul(&self.den))
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> RatFunc<U> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }
}

impl<T: Field> Ring for RatFunc<T> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        RatFunc::new(n, self.den.mul(&rhs.den))
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(T::from_i64(n))
    }
}

impl<T: Field> Field for RatFunc<T> {
    fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero rational function");
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}
