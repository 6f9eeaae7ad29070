//! Operators in theta = lambda d/dlambda with coefficients left of the powers.
//!
//! The commutation rule is theta a(lambda) = a(lambda) theta + theta(a), so an
//! operator is kept in the normal form sum_i c_i(lambda) theta^i and products
//! are reordered through the coefficient derivation.

use qforge_rings::poly::Poly;
use qforge_rings::rat::Rat;
use qforge_rings::ratfunc::RatFunc;
use qforge_rings::ring::{Field, Ring};

use crate::polyops::{primitive_family, sign_normalize};
use crate::OpalgError;

/// Coefficient rings carrying the action of theta = lambda d/dlambda.
pub trait ThetaRing: Ring {
    fn theta(&self) -> Self;
}

impl<T: Field> ThetaRing for RatFunc<T> {
    fn theta(&self) -> Self {
        self.derivative().mul(&RatFunc::x())
    }
}

impl<T: Ring> ThetaRing for Poly<T> {
    fn theta(&self) -> Self {
        self.derivative().shift_up(1)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeylOp<R: ThetaRing> {
    /// c[i] is the coefficient of theta^i; trailing zeros are trimmed.
    pub c: Vec<R>,
}

pub type WeylOperator = WeylOp<RatFunc<Rat>>;

impl<R: ThetaRing> WeylOp<R> {
    pub fn new(mut c: Vec<R>) -> Self {
        while c.last().map_or(false, |t| t.is_zero()) {
            c.pop();
        }
        WeylOp { c }
    }

    pub fn zero() -> Self {
        WeylOp { c: Vec::new() }
    }

    pub fn one() -> Self {
        WeylOp { c: vec![R::one()] }
    }

    pub fn theta() -> Self {
        WeylOp { c: vec![R::zero(), R::one()] }
    }

    pub fn constant(r: R) -> Self {
        WeylOp::new(vec![r])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree in theta; None for the zero operator.
    pub fn deg(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> R {
        self.c.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        WeylOp::new(c)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        WeylOp { c: self.c.iter().map(|t| t.neg()).collect() }
    }

    /// Left multiplication by a coefficient, which needs no reordering.
    pub fn scale_left(&self, r: &R) -> Self {
        WeylOp::new(self.c.iter().map(|t| r.mul(t)).collect())
    }

    /// theta * self, one application of the commutation rule.
    fn theta_compose(&self) -> Self {
        let mut c = vec![R::zero(); self.c.len() + 1];
        for (j, b) in self.c.iter().enumerate() {
            c[j] = c[j].add(&b.theta());
            c[j + 1] = c[j + 1].add(b);
        }
        WeylOp::new(c)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut acc = WeylOp::zero();
        let mut shifted = rhs.clone();
        for (i, a) in self.c.iter().enumerate() {
            if i > 0 {
                shifted = shifted.theta_compose();
            }
            if !a.is_zero() {
                acc = acc.add(&shifted.scale_left(a));
            }
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = WeylOp::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl<R: ThetaRing + Field> WeylOp<R> {
    /// Euclidean division from the right: self = q * rhs + r with
    /// deg_theta r < deg_theta rhs, exact over the coefficient field.
    pub fn right_divide(&self, rhs: &Self) -> Result<(Self, Self), OpalgError> {
        let p = rhs.deg().ok_or(OpalgError::DivisionByZeroOperator)?;
        let lead_inv = rhs.c[p].inv();
        let mut q = WeylOp::zero();
        let mut r = self.clone();
        while let Some(d) = r.deg() {
            if d < p {
                break;
            }
            let coef = r.c[d].mul(&lead_inv);
            let mut term = WeylOp::zero();
            term.c = vec![R::zero(); d - p + 1];
            term.c[d - p] = coef;
            q = q.add(&term);
            r = r.sub(&term.mul(rhs));
        }
        Ok((q, r))
    }
}

impl<T: Field> WeylOp<RatFunc<T>> {
    pub fn from_polys(c: Vec<Poly<T>>) -> Self {
        WeylOp::new(c.into_iter().map(RatFunc::from_poly).collect())
    }

    /// Applies the operator to a truncated lambda-power series. Denominators
    /// are cleared first, so the result is the image under d(lambda) * self
    /// for the common denominator d; this preserves annihilation.
    pub fn apply_cleared(&self, f: &[T], t: usize) -> Vec<T> {
        let (_, cleared) = self.clear_denominators();
        let mut out = vec![T::zero(); t + 1];
        for (i, a) in cleared.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let deg = a.degree().unwrap();
            for (k, fk) in f.iter().enumerate().take(t + 1) {
                if fk.is_zero() {
                    continue;
                }
                // theta^i lambda^k = k^i lambda^k
                let ki = pow_scalar::<T>(k as i64, i);
                let scaled = fk.mul(&ki);
                for s in 0..=deg {
                    if k + s > t {
                        break;
                    }
                    let c = a.coeff(s);
                    if !c.is_zero() {
                        out[k + s] = out[k + s].add(&c.mul(&scaled));
                    }
                }
            }
        }
        out
    }

    /// Least common denominator and the polynomial-coefficient operator
    /// obtained by multiplying by it on the left.
    pub fn clear_denominators(&self) -> (Poly<T>, Vec<Poly<T>>) {
        let mut den = Poly::one();
        for a in &self.c {
            if !a.is_zero() {
                den = lcm_monic(&den, &a.den);
            }
        }
        let coeffs = self
            .c
            .iter()
            .map(|a| {
                if a.is_zero() {
                    Poly::zero()
                } else {
                    a.num.mul(&den.div_exact(&a.den))
                }
            })
            .collect();
        (den, coeffs)
    }
}

fn lcm_monic<T: Field>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    a.mul(b).div_exact(&a.gcd(b)).monic()
}

fn pow_scalar<T: Ring>(base: i64, e: usize) -> T {
    let b = T::from_i64(base);
    let mut acc = T::one();
    for _ in 0..e {
        acc = acc.mul(&b);
    }
    acc
}

impl WeylOperator {
    /// Denominator-cleared primitive integral coefficients in lambda, with the
    /// sign fixed so the first nonzero coefficient leads positively. This is
    /// the reporting form; arithmetic stays over the rational-function field.
    pub fn integer_coeffs(&self) -> Vec<Poly<Rat>> {
        let (_, cleared) = self.clear_denominators();
        let fam: Vec<_> = cleared
            .iter()
            .map(|p| qforge_rings::laurent::LaurentPoly::from_poly(p))
            .collect();
        let mut prim = primitive_family(&fam);
        sign_normalize(&mut prim);
        prim.iter()
            .map(|l| {
                if l.is_zero() {
                    Poly::zero()
                } else {
                    let (p, lo) = l.to_poly_shifted();
                    assert!(lo >= 0);
                    p.shift_up(lo as usize)
                }
            })
            .collect()
    }

    /// Proportionality over Q(lambda): self = c * rhs for a nonzero scalar c.
    pub fn proportional_to(&self, rhs: &Self) -> bool {
        if self.is_zero() || rhs.is_zero() {
            return self.is_zero() && rhs.is_zero();
        }
        if self.deg() != rhs.deg() {
            return false;
        }
        let d = self.deg().unwrap();
        let ratio = self.c[d].div(&rhs.c[d]);
        for i in 0..=d {
            if self.coeff(i) != ratio.mul(&rhs.coeff(i)) {
                return false;
            }
        }
        true
    }
}

pub fn ratfunc_poly(coeffs: &[i64]) -> RatFunc<Rat> {
    RatFunc::from_poly(Poly::new(coeffs.iter().map(|&c| Rat::from_i64(c)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qforge_rings::rat::{rat, rat_i};

    fn lam() -> RatFunc<Rat> {
        RatFunc::x()
    }

    #[test]
    fn theta_lambda_commutation() {
        // theta * lambda = lambda * theta + lambda
        let t = WeylOperator::theta();
        let l = WeylOperator::constant(lam());
        let left = t.mul(&l);
        let expect = l.mul(&t).add(&l);
        assert_eq!(left, expect);
    }

    #[test]
    fn theta_power_on_lambda_power() {
        // theta^i lambda^k = k^i lambda^k as an application statement
        let t3 = WeylOperator::theta().pow(3);
        let f = vec![Rat::zero(), Rat::zero(), rat_i(5)];
        let out = t3.apply_cleared(&f, 4);
        assert_eq!(out[2], rat_i(5 * 8));
        assert!(out.iter().enumerate().all(|(k, v)| k == 2 || Ring::is_zero(v)));
    }

    #[test]
    fn division_by_self_and_theta_shift() {
        let p = WeylOperator::from_polys(vec![
            Poly::new(vec![rat_i(1), rat_i(3)]),
            Poly::new(vec![rat_i(0), rat_i(2)]),
            Poly::new(vec![rat_i(-1)]),
        ]);
        let (q, r) = p.right_divide(&p).unwrap();
        assert_eq!(q, WeylOperator::one());
        assert!(r.is_zero());

        let d = WeylOperator::theta().mul(&p);
        let (q2, r2) = d.right_divide(&p).unwrap();
        assert!(r2.is_zero());
        assert_eq!(q2.mul(&p), d);
        // the quotient is theta plus a correction of degree 0 forced by the
        // commutation rule
        assert_eq!(q2.deg(), Some(1));
        assert_eq!(q2.c[1], RatFunc::constant(Rat::one()));
    }

    #[test]
    fn division_rejects_zero() {
        let p = WeylOperator::theta();
        assert!(matches!(
            p.right_divide(&WeylOperator::zero()),
            Err(OpalgError::DivisionByZeroOperator)
        ));
    }

    #[test]
    fn remainder_has_lower_degree_with_rational_coefficients() {
        // divide theta^3 by (1-lambda) theta + 2: remainder degree 0
        let d = WeylOperator::theta().pow(3);
        let p = WeylOperator::from_polys(vec![
            Poly::constant(rat_i(2)),
            Poly::new(vec![rat_i(1), rat_i(-1)]),
        ]);
        let (q, r) = d.right_divide(&p).unwrap();
        assert_eq!(r.deg(), Some(0));
        assert_eq!(q.mul(&p).add(&r), d);
    }

    #[test]
    fn integer_coeffs_clear_denominators_and_content() {
        // (1/2) + (3/(2 lambda)) theta scales to lambda + 3 theta
        let op = WeylOperator::new(vec![
            RatFunc::constant(rat(1, 2)),
            RatFunc::new(Poly::constant(rat(3, 2)), Poly::x()),
        ]);
        let ints = op.integer_coeffs();
        assert_eq!(ints[0], Poly::x());
        assert_eq!(ints[1], Poly::constant(rat_i(3)));
    }

    #[test]
    fn proportionality_detects_scalar_multiples() {
        let a = WeylOperator::from_polys(vec![
            Poly::new(vec![rat_i(0), rat_i(4)]),
            Poly::new(vec![rat_i(-1), rat_i(16)]),
        ]);
        let b = a.scale_left(&RatFunc::constant(rat(-1, 4)));
        assert!(a.proportional_to(&b));
        let c = a.add(&WeylOperator::one());
        assert!(!a.proportional_to(&c));
    }
}
