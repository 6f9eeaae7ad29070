//! Shift operators in sigma with sigma lambda = q lambda sigma, coefficients
//! kept left of the sigma powers as polynomials in lambda.
//!
//! Fractional powers of q are handled by working in v = q^{1/step}: every
//! stored exponent is an integer exponent of v, and sigma multiplies the
//! lambda^k coefficient of its argument by v^{step*j*k}.

use qforge_rings::laurent::LaurentPoly;
use qforge_rings::poly::Poly;
use qforge_rings::rat::Rat;
use qforge_rings::ring::Ring;

/// Laurent polynomials in the q-variable with rational coefficients.
pub type QPoly = LaurentPoly<Rat>;

/// Scalar rings containing a distinguished invertible q-variable.
pub trait QScalar: Ring {
    /// Multiplies by v^e, where v is the q-variable of the ring.
    fn v_shift(&self, e: i64) -> Self;
    /// Substitutes v -> v^k for k >= 1, used when refining the step.
    fn v_stretch(&self, k: i64) -> Self;
}

impl QScalar for QPoly {
    fn v_shift(&self, e: i64) -> Self {
        self.shift(e)
    }
    fn v_stretch(&self, k: i64) -> Self {
        self.stretch(k)
    }
}

/// Bivariate scalars: Laurent in q outside, Laurent in a parameter inside.
impl QScalar for LaurentPoly<LaurentPoly<Rat>> {
    fn v_shift(&self, e: i64) -> Self {
        self.shift(e)
    }
    fn v_stretch(&self, k: i64) -> Self {
        self.stretch(k)
    }
}

/// Rational functions of the q-variable, for series whose coefficients leave
/// the Laurent ring.
impl QScalar for qforge_rings::ratfunc::RatFunc<Rat> {
    fn v_shift(&self, e: i64) -> Self {
        use qforge_rings::poly::Poly;
        if e >= 0 {
            self.mul(&Self::from_poly(Poly::monomial(Rat::one(), e as usize)))
        } else {
            self.mul(&Self::new(Poly::one(), Poly::monomial(Rat::one(), (-e) as usize)))
        }
    }
    fn v_stretch(&self, k: i64) -> Self {
        assert!(k >= 1);
        Self::new(self.num.stretch(k as usize), self.den.stretch(k as usize))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QDiffOperator<R: QScalar = QPoly> {
    /// v = q^{1/step}; exponents of v are integers throughout.
    pub step: u64,
    /// a[j] is the coefficient of sigma^j, a polynomial in lambda over R.
    pub a: Vec<Poly<R>>,
}

impl<R: QScalar> QDiffOperator<R> {
    pub fn new(step: u64, mut a: Vec<Poly<R>>) -> Self {
        assert!(step >= 1);
        while a.last().map_or(false, |p| p.is_zero()) {
            a.pop();
        }
        QDiffOperator { step, a }
    }

    pub fn zero(step: u64) -> Self {
        QDiffOperator::new(step, Vec::new())
    }

    pub fn one(step: u64) -> Self {
        QDiffOperator::new(step, vec![Poly::one()])
    }

    pub fn sigma(step: u64) -> Self {
        QDiffOperator::new(step, vec![Poly::zero(), Poly::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_empty()
    }

    /// Order in sigma; None for the zero operator.
    pub fn order(&self) -> Option<usize> {
        if self.a.is_empty() {
            None
        } else {
            Some(self.a.len() - 1)
        }
    }

    pub fn coeff(&self, j: usize) -> Poly<R> {
        self.a.get(j).cloned().unwrap_or_else(Poly::zero)
    }

    /// Maps the scalar ring, preserving the step and sigma structure.
    pub fn map_scalars<U: QScalar>(&self, f: impl Fn(&R) -> U) -> QDiffOperator<U> {
        QDiffOperator::new(self.step, self.a.iter().map(|p| p.map(&f)).collect())
    }

    /// Rewrites the operator over the finer variable v' = q^{1/(step*k)}.
    pub fn refine_step(&self, k: u64) -> Self {
        assert!(k >= 1);
        if k == 1 {
            return self.clone();
        }
        let a = self
            .a
            .iter()
            .map(|p| p.map(|c| c.v_stretch(k as i64)))
            .collect();
        QDiffOperator::new(self.step * k, a)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.step, rhs.step, "operators over different q-variables");
        let n = self.a.len().max(rhs.a.len());
        let mut a = Vec::with_capacity(n);
        for j in 0..n {
            a.push(self.coeff(j).add(&rhs.coeff(j)));
        }
        QDiffOperator::new(self.step, a)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        QDiffOperator { step: self.step, a: self.a.iter().map(|p| p.neg()).collect() }
    }

    /// Left multiplication by a polynomial in lambda, no reordering needed.
    pub fn scale_left(&self, p: &Poly<R>) -> Self {
        QDiffOperator::new(self.step, self.a.iter().map(|c| p.mul(c)).collect())
    }

    /// sigma^j b(lambda) = b^{(j)}(lambda) sigma^j with the lambda^k
    /// coefficient multiplied by v^{step*j*k}.
    fn conjugate(&self, p: &Poly<R>, j: usize) -> Poly<R> {
        if j == 0 {
            return p.clone();
        }
        let d = match p.degree() {
            None => return Poly::zero(),
            Some(d) => d,
        };
        let mut c = Vec::with_capacity(d + 1);
        for k in 0..=d {
            let e = (self.step as i64) * (j as i64) * (k as i64);
            c.push(p.coeff(k).v_shift(e));
        }
        Poly::new(c)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.step, rhs.step, "operators over different q-variables");
        if self.is_zero() || rhs.is_zero() {
            return QDiffOperator::zero(self.step);
        }
        let n = self.a.len() + rhs.a.len() - 1;
        let mut a = vec![Poly::zero(); n];
        for (i, ai) in self.a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in rhs.a.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let moved = self.conjugate(bj, i);
                a[i + j] = a[i + j].add(&ai.mul(&moved));
            }
        }
        QDiffOperator::new(self.step, a)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = QDiffOperator::one(self.step);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies the operator to a truncated lambda-series with coefficients in
    /// R, exactly: out_n = sum_{j,i} a_{j,i} v^{step*j*(n-i)} f_{n-i}.
    pub fn apply(&self, f: &[R], t: usize) -> Vec<R> {
        let mut out = vec![R::zero(); t + 1];
        for (j, aj) in self.a.iter().enumerate() {
            let d = match aj.degree() {
                None => continue,
                Some(d) => d,
            };
            for i in 0..=d {
                let c = aj.coeff(i);
                if c.is_zero() {
                    continue;
                }
                for n in i..=t {
                    let k = n - i;
                    if k >= f.len() {
                        break;
                    }
                    if f[k].is_zero() {
                        continue;
                    }
                    let e = (self.step as i64) * (j as i64) * (k as i64);
                    out[n] = out[n].add(&c.mul(&f[k].v_shift(e)));
                }
            }
        }
        out
    }
}

/// Support of the operator: lattice points (j, i) with a nonzero coefficient
/// of lambda^i sigma^j.
pub fn support<R: QScalar>(op: &QDiffOperator<R>) -> Vec<(i64, i64)> {
    let mut pts = Vec::new();
    for (j, aj) in op.a.iter().enumerate() {
        if let Some(d) = aj.degree() {
            for i in 0..=d {
                if !aj.coeff(i).is_zero() {
                    pts.push((j as i64, i as i64));
                }
            }
        }
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use qforge_rings::rat::rat_i;

    fn qmono(e: i64) -> QPoly {
        QPoly::monomial(Rat::one(), e)
    }

    fn lam_pow(k: usize) -> Poly<QPoly> {
        Poly::monomial(QPoly::one(), k)
    }

    #[test]
    fn sigma_lambda_commutation() {
        // sigma^j lambda^k = q^{jk} lambda^k sigma^j
        for (j, k) in [(1usize, 1usize), (2, 3), (3, 2)] {
            let s = QDiffOperator::<QPoly>::sigma(1).pow(j);
            let l = QDiffOperator::new(1, vec![lam_pow(k)]);
            let left = s.mul(&l);
            let mut expect = l.mul(&s);
            expect = expect.scale_left(&Poly::constant(qmono((j * k) as i64)));
            assert_eq!(left, expect);
        }
    }

    #[test]
    fn application_matches_shift_definition() {
        // (sigma f)(lambda) = f(q lambda) on f = 1 + 2 lambda + lambda^2
        let f = vec![QPoly::one(), QPoly::constant(rat_i(2)), QPoly::one()];
        let s = QDiffOperator::<QPoly>::sigma(1);
        let out = s.apply(&f, 2);
        assert_eq!(out[0], QPoly::one());
        assert_eq!(out[1], qmono(1).scale(&rat_i(2)));
        assert_eq!(out[2], qmono(2));
    }

    #[test]
    fn identity_application_is_identity() {
        let f = vec![qmono(-1), QPoly::one(), qmono(3)];
        let id = QDiffOperator::<QPoly>::one(1);
        assert_eq!(id.apply(&f, 2), f);
    }

    #[test]
    fn mul_is_associative_on_sample() {
        let a = QDiffOperator::new(1, vec![lam_pow(1), Poly::constant(qmono(2))]);
        let b = QDiffOperator::new(1, vec![Poly::one(), lam_pow(2)]);
        let c = QDiffOperator::new(1, vec![Poly::zero(), Poly::constant(qmono(-1)), lam_pow(1)]);
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn refine_step_preserves_action() {
        // over v = q: (1 - q sigma); over v = q^{1/2} it is (1 - v^2 sigma)
        let op = QDiffOperator::new(1, vec![Poly::one(), Poly::constant(qmono(1)).neg()]);
        let fine = op.refine_step(2);
        assert_eq!(fine.step, 2);
        assert_eq!(fine.a[1], Poly::constant(qmono(2)).neg());
        let f = vec![QPoly::one(), QPoly::one()];
        let f2: Vec<QPoly> = f.iter().map(|c| c.stretch(2)).collect();
        let coarse = op.apply(&f, 1);
        let refined = fine.apply(&f2, 1);
        for (c, r) in coarse.iter().zip(refined.iter()) {
            assert_eq!(c.stretch(2), *r);
        }
    }

    #[test]
    fn support_lists_nonzero_lattice_points() {
        let op = QDiffOperator::new(
            1,
            vec![Poly::new(vec![QPoly::one(), QPoly::zero(), qmono(1)]), lam_pow(1)],
        );
        let mut pts = support(&op);
        pts.sort();
        assert_eq!(pts, vec![(0, 0), (0, 2), (1, 1)]);
    }
}
