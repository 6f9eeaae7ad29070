//! Hypergeometric differential and q-difference operators.
//!
//! The differential operator for parameters (alpha; beta) with a distinguished
//! unit entry in beta is theta * prod(theta + beta_j - 1) - C lambda *
//! prod(theta + alpha_i). Its q-analogue comes in two shapes: a product form
//! built from (1 - q^c sigma) factors, and a factorial-ratio form compiled
//! from the reduced term ratio of a quotient of finite q-products.

use qforge_rings::laurent::LaurentPoly;
use qforge_rings::poly::Poly;
use qforge_rings::rat::Rat;
use qforge_rings::ratfunc::RatFunc;
use qforge_rings::ring::Ring;

use crate::polyops::{bigint_lcm, primitive_family};
use crate::qdiff::{QDiffOperator, QPoly};
use crate::weyl::WeylOperator;
use crate::OpalgError;

/// Removes one unit entry from beta, the slot played by the factorial in the
/// underlying series. Errors when beta has no unit entry.
fn split_unit(beta: &[Rat]) -> Result<Vec<Rat>, OpalgError> {
    let one = Rat::one();
    let pos = beta.iter().position(|b| *b == one).ok_or(OpalgError::MissingUnitParameter)?;
    let mut rest = beta.to_vec();
    rest.remove(pos);
    Ok(rest)
}

/// theta * prod_j (theta + beta_j - 1) - rescale * lambda * prod_i (theta + alpha_i).
pub fn pf_operator(
    alpha: &[Rat],
    beta: &[Rat],
    rescale: &Rat,
) -> Result<WeylOperator, OpalgError> {
    let rest = split_unit(beta)?;
    let mut left = WeylOperator::theta();
    for b in &rest {
        let shift = WeylOperator::constant(RatFunc::constant(b.sub(&Rat::one())));
        left = left.mul(&WeylOperator::theta().add(&shift));
    }
    let mut right = WeylOperator::constant(RatFunc::new(
        Poly::new(vec![Rat::zero(), rescale.clone()]),
        Poly::one(),
    ));
    for a in alpha {
        let shift = WeylOperator::constant(RatFunc::constant(a.clone()));
        right = right.mul(&WeylOperator::theta().add(&shift));
    }
    Ok(left.sub(&right))
}

/// Least common denominator of a set of rationals, as the step for the
/// q-variable v = q^{1/step}.
fn common_step(vals: &[Rat]) -> u64 {
    let mut l = num_bigint::BigInt::from(1);
    for v in vals {
        l = bigint_lcm(&l, v.denom());
    }
    use num_traits::ToPrimitive;
    l.to_u64().expect("step fits in u64")
}

/// Multiplies an exponent by the step, asserting integrality.
fn v_exponent(c: &Rat, step: u64) -> i64 {
    use num_traits::ToPrimitive;
    let scaled = c.mul(&Rat::from_i64(step as i64));
    assert!(scaled.is_integer());
    scaled.numer().to_i64().expect("exponent fits in i64")
}

/// 1 - v^e sigma over the given step.
fn one_minus_qc_sigma(e: i64, step: u64) -> QDiffOperator {
    QDiffOperator::new(
        step,
        vec![Poly::one(), Poly::constant(QPoly::monomial(Rat::one(), e)).neg()],
    )
}

/// Product-form q-difference operator
/// (1 - sigma) prod_j (1 - q^{beta_j - 1} sigma) - lambda prod_i (1 - q^{alpha_i} sigma),
/// with one unit entry of beta consumed by the leading (1 - sigma) factor.
pub fn qpf_operator(alpha: &[Rat], beta: &[Rat]) -> Result<QDiffOperator, OpalgError> {
    let rest = split_unit(beta)?;
    let mut exps: Vec<Rat> = alpha.to_vec();
    for b in &rest {
        exps.push(b.sub(&Rat::one()));
    }
    let step = common_step(&exps);
    let mut left = one_minus_qc_sigma(0, step);
    for b in &rest {
        left = left.mul(&one_minus_qc_sigma(v_exponent(&b.sub(&Rat::one()), step), step));
    }
    let mut right = QDiffOperator::one(step);
    for a in alpha {
        right = right.mul(&one_minus_qc_sigma(v_exponent(a, step), step));
    }
    let lambda = Poly::monomial(QPoly::one(), 1);
    Ok(left.sub(&right.scale_left(&lambda)))
}

/// Finite q-product ratio data: the series sum_k prod_i (q;q)_{num_i k} /
/// prod_j (q;q)_{den_j k} lambda^k. The compiled annihilator is
/// B(q^{-1} sigma) - lambda A(sigma) where A/B is the reduced term ratio.
pub fn qpf_factorial_operator(num: &[u64], den: &[u64]) -> QDiffOperator {
    // Term ratio in U = q^k: prod_i prod_{r=1..num_i} (1 - q^r U^{num_i}) over
    // the same for den, reduced in Q(q)[U].
    let mut n_poly = Poly::<RatFunc<Rat>>::one();
    for &a in num {
        for r in 1..=a {
            n_poly = n_poly.mul(&one_minus_qr_upow(r as i64, a as usize));
        }
    }
    let mut d_poly = Poly::<RatFunc<Rat>>::one();
    for &b in den {
        for r in 1..=b {
            d_poly = d_poly.mul(&one_minus_qr_upow(r as i64, b as usize));
        }
    }
    let g = n_poly.gcd(&d_poly);
    let mut a_poly = n_poly.div_exact(&g);
    let mut b_poly = d_poly.div_exact(&g);

    // The boundary term of the summed recurrence sits at B(q^{-1}); a factor
    // vanishing there is required and reinstated if the reduction removed it.
    let qinv = RatFunc::new(Poly::one(), Poly::x());
    if !b_poly.eval(&qinv).is_zero() {
        let extra = one_minus_qr_upow(1, 1);
        a_poly = a_poly.mul(&extra);
        b_poly = b_poly.mul(&extra);
    }

    let (a_int, b_int) = clear_pair(&a_poly, &b_poly);
    let order = a_int.len().max(b_int.len()) - 1;
    let mut coeffs: Vec<Poly<QPoly>> = vec![Poly::zero(); order + 1];
    for (j, c) in b_int.iter().enumerate() {
        if !c.is_zero() {
            coeffs[j] = coeffs[j].add(&Poly::constant(c.shift(-(j as i64))));
        }
    }
    for (j, c) in a_int.iter().enumerate() {
        if !c.is_zero() {
            coeffs[j] = coeffs[j].sub(&Poly::monomial(c.clone(), 1));
        }
    }
    QDiffOperator::new(1, coeffs)
}

/// 1 - q^r U^p as a polynomial in U over Q(q).
fn one_minus_qr_upow(r: i64, p: usize) -> Poly<RatFunc<Rat>> {
    let mut c = vec![RatFunc::constant(Rat::zero()); p + 1];
    c[0] = RatFunc::constant(Rat::one());
    c[p] = RatFunc::from_poly(Poly::monomial(Rat::one(), r as usize)).neg();
    Poly::new(c)
}

/// Jointly clears a pair of polynomials over Q(q) to primitive integral
/// q-coefficients, preserving their ratio, with B's lowest coefficient
/// leading positively.
fn clear_pair(a: &Poly<RatFunc<Rat>>, b: &Poly<RatFunc<Rat>>) -> (Vec<QPoly>, Vec<QPoly>) {
    let mut fam: Vec<LaurentPoly<Rat>> = Vec::new();
    let da = a.degree().expect("nonzero");
    let db = b.degree().expect("nonzero");
    let mut den = Poly::one();
    for k in 0..=da {
        den = crate::polyops::poly_lcm(&den, &a.coeff(k).den);
    }
    for k in 0..=db {
        den = crate::polyops::poly_lcm(&den, &b.coeff(k).den);
    }
    for k in 0..=da {
        let c = a.coeff(k);
        fam.push(if Ring::is_zero(&c) {
            LaurentPoly::zero()
        } else {
            LaurentPoly::from_poly(&c.num.mul(&den.div_exact(&c.den)))
        });
    }
    for k in 0..=db {
        let c = b.coeff(k);
        fam.push(if Ring::is_zero(&c) {
            LaurentPoly::zero()
        } else {
            LaurentPoly::from_poly(&c.num.mul(&den.div_exact(&c.den)))
        });
    }
    let mut prim = primitive_family(&fam);
    // sign from B's first nonzero coefficient
    let b_first = prim[da + 1..].iter().position(|c| !c.is_zero()).expect("nonzero");
    if prim[da + 1 + b_first].lead() < &Rat::zero() {
        for f in prim.iter_mut() {
            *f = f.neg();
        }
    }
    let a_int = prim[..=da].to_vec();
    let b_int = prim[da + 1..].to_vec();
    (a_int, b_int)
}

/// The operator of a general term ratio t_{k+1}/t_k = rho(q^k) lambda-free in
/// lambda, given as reduced numerator and denominator in U = q^k over Z[q].
/// Used by downstream series compilers; the boundary factor is the caller's
/// responsibility here.
pub fn ratio_to_operator(a_int: &[QPoly], b_int: &[QPoly]) -> QDiffOperator {
    let order = a_int.len().max(b_int.len()) - 1;
    let mut coeffs: Vec<Poly<QPoly>> = vec![Poly::zero(); order + 1];
    for (j, c) in b_int.iter().enumerate() {
        if !c.is_zero() {
            coeffs[j] = coeffs[j].add(&Poly::constant(c.shift(-(j as i64))));
        }
    }
    for (j, c) in a_int.iter().enumerate() {
        if !c.is_zero() {
            coeffs[j] = coeffs[j].sub(&Poly::monomial(c.clone(), 1));
        }
    }
    QDiffOperator::new(1, coeffs)
}

/// Finite q-Pochhammer (q;q)_k over Z[q], for series term tables.
pub fn qq_poch(k: u64) -> Poly<Rat> {
    let mut acc = Poly::one();
    for i in 1..=k {
        let mut c = vec![Rat::zero(); i as usize + 1];
        c[0] = Rat::one();
        c[i as usize] = Rat::one().neg();
        acc = acc.mul(&Poly::new(c));
    }
    acc
}

/// Coefficient table of sum_k prod (q;q)_{num_i k} / prod (q;q)_{den_j k}
/// lambda^k through lambda^t; each entry is exact in Z[q].
/// cur *= 1 - q^r on a raw coefficient buffer.
fn mul_binomial(cur: &mut Vec<Rat>, r: usize) {
    let n = cur.len();
    cur.resize(n + r, Rat::zero());
    for i in (0..n).rev() {
        let t = cur[i].clone();
        cur[i + r] = cur[i + r].sub(&t);
    }
}

/// cur /= 1 - q^r by synthetic division; false if the division is inexact.
fn div_binomial(cur: &mut Vec<Rat>, r: usize) -> bool {
    let n = cur.len();
    if n < r {
        return false;
    }
    for i in r..n {
        let t = cur[i - r].clone();
        cur[i] = cur[i].add(&t);
    }
    if cur[n - r..].iter().any(|c| !Ring::is_zero(c)) {
        return false;
    }
    cur.truncate(n - r);
    true
}

pub fn factorial_series(num: &[u64], den: &[u64], t: usize) -> Vec<QPoly> {
    // Each term is the previous one times the Pochhammer increments; binomial
    // factors go in and out by linear-time passes. Should a single-factor
    // division ever leave a remainder, the whole denominator increment is
    // divided out densely instead.
    let mut out = Vec::with_capacity(t + 1);
    let mut cur: Vec<Rat> = vec![Rat::one()];
    out.push(LaurentPoly::from_poly(&Poly::new(cur.clone())));
    for k in 0..t as u64 {
        for &a in num {
            for r in a * k + 1..=a * (k + 1) {
                mul_binomial(&mut cur, r as usize);
            }
        }
        let mut decs = Vec::new();
        for &b in den {
            for r in b * k + 1..=b * (k + 1) {
                decs.push(r as usize);
            }
        }
        let snapshot = cur.clone();
        if !decs.iter().all(|&r| div_binomial(&mut cur, r)) {
            let mut dec: Vec<Rat> = vec![Rat::one()];
            for &r in &decs {
                mul_binomial(&mut dec, r);
            }
            cur = Poly::new(snapshot).div_exact(&Poly::new(dec)).c;
        }
        out.push(LaurentPoly::from_poly(&Poly::new(cur.clone())));
    }
    out
}

/// Product-form series term (q^{c};q)_k = prod_{i=0..k-1} (1 - q^{c+i}) in the
/// v-variable of the given step; c*step must be integral.
pub fn qc_poch_v(c: &Rat, k: u64, step: u64) -> QPoly {
    let e0 = v_exponent(c, step);
    let mut acc = QPoly::one();
    for i in 0..k as i64 {
        let e = e0 + (step as i64) * i;
        acc = acc.mul(&QPoly::one().sub(&QPoly::monomial(Rat::one(), e)));
    }
    acc
}
