//! Content and gcd helpers for polynomials over Q and Laurent polynomials,
//! used to bring reported operator coefficients to primitive integral form.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use qforge_rings::laurent::LaurentPoly;
use qforge_rings::poly::Poly;
use qforge_rings::rat::{rat_i, Rat};
use qforge_rings::ratfunc::RatFunc;
use qforge_rings::ring::{Field, Ring};

pub fn bigint_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

pub fn bigint_lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::from(0);
    }
    (a * b).abs() / bigint_gcd(a, b)
}

/// Positive generator of the fractional ideal spanned by the inputs:
/// gcd of numerators over lcm of denominators. Zero for an all-zero slice.
pub fn rat_content(vals: &[Rat]) -> Rat {
    let mut num = BigInt::from(0);
    let mut den = BigInt::from(1);
    for v in vals {
        if Ring::is_zero(v) {
            continue;
        }
        num = bigint_gcd(&num, v.numer());
        den = bigint_lcm(&den, v.denom());
    }
    if num.is_zero() {
        return rat_i(0);
    }
    Rat::new(num, den)
}

/// Monic gcd of a list of polynomials over Q; zero for an all-zero list.
pub fn poly_gcd_all(ps: &[Poly<Rat>]) -> Poly<Rat> {
    let mut g = Poly::zero();
    for p in ps {
        if p.is_zero() {
            continue;
        }
        g = if g.is_zero() { p.monic() } else { g.gcd(p) };
        if g.degree() == Some(0) {
            break;
        }
    }
    g
}

pub fn poly_lcm(a: &Poly<Rat>, b: &Poly<Rat>) -> Poly<Rat> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    a.mul(b).div_exact(&a.gcd(b)).monic()
}

/// All rational coefficients of a polynomial list, for content computation.
fn all_coeffs(ps: &[Poly<Rat>]) -> Vec<Rat> {
    let mut out = Vec::new();
    for p in ps {
        if let Some(d) = p.degree() {
            for k in 0..=d {
                out.push(p.coeff(k));
            }
        }
    }
    out
}

/// Divides a family of Laurent polynomials in q by its joint content: the
/// common monomial q^v, the monic polynomial gcd, and the rational content.
/// The result is a primitive integral family spanning the same module over
/// Z[q, q^{-1}] up to sign. Returns the normalized family.
pub fn primitive_family(fam: &[LaurentPoly<Rat>]) -> Vec<LaurentPoly<Rat>> {
    if fam.iter().all(|f| f.is_zero()) {
        return fam.to_vec();
    }
    let shift = fam.iter().filter_map(|f| f.val()).min().unwrap();
    let polys: Vec<Poly<Rat>> = fam
        .iter()
        .map(|f| {
            if f.is_zero() {
                Poly::zero()
            } else {
                let (p, lo) = f.to_poly_shifted();
                p.shift_up((lo - shift) as usize)
            }
        })
        .collect();
    let g = poly_gcd_all(&polys);
    let reduced: Vec<Poly<Rat>> =
        polys.iter().map(|p| if p.is_zero() { Poly::zero() } else { p.div_exact(&g) }).collect();
    let c = rat_content(&all_coeffs(&reduced));
    let cinv = Field::inv(&c);
    reduced.iter().map(|p| LaurentPoly::from_poly(&p.scale(&cinv))).collect()
}

/// Flips the family sign so its first nonzero member has a positive leading
/// coefficient.
pub fn sign_normalize(fam: &mut [LaurentPoly<Rat>]) {
    for f in fam.iter() {
        if f.is_zero() {
            continue;
        }
        if f.lead() < &rat_i(0) {
            for g in fam.iter_mut() {
                *g = g.neg();
            }
        }
        break;
    }
}

pub fn laurent_to_ratfunc(l: &LaurentPoly<Rat>) -> RatFunc<Rat> {
    if l.is_zero() {
        return RatFunc::from_poly(Poly::zero());
    }
    let (p, lo) = l.to_poly_shifted();
    if lo >= 0 {
        RatFunc::from_poly(p.shift_up(lo as usize))
    } else {
        RatFunc::new(p, Poly::monomial(Rat::one(), (-lo) as usize))
    }
}

/// Inverse of laurent_to_ratfunc for rational functions whose denominator is
/// a monomial in q. Returns None otherwise.
pub fn ratfunc_to_laurent(r: &RatFunc<Rat>) -> Option<LaurentPoly<Rat>> {
    let den = &r.den;
    let d = den.degree()?;
    for k in 0..d {
        if !Ring::is_zero(&den.coeff(k)) {
            return None;
        }
    }
    let lead = den.lead().clone();
    let scaled = r.num.scale(&Field::inv(&lead));
    Some(LaurentPoly::from_poly(&scaled).shift(-(d as i64)))
}

/// Clears a vector over Q(q) to a primitive integral vector over Z[q] spanning
/// the same line, sign-normalized on the first nonzero entry.
pub fn clear_ratfunc_vector(v: &[RatFunc<Rat>]) -> Vec<LaurentPoly<Rat>> {
    let mut den = Poly::one();
    for r in v {
        if !Ring::is_zero(r) {
            den = poly_lcm(&den, &r.den);
        }
    }
    let cleared: Vec<Poly<Rat>> = v
        .iter()
        .map(|r| {
            if Ring::is_zero(r) {
                Poly::zero()
            } else {
                r.num.mul(&den.div_exact(&r.den))
            }
        })
        .collect();
    let lifted: Vec<LaurentPoly<Rat>> =
        cleared.iter().map(LaurentPoly::from_poly).collect();
    let mut out = primitive_family(&lifted);
    sign_normalize(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use qforge_rings::rat::{rat, rat_i};

    fn qp(coeffs: &[i64]) -> Poly<Rat> {
        Poly::new(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    #[test]
    fn rational_content_mixed_denominators() {
        let c = rat_content(&[rat(3, 4), rat(9, 2), rat_i(-6)]);
        assert_eq!(c, rat(3, 4));
        assert_eq!(rat_content(&[rat_i(0)]), rat_i(0));
    }

    #[test]
    fn gcd_and_lcm_of_polys() {
        let a = qp(&[-1, 0, 1]);
        let b = qp(&[1, 1]);
        let g = poly_gcd_all(&[a.clone(), b.clone()]);
        assert_eq!(g, qp(&[1, 1]));
        let l = poly_lcm(&a, &b);
        assert_eq!(l, qp(&[-1, 0, 1]));
    }

    #[test]
    fn primitive_family_strips_monomial_poly_and_content() {
        // q^2*(1+q)^2*2, q^3*(1+q)^2*4 reduce to 2/gcd-content: (1, 2q) after
        // dividing by q^2 (1+q)^2 and the rational content 2.
        let one_plus_q_sq = qp(&[1, 2, 1]);
        let f0 = LaurentPoly::from_poly(&one_plus_q_sq.scale(&rat_i(2))).shift(2);
        let f1 = LaurentPoly::from_poly(&one_plus_q_sq.scale(&rat_i(4))).shift(3);
        let out = primitive_family(&[f0, f1]);
        assert_eq!(out[0], LaurentPoly::from_poly(&qp(&[1])));
        assert_eq!(out[1], LaurentPoly::from_poly(&qp(&[0, 2])));
    }

    #[test]
    fn vector_clearing_gives_primitive_integral_coeffs() {
        let half_over_q = RatFunc::new(qp(&[1]), qp(&[0, 2]));
        let v = vec![RatFunc::from_poly(qp(&[1])), half_over_q];
        let out = clear_ratfunc_vector(&v);
        // lcm denominator 2q: (2q, 1), primitive and positive.
        assert_eq!(out[0], LaurentPoly::from_poly(&qp(&[0, 2])));
        assert_eq!(out[1], LaurentPoly::from_poly(&qp(&[1])));
    }

    #[test]
    fn ratfunc_laurent_roundtrip() {
        let l = LaurentPoly::new(-2, vec![rat_i(3), rat_i(0), rat(1, 2)]);
        let r = laurent_to_ratfunc(&l);
        assert_eq!(ratfunc_to_laurent(&r), Some(l));
        let non_monomial = RatFunc::new(qp(&[1]), qp(&[1, 1]));
        assert_eq!(ratfunc_to_laurent(&non_monomial), None);
    }
}
