//! Hasse-style congruence between the p-th power of the truncated
//! q-coefficient sum at q = zeta_p and the classical coefficient sum mod p.
//!
//! Both sides live in F_p[u] with u = lambda^{1/p} after the ring map
//! sending zeta_p to 1; the p-th power on the left is computed honestly by
//! square and multiply, so the collapse of cross terms is observed, not
//! assumed.

use qforge_qpoch::poch::poch_finite_at_zeta;
use qforge_rings::nt::{gcd_u64, is_prime, mod_inv, mod_pow};
use qforge_rings::{CycloNum, Rat, Ring};

use crate::data::{DeformStyle, HGData};
use crate::series::classical_coeffs;
use crate::HypergError;

#[derive(Clone, Debug)]
pub struct HasseReport {
    pub p: u64,
    pub ok: bool,
    /// Coefficients of (sum_k r_k u^k)^p in F_p[u], degree up to p(p-1).
    pub lhs_pow: Vec<u64>,
    /// Classical coefficients mod p, indices 0..p.
    pub rhs: Vec<u64>,
}

/// Reduce a rational mod p; the denominator must be a p-adic unit.
fn rat_mod_p(r: &Rat, p: u64) -> Result<u64, HypergError> {
    let pb = num_bigint::BigInt::from(p);
    let num = ((r.numer() % &pb) + &pb) % &pb;
    let den = ((r.denom() % &pb) + &pb) % &pb;
    let num: u64 = num.try_into().unwrap();
    let den: u64 = den.try_into().unwrap();
    let dinv = mod_inv(den as i64, p).ok_or(HypergError::NotIntegralAtPrime(p))?;
    Ok(num * dinv % p)
}

fn poly_mul_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn poly_pow_mod(f: &[u64], e: u64, p: u64) -> Vec<u64> {
    let mut base = f.to_vec();
    let mut acc = vec![1u64];
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &base, p);
        }
        e >>= 1;
        if e > 0 {
            base = poly_mul_mod(&base, &base, p);
        }
    }
    acc
}

/// q-coefficient at zeta_p per the family's deformation style.
fn q_coeff_at_zeta(data: &HGData, k: u64, p: u64) -> Result<CycloNum, HypergError> {
    match (&data.style, &data.factorial) {
        (DeformStyle::Factorial, Some((a, b))) => {
            let one = qforge_rings::rat::rat_i(1);
            let mut den = CycloNum::from_int(1);
            for bj in b {
                let f = poch_finite_at_zeta(&one, bj * k, p);
                if Ring::is_zero(&f) {
                    return Err(HypergError::VanishingDenominator(k));
                }
                den = den.mul(&f);
            }
            let mut num = CycloNum::from_int(1);
            for ai in a {
                num = num.mul(&poch_finite_at_zeta(&one, ai * k, p));
            }
            Ok(num.mul(&qforge_rings::Field::inv(&den)))
        }
        _ => {
            let mut den = CycloNum::from_int(1);
            for bj in &data.beta {
                let f = poch_finite_at_zeta(bj, k, p);
                if Ring::is_zero(&f) {
                    return Err(HypergError::VanishingDenominator(k));
                }
                den = den.mul(&f);
            }
            let mut num = CycloNum::from_int(1);
            for aj in &data.alpha {
                num = num.mul(&poch_finite_at_zeta(aj, k, p));
            }
            Ok(num.mul(&qforge_rings::Field::inv(&den)))
        }
    }
}

pub fn hasse_check(data: &HGData, p: u64) -> Result<HasseReport, HypergError> {
    if !is_prime(p) {
        return Err(HypergError::NotPrime(p));
    }
    let nden = data.denominator();
    if gcd_u64(p, nden) != 1 {
        return Err(HypergError::NotCoprime { m: p, n: nden });
    }
    let mut f = Vec::with_capacity(p as usize);
    for k in 0..p {
        let a = q_coeff_at_zeta(data, k, p)?;
        let mut r = rat_mod_p(&a.eval_one(), p)?;
        if data.style == DeformStyle::Pochhammer {
            let s = rat_mod_p(&data.scale, p)?;
            r = r * mod_pow(s, k, p) % p;
        }
        f.push(r);
    }
    let lhs_pow = poly_pow_mod(&f, p, p);
    let rhs: Vec<u64> = classical_coeffs(data, p as usize - 1)
        .iter()
        .map(|c| rat_mod_p(c, p))
        .collect::<Result<_, _>>()?;
    let mut ok = true;
    for (e, c) in lhs_pow.iter().enumerate() {
        let want = if e % p as usize == 0 && e / (p as usize) < rhs.len() {
            rhs[e / p as usize]
        } else {
            0
        };
        if *c != want {
            ok = false;
        }
    }
    Ok(HasseReport { p, ok, lhs_pow, rhs })
}
