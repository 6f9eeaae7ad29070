//! Degeneration of shift operators at q = 1 via q = e^h.
//!
//! Under q = e^h the shift acts as f(q^j lambda) = e^{jh theta} f(lambda), so
//! sigma^j expands into theta-layers j^t theta^t / t! and every power v^e of
//! the q-variable v = q^{1/step} expands into (e/step)^t h^t / t!. Collecting
//! powers of h turns one q-difference operator into a tower of differential
//! operators.

use qforge_rings::poly::Poly;
use qforge_rings::rat::Rat;
use qforge_rings::ratfunc::RatFunc;
use qforge_rings::ring::{Field, Ring};

use crate::qdiff::{QDiffOperator, QPoly};
use crate::weyl::{WeylOp, WeylOperator};

/// h-expansion coefficients of v^e through h^layers: (e/step)^t / t!.
fn exp_layers(e: i64, step: u64, layers: usize) -> Vec<Rat> {
    let base = Rat::from_i64(e).div(&Rat::from_i64(step as i64));
    let mut out = Vec::with_capacity(layers + 1);
    let mut acc = Rat::one();
    for t in 0..=layers {
        if t > 0 {
            acc = acc.mul(&base).div(&Rat::from_i64(t as i64));
        }
        out.push(acc.clone());
    }
    out
}

/// Layers h^0..h^d of the operator at q = e^h, as differential operators in
/// theta with polynomial coefficients in lambda.
pub fn hbar_degenerate(op: &QDiffOperator<QPoly>, d: usize) -> Vec<WeylOperator> {
    let mut layers: Vec<WeylOperator> = vec![WeylOp::zero(); d + 1];
    for (j, aj) in op.a.iter().enumerate() {
        let deg = match aj.degree() {
            None => continue,
            Some(deg) => deg,
        };
        // coefficient expansion: lambda-polynomials per h-power
        let mut coef_layers: Vec<Poly<Rat>> = vec![Poly::zero(); d + 1];
        for i in 0..=deg {
            let c = aj.coeff(i);
            if c.is_zero() {
                continue;
            }
            let (p, lo) = c.to_poly_shifted();
            for (off, r) in p.c.iter().enumerate() {
                if Ring::is_zero(r) {
                    continue;
                }
                let e = lo + off as i64;
                let ex = exp_layers(e, op.step, d);
                for t in 0..=d {
                    let term = Poly::monomial(r.mul(&ex[t]), i);
                    coef_layers[t] = coef_layers[t].add(&term);
                }
            }
        }
        // shift expansion: theta^t j^t / t!
        let mut shift_layers: Vec<Rat> = Vec::with_capacity(d + 1);
        let mut acc = Rat::one();
        for t in 0..=d {
            if t > 0 {
                acc = acc.mul(&Rat::from_i64(j as i64)).div(&Rat::from_i64(t as i64));
            }
            shift_layers.push(acc.clone());
        }
        for t1 in 0..=d {
            if coef_layers[t1].is_zero() {
                continue;
            }
            let cl = RatFunc::from_poly(coef_layers[t1].clone());
            for t2 in 0..=(d - t1) {
                if Ring::is_zero(&shift_layers[t2]) {
                    continue;
                }
                let mut cvec = vec![RatFunc::constant(Rat::zero()); t2 + 1];
                cvec[t2] = cl.mul(&RatFunc::constant(shift_layers[t2].clone()));
                layers[t1 + t2] = layers[t1 + t2].add(&WeylOp::new(cvec));
            }
        }
    }
    layers
}
