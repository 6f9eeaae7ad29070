//! Bernoulli numbers and polynomials, and polylogarithms at negative order.

use crate::cyclo::{cyclo_scale, CycloNum};
use crate::poly::Poly;
use crate::rat::{binomial, rat_i, Rat};
use crate::ring::{Field, Ring};

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

static BN_CACHE: OnceLock<Mutex<Vec<Rat>>> = OnceLock::new();

/// Bernoulli numbers B_0..B_n with B_1 = -1/2, via the defining recurrence
/// sum_{k<=n} C(n+1, k) B_k = 0.
pub fn bernoulli_numbers(n: usize) -> Vec<Rat> {
    let cache = BN_CACHE.get_or_init(|| Mutex::new(vec![Rat::one()]));
    let mut list = cache.lock().unwrap();
    while list.len() <= n {
        let k = list.len();
        let mut acc = Rat::zero();
        for (j, b) in list.iter().enumerate() {
            acc += Rat::from_integer(binomial(k as u64 + 1, j as u64)) * b;
        }
        let bk = -acc / rat_i(k as i64 + 1);
        list.push(bk);
    }
    list[..=n].to_vec()
}

pub fn bernoulli_number(n: usize) -> Rat {
    bernoulli_numbers(n)[n].clone()
}

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}.
pub fn bernoulli_poly(n: usize) -> Poly<Rat> {
    let bs = bernoulli_numbers(n);
    let mut c = vec![Rat::zero(); n + 1];
    for (k, b) in bs.iter().enumerate() {
        c[n - k] = Rat::from_integer(binomial(n as u64, k as u64)) * b;
    }
    Poly::new(c)
}

pub fn bernoulli_poly_eval(n: usize, x: &Rat) -> Rat {
    bernoulli_poly(n).eval(x)
}

static LI_CACHE: OnceLock<Mutex<HashMap<usize, (Poly<Rat>, usize)>>> = OnceLock::new();

/// The negative-order polylogarithm Li_{-n}(x) = sum_{k>=1} k^n x^k as a
/// rational function: returns (numerator, e) with Li_{-n}(x) = num/(1-x)^e.
pub fn neg_polylog_ratfn(n: usize) -> (Poly<Rat>, usize) {
    let cache = LI_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return v.clone();
    }
    // Li_0 = x/(1-x); apply x d/dx, keeping denominator (1-x)^e:
    // (num/(1-x)^e)' * x = (num' (1-x) + e num) x / (1-x)^{e+1}
    let mut num = Poly::x();
    let mut e = 1usize;
    for _ in 0..n {
        let one_minus_x = Poly::new(vec![Rat::one(), -Rat::one()]);
        let t = num.derivative().mul(&one_minus_x).add(&num.scale(&rat_i(e as i64)));
        num = t.mul(&Poly::x());
        e += 1;
    }
    cache.lock().unwrap().insert(n, (num.clone(), e));
    (num, e)
}

/// Li_{-n} evaluated at a cyclotomic point x != 1.
pub fn neg_polylog(n: usize, x: &CycloNum) -> CycloNum {
    let (num, e) = neg_polylog_ratfn(n);
    let one_minus = CycloNum::one().sub(x);
    assert!(!one_minus.is_zero(), "negative polylog pole at x = 1");
    let nv = num.eval_map(x, |r| CycloNum::from_rat(r.clone()));
    nv.mul(&one_minus.inv().pow(e as i64))
}

/// Li_{-n} at a rational point x != 1.
pub fn neg_polylog_rat(n: usize, x: &Rat) -> Rat {
    let (num, e) = neg_polylog_ratfn(n);
    let d = Rat::one() - x;
    assert!(!d.is_zero(), "negative polylog pole at x = 1");
    num.eval(x) / num_traits::pow::pow(d, e)
}

/// Scales a cyclotomic number by a rational, re-exported for series code.
pub fn scale(a: &CycloNum, r: &Rat) -> CycloNum {
    cyclo_scale(a, r)
}
