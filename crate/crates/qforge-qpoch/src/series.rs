//! Series-level helpers shared by the Pochhammer expansions: powers of q as
//! jets at a root-of-unity center and the change of variable between the
//! logarithmic parameter and the jet variable.
//!
//! Conventions: the center is q = zeta_m, the jet variable is x = q - zeta_m,
//! and h = log q - log zeta_m, so q = zeta_m e^h and h = log(1 + x/zeta_m).

use qforge_rings::cyclo::cyclo_scale;
use qforge_rings::rat::{rat, rat_i};
use qforge_rings::{CycloNum, Rat, Ring, RootOfUnity, Tps};

/// zeta_m^c for rational c through the compatible-system convention
/// (denominator inverted mod m). Panics if the denominator shares a factor
/// with m; callers validate coprimality first.
pub fn zeta_pow_rat(m: u64, c: &Rat) -> CycloNum {
    RootOfUnity::zeta(m)
        .pow_rat(c)
        .unwrap_or_else(|| panic!("zeta_{}^{} needs gcd(den, {}) = 1", m, c, m))
        .to_cyclo_in(m)
}

/// q^c as a power series in x = q - zeta_m: zeta^c (1 + x/zeta)^c.
pub fn q_pow_series(m: u64, c: &Rat, len: usize) -> Tps<CycloNum> {
    let mut base = Tps::one(len);
    if len > 1 {
        base.c[1] = CycloNum::zeta_pow(m, -1);
    }
    base.pow_ratexp(c).scale(&zeta_pow_rat(m, c))
}

/// 1 - q^c as a power series in x = q - zeta_m.
pub fn one_minus_q_pow(m: u64, c: &Rat, len: usize) -> Tps<CycloNum> {
    Tps::one(len).sub(&q_pow_series(m, c, len))
}

/// h = log(1 + x/zeta_m) as a series in x.
pub fn hbar_in_x(m: u64, len: usize) -> Tps<CycloNum> {
    let mut c = vec![CycloNum::from_int(0); len];
    for (k, ck) in c.iter_mut().enumerate().skip(1) {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        *ck = cyclo_scale(&CycloNum::zeta_pow(m, -(k as i64)), &rat(sign, k as i64));
    }
    Tps::new(c)
}

/// The unit series L(x) = zeta_m h / x with L(0) = 1, so that
/// (-m h)^r = (-m/zeta_m)^r x^r L(x)^r.
pub fn log_unit(m: u64, len: usize) -> Tps<CycloNum> {
    let mut c = vec![CycloNum::from_int(0); len];
    for (j, cj) in c.iter_mut().enumerate() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        *cj = cyclo_scale(&CycloNum::zeta_pow(m, -(j as i64)), &rat(sign, j as i64 + 1));
    }
    Tps::new(c)
}

/// L(x)^r for rational r.
pub fn log_unit_pow(m: u64, r: &Rat, len: usize) -> Tps<CycloNum> {
    log_unit(m, len).pow_ratexp(r)
}

/// The exact scalar -m/zeta_m = -m zeta_m^{-1}.
pub fn neg_m_over_zeta(m: u64) -> CycloNum {
    cyclo_scale(&CycloNum::zeta_pow(m, -1), &rat_i(-(m as i64)))
}

/// Substitute h(x) into a series given in powers of h (constant term free).
pub fn into_x_variable(series_in_h: &Tps<CycloNum>, m: u64) -> Tps<CycloNum> {
    let len = series_in_h.len();
    let mut tail = series_in_h.clone();
    let c0 = tail.coeff(0);
    if len > 0 {
        tail.c[0] = CycloNum::from_int(0);
    }
    let mut out = tail.compose(&hbar_in_x(m, len));
    if len > 0 {
        out.c[0] = out.coeff(0).add(&c0);
    }
    out
}
