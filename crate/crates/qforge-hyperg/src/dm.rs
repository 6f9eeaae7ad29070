//! Jet-coefficient expansion operators at roots of unity.
//!
//! Acting on a classical coefficient series sum C_n lambda^n, congruence
//! class i of the operator contributes lambda^{i/m} blocks[i][t] (q-zeta)^t
//! with theta evaluated at the classical index n, and the image matches the
//! q-deformed series on the lambda^{1/m} grid. At the unit center the blocks
//! come from a closed Bernoulli-sum form of the finite Pochhammer unit; at
//! other centers they are reconstructed by rational interpolation of exact
//! jet samples against the classical coefficients.

use num_bigint::BigInt;
use qforge_opalg::classical::pf_operator;
use qforge_opalg::weyl::WeylOp;
use qforge_opalg::WeylOperator;
use qforge_qpoch::poch::poch_finite_sym;
use qforge_qpoch::resid;
use qforge_rings::cyclo::cyclo_scale;
use qforge_rings::linalg::Matrix;
use qforge_rings::nt::gcd_u64;
use qforge_rings::rat::{rat, rat_i};
use qforge_rings::ratfunc::RatFunc;
use qforge_rings::{CycloNum, Poly, Rat, Ring, Tps};

use crate::data::{DeformStyle, HGData};
use crate::series::rising;
use crate::HypergError;

/// Expansion operator at q = zeta_m with jets through (q - zeta_m)^order.
#[derive(Clone, Debug)]
pub struct DmOperator {
    pub m: u64,
    pub order: usize,
    /// blocks[i][t] is a rational function of theta over Q(zeta_m), paired
    /// with the monomial lambda^{i/m} (q - zeta_m)^t.
    pub blocks: Vec<Vec<RatFunc<CycloNum>>>,
    /// Congruence-class shifts used in the assembly.
    pub shifts: Vec<u64>,
}

/// h-power -> polynomial in the series index k, for the log of the
/// coefficient unit ratio at the unit center.
fn log_ratio_polys(data: &HGData, len: usize) -> Vec<Poly<Rat>> {
    let mut l = vec![Poly::zero(); len];
    match (&data.style, &data.factorial) {
        (DeformStyle::Factorial, Some((a, b))) => {
            let sym = poch_finite_sym(&rat_i(1), len);
            for (list, up) in [(a, true), (b, false)] {
                for &e in list {
                    let sub = Poly::new(vec![Rat::zero(), rat_i(e as i64)]);
                    for t in 1..len {
                        let c = sym.log_coeffs[t].compose(&sub);
                        l[t] = if up { l[t].add(&c) } else { l[t].sub(&c) };
                    }
                }
            }
        }
        _ => {
            for (list, up) in [(&data.alpha, true), (&data.beta, false)] {
                for a in list {
                    let sym = poch_finite_sym(a, len);
                    for t in 1..len {
                        l[t] = if up {
                            l[t].add(&sym.log_coeffs[t])
                        } else {
                            l[t].sub(&sym.log_coeffs[t])
                        };
                    }
                }
            }
        }
    }
    l
}

/// exp of a series of k-polynomials with zero constant term.
fn exp_polys(l: &[Poly<Rat>]) -> Vec<Poly<Rat>> {
    let len = l.len();
    let mut u = vec![Poly::zero(); len];
    u[0] = Poly::one();
    let mut term = u.clone();
    for r in 1..len {
        let mut next = vec![Poly::zero(); len];
        for i in 0..len {
            if term[i].is_zero() {
                continue;
            }
            for (j, lj) in l.iter().enumerate().take(len - i).skip(1) {
                if !lj.is_zero() {
                    next[i + j] = next[i + j].add(&term[i].mul(lj));
                }
            }
        }
        let inv_r = rat(1, r as i64);
        for p in &mut next {
            *p = p.scale(&inv_r);
        }
        term = next;
        if term.iter().all(|p| p.is_zero()) {
            break;
        }
        for i in 0..len {
            u[i] = u[i].add(&term[i]);
        }
    }
    u
}

/// Rows t = coefficients of (log(1+x))^t through x^{len-1}.
fn log1p_powers(len: usize) -> Vec<Vec<Rat>> {
    let mut l = Tps::zero(len);
    for s in 1..len {
        l.c[s] = rat(if s % 2 == 1 { 1 } else { -1 }, s as i64);
    }
    let mut out = Vec::with_capacity(len);
    let mut cur = Tps::one(len);
    out.push(cur.c.clone());
    for _ in 1..len {
        cur = cur.mul(&l);
        out.push(cur.c.clone());
    }
    out
}

/// Unit-center blocks as polynomials in theta, index = power of (q-1).
pub(crate) fn unit_blocks(data: &HGData, k_order: usize) -> Vec<Poly<Rat>> {
    let len = k_order + 1;
    let u = exp_polys(&log_ratio_polys(data, len));
    let lp = log1p_powers(len);
    (0..len)
        .map(|s| {
            let mut acc = Poly::zero();
            for t in 0..=s {
                if !lp[t][s].is_zero() {
                    acc = acc.add(&u[t].scale(&lp[t][s]));
                }
            }
            acc
        })
        .collect()
}

/// Binomial coefficient (c choose t) for rational c.
fn binom_rat(c: &Rat, t: usize) -> Rat {
    let mut acc = rat_i(1);
    for i in 0..t {
        acc *= (c - rat_i(i as i64)) / rat_i((i + 1) as i64);
    }
    acc
}

/// 1 - q^c at q = zeta_m + x as (valuation, unit jet in x).
fn one_minus_qpow(m: u64, c: &Rat, len: usize) -> (i64, Tps<CycloNum>) {
    let vanishes = resid(c, m) == 0;
    let take = if vanishes { len + 1 } else { len };
    let zinv = CycloNum::zeta_pow(m, -1);
    let mut coeffs = Vec::with_capacity(take);
    let mut zp = CycloNum::zeta_pow(m, resid(c, m) as i64);
    for t in 0..take {
        coeffs.push(cyclo_scale(&zp, &binom_rat(c, t)).neg());
        zp = zp.mul(&zinv);
    }
    coeffs[0] = coeffs[0].add(&CycloNum::from_int(1));
    if vanishes {
        debug_assert!(Ring::is_zero(&coeffs[0]));
        (1, Tps::new(coeffs[1..].to_vec()))
    } else {
        (0, Tps::new(coeffs))
    }
}

/// Exponents c of the q-Pochhammer factors of the k-th q-coefficient, split
/// into numerator and denominator lists.
fn factor_exponents(data: &HGData, k: u64) -> (Vec<Rat>, Vec<Rat>) {
    let mut num = Vec::new();
    let mut den = Vec::new();
    match (&data.style, &data.factorial) {
        (DeformStyle::Factorial, Some((a, b))) => {
            for &e in a {
                for j in 1..=e * k {
                    num.push(rat_i(j as i64));
                }
            }
            for &e in b {
                for j in 1..=e * k {
                    den.push(rat_i(j as i64));
                }
            }
        }
        _ => {
            for a in &data.alpha {
                for i in 0..k {
                    num.push(a + rat_i(i as i64));
                }
            }
            for b in &data.beta {
                for i in 0..k {
                    den.push(b + rat_i(i as i64));
                }
            }
        }
    }
    (num, den)
}

/// k-th q-coefficient as (valuation, unit) at q = zeta_m + x; vanishing
/// factors are counted separately so unit products stay short.
/// Jet of the k-th q-coefficient at q = zeta_m + x: its x-valuation and the
/// unit part, with `len` coefficients of the latter.
pub fn q_coeff_jet(data: &HGData, k: u64, m: u64, len: usize) -> (i64, Tps<CycloNum>) {
    let (nums, dens) = factor_exponents(data, k);
    let v_num = nums.iter().filter(|c| resid(c, m) == 0).count() as i64;
    let v_den = dens.iter().filter(|c| resid(c, m) == 0).count() as i64;
    let val = v_num - v_den;
    let wlen = len + 1 + (-val).max(0) as usize;
    let mut unit = Tps::one(wlen);
    for c in &nums {
        let (_, u) = one_minus_qpow(m, c, wlen);
        unit = unit.mul(&u);
    }
    let mut dunit = Tps::one(wlen);
    for c in &dens {
        let (_, u) = one_minus_qpow(m, c, wlen);
        dunit = dunit.mul(&u);
    }
    (val, unit.mul(&dunit.inv()))
}

/// Classical coefficients of the family taken at the bracket images of its
/// parameters, indices 0..count.
pub(crate) fn classical_bracketed(data: &HGData, m: u64, count: usize) -> Vec<Rat> {
    match &data.factorial {
        Some((a, b)) => (0..count as u64)
            .map(|n| {
                let mut acc = rat_i(1);
                for &e in a {
                    acc *= Rat::from_integer(qforge_rings::rat::factorial(e * n));
                }
                for &e in b {
                    acc /= Rat::from_integer(qforge_rings::rat::factorial(e * n));
                }
                acc
            })
            .collect(),
        None => {
            let (ba, bb) = data.bracketed(m);
            (0..count)
                .map(|n| {
                    let mut acc = rat_i(1);
                    for a in &ba {
                        acc *= rising(a, n);
                    }
                    for b in &bb {
                        acc /= rising(b, n);
                    }
                    acc * pow_rat(&data.scale, n)
                })
                .collect()
        }
    }
}

fn pow_rat(r: &Rat, e: usize) -> Rat {
    let mut acc = rat_i(1);
    for _ in 0..e {
        acc *= r;
    }
    acc
}

/// Least-degree rational function through all sample points; denominators
/// are monic and escalate only after every numerator degree fails.
fn try_fit(points: &[(i64, CycloNum)], dp: usize, dq: usize) -> Option<RatFunc<CycloNum>> {
    let rows: Vec<Vec<CycloNum>> = points
        .iter()
        .map(|(x, v)| {
            let xc = CycloNum::from_int(*x);
            let mut row = Vec::with_capacity(dp + 1 + dq);
            let mut p = CycloNum::from_int(1);
            for _ in 0..=dp {
                row.push(p.clone());
                p = p.mul(&xc);
            }
            let mut qv = v.neg();
            for _ in 0..dq {
                row.push(qv.clone());
                qv = qv.mul(&xc);
            }
            row
        })
        .collect();
    let rhs: Vec<CycloNum> = points
        .iter()
        .map(|(x, v)| v.mul(&CycloNum::from_int(*x).pow(dq as i64)))
        .collect();
    let sol = Matrix::from_rows(rows).solve(&rhs)?;
    let num = Poly::new(sol[..=dp].to_vec());
    let mut denc = sol[dp + 1..].to_vec();
    denc.push(CycloNum::from_int(1));
    let den = Poly::new(denc);
    // A fit whose denominator vanishes on a sample is spurious.
    for (x, _) in points {
        if Ring::is_zero(&den.eval(&CycloNum::from_int(*x))) {
            return None;
        }
    }
    Some(RatFunc::new(num, den))
}

fn reconstruct(points: &[(i64, CycloNum)], max_p: usize, max_q: usize) -> Option<RatFunc<CycloNum>> {
    for dq in 0..=max_q {
        for dp in 0..=max_p {
            if dp + 1 + dq > points.len() {
                break;
            }
            if let Some(f) = try_fit(points, dp, dq) {
                return Some(f);
            }
        }
    }
    None
}

fn root_center_blocks(data: &HGData, m: u64, k_order: usize) -> Result<DmOperator, HypergError> {
    let max_q = 4;
    let samples = 2 * k_order + 6 + max_q + 8;
    let classical = classical_bracketed(data, m, samples);
    let mut blocks = Vec::with_capacity(m as usize);
    for i in 0..m {
        let mut pts: Vec<Vec<(i64, CycloNum)>> = vec![Vec::new(); k_order + 1];
        for (n, cn) in classical.iter().enumerate() {
            let k = m * n as u64 + i;
            let (val, unit) = q_coeff_jet(data, k, m, k_order + 1);
            let cinv = cn.recip();
            for (t, row) in pts.iter_mut().enumerate() {
                let idx = t as i64 - val;
                let c = if idx < 0 { CycloNum::from_int(0) } else { unit.coeff(idx as usize) };
                row.push((n as i64, cyclo_scale(&c, &cinv)));
            }
        }
        let mut row = Vec::with_capacity(k_order + 1);
        for (t, p) in pts.iter().enumerate() {
            let f = reconstruct(p, 2 * t + 6, max_q)
                .ok_or(HypergError::Interpolation { class: i, order: t })?;
            row.push(f);
        }
        blocks.push(row);
    }
    Ok(DmOperator { m, order: k_order, blocks, shifts: (0..m).collect() })
}

pub fn build_dm(data: &HGData, m: u64, k_order: usize) -> Result<DmOperator, HypergError> {
    let nden = data.denominator();
    if m == 0 || gcd_u64(m, nden) != 1 {
        return Err(HypergError::NotCoprime { m, n: nden });
    }
    if m == 1 {
        let blocks = unit_blocks(data, k_order)
            .into_iter()
            .map(|p| {
                RatFunc::from_poly(Poly::new(
                    p.c.iter().map(|r| CycloNum::from_rat(r.clone())).collect(),
                ))
            })
            .collect();
        Ok(DmOperator { m: 1, order: k_order, blocks: vec![blocks], shifts: vec![0] })
    } else {
        root_center_blocks(data, m, k_order)
    }
}

impl DmOperator {
    /// Class block as a rational-coefficient polynomial in theta.
    pub fn block_poly(&self, class: usize, t: usize) -> Result<Poly<Rat>, HypergError> {
        let p = self.blocks[class][t].as_poly().ok_or(HypergError::NonPolynomialBlock)?;
        let mut c = Vec::with_capacity(p.c.len());
        for e in &p.c {
            c.push(e.as_rat().ok_or(HypergError::NonPolynomialBlock)?);
        }
        Ok(Poly::new(c))
    }

    /// Image of a classical coefficient list on the lambda^{1/m} grid:
    /// out[k][t] is the (q - zeta_m)^t coefficient of the lambda^{k/m} term.
    /// Image of the bracketed classical coefficients, indexed as
    /// `out[k][t]` for the x^t part of the k-th q-coefficient.
    pub fn apply_bracketed(&self, data: &HGData, k_max: usize) -> Vec<Vec<CycloNum>> {
        let classical = classical_bracketed(data, self.m, k_max / self.m as usize + 1);
        self.apply(&classical, k_max)
    }

    pub fn apply(&self, classical: &[Rat], k_max: usize) -> Vec<Vec<CycloNum>> {
        let m = self.m as usize;
        (0..=k_max)
            .map(|k| {
                let (n, i) = (k / m, k % m);
                assert!(n < classical.len(), "classical input too short");
                let x = CycloNum::from_int(n as i64);
                (0..=self.order)
                    .map(|t| cyclo_scale(&self.blocks[i][t].eval(&x), &classical[n]))
                    .collect()
            })
            .collect()
    }
}

/// Right-division remainders of the unit-center blocks by the family's
/// hypergeometric differential operator. The remainder operator has the same
/// image on classical solutions with theta-degree below the divisor's.
pub fn dm_remainder(dm: &DmOperator, data: &HGData) -> Result<Vec<WeylOperator>, HypergError> {
    if dm.m != 1 {
        return Err(HypergError::RemainderAtRoot(dm.m));
    }
    let pf = pf_operator(&data.alpha, &data.beta, &data.scale)?;
    let mut out = Vec::with_capacity(dm.order + 1);
    for t in 0..=dm.order {
        let p = dm.block_poly(0, t)?;
        let w = WeylOp::from_polys(p.c.iter().map(|c| Poly::constant(c.clone())).collect());
        let (_, r) = w.right_divide(&pf)?;
        out.push(r);
    }
    Ok(out)
}

/// p-adic valuation of a nonzero rational.
pub(crate) fn val_p(r: &Rat, p: u64) -> i64 {
    let pb = BigInt::from(p);
    let zero = BigInt::from(0);
    let mut v = 0i64;
    let mut n = r.numer().clone();
    while n != zero && &n % &pb == zero {
        n /= &pb;
        v += 1;
    }
    let mut d = r.denom().clone();
    while d != zero && &d % &pb == zero {
        d /= &pb;
        v -= 1;
    }
    v
}

/// Low-order lambda-series of a rational function regular at 0.
fn ratfunc_series(f: &RatFunc<Rat>, t: usize) -> Vec<Rat> {
    let d0 = f.den.coeff(0);
    assert!(!Ring::is_zero(&d0), "pole at lambda = 0");
    let d0i = rat_i(1) / d0;
    let mut out = Vec::with_capacity(t + 1);
    for k in 0..=t {
        let mut acc = f.num.coeff(k);
        for j in 1..=k {
            acc -= f.den.coeff(j) * &out[k - j];
        }
        out.push(acc * &d0i);
    }
    out
}

/// Minimum p-adic valuation across the low-order lambda-series coefficients
/// of each remainder block; entry t reports the (q - zeta)^t block, with 0
/// standing in for a block that vanishes to the inspected order.
pub fn remainder_valuations(rem: &[WeylOperator], p: u64, lam_order: usize) -> Vec<i64> {
    rem.iter()
        .map(|w| {
            let mut min: Option<i64> = None;
            let deg = match w.deg() {
                None => return 0,
                Some(d) => d,
            };
            for s in 0..=deg {
                let c = w.coeff(s);
                if Ring::is_zero(&c) {
                    continue;
                }
                for v in ratfunc_series(&c, lam_order) {
                    if !Ring::is_zero(&v) {
                        let vp = val_p(&v, p);
                        min = Some(min.map_or(vp, |m| m.min(vp)));
                    }
                }
            }
            min.unwrap_or(0)
        })
        .collect()
}
