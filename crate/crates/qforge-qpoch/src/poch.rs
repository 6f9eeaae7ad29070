//! Finite and infinite q-Pochhammer expansions at root-of-unity centers,
//! and the q-Gamma / q-Beta jets assembled from them.
//!
//! Throughout, the center is q = zeta_m with jet variable x = q - zeta_m and
//! logarithmic variable h = log(1 + x/zeta_m). A finite symbol is an exact
//! product of jets. An infinite symbol is carried as a symbolic prefactor
//! together with the exponential of a Bernoulli/polylogarithm series; only
//! certified combinations of infinite symbols become honest jets.

use num_traits::ToPrimitive;
use qforge_rings::bernoulli::{bernoulli_poly, bernoulli_poly_eval, neg_polylog};
use qforge_rings::cyclo::cyclo_scale;
use qforge_rings::rat::{factorial, rat, rat_i};
use qforge_rings::{CycloNum, JetSeries, Poly, Rat, Ring, Tps};

use crate::bracket::{bracket, resid};
use crate::prefactor::{rising, PochPrefactor};
use crate::series::{
    into_x_variable, log_unit_pow, neg_m_over_zeta, one_minus_q_pow, zeta_pow_rat,
};
use crate::QpochError;

fn check_coprime(a: &Rat, m: u64) -> Result<(), QpochError> {
    let d = a.denom().to_u64().unwrap_or(0);
    if d == 0 || qforge_rings::nt::gcd_u64(d, m) != 1 {
        return Err(QpochError::NotCoprime { a: a.to_string(), m });
    }
    Ok(())
}

/// (q^a;q)_k as an exact jet at q = zeta_m, normalized so the leading
/// coefficient is the first nonzero one.
pub fn poch_finite_series(a: &Rat, k: u64, m: u64, len: usize) -> JetSeries {
    let work = len + k as usize + 1;
    let mut prod = Tps::one(work);
    for j in 0..k {
        let c = a + rat_i(j as i64);
        prod = prod.mul(&one_minus_q_pow(m, &c, work));
    }
    JetSeries::from_tps(m, Rat::zero(), &prod).normalize().truncate(len)
}

/// (q^a;q)_k evaluated exactly at q = zeta_m.
pub fn poch_finite_at_zeta(a: &Rat, k: u64, m: u64) -> CycloNum {
    let mut prod = CycloNum::from_int(1);
    for j in 0..k {
        let c = a + rat_i(j as i64);
        let f = CycloNum::from_int(1).sub(&zeta_pow_rat(m, &c));
        prod = prod.mul(&f);
    }
    prod
}

/// (q^a;q)_k as an exact series in h, with q = zeta_m e^h.
pub fn poch_finite_hbar(a: &Rat, k: u64, m: u64, len: usize) -> Tps<CycloNum> {
    let mut prod = Tps::one(len);
    for j in 0..k {
        let c = a + rat_i(j as i64);
        // 1 - zeta^c e^{c h}
        let z = zeta_pow_rat(m, &c);
        let mut f = vec![CycloNum::from_int(0); len];
        let mut cp = rat_i(1);
        for (n, fn_) in f.iter_mut().enumerate() {
            let coeff = &cp / Rat::from_integer(factorial(n as u64));
            *fn_ = cyclo_scale(&z, &coeff).neg();
            cp *= &c;
        }
        f[0] = f[0].add(&CycloNum::from_int(1));
        prod = prod.mul(&Tps::new(f));
    }
    prod
}

/// Closed-form expansion data for (q^a;q)_k at the center q = 1 with k left
/// symbolic: (q^a;q)_k = (-1)^k (a)_k h^k exp(S(k, h)) where the coefficients
/// of S are polynomials in k.
pub struct PochFiniteSym {
    pub a: Rat,
    /// Index = power of h; entry = coefficient as a polynomial in k.
    pub log_coeffs: Vec<Poly<Rat>>,
}

/// Build the symbolic-k expansion at m = 1. The h^{l-1} log coefficient is
/// (B_l(k+a) - B_l(a)) B_{l-1}(1) / ((l-1) l!).
pub fn poch_finite_sym(a: &Rat, len: usize) -> PochFiniteSym {
    let mut log_coeffs = vec![Poly::zero(); len];
    for l in 2..=len {
        let bl = bernoulli_poly(l);
        let shifted = bl.compose(&Poly::new(vec![a.clone(), rat_i(1)]));
        let diff = shifted.sub(&Poly::constant(bernoulli_poly_eval(l, a)));
        let scale = bernoulli_poly_eval(l - 1, &rat_i(1))
            / (rat_i((l - 1) as i64) * Rat::from_integer(factorial(l as u64)));
        log_coeffs[l - 1] = diff.scale(&scale);
    }
    PochFiniteSym { a: a.clone(), log_coeffs }
}

impl PochFiniteSym {
    /// Specialize k: returns (lead, unit) with
    /// (q^a;q)_k = lead * h^k * unit(h), lead = (-1)^k (a)_k.
    pub fn specialize(&self, k: u64, len: usize) -> (Rat, Tps<Rat>) {
        let sign = if k % 2 == 0 { rat_i(1) } else { rat_i(-1) };
        let lead = sign * rising(&self.a, k);
        let mut s = Tps::zero(len);
        let kk = rat_i(k as i64);
        for (i, p) in self.log_coeffs.iter().enumerate().take(len) {
            s.c[i] = p.eval(&kk);
        }
        (lead, s.exp())
    }

    /// Full h-series of the specialization, for comparison with the exact
    /// finite product.
    pub fn specialize_full(&self, k: u64, len: usize) -> Tps<Rat> {
        let (lead, unit) = self.specialize(k, len);
        unit.scale(&lead).shift_up(k as usize).truncate(len + k as usize)
    }
}

/// Logarithmic data of the infinite symbol (q^a;q)_infty at q = zeta_m:
/// a symbolic prefactor and the convergent part of the log as an h-series.
pub struct PochInfiniteLog {
    pub a: Rat,
    pub prefactor: PochPrefactor,
    /// Series in h with zero constant term: the Bernoulli and polylogarithm
    /// sums of the expansion.
    pub log_series: Tps<CycloNum>,
}

/// Expansion data of (q^a;q)_infty at q = zeta_m e^h:
///
///   sqrt(2 pi) (-m h)^{1/2-[a]} / Gamma([a])
///   * prod_{j != <-a>} (1 - zeta^{a+j})^{1/2-(a+j)/m}
///   * exp(pi^2/(6 m h) + S(h))
///
/// with S(h) = -sum_{l>=2} B_l([a]) B_{l-1}(1)/(l-1) (mh)^{l-1}/l!
///           + sum_{j != <-a>} sum_{l>=2} B_l((a+j)/m)/l! Li_{2-l}(zeta^{a+j}) (mh)^{l-1}.
pub fn poch_infinite_log(a: &Rat, m: u64, len: usize) -> PochInfiniteLog {
    let bra = bracket(a, m);
    let excl = resid(&-a.clone(), m);
    let mut pref = PochPrefactor::one(m);
    pref.sqrt_2pi_exp = rat_i(1);
    pref.divergent_exp = rat_i(1);
    pref.gamma_den.push(bra.clone());
    pref.neg_mh_exp = rat(1, 2) - &bra;
    for j in 0..m {
        if j == excl {
            continue;
        }
        let c = a + rat_i(j as i64);
        let base = CycloNum::from_int(1).sub(&zeta_pow_rat(m, &c));
        pref.push_factor(base, rat(1, 2) - &c / rat_i(m as i64));
    }
    let mut s = vec![CycloNum::from_int(0); len];
    let mut mpow = rat_i(1);
    for l in 2..=len {
        mpow *= rat_i(m as i64);
        // mpow = m^{l-1}
        let lf = Rat::from_integer(factorial(l as u64));
        let bern = -bernoulli_poly_eval(l, &bra) * bernoulli_poly_eval(l - 1, &rat_i(1))
            / (rat_i((l - 1) as i64) * &lf);
        let mut c = CycloNum::from_rat(bern);
        for j in 0..m {
            if j == excl {
                continue;
            }
            let arg = (a + rat_i(j as i64)) / rat_i(m as i64);
            let z = zeta_pow_rat(m, &(a + rat_i(j as i64)));
            let li = neg_polylog(l - 2, &z);
            c = c.add(&cyclo_scale(&li, &(bernoulli_poly_eval(l, &arg) / &lf)));
        }
        s[l - 1] = cyclo_scale(&c, &mpow);
    }
    PochInfiniteLog { a: a.clone(), prefactor: pref, log_series: Tps::new(s) }
}

/// (q^a;q)_k computed through the ratio of infinite symbols
/// (q^a;q)_infty / (q^{a+k};q)_infty. All prefactor content must cancel to a
/// scalar; the result is an exact jet, comparable with poch_finite_series.
pub fn poch_ratio_series(a: &Rat, k: u64, m: u64, len: usize) -> Result<JetSeries, QpochError> {
    check_coprime(a, m)?;
    let la = poch_infinite_log(a, m, len);
    let lak = poch_infinite_log(&(a + rat_i(k as i64)), m, len);
    let mut pref = la.prefactor;
    pref.mul_pow(&lak.prefactor, -1);
    let rho = pref.take_neg_mh();
    if !rho.is_integer() {
        return Err(QpochError::NotScalar(format!("fractional lead exponent {}", rho)));
    }
    let rz = rho.numer().to_i64().expect("exponent fits i64");
    let mut scalar = pref.certify_scalar()?;
    scalar = scalar.mul(&neg_m_over_zeta(m).pow(rz));
    let s_x = into_x_variable(&la.log_series.sub(&lak.log_series), m).exp();
    let unit = s_x.mul(&log_unit_pow(m, &rho, len)).scale(&scalar);
    Ok(JetSeries::from_tps(m, rho, &unit))
}

/// q-Gamma jet at a root of unity: the series part is exact; any fractional
/// prefactor content (branch data not living in Q[zeta_m]) stays in `pending`.
pub struct QGamma {
    /// Leading exponent of the series part: 1 - [a]_m.
    pub rho: Rat,
    pub series: JetSeries,
    pub pending: PochPrefactor,
}

impl QGamma {
    /// True when the value lies in the cyclotomic jet ring with no residual
    /// symbolic factor.
    pub fn is_certified(&self) -> bool {
        self.pending.is_scalar() && self.pending.scalar == CycloNum::from_int(1)
    }
}

/// Gamma([a]_m) (q^a;q)_infty / (q;q)_infty expanded at q = zeta_m.
/// The series lies in x^{1-[a]_m} Q[zeta_m][[x]] up to the pending factor;
/// in particular the exponent is congruent to -[a]_m mod 1 and no smaller
/// than -[a]_m, the containment the construction guarantees.
pub fn q_gamma_at_root(a: &Rat, m: u64, len: usize) -> Result<QGamma, QpochError> {
    check_coprime(a, m)?;
    let la = poch_infinite_log(a, m, len);
    let l1 = poch_infinite_log(&rat_i(1), m, len);
    let mut pref = la.prefactor;
    pref.mul_pow(&l1.prefactor, -1);
    pref.gamma_num.push(bracket(a, m));
    pref.gamma_reduce()?;
    pref.fold_integral();
    assert!(pref.sqrt_2pi_exp.is_zero(), "sqrt(2 pi) markers cancel in the ratio");
    assert!(pref.divergent_exp.is_zero(), "divergent markers cancel in the ratio");
    let rho = pref.take_neg_mh();
    debug_assert_eq!(rho, rat_i(1) - bracket(a, m));
    let nmz = neg_m_over_zeta(m);
    if rho.is_integer() {
        let rz = rho.numer().to_i64().expect("exponent fits i64");
        pref.scalar = pref.scalar.mul(&nmz.pow(rz));
    } else {
        pref.push_factor(nmz, rho.clone());
    }
    let scalar = std::mem::replace(&mut pref.scalar, CycloNum::from_int(1));
    let s_x = into_x_variable(&la.log_series.sub(&l1.log_series), m).exp();
    let unit = s_x.mul(&log_unit_pow(m, &rho, len)).scale(&scalar);
    let series = JetSeries::from_tps(m, rho.clone(), &unit);
    Ok(QGamma { rho, series, pending: pref })
}

/// q-Beta jet at a root of unity:
///
///   B_m(a,b) = Gamma([a]+[b]) / (Gamma([a]) Gamma([b]))
///              * (q^{a+b};q)_infty (q;q)_infty / ((q^a;q)_infty (q^b;q)_infty).
///
/// Every prefactor combines to an exact cyclotomic scalar (the combined
/// algebraic exponents are certified integral); the leading exponent
/// [a]+[b]-[a+b]-1 is 0 or -1.
pub fn q_beta_at_root(a: &Rat, b: &Rat, m: u64, len: usize) -> Result<JetSeries, QpochError> {
    check_coprime(a, m)?;
    check_coprime(b, m)?;
    let lab = poch_infinite_log(&(a + b), m, len);
    let l1 = poch_infinite_log(&rat_i(1), m, len);
    let la = poch_infinite_log(a, m, len);
    let lb = poch_infinite_log(b, m, len);
    let mut pref = lab.prefactor;
    pref.mul_pow(&l1.prefactor, 1);
    pref.mul_pow(&la.prefactor, -1);
    pref.mul_pow(&lb.prefactor, -1);
    pref.gamma_num.push(bracket(a, m) + bracket(b, m));
    pref.gamma_den.push(bracket(a, m));
    pref.gamma_den.push(bracket(b, m));
    let rho = pref.take_neg_mh();
    assert!(
        rho == Rat::zero() || rho == rat_i(-1),
        "q-Beta leading exponent is 0 or -1, got {}",
        rho
    );
    let rz = rho.numer().to_i64().expect("exponent fits i64");
    let mut scalar = pref.certify_scalar()?;
    scalar = scalar.mul(&neg_m_over_zeta(m).pow(rz));
    let s_h = lab
        .log_series
        .add(&l1.log_series)
        .sub(&la.log_series)
        .sub(&lb.log_series);
    let unit = into_x_variable(&s_h, m)
        .exp()
        .mul(&log_unit_pow(m, &rho, len))
        .scale(&scalar);
    Ok(JetSeries::from_tps(m, rho, &unit))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_series_basic() {
        // (q;q)_1 = 1 - q = -x at q = 1.
        let s = poch_finite_series(&rat_i(1), 1, 1, 5);
        assert_eq!(s.rho, rat_i(1));
        assert_eq!(s.coeffs[0], CycloNum::from_int(-1));
        for c in &s.coeffs[1..] {
            assert!(c.is_zero());
        }
    }

    #[test]
    fn finite_series_two_factors_generic_center() {
        // (q^{1/2};q)_2 at m = 3 equals (1-q^{1/2})(1-q^{3/2}) exactly; the
        // second factor vanishes at the center (3/2 maps to 0 mod 3), so the
        // jet starts at x^1.
        let s = poch_finite_series(&rat(1, 2), 2, 3, 6);
        assert_eq!(s.rho, rat_i(1));
        let direct = one_minus_q_pow(3, &rat(1, 2), 8)
            .mul(&one_minus_q_pow(3, &rat(3, 2), 8));
        let direct = JetSeries::from_tps(3, Rat::zero(), &direct).normalize().truncate(6);
        assert_eq!(s, direct);
    }

    #[test]
    fn finite_at_zeta_matches_series_lead() {
        // Exponents 1/2, 3/2 map to residues 3, 4 mod 5: no factor vanishes.
        let v = poch_finite_at_zeta(&rat(1, 2), 2, 5);
        let s = poch_finite_series(&rat(1, 2), 2, 5, 4);
        assert_eq!(s.rho, Rat::zero());
        assert_eq!(&v, &s.coeffs[0]);
        assert!(!v.is_zero());
        // With one more factor the exponent 5/2 maps to 0 mod 5 and the value
        // at the center is zero while the jet picks up a simple zero.
        assert!(poch_finite_at_zeta(&rat(1, 2), 3, 5).is_zero());
        assert_eq!(poch_finite_series(&rat(1, 2), 3, 5, 4).rho, rat_i(1));
    }

    #[test]
    fn finite_hbar_matches_x_series_lead() {
        // Leading h-coefficient of (q;q)_3 at m = 1 is -... compare orders.
        let h = poch_finite_hbar(&rat_i(1), 3, 1, 7);
        // (q;q)_3 vanishes to order 3 at q = 1: coefficient of h^3 is -6...
        // (1-e^h)(1-e^{2h})(1-e^{3h}) = (-h)(-2h)(-3h)(1+...) = -6h^3 + ...
        assert!(h.coeff(0).is_zero() && h.coeff(1).is_zero() && h.coeff(2).is_zero());
        assert_eq!(h.coeff(3).expect_rat(), rat_i(-6));
    }

    #[test]
    fn symbolic_k_matches_exact_products() {
        let a = rat(1, 3);
        let sym = poch_finite_sym(&a, 8);
        for k in 0..4u64 {
            let full = sym.specialize_full(k, 8);
            let exact = poch_finite_hbar(&a, k, 1, full.len()).map(|c| c.expect_rat());
            assert_eq!(full.truncate(8), exact.truncate(8), "k = {}", k);
        }
    }

    #[test]
    fn symbolic_log_coefficient_formula() {
        // The h^1 log coefficient is (B_2(k+a)-B_2(a)) B_1(1)/2! as a
        // polynomial in k: (k^2 + 2k(a - 1/2) ... ) * 1/4.
        let a = rat(1, 2);
        let sym = poch_finite_sym(&a, 4);
        let p = &sym.log_coeffs[1];
        let expect = bernoulli_poly(2)
            .compose(&Poly::new(vec![a.clone(), rat_i(1)]))
            .sub(&Poly::constant(bernoulli_poly_eval(2, &a)))
            .scale(&rat(1, 4));
        assert_eq!(p, &expect);
    }

    #[test]
    fn ratio_reproduces_finite_product() {
        for (a, m) in [(rat(1, 2), 1u64), (rat(1, 2), 3), (rat(1, 3), 2), (rat(2, 3), 5)] {
            for k in 0..3u64 {
                let fin = poch_finite_series(&a, k, m, 6).truncate(5);
                let ratio = poch_ratio_series(&a, k, m, 8).unwrap().normalize().truncate(5);
                assert_eq!(fin, ratio, "a = {}, k = {}, m = {}", a, k, m);
            }
        }
    }

    #[test]
    fn q_gamma_exponent_and_certification() {
        // m = 1, a = 1/2: exponent 1 - [1/2] = 1/2; congruent to -1/2 mod 1,
        // and no smaller than -[a], witnessing the containment claim.
        let g = q_gamma_at_root(&rat(1, 2), 1, 8).unwrap();
        assert_eq!(g.rho, rat(1, 2));
        assert!((&g.rho + rat(1, 2)).is_integer());
        assert!(g.rho >= rat(-1, 2));
        // Residual branch factor (-1)^{1/2} stays pending at m = 1.
        assert_eq!(g.pending.factors.len(), 1);
        assert_eq!(g.pending.factors[0].0, CycloNum::from_int(-1));
        assert_eq!(g.pending.factors[0].1, rat(1, 2));
        // m = 3, a = 1/2: [1/2]_3 = 1/2, same exponent; fractional cyclotomic
        // factors stay pending.
        let g3 = q_gamma_at_root(&rat(1, 2), 3, 8).unwrap();
        assert_eq!(g3.rho, rat(1, 2));
        assert!(!g3.is_certified());
    }

    #[test]
    fn q_gamma_leading_unit_normalized() {
        // At m = 1 the assembled series is exactly (-h)^{1-a} exp(S):
        // leading coefficient (-1)^{int part} ... for a = 1/2 the series part
        // x^{1/2} L(x)^{1/2} exp(S) has leading coefficient 1.
        let g = q_gamma_at_root(&rat(1, 2), 1, 8).unwrap();
        assert_eq!(g.series.coeffs[0], CycloNum::from_int(1));
    }

    #[test]
    fn q_beta_integer_parameters_rational_function() {
        // B_1(1,1) = (q^2;q)(q;q)/((q;q)(q;q)) = (q^2;q)/(q;q) = 1/(1-q) = -1/x.
        let b = q_beta_at_root(&rat_i(1), &rat_i(1), 1, 8).unwrap();
        assert_eq!(b.rho, rat_i(-1));
        assert_eq!(b.coeffs[0], CycloNum::from_int(-1));
        for c in &b.coeffs[1..] {
            assert!(c.is_zero(), "1/(1-q) has a bare simple pole at q=1");
        }
        // B_1(1,2) = Gamma(3)/Gamma(1)Gamma(2) * (q^3;q)(q;q)/((q;q)(q^2;q))
        //          = 2 (q^3;q)/(q^2;q) = 2/(1-q^2).
        let b12 = q_beta_at_root(&rat_i(1), &rat_i(2), 1, 6).unwrap();
        // 2/(1-q^2) at q = 1+x: 1-q^2 = -2x - x^2, so value = -1/x * 1/(1+x/2),
        // with coefficients -(-1/2)^k.
        assert_eq!(b12.rho, rat_i(-1));
        let mut c = rat_i(-1);
        for i in 0..6 {
            assert_eq!(b12.coeffs[i].expect_rat(), c, "coefficient {}", i);
            c = -c / rat_i(2);
        }
    }

    #[test]
    fn q_beta_integer_parameters_other_center() {
        // At m = 2 the brackets flatten: [1]_2 = [3]_2 = 1, so the Gamma
        // prefactor is Gamma(2)/Gamma(1)^2 = 1 and B_2(1,2) = 1/(1-q^2).
        // At q = -1 + x: 1 - q^2 = 2x - x^2, value = (1/(2x)) 1/(1-x/2).
        let b = q_beta_at_root(&rat_i(1), &rat_i(2), 2, 6).unwrap();
        assert_eq!(b.rho, rat_i(-1));
        let mut c = rat(1, 2);
        for i in 0..6 {
            assert_eq!(b.coeffs[i].expect_rat(), c, "coefficient {}", i);
            c /= rat_i(2);
        }
    }

    #[test]
    fn q_beta_leading_exponents() {
        let b = q_beta_at_root(&rat(1, 2), &rat(1, 2), 1, 6).unwrap();
        assert_eq!(b.rho, rat_i(-1), "[1/2]+[1/2]-[1]-1 = -1");
        // At m = 2: [1/3]_2 = 2/3 and [2/3]_2 = 1/3, so the exponent is
        // 2/3 + 2/3 - 1/3 - 1 = 0.
        let b2 = q_beta_at_root(&rat(1, 3), &rat(1, 3), 2, 6).unwrap();
        assert_eq!(b2.rho, Rat::zero());
    }

    #[test]
    fn q_beta_certificate_grid() {
        // Exponent-integrality certification passes across denominators and
        // centers, and the leading exponent stays in {0,-1}.
        for m in [1u64, 2, 3, 4, 7] {
            for (p, q_) in [(1i64, 2i64), (1, 3), (2, 3), (1, 5), (3, 5)] {
                if qforge_rings::nt::gcd_u64(q_ as u64, m) != 1 {
                    continue;
                }
                let a = rat(p, q_);
                let b = rat(1, q_);
                let jet = q_beta_at_root(&a, &b, m, 4).unwrap();
                assert!(jet.rho == Rat::zero() || jet.rho == rat_i(-1));
            }
        }
    }

    #[test]
    fn log_q_times_beta_regular() {
        // h * B_m has nonnegative exponent: h starts at x^1.
        let b = q_beta_at_root(&rat(1, 2), &rat(1, 2), 1, 6).unwrap();
        let h = crate::series::hbar_in_x(1, 7);
        let hb = JetSeries::from_tps(1, Rat::zero(), &h).normalize().mul(&b);
        assert!(hb.normalize().lead_exponent().unwrap() >= Rat::zero());
    }
}
