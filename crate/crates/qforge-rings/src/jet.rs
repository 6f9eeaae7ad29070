//! Truncated series: generic power series jets, cyclotomic-centered jets
//! with fractional leading exponent, and p-adic recentered jets.

use crate::cpadic::CycloPadic;
use crate::cyclo::CycloNum;
use crate::rat::{binom_rat, is_integer, rat, rat_i, rat_str, Rat};
use crate::ring::{Field, Ring};
use num_traits::{Signed, ToPrimitive};

/// Truncated power series sum c[i] x^i known modulo x^{c.len()}.
/// The truncation length is part of the value.
#[derive(Clone, PartialEq, Debug)]
pub struct Tps<T: Ring> {
    pub c: Vec<T>,
}

impl<T: Ring> Tps<T> {
    pub fn new(c: Vec<T>) -> Self {
        Tps { c }
    }

    pub fn zero(len: usize) -> Self {
        Tps { c: vec![T::zero(); len] }
    }

    pub fn one(len: usize) -> Self {
        let mut c = vec![T::zero(); len];
        if len > 0 {
            c[0] = T::one();
        }
        Tps { c }
    }

    pub fn constant(t: T, len: usize) -> Self {
        let mut c = vec![T::zero(); len];
        if len > 0 {
            c[0] = t;
        }
        Tps { c }
    }

    pub fn x(len: usize) -> Self {
        let mut c = vec![T::zero(); len];
        if len > 1 {
            c[1] = T::one();
        }
        Tps { c }
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeff(&self, i: usize) -> T {
        self.c.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn order(&self) -> Option<usize> {
        self.c.iter().position(|t| !t.is_zero())
    }

    pub fn truncate(&self, len: usize) -> Self {
        let mut c = self.c.clone();
        c.truncate(len);
        Tps { c }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.len().min(rhs.len());
        Tps { c: (0..n).map(|i| self.c[i].add(&rhs.c[i])).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.len().min(rhs.len());
        Tps { c: (0..n).map(|i| self.c[i].sub(&rhs.c[i])).collect() }
    }

    pub fn neg(&self) -> Self {
        Tps { c: self.c.iter().map(|t| t.neg()).collect() }
    }

    pub fn scale(&self, t: &T) -> Self {
        Tps { c: self.c.iter().map(|a| a.mul(t)).collect() }
    }

    /// Product truncated to min(la + v(b), lb + v(a)); an identically zero
    /// factor of length l contributes order l.
    pub fn mul(&self, rhs: &Self) -> Self {
        let va = self.order().unwrap_or(self.len());
        let vb = rhs.order().unwrap_or(rhs.len());
        let n = (self.len() + vb).min(rhs.len() + va);
        let mut c = vec![T::zero(); n];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() || i >= n {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Tps { c }
    }

    /// Multiplies by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut c = vec![T::zero(); k];
        c.extend(self.c.iter().cloned());
        Tps { c }
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Tps<U> {
        Tps { c: self.c.iter().map(f).collect() }
    }

    /// Substitutes x -> g(x) where g has zero constant term.
    pub fn compose(&self, g: &Self) -> Self {
        assert!(g.coeff(0).is_zero(), "composition needs vanishing constant term");
        let n = self.len().min(g.len());
        let mut acc = Tps::zero(n);
        for a in self.c.iter().rev() {
            acc = acc.mul(g).truncate(n).add(&Tps::constant(a.clone(), n));
        }
        acc.truncate(n)
    }
}

impl<T: Field> Tps<T> {
    /// Inverse of a series with invertible constant term.
    pub fn inv(&self) -> Self {
        assert!(!self.is_empty() && !self.c[0].is_zero(), "series inverse needs a unit constant term");
        let n = self.len();
        let a0i = self.c[0].inv();
        let mut b = vec![T::zero(); n];
        b[0] = a0i.clone();
        for k in 1..n {
            let mut acc = T::zero();
            for j in 1..=k {
                if !self.coeff(j).is_zero() {
                    acc = acc.add(&self.c[j].mul(&b[k - j]));
                }
            }
            b[k] = acc.mul(&a0i).neg();
        }
        Tps { c: b }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Self {
        assert!(self.is_empty() || self.c[0].is_zero(), "exp needs vanishing constant term");
        let n = self.len();
        let mut e = vec![T::zero(); n];
        if n == 0 {
            return Tps { c: e };
        }
        e[0] = T::one();
        for k in 1..n {
            // k e_k = sum_{j=1..k} j f_j e_{k-j}
            let mut acc = T::zero();
            for j in 1..=k {
                let fj = self.coeff(j);
                if !fj.is_zero() {
                    acc = acc.add(&fj.mul(&T::from_i64(j as i64)).mul(&e[k - j]));
                }
            }
            e[k] = acc.mul(&T::from_i64(k as i64).inv());
        }
        Tps { c: e }
    }

    /// log of a series with constant term 1.
    pub fn log(&self) -> Self {
        assert!(!self.is_empty() && self.c[0] == T::one(), "log needs constant term 1");
        let n = self.len();
        let mut l = vec![T::zero(); n];
        for k in 1..n {
            // k f_k = sum_{j=1..k} j l_j f_{k-j}
            let mut acc = self.coeff(k).mul(&T::from_i64(k as i64));
            for j in 1..k {
                if !l[j].is_zero() {
                    let t = l[j].mul(&T::from_i64(j as i64)).mul(&self.coeff(k - j));
                    acc = acc.sub(&t);
                }
            }
            l[k] = acc.mul(&T::from_i64(k as i64).inv());
        }
        Tps { c: l }
    }

    /// (1 + g)^e for rational e, where self has constant term 1.
    pub fn pow_ratexp(&self, e: &Rat) -> Self {
        assert!(!self.is_empty() && self.c[0] == T::one(), "rational power needs constant term 1");
        let er = scalar_from_rat::<T>(e);
        self.log().scale(&er).exp()
    }

    pub fn derivative(&self) -> Self {
        if self.len() <= 1 {
            return Tps::zero(self.len().saturating_sub(1));
        }
        Tps { c: (1..self.len()).map(|i| self.c[i].mul(&T::from_i64(i as i64))).collect() }
    }

    /// Antiderivative with zero constant term; output has length len+1.
    pub fn integrate(&self) -> Self {
        let mut c = vec![T::zero()];
        for (i, a) in self.c.iter().enumerate() {
            c.push(a.mul(&T::from_i64(i as i64 + 1).inv()));
        }
        Tps { c }
    }
}

/// Embeds a rational into any field scalar through integer numerator and
/// denominator.
pub fn scalar_from_rat<T: Field>(r: &Rat) -> T {
    let n = bigint_to_scalar::<T>(r.numer());
    let d = bigint_to_scalar::<T>(r.denom());
    n.mul(&d.inv())
}

fn bigint_to_scalar<T: Ring>(n: &num_bigint::BigInt) -> T {
    // horner over the decimal digits keeps this O(len) with small from_i64 calls
    let neg = n.is_negative();
    let digits = n.abs().to_string();
    let ten = T::from_i64(10);
    let mut acc = T::zero();
    for ch in digits.chars() {
        let d = ch.to_digit(10).unwrap() as i64;
        acc = acc.mul(&ten).add(&T::from_i64(d));
    }
    if neg {
        acc.neg()
    } else {
        acc
    }
}

/// Series jet at a root of unity center zeta_m:
/// sum coeffs[i] (q - zeta_m)^{rho + i}, known modulo (q - zeta_m)^{rho + len}.
/// The leading exponent rho may be rational; two jets can be added only when
/// their exponents differ by an integer.
#[derive(Clone, PartialEq, Debug)]
pub struct JetSeries {
    pub m: u64,
    pub rho: Rat,
    pub coeffs: Vec<CycloNum>,
}

impl JetSeries {
    pub fn new(m: u64, rho: Rat, coeffs: Vec<CycloNum>) -> Self {
        JetSeries { m, rho, coeffs }
    }

    pub fn zero(m: u64, len: usize) -> Self {
        JetSeries { m, rho: Rat::zero(), coeffs: vec![CycloNum::zero(); len] }
    }

    pub fn constant(m: u64, c: CycloNum, len: usize) -> Self {
        let mut coeffs = vec![CycloNum::zero(); len];
        if len > 0 {
            coeffs[0] = c;
        }
        JetSeries { m, rho: Rat::zero(), coeffs }
    }

    pub fn from_tps(m: u64, rho: Rat, t: &Tps<CycloNum>) -> Self {
        JetSeries { m, rho, coeffs: t.c.clone() }
    }

    pub fn as_tps(&self) -> Tps<CycloNum> {
        Tps { c: self.coeffs.clone() }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent bound: the series is known modulo (q-zeta)^{this}.
    pub fn known_mod(&self) -> Rat {
        &self.rho + rat_i(self.len() as i64)
    }

    /// Actual leading exponent (first nonzero coefficient), if any.
    pub fn lead_exponent(&self) -> Option<Rat> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| &self.rho + rat_i(i as i64))
    }

    pub fn lead_coeff(&self) -> Option<&CycloNum> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Drops leading zero coefficients, bumping rho accordingly.
    pub fn normalize(&self) -> Self {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            None => self.clone(),
            Some(0) => self.clone(),
            Some(k) => JetSeries {
                m: self.m,
                rho: &self.rho + rat_i(k as i64),
                coeffs: self.coeffs[k..].to_vec(),
            },
        }
    }

    pub fn coeff_at(&self, e: &Rat) -> CycloNum {
        let d = e - &self.rho;
        if !is_integer(&d) || d.is_negative() {
            return CycloNum::zero();
        }
        let i = d.to_integer().to_usize().unwrap_or(usize::MAX);
        self.coeffs.get(i).cloned().unwrap_or_else(CycloNum::zero)
    }

    fn aligned(&self, rhs: &Self) -> (Rat, Tps<CycloNum>, Tps<CycloNum>) {
        let d = &self.rho - &rhs.rho;
        assert!(is_integer(&d), "jet addition needs integer exponent gap, got {} vs {}", rat_str(&self.rho), rat_str(&rhs.rho));
        let d: i64 = d.to_integer().to_i64().expect("exponent gap overflow");
        let rho = if d >= 0 { rhs.rho.clone() } else { self.rho.clone() };
        let (sa, sb) = if d >= 0 { (d as usize, 0) } else { (0, (-d) as usize) };
        let a = self.as_tps().shift_up(sa);
        let b = rhs.as_tps().shift_up(sb);
        (rho, a, b)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.m, rhs.m, "jet centers differ");
        let (rho, a, b) = self.aligned(rhs);
        JetSeries { m: self.m, rho, coeffs: a.add(&b).c }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        JetSeries { m: self.m, rho: self.rho.clone(), coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.m, rhs.m, "jet centers differ");
        let t = self.as_tps().mul(&rhs.as_tps());
        JetSeries { m: self.m, rho: &self.rho + &rhs.rho, coeffs: t.c }
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        JetSeries { m: self.m, rho: self.rho.clone(), coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        self.scale(&CycloNum::from_rat(r.clone()))
    }

    /// Multiplies by (q - zeta)^e for rational e.
    pub fn shift_exponent(&self, e: &Rat) -> Self {
        JetSeries { m: self.m, rho: &self.rho + e, coeffs: self.coeffs.clone() }
    }

    pub fn inv(&self) -> Self {
        let n = self.normalize();
        let t = n.as_tps();
        assert!(!t.is_empty() && !t.c[0].is_zero(), "inverse of jet with no visible leading term");
        JetSeries { m: self.m, rho: -&n.rho, coeffs: t.inv().c }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    pub fn truncate(&self, len: usize) -> Self {
        JetSeries { m: self.m, rho: self.rho.clone(), coeffs: self.coeffs.iter().take(len).cloned().collect() }
    }

    /// Raises to a rational power. The visible leading coefficient must be 1
    /// after normalization; the leading exponent scales accordingly.
    pub fn pow_ratexp(&self, e: &Rat) -> Self {
        let n = self.normalize();
        assert!(
            n.lead_coeff().map_or(false, |c| *c == CycloNum::one()),
            "rational power needs leading coefficient 1"
        );
        let unit = n.as_tps().pow_ratexp(e);
        JetSeries { m: self.m, rho: &n.rho * e, coeffs: unit.c }
    }

    pub fn map_coeffs(&self, f: impl Fn(&CycloNum) -> CycloNum) -> Self {
        JetSeries { m: self.m, rho: self.rho.clone(), coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl serde::Serialize for JetSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("JetSeries", 3)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("rho", &rat_str(&self.rho))?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for JetSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            m: u64,
            rho: String,
            coeffs: Vec<CycloNum>,
        }
        let raw = Raw::deserialize(d)?;
        let rho = crate::rat::rat_parse(&raw.rho).map_err(serde::de::Error::custom)?;
        Ok(JetSeries { m: raw.m, rho, coeffs: raw.coeffs })
    }
}

/// Jet at the center zeta_p with p-adic cyclotomic coefficients:
/// sum coeffs[i] (q - zeta_p)^{lead + i}.
#[derive(Clone, Debug)]
pub struct PadicJet {
    pub p: u64,
    pub lead: i64,
    pub coeffs: Vec<CycloPadic>,
}

impl PadicJet {
    pub fn coeff(&self, e: i64) -> Option<&CycloPadic> {
        let i = e - self.lead;
        if i < 0 {
            None
        } else {
            self.coeffs.get(i as usize)
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        let lead = self.lead.min(rhs.lead);
        let hi = (self.lead + self.coeffs.len() as i64).min(rhs.lead + rhs.coeffs.len() as i64);
        let prec = self
            .coeffs
            .iter()
            .chain(&rhs.coeffs)
            .map(|c| c.min_coord_precision())
            .min()
            .unwrap_or(1);
        let mut coeffs = Vec::new();
        for e in lead..hi {
            let a = self.coeff(e).cloned().unwrap_or_else(|| CycloPadic::zero(self.p, prec));
            let b = rhs.coeff(e).cloned().unwrap_or_else(|| CycloPadic::zero(self.p, prec));
            coeffs.push(a.sub(&b));
        }
        PadicJet { p: self.p, lead, coeffs }
    }
}

/// Re-expands a jet centered at q = 1 around the nearby center zeta_p, using
/// q - 1 = (q - zeta_p) + pi. Source coefficients must be rational
/// (level-1 cyclotomic). `tail_val` must lower-bound the p-adic valuation of
/// the (untruncated) source coefficient c_j for every j beyond the series;
/// it feeds the truncation-precision bookkeeping of the output.
pub fn jet_recenter(
    src: &JetSeries,
    p: u64,
    out_len: usize,
    prec: i64,
    tail_val: &dyn Fn(i64) -> Rat,
) -> PadicJet {
    assert_eq!(src.m, 1, "recentering starts from the center q = 1");
    assert!(is_integer(&src.rho), "recentering needs an integer leading exponent");
    let rho: i64 = src.rho.to_integer().to_i64().expect("exponent overflow");
    let jmax = rho + src.coeffs.len() as i64 - 1;
    // even a source pole at q = 1 recenters to a regular series: the pole
    // sits at u = -pi, away from the new center
    let workprec = prec + ((out_len as i64 - rho).max(0) / (p as i64 - 1)) + 3;
    let mut out = Vec::with_capacity(out_len);
    for i in 0..out_len as i64 {
        let mut acc = CycloPadic::zero(p, workprec);
        for (idx, cj) in src.coeffs.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let j = rho + idx as i64;
            let c = cj.as_rat().expect("recentering needs rational coefficients");
            // (u + pi)^j contributes C(j, i) pi^{j-i} u^i; for j >= 0 the
            // generalized binomial vanishes for i > j on its own
            let b = binom_rat(&rat_i(j), i as u64);
            if b.is_zero() {
                continue;
            }
            let term = CycloPadic::pi_pow(p, j - i, workprec)
                .scale(&crate::padic::PadicNum::from_rat(p, &(c * b), workprec));
            acc = acc.add(&term);
        }
        // truncation error: dropped j > jmax contribute valuation at least
        // tail_val(j) + (j - i)/(p-1); cap coordinate precision to match
        let mut vmin: Option<Rat> = None;
        for j in (jmax + 1)..(jmax + 2 + 6 * (p as i64 - 1) + 1200) {
            let v = tail_val(j) + rat(j - i, p as i64 - 1);
            vmin = Some(match vmin {
                None => v,
                Some(m) => m.min(v),
            });
        }
        out.push(cap_precision(&acc, &vmin.unwrap()));
    }
    PadicJet { p, lead: 0, coeffs: out }
}

/// Caps each pi-basis coordinate's absolute precision so that the whole
/// element is only claimed modulo p^{vbound}.
fn cap_precision(x: &CycloPadic, vbound: &Rat) -> CycloPadic {
    let p = x.p;
    let coords = x
        .coords
        .iter()
        .enumerate()
        .map(|(k, c)| {
            // coordinate k carries intrinsic pi^k: cap at ceil(vbound - k/(p-1))
            let need = vbound - rat(k as i64, p as i64 - 1);
            let cap = need.ceil().to_integer().to_i64().unwrap_or(i64::MAX);
            c.truncate(cap.min(c.precision()))
        })
        .collect();
    CycloPadic { p, coords }
}
