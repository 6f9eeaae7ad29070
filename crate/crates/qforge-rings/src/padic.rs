//! p-adic numbers at finite absolute precision with pessimistic propagation.
//!
//! A value is stored as unit * p^val, known modulo p^prec (absolute
//! precision). Every operation recomputes the output precision from its
//! inputs; precision never silently improves.

use crate::rat::{int_valuation, to_digits, Rat};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq)]
pub struct PadicNum {
    pub p: u64,
    val: i64,
    unit: BigUint,
    prec: i64,
    zero: bool,
}

fn pow_big(p: u64, e: i64) -> BigUint {
    assert!(e >= 0, "negative power of p in modulus");
    BigUint::from(p).pow(e as u32)
}

/// Inverse of a modulo p^k; requires p does not divide a.
fn inv_mod_ppow(a: &BigUint, p: u64, k: i64) -> BigUint {
    assert!(k >= 0);
    let m = BigInt::from(pow_big(p, k));
    let a = BigInt::from(a.clone());
    let mut r0 = m.clone();
    let mut r1 = a % &m;
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    assert!(r0.is_one(), "element not invertible modulo p^k");
    t0.mod_floor_big(&m)
}

trait ModFloorBig {
    fn mod_floor_big(&self, m: &BigInt) -> BigUint;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> BigUint {
        let r = self % m;
        let r = if r.is_negative() { r + m } else { r };
        r.to_biguint().unwrap()
    }
}

impl PadicNum {
    /// Zero known to absolute precision prec, i.e. O(p^prec).
    pub fn zero(p: u64, prec: i64) -> Self {
        PadicNum { p, val: prec, unit: BigUint::zero(), prec, zero: true }
    }

    pub fn one(p: u64, prec: i64) -> Self {
        Self::from_int(p, 1, prec)
    }

    pub fn from_int(p: u64, n: i64, prec: i64) -> Self {
        Self::from_bigint(p, &BigInt::from(n), prec)
    }

    pub fn from_bigint(p: u64, n: &BigInt, prec: i64) -> Self {
        if n.is_zero() {
            return Self::zero(p, prec);
        }
        let v = int_valuation(p, n);
        if v >= prec {
            return Self::zero(p, prec);
        }
        let m = pow_big(p, prec - v);
        let u = (n / BigInt::from(pow_big(p, v))).mod_floor_big(&BigInt::from(m.clone()));
        if u.is_zero() {
            return Self::zero(p, prec);
        }
        PadicNum { p, val: v, unit: u, prec, zero: false }
    }

    /// Embeds a rational with p-free denominator scaling handled exactly.
    pub fn from_rat(p: u64, r: &Rat, prec: i64) -> Self {
        if r.is_zero() {
            return Self::zero(p, prec);
        }
        let vn = int_valuation(p, r.numer());
        let vd = int_valuation(p, r.denom());
        let v = vn - vd;
        if v >= prec {
            return Self::zero(p, prec);
        }
        let k = prec - v;
        let m = BigInt::from(pow_big(p, k));
        let nu = (r.numer() / BigInt::from(p).pow(vn as u32)).mod_floor_big(&m);
        let du = (r.denom() / BigInt::from(p).pow(vd as u32)).mod_floor_big(&m);
        let u = (BigInt::from(nu * inv_mod_ppow(&du, p, k))).mod_floor_big(&m);
        if u.is_zero() {
            return Self::zero(p, prec);
        }
        PadicNum { p, val: v, unit: u, prec, zero: false }
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    /// Valuation of a nonzero element; None when the element is
    /// indistinguishable from zero at this precision.
    pub fn valuation(&self) -> Option<i64> {
        if self.zero {
            None
        } else {
            Some(self.val)
        }
    }

    /// Lower bound for the valuation that is always defined: the valuation
    /// itself, or the absolute precision for an apparent zero.
    pub fn valuation_lower_bound(&self) -> i64 {
        if self.zero {
            self.prec
        } else {
            self.val
        }
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    fn renormalize(p: u64, val: i64, acc: BigUint, prec: i64) -> Self {
        if acc.is_zero() || val >= prec {
            return Self::zero(p, prec);
        }
        let pb = BigUint::from(p);
        let mut val = val;
        let mut acc = acc;
        while (&acc % &pb).is_zero() {
            acc /= &pb;
            val += 1;
            if val >= prec {
                return Self::zero(p, prec);
            }
        }
        let acc = acc % pow_big(p, prec - val);
        if acc.is_zero() {
            return Self::zero(p, prec);
        }
        PadicNum { p, val, unit: acc, prec, zero: false }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p, "p mismatch");
        let prec = self.prec.min(rhs.prec);
        if self.zero {
            return rhs.truncate(prec);
        }
        if rhs.zero {
            return self.truncate(prec);
        }
        let v = self.val.min(rhs.val);
        if v >= prec {
            return Self::zero(self.p, prec);
        }
        let m = pow_big(self.p, prec - v);
        let a = &self.unit * pow_big(self.p, self.val - v) % &m;
        let b = &rhs.unit * pow_big(self.p, rhs.val - v) % &m;
        Self::renormalize(self.p, v, (a + b) % &m, prec)
    }

    pub fn neg(&self) -> Self {
        if self.zero {
            return self.clone();
        }
        let m = pow_big(self.p, self.prec - self.val);
        PadicNum { p: self.p, val: self.val, unit: &m - &self.unit, prec: self.prec, zero: false }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p, "p mismatch");
        if self.zero || rhs.zero {
            // O(p^a) * (unit p^v) = O(p^{a+v}); O(p^a) * O(p^b) = O(p^{a+b})
            let prec = if self.zero && rhs.zero {
                self.prec + rhs.prec
            } else if self.zero {
                self.prec + rhs.val
            } else {
                rhs.prec + self.val
            };
            return Self::zero(self.p, prec);
        }
        let prec = (self.prec + rhs.val).min(rhs.prec + self.val);
        let v = self.val + rhs.val;
        if v >= prec {
            return Self::zero(self.p, prec);
        }
        let m = pow_big(self.p, prec - v);
        Self::renormalize(self.p, v, &self.unit * &rhs.unit % m, prec)
    }

    pub fn inv(&self) -> Self {
        assert!(!self.zero, "inverse of p-adic zero");
        let rel = self.prec - self.val;
        let prec = rel - self.val;
        let u = inv_mod_ppow(&self.unit, self.p, rel);
        PadicNum { p: self.p, val: -self.val, unit: u, prec, zero: false }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().pow(-e);
        }
        if e == 0 {
            let rel = if self.zero { self.prec } else { self.prec - self.val };
            return PadicNum::one(self.p, rel);
        }
        let mut out: Option<PadicNum> = None;
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                out = Some(match out {
                    None => base.clone(),
                    Some(o) => o.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out.unwrap()
    }

    pub fn truncate(&self, prec: i64) -> Self {
        let prec = prec.min(self.prec);
        if self.zero || self.val >= prec {
            return Self::zero(self.p, prec);
        }
        let u = &self.unit % pow_big(self.p, prec - self.val);
        if u.is_zero() {
            return Self::zero(self.p, prec);
        }
        PadicNum { p: self.p, val: self.val, unit: u, prec, zero: false }
    }

    /// Scales by p^k exactly (shifts valuation and precision).
    pub fn shift(&self, k: i64) -> Self {
        if self.zero {
            return Self::zero(self.p, self.prec + k);
        }
        PadicNum { p: self.p, val: self.val + k, unit: self.unit.clone(), prec: self.prec + k, zero: false }
    }

    /// Base-p digits of the unit part from p^val up to p^{prec-1}.
    pub fn digits(&self) -> Vec<u64> {
        if self.zero {
            return Vec::new();
        }
        to_digits(self.p, &self.unit, (self.prec - self.val) as usize)
    }

    /// The canonical integer representative of unit * p^max(val,0) when
    /// val >= 0, reduced mod p^prec.
    pub fn to_bigint_rep(&self) -> BigInt {
        if self.zero {
            return BigInt::zero();
        }
        assert!(self.val >= 0, "negative valuation has no integer representative");
        BigInt::from(&self.unit * pow_big(self.p, self.val))
    }

    /// True when self and rhs agree modulo p^n (requires both known to n).
    pub fn eq_mod(&self, rhs: &Self, n: i64) -> bool {
        assert!(self.prec >= n && rhs.prec >= n, "insufficient precision for comparison");
        self.sub(rhs).truncate(n).is_zero()
    }
}

impl std::fmt::Debug for PadicNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.zero {
            return write!(f, "O({}^{})", self.p, self.prec);
        }
        let ds = self.digits();
        let mut first = true;
        for (i, d) in ds.iter().enumerate() {
            if *d == 0 {
                continue;
            }
            let e = self.val + i as i64;
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{}", d)?,
                1 => write!(f, "{}*{}", d, self.p)?,
                _ => write!(f, "{}*{}^{}", d, self.p, e)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.p, self.prec)
    }
}

impl serde::Serialize for PadicNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PadicNum", 4)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("val", &self.valuation_lower_bound())?;
        st.serialize_field("digits", &self.digits())?;
        st.serialize_field("prec", &self.prec)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for PadicNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            p: u64,
            val: i64,
            digits: Vec<u64>,
            prec: i64,
        }
        let raw = Raw::deserialize(d)?;
        if raw.digits.is_empty() {
            return Ok(PadicNum::zero(raw.p, raw.prec));
        }
        let mut acc = BigInt::zero();
        let mut pw = BigInt::one();
        for d in &raw.digits {
            acc += BigInt::from(*d) * &pw;
            pw *= BigInt::from(raw.p);
        }
        Ok(PadicNum::from_bigint(raw.p, &acc, raw.prec - raw.val).shift(raw.val))
    }
}

/// Valuation of a rational seen in Q_p; None for zero.
pub fn padic_val(p: u64, r: &Rat) -> Option<i64> {
    crate::rat::rat_valuation(p, r)
}

/// Reduces a p-integral rational modulo p, into 0..p.
pub fn rat_mod_p(p: u64, r: &Rat) -> u64 {
    assert!(padic_val(p, r).map_or(true, |v| v >= 0), "rational not p-integral");
    let v = PadicNum::from_rat(p, r, 1);
    if v.is_zero() {
        0
    } else {
        v.digits().first().copied().unwrap_or(0)
    }
}
