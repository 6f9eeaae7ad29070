//! The ramified extension Q_p(zeta_p), represented on the power basis of
//! pi = zeta_p - 1. The uniformizer pi has valuation 1/(p-1); valuations of
//! field elements are rationals with denominator p-1.

use crate::cyclo::CycloNum;
use crate::padic::PadicNum;
use crate::rat::{binomial, rat, Rat};
use crate::ring::Ring;
use num_bigint::BigInt;


/// Element of Q_p(zeta_p) as sum coords[i] * pi^i, 0 <= i <= p-2,
/// with p-adic coordinate coefficients.
#[derive(Clone, Debug)]
pub struct CycloPadic {
    pub p: u64,
    pub coords: Vec<PadicNum>,
}

impl CycloPadic {
    pub fn zero(p: u64, prec: i64) -> Self {
        CycloPadic { p, coords: vec![PadicNum::zero(p, prec); (p - 1) as usize] }
    }

    pub fn one(p: u64, prec: i64) -> Self {
        let mut z = Self::zero(p, prec);
        z.coords[0] = PadicNum::one(p, prec);
        z
    }

    pub fn from_padic(x: &PadicNum) -> Self {
        let p = x.p;
        let mut z = Self::zero(p, x.precision());
        z.coords[0] = x.clone();
        z
    }

    pub fn from_rat(p: u64, r: &Rat, prec: i64) -> Self {
        Self::from_padic(&PadicNum::from_rat(p, r, prec))
    }

    /// The uniformizer pi = zeta_p - 1.
    pub fn pi(p: u64, prec: i64) -> Self {
        let mut z = Self::zero(p, prec);
        z.coords[1] = PadicNum::one(p, prec);
        z
    }

    /// Embeds an exact cyclotomic number of level 1 or p.
    /// Coordinates on the zeta-power basis are converted through
    /// zeta^k = (1 + pi)^k, which stays within degree p-2.
    pub fn from_cyclo(c: &CycloNum, p: u64, prec: i64) -> Self {
        assert!(c.m == 1 || c.m == p, "level must be 1 or p");
        let mut out = Self::zero(p, prec);
        for (k, a) in c.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let av = PadicNum::from_rat(p, a, prec);
            if c.m == 1 {
                out.coords[0] = out.coords[0].add(&av);
            } else {
                for i in 0..=k {
                    let b = Rat::from_integer(binomial(k as u64, i as u64));
                    let t = av.mul(&PadicNum::from_rat(p, &b, prec));
                    out.coords[i] = out.coords[i].add(&t);
                }
            }
        }
        out
    }

    pub fn is_apparently_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.add(b)).collect();
        CycloPadic { p: self.p, coords }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.sub(b)).collect();
        CycloPadic { p: self.p, coords }
    }

    pub fn neg(&self) -> Self {
        CycloPadic { p: self.p, coords: self.coords.iter().map(|a| a.neg()).collect() }
    }

    pub fn scale(&self, s: &PadicNum) -> Self {
        CycloPadic { p: self.p, coords: self.coords.iter().map(|a| a.mul(s)).collect() }
    }

    /// Reduction of pi^{p-1} through the Eisenstein relation
    /// pi^{p-1} = -sum_{i=0}^{p-2} C(p, i+1) pi^i (all coefficients
    /// divisible by p except the leading 1 that was moved left).
    fn fold(&self, conv: Vec<PadicNum>) -> Self {
        let p = self.p;
        let d = (p - 1) as usize;
        let mut c = conv;
        while c.len() > d {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let e = c.len() - d; // pi^{d+e} with e >= 0
            for i in 0..d {
                let bi = BigInt::from(binomial(p, i as u64 + 1));
                let coef = PadicNum::from_bigint(p, &bi, top.precision() + 2);
                let t = top.mul(&coef).neg();
                c[e + i] = c[e + i].add(&t);
            }
        }
        while c.len() < d {
            c.push(PadicNum::zero(p, self.coords[0].precision()));
        }
        CycloPadic { p, coords: c }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.p, rhs.p);
        let d = (self.p - 1) as usize;
        let minprec = self
            .coords
            .iter()
            .chain(&rhs.coords)
            .map(|c| c.precision())
            .min()
            .unwrap_or(1);
        let mut conv = vec![PadicNum::zero(self.p, minprec + 2 * d as i64); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] = conv[i + j].add(&a.mul(b));
            }
        }
        self.fold(conv)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let prec = self.coords.iter().map(|c| c.precision()).min().unwrap_or(1);
        let mut acc = Self::one(self.p, prec + 4);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Inverse by solving the (p-1) x (p-1) multiplication system over Q_p,
    /// pivoting on minimal valuation.
    pub fn inv(&self) -> Self {
        let p = self.p;
        let d = (p - 1) as usize;
        assert!(!self.is_apparently_zero(), "inverse of apparent zero");
        // columns: self * pi^j expressed on the basis
        let mut cols = Vec::with_capacity(d);
        let mut cur = self.clone();
        for _ in 0..d {
            cols.push(cur.coords.clone());
            let mut conv = vec![PadicNum::zero(p, cur.coords[0].precision()); cur.coords.len() + 1];
            for (i, a) in cur.coords.iter().enumerate() {
                conv[i + 1] = a.clone();
            }
            cur = self.fold(conv);
        }
        // solve M x = e0 by Gauss-Jordan elimination
        let mut m: Vec<Vec<PadicNum>> = (0..d).map(|r| (0..d).map(|c| cols[c][r].clone()).collect()).collect();
        let prec = self.coords.iter().map(|c| c.precision()).min().unwrap();
        let mut b: Vec<PadicNum> = (0..d).map(|r| if r == 0 { PadicNum::one(p, prec) } else { PadicNum::zero(p, prec) }).collect();
        for col in 0..d {
            let piv = (col..d)
                .filter(|&r| !m[r][col].is_zero())
                .min_by_key(|&r| m[r][col].valuation().unwrap())
                .expect("singular multiplication matrix");
            m.swap(col, piv);
            b.swap(col, piv);
            let pv = m[col][col].clone();
            for r in 0..d {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].div(&pv);
                for c2 in col..d {
                    let t = m[col][c2].mul(&f);
                    m[r][c2] = m[r][c2].sub(&t);
                }
                let t = b[col].mul(&f);
                b[r] = b[r].sub(&t);
            }
        }
        let coords: Vec<PadicNum> = (0..d).map(|r| b[r].div(&m[r][r])).collect();
        CycloPadic { p, coords }
    }

    /// pi^k for any integer k.
    pub fn pi_pow(p: u64, k: i64, prec: i64) -> Self {
        Self::pi(p, prec).pow(k)
    }

    /// Valuation as a rational with denominator p-1; None if apparently zero.
    /// Distinct basis indices contribute distinct valuations mod 1, so the
    /// minimum over coordinates is exact.
    pub fn valuation(&self) -> Option<Rat> {
        self.coords
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.valuation().map(|v| rat(v * (self.p as i64 - 1) + i as i64, self.p as i64 - 1)))
            .min()
    }

    /// Largest V such that the element is provably O(pi^{V (p-1)}) given
    /// coordinate precisions, measured in p-units.
    pub fn valuation_lower_bound(&self) -> Rat {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, c)| rat(c.valuation_lower_bound() * (self.p as i64 - 1) + i as i64, self.p as i64 - 1))
            .min()
            .expect("empty coordinate vector")
    }

    /// True when the element is zero to p-adic order at least `target`
    /// (in p-units). Panics if precision is insufficient to decide.
    pub fn is_zero_to(&self, target: &Rat) -> bool {
        match self.valuation() {
            Some(v) => v >= *target,
            None => {
                let bound = self.valuation_lower_bound();
                assert!(bound >= *target, "insufficient precision: O(p^{:?}) vs target {:?}", bound, target);
                true
            }
        }
    }

    pub fn min_coord_precision(&self) -> i64 {
        self.coords.iter().map(|c| c.precision()).min().unwrap()
    }
}

impl serde::Serialize for CycloPadic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CycloPadic", 2)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("coords", &self.coords)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for CycloPadic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            p: u64,
            coords: Vec<PadicNum>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.coords.len() != (raw.p - 1) as usize {
            return Err(serde::de::Error::custom("coordinate vector must have length p-1"));
        }
        Ok(CycloPadic { p: raw.p, coords: raw.coords })
    }
}
