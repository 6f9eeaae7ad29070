//! Exact cyclotomic numbers: elements of Q(zeta_m) in the power basis mod the
//! m-th cyclotomic polynomial.

use crate::nt::{divisors, euler_phi, lcm_u64};
use crate::poly::Poly;
use crate::rat::{rat_str, Rat};
use crate::ring::{Field, Ring};

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

static PHI_CACHE: OnceLock<Mutex<HashMap<u64, Poly<Rat>>>> = OnceLock::new();

/// The m-th cyclotomic polynomial over Q, computed by exact division of
/// x^m - 1 by the lower cyclotomic factors. Results are memoized.
pub fn cyclotomic_poly(m: u64) -> Poly<Rat> {
    assert!(m >= 1, "cyclotomic index must be positive");
    let cache = PHI_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    let phi = if m == 1 {
        Poly::new(vec![-Rat::one(), Rat::one()])
    } else {
        // x^m - 1
        let mut c = vec![Rat::zero(); m as usize + 1];
        c[0] = -Rat::one();
        c[m as usize] = Rat::one();
        let mut num = Poly::new(c);
        for d in divisors(m) {
            if d < m {
                num = num.div_exact(&cyclotomic_poly(d));
            }
        }
        num
    };
    cache.lock().unwrap().insert(m, phi.clone());
    phi
}

/// Element of the cyclotomic field Q(zeta_m), coordinates in the power basis
/// 1, zeta, ..., zeta^{phi(m)-1}. The coordinate vector always has length
/// phi(m). Elements of different levels unify to the lcm level on arithmetic.
#[derive(Clone)]
pub struct CycloNum {
    pub m: u64,
    pub coords: Vec<Rat>,
}

impl std::fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cyclo(m={}; {})", self.m, self.coords.iter().map(rat_str).collect::<Vec<_>>().join(", "))
    }
}

impl CycloNum {
    pub fn from_coords(m: u64, mut coords: Vec<Rat>) -> Self {
        let phi = euler_phi(m) as usize;
        assert!(coords.len() <= phi, "coordinate vector longer than phi(m)");
        coords.resize(phi, Rat::zero());
        CycloNum { m, coords }
    }

    /// Reduces an arbitrary-degree polynomial in zeta_m.
    pub fn from_poly(m: u64, p: &Poly<Rat>) -> Self {
        let r = p.rem(&cyclotomic_poly(m));
        CycloNum::from_coords(m, r.c)
    }

    pub fn from_rat(r: Rat) -> Self {
        CycloNum { m: 1, coords: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        CycloNum::from_rat(crate::rat::rat_i(n))
    }

    /// The primitive m-th root of unity zeta_m.
    pub fn zeta(m: u64) -> Self {
        Self::zeta_pow(m, 1)
    }

    /// zeta_m^e for any integer e.
    pub fn zeta_pow(m: u64, e: i64) -> Self {
        let e = e.rem_euclid(m as i64) as u64;
        let phi = euler_phi(m) as usize;
        if (e as usize) < phi {
            let mut coords = vec![Rat::zero(); phi];
            coords[e as usize] = Rat::one();
            CycloNum { m, coords }
        } else {
            CycloNum::from_poly(m, &Poly::monomial(Rat::one(), e as usize))
        }
    }

    pub fn as_poly(&self) -> Poly<Rat> {
        Poly::new(self.coords.clone())
    }

    /// Re-expresses the element in Q(zeta_m2); requires m | m2.
    pub fn promote(&self, m2: u64) -> Self {
        assert!(m2 % self.m == 0, "promotion target must be a multiple of the level");
        if m2 == self.m {
            return self.clone();
        }
        let k = (m2 / self.m) as usize;
        CycloNum::from_poly(m2, &self.as_poly().stretch(k))
    }

    fn unify(&self, rhs: &Self) -> (Self, Self) {
        let l = lcm_u64(self.m, rhs.m);
        (self.promote(l), rhs.promote(l))
    }

    /// True if the element lies in Q, i.e. all non-constant coordinates vanish.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn expect_rat(&self) -> Rat {
        self.as_rat().unwrap_or_else(|| panic!("expected rational value, got {:?}", self))
    }

    /// Galois substitution zeta -> zeta^j; requires gcd(j, m) = 1.
    pub fn galois(&self, j: u64) -> Self {
        let jm = (j % self.m) as usize;
        assert!(crate::nt::gcd_u64(jm as u64, self.m) == 1, "galois exponent must be coprime to the level");
        // exponents reduce mod m since zeta^m = 1
        let mut q = Poly::zero();
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                q = q.add(&Poly::monomial(c.clone(), (i * jm) % self.m as usize));
            }
        }
        CycloNum::from_poly(self.m, &q)
    }

    /// Complex conjugation zeta -> zeta^{-1}.
    pub fn conj(&self) -> Self {
        if self.m == 1 {
            return self.clone();
        }
        self.galois(self.m - 1)
    }

    /// Value of the coordinate polynomial at 1. This is the augmentation used
    /// to pass from Z[zeta_p] to Z/p (all conjugates of zeta collapse to 1).
    pub fn eval_one(&self) -> Rat {
        let mut acc = Rat::zero();
        for c in &self.coords {
            acc += c;
        }
        acc
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let mut acc = CycloNum::from_int(1);
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

    /// Numeric embedding sending zeta_m to exp(2 pi i/m); returns (re, im).
    pub fn approx(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coords.iter().enumerate() {
            let cf = rat_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / (self.m as f64);
            re += cf * ang.cos();
            im += cf * ang.sin();
        }
        (re, im)
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.coords == other.coords;
        }
        let (a, b) = self.unify(other);
        a.coords == b.coords
    }
}

impl Ring for CycloNum {
    fn zero() -> Self {
        CycloNum::from_int(0)
    }
    fn one() -> Self {
        CycloNum::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.m == rhs.m {
            let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
            return CycloNum { m: self.m, coords };
        }
        let (a, b) = self.unify(rhs);
        a.add(&b)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.m == rhs.m {
            return CycloNum::from_poly(self.m, &self.as_poly().mul(&rhs.as_poly()));
        }
        let (a, b) = self.unify(rhs);
        a.mul(&b)
    }
    fn neg(&self) -> Self {
        CycloNum { m: self.m, coords: self.coords.iter().map(|c| -c).collect() }
    }
    fn from_i64(n: i64) -> Self {
        CycloNum::from_int(n)
    }
}

impl Field for CycloNum {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero cyclotomic number");
        let phi_m = cyclotomic_poly(self.m);
        let f = self.as_poly();
        let (g, u, _) = f.ext_gcd(&phi_m);
        assert!(g.degree() == Some(0), "cyclotomic polynomial not coprime to element");
        let gi = g.c[0].inv();
        CycloNum::from_poly(self.m, &u.scale(&gi))
    }
}

/// Scales a cyclotomic number by a rational.
pub fn cyclo_scale(a: &CycloNum, r: &Rat) -> CycloNum {
    CycloNum { m: a.m, coords: a.coords.iter().map(|c| c * r).collect() }
}

impl serde::Serialize for CycloNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CycloNum", 2)?;
        st.serialize_field("m", &self.m)?;
        let coords: Vec<String> = self.coords.iter().map(rat_str).collect();
        st.serialize_field("coords", &coords)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for CycloNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            m: u64,
            coords: Vec<String>,
        }
        let raw = Raw::deserialize(d)?;
        let coords = raw
            .coords
            .iter()
            .map(|s| crate::rat::rat_parse(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        if coords.len() > euler_phi(raw.m) as usize {
            return Err(serde::de::Error::custom("coordinate vector longer than phi(m)"));
        }
        Ok(CycloNum::from_coords(raw.m, coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};

    #[test]
    fn cyclotomic_polys() {
        // Phi_1 = x - 1, Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1
        assert_eq!(cyclotomic_poly(1).c, vec![rat_i(-1), rat_i(1)]);
        assert_eq!(cyclotomic_poly(6).c, vec![rat_i(1), rat_i(-1), rat_i(1)]);
        assert_eq!(cyclotomic_poly(12).c, vec![rat_i(1), rat_i(0), rat_i(-1), rat_i(0), rat_i(1)]);
    }

    #[test]
    fn zeta_orders() {
        for m in 1..=12u64 {
            let z = CycloNum::zeta(m);
            assert_eq!(z.pow(m as i64), CycloNum::from_int(1), "zeta_{} order", m);
            if m > 1 {
                assert!(z.pow(m as i64 / factor_smallest(m)) != CycloNum::from_int(1) || m == 1);
            }
        }
    }

    fn factor_smallest(m: u64) -> i64 {
        crate::nt::factorize(m)[0].0 as i64
    }

    #[test]
    fn inverse_and_mixed_level() {
        let z = CycloNum::zeta(5);
        let a = z.add(&CycloNum::from_rat(rat(2, 3)));
        assert_eq!(a.mul(&a.inv()), CycloNum::from_int(1));
        // zeta_2 * zeta_3 = zeta_6^5 (compatible embeddings)
        let z2 = CycloNum::zeta(2);
        let z3 = CycloNum::zeta(3);
        assert_eq!(z2.mul(&z3), CycloNum::zeta_pow(6, 5));
    }

    #[test]
    fn conjugation() {
        let z = CycloNum::zeta(7);
        let s = z.add(&z.conj());
        // zeta + zeta^{-1} is fixed by conjugation
        assert_eq!(s.conj(), s);
        assert_eq!(z.mul(&z.conj()), CycloNum::from_int(1));
    }

    #[test]
    fn sum_of_all_roots() {
        // 1 + zeta + ... + zeta^{p-1} = 0 for prime p
        for p in [3u64, 5, 7, 11] {
            let mut acc = CycloNum::zero();
            for e in 0..p {
                acc = acc.add(&CycloNum::zeta_pow(p, e as i64));
            }
            assert!(acc.is_zero(), "p = {}", p);
        }
    }
}
