//! Symbolic roots of unity with exponent arithmetic over the compatible
//! system zeta_m = exp(2 pi i/m), where zeta_{mm'} restricts to
//! zeta_m zeta_{m'} for coprime m, m'.

use crate::cyclo::CycloNum;
use crate::nt::{gcd_u64, lcm_u64, mod_inv};
use crate::rat::Rat;
use serde::{Deserialize, Serialize};

/// A root of unity zeta_order^expo in normal form: either the identity
/// (order 1, expo 0) or gcd(expo, order) = 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RootOfUnity {
    pub order: u64,
    pub expo: u64,
}

impl RootOfUnity {
    pub fn new(order: u64, expo: i64) -> Self {
        assert!(order >= 1, "root of unity needs positive order");
        let e = expo.rem_euclid(order as i64) as u64;
        if e == 0 {
            return RootOfUnity { order: 1, expo: 0 };
        }
        let g = gcd_u64(e, order);
        RootOfUnity { order: order / g, expo: e / g }
    }

    pub fn one() -> Self {
        RootOfUnity { order: 1, expo: 0 }
    }

    /// The primitive m-th root zeta_m.
    pub fn zeta(m: u64) -> Self {
        RootOfUnity::new(m, 1)
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    /// Product in the compatible system: exponents are added over the lcm level.
    pub fn mul(&self, rhs: &Self) -> Self {
        let l = lcm_u64(self.order, rhs.order);
        let e = (self.expo as i64) * ((l / self.order) as i64) + (rhs.expo as i64) * ((l / rhs.order) as i64);
        RootOfUnity::new(l, e)
    }

    pub fn inv(&self) -> Self {
        RootOfUnity::new(self.order, -(self.expo as i64))
    }

    pub fn pow(&self, k: i64) -> Self {
        RootOfUnity::new(self.order, (self.expo as i64).wrapping_mul(k.rem_euclid(self.order as i64)))
    }

    /// Fractional power zeta^{u/v}, defined when gcd(v, order) = 1 via the
    /// inverse of v modulo the order. Returns None otherwise.
    pub fn pow_frac(&self, u: i64, v: u64) -> Option<Self> {
        assert!(v >= 1, "fractional power needs positive denominator");
        let vinv = mod_inv(v as i64, self.order)?;
        let e = (u.rem_euclid(self.order as i64) as u128 * vinv as u128 % self.order as u128) as i64;
        Some(RootOfUnity::new(self.order, (self.expo as i64).wrapping_mul(e).rem_euclid(self.order as i64)))
    }

    /// Fractional power by a rational exponent (see `pow_frac`).
    pub fn pow_rat(&self, r: &Rat) -> Option<Self> {
        let u: i64 = r.numer().try_into().ok()?;
        let v: u64 = r.denom().try_into().ok()?;
        self.pow_frac(u, v)
    }

    /// Exact embedding into the cyclotomic field of its order (or a multiple).
    pub fn to_cyclo(&self) -> CycloNum {
        CycloNum::zeta_pow(self.order, self.expo as i64)
    }

    pub fn to_cyclo_in(&self, m: u64) -> CycloNum {
        assert!(m % self.order == 0, "embedding level must be a multiple of the order");
        CycloNum::zeta_pow(m, (self.expo * (m / self.order)) as i64)
    }
}
