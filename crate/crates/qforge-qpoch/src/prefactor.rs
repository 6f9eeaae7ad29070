//! Symbolic prefactor attached to an infinite Pochhammer expansion at a root
//! of unity: transcendental markers, gamma factors carried by argument, a
//! power of (-m h), and algebraic bases raised to rational exponents.
//!
//! Nothing here is evaluated numerically. A prefactor participates in an
//! exact series only after certification: the transcendental markers must
//! cancel, the gamma factors must telescope to a rational number, and every
//! algebraic exponent must be an integer.

use num_traits::ToPrimitive;
use qforge_rings::cyclo::cyclo_scale;
use qforge_rings::rat::rat_i;
use qforge_rings::{CycloNum, Rat, Ring};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::QpochError;

/// Multiplicative bookkeeping for one expansion. The represented value is
///
///   (2 pi)^{sqrt_2pi_exp/2} * exp(divergent_exp * pi^2/(6 m h))
///   * prod Gamma(num_i) / prod Gamma(den_j)
///   * (-m h)^{neg_mh_exp} * prod base_k^{e_k} * scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct PochPrefactor {
    pub m: u64,
    pub sqrt_2pi_exp: Rat,
    pub divergent_exp: Rat,
    pub gamma_num: Vec<Rat>,
    pub gamma_den: Vec<Rat>,
    pub neg_mh_exp: Rat,
    pub factors: Vec<(CycloNum, Rat)>,
    pub scalar: CycloNum,
}

impl PochPrefactor {
    pub fn one(m: u64) -> Self {
        PochPrefactor {
            m,
            sqrt_2pi_exp: Rat::zero(),
            divergent_exp: Rat::zero(),
            gamma_num: Vec::new(),
            gamma_den: Vec::new(),
            neg_mh_exp: Rat::zero(),
            factors: Vec::new(),
            scalar: CycloNum::from_int(1),
        }
    }

    /// Multiply in `other^e` for e = +1 or -1.
    pub fn mul_pow(&mut self, other: &PochPrefactor, e: i64) {
        assert!(e == 1 || e == -1, "only unit powers are combined");
        assert_eq!(self.m, other.m, "prefactors live at the same center");
        let er = rat_i(e);
        self.sqrt_2pi_exp += &er * &other.sqrt_2pi_exp;
        self.divergent_exp += &er * &other.divergent_exp;
        self.neg_mh_exp += &er * &other.neg_mh_exp;
        if e == 1 {
            self.gamma_num.extend(other.gamma_num.iter().cloned());
            self.gamma_den.extend(other.gamma_den.iter().cloned());
        } else {
            self.gamma_num.extend(other.gamma_den.iter().cloned());
            self.gamma_den.extend(other.gamma_num.iter().cloned());
        }
        for (base, exp) in &other.factors {
            self.push_factor(base.clone(), &er * exp);
        }
        self.scalar = self.scalar.mul(&other.scalar.pow(e));
    }

    /// Merge one algebraic factor base^exp into the list.
    pub fn push_factor(&mut self, base: CycloNum, exp: Rat) {
        if exp.is_zero() {
            return;
        }
        if let Some(slot) = self.factors.iter_mut().find(|(b, _)| *b == base) {
            slot.1 += exp;
            self.factors.retain(|(_, e)| !e.is_zero());
            return;
        }
        self.factors.push((base, exp));
    }

    /// Extract the (-m h) exponent, leaving it zero here.
    pub fn take_neg_mh(&mut self) -> Rat {
        std::mem::take(&mut self.neg_mh_exp)
    }

    /// Fold every integral-exponent algebraic factor into the scalar.
    pub fn fold_integral(&mut self) {
        let mut rest = Vec::new();
        for (base, exp) in self.factors.drain(..) {
            if exp.is_integer() {
                let e = exp.numer().to_i64().expect("exponent fits i64");
                self.scalar = self.scalar.mul(&base.pow(e));
            } else {
                rest.push((base, exp));
            }
        }
        self.factors = rest;
    }

    /// Telescope the gamma lists: integer arguments become factorials and
    /// argument pairs differing by an integer become rising factorials, all
    /// absorbed into the scalar. Arguments that find no partner are kept.
    pub fn gamma_reduce(&mut self) -> Result<(), QpochError> {
        let mut num = Vec::new();
        for a in self.gamma_num.drain(..) {
            match gamma_integer(&a)? {
                Some(v) => self.scalar = cyclo_scale(&self.scalar, &v),
                None => num.push(a),
            }
        }
        let mut den = Vec::new();
        for a in self.gamma_den.drain(..) {
            match gamma_integer(&a)? {
                Some(v) => self.scalar = cyclo_scale(&self.scalar, &(rat_i(1) / v)),
                None => den.push(a),
            }
        }
        let mut kept_num: Vec<Rat> = Vec::new();
        'outer: for u in num {
            for i in 0..den.len() {
                let d = &u - &den[i];
                if d.is_integer() {
                    let v = den.remove(i);
                    let k = d.numer().to_i64().expect("gap fits i64");
                    let ratio = if k >= 0 {
                        rising(&v, k as u64)
                    } else {
                        rat_i(1) / rising(&u, (-k) as u64)
                    };
                    self.scalar = cyclo_scale(&self.scalar, &ratio);
                    continue 'outer;
                }
            }
            kept_num.push(u);
        }
        self.gamma_num = kept_num;
        self.gamma_den = den;
        Ok(())
    }

    /// True when only the scalar remains.
    pub fn is_scalar(&self) -> bool {
        self.sqrt_2pi_exp.is_zero()
            && self.divergent_exp.is_zero()
            && self.gamma_num.is_empty()
            && self.gamma_den.is_empty()
            && self.neg_mh_exp.is_zero()
            && self.factors.is_empty()
    }

    /// Reduce fully and demand an exact scalar.
    pub fn certify_scalar(mut self) -> Result<CycloNum, QpochError> {
        self.gamma_reduce()?;
        self.fold_integral();
        if !self.is_scalar() {
            return Err(QpochError::NotScalar(format!("{:?}", self)));
        }
        Ok(self.scalar)
    }
}

/// Gamma at an integer argument: (n-1)! for n >= 1, pole otherwise.
/// Returns None for non-integer arguments.
fn gamma_integer(a: &Rat) -> Result<Option<Rat>, QpochError> {
    if !a.is_integer() {
        return Ok(None);
    }
    let n = a.numer().to_i64().expect("argument fits i64");
    if n <= 0 {
        return Err(QpochError::GammaPole(a.to_string()));
    }
    let mut v = rat_i(1);
    for i in 1..n {
        v *= rat_i(i);
    }
    Ok(Some(v))
}

/// Rising factorial (x)_k = x (x+1) ... (x+k-1).
pub fn rising(x: &Rat, k: u64) -> Rat {
    let mut v = rat_i(1);
    for i in 0..k {
        v *= x + rat_i(i as i64);
    }
    v
}

impl Serialize for PochPrefactor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PochPrefactor", 8)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("sqrt_2pi_exp", &self.sqrt_2pi_exp.to_string())?;
        st.serialize_field("divergent_exp", &self.divergent_exp.to_string())?;
        st.serialize_field(
            "gamma_num",
            &self.gamma_num.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        )?;
        st.serialize_field(
            "gamma_den",
            &self.gamma_den.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        )?;
        st.serialize_field("neg_mh_exp", &self.neg_mh_exp.to_string())?;
        st.serialize_field(
            "factors",
            &self
                .factors
                .iter()
                .map(|(b, e)| serde_json::json!({ "base": b, "exp": e.to_string() }))
                .collect::<Vec<_>>(),
        )?;
        st.serialize_field("scalar", &self.scalar)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qforge_rings::rat::rat;

    #[test]
    fn gamma_telescopes_to_pochhammer() {
        let mut p = PochPrefactor::one(1);
        p.gamma_num.push(rat(7, 2));
        p.gamma_den.push(rat(1, 2));
        p.gamma_reduce().unwrap();
        assert!(p.gamma_num.is_empty() && p.gamma_den.is_empty());
        // (1/2)(3/2)(5/2) = 15/8.
        assert_eq!(p.scalar.expect_rat(), rat(15, 8));
    }

    #[test]
    fn gamma_integer_arguments_become_factorials() {
        let mut p = PochPrefactor::one(1);
        p.gamma_num.push(rat_i(5));
        p.gamma_den.push(rat_i(1));
        p.gamma_reduce().unwrap();
        assert_eq!(p.scalar.expect_rat(), rat_i(24));
    }

    #[test]
    fn gamma_pole_rejected() {
        let mut p = PochPrefactor::one(1);
        p.gamma_num.push(rat_i(0));
        assert!(p.gamma_reduce().is_err());
    }

    #[test]
    fn downward_telescope_divides() {
        let mut p = PochPrefactor::one(1);
        p.gamma_num.push(rat(1, 3));
        p.gamma_den.push(rat(7, 3));
        p.gamma_reduce().unwrap();
        // Gamma(1/3)/Gamma(7/3) = 1/((1/3)(4/3)) = 9/4.
        assert_eq!(p.scalar.expect_rat(), rat(9, 4));
    }

    #[test]
    fn fold_integral_and_certify() {
        let mut p = PochPrefactor::one(3);
        let base = CycloNum::from_int(1).sub(&CycloNum::zeta(3));
        p.push_factor(base.clone(), rat(1, 2));
        p.push_factor(base.clone(), rat(3, 2));
        p.fold_integral();
        assert!(p.factors.is_empty());
        assert_eq!(p.scalar, base.mul(&base));
        assert!(p.clone().certify_scalar().is_ok());
        p.push_factor(base, rat(1, 3));
        assert!(matches!(p.certify_scalar(), Err(QpochError::NotScalar(_))));
    }

    #[test]
    fn inverse_composition_is_identity() {
        let mut p = PochPrefactor::one(3);
        p.sqrt_2pi_exp = rat_i(1);
        p.divergent_exp = rat_i(1);
        p.neg_mh_exp = rat(1, 2);
        p.gamma_den.push(rat(1, 2));
        p.push_factor(CycloNum::zeta(3), rat(1, 5));
        let mut q = PochPrefactor::one(3);
        q.mul_pow(&p, 1);
        q.mul_pow(&p, -1);
        assert!(q.gamma_num.len() == 1 && q.gamma_den.len() == 1);
        q.gamma_reduce().unwrap();
        assert!(q.is_scalar());
        assert_eq!(q.scalar, CycloNum::from_int(1));
    }
}
