//! Assembly of the cohomology-valued q-expansion: a product of q-Beta
//! normalization jets times the expansion operator, applied to the symbolic
//! basis class of the bracket-image parameters.

use qforge_qpoch::poch::q_beta_at_root;
use qforge_rings::nt::gcd_u64;
use qforge_rings::rat::rat_i;
use qforge_rings::{CycloNum, JetSeries, Rat};

use crate::data::HGData;
use crate::dm::{build_dm, DmOperator};
use crate::HypergError;

/// The q-expansion of the basis class at q = zeta_m. The operator part acts
/// on the symbolic class of the bracketed parameters; factorial
/// presentations carry no beta normalization since their coefficient ratios
/// are already unit-valued there.
#[derive(Clone, Debug)]
pub struct OmegaClass {
    pub m: u64,
    /// Cohomological dimension n; jets may have exponent down to -(n+1).
    pub dim: usize,
    /// Product of the q-Beta jets B_m(alpha_j, beta_j - alpha_j), j < n.
    pub beta_norm: Option<JetSeries>,
    pub dm: DmOperator,
    /// Leading exponent of the assembled prefactor.
    pub lead_exponent: Rat,
}

pub fn build_omega_class(data: &HGData, m: u64, k_order: usize) -> Result<OmegaClass, HypergError> {
    let nden = data.denominator();
    if m == 0 || gcd_u64(m, nden) != 1 {
        return Err(HypergError::NotCoprime { m, n: nden });
    }
    // The beta-factor arguments beta_j - alpha_j need their own coprimality,
    // which the family denominator does not always witness.
    for (a, b) in data.alpha.iter().zip(data.beta.iter()) {
        let d = (b - a).denom().clone();
        let d: u64 = d.try_into().map_err(|_| {
            HypergError::BadParameters("beta - alpha denominator overflow".to_string())
        })?;
        if gcd_u64(m, d) != 1 {
            return Err(HypergError::NotCoprime { m, n: d });
        }
    }
    let dm = build_dm(data, m, k_order)?;
    let n = data.dim();
    let beta_norm = if data.factorial.is_some() {
        None
    } else {
        let mut acc = JetSeries::constant(m, CycloNum::from_int(1), k_order + 2);
        for j in 0..n {
            let a = &data.alpha[j];
            let b = &data.beta[j] - a;
            acc = acc.mul(&q_beta_at_root(a, &b, m, k_order + 2)?);
        }
        Some(acc)
    };
    let lead_exponent =
        beta_norm.as_ref().and_then(|j| j.lead_exponent()).unwrap_or_else(|| rat_i(0));
    assert!(
        lead_exponent >= rat_i(-(n as i64 + 1)),
        "beta normalization fell below the pole bound"
    );
    Ok(OmegaClass { m, dim: n, beta_norm, dm, lead_exponent })
}

impl OmegaClass {
    /// Constant-in-(q - zeta_m) coefficient per congruence class; the class-i
    /// entry multiplies lambda^{i/m}. Errors if a block is not constant.
    pub fn constant_term(&self) -> Result<Vec<CycloNum>, HypergError> {
        let mut out = Vec::with_capacity(self.m as usize);
        for i in 0..self.m as usize {
            let p = self.dm.blocks[i][0].as_poly().ok_or(HypergError::NonPolynomialBlock)?;
            if p.degree().map_or(false, |d| d > 0) {
                return Err(HypergError::NonPolynomialBlock);
            }
            out.push(p.coeff(0));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qforge_qpoch::poch::poch_finite_at_zeta;
    use qforge_rings::rat::rat;
    use qforge_rings::{Field, Ring};

    #[test]
    fn legendre_constant_terms_at_unit_and_cube_roots() {
        let data = HGData::legendre();
        let om1 = build_omega_class(&data, 1, 1).unwrap();
        assert_eq!(om1.constant_term().unwrap(), vec![CycloNum::from_int(1)]);
        assert!(om1.beta_norm.is_none());

        let om3 = build_omega_class(&data, 3, 1).unwrap();
        let ct = om3.constant_term().unwrap();
        // Direct evaluation (zeta;zeta)_{2k}^2 / (zeta;zeta)_k^4 at k < 3.
        for (k, got) in ct.iter().enumerate() {
            let num = poch_finite_at_zeta(&rat_i(1), 2 * k as u64, 3);
            let den = poch_finite_at_zeta(&rat_i(1), k as u64, 3);
            let want = num.mul(&num).mul(&den.pow(4).inv());
            assert_eq!(got, &want, "k = {}", k);
        }
        assert_eq!(ct[0], CycloNum::from_int(1));
        assert_eq!(ct[1], CycloNum::zeta(3));
        assert!(Ring::is_zero(&ct[2]));
    }

    #[test]
    fn shirai_constant_terms_match_direct_evaluation() {
        let data = HGData::legendre_shirai();
        let om = build_omega_class(&data, 3, 1).unwrap();
        let ct = om.constant_term().unwrap();
        for (k, got) in ct.iter().enumerate() {
            let num = poch_finite_at_zeta(&rat(1, 2), k as u64, 3);
            let den = poch_finite_at_zeta(&rat_i(1), k as u64, 3);
            let want = num.mul(&num).mul(&den.mul(&den).inv());
            assert_eq!(got, &want, "k = {}", k);
        }
    }

    #[test]
    fn both_legendre_deformations_agree_at_the_unit_center() {
        let a = build_omega_class(&HGData::legendre(), 1, 1).unwrap();
        let b = build_omega_class(&HGData::legendre_shirai(), 1, 1).unwrap();
        assert_eq!(a.constant_term().unwrap(), b.constant_term().unwrap());
    }

    #[test]
    fn beta_normalization_for_half_parameters() {
        let om = build_omega_class(&HGData::legendre_shirai(), 1, 3).unwrap();
        let b = om.beta_norm.as_ref().unwrap();
        let direct = q_beta_at_root(&rat(1, 2), &rat(1, 2), 1, 5).unwrap();
        assert_eq!(om.lead_exponent, rat_i(-1));
        assert_eq!(b.lead_exponent(), direct.lead_exponent());
        assert_eq!(b.lead_coeff(), direct.lead_coeff());
        assert!(om.lead_exponent >= rat_i(-(om.dim as i64 + 1)));
    }

    #[test]
    fn quintic_class_is_regular_at_the_unit_center() {
        let om = build_omega_class(&HGData::quintic(), 1, 1).unwrap();
        assert_eq!(om.dim, 3);
        assert_eq!(om.lead_exponent, rat_i(0));
        assert_eq!(om.constant_term().unwrap(), vec![CycloNum::from_int(1)]);
    }
}
