//! Classical and q-deformed coefficient series of a family.

use qforge_opalg::classical::{factorial_series, qc_poch_v};
use qforge_rings::poly::Poly;
use qforge_rings::rat::{rat_i, Rat};
use qforge_rings::ratfunc::RatFunc;
use qforge_rings::Ring;

use crate::data::{DeformStyle, HGData};

/// Which coefficient world to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Classical,
    Q,
}

/// Truncated coefficient list. Entries are rational functions of the base
/// variable v = q^{1/step} so both variants share one carrier; classical
/// coefficients are the constant functions.
#[derive(Clone, Debug, PartialEq)]
pub struct HgSeries {
    pub step: u64,
    pub coeffs: Vec<RatFunc<Rat>>,
}

impl HgSeries {
    /// Evaluation at q = 1.
    pub fn at_one(&self) -> Vec<Rat> {
        self.coeffs.iter().map(|c| c.eval(&rat_i(1))).collect()
    }
}

/// Rising factorial (c)_k.
pub(crate) fn rising(c: &Rat, k: usize) -> Rat {
    let mut acc = rat_i(1);
    for i in 0..k {
        acc *= c + rat_i(i as i64);
    }
    acc
}

/// Classical coefficients scale^k prod (alpha_j)_k / prod (beta_j)_k,
/// indices 0..=t.
pub fn classical_coeffs(data: &HGData, t: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(t + 1);
    let mut cur = rat_i(1);
    out.push(cur.clone());
    for k in 0..t as i64 {
        cur *= &data.scale;
        for a in &data.alpha {
            cur *= a + rat_i(k);
        }
        for b in &data.beta {
            cur /= b + rat_i(k);
        }
        out.push(cur.clone());
    }
    out
}

/// q-coefficients per the family's deformation style, indices 0..=t.
pub fn q_coeffs(data: &HGData, t: usize) -> HgSeries {
    match (&data.style, &data.factorial) {
        (DeformStyle::Factorial, Some((a, b))) => {
            let coeffs = factorial_series(a, b, t)
                .iter()
                .map(|c| {
                    let (p, shift) = c.to_poly_shifted();
                    assert!(shift >= 0, "factorial q-coefficient with a pole at q = 0");
                    RatFunc::from_poly(p.mul(&Poly::monomial(Rat::one(), shift as usize)))
                })
                .collect();
            HgSeries { step: 1, coeffs }
        }
        _ => {
            let step = data.denominator();
            let coeffs = (0..=t as u64)
                .map(|k| {
                    let mut num = Poly::one();
                    for a in &data.alpha {
                        let (p, s) = qc_poch_v(a, k, step).to_poly_shifted();
                        assert!(s >= 0);
                        num = num.mul(&p).mul(&Poly::monomial(Rat::one(), s as usize));
                    }
                    let mut den = Poly::one();
                    for b in &data.beta {
                        let (p, s) = qc_poch_v(b, k, step).to_poly_shifted();
                        assert!(s >= 0);
                        den = den.mul(&p).mul(&Poly::monomial(Rat::one(), s as usize));
                    }
                    RatFunc::new(num, den)
                })
                .collect();
            HgSeries { step, coeffs }
        }
    }
}

pub fn hg_series(data: &HGData, variant: Variant, t: usize) -> HgSeries {
    match variant {
        Variant::Classical => HgSeries {
            step: 1,
            coeffs: classical_coeffs(data, t).into_iter().map(RatFunc::constant).collect(),
        },
        Variant::Q => q_coeffs(data, t),
    }
}
