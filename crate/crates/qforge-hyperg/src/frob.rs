//! Frobenius bases at lambda = 0: one solution group per distinct lower
//! parameter value b, carrying the eps-jet of lambda^{1 - b + eps} times a
//! power series. Parameters in (0, 1] keep distinct groups from differing by
//! integers, so the coefficient recurrence never divides by an eps-jet with
//! vanishing constant term.

use qforge_opalg::WeylOperator;
use qforge_rings::rat::rat_i;
use qforge_rings::{Rat, Ring, Tps};

use crate::data::HGData;
use crate::HypergError;

/// Solutions with leading exponent 1 - beta_value: the term n of the series
/// carries lambda^{n + 1 - beta_value + eps}, and coeffs[n] is the eps-jet
/// of its coefficient, truncated at the multiplicity of beta_value.
#[derive(Clone, Debug)]
pub struct FrobeniusGroup {
    pub beta_value: Rat,
    pub eps_order: usize,
    pub coeffs: Vec<Tps<Rat>>,
}

#[derive(Clone, Debug)]
pub struct FrobeniusFamily {
    pub groups: Vec<FrobeniusGroup>,
}

/// eps-jet with constant part c and unit eps-slope, truncated to len d.
fn eps_linear(c: Rat, d: usize) -> Tps<Rat> {
    let mut v = vec![Rat::zero(); d];
    v[0] = c;
    if d > 1 {
        v[1] = Rat::one();
    }
    Tps::new(v)
}

pub fn frobenius_basis(data: &HGData, t_order: usize) -> Result<FrobeniusFamily, HypergError> {
    let mut groups = Vec::new();
    let mut seen: Vec<Rat> = Vec::new();
    for b in &data.beta {
        if seen.contains(b) {
            continue;
        }
        seen.push(b.clone());
        let d = data.beta.iter().filter(|x| *x == b).count();
        let mut coeffs = vec![Tps::one(d)];
        for n in 0..t_order {
            let mut next = coeffs[n].scale(&data.scale);
            for a in &data.alpha {
                next = next.mul(&eps_linear(a + rat_i(1) - b + rat_i(n as i64), d));
            }
            for bj in &data.beta {
                next = next.div(&eps_linear(bj + rat_i(1) - b + rat_i(n as i64), d));
            }
            coeffs.push(next);
        }
        groups.push(FrobeniusGroup { beta_value: b.clone(), eps_order: d, coeffs });
    }
    Ok(FrobeniusFamily { groups })
}

/// Apply a theta-lambda operator to the group's solution jet after clearing
/// denominators; entry N of the result is the eps-jet multiplying
/// lambda^{N + 1 - beta_value + eps}. Annihilation shows as zero jets.
pub fn apply_weyl_to_group(op: &WeylOperator, g: &FrobeniusGroup, t: usize) -> Vec<Tps<Rat>> {
    let (_, polys) = op.clear_denominators();
    let d = g.eps_order;
    let t = t.min(g.coeffs.len().saturating_sub(1));
    let mut out = vec![Tps::zero(d); t + 1];
    for (i, p) in polys.iter().enumerate() {
        for (e, w) in p.c.iter().enumerate() {
            if Ring::is_zero(w) {
                continue;
            }
            for bign in e..=t {
                let theta = eps_linear(
                    rat_i(1) - &g.beta_value + rat_i((bign - e) as i64),
                    d,
                );
                let mut term = g.coeffs[bign - e].clone();
                for _ in 0..i {
                    term = term.mul(&theta);
                }
                out[bign] = out[bign].add(&term.scale(w));
            }
        }
    }
    out
}
