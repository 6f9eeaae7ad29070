//! Compatibility of the q-difference annihilator with the unit-center
//! expansion operator: composing the two kills every member of the Frobenius
//! basis, which is the solution-level form of the operator identity
//! qpf . D_1 = R . pf.
//!
//! Computations run in a bi-jet ring: h-series (q = e^h) whose coefficients
//! are eps-polynomials truncated at the group's log order. Residuals are
//! trusted through h^K when the expansion operator is built to order K.

use qforge_opalg::classical::{qpf_factorial_operator, qpf_operator};
use qforge_opalg::qdiff::{QDiffOperator, QPoly};
use qforge_rings::rat::{rat, rat_i};
use qforge_rings::{Poly, Rat, Ring, Tps};

use crate::data::{DeformStyle, HGData};
use crate::dm::unit_blocks;
use crate::frob::frobenius_basis;
use crate::HypergError;

/// h-series with eps-polynomial coefficients.
type BiJet = Tps<Poly<Rat>>;

fn eps_trunc(p: &Poly<Rat>, d: usize) -> Poly<Rat> {
    Poly::new(p.c.iter().take(d).cloned().collect())
}

fn bi_mul(a: &BiJet, b: &BiJet, d: usize) -> BiJet {
    a.mul(b).map(|p| eps_trunc(p, d))
}

fn lift(f: &Tps<Rat>) -> BiJet {
    f.map(|r| Poly::new(vec![r.clone()]))
}

/// e^{c h} as an h-series.
fn exp_rat_h(c: &Rat, len: usize) -> Tps<Rat> {
    let mut v = Vec::with_capacity(len);
    let mut cur = rat_i(1);
    for k in 0..len {
        v.push(cur.clone());
        cur = cur * c / rat_i(k as i64 + 1);
    }
    Tps::new(v)
}

/// e^{j eps h}: the h^t coefficient is j^t eps^t / t!.
fn exp_eps_h(j: u64, d: usize, len: usize) -> BiJet {
    let mut v = Vec::with_capacity(len);
    let mut cur = rat_i(1);
    for t in 0..len {
        if t < d {
            v.push(Poly::monomial(cur.clone(), t));
        } else {
            v.push(Poly::new(Vec::new()));
        }
        cur = cur * rat_i(j as i64) / rat_i(t as i64 + 1);
    }
    Tps::new(v)
}

/// Evaluate a Laurent polynomial in v = q^{1/step} at q = e^h.
fn embed_qpoly(p: &QPoly, step: u64, len: usize) -> Tps<Rat> {
    let mut acc = Tps::zero(len);
    for (i, w) in p.c.iter().enumerate() {
        if Ring::is_zero(w) {
            continue;
        }
        let r = rat(p.lo + i as i64, step as i64);
        acc = acc.add(&exp_rat_h(&r, len).scale(w));
    }
    acc
}

/// Apply the given q-difference operator to the expansion-operator image of
/// the full Frobenius basis; true when every residual vanishes through
/// lambda-order t_order and h-order k_order.
pub fn compat_with_operator(
    data: &HGData,
    qpf: &QDiffOperator,
    k_order: usize,
    t_order: usize,
) -> Result<bool, HypergError> {
    let blocks = unit_blocks(data, k_order);
    let basis = frobenius_basis(data, t_order)?;
    let hl = k_order + 2;
    let x = exp_rat_h(&rat_i(1), hl).sub(&Tps::one(hl));
    let mut xpow = vec![Tps::one(hl)];
    for t in 1..=k_order {
        xpow.push(xpow[t - 1].mul(&x));
    }
    for g in &basis.groups {
        let d = g.eps_order;
        let mut c: Vec<BiJet> = Vec::with_capacity(t_order + 1);
        for n in 0..=t_order {
            let n0 = rat_i(n as i64 + 1) - &g.beta_value;
            let mut gsum: BiJet = Tps::zero(hl);
            for (t, blk) in blocks.iter().enumerate() {
                let ep = eps_trunc(&blk.compose(&Poly::new(vec![n0.clone(), rat_i(1)])), d);
                gsum = gsum.add(&xpow[t].map(|r| ep.scale(r)));
            }
            let an = Poly::new(g.coeffs[n].c.clone());
            c.push(gsum.map(|p| eps_trunc(&p.mul(&an), d)));
        }
        let mut out = vec![Tps::<Poly<Rat>>::zero(hl); t_order + 1];
        for (j, aj) in qpf.a.iter().enumerate() {
            let ee = exp_eps_h(j as u64, d, hl);
            for (e, w) in aj.c.iter().enumerate() {
                if Ring::is_zero(w) {
                    continue;
                }
                let wj = lift(&embed_qpoly(w, qpf.step, hl));
                for m in e..=t_order {
                    let n = m - e;
                    let shift = rat_i(j as i64) * (rat_i(n as i64 + 1) - &g.beta_value);
                    let qe = lift(&exp_rat_h(&shift, hl));
                    let term = bi_mul(&bi_mul(&wj, &qe, d), &bi_mul(&ee, &c[n], d), d);
                    out[m] = out[m].add(&term);
                }
            }
        }
        for layer in &out {
            for s in 0..=k_order {
                if !Ring::is_zero(&layer.coeff(s)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Build the family's own q-difference annihilator and run the check.
pub fn qpf_compat_check(
    data: &HGData,
    k_order: usize,
    t_order: usize,
) -> Result<bool, HypergError> {
    let qpf = match (&data.style, &data.factorial) {
        (DeformStyle::Factorial, Some((a, b))) => qpf_factorial_operator(a, b),
        _ => qpf_operator(&data.alpha, &data.beta)?,
    };
    compat_with_operator(data, &qpf, k_order, t_order)
}
