//! Fitting a linear q-shift relation to a truncated series.
//!
//! The ansatz is sum_{j<=J, i<=D} c_{j,i}(q) lambda^i sigma^j, optionally plus
//! a polynomial right-hand side of lambda-degree <= D; the lambda-degree is
//! grown from zero up to D so the smallest relation wins. The q-degree of each
//! unknown coefficient is capped and the cap doubled on failure, which turns
//! the problem into a linear system over Q: one equation per power of q per
//! lambda-order. A modular elimination pass picks out an independent set of
//! equations, the small subsystem is solved exactly, and any candidate must
//! reproduce every supplied term, including a held-back quarter that never
//! enters the fit. The result is content-normalized, with no claim of
//! minimality.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use qforge_rings::linalg::Matrix;
use qforge_rings::poly::Poly;
use qforge_rings::rat::Rat;
use qforge_rings::ring::Ring;

use crate::polyops::{primitive_family, sign_normalize};
use crate::qdiff::{QDiffOperator, QPoly};
use crate::OpalgError;

#[derive(Clone, Debug)]
pub struct GuessReport {
    pub op: QDiffOperator<QPoly>,
    /// Right-hand side polynomial for an inhomogeneous relation op(f) = rhs;
    /// zero in the homogeneous case.
    pub rhs: Poly<QPoly>,
    pub fit_terms: usize,
    pub holdout_terms: usize,
}

/// Number of supplied terms required so that, after holding out a quarter,
/// the fit still has more equations than unknowns.
pub fn required_terms(max_shift: usize, max_deg: usize, inhomogeneous: bool) -> usize {
    let unknowns = (max_shift + 1) * (max_deg + 1) + if inhomogeneous { max_deg + 1 } else { 0 };
    let mut total = unknowns + 2;
    loop {
        let holdout = (total / 4).max(1);
        if total - holdout > unknowns {
            return total;
        }
        total += 1;
    }
}

const COEFF_DEGREE_BOUNDS: [usize; 3] = [4, 8, 16];
const PRIMES: [u64; 3] = [1_000_000_007, 998_244_353, 1_000_000_033];

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn rat_mod(r: &Rat, p: u64) -> Option<u64> {
    let pm = BigInt::from(p);
    let n = (((r.numer() % &pm) + &pm) % &pm).to_u64().unwrap();
    let d = (((r.denom() % &pm) + &pm) % &pm).to_u64().unwrap();
    if d == 0 {
        return None;
    }
    let inv = mod_pow(d, p - 2, p);
    Some(((n as u128 * inv as u128) % p as u128) as u64)
}

/// row -= c * pivot mod p, where the pivot row is normalized to lead with 1.
fn submul(row: &mut [u64], pivot: &[u64], c: u64, p: u64) {
    if c == 0 {
        return;
    }
    let mc = (p - c) as u128;
    for (r, &s) in row.iter_mut().zip(pivot) {
        if s != 0 {
            *r = ((*r as u128 + mc * s as u128) % p as u128) as u64;
        }
    }
}

/// Sorted-by-leading-column echelon basis; returns true if the offered row
/// was independent of the rows already held.
fn offer(
    pivots: &mut Vec<(usize, Vec<u64>, (usize, i64))>,
    mut row: Vec<u64>,
    origin: (usize, i64),
    p: u64,
) -> bool {
    for (lead, prow, _) in pivots.iter() {
        let c = row[*lead];
        if c != 0 {
            submul(&mut row, prow, c, p);
        }
    }
    let lead = match row.iter().position(|&x| x != 0) {
        Some(l) => l,
        None => return false,
    };
    let inv = mod_pow(row[lead], p - 2, p);
    for x in row.iter_mut() {
        *x = ((*x as u128 * inv as u128) % p as u128) as u64;
    }
    let at = pivots.partition_point(|(l, _, _)| *l < lead);
    pivots.insert(at, (lead, row, origin));
    true
}

enum Attempt {
    Solved(Box<GuessReport>),
    /// The system is certifiably full rank: no relation at this degree cap.
    Empty,
    Mismatch(usize),
    BadPrime,
}

/// Shifted series blocks for one lambda-order: entry (j, i) is
/// q^{j(n-i)} f_{n-i}, the multiplier of c_{j,i} in row n.
fn row_blocks(f: &[QPoly], n: usize, max_shift: usize, max_deg: usize) -> Vec<QPoly> {
    let mut g = Vec::with_capacity((max_shift + 1) * (max_deg + 1));
    for j in 0..=max_shift {
        for i in 0..=max_deg {
            if n >= i {
                g.push(f[n - i].shift(j as i64 * (n - i) as i64));
            } else {
                g.push(QPoly::zero());
            }
        }
    }
    g
}

fn solve_at(
    f: &[QPoly],
    max_shift: usize,
    max_deg: usize,
    inhomogeneous: bool,
    bound: usize,
    p: u64,
    fit: usize,
    holdout: usize,
) -> Attempt {
    let op_blocks = (max_shift + 1) * (max_deg + 1);
    let rhs_blocks = if inhomogeneous { max_deg + 1 } else { 0 };
    let width = bound + 1;
    let cols = (op_blocks + rhs_blocks) * width;

    let mut pivots: Vec<(usize, Vec<u64>, (usize, i64))> = Vec::new();
    for n in 0..fit {
        let g = row_blocks(f, n, max_shift, max_deg);
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for b in &g {
            if let (Some(v), Some(d)) = (b.val(), b.deg()) {
                lo = lo.min(v);
                hi = hi.max(d + bound as i64);
            }
        }
        if inhomogeneous && n <= max_deg {
            lo = lo.min(0);
            hi = hi.max(bound as i64);
        }
        if lo > hi {
            continue;
        }
        for e in lo..=hi {
            let mut row = vec![0u64; cols];
            let mut nonzero = false;
            for (b, blk) in g.iter().enumerate() {
                for d in 0..=bound {
                    let c = blk.coeff(e - d as i64);
                    if !Ring::is_zero(&c) {
                        match rat_mod(&c, p) {
                            Some(m) => row[b * width + d] = m,
                            None => return Attempt::BadPrime,
                        }
                        nonzero = true;
                    }
                }
            }
            if inhomogeneous && n <= max_deg && e >= 0 && e <= bound as i64 {
                row[(op_blocks + n) * width + e as usize] = p - 1;
                nonzero = true;
            }
            if nonzero && offer(&mut pivots, row, (n, e), p) && pivots.len() == cols {
                return Attempt::Empty;
            }
        }
    }

    // Exact nullspace of the subsystem the modular pass singled out. Its
    // nullspace contains the full system's, so emptiness here is definitive
    // and every candidate gets checked against all supplied terms below.
    let mut rows = Vec::with_capacity(pivots.len());
    for (_, _, (n, e)) in &pivots {
        let g = row_blocks(f, *n, max_shift, max_deg);
        let mut row = vec![Rat::from_i64(0); cols];
        for (b, blk) in g.iter().enumerate() {
            for d in 0..=bound {
                row[b * width + d] = blk.coeff(e - d as i64);
            }
        }
        if inhomogeneous && *n <= max_deg && *e >= 0 && *e <= bound as i64 {
            row[(op_blocks + n) * width + *e as usize] = Rat::from_i64(-1);
        }
        rows.push(row);
    }
    let null = Matrix::from_rows(rows).nullspace();
    if null.is_empty() {
        return Attempt::Empty;
    }

    let mut first_bad = None;
    'cand: for v in &null {
        if v[..op_blocks * width].iter().all(|c| Ring::is_zero(c)) {
            continue;
        }
        let mut family: Vec<QPoly> = Vec::with_capacity(op_blocks + rhs_blocks);
        for b in 0..op_blocks + rhs_blocks {
            family.push(QPoly::new(0, v[b * width..(b + 1) * width].to_vec()));
        }
        let mut fam = primitive_family(&family);
        sign_normalize(&mut fam);
        let coeffs: Vec<Poly<QPoly>> = (0..=max_shift)
            .map(|j| Poly::new(fam[j * (max_deg + 1)..(j + 1) * (max_deg + 1)].to_vec()))
            .collect();
        let rhs = if inhomogeneous {
            Poly::new(fam[op_blocks..op_blocks + rhs_blocks].to_vec())
        } else {
            Poly::zero()
        };
        let op = QDiffOperator::new(1, coeffs);
        let image = op.apply(f, f.len() - 1);
        for (n, val) in image.iter().enumerate() {
            if val != &rhs.coeff(n) {
                first_bad.get_or_insert(n);
                continue 'cand;
            }
        }
        return Attempt::Solved(Box::new(GuessReport {
            op,
            rhs,
            fit_terms: fit,
            holdout_terms: holdout,
        }));
    }
    match first_bad {
        Some(n) => Attempt::Mismatch(n),
        None => Attempt::Empty,
    }
}

pub fn guess_qdiff(
    f: &[QPoly],
    max_shift: usize,
    max_deg: usize,
    inhomogeneous: bool,
) -> Result<GuessReport, OpalgError> {
    let required = required_terms(max_shift, max_deg, inhomogeneous);
    if f.len() < required {
        return Err(OpalgError::Underdetermined { supplied: f.len(), required });
    }
    let holdout = (f.len() / 4).max(1);
    let fit = f.len() - holdout;

    // Grow the lambda-degree of the ansatz from zero so the smallest relation
    // wins; otherwise every lambda-multiple of it pollutes the nullspace.
    let mut mismatch = None;
    for d in 0..=max_deg {
        for bound in COEFF_DEGREE_BOUNDS {
            for p in PRIMES {
                match solve_at(f, max_shift, d, inhomogeneous, bound, p, fit, holdout) {
                    Attempt::Solved(report) => return Ok(*report),
                    Attempt::Empty => break,
                    Attempt::Mismatch(n) => {
                        mismatch = Some(n);
                    }
                    Attempt::BadPrime => {}
                }
            }
        }
    }
    match mismatch {
        Some(index) => Err(OpalgError::HoldoutMismatch { index }),
        None => Err(OpalgError::NoRelation),
    }
}
