//! Family data: balanced parameter lists in (0,1], factorial-ratio
//! presentations, and the bracket images governing expansions at a root of
//! unity.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use qforge_qpoch::bracket;
use qforge_rings::nt::lcm_u64;
use qforge_rings::rat::{rat, rat_i, Rat};

use crate::HypergError;

/// Shape of the q-deformed coefficient attached to the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeformStyle {
    /// Products of (q;q)_{a_i k} over (q;q)_{b_j k} from a factorial ratio.
    Factorial,
    /// Products of (q^{alpha_j};q)_k over (q^{beta_j};q)_k.
    Pochhammer,
}

/// A balanced hypergeometric family with parameters in (0,1].
///
/// Classical coefficients are scale^k prod_j (alpha_j)_k / (beta_j)_k; the
/// q-coefficients follow the deformation style. Factorial presentations keep
/// the generating integer vectors so both coefficient worlds can be built
/// from factorials directly.
#[derive(Clone, Debug, PartialEq)]
pub struct HGData {
    /// Upper parameters, sorted ascending.
    pub alpha: Vec<Rat>,
    /// Lower parameters, sorted ascending; the last entry is 1.
    pub beta: Vec<Rat>,
    /// Rescaling of the classical variable.
    pub scale: Rat,
    /// Generating vectors (a, b) when presented as a factorial ratio.
    pub factorial: Option<(Vec<u64>, Vec<u64>)>,
    pub style: DeformStyle,
}

fn check_lists(alpha: &[Rat], beta: &[Rat]) -> Result<(), HypergError> {
    if alpha.is_empty() || alpha.len() != beta.len() {
        return Err(HypergError::Unbalanced);
    }
    let bad = |msg: &str| Err(HypergError::BadParameters(msg.to_string()));
    for c in alpha.iter().chain(beta.iter()) {
        if *c <= rat_i(0) || *c > rat_i(1) {
            return bad("parameters must lie in (0,1]");
        }
    }
    if *beta.last().unwrap() != rat_i(1) {
        return bad("lower parameters must contain a unit entry");
    }
    if alpha.iter().any(|a| beta.contains(a)) {
        return bad("upper and lower parameters must be disjoint");
    }
    for (a, b) in alpha.iter().zip(beta.iter()) {
        if a >= b {
            return bad("paired parameters must be strictly increasing");
        }
    }
    Ok(())
}

impl HGData {
    pub fn from_params(mut alpha: Vec<Rat>, mut beta: Vec<Rat>) -> Result<Self, HypergError> {
        alpha.sort();
        beta.sort();
        check_lists(&alpha, &beta)?;
        Ok(HGData {
            alpha,
            beta,
            scale: rat_i(1),
            factorial: None,
            style: DeformStyle::Pochhammer,
        })
    }

    /// Family of the coefficient ratio prod (a_i k)! / prod (b_j k)!.
    /// The expanded parameter multisets {i/a_i} and {j/b_j} are cancelled
    /// against each other; the classical rescaling is prod a^a / prod b^b.
    pub fn from_factorial(a: Vec<u64>, b: Vec<u64>) -> Result<Self, HypergError> {
        if a.is_empty() || b.is_empty() || a.contains(&0) || b.contains(&0) {
            return Err(HypergError::Unbalanced);
        }
        if a.iter().sum::<u64>() != b.iter().sum::<u64>() {
            return Err(HypergError::Unbalanced);
        }
        let expand = |v: &[u64]| -> Vec<Rat> {
            let mut out = Vec::new();
            for &e in v {
                for i in 1..=e {
                    out.push(rat(i as i64, e as i64));
                }
            }
            out.sort();
            out
        };
        let mut alpha = expand(&a);
        let mut beta = expand(&b);
        // Multiset cancellation of common entries.
        let mut i = 0;
        while i < alpha.len() {
            if let Some(j) = beta.iter().position(|x| *x == alpha[i]) {
                alpha.remove(i);
                beta.remove(j);
            } else {
                i += 1;
            }
        }
        check_lists(&alpha, &beta)?;
        let mut scale = rat_i(1);
        for &e in &a {
            scale *= Rat::from_integer(BigInt::from(e).pow(e as u32));
        }
        for &e in &b {
            scale /= Rat::from_integer(BigInt::from(e).pow(e as u32));
        }
        Ok(HGData {
            alpha,
            beta,
            scale,
            factorial: Some((a, b)),
            style: DeformStyle::Factorial,
        })
    }

    /// (2k)!^2 / k!^4, the Legendre family in its factorial presentation.
    pub fn legendre() -> Self {
        HGData::from_factorial(vec![2, 2], vec![1, 1, 1, 1]).unwrap()
    }

    /// The Legendre parameters (1/2,1/2;1,1) deformed through q^{1/2}.
    pub fn legendre_shirai() -> Self {
        HGData::from_params(vec![rat(1, 2), rat(1, 2)], vec![rat_i(1), rat_i(1)]).unwrap()
    }

    /// (5k)! / k!^5.
    pub fn quintic() -> Self {
        HGData::from_factorial(vec![5], vec![1, 1, 1, 1, 1]).unwrap()
    }

    /// Number of parameters on each side, n+1.
    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    /// Cohomological dimension n.
    pub fn dim(&self) -> usize {
        self.alpha.len() - 1
    }

    /// Common denominator of all parameters.
    pub fn denominator(&self) -> u64 {
        let mut n = 1;
        for c in self.alpha.iter().chain(self.beta.iter()) {
            n = lcm_u64(n, c.denom().to_u64().expect("parameter denominator overflow"));
        }
        n
    }

    /// Bracket images of the parameter lists at order m, sorted.
    pub fn bracketed(&self, m: u64) -> (Vec<Rat>, Vec<Rat>) {
        let mut a: Vec<Rat> = self.alpha.iter().map(|c| bracket(c, m)).collect();
        let mut b: Vec<Rat> = self.beta.iter().map(|c| bracket(c, m)).collect();
        a.sort();
        b.sort();
        (a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_presentations_reduce() {
        let leg = HGData::legendre();
        assert_eq!(leg.alpha, vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(leg.beta, vec![rat_i(1), rat_i(1)]);
        assert_eq!(leg.scale, rat_i(16));
        assert_eq!(leg.denominator(), 2);
        assert_eq!(leg.dim(), 1);

        let q = HGData::quintic();
        assert_eq!(q.alpha, vec![rat(1, 5), rat(2, 5), rat(3, 5), rat(4, 5)]);
        assert_eq!(q.beta, vec![rat_i(1); 4]);
        assert_eq!(q.scale, rat_i(3125));
        assert_eq!(q.dim(), 3);

        // Central binomial: (2k)!/k!^2 reduces to a single parameter pair.
        let c = HGData::from_factorial(vec![2], vec![1, 1]).unwrap();
        assert_eq!(c.alpha, vec![rat(1, 2)]);
        assert_eq!(c.beta, vec![rat_i(1)]);
        assert_eq!(c.scale, rat_i(4));
    }

    #[test]
    fn degenerate_data_rejected() {
        assert!(HGData::from_params(vec![rat_i(1)], vec![rat_i(1)]).is_err());
        assert!(HGData::from_factorial(vec![1], vec![1]).is_err());
        assert!(HGData::from_factorial(vec![2, 2], vec![1, 1, 1]).is_err());
        assert!(HGData::from_params(vec![rat(1, 2)], vec![rat(1, 2)]).is_err());
        assert!(HGData::from_params(vec![rat(3, 2)], vec![rat_i(1)]).is_err());
        // A unit entry must close the lower list.
        assert!(HGData::from_params(vec![rat(1, 3)], vec![rat(1, 2)]).is_err());
    }

    #[test]
    fn brackets_permute_complete_residue_sets() {
        // Expanded factorial parameter sets are unions of full residue
        // systems, so brackets permute them and the sorted lists are fixed.
        for data in [HGData::legendre(), HGData::quintic()] {
            for m in [1u64, 3, 7, 9] {
                let (a, b) = data.bracketed(m);
                assert_eq!(a, data.alpha);
                assert_eq!(b, data.beta);
            }
        }
        // The half-parameter family is fixed as a set as well.
        let s = HGData::legendre_shirai();
        let (a, _) = s.bracketed(3);
        assert_eq!(a, s.alpha);
        // A denominator-5 parameter moves: [1/5]_3 = 2/5.
        assert_eq!(bracket(&rat(1, 5), 3), rat(2, 5));
    }
}
