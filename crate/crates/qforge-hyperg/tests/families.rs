//! Cross-module checks on the built-in families: expansion operators against
//! directly computed jets at several centers, operator compatibility on full
//! Frobenius bases, p-adic growth of the remainder tower, and integrality of
//! factorial-ratio q-coefficients.

use proptest::prelude::*;
use qforge_hyperg::compat::qpf_compat_check;
use qforge_hyperg::dm::q_coeff_jet;
use qforge_hyperg::{
    build_dm, classical_coeffs, dm_remainder, q_coeffs, remainder_valuations, HGData, HypergError,
};
use qforge_rings::nt::gcd_u64;
use qforge_rings::CycloNum;

fn families() -> Vec<HGData> {
    vec![HGData::legendre(), HGData::legendre_shirai(), HGData::quintic()]
}

#[test]
fn expansion_operators_reproduce_jets_at_small_roots() {
    for data in families() {
        for m in 1..=3u64 {
            if gcd_u64(m, data.denominator()) != 1 {
                assert!(matches!(
                    build_dm(&data, m, 2),
                    Err(HypergError::NotCoprime { .. })
                ));
                continue;
            }
            let dm = build_dm(&data, m, 2).unwrap();
            let image = dm.apply_bracketed(&data, 9);
            for (k, row) in image.iter().enumerate() {
                let (val, unit) = q_coeff_jet(&data, k as u64, m, 3);
                for (t, got) in row.iter().enumerate() {
                    let idx = t as i64 - val;
                    let want = if idx < 0 {
                        CycloNum::from_int(0)
                    } else {
                        unit.coeff(idx as usize)
                    };
                    assert_eq!(got, &want, "m = {}, k = {}, power {}", m, k, t);
                }
            }
        }
    }
}

#[test]
fn operator_composition_vanishes_on_frobenius_bases() {
    assert!(qpf_compat_check(&HGData::legendre(), 2, 9).unwrap());
    assert!(qpf_compat_check(&HGData::legendre_shirai(), 2, 9).unwrap());
    assert!(qpf_compat_check(&HGData::quintic(), 2, 7).unwrap());
}

#[test]
fn remainder_tower_valuations_grow_logarithmically() {
    let data = HGData::legendre();
    let dm = build_dm(&data, 1, 12).unwrap();
    let rem = dm_remainder(&dm, &data).unwrap();
    // Observed offset c = 0 for each prime: val R_k >= -ceil(log_p k), with
    // the first dip to -1 happening at k = p - 1.
    for p in [7u64, 11, 13] {
        let vals = remainder_valuations(&rem, p, 12);
        let mut worst = i64::MIN;
        for (k, v) in vals.iter().enumerate().skip(1) {
            let mut bound = 0i64;
            let mut pw = 1u64;
            while (pw as usize) < k {
                pw *= p;
                bound += 1;
            }
            assert!(
                *v >= -bound,
                "p = {}, k = {}: valuation {} under -{}",
                p,
                k,
                v,
                bound
            );
            worst = worst.max(-bound - v);
        }
        assert_eq!(worst, 0, "p = {}", p);
        assert_eq!(vals[p as usize - 1], -1, "p = {}", p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    // Sums of multinomial splittings keep the factorial ratio integral, so
    // the q-coefficients must live in Z[q].
    #[test]
    fn factorial_ratio_q_coefficients_are_integral(
        pairs in proptest::collection::vec((1u64..=3, 1u64..=3), 1..=2),
        t in 1usize..=4,
    ) {
        let a: Vec<u64> = pairs.iter().map(|(u, v)| u + v).collect();
        let b: Vec<u64> = pairs.iter().flat_map(|(u, v)| [*u, *v]).collect();
        let data = HGData::from_factorial(a, b);
        prop_assume!(data.is_ok());
        let data = data.unwrap();
        let series = q_coeffs(&data, t);
        for (k, c) in series.coeffs.iter().enumerate() {
            let p = c.as_poly().expect("coefficient must be polynomial");
            for w in &p.c {
                prop_assert!(w.is_integer(), "k = {}: {:?}", k, w);
            }
        }
        // The q = 1 limit recovers the classical ratio.
        prop_assert_eq!(series.at_one(), classical_coeffs(&data, t));
    }
}

#[test]
fn integral_coefficients_are_nontrivial_for_the_builtin_families() {
    for data in [HGData::legendre(), HGData::quintic()] {
        let series = q_coeffs(&data, 4);
        for c in &series.coeffs {
            let p = c.as_poly().unwrap();
            assert!(p.c.iter().all(|w| w.is_integer()));
        }
        assert!(series.coeffs[2].as_poly().unwrap().degree().unwrap() > 0);
    }
}
