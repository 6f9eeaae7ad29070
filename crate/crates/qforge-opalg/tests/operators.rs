//! Structural laws of the two operator algebras and of the fitting pipeline.
//!
//! Division is checked by multiplying back, the shift algebra by associativity
//! and the sigma-lambda commutation rule, the q = e^h degeneration against the
//! classical differential operator, and the relation guesser by applying its
//! output to terms it never saw during the fit.

use proptest::prelude::*;
use qforge_opalg::weyl::WeylOperator;
use qforge_opalg::{guess_qdiff, hbar_degenerate, pf_operator, qpf_operator, QDiffOperator, QPoly};
use qforge_rings::poly::Poly;
use qforge_rings::rat::{rat, rat_i, Rat};
use qforge_rings::ring::Ring;

fn weyl_from_rows(rows: &[Vec<i64>]) -> WeylOperator {
    WeylOperator::from_polys(
        rows.iter().map(|r| Poly::new(r.iter().map(|&c| rat_i(c)).collect())).collect(),
    )
}

/// Shift operator with monomial q-coefficients: entry (j, i) holds c q^e.
fn qdiff_from_rows(rows: &[Vec<(i64, i64)>]) -> QDiffOperator<QPoly> {
    QDiffOperator::new(
        1,
        rows.iter()
            .map(|r| Poly::new(r.iter().map(|&(c, e)| QPoly::monomial(rat_i(c), e)).collect()))
            .collect(),
    )
}

fn small_params() -> impl Strategy<Value = Rat> {
    prop::sample::select(vec![rat(1, 2), rat(1, 3), rat(2, 3), rat(1, 4), rat(3, 4)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn right_division_multiplies_back(
        d_rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 1..=4), 1..=5),
        p_rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 1..=4), 1..=5),
    ) {
        let d = weyl_from_rows(&d_rows);
        let p = weyl_from_rows(&p_rows);
        prop_assume!(!p.is_zero());
        let (q, r) = d.right_divide(&p).unwrap();
        prop_assert_eq!(q.mul(&p).add(&r), d);
        match (r.deg(), p.deg()) {
            (Some(rd), Some(pd)) => prop_assert!(rd < pd),
            (None, _) => {}
            (Some(_), None) => prop_assert!(false, "nonzero remainder for zero divisor"),
        }
    }

    #[test]
    fn shift_algebra_is_associative(
        a_rows in prop::collection::vec(prop::collection::vec((-3i64..=3, -2i64..=2), 1..=3), 1..=3),
        b_rows in prop::collection::vec(prop::collection::vec((-3i64..=3, -2i64..=2), 1..=3), 1..=3),
        c_rows in prop::collection::vec(prop::collection::vec((-3i64..=3, -2i64..=2), 1..=3), 1..=3),
    ) {
        let a = qdiff_from_rows(&a_rows);
        let b = qdiff_from_rows(&b_rows);
        let c = qdiff_from_rows(&c_rows);
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn sigma_lambda_commutation(j in 0usize..=4, k in 0usize..=4) {
        // sigma^j lambda^k = q^{jk} lambda^k sigma^j
        let lam_k = QDiffOperator::new(1, vec![Poly::monomial(QPoly::one(), k)]);
        let lhs = QDiffOperator::sigma(1).pow(j).mul(&lam_k);
        let mut coeffs = vec![Poly::zero(); j + 1];
        coeffs[j] = Poly::monomial(QPoly::monomial(Rat::one(), (j * k) as i64), k);
        prop_assert_eq!(lhs, QDiffOperator::new(1, coeffs));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn product_form_degeneration_collapses_to_differential_operator(
        alpha in prop::collection::vec(small_params(), 1..=3),
        beta_rest in prop::collection::vec(small_params(), 2),
    ) {
        // Balanced lists with one mandatory unit lower parameter: both product
        // sides then vanish to order n+1 at q = 1, the layers below n+1 cancel
        // and layer n+1 is (-1)^{n+1} times the classical operator.
        let mut beta = beta_rest;
        beta.truncate(alpha.len() - 1);
        beta.push(Rat::one());
        let qop = qpf_operator(&alpha, &beta).unwrap();
        let layers = hbar_degenerate(&qop, alpha.len());
        for layer in layers.iter().take(alpha.len()) {
            prop_assert!(layer.is_zero());
        }
        let pf = pf_operator(&alpha, &beta, &Rat::one()).unwrap();
        let sign = if alpha.len() % 2 == 0 { Rat::one() } else { Rat::one().neg() };
        let expect = pf.scale_left(&qforge_rings::ratfunc::RatFunc::constant(sign));
        prop_assert_eq!(&layers[alpha.len()], &expect);
    }

    #[test]
    fn guessed_relation_annihilates_the_holdout(a in -3i64..=3, b in -3i64..=3) {
        // f_{k+1} = (a + b q^k) f_k has the order-2 homogeneous annihilator
        // (1 - sigma)((1 - a lambda) - b lambda sigma), inside the search box.
        prop_assume!(a != 0 || b != 0);
        let mut f: Vec<QPoly> = vec![QPoly::one()];
        for k in 0..13i64 {
            let step = QPoly::constant(rat_i(a)).add(&QPoly::monomial(rat_i(b), k));
            f.push(f[k as usize].mul(&step));
        }
        let rep = guess_qdiff(&f, 2, 1, false).unwrap();
        let image = rep.op.apply(&f, f.len() - 1);
        for (n, val) in image.iter().enumerate() {
            prop_assert_eq!(val, &rep.rhs.coeff(n), "order {}", n);
        }
        prop_assert_eq!(rep.fit_terms + rep.holdout_terms, f.len());
        prop_assert!(rep.holdout_terms >= f.len() / 4);
    }
}
