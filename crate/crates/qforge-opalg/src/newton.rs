//! Newton polygon of a shift operator and its edge polynomials.
//!
//! Support points are (j, i) for a nonzero coefficient of lambda^i sigma^j.
//! Each non-vertical hull edge carries the polynomial in w whose t-th
//! coefficient sits at the t-th lattice point of the edge, reported in
//! primitive integral form: the common q-monomial, polynomial gcd and
//! rational content are divided out and the sign fixed so the lowest
//! nonvanishing w-coefficient leads positively.

use qforge_rings::poly::Poly;
use qforge_rings::rat::Rat;
use qforge_rings::ring::{Field, Ring};

use crate::polyops::{primitive_family, sign_normalize};
use crate::qdiff::{support, QDiffOperator, QPoly};
use crate::OpalgError;

#[derive(Clone, Debug, PartialEq)]
pub struct PolygonEdge {
    pub from: (i64, i64),
    pub to: (i64, i64),
    pub slope: Rat,
    /// Number of lattice gaps on the edge: gcd of the coordinate extents.
    pub lattice_length: u64,
    pub poly: Poly<QPoly>,
}

#[derive(Clone, Debug)]
pub struct NewtonPolygonData {
    pub support: Vec<(i64, i64)>,
    /// Hull cycle, counterclockwise from the bottom-left vertex.
    pub hull: Vec<(i64, i64)>,
    pub lower: Vec<PolygonEdge>,
    pub upper: Vec<PolygonEdge>,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Lower or upper convex chain of a sorted point set, left to right, with
/// collinear interior points dropped.
fn chain(points: &[(i64, i64)], lower: bool) -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = Vec::new();
    for &p in points {
        while out.len() >= 2 {
            let o = out[out.len() - 2];
            let a = out[out.len() - 1];
            let c = cross(o, a, p);
            let bad = if lower { c <= 0 } else { c >= 0 };
            if bad {
                out.pop();
            } else {
                break;
            }
        }
        out.push(p);
    }
    out
}

fn edge_from_vertices(
    op: &QDiffOperator<QPoly>,
    from: (i64, i64),
    to: (i64, i64),
) -> PolygonEdge {
    let dj = to.0 - from.0;
    let di = to.1 - from.1;
    debug_assert!(dj > 0);
    let g = gcd_i64(dj, di);
    let (pj, pi) = (dj / g, di / g);
    let mut raw = Vec::with_capacity(g as usize + 1);
    for t in 0..=g {
        let j = from.0 + t * pj;
        let i = from.1 + t * pi;
        let c = if i >= 0 { op.coeff(j as usize).coeff(i as usize) } else { QPoly::zero() };
        raw.push(c);
    }
    let mut fam = primitive_family(&raw);
    sign_normalize(&mut fam);
    PolygonEdge {
        from,
        to,
        slope: Rat::from_i64(di).div(&Rat::from_i64(dj)),
        lattice_length: g as u64,
        poly: Poly::new(fam),
    }
}

pub fn newton_polygon(op: &QDiffOperator<QPoly>) -> Result<NewtonPolygonData, OpalgError> {
    let mut pts = support(op);
    if pts.is_empty() {
        return Err(OpalgError::ZeroOperator);
    }
    pts.sort();
    pts.dedup();
    let lower_chain = chain(&pts, true);
    let upper_chain = chain(&pts, false);

    let lower = lower_chain
        .windows(2)
        .filter(|w| w[1].0 > w[0].0)
        .map(|w| edge_from_vertices(op, w[0], w[1]))
        .collect();
    let upper = upper_chain
        .windows(2)
        .filter(|w| w[1].0 > w[0].0)
        .map(|w| edge_from_vertices(op, w[0], w[1]))
        .collect();

    // counterclockwise cycle: lower chain, then upper chain reversed, without
    // repeating shared endpoints
    let mut hull = lower_chain.clone();
    for &p in upper_chain.iter().rev() {
        if !hull.contains(&p) {
            hull.push(p);
        }
    }
    Ok(NewtonPolygonData { support: pts, hull, lower, upper })
}

#[cfg(test)]
mod tests {
    use super::*;
    use qforge_rings::rat::rat_i;

    fn qmono(c: i64, e: i64) -> QPoly {
        QPoly::monomial(rat_i(c), e)
    }

    #[test]
    fn two_point_horizontal_support() {
        let op = QDiffOperator::new(
            1,
            vec![
                Poly::constant(QPoly::one()),
                Poly::zero(),
                Poly::zero(),
                Poly::zero(),
                Poly::zero(),
                Poly::zero(),
                Poly::constant(QPoly::one()),
            ],
        );
        let np = newton_polygon(&op).unwrap();
        assert_eq!(np.hull, vec![(0, 0), (6, 0)]);
        assert_eq!(np.lower.len(), 1);
        assert_eq!(np.upper.len(), 1);
        let e = &np.lower[0];
        assert_eq!(e.slope, Rat::zero());
        assert_eq!(e.lattice_length, 6);
        // lattice points between the endpoints carry zero coefficients
        assert_eq!(e.poly.coeff(0), QPoly::one());
        assert_eq!(e.poly.coeff(6), QPoly::one());
        assert_eq!(e.poly.coeff(3), QPoly::zero());
    }

    #[test]
    fn zero_operator_rejected() {
        let op = QDiffOperator::<QPoly>::zero(1);
        assert!(matches!(newton_polygon(&op), Err(OpalgError::ZeroOperator)));
    }

    #[test]
    fn content_and_sign_normalization_of_edges() {
        // sigma-coefficients q^21 lambda^6, -2q^22 lambda^6, q^23 lambda^6 +
        // lambda^0: top edge normalizes to 1 - 2qw + q^2 w^2 after removing
        // the q^21 monomial content
        let op = QDiffOperator::new(
            1,
            vec![
                Poly::monomial(qmono(1, 21), 6),
                Poly::monomial(qmono(-2, 22), 6),
                Poly::monomial(qmono(1, 23), 6).add(&Poly::constant(QPoly::one())),
            ],
        );
        let np = newton_polygon(&op).unwrap();
        assert_eq!(np.upper.len(), 1);
        let top = &np.upper[0];
        assert_eq!(top.from, (0, 6));
        assert_eq!(top.to, (2, 6));
        assert_eq!(
            top.poly,
            Poly::new(vec![QPoly::one(), qmono(-2, 1), qmono(1, 2)])
        );
        // lower hull: single edge (0,6) -> (2,0) of lattice length 2
        assert_eq!(np.lower.len(), 1);
        assert_eq!(np.lower[0].slope, rat_i(-3));
        assert_eq!(np.lower[0].lattice_length, 2);
        assert_eq!(
            np.lower[0].poly,
            Poly::new(vec![qmono(1, 21), QPoly::zero(), QPoly::one()])
        );
    }

    #[test]
    fn polynomial_content_divided_out_with_sign_flip() {
        // coefficients -(1+q)^2 and -2q(1+q)^2: edge polynomial (1, 2q) after
        // removing the common polynomial and flipping the sign
        let one_plus_q_sq = QPoly::new(0, vec![rat_i(1), rat_i(2), rat_i(1)]);
        let op = QDiffOperator::new(
            1,
            vec![
                Poly::constant(one_plus_q_sq.neg()),
                Poly::constant(one_plus_q_sq.scale(&rat_i(-2)).shift(1)),
            ],
        );
        let np = newton_polygon(&op).unwrap();
        let e = &np.lower[0];
        assert_eq!(e.poly, Poly::new(vec![QPoly::one(), qmono(2, 1)]));
    }

    #[test]
    fn reflection_in_lambda_degree_mirrors_the_polygon() {
        // Replacing lambda^i by lambda^{M-i} flips the support vertically:
        // lower edges become upper edges at the same left-to-right position
        // with negated slope and an unchanged edge polynomial.
        let op = QDiffOperator::new(
            1,
            vec![
                Poly::monomial(qmono(1, 2), 4),
                Poly::monomial(qmono(-2, 3), 2).add(&Poly::monomial(QPoly::from_i64(3), 6)),
                Poly::constant(QPoly::new(0, vec![rat_i(1), rat_i(1)])),
                Poly::monomial(qmono(1, 1), 6),
                Poly::monomial(qmono(1, 2), 2),
                Poly::monomial(qmono(-1, 5), 3),
            ],
        );
        let m = 6usize;
        let refl = QDiffOperator::new(
            1,
            op.a
                .iter()
                .map(|p| {
                    let mut c = vec![QPoly::zero(); m + 1];
                    for i in 0..=m {
                        c[m - i] = p.coeff(i);
                    }
                    Poly::new(c)
                })
                .collect(),
        );
        let np = newton_polygon(&op).unwrap();
        let npr = newton_polygon(&refl).unwrap();
        assert_eq!(np.lower.len(), 2);
        assert_eq!(np.upper.len(), 3);
        assert_eq!(np.lower.len(), npr.upper.len());
        assert_eq!(np.upper.len(), npr.lower.len());
        let m = m as i64;
        for (a, b) in np.lower.iter().zip(npr.upper.iter()) {
            assert_eq!(b.from, (a.from.0, m - a.from.1));
            assert_eq!(b.to, (a.to.0, m - a.to.1));
            assert_eq!(b.slope, a.slope.neg());
            assert_eq!(b.lattice_length, a.lattice_length);
            assert_eq!(b.poly, a.poly);
        }
        for (a, b) in np.upper.iter().zip(npr.lower.iter()) {
            assert_eq!(b.from, (a.from.0, m - a.from.1));
            assert_eq!(b.to, (a.to.0, m - a.to.1));
            assert_eq!(b.slope, a.slope.neg());
            assert_eq!(b.poly, a.poly);
        }
    }
}
