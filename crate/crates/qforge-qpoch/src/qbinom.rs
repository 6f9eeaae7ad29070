//! Gaussian binomial and multinomial coefficients as exact polynomials in q,
//! including the Laurent extension to negative upper index.

use qforge_rings::rat::{rat_i, Rat};
use qforge_rings::{LaurentPoly, Poly};

/// [n]_q = 1 + q + ... + q^{n-1}.
pub fn q_int(n: u64) -> Poly<Rat> {
    Poly::new(vec![rat_i(1); n as usize])
}

/// [n]_q! = prod_{i=1}^{n} [i]_q.
pub fn q_factorial(n: u64) -> Poly<Rat> {
    let mut p = Poly::one();
    for i in 1..=n {
        p = p.mul(&q_int(i));
    }
    p
}

/// Gaussian binomial [n choose k]_q. For n >= 0 this is the polynomial
/// [n]!/([k]![n-k]!) (zero when k > n). For n < 0 it is the Laurent
/// polynomial (-1)^k q^{nk - k(k-1)/2} [k-n-1 choose k]_q.
pub fn q_binomial(n: i64, k: u64) -> LaurentPoly<Rat> {
    if n >= 0 {
        if k > n as u64 {
            return LaurentPoly::zero();
        }
        let num = q_factorial(n as u64);
        let den = q_factorial(k).mul(&q_factorial(n as u64 - k));
        return LaurentPoly::from_poly(&num.div_exact(&den));
    }
    let upper = (k as i64) - n - 1;
    assert!(upper >= 0);
    let pos = q_binomial(upper, k);
    let shift = n * k as i64 - (k as i64) * (k as i64 - 1) / 2;
    let sign = if k % 2 == 0 { rat_i(1) } else { rat_i(-1) };
    pos.scale(&sign).shift(shift)
}

/// Gaussian multinomial [n choose k_1,...,k_r]_q with n = sum k_i.
pub fn q_multinomial(parts: &[u64]) -> Poly<Rat> {
    let n: u64 = parts.iter().sum();
    let mut den = Poly::one();
    for &k in parts {
        den = den.mul(&q_factorial(k));
    }
    q_factorial(n).div_exact(&den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_of(l: &LaurentPoly<Rat>) -> Poly<Rat> {
        assert!(l.val().unwrap_or(0) >= 0, "expected a genuine polynomial");
        let mut c = vec![rat_i(0); l.val().unwrap_or(0) as usize];
        c.extend(l.c.iter().cloned());
        Poly::new(c)
    }

    #[test]
    fn small_cases() {
        assert_eq!(poly_of(&q_binomial(5, 0)), Poly::one());
        assert_eq!(poly_of(&q_binomial(2, 1)), Poly::new(vec![rat_i(1), rat_i(1)]));
        // [4,2]_q = (1+q^2)(1+q+q^2) = 1+q+2q^2+q^3+q^4.
        let expect = Poly::new(vec![rat_i(1), rat_i(1), rat_i(2), rat_i(1), rat_i(1)]);
        assert_eq!(poly_of(&q_binomial(4, 2)), expect);
        assert!(q_binomial(3, 5).is_zero());
    }

    #[test]
    fn symmetry_and_pascal() {
        for n in 0..=8i64 {
            for k in 0..=n as u64 {
                assert_eq!(q_binomial(n, k), q_binomial(n, n as u64 - k));
            }
        }
        // q-Pascal: [n,k] = q^k [n-1,k] + [n-1,k-1].
        for n in 1..=7i64 {
            for k in 1..=n as u64 {
                let lhs = q_binomial(n, k);
                let rhs = q_binomial(n - 1, k).shift(k as i64).add(&q_binomial(n - 1, k - 1));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn negative_upper_index_series_identity() {
        // (1-x)^{-1}-style check through specialization q = 1:
        // [n,k]_{q=1} = C(n,k) including negative n.
        let b = q_binomial(-2, 3);
        let at_one: Rat = b.c.iter().fold(rat_i(0), |s, c| s + c);
        // C(-2,3) = (-2)(-3)(-4)/6 = -4.
        assert_eq!(at_one, rat_i(-4));
        let b2 = q_binomial(-1, 2);
        let at_one2: Rat = b2.c.iter().fold(rat_i(0), |s, c| s + c);
        assert_eq!(at_one2, rat_i(1));
        // Lowest exponent of [-1,2]_q: -2*1 - 1 = n k - k(k-1)/2 = -3.
        assert_eq!(b2.val().unwrap(), -3);
    }

    #[test]
    fn multinomial_collapses_to_binomial() {
        let m = q_multinomial(&[2, 2]);
        assert_eq!(m, poly_of(&q_binomial(4, 2)));
        // [1,1,1]: [3]! / 1 = (1+q)(1+q+q^2).
        let t = q_multinomial(&[1, 1, 1]);
        assert_eq!(t, q_factorial(3));
    }
}
