//! Bracket normalization of a rational parameter relative to a root order.

use num_traits::{Signed, ToPrimitive};
use qforge_rings::nt::mod_inv;
use qforge_rings::rat::{rat, rat_i};
use qforge_rings::Rat;

/// Residue `<a>_m`: the unique integer in `[0, m)` congruent to `a` mod `m`,
/// where a rational `u/v` is read through `v^{-1} mod m`.
/// Requires `gcd(den(a), m) = 1`.
pub fn resid(a: &Rat, m: u64) -> u64 {
    assert!(m >= 1, "order must be positive");
    if m == 1 {
        return 0;
    }
    let mm = m as i64;
    let u = a.numer().to_i64().expect("numerator fits i64");
    let v = a.denom().to_i64().expect("denominator fits i64");
    let vinv = mod_inv(v, m).unwrap_or_else(|| {
        panic!("order {} shares a factor with denominator {}", m, v)
    }) as i64;
    (((u % mm) * (vinv % mm) % mm + mm) % mm) as u64
}

/// Bracket `[a]_m = (a + <-a>_m)/m`, the canonical representative used to
/// match parameters across root-of-unity centers. Maps `(0,1]` to `(0,1]`.
pub fn bracket(a: &Rat, m: u64) -> Rat {
    let r = resid(&-a, m);
    (a + rat_i(r as i64)) / rat_i(m as i64)
}

/// True if `a` is an integer.
pub fn is_integer(a: &Rat) -> bool {
    a.is_integer()
}

/// `a` as an i64, panicking unless integral.
pub fn as_i64(a: &Rat) -> i64 {
    assert!(a.is_integer(), "expected integer, got {}", a);
    a.numer().to_i64().expect("fits i64")
}

/// Fractional part in `[0,1)`.
pub fn frac(a: &Rat) -> Rat {
    let f = a - a.floor();
    debug_assert!(!f.is_negative() && f < rat(1, 1));
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resid_integers() {
        assert_eq!(resid(&rat_i(7), 5), 2);
        assert_eq!(resid(&rat_i(-1), 5), 4);
        assert_eq!(resid(&rat_i(0), 5), 0);
        assert_eq!(resid(&rat_i(3), 1), 0);
    }

    #[test]
    fn resid_rationals() {
        // 1/2 mod 3: 2^{-1} = 2, so 1/2 ~ 2.
        assert_eq!(resid(&rat(1, 2), 3), 2);
        assert_eq!(resid(&rat(-1, 2), 3), 1);
        // 1/5 mod 7: 5^{-1} = 3 mod 7.
        assert_eq!(resid(&rat(1, 5), 7), 3);
        assert_eq!(resid(&rat(-1, 5), 7), 4);
    }

    #[test]
    fn bracket_values() {
        for m in [1u64, 2, 3, 5, 7] {
            assert_eq!(bracket(&rat_i(1), m), rat_i(1));
        }
        assert_eq!(bracket(&rat(1, 2), 3), rat(1, 2));
        // [1/5]_7 = (1/5 + 4)/7 = 3/5.
        assert_eq!(bracket(&rat(1, 5), 7), rat(3, 5));
        // m = 1 is the identity on rationals.
        assert_eq!(bracket(&rat(7, 3), 1), rat(7, 3));
    }

    #[test]
    fn bracket_range_and_denominator() {
        for m in [1u64, 2, 3, 4, 5, 7, 9] {
            for num in 1..=12i64 {
                for den in [2i64, 3, 5].iter().copied() {
                    if qforge_rings::nt::gcd_u64(den as u64, m) != 1 {
                        continue;
                    }
                    let a = rat(num, den);
                    let b = bracket(&a, m);
                    assert_eq!(b.denom(), a.denom(), "denominator preserved");
                    if a > rat_i(0) && a <= rat_i(1) {
                        assert!(b > rat_i(0) && b <= rat_i(1), "bracket stays in (0,1]");
                    }
                    // Defining congruence: m*[a]_m - a is a nonnegative integer < m.
                    let d = rat_i(m as i64) * &b - &a;
                    assert!(d.is_integer());
                    assert!(d >= rat_i(0) && d < rat_i(m as i64));
                }
            }
        }
    }
}
