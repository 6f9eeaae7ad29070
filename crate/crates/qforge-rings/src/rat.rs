//! Arbitrary-precision rational scalars and small integer helpers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Exact rational number, always kept in lowest terms by the backing type.
pub type Rat = num_rational::BigRational;

/// Builds `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "rational with zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses "a/b" or "a" into a rational.
pub fn rat_parse(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|e| format!("bad numerator {:?}: {}", num, e))?;
    let d: BigInt = den.parse().map_err(|e| format!("bad denominator {:?}: {}", den, e))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {:?}", s));
    }
    Ok(Rat::new(n, d))
}

/// Renders a rational as "a" or "a/b" in lowest terms.
pub fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact factorial as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial coefficient C(x, k) for rational x.
pub fn binom_rat(x: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= x - rat_i(i as i64);
        acc /= rat_i((i + 1) as i64);
    }
    acc
}

/// Integer power with negative exponents allowed. Panics on 0^negative.
pub fn rat_pow(r: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow::pow(r.clone(), e as usize)
    } else {
        assert!(!r.is_zero(), "inverse of zero");
        num_traits::pow::pow(r.clone().recip(), (-e) as usize)
    }
}

/// p-adic valuation of a nonzero rational. Returns None for zero.
pub fn rat_valuation(p: u64, r: &Rat) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    Some(int_valuation(p, r.numer()) - int_valuation(p, r.denom()))
}

/// p-adic valuation of a nonzero integer.
pub fn int_valuation(p: u64, n: &BigInt) -> i64 {
    assert!(!n.is_zero(), "valuation of zero integer");
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0i64;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// Floor of a rational as a big integer.
pub fn rat_floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// True if the rational is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Fractional part in [0, 1).
pub fn frac_part(r: &Rat) -> Rat {
    r - Rat::from_integer(rat_floor(r))
}

/// Converts a big unsigned integer to base-p digits, little-endian, fixed length.
pub fn to_digits(p: u64, n: &BigUint, len: usize) -> Vec<u64> {
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let d = &n % &p;
        out.push(d.to_u64_digits().first().copied().unwrap_or(0));
        n /= &p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let r = rat_parse(s).unwrap();
            assert_eq!(rat_parse(&rat_str(&r)).unwrap(), r);
        }
        assert!(rat_parse("1/0").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binom_rat(&rat_i(10), 3), rat_i(120));
        // C(-1/2, 2) = (-1/2)(-3/2)/2 = 3/8
        assert_eq!(binom_rat(&rat(-1, 2), 2), rat(3, 8));
    }

    #[test]
    fn valuations() {
        assert_eq!(rat_valuation(7, &rat(49, 3)), Some(2));
        assert_eq!(rat_valuation(7, &rat(3, 14)), Some(-1));
        assert_eq!(rat_valuation(7, &rat_i(0)), None);
    }
}
