use num_bigint::BigUint;
use num_traits::One;

use super::digits::s2;
use crate::error::{invalid, Result};

/// Exact binomial coefficient; zero when `b > a`.
pub fn binom(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::default();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient that must fit a `u64` (callers keep `a` small).
pub fn binom_u64(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b as u128 {
        acc = acc * (a as u128 - i) / (i + 1);
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// `nu2(n!) = n - s2(n)`.
#[inline]
pub fn nu2_factorial(n: u64) -> u64 {
    n - s2(n) as u64
}

/// 2-adic valuation of `C(a, b)` through factorial valuations.
pub fn nu2_binom(a: u64, b: u64) -> Result<u64> {
    if b > a {
        return Err(invalid(format!("C({a}, {b}) is zero")));
    }
    Ok(nu2_factorial(a) - nu2_factorial(b) - nu2_factorial(a - b))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::nu2_int;
    use num_bigint::BigInt;

    #[test]
    fn small_binomials() {
        assert_eq!(binom(4, 2), BigUint::from(6u32));
        assert_eq!(nu2_binom(4, 2).unwrap(), 1);
        assert_eq!(binom(3, 5), BigUint::default());
        assert!(nu2_binom(3, 5).is_err());
        assert_eq!(binom_u64(60, 30), 118_264_581_564_861_424);
    }

    #[test]
    fn legendre_matches_direct_factorial() {
        let mut fact = BigInt::one();
        for n in 1..=2000u64 {
            fact *= n;
            assert_eq!(nu2_int(&fact).finite(), Some(nu2_factorial(n)));
        }
    }

    #[test]
    fn valuation_of_binomials() {
        for a in 0..200u64 {
            for b in 0..=a {
                let direct = nu2_int(&BigInt::from(binom(a, b))).finite().unwrap();
                assert_eq!(nu2_binom(a, b).unwrap(), direct, "C({a},{b})");
            }
        }
    }

    #[test]
    fn mersenne_rows_are_odd() {
        for m in 1..=10u32 {
            let top = (1u64 << m) - 1;
            for j in 0..=top {
                assert_eq!(nu2_binom(top, j).unwrap(), 0);
            }
        }
    }

    #[test]
    fn central_power_of_two_binomial_mod_8() {
        for m in 3..=10u32 {
            let c = binom(1 << m, 1 << (m - 1));
            assert_eq!(c % 8u32, BigUint::from(6u32));
        }
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
