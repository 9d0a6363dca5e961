use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{invalid, Result};

/// Coefficient of `x^n` in `log F(x)`: `(1 - 2^(nu2(n)+1)) / n`.
pub fn log_coeff(n: u64) -> Result<BigRational> {
    log_coeff_base(2, n)
}

/// Coefficient of `x^n` in `log prod_{j >= 0} (1 - x^(k^j))`:
/// `(1 - k^(e+1)) / ((k - 1) n)` with `k^e` the largest power of `k`
/// dividing `n`.
///
/// For `k = 2` this is `(1 - 2^(e+1)) / n`. For larger `k` the factor
/// `1/(k-1)` matters; [`log_coeff_base_unnormalized`] omits it.
pub fn log_coeff_base(k: u64, n: u64) -> Result<BigRational> {
    Ok(log_coeff_base_unnormalized(k, n)? / BigRational::from_integer(BigInt::from(k - 1)))
}

/// `(1 - k^(e+1)) / n` without the `1/(k-1)` factor. Equal to
/// [`log_coeff_base`] only for `k = 2`.
pub fn log_coeff_base_unnormalized(k: u64, n: u64) -> Result<BigRational> {
    if k < 2 {
        return Err(invalid("base must be at least 2"));
    }
    if n == 0 {
        return Err(invalid("log coefficients start at n = 1"));
    }
    let mut e = 0u32;
    let mut rest = n;
    while rest.is_multiple_of(k) {
        rest /= k;
        e += 1;
    }
    let num = BigInt::from(1) - BigInt::from(k).pow(e + 1);
    Ok(BigRational::new(num, BigInt::from(n)))
}

/// Coefficients `1..=n_max` of `-sum_{j >= 0} sum_{i >= 1} x^(k^j i) / i`,
/// expanded term by term.
pub fn formal_log_coeffs(k: u64, n_max: u64) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n_max as usize + 1];
    let mut step = 1u64;
    while step <= n_max {
        let mut i = 1u64;
        while step * i <= n_max {
            out[(step * i) as usize] -= BigRational::new(1.into(), BigInt::from(i));
            i += 1;
        }
        step *= k;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn examples() {
        assert_eq!(log_coeff(1).unwrap(), rat(-1, 1));
        assert_eq!(log_coeff(2).unwrap(), rat(-3, 2));
        assert_eq!(log_coeff(12).unwrap(), rat(-7, 12));
        assert_eq!(log_coeff_base_unnormalized(3, 3).unwrap(), rat(-8, 3));
        assert_eq!(log_coeff_base(3, 3).unwrap(), rat(-4, 3));
        assert!(log_coeff(0).is_err());
        assert!(log_coeff_base(1, 5).is_err());
    }

    #[test]
    fn matches_expansion() {
        for k in 2..=5 {
            let formal = formal_log_coeffs(k, 300);
            for n in 1..=300 {
                assert_eq!(
                    log_coeff_base(k, n).unwrap(),
                    formal[n as usize],
                    "k={k} n={n}"
                );
                let scale = BigRational::from_integer(BigInt::from(k - 1));
                assert_eq!(
                    log_coeff_base_unnormalized(k, n).unwrap(),
                    &formal[n as usize] * scale
                );
            }
        }
    }
}
