use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::fact_poly::{factorial, FactPoly};
use crate::arith::nu2;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// `1 - 2^(nu2(d) + 1)` for `d >= 1`.
pub(crate) fn log_weight(d: u64) -> i64 {
    1 - (2i64 << nu2(d).expect("d >= 1"))
}

/// `hi! / lo!` for `lo <= hi`.
pub(crate) fn falling_ratio(hi: u64, lo: u64) -> BigInt {
    ((lo + 1)..=hi).fold(BigInt::one(), |acc, k| acc * k)
}

/// Append-only table of `g_n = n! f_n` built by the log-derivative
/// recurrence `g_n = t * sum_k (1 - 2^(nu2(n-k)+1)) (n-1)!/k! g_k`.
#[derive(Clone, Debug)]
pub struct FSeries {
    g: Vec<IntPoly>,
}

impl Default for FSeries {
    fn default() -> Self {
        Self::new()
    }
}

impl FSeries {
    pub fn new() -> Self {
        Self {
            g: vec![IntPoly::one()],
        }
    }

    pub fn up_to(n_max: u64) -> Self {
        let mut s = Self::new();
        s.extend_to(n_max);
        s
    }

    /// Largest `n` currently held.
    pub fn max_index(&self) -> u64 {
        self.g.len() as u64 - 1
    }

    pub fn extend_to(&mut self, n_max: u64) {
        for n in self.g.len() as u64..=n_max {
            // Horner-style: acc_k = sum_{j<=k} w(n-j) (k)!/j! g_j, scaled up as k grows.
            let mut acc = IntPoly::zero();
            for k in 0..n {
                if k > 0 {
                    acc = acc.scale(&BigInt::from(k));
                }
                acc = &acc + &self.g[k as usize].scale(&BigInt::from(log_weight(n - k)));
            }
            self.g.push(acc.shift(1));
        }
    }

    /// `g_n`; panics if `n` has not been built.
    pub fn g(&self, n: u64) -> &IntPoly {
        &self.g[n as usize]
    }

    pub fn f(&self, n: u64) -> FactPoly {
        FactPoly::new(self.g(n).clone(), n)
    }

    pub fn g_all(&self) -> &[IntPoly] {
        &self.g
    }
}

/// `f_n` from the log-derivative recurrence.
pub fn f_poly(n: u64) -> FactPoly {
    FSeries::up_to(n).f(n)
}

/// `t (t+1) ... (t+r-1)`.
fn rising(r: u64) -> IntPoly {
    (0..r as i64).fold(IntPoly::one(), |acc, j| &acc * &IntPoly::from_i64s(&[j, 1]))
}

/// `(-t) (1-t) ... (r-1-t)`.
fn falling_neg(r: u64) -> IntPoly {
    (0..r as i64).fold(IntPoly::one(), |acc, j| {
        &acc * &IntPoly::from_i64s(&[j, -1])
    })
}

fn exact_div(p: &IntPoly, d: &BigInt, what: &str) -> Result<IntPoly> {
    p.div_exact_scalar(d)
        .ok_or_else(|| Error::Invariant(format!("{what}: not divisible by {d}")))
}

/// `g_0..=g_n` from `F_t(x^2) = (1-x)^(-t) F_t(x)`.
///
/// Each term `(n!/k!) * rising(t, r) * g_k` is divided by `r!` after
/// assembly; the division must be exact.
pub fn g_polys_alt1(n_max: u64) -> Result<Vec<IntPoly>> {
    let mut g = vec![IntPoly::one()];
    for n in 1..=n_max {
        let mut acc = IntPoly::zero();
        for k in 0..n {
            let r = n - k;
            let term = (&rising(r) * &g[k as usize]).scale(&falling_ratio(n, k));
            acc = &acc - &exact_div(&term, &factorial(r), "first alternative recurrence")?;
        }
        if n.is_even() {
            let half = n / 2;
            acc = &acc + &g[half as usize].scale(&falling_ratio(n, half));
        }
        g.push(acc);
    }
    Ok(g)
}

/// `g_0..=g_n` from `F_t(x) = (1-x)^t F_t(x^2)`.
pub fn g_polys_alt2(n_max: u64) -> Result<Vec<IntPoly>> {
    let mut g = vec![IntPoly::one()];
    for n in 1..=n_max {
        let mut acc = IntPoly::zero();
        for k in 0..=n / 2 {
            let r = n - 2 * k;
            let term = (&falling_neg(r) * &g[k as usize]).scale(&falling_ratio(n, k));
            acc = &acc + &exact_div(&term, &factorial(r), "second alternative recurrence")?;
        }
        g.push(acc);
    }
    Ok(g)
}

pub fn f_poly_alt1(n: u64) -> Result<FactPoly> {
    Ok(FactPoly::new(g_polys_alt1(n)?.pop().expect("nonempty"), n))
}

pub fn f_poly_alt2(n: u64) -> Result<FactPoly> {
    Ok(FactPoly::new(g_polys_alt2(n)?.pop().expect("nonempty"), n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn low_order_table() {
        let s = FSeries::up_to(5);
        assert_eq!(s.g(0), &IntPoly::one());
        assert_eq!(s.g(1), &IntPoly::from_i64s(&[0, -1]));
        assert_eq!(s.g(2), &IntPoly::from_i64s(&[0, -3, 1]));
        let f5 = s.f(5);
        // -(1/120) t (t^4 - 30 t^3 + 155 t^2 - 270 t + 24)
        let want = [0, -24, 270, -155, 30, -1];
        for (i, &c) in want.iter().enumerate() {
            assert_eq!(f5.coeff(i), rat(c, 120));
        }
    }

    #[test]
    fn alternatives_agree() {
        let main = FSeries::up_to(40);
        let a1 = g_polys_alt1(40).unwrap();
        let a2 = g_polys_alt2(40).unwrap();
        for n in 0..=40usize {
            assert_eq!(&a1[n], main.g(n as u64), "alt1 n={n}");
            assert_eq!(&a2[n], main.g(n as u64), "alt2 n={n}");
        }
        assert_eq!(f_poly_alt1(1).unwrap().num, IntPoly::from_i64s(&[0, -1]));
        assert_eq!(f_poly_alt2(0).unwrap().num, IntPoly::one());
    }

    #[test]
    fn weights() {
        assert_eq!(log_weight(1), -1);
        assert_eq!(log_weight(2), -3);
        assert_eq!(log_weight(12), -7);
    }
}
