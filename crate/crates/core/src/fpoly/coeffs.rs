use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::fact_poly::factorial;
use super::series::log_weight;
use crate::error::{invalid, Error, Result};
use crate::poly::IntPoly;

/// The `k` for which `W_k` has a published reference value to compare
/// against; other `k >= 1` are computed and self-checked only.
pub const W_REFERENCE_RANGE: RangeInclusive<u64> = 3..=6;

/// Extra sample points used to validate an interpolated `W_k`.
const W_EXTRA_POINTS: u64 = 20;

/// The coefficients `a(i, n)` of `f_n(t) = sum_i a(i, n) t^i`, built
/// column by column from
/// `a(i+1, n) = (1/n) sum_{j=i}^{n-1} (1 - 2^(nu2(n-j)+1)) a(i, j)`.
///
/// Stored as the integers `G(i, n) = n! a(i, n)`.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    rows: Vec<Vec<BigInt>>,
}

impl CoeffTable {
    pub fn up_to(n_max: u64) -> Self {
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=n_max {
            let mut row = vec![BigInt::zero(); n as usize + 1];
            for i in 0..n {
                // Horner over j: acc = sum_{l=i}^{j} w(n-l) j!/l! G(i, l).
                let mut acc = BigInt::zero();
                for j in i..n {
                    if j > i {
                        acc *= j;
                    }
                    acc += &rows[j as usize][i as usize] * log_weight(n - j);
                }
                row[i as usize + 1] = acc;
            }
            rows.push(row);
        }
        Self { rows }
    }

    pub fn max_index(&self) -> u64 {
        self.rows.len() as u64 - 1
    }

    /// `n! a(i, n)`.
    pub fn scaled(&self, i: u64, n: u64) -> Result<&BigInt> {
        if i > n {
            return Err(invalid(format!("a({i}, {n}) needs i <= n")));
        }
        self.rows
            .get(n as usize)
            .map(|row| &row[i as usize])
            .ok_or_else(|| invalid(format!("table holds n <= {}", self.max_index())))
    }

    pub fn a(&self, i: u64, n: u64) -> Result<BigRational> {
        Ok(BigRational::new(self.scaled(i, n)?.clone(), factorial(n)))
    }

    /// `g_n` reassembled from the table.
    pub fn g_poly(&self, n: u64) -> Result<IntPoly> {
        self.scaled(0, n)?;
        Ok(IntPoly::from_coeffs(self.rows[n as usize].clone()))
    }
}

/// `(-1)^(n+k) (2k)! (n-k-1)! a(n-k, n)`, which must be an integer.
fn w_sample(table: &CoeffTable, k: u64, n: u64) -> Result<BigInt> {
    let a = table.a(n - k, n)?;
    let mut v = a * BigRational::from_integer(factorial(2 * k) * factorial(n - k - 1));
    if (n + k).is_odd() {
        v = -v;
    }
    if !v.is_integer() {
        return Err(Error::Invariant(format!(
            "W_{k}({n}) = {v} is not an integer"
        )));
    }
    Ok(v.to_integer())
}

/// Newton interpolation through `(xs[i], ys[i])`, expanded to monomial
/// coefficients.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys
        .iter()
        .map(|y| BigRational::from_integer(y.clone()))
        .collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = BigRational::from_integer(&xs[i] - &xs[i - level]);
            dd[i] = num / den;
        }
    }
    // Expand dd[0] + dd[1](x-x0) + dd[2](x-x0)(x-x1) + ... by Horner.
    let mut coeffs: Vec<BigRational> = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let shift = BigRational::from_integer(xs[i].clone());
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * &shift;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

/// The integer polynomial `W_k` of degree `k - 1` with
/// `a(n-k, n) = (-1)^(n+k) W_k(n) / ((2k)! (n-k-1)!)` for `n >= k + 1`.
///
/// Interpolated at `n = k+1 ..= 2k`, then required to be integral and to
/// reproduce the coefficient table at 20 further points.
pub fn w_poly(k: u64) -> Result<IntPoly> {
    if k == 0 {
        return Err(invalid("W_k needs k >= 1"));
    }
    let last = 2 * k + W_EXTRA_POINTS;
    let table = CoeffTable::up_to(last);
    let xs: Vec<BigInt> = (k + 1..=2 * k).map(BigInt::from).collect();
    let ys = (k + 1..=2 * k)
        .map(|n| w_sample(&table, k, n))
        .collect::<Result<Vec<_>>>()?;
    let mut coeffs = Vec::with_capacity(xs.len());
    for c in interpolate(&xs, &ys) {
        if !c.is_integer() {
            return Err(Error::Invariant(format!(
                "W_{k} has non-integral coefficient {c}"
            )));
        }
        coeffs.push(c.to_integer());
    }
    let w = IntPoly::from_coeffs(coeffs);
    for n in 2 * k + 1..=last {
        let want = w_sample(&table, k, n)?;
        if w.eval_i64(n as i64) != want {
            return Err(Error::Invariant(format!(
                "W_{k} fails at extra point n = {n}"
            )));
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpoly::FSeries;

    #[test]
    fn table_matches_polynomials() {
        let t = CoeffTable::up_to(30);
        let s = FSeries::up_to(30);
        for n in 0..=30 {
            assert_eq!(&t.g_poly(n).unwrap(), s.g(n));
        }
        assert!(t.a(8, 7).is_err());
        assert!(t.a(0, 7).unwrap().is_zero());
    }

    #[test]
    fn low_w() {
        assert_eq!(w_poly(1).unwrap(), IntPoly::constant(3));
        assert_eq!(w_poly(2).unwrap(), IntPoly::from_i64s(&[-73, 27]));
        assert_eq!(
            w_poly(3).unwrap(),
            IntPoly::from_i64s(&[176, -73, 9]).scale(&45.into())
        );
        assert!(w_poly(0).is_err());
    }
}
