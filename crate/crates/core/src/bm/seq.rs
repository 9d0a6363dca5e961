use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::binom;
use crate::error::{invalid, Result};

/// A growable prefix `b_m(0..=N)` of the `m`-coloured binary partition
/// numbers, built from
/// `b_m(N) = sum_{j=1..m} (-1)^(j+1) C(m, j) b_m(N - j) + [N even] b_m(N/2)`.
#[derive(Clone, Debug)]
pub struct BmSeq {
    m: u64,
    /// `(-1)^(j+1) C(m, j)` for `j = 1..=m`.
    weights: Vec<BigInt>,
    values: Vec<BigInt>,
}

impl BmSeq {
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(invalid("b_m needs m >= 1"));
        }
        let weights = (1..=m)
            .map(|j| {
                let c = BigInt::from(binom(m, j));
                if j % 2 == 1 {
                    c
                } else {
                    -c
                }
            })
            .collect();
        Ok(Self {
            m,
            weights,
            values: vec![BigInt::one()],
        })
    }

    pub fn with_max(m: u64, n_max: u64) -> Result<Self> {
        let mut s = Self::new(m)?;
        s.extend_to(n_max);
        Ok(s)
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn max_index(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn extend_to(&mut self, n_max: u64) {
        let start = self.values.len();
        let end = n_max as usize + 1;
        self.values.reserve(end.saturating_sub(start));
        for idx in start..end {
            let mut acc = if idx % 2 == 0 {
                self.values[idx / 2].clone()
            } else {
                BigInt::zero()
            };
            for (j, w) in self.weights.iter().enumerate().take(idx) {
                acc += w * &self.values[idx - 1 - j];
            }
            self.values.push(acc);
        }
    }

    /// `b_m(n)`, zero for negative `n`. Panics beyond the built prefix.
    pub fn get(&self, n: i64) -> BigInt {
        if n < 0 {
            BigInt::zero()
        } else {
            self.values[n as usize].clone()
        }
    }

    pub fn at(&self, n: u64) -> &BigInt {
        &self.values[n as usize]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Prefixes for several `m`, grown on demand.
#[derive(Clone, Debug, Default)]
pub struct BmCache {
    seqs: BTreeMap<u64, BmSeq>,
}

impl BmCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn seq(&mut self, m: u64, n_max: u64) -> Result<&BmSeq> {
        if let std::collections::btree_map::Entry::Vacant(e) = self.seqs.entry(m) {
            e.insert(BmSeq::new(m)?);
        }
        let s = self.seqs.get_mut(&m).expect("inserted");
        if s.max_index() < n_max {
            s.extend_to(n_max);
        }
        Ok(s)
    }

    pub fn get(&mut self, m: u64, n: i64) -> Result<BigInt> {
        if n < 0 {
            return Ok(BigInt::zero());
        }
        Ok(self.seq(m, n as u64)?.get(n))
    }
}

/// Euler's binary partition number `b(n)`.
pub fn b1(n: u64) -> BigInt {
    BmSeq::with_max(1, n).expect("m = 1").at(n).clone()
}

/// `b_m(n)`; zero for `n < 0`.
pub fn bm(m: u64, n: i64) -> Result<BigInt> {
    if n < 0 {
        BmSeq::new(m)?;
        return Ok(BigInt::zero());
    }
    Ok(BmSeq::with_max(m, n as u64)?.get(n))
}

/// `b_m(0..=n_max)` from the full-history recurrences
/// `b_m(2n) = sum_j C(2(n-j)+m-1, m-1) b_m(j)` and
/// `b_m(2n+1) = sum_j C(2(n-j)+m, m-1) b_m(j)`.
pub fn bm_alt(m: u64, n_max: u64) -> Result<Vec<BigInt>> {
    if m == 0 {
        return Err(invalid("b_m needs m >= 1"));
    }
    let mut v = vec![BigInt::one()];
    for idx in 1..=n_max {
        let half = idx / 2;
        let extra = idx % 2;
        let mut acc = BigInt::zero();
        for j in 0..=half {
            let top = 2 * (half - j) + m - 1 + extra;
            acc += BigInt::from(binom(top, m - 1)) * &v[j as usize];
        }
        v.push(acc);
    }
    Ok(v)
}

/// `b(0..=n_max)` by counting partitions into powers of two
/// (coin-change over the parts 1, 2, 4, ...).
pub fn b1_oracle(n_max: u64) -> Vec<BigInt> {
    let len = n_max as usize + 1;
    let mut ways = vec![BigInt::zero(); len];
    ways[0] = BigInt::one();
    let mut part = 1usize;
    while part < len {
        for n in part..len {
            let add = ways[n - part].clone();
            ways[n] += add;
        }
        part *= 2;
    }
    ways
}

/// `b_m(0..=n_max)` as the `m`-fold Cauchy self-product of [`b1_oracle`].
pub fn bm_oracle(m: u64, n_max: u64) -> Result<Vec<BigInt>> {
    if m == 0 {
        return Err(invalid("b_m needs m >= 1"));
    }
    let base = b1_oracle(n_max);
    let mut acc = base.clone();
    for _ in 1..m {
        acc = (0..base.len())
            .map(|n| (0..=n).map(|k| &acc[k] * &base[n - k]).sum())
            .collect();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn small_values() {
        let s = BmSeq::with_max(1, 8).unwrap();
        assert_eq!(ints(s.values()), [1, 1, 2, 2, 4, 4, 6, 6, 10]);
        assert_eq!(bm(2, 2).unwrap(), BigInt::from(5));
        assert_eq!(bm(3, 1).unwrap(), BigInt::from(3));
        assert_eq!(bm(3, -1).unwrap(), BigInt::zero());
        assert!(BmSeq::new(0).is_err());
    }

    #[test]
    fn three_constructions_agree() {
        for m in 1..=5 {
            let rec = BmSeq::with_max(m, 60).unwrap();
            assert_eq!(rec.values(), &bm_alt(m, 60).unwrap()[..], "m={m}");
            assert_eq!(rec.values(), &bm_oracle(m, 60).unwrap()[..], "m={m}");
        }
    }

    #[test]
    fn cache_grows() {
        let mut c = BmCache::new();
        assert_eq!(c.get(2, 3).unwrap(), BigInt::from(8));
        assert_eq!(c.seq(2, 100).unwrap().max_index(), 100);
        assert_eq!(c.get(2, -4).unwrap(), BigInt::zero());
    }
}
