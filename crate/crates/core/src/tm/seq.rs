use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binom, s2};
use crate::error::{invalid, Result};
use crate::par;
use crate::report::CheckReport;

/// Thue-Morse sign `(-1)^s2(n)`.
#[inline]
pub fn ptm(n: u64) -> i64 {
    if s2(n).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A growable prefix `t_m(0..=N)` built from the half-index recurrences
/// `t_m(2n) = sum_j C(m, 2j) t_m(n-j)` and
/// `t_m(2n+1) = -sum_j C(m, 2j+1) t_m(n-j)`.
#[derive(Clone, Debug)]
pub struct TmSeq {
    m: u64,
    binoms: Vec<BigInt>,
    values: Vec<BigInt>,
}

impl TmSeq {
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(invalid("t_m needs m >= 1 (m = 0 is the constant 1)"));
        }
        let binoms = (0..=m).map(|j| BigInt::from(binom(m, j))).collect();
        Ok(Self {
            m,
            binoms,
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
        let start = self.values.len() as u64;
        self.values
            .reserve(n_max.saturating_sub(start) as usize + 1);
        for idx in start..=n_max {
            let half = idx / 2;
            let odd = idx % 2;
            let mut acc = BigInt::zero();
            let mut j = 0u64;
            while 2 * j + odd <= self.m && j <= half {
                acc += &self.binoms[(2 * j + odd) as usize] * &self.values[(half - j) as usize];
                j += 1;
            }
            if odd == 1 {
                acc = -acc;
            }
            self.values.push(acc);
        }
    }

    /// `t_m(n)`, zero for negative `n`. Panics beyond the built prefix.
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
pub struct TmCache {
    seqs: BTreeMap<u64, TmSeq>,
}

impl TmCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The prefix for `m`, extended to at least `n_max`.
    pub fn seq(&mut self, m: u64, n_max: u64) -> Result<&TmSeq> {
        if let std::collections::btree_map::Entry::Vacant(e) = self.seqs.entry(m) {
            e.insert(TmSeq::new(m)?);
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

/// `t_m(n)`; zero for `n < 0`.
pub fn tm(m: u64, n: i64) -> Result<BigInt> {
    if n < 0 {
        TmSeq::new(m)?;
        return Ok(BigInt::zero());
    }
    Ok(TmSeq::with_max(m, n as u64)?.get(n))
}

/// `t_m(0..=n_max)` by repeated Cauchy products of the Thue-Morse signs.
pub fn tm_oracle(m: u64, n_max: u64) -> Result<Vec<BigInt>> {
    if m == 0 {
        return Err(invalid("t_m needs m >= 1"));
    }
    let len = n_max as usize + 1;
    let base: Vec<i64> = (0..=n_max).map(ptm).collect();
    let mut acc: Vec<BigInt> = base.iter().map(|&v| BigInt::from(v)).collect();
    for _ in 1..m {
        let mut next = vec![BigInt::zero(); len];
        for (n, slot) in next.iter_mut().enumerate() {
            for k in 0..=n {
                let s = base[n - k];
                if s > 0 {
                    *slot += &acc[k];
                } else {
                    *slot -= &acc[k];
                }
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// `t_m(n) = C(n+m-1, m-1) (mod 2)` for `0 <= n <= n_max`.
pub fn check_parity_t(seq: &TmSeq, n_max: u64) -> CheckReport {
    let m = seq.m();
    // Lucas: C(a, b) is odd iff the bits of b are a subset of those of a.
    let fails = |n: u64| {
        let a = n + m - 1;
        let b = m - 1;
        let binom_odd = b & !a == 0;
        let t_odd = seq.at(n).bit(0);
        binom_odd != t_odd
    };
    let hit = par::first_failure(0..n_max + 1, fails);
    CheckReport::from_outcome(
        "t-parity",
        n_max + 1,
        hit.map(|n| {
            (
                vec![("m", m as i64), ("n", n as i64)],
                format!("t_{m}({n}) = {}", seq.at(n)),
            )
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        assert_eq!(ptm(0), 1);
        assert_eq!(ptm(1), -1);
        assert_eq!(ptm(3), 1);
    }

    #[test]
    fn small_values() {
        assert_eq!(tm(3, 2).unwrap(), BigInt::zero());
        assert_eq!(tm(2, 5).unwrap(), BigInt::from(2));
        assert_eq!(tm(2, 3).unwrap(), BigInt::from(4));
        assert_eq!(tm(4, -3).unwrap(), BigInt::zero());
        assert!(tm(0, 3).is_err());
        let s = TmSeq::with_max(2, 8).unwrap();
        let want = [1, -2, -1, 4, -3, 2, 3, -8, 1];
        assert_eq!(s.values(), &want.map(BigInt::from)[..]);
    }

    #[test]
    fn recurrence_matches_convolution() {
        for m in 1..=6 {
            let s = TmSeq::with_max(m, 60).unwrap();
            assert_eq!(s.values(), &tm_oracle(m, 60).unwrap()[..], "m={m}");
        }
    }

    #[test]
    fn cache_grows() {
        let mut c = TmCache::new();
        assert_eq!(c.get(3, 4).unwrap(), BigInt::from(-9));
        assert_eq!(c.get(3, 100).unwrap(), tm(3, 100).unwrap());
        assert_eq!(c.get(3, -1).unwrap(), BigInt::zero());
    }

    #[test]
    fn parity() {
        for m in [1, 2, 7] {
            let s = TmSeq::with_max(m, 1024).unwrap();
            assert!(check_parity_t(&s, 1024).ok());
        }
    }
}
