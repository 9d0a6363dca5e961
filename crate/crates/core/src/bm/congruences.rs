use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::seq::BmSeq;
use crate::arith::is_prime;
use crate::error::{invalid, Error, Result};
use crate::par;
use crate::report::CheckReport;
use crate::tm::ptm;

/// `sum c * b(n - d)` over `(c, d)`.
type Shifted = Vec<(i64, i64)>;

/// One congruence `sum_j w_j b(2^k (n - j m) + i) = rhs(n) (mod p)` with
/// `w = (1 - x^m)^(2^(k-1))` read as a coefficient list.
struct SplitCongruence {
    k: u32,
    i: i64,
    rhs: Shifted,
}

fn split_congruences(m: i64) -> Vec<SplitCongruence> {
    let r1 = m % 4 == 1;
    let mut out = vec![
        SplitCongruence {
            k: 1,
            i: 0,
            rhs: vec![(1, 0)],
        },
        SplitCongruence {
            k: 1,
            i: 1,
            rhs: vec![(1, (m - 1) / 2)],
        },
        SplitCongruence {
            k: 2,
            i: 0,
            rhs: vec![(1, 0), (1, m)],
        },
    ];
    out.push(SplitCongruence {
        k: 2,
        i: 1,
        rhs: if r1 {
            vec![(1, (m - 1) / 4), (1, (5 * m - 1) / 4)]
        } else {
            vec![(2, (3 * m - 1) / 4)]
        },
    });
    out.push(SplitCongruence {
        k: 2,
        i: 2,
        rhs: vec![(2, (m - 1) / 2)],
    });
    out.push(SplitCongruence {
        k: 2,
        i: 3,
        rhs: if r1 {
            vec![(2, 3 * (m - 1) / 4)]
        } else {
            vec![(1, (m - 3) / 4), (1, (5 * m - 3) / 4)]
        },
    });
    out
}

fn prime_power(p: u64, s: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    p.checked_pow(s).ok_or_else(|| invalid("p^s overflows"))
}

/// Congruences mod an odd prime `p` for `m = p^s`, `0 <= n <= n_max`:
/// `b(2n+i) - b(2(n-m)+i)` for `i` in {0, 1} and
/// `b(4n+i) - 2 b(4(n-m)+i) + b(4(n-2m)+i)` for `i` in 0..4, each
/// against one or two shifted copies of `b(n)`. Cases with `k = 2` and
/// odd `i` depend on `m mod 4`. Negative indices give zero.
pub fn check_prime_power_congruences(p: u64, s: u32, n_max: u64) -> Result<CheckReport> {
    let m = prime_power(p, s)?;
    if p == 2 {
        return Err(invalid("p must be odd"));
    }
    let seq = BmSeq::with_max(m, 4 * n_max + 3)?;
    let pb = BigInt::from(p);
    let mi = m as i64;
    let mut parts = Vec::new();
    for c in split_congruences(mi) {
        let step = 1i64 << c.k;
        let lhs_weights: &[i64] = if c.k == 1 { &[1, -1] } else { &[1, -2, 1] };
        let value = |n: i64| -> BigInt {
            let mut acc = BigInt::zero();
            for (j, &w) in lhs_weights.iter().enumerate() {
                acc += w * seq.get(step * (n - j as i64 * mi) + c.i);
            }
            for &(w, d) in &c.rhs {
                acc -= w * seq.get(n - d);
            }
            acc
        };
        let hit = par::first_failure(0..n_max + 1, |n| !value(n as i64).mod_floor(&pb).is_zero());
        parts.push(CheckReport::from_outcome(
            format!("mod-{}-i{}", step, c.i),
            n_max + 1,
            hit.map(|n| {
                (
                    vec![
                        ("p", p as i64),
                        ("s", s as i64),
                        ("i", c.i),
                        ("n", n as i64),
                    ],
                    format!("difference {} is not 0 mod {p}", value(n as i64)),
                )
            }),
        ));
    }
    Ok(CheckReport::combine(
        format!("prime-power-congruences-b{m}"),
        parts,
    ))
}

/// `n b_m(n) = m sum_i (n-i) b(n-i) b_(m-1)(i)` for `n <= n_max`, and
/// `m | b_m(n)` whenever `gcd(m, n) = 1`.
pub fn check_derivative_convolution(m: u64, n_max: u64) -> Result<CheckReport> {
    if m < 2 {
        return Err(invalid("need m >= 2"));
    }
    let b = BmSeq::with_max(1, n_max)?;
    let lower = BmSeq::with_max(m - 1, n_max)?;
    let full = BmSeq::with_max(m, n_max)?;
    let weighted: Vec<BigInt> = (0..=n_max).map(|j| BigInt::from(j) * b.at(j)).collect();
    let rhs = |n: u64| -> BigInt {
        let conv: BigInt = (0..=n)
            .map(|i| &weighted[(n - i) as usize] * lower.at(i))
            .sum();
        conv * m
    };
    let hit = par::first_failure(0..n_max + 1, |n| BigInt::from(n) * full.at(n) != rhs(n));
    let identity = CheckReport::from_outcome(
        "identity",
        n_max + 1,
        hit.map(|n| {
            (
                vec![("m", m as i64), ("n", n as i64)],
                format!("n b_m(n) != {}", rhs(n)),
            )
        }),
    );
    let mb = BigInt::from(m);
    let coprime = |n: u64| n.gcd(&m) == 1;
    let hit = par::first_failure(0..n_max + 1, |n| {
        coprime(n) && !full.at(n).mod_floor(&mb).is_zero()
    });
    let divides = CheckReport::from_outcome(
        "coprime-divisibility",
        par::count(0..n_max + 1, coprime),
        hit.map(|n| {
            (
                vec![("m", m as i64), ("n", n as i64)],
                format!("{m} does not divide b_m(n)"),
            )
        }),
    );
    Ok(CheckReport::combine(
        format!("derivative-convolution-b{m}"),
        [identity, divides],
    ))
}

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Reductions mod `p` for `M = r p^s`, `n <= n_max`:
/// `b_M(n) = 0` unless `p^s | n`, where it equals `b_r(n / p^s)`;
/// when `r = 1`, `b_M((2n+1)M) = b_M(2nM)`; and `b_M(n)` is divisible by
/// every prime of `M` once `n` avoids each prime-power factor of `M`.
pub fn check_prime_power_colors(r: u64, p: u64, s: u32, n_max: u64) -> Result<CheckReport> {
    let q = prime_power(p, s)?;
    if r == 0 {
        return Err(invalid("need r >= 1"));
    }
    let big_m = r.checked_mul(q).ok_or_else(|| invalid("r p^s overflows"))?;
    let full = BmSeq::with_max(big_m, n_max)?;
    let base = BmSeq::with_max(r, n_max / q)?;
    let pb = BigInt::from(p);
    let witness = |n: u64| {
        vec![
            ("r", r as i64),
            ("p", p as i64),
            ("s", s as i64),
            ("n", n as i64),
        ]
    };
    let mut parts = Vec::new();

    let expected = |n: u64| {
        if n.is_multiple_of(q) {
            base.at(n / q).clone()
        } else {
            BigInt::zero()
        }
    };
    let hit = par::first_failure(0..n_max + 1, |n| {
        !(full.at(n) - expected(n)).mod_floor(&pb).is_zero()
    });
    parts.push(CheckReport::from_outcome(
        "reduction",
        n_max + 1,
        hit.map(|n| {
            (
                witness(n),
                format!("b_M(n) differs from {} mod {p}", expected(n)),
            )
        }),
    ));

    if r == 1 {
        let count = (n_max / big_m).div_ceil(2);
        let hit = par::first_failure(0..count, |n| {
            let odd = full.at((2 * n + 1) * big_m);
            let even = full.at(2 * n * big_m);
            !(odd - even).mod_floor(&pb).is_zero()
        });
        parts.push(CheckReport::from_outcome(
            "odd-even-multiple",
            count,
            hit.map(|n| (witness(n), "b_M((2n+1)M) differs from b_M(2nM)".into())),
        ));
    }

    let factors = factor(big_m);
    let radical: u64 = factors.iter().map(|&(f, _)| f).product();
    let rb = BigInt::from(radical);
    let avoids = |n: u64| factors.iter().all(|&(f, e)| !n.is_multiple_of(f.pow(e)));
    let hit = par::first_failure(0..n_max + 1, |n| {
        avoids(n) && !full.at(n).mod_floor(&rb).is_zero()
    });
    parts.push(CheckReport::from_outcome(
        "radical-divides",
        par::count(0..n_max + 1, avoids),
        hit.map(|n| (witness(n), format!("{radical} does not divide b_M(n)"))),
    ));

    Ok(CheckReport::combine(
        format!("prime-power-colors-b{big_m}"),
        parts,
    ))
}

/// Three short-sum congruences for `n_min <= n <= n_max`:
/// `sum_{i=0..8} b_4(4(n-i)+1) = b_4(n) (mod 3)` from `n = 8`,
/// `sum_{i=0..4} b_2(4(n-i)) = b_2(n) (mod 5)` and
/// `sum_{i=0..4} b_2(4(n-i)+2) = b_2(n-2) (mod 5)` from `n = 4`.
pub fn check_short_sum_congruences(n_max: u64) -> Result<CheckReport> {
    if n_max < 8 {
        return Err(invalid("need n_max >= 8"));
    }
    let b2 = BmSeq::with_max(2, 4 * n_max + 2)?;
    let b4 = BmSeq::with_max(4, 4 * n_max + 1)?;
    // (name, seq, modulus, terms, offset, rhs shift, first n)
    let cases: [(&str, &BmSeq, i64, i64, i64, i64, u64); 3] = [
        ("b4-mod-3", &b4, 3, 9, 1, 0, 8),
        ("b2-mod-5-even", &b2, 5, 5, 0, 0, 4),
        ("b2-mod-5-two", &b2, 5, 5, 2, 2, 4),
    ];
    let mut parts = Vec::new();
    for (name, seq, modulus, terms, offset, shift, first) in cases {
        let md = BigInt::from(modulus);
        let diff = |n: i64| -> BigInt {
            let sum: BigInt = (0..terms).map(|i| seq.get(4 * (n - i) + offset)).sum();
            sum - seq.get(n - shift)
        };
        let hit = par::first_failure(first..n_max + 1, |n| {
            !diff(n as i64).mod_floor(&md).is_zero()
        });
        parts.push(CheckReport::from_outcome(
            name,
            n_max + 1 - first,
            hit.map(|n| {
                (
                    vec![("n", n as i64)],
                    format!("difference {} mod {modulus}", diff(n as i64)),
                )
            }),
        ));
    }
    Ok(CheckReport::combine("short-sum-congruences", parts))
}

/// `b_(2^k - 1)(n) = sum_j t(n-j) b_(2^k)(j)` for `n <= n_max`; for
/// `k = 0` the left side is `[n = 0]`, i.e. Thue-Morse inverts `b`.
pub fn check_ptm_bridge(k: u32, n_max: u64) -> Result<CheckReport> {
    if k > 20 {
        return Err(invalid("need k <= 20"));
    }
    let upper = BmSeq::with_max(1 << k, n_max)?;
    let lower = if k == 0 {
        None
    } else {
        Some(BmSeq::with_max((1 << k) - 1, n_max)?)
    };
    let lhs = |n: u64| match &lower {
        Some(s) => s.at(n).clone(),
        None if n == 0 => BigInt::one(),
        None => BigInt::zero(),
    };
    let rhs = |n: u64| -> BigInt { (0..=n).map(|j| ptm(n - j) * upper.at(j)).sum() };
    let hit = par::first_failure(0..n_max + 1, |n| lhs(n) != rhs(n));
    Ok(CheckReport::from_outcome(
        format!("thue-morse-bridge-k{k}"),
        n_max + 1,
        hit.map(|n| {
            (
                vec![("k", k as i64), ("n", n as i64)],
                format!("{} != {}", lhs(n), rhs(n)),
            )
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_congruences_small() {
        for (p, s) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
            let r = check_prime_power_congruences(p, s, 256).unwrap();
            assert!(r.ok(), "{r}");
        }
        assert!(matches!(
            check_prime_power_congruences(4, 1, 8),
            Err(Error::NotPrime(4))
        ));
    }

    #[test]
    fn derivative_convolution_small() {
        for m in 2..=6 {
            let r = check_derivative_convolution(m, 200).unwrap();
            assert!(r.ok(), "{r}");
        }
    }

    #[test]
    fn colors_and_sums() {
        for (r, p, s) in [(1, 3, 1), (2, 3, 1), (1, 2, 2), (3, 5, 1)] {
            let rep = check_prime_power_colors(r, p, s, 600).unwrap();
            assert!(rep.ok(), "{rep}");
        }
        assert_eq!(factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert!(check_short_sum_congruences(300).unwrap().ok());
        for k in 0..=3 {
            assert!(check_ptm_bridge(k, 300).unwrap().ok());
        }
    }
}
