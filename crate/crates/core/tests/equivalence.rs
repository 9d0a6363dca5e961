//! Cross-checks between independent constructions of the same sequences.
//! The oracles here are deliberately naive and share no code with the
//! library beyond the types.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use ptmpow::bm::{self, BmSeq, HPolyTable};
use ptmpow::fpoly::FSeries;
use ptmpow::harness::{cache_load, cache_store, CachedPrefix, Family};
use ptmpow::tm::TmSeq;

fn thue_morse(n: u64) -> i64 {
    if n.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    (0..a.len())
        .map(|n| (0..=n).map(|k| &a[k] * &b[n - k]).sum())
        .collect()
}

fn power(base: &[BigInt], m: u64) -> Vec<BigInt> {
    let mut acc: Vec<BigInt> = (0..base.len())
        .map(|n| {
            if n == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    for _ in 0..m {
        acc = convolve(&acc, base);
    }
    acc
}

/// Binary partitions of `n` by memoised recursion on the largest part.
fn binary_partitions(n: u64, largest: u64, memo: &mut HashMap<(u64, u64), BigInt>) -> BigInt {
    if n == 0 || largest == 1 {
        return BigInt::one();
    }
    if let Some(v) = memo.get(&(n, largest)) {
        return v.clone();
    }
    let mut total = binary_partitions(n, largest / 2, memo);
    if largest <= n {
        total += binary_partitions(n - largest, largest, memo);
    }
    memo.insert((n, largest), total.clone());
    total
}

fn b1_naive(n_max: u64) -> Vec<BigInt> {
    let mut memo = HashMap::new();
    (0..=n_max)
        .map(|n| {
            let top = if n == 0 {
                1
            } else {
                1u64 << (63 - n.leading_zeros())
            };
            binary_partitions(n, top, &mut memo)
        })
        .collect()
}

#[test]
fn b_m_three_constructions_agree() {
    let base = b1_naive(60);
    for m in 1..=5 {
        let naive = power(&base, m);
        let rec = BmSeq::with_max(m, 60).unwrap();
        let alt = bm::bm_alt(m, 60).unwrap();
        assert_eq!(rec.values(), &naive[..], "recurrence, m = {m}");
        assert_eq!(alt, naive, "full-history recurrence, m = {m}");
    }
}

#[test]
fn b1_recurrence_matches_coin_change_to_1e5() {
    const N: u64 = 100_000;
    let rec = BmSeq::with_max(1, N).unwrap();
    // b(2n+1) = b(2n), b(2n) = b(2n-1) + b(n).
    let mut b = vec![BigInt::one()];
    for n in 1..=N as usize {
        let next = if n % 2 == 1 {
            b[n - 1].clone()
        } else {
            &b[n - 1] + &b[n / 2]
        };
        b.push(next);
    }
    assert_eq!(rec.values(), &b[..]);
    assert_eq!(b[..=200], b1_naive(200)[..]);
}

#[test]
fn t_m_matches_direct_convolution() {
    let ptm: Vec<BigInt> = (0..=80).map(|n| BigInt::from(thue_morse(n))).collect();
    for m in 1..=6 {
        let naive = power(&ptm, m);
        let rec = TmSeq::with_max(m, 80).unwrap();
        assert_eq!(rec.values(), &naive[..], "m = {m}");
    }
}

#[test]
fn f_polys_interpolate_both_families() {
    let series = FSeries::up_to(40);
    let b1 = b1_naive(40);
    let ptm: Vec<BigInt> = (0..=40).map(|n| BigInt::from(thue_morse(n))).collect();
    for m in 1..=5u64 {
        let b = power(&b1, m);
        let t = power(&ptm, m);
        for n in 0..=40 {
            let f = series.f(n);
            assert_eq!(
                f.eval_int(-(m as i64)),
                b[n as usize].clone().into(),
                "f_{n}(-{m})"
            );
            assert_eq!(
                f.eval_int(m as i64),
                t[n as usize].clone().into(),
                "f_{n}({m})"
            );
        }
    }
}

#[test]
fn thue_morse_convolved_with_b_2k_gives_b_2k_minus_1() {
    for k in 0..=3 {
        let r = bm::check_ptm_bridge(k, 300).unwrap();
        assert!(r.ok(), "{r}");
    }
    // Direct form for k = 0: the Thue-Morse series inverts the b series.
    let b = b1_naive(100);
    let ptm: Vec<BigInt> = (0..=100).map(|n| BigInt::from(thue_morse(n))).collect();
    let product = convolve(&b, &ptm);
    assert!(product[0].is_one() && product[1..].iter().all(Zero::is_zero));
}

#[test]
fn h_polys_satisfy_their_defining_identity() {
    let mut table = HPolyTable::new();
    for m in 1..=6u64 {
        let b = power(&b1_naive(600), m);
        for k in 1..=3u32 {
            let step = 1usize << k;
            for i in 0..step {
                let h = table.get(i as u64, k, m).unwrap();
                // (1-x)^(km) * sum b(step n + i) x^n == h(x) * sum b(n) x^n, to order 40.
                let order = 40;
                let sub: Vec<BigInt> = (0..order).map(|n| b[step * n + i].clone()).collect();
                let mut one_minus = vec![BigInt::one()];
                for _ in 0..k as u64 * m {
                    let mut next = one_minus.clone();
                    next.push(BigInt::zero());
                    for j in 1..next.len() {
                        next[j] -= &one_minus[j - 1];
                    }
                    one_minus = next;
                }
                one_minus.resize(order.max(one_minus.len()), BigInt::zero());
                let hc: Vec<BigInt> = (0..order).map(|j| h.coeff(j)).collect();
                let lhs = convolve(&one_minus[..order], &sub);
                let rhs = convolve(&hc, &b[..order]);
                assert_eq!(lhs, rhs, "h_{{{i},{k},{m}}}");
                let r = bm::check_h_identity(&mut table, i as u64, k, m).unwrap();
                assert!(r.ok(), "{r}");
            }
        }
    }
}

#[test]
fn b_m_positive_and_weakly_increasing() {
    for m in 1..=8 {
        let s = BmSeq::with_max(m, 2000).unwrap();
        let v = s.values();
        assert!(v.iter().all(Signed::is_positive), "m = {m}");
        assert!(v.windows(2).all(|w| w[0] <= w[1]), "m = {m}");
        if m >= 2 {
            assert!(v.windows(2).all(|w| w[0] < w[1]), "strict for m = {m}");
        }
    }
}

#[test]
fn cache_round_trips_large_prefixes() {
    let dir = tempfile::tempdir().unwrap();
    for (family, m) in [(Family::T, 2), (Family::B, 3)] {
        let prefix = CachedPrefix::compute(family, m, 1 << 16).unwrap();
        let path = dir.path().join(format!("{family}{m}.txt"));
        cache_store(&prefix, &path).unwrap();
        let back = cache_load(&path).unwrap();
        assert_eq!(back, prefix);
        let fresh = match family {
            Family::T => TmSeq::with_max(m, (1 << 16) - 1).unwrap().values().to_vec(),
            Family::B => BmSeq::with_max(m, (1 << 16) - 1).unwrap().values().to_vec(),
        };
        assert_eq!(back.values, fresh);
    }
}
