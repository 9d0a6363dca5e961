use num_bigint::BigInt;
use num_traits::Signed;

use super::seq::TmSeq;
use crate::par;
use crate::report::CheckReport;

/// `t_m(n)^2 <= m^2 n^m` for `1 <= n <= n_max` (the bound fails
/// trivially at `n = 0`, where the right side vanishes).
pub fn check_growth(seq: &TmSeq, n_max: u64) -> CheckReport {
    let m = seq.m();
    let m2 = BigInt::from(m * m);
    let hit = par::first_failure(1..n_max + 1, |n| {
        let v = seq.at(n);
        v * v > &m2 * BigInt::from(n).pow(m as u32)
    });
    CheckReport::from_outcome(
        "t-growth",
        n_max,
        hit.map(|n| {
            (
                vec![("m", m as i64), ("n", n as i64)],
                format!("t_{m}({n}) = {}", seq.at(n)),
            )
        }),
    )
}

/// `2|t_2(n)| >= |t_2(n-1) + t_2(n+1)|` for `1 <= n <= n_max`, with
/// equality at even `n`. `t2` must reach `n_max + 1`.
pub fn check_mean(t2: &[i64], n_max: u64) -> CheckReport {
    let hit = par::first_failure(1..n_max + 1, |n| {
        let i = n as usize;
        let lhs = 2 * t2[i].abs();
        let rhs = (t2[i - 1] + t2[i + 1]).abs();
        lhs < rhs || (n % 2 == 0 && lhs != rhs)
    });
    CheckReport::from_outcome(
        "t2-mean",
        n_max,
        hit.map(|n| (vec![("n", n as i64)], "mean inequality fails".into())),
    )
}

/// `t_2(n)^2 > t_2(n-1) t_2(n+1)` for `1 <= n <= n_max`, and
/// `t_2(n)^2 = t_2(n-1) t_2(n+1) + 1` at `n = 2^k - 4` for every
/// `k >= 3` with `2^k - 4 <= n_max`. `t2` must reach `n_max + 1`.
pub fn check_logconcave(t2: &[i64], n_max: u64) -> CheckReport {
    let gap = |i: usize| {
        let (a, b, c) = (t2[i - 1] as i128, t2[i] as i128, t2[i + 1] as i128);
        b * b - a * c
    };
    let hit = par::first_failure(1..n_max + 1, |n| gap(n as usize) <= 0);
    let strict = CheckReport::from_outcome(
        "t2-log-concave",
        n_max,
        hit.map(|n| (vec![("n", n as i64)], format!("gap {}", gap(n as usize)))),
    );
    let mut equality_cases = 0;
    let mut equality_fail = None;
    for k in 3..63u32 {
        let n = (1u64 << k) - 4;
        if n > n_max {
            break;
        }
        equality_cases += 1;
        if gap(n as usize) != 1 && equality_fail.is_none() {
            equality_fail = Some((
                vec![("k", k as i64), ("n", n as i64)],
                "gap is not 1".to_string(),
            ));
        }
    }
    let eq = CheckReport::from_outcome("t2-log-concave-equality", equality_cases, equality_fail);
    CheckReport::combine("t2-log-concave", [strict, eq])
}

fn sign(v: &BigInt) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// No three consecutive values `t_m(n-1), t_m(n), t_m(n+1)` share a sign
/// class (zero is its own class), for `1 <= n <= n_max`.
pub fn check_signs(seq: &TmSeq, n_max: u64) -> CheckReport {
    let m = seq.m();
    let hit = par::first_failure(1..n_max + 1, |n| {
        let s = sign(seq.at(n));
        sign(seq.at(n - 1)) == s && sign(seq.at(n + 1)) == s
    });
    CheckReport::from_outcome(
        "t-three-signs",
        n_max,
        hit.map(|n| {
            (
                vec![("m", m as i64), ("n", n as i64)],
                "three equal signs".into(),
            )
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tm::t2_prefix;

    #[test]
    fn t2_inequalities() {
        let t2 = t2_prefix((1 << 12) + 1);
        assert!(check_mean(&t2, 1 << 12).ok());
        let lc = check_logconcave(&t2, 1 << 12);
        assert!(lc.ok());
        assert_eq!(lc.cases, 4096 + 10);
        // n = 12 = 2^4 - 4.
        assert_eq!(t2[12] * t2[12] - t2[11] * t2[13], 1);
        // Mean equality at n = 6.
        assert_eq!(2 * t2[6].abs(), (t2[5] + t2[7]).abs());
        let s = TmSeq::with_max(2, (1 << 12) + 1).unwrap();
        assert!(check_signs(&s, 1 << 12).ok());
        assert!(check_growth(&s, 1 << 12).ok());
    }
}
