use super::seq::BmSeq;
use crate::arith::{nu2_int, Valuation};
use crate::error::{invalid, Result};
use crate::par;
use crate::report::CheckReport;
use crate::tm::ptm;

/// `nu2(b(n))` as `|t(n) - 2 t(n-1) + t(n-2)| / 2` with `t` the
/// Thue-Morse signs, for `n >= 2`.
pub fn v2_b1_churchhouse(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(invalid("the Thue-Morse form needs n >= 2"));
    }
    let second_difference = ptm(n) - 2 * ptm(n - 1) + ptm(n - 2);
    Ok(second_difference.unsigned_abs() / 2)
}

/// `nu2(b(n))` for every `n`: zero at 0 and 1.
fn v2_b1(n: u64) -> u64 {
    if n < 2 {
        0
    } else {
        v2_b1_churchhouse(n).expect("n >= 2")
    }
}

/// `nu2(b_(2^k - 1)(n))` from `n = 2^(k+2) q + i`: `nu2(b(8q))` for
/// `i < 2^k`, then 1, 2, 1 on the next three blocks of length `2^k`.
pub fn v2_b2k1_closed(k: u32, n: u64) -> Result<u64> {
    if k == 0 || k > 60 {
        return Err(invalid("need 1 <= k <= 60"));
    }
    let q = n >> (k + 2);
    let block = (n >> k) & 3;
    Ok(match block {
        0 => v2_b1(8 * q),
        2 => 2,
        _ => 1,
    })
}

/// Thue-Morse form against the direct valuation of `b(n)`,
/// `2 <= n <= n_max`.
pub fn check_churchhouse(n_max: u64) -> CheckReport {
    let s = BmSeq::with_max(1, n_max).expect("m = 1");
    let direct = |n: u64| nu2_int(s.at(n));
    let hit = par::first_failure(2..n_max + 1, |n| {
        direct(n) != Valuation::Finite(v2_b1_churchhouse(n).unwrap())
    });
    CheckReport::from_outcome(
        "v2-b1-thue-morse",
        n_max.saturating_sub(1),
        hit.map(|n| {
            (
                vec![("n", n as i64)],
                format!(
                    "direct {} but formula {}",
                    direct(n),
                    v2_b1_churchhouse(n).unwrap()
                ),
            )
        }),
    )
}

/// Piecewise valuation of `b_(2^k - 1)(n)` against the direct one for
/// `n <= n_max`, plus: values in {0, 1, 2} and zero exactly when
/// `n < 2^k`.
pub fn check_v2_b2k1(k: u32, n_max: u64) -> Result<CheckReport> {
    if k == 0 || k > 20 {
        return Err(invalid("need 1 <= k <= 20"));
    }
    let s = BmSeq::with_max((1 << k) - 1, n_max)?;
    let direct = |n: u64| nu2_int(s.at(n));
    let cases = n_max + 1;
    let witness = |n: u64| vec![("k", k as i64), ("n", n as i64)];

    let hit = par::first_failure(0..cases, |n| {
        direct(n) != Valuation::Finite(v2_b2k1_closed(k, n).unwrap())
    });
    let table = CheckReport::from_outcome(
        "piecewise",
        cases,
        hit.map(|n| {
            let msg = format!(
                "direct {} but table {}",
                direct(n),
                v2_b2k1_closed(k, n).unwrap()
            );
            (witness(n), msg)
        }),
    );
    let hit = par::first_failure(0..cases, |n| !matches!(direct(n), Valuation::Finite(0..=2)));
    let range = CheckReport::from_outcome(
        "range-0-2",
        cases,
        hit.map(|n| (witness(n), format!("valuation {}", direct(n)))),
    );
    let small = (1u64 << k) - 1;
    let hit = par::first_failure(0..cases, |n| {
        (direct(n) == Valuation::Finite(0)) != (n <= small)
    });
    let zero = CheckReport::from_outcome(
        "zero-iff-small",
        cases,
        hit.map(|n| {
            (
                witness(n),
                format!("valuation {} with 2^k - 1 = {small}", direct(n)),
            )
        }),
    );
    Ok(CheckReport::combine(
        format!("v2-b{}", small),
        [table, range, zero],
    ))
}
