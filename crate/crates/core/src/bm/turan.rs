use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::seq::BmSeq;
use crate::arith::binom;
use crate::error::{invalid, Result};
use crate::par;
use crate::report::CheckReport;

type Identity = (&'static str, fn(&BmSeq, &[BigInt], i64) -> (BigInt, BigInt));

/// `b(n)^2 - b(n-1) b(n+1)`.
fn turan(s: &BmSeq, n: i64) -> BigInt {
    let b = s.get(n);
    &b * &b - s.get(n - 1) * s.get(n + 1)
}

const B1_IDENTITIES: [Identity; 2] = [
    ("b1-even", |s, _, n| {
        (turan(s, 2 * n), s.get(2 * n) * s.get(n))
    }),
    ("b1-odd", |s, _, n| {
        (turan(s, 2 * n - 1), -(s.get(2 * n - 2) * s.get(n)))
    }),
];

// `sums[n] = b_2(0) + ... + b_2(n)`.
const B2_IDENTITIES: [Identity; 3] = [
    ("b2-even", |s, sums, n| {
        let p = &sums[n as usize];
        (turan(s, 2 * n), p * p)
    }),
    ("b2-odd-sum-to-n", |s, sums, n| {
        let p = &sums[n as usize];
        (turan(s, 2 * n - 1), p * p - s.get(2 * n - 2) * s.get(n))
    }),
    ("b2-odd-sum-to-n-minus-1", |s, sums, n| {
        let p = &sums[n as usize - 1];
        (turan(s, 2 * n - 1), p * p - s.get(2 * n - 2) * s.get(n))
    }),
];

/// Closed forms for `b_m(n)^2 - b_m(n-1) b_m(n+1)` (`m` in {1, 2}) at
/// `1 <= n <= n_max`, and the sign alternation
/// `(-1)^n (b_m(n)^2 - b_m(n-1) b_m(n+1)) > 0`.
///
/// For `m = 2` the sign of `b_2(2n-1)^2 - b_2(2n-2) b_2(2n)` is only
/// observed; the report notes how many `n` gave a non-negative value.
pub fn check_turan_b(m: u64, n_max: u64) -> Result<CheckReport> {
    let identities: &[Identity] = match m {
        1 => &B1_IDENTITIES,
        2 => &B2_IDENTITIES,
        _ => return Err(invalid("closed Turan forms exist only for m = 1, 2")),
    };
    let s = BmSeq::with_max(m, 2 * n_max + 1)?;
    let sums: Vec<BigInt> = s
        .values()
        .iter()
        .take(n_max as usize + 1)
        .scan(BigInt::zero(), |acc, v| {
            *acc += v;
            Some(acc.clone())
        })
        .collect();

    let mut parts = Vec::new();
    for &(name, identity) in identities {
        let hit = par::first_failure(1..n_max + 1, |n| {
            let (lhs, rhs) = identity(&s, &sums, n as i64);
            lhs != rhs
        });
        parts.push(CheckReport::from_outcome(
            format!("turan-{name}"),
            n_max,
            hit.map(|n| {
                let (lhs, rhs) = identity(&s, &sums, n as i64);
                (
                    vec![("m", m as i64), ("n", n as i64)],
                    format!("lhs {lhs} != rhs {rhs}"),
                )
            }),
        ));
    }

    let wrong_sign = |n: u64| {
        let t = turan(&s, n as i64);
        let signed = if n.is_multiple_of(2) { t } else { -t };
        !signed.is_positive()
    };
    let hit = par::first_failure(1..2 * n_max + 1, wrong_sign);
    parts.push(CheckReport::from_outcome(
        "turan-sign-alternation",
        2 * n_max,
        hit.map(|n| {
            (
                vec![("m", m as i64), ("n", n as i64)],
                format!("value {}", turan(&s, n as i64)),
            )
        }),
    ));

    let mut report = CheckReport::combine(format!("turan-b{m}"), parts);
    if m == 2 {
        let nonneg = par::count(1..n_max + 1, |n| !turan(&s, 2 * n as i64 - 1).is_negative());
        report = report.with_note(format!(
            "b_2(2n-1)^2 - b_2(2n-2)b_2(2n) >= 0 for {nonneg} of {n_max} values of n"
        ));
    }
    Ok(report)
}

/// Parity of `b_m(n)` for `n <= n_max`, with `m = 2^k (2u+1)`:
/// for even `m`, `b_m(n) = C(m, n) + 2^(k+1) C(m-2, n-2) (mod 2^(k+2))`;
/// for odd `m`, `b_m(n) = C(m, n) (mod 2)` and `b_m(n)` is not divisible
/// by 4 for at least `floor(n_max / 64)` indices.
pub fn check_parity_b(m: u64, n_max: u64) -> Result<CheckReport> {
    let s = BmSeq::with_max(m, n_max)?;
    let k = m.trailing_zeros();
    let c = |a: u64, b: i64| -> BigInt {
        if b < 0 {
            BigInt::zero()
        } else {
            BigInt::from(binom(a, b as u64))
        }
    };
    let cases = n_max + 1;
    if m.is_multiple_of(2) {
        let modulus = BigInt::from(1u8) << (k + 2);
        let lift = BigInt::from(1u8) << (k + 1);
        let expected =
            |n: u64| (c(m, n as i64) + &lift * c(m - 2, n as i64 - 2)).mod_floor(&modulus);
        let hit = par::first_failure(0..cases, |n| s.at(n).mod_floor(&modulus) != expected(n));
        return Ok(CheckReport::from_outcome(
            format!("parity-b{m}"),
            cases,
            hit.map(|n| {
                (
                    vec![("m", m as i64), ("n", n as i64)],
                    format!(
                        "b_m(n) = {} but expected {} mod {modulus}",
                        s.at(n).mod_floor(&modulus),
                        expected(n)
                    ),
                )
            }),
        ));
    }

    let four = BigInt::from(4);
    let hit = par::first_failure(0..cases, |n| s.at(n).is_odd() != c(m, n as i64).is_odd());
    let mod2 = CheckReport::from_outcome(
        "mod-2",
        cases,
        hit.map(|n| {
            (
                vec![("m", m as i64), ("n", n as i64)],
                "parity differs from C(m, n)".into(),
            )
        }),
    );
    let hits = par::count(0..cases, |n| !s.at(n).mod_floor(&four).is_zero());
    let needed = n_max / 64;
    let mod4 = if hits >= needed {
        CheckReport::passed("not-0-mod-4-count", cases)
    } else {
        CheckReport::failed(
            "not-0-mod-4-count",
            cases,
            &[("m", m as i64), ("n", n_max as i64)],
            format!("only {hits} indices with b_m(n) != 0 mod 4, need {needed}"),
        )
    }
    .with_note(format!("{hits} of {cases} values are not divisible by 4"));
    Ok(CheckReport::combine(format!("parity-b{m}"), [mod2, mod4]))
}
