use crate::error::{invalid, Error, Result};
use crate::par;
use crate::report::CheckReport;

/// `t_2(0..=n_max)` from `t_2(2n) = t_2(n) + t_2(n-1)`,
/// `t_2(2n+1) = -2 t_2(n)`. Values satisfy `|t_2(n)| <= n + 1`.
pub fn t2_prefix(n_max: u64) -> Vec<i64> {
    let mut t = Vec::with_capacity(n_max as usize + 1);
    t.push(1i64);
    for n in 1..=n_max as usize {
        let h = n / 2;
        let v = if n % 2 == 1 {
            -2 * t[h]
        } else {
            t[h] + t[h - 1]
        };
        t.push(v);
    }
    t
}

/// The partner index `n' = n + (-1)^e 2^(v+1)` where `m = t_2(n)`,
/// `v = nu2(m)` and `e = v + (m - 2^v) / 2^(v+1)`.
///
/// Needs `t2` to cover `n`; the result may exceed the prefix.
pub fn t2_symmetry_partner(t2: &[i64], n: u64) -> Result<u64> {
    let m = *t2
        .get(n as usize)
        .ok_or_else(|| invalid(format!("prefix does not reach {n}")))?;
    if m == 0 {
        return Err(Error::Invariant(format!("t_2({n}) = 0")));
    }
    let v = m.trailing_zeros();
    let pow = 1i64 << v;
    // (m - 2^v) / 2^(v+1) is exact: m / 2^v is odd.
    let e = v as i64 + (m - pow) / (2 * pow);
    let step = 2 * pow;
    let partner = if e.rem_euclid(2) == 0 {
        n as i64 + step
    } else {
        n as i64 - step
    };
    u64::try_from(partner).map_err(|_| Error::Invariant(format!("negative partner for n = {n}")))
}

/// For even `n = 2 N1` the partner rule reduces to `n' = n + 2 (-1)^N1`
/// (with `t_2(2 N1) = 1 + 2 N1 mod 4`). Used as a second reading.
fn even_partner(n: u64) -> i64 {
    let n1 = n / 2;
    if n1.is_multiple_of(2) {
        n as i64 + 2
    } else {
        n as i64 - 2
    }
}

/// For `n <= n_max`: the partner exists, `t_2(n') = -t_2(n)`, and the map is
/// an involution. The number of even `n` where the general rule and the
/// even-index shortcut disagree is reported as a note.
pub fn check_symmetry(n_max: u64) -> CheckReport {
    // |t_2(n)| <= n + 1, so partners stay below 3 n_max + 3.
    let t2 = t2_prefix(3 * n_max + 3);
    let fails = |n: u64| match t2_symmetry_partner(&t2, n) {
        Err(_) => true,
        Ok(p) => {
            t2[p as usize] != -t2[n as usize]
                || t2_symmetry_partner(&t2, p).map_or(true, |back| back != n)
        }
    };
    let hit = par::first_failure(0..n_max + 1, fails);
    let disagree = par::count(0..n_max / 2 + 1, |h| {
        let n = 2 * h;
        n >= 4 && t2_symmetry_partner(&t2, n).ok().map(|p| p as i64) != Some(even_partner(n))
    });
    CheckReport::from_outcome(
        "t2-symmetry",
        n_max + 1,
        hit.map(|n| {
            (
                vec![("n", n as i64)],
                format!("t_2({n}) = {}", t2[n as usize]),
            )
        }),
    )
    .with_note(format!("even-index shortcut disagreements: {disagree}"))
}

/// `t_2(8n+4) = t_2(2^m n + 4)`, `t_2(8n+6) = t_2(2^m n + 6)`,
/// `t_2(8n) = t_2(2^m n + 2^m - 8)`, `t_2(8n+2) = t_2(2^m n + 2^m - 6)`
/// for `3 <= m <= 8` and `1 <= n <= n_max`.
pub fn check_kinf(n_max: u64) -> CheckReport {
    const M_MAX: u32 = 8;
    let t2 = t2_prefix((n_max + 1) << M_MAX);
    let at = |i: u64| t2[i as usize];
    let mut reports = Vec::new();
    for m in 3..=M_MAX {
        let p = 1u64 << m;
        let hit = par::first_failure(1..n_max + 1, |n| {
            at(8 * n + 4) != at(p * n + 4)
                || at(8 * n + 6) != at(p * n + 6)
                || at(8 * n) != at(p * n + p - 8)
                || at(8 * n + 2) != at(p * n + p - 6)
        });
        reports.push(CheckReport::from_outcome(
            "t2-shift-family",
            n_max,
            hit.map(|n| {
                (
                    vec![("m", m as i64), ("n", n as i64)],
                    "shifted value differs".into(),
                )
            }),
        ));
    }
    CheckReport::combine("t2-shift-family", reports)
}

/// `t_2(2n) = 1 + 2n (mod 4)` for `n <= n_max`.
pub fn check_t2_mod4(n_max: u64) -> CheckReport {
    let t2 = t2_prefix(2 * n_max);
    let hit = par::first_failure(0..n_max + 1, |n| {
        t2[2 * n as usize].rem_euclid(4) != ((1 + 2 * n) % 4) as i64
    });
    CheckReport::from_outcome(
        "t2-even-mod-4",
        n_max + 1,
        hit.map(|n| {
            (
                vec![("n", n as i64)],
                format!("t_2({}) = {}", 2 * n, t2[2 * n as usize]),
            )
        }),
    )
}
