//! Bodies of the conjecture and question campaigns.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, Sign};
use num_traits::Zero;
use serde_json::{json, Value};

use super::campaign::Outcome;
use crate::arith::{nu2_int, Valuation};
use crate::bm::BmSeq;
use crate::error::{invalid, Result};
use crate::par;
use crate::report::CheckReport;
use crate::tm::TmSeq;

fn nu2_u64(n: u64) -> u64 {
    n.trailing_zeros() as u64
}

/// Valuation as a JSON-friendly integer, `-1` for zero.
fn val_code(v: Valuation) -> i64 {
    v.finite().map_or(-1, |x| x as i64)
}

fn turan_gap(s: &[BigInt], n: usize) -> BigInt {
    &s[n] * &s[n] - &s[n - 1] * &s[n + 1]
}

/// Distinct subsequences `n -> nu2(t_m(2^l n + j))` per level `l`,
/// compared on a common window of `(n_max + 1) >> levels` terms.
pub fn t_v2_regular(m_max: u64, levels: u32, n_max: u64) -> Result<Outcome> {
    let window = (n_max + 1) >> levels;
    if window == 0 {
        return Err(invalid("bound too small for the requested levels"));
    }
    let mut out = Outcome::new();
    for m in 2..=m_max {
        let seq = TmSeq::with_max(m, n_max)?;
        let vals: Vec<i64> = seq.values().iter().map(|v| val_code(nu2_int(v))).collect();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut new_by_level = Vec::new();
        for l in 0..=levels {
            let step = 1u64 << l;
            let before = seen.len();
            for j in 0..step {
                seen.insert((0..window).map(|q| vals[(step * q + j) as usize]).collect());
            }
            new_by_level.push(seen.len() - before);
        }
        out = out.observe(
            format!("m{m}"),
            json!({ "window": window, "new_by_level": new_by_level, "distinct": seen.len() }),
        );
    }
    Ok(out)
}

/// `nu2(t_m(2^shift n + j)) = a ceil(v/2) - b (v mod 2)` with
/// `v = nu2(n+1)`, for every index up to `n_max`.
pub fn t_valuation_formula(m: u64, shift: u32, a: u64, b: u64, n_max: u64) -> Result<Outcome> {
    let seq = TmSeq::with_max(m, n_max)?;
    let expected = |idx: u64| {
        let v = nu2_u64((idx >> shift) + 1);
        a * v.div_ceil(2) - b * (v % 2)
    };
    let actual = |idx: u64| nu2_int(seq.at(idx));
    let hit = par::first_failure(0..n_max + 1, |idx| {
        actual(idx) != Valuation::Finite(expected(idx))
    });
    let report = CheckReport::from_outcome(
        format!("t{m}-valuation"),
        n_max + 1,
        hit.map(|idx| {
            (
                vec![
                    ("n", (idx >> shift) as i64),
                    ("j", (idx & ((1 << shift) - 1)) as i64),
                    ("index", idx as i64),
                ],
                format!("valuation {} instead of {}", actual(idx), expected(idx)),
            )
        }),
    );
    Ok(Outcome::new().check(report))
}

/// For `m = 2^k + 1`, `2 <= k <= k_max`: `nu2(t_m(2^k n + j))` depends only
/// on `v = nu2(n+1)`, the resulting table `A_{k,v}` starts at 0 and is
/// strictly increasing.
pub fn t_pow2plus1_table(k_max: u32, n_max: u64) -> Result<Outcome> {
    let mut out = Outcome::new();
    for k in 2..=k_max {
        let m = (1u64 << k) + 1;
        let seq = TmSeq::with_max(m, n_max)?;
        let name = format!("table-k{k}");
        let mut table: BTreeMap<u64, u64> = BTreeMap::new();
        let mut failure = None;
        for idx in 0..=n_max {
            let (n, j) = (idx >> k, idx & ((1 << k) - 1));
            let v = nu2_u64(n + 1);
            let w = vec![
                ("k", k as i64),
                ("n", n as i64),
                ("j", j as i64),
                ("index", idx as i64),
            ];
            let Valuation::Finite(val) = nu2_int(seq.at(idx)) else {
                failure = Some((w, "t vanishes".to_string()));
                break;
            };
            let want = *table.entry(v).or_insert(val);
            if want != val {
                failure = Some((w, format!("valuation {val}, earlier {want} for v = {v}")));
                break;
            }
        }
        if failure.is_none() {
            let entries: Vec<(u64, u64)> = table.iter().map(|(&v, &a)| (v, a)).collect();
            if entries.first().is_some_and(|&(v, a)| v == 0 && a != 0) {
                failure = Some((
                    vec![("k", k as i64), ("n", 0), ("index", 0)],
                    "A_0 is not 0".to_string(),
                ));
            } else if let Some(p) = entries.windows(2).position(|w| w[1].1 <= w[0].1) {
                let (v, a) = entries[p + 1];
                failure = Some((
                    vec![
                        ("k", k as i64),
                        ("n", (1i64 << v) - 1),
                        ("index", ((1i64 << v) - 1) << k),
                    ],
                    format!(
                        "A_{v} = {a} does not exceed A_{} = {}",
                        entries[p].0, entries[p].1
                    ),
                ));
            }
        }
        out = out.check(CheckReport::from_outcome(name, n_max + 1, failure));
        let row: Vec<Value> = table.iter().map(|(v, a)| json!([v, a])).collect();
        out = out.observe(format!("k{k}"), Value::Array(row));
    }
    Ok(out)
}

/// Largest `nu2(b_m(n))`, `n <= n_max`, for `2 <= m <= m_max` with `m`
/// not of the form `2^k - 1`, with the indices where a new record is set.
pub fn b_v2_unbounded(m_max: u64, n_max: u64) -> Result<Outcome> {
    let mut out = Outcome::new();
    for m in 2..=m_max {
        if (m + 1).is_power_of_two() {
            continue;
        }
        let seq = BmSeq::with_max(m, n_max)?;
        let mut best: Option<u64> = None;
        let mut records = Vec::new();
        for n in 0..=n_max {
            if let Valuation::Finite(v) = nu2_int(seq.at(n)) {
                if best.is_none_or(|b| v > b) {
                    best = Some(v);
                    records.push(json!([n, v]));
                }
            }
        }
        out = out.observe(format!("m{m}"), json!({ "max": best, "records": records }));
    }
    Ok(out)
}

/// `b_M(2^(k+1) n) = b_M(2^(k-1) n) (mod 2^e(k))` for `M = colours(m)`,
/// `1 <= m <= m_max`, `m + 2 <= k <= k_max`, `2^(k+1) n <= n_max`.
pub fn b_pow2_congruence(
    colours: fn(u32) -> u64,
    exponent: fn(u32) -> u32,
    m_max: u32,
    k_max: u32,
    n_max: u64,
) -> Result<Outcome> {
    let mut out = Outcome::new();
    for m in 1..=m_max {
        let big_m = colours(m);
        let seq = BmSeq::with_max(big_m, n_max)?;
        let mut parts = Vec::new();
        let mut k = m + 2;
        while k <= k_max && k < 62 && (1u64 << (k + 1)) <= n_max {
            let modulus = BigInt::from(1) << exponent(k);
            let diff = |n: u64| seq.at(n << (k + 1)) - seq.at(n << (k - 1));
            let count = (n_max >> (k + 1)) + 1;
            let hit = par::first_failure(0..count, |n| !(diff(n) % &modulus).is_zero());
            parts.push(CheckReport::from_outcome(
                format!("k{k}"),
                count,
                hit.map(|n| {
                    (
                        vec![
                            ("m", m as i64),
                            ("k", k as i64),
                            ("n", n as i64),
                            ("index", (n << (k + 1)) as i64),
                        ],
                        format!("difference {} is not 0 mod 2^{}", diff(n), exponent(k)),
                    )
                }),
            ));
            k += 1;
        }
        out = out.check(CheckReport::combine(format!("b{big_m}"), parts));
    }
    Ok(out)
}

/// Empirical `f(k) = min_n nu2(b_m(2^(k+1) n) - b_m(2^(k-1) n))` over
/// `1 <= n`, `2^(k+1) n <= n_max`; `null` when every difference vanishes.
pub fn b_congruence_fk(m_max: u64, n_max: u64) -> Result<Outcome> {
    let mut out = Outcome::new();
    for m in 1..=m_max {
        let seq = BmSeq::with_max(m, n_max)?;
        let mut row = Vec::new();
        let mut k = 1u32;
        while (1u64 << (k + 1)) <= n_max {
            let f = (1..=n_max >> (k + 1))
                .filter_map(|n| nu2_int(&(seq.at(n << (k + 1)) - seq.at(n << (k - 1)))).finite())
                .min();
            row.push(json!([k, f]));
            k += 1;
        }
        out = out.observe(format!("m{m}"), Value::Array(row));
    }
    Ok(out)
}

/// Counts of `n` with `sgn t_m(3n+j) != (-1)^j` below dyadic fractions
/// of the range `3n + j <= n_max`.
pub fn t_sign_density(m_max: u64, n_max: u64) -> Result<Outcome> {
    let mut out = Outcome::new();
    for m in 2..=m_max {
        let seq = TmSeq::with_max(m, n_max)?;
        for j in 0..2u64 {
            let want = if j == 0 { Sign::Plus } else { Sign::Minus };
            let len = if n_max >= j { (n_max - j) / 3 + 1 } else { 0 };
            let mut rows = Vec::new();
            let mut count = 0u64;
            let checkpoints: Vec<u64> = [8, 4, 2, 1].iter().map(|d| len / d).collect();
            let mut next = 0;
            for n in 0..len {
                if seq.at(3 * n + j).sign() != want {
                    count += 1;
                }
                while next < checkpoints.len() && n + 1 == checkpoints[next] {
                    rows.push(json!([checkpoints[next], count]));
                    next += 1;
                }
            }
            out = out.observe(format!("m{m}-j{j}"), Value::Array(rows));
        }
    }
    Ok(out)
}

/// For `2 <= m <= m_max`, `1 <= n <= n_max`: `t_m(n-1), t_m(n), t_m(n+1)`
/// do not share a sign and `t_m(n)^2 > t_m(n-1) t_m(n+1)`.
pub fn t_three_signs(m_max: u64, n_max: u64) -> Result<Outcome> {
    let mut out = Outcome::new();
    for m in 2..=m_max {
        let seq = TmSeq::with_max(m, n_max + 1)?;
        let signs = crate::tm::check_signs(&seq, n_max);
        let vals = seq.values();
        let hit = par::first_failure(1..n_max + 1, |n| {
            turan_gap(vals, n as usize).sign() != Sign::Plus
        });
        let concave = CheckReport::from_outcome(
            "log-concave",
            n_max,
            hit.map(|n| {
                (
                    vec![("m", m as i64), ("n", n as i64)],
                    format!("gap {}", turan_gap(vals, n as usize)),
                )
            }),
        );
        out = out.check(CheckReport::combine(format!("t{m}"), [signs, concave]));
    }
    Ok(out)
}

/// `b_m(n)^2 - b_m(n-1) b_m(n+1) > 0` for `4 <= m <= m_max`, `1 <= n <= n_max`.
pub fn b_turan_m4plus(m_max: u64, n_max: u64) -> Result<Outcome> {
    let mut out = Outcome::new();
    for m in 4..=m_max {
        let seq = BmSeq::with_max(m, n_max + 1)?;
        let vals = seq.values();
        let hit = par::first_failure(1..n_max + 1, |n| {
            turan_gap(vals, n as usize).sign() != Sign::Plus
        });
        out = out.check(CheckReport::from_outcome(
            format!("b{m}"),
            n_max,
            hit.map(|n| {
                (
                    vec![("m", m as i64), ("n", n as i64)],
                    format!("gap {}", turan_gap(vals, n as usize)),
                )
            }),
        ));
    }
    Ok(out)
}

/// For `D(n) = b_3(n)^2 - b_3(n-1) b_3(n+1)`: some `n0 >= 1` has
/// `(-1)^n D(n) > 0` for `1 <= n <= n0` and `D(n) > 0` for
/// `n0 < n <= n_max`. The smallest candidate is the last `n` with
/// `D(n) <= 0` (at least 1).
pub fn b3_turan_crossover(n_max: u64) -> Result<Outcome> {
    if n_max < 1 {
        return Err(invalid("need n >= 1"));
    }
    let seq = BmSeq::with_max(3, n_max + 1)?;
    let vals = seq.values();
    let gaps: Vec<BigInt> = (1..=n_max as usize).map(|n| turan_gap(vals, n)).collect();
    let d = |n: u64| &gaps[n as usize - 1];
    let n0 = (1..=n_max)
        .rev()
        .find(|&n| d(n).sign() != Sign::Plus)
        .unwrap_or(1);
    let alternates = |n: u64| {
        let want = if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        d(n).sign() == want
    };
    let hit = (1..=n0).find(|&n| !alternates(n));
    let report = CheckReport::from_outcome(
        "b3-crossover",
        n_max,
        hit.map(|n| {
            (
                vec![("n", n as i64)],
                format!("D({n}) = {} breaks the alternation below n0 = {n0}", d(n)),
            )
        }),
    );
    let alternating_from_2 = (2..=n0).all(alternates);
    Ok(Outcome::new()
        .check(report)
        .observe("n0", n0)
        .observe("d1", d(1).to_string())
        .observe("alternates-on-2..=n0", alternating_from_2))
}

/// `t_m(n) != 0` for `4 <= m <= m_max`, `1 <= n <= n_max`.
pub fn t_zero_m4plus(m_max: u64, n_max: u64) -> Result<Outcome> {
    let mut out = Outcome::new();
    for m in 4..=m_max {
        let seq = TmSeq::with_max(m, n_max)?;
        let hit = par::first_failure(1..n_max + 1, |n| seq.at(n).is_zero());
        out = out.check(CheckReport::from_outcome(
            format!("t{m}"),
            n_max,
            hit.map(|n| {
                (
                    vec![("m", m as i64), ("n", n as i64)],
                    "t_m(n) = 0".to_string(),
                )
            }),
        ));
    }
    Ok(out)
}

/// Values in `[-window, window]` not attained by `t_m(n)`, `1 <= n <= n_max`.
pub fn t_values_missing(m_max: u64, window: u64, n_max: u64) -> Result<Outcome> {
    let mut out = Outcome::new();
    let w = window as i64;
    for m in 3..=m_max {
        let seq = TmSeq::with_max(m, n_max)?;
        let bound = BigInt::from(w);
        let hit: BTreeSet<i64> = seq.values()[1..]
            .iter()
            .filter(|v| v.magnitude() <= bound.magnitude())
            .map(|v| i64::try_from(v).expect("bounded by window"))
            .collect();
        let missing: Vec<i64> = (-w..=w).filter(|k| !hit.contains(k)).collect();
        out = out.observe(
            format!("m{m}"),
            json!({ "missing": missing, "count": missing.len() }),
        );
    }
    Ok(out)
}

/// Running maximum and minimum of `t_m` over `1 <= n <= 2^j` for each
/// `2^j <= n_max`.
pub fn t_unbounded(m_max: u64, n_max: u64) -> Result<Outcome> {
    let mut out = Outcome::new();
    for m in 2..=m_max {
        let seq = TmSeq::with_max(m, n_max)?;
        let mut rows = Vec::new();
        let (mut hi, mut lo) = (seq.at(1.min(n_max)).clone(), seq.at(1.min(n_max)).clone());
        for n in 1..=n_max {
            let v = seq.at(n);
            if *v > hi {
                hi = v.clone();
            }
            if *v < lo {
                lo = v.clone();
            }
            if n.is_power_of_two() {
                rows.push(json!([n, hi.to_string(), lo.to_string()]));
            }
        }
        out = out.observe(format!("m{m}"), Value::Array(rows));
    }
    Ok(out)
}
