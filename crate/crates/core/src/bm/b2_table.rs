use num_bigint::BigInt;

use super::hpoly::HPolyTable;
use super::seq::BmSeq;
use crate::arith::{nu2_int, Valuation};
use crate::error::{invalid, Result};
use crate::par;
use crate::poly::IntPoly;
use crate::report::CheckReport;

/// `(k, i, a)`: `nu2(b_2(2^k n + i)) = a` for every `n`.
pub const B2_VALUATION_TABLE: [(u32, u64, u64); 37] = [
    (2, 3, 3),
    (3, 5, 3),
    (4, 6, 3),
    (4, 9, 3),
    (4, 12, 3),
    (5, 8, 3),
    (5, 17, 3),
    (5, 26, 3),
    (6, 16, 3),
    (6, 33, 3),
    (6, 50, 3),
    (7, 32, 3),
    (7, 65, 3),
    (7, 98, 3),
    (8, 64, 3),
    (8, 129, 3),
    (8, 194, 3),
    (5, 4, 4),
    (5, 30, 4),
    (6, 10, 4),
    (6, 56, 4),
    (7, 48, 4),
    (7, 82, 4),
    (8, 96, 4),
    (8, 162, 4),
    (6, 20, 5),
    (6, 46, 5),
    (7, 42, 5),
    (7, 88, 5),
    (8, 18, 5),
    (8, 240, 5),
    (7, 14, 6),
    (7, 116, 6),
    (8, 106, 6),
    (8, 152, 6),
    (8, 78, 7),
    (8, 180, 7),
];

/// Polynomial certificate for one table row: `2^a | h_{i,k,2}` and
/// `h_{i,k,2} / 2^a = (1-x)^(2k-3) (mod 2)`.
pub fn b2_row_certificate(table: &mut HPolyTable, k: u32, i: u64, a: u64) -> Result<bool> {
    if k < 2 {
        return Err(invalid("rows need k >= 2"));
    }
    let h = table.get(i, k, 2)?;
    let Some(q) = h.div_exact_scalar(&(BigInt::from(1) << a)) else {
        return Ok(false);
    };
    let target = IntPoly::binomial_power(1, -1, 2 * k as u64 - 3);
    Ok(q.mod_p(2) == target.mod_p(2))
}

/// Every row of [`B2_VALUATION_TABLE`] against direct valuations of
/// `b_2(idx)`, `idx <= n_max`, and against its polynomial certificate.
pub fn check_b2_valuation_table(table: &mut HPolyTable, n_max: u64) -> Result<CheckReport> {
    if n_max < 256 {
        return Err(invalid("need n_max >= 256"));
    }
    let seq = BmSeq::with_max(2, n_max)?;
    let mut parts = Vec::new();
    for &(k, i, a) in &B2_VALUATION_TABLE {
        let step = 1u64 << k;
        let count = (n_max - i) / step + 1;
        let name = format!("row-{step}n+{i}");
        let witness = |n: u64| {
            vec![
                ("k", k as i64),
                ("i", i as i64),
                ("n", n as i64),
                ("index", (step * n + i) as i64),
            ]
        };
        let value = |n: u64| nu2_int(seq.at(step * n + i));
        let hit = par::first_failure(0..count, |n| value(n) != Valuation::Finite(a));
        let mut report = CheckReport::from_outcome(
            name.clone(),
            count,
            hit.map(|n| (witness(n), format!("valuation {} instead of {a}", value(n)))),
        );
        if report.ok() && !b2_row_certificate(table, k, i, a)? {
            report = CheckReport::failed(name, count, &witness(0), "polynomial certificate fails");
        }
        parts.push(report);
    }
    Ok(CheckReport::combine("b2-valuation-table", parts))
}
