use serde::{Deserialize, Serialize};

use super::seq::TmSeq;
use super::zeros::t3_is_zero;
use crate::arith::{base4_digits_0136, nu2, nu2_binom, nu2_int, Valuation};
use crate::error::{invalid, Result};
use crate::par;
use crate::report::CheckReport;

/// One row of a valuation comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationReport {
    pub n: u64,
    pub direct: Valuation,
    pub closed: Valuation,
    pub ok: bool,
}

/// `nu2(t_(2^k)(n))` as `nu2(C(n + 2^k - 1, 2^k - 1))`.
pub fn v2_t2k_closed(k: u32, n: u64) -> u64 {
    let top = (1u64 << k) - 1;
    nu2_binom(n + top, top).expect("binomial is positive")
}

/// The same value from `n = 2^k q + j`: zero when `j = 0`, otherwise
/// `k - nu2(j) + nu2(q + 1)`.
pub fn v2_t2k_piecewise(k: u32, n: u64) -> u64 {
    let q = n >> k;
    let j = n & ((1u64 << k) - 1);
    if j == 0 {
        0
    } else {
        k as u64 - nu2(j).unwrap() as u64 + nu2(q + 1).unwrap() as u64
    }
}

/// `nu2(t_3(n))` from the base-4 expansion of `n` over digits {0,1,3,6}.
///
/// Infinite when the top digit is 2 and every lower digit is 3 or 6;
/// otherwise `3r` with `r` the length of the run of 3s and 6s at the
/// low end (possibly empty).
pub fn v2_t3_closed(n: u64) -> Result<Valuation> {
    let digits = base4_digits_0136(n)?;
    let run = digits.iter().take_while(|&&d| d == 3 || d == 6).count();
    let top = digits.len() - 1;
    if digits[top] == 2 && run == top {
        return Ok(Valuation::Infinite);
    }
    Ok(Valuation::Finite(3 * run as u64))
}

/// `nu2(t_3(n))` by the reductions `t_3(4q+3) = 8 t_3(q)` and
/// `t_3(4q+6) = 8 t_3(q)`; residues 0 and 1 give odd values.
pub fn v2_t3_rec(n: u64) -> Valuation {
    let mut shift = 0u64;
    let mut n = n;
    loop {
        match n % 4 {
            0 | 1 => return Valuation::Finite(shift),
            3 => n = (n - 3) / 4,
            _ if n == 2 => return Valuation::Infinite,
            _ => n = (n - 6) / 4,
        }
        shift += 3;
    }
}

/// Direct versus binomial valuation for `t_(2^k)(n)`, `n <= n_max`.
pub fn valuation_reports_t2k(seq: &TmSeq, k: u32, n_max: u64) -> Vec<ValuationReport> {
    par::map_collect(0..n_max + 1, |n| {
        let direct = nu2_int(seq.at(n));
        let closed = Valuation::Finite(v2_t2k_closed(k, n));
        ValuationReport {
            n,
            direct,
            closed,
            ok: direct == closed,
        }
    })
}

/// Direct versus digit-expansion valuation for `t_3(n)`, `1 <= n <= n_max`.
pub fn valuation_reports_t3(seq: &TmSeq, n_max: u64) -> Result<Vec<ValuationReport>> {
    if seq.m() != 3 {
        return Err(invalid("expected the t_3 prefix"));
    }
    Ok(par::map_collect(1..n_max + 1, |n| {
        let direct = nu2_int(seq.at(n));
        let closed = v2_t3_closed(n).expect("n >= 1");
        ValuationReport {
            n,
            direct,
            closed,
            ok: direct == closed,
        }
    }))
}

/// Direct, binomial and piecewise valuations of `t_(2^k)` agree.
pub fn check_v2_t2k(k: u32, n_max: u64) -> Result<CheckReport> {
    let seq = TmSeq::with_max(1 << k, n_max)?;
    let hit = par::first_failure(0..n_max + 1, |n| {
        let direct = nu2_int(seq.at(n));
        let closed = v2_t2k_closed(k, n);
        direct != Valuation::Finite(closed) || v2_t2k_piecewise(k, n) != closed
    });
    Ok(CheckReport::from_outcome(
        "t2k-valuation",
        n_max + 1,
        hit.map(|n| {
            let msg = format!(
                "direct {} binomial {} piecewise {}",
                nu2_int(seq.at(n)),
                v2_t2k_closed(k, n),
                v2_t2k_piecewise(k, n)
            );
            (vec![("k", k as i64), ("n", n as i64)], msg)
        }),
    ))
}

/// Direct, digit and reduction valuations of `t_3` agree, and the value
/// is infinite exactly on the zero set.
pub fn check_v2_t3(n_max: u64) -> Result<CheckReport> {
    let seq = TmSeq::with_max(3, n_max)?;
    let hit = par::first_failure(1..n_max + 1, |n| {
        let direct = nu2_int(seq.at(n));
        let closed = v2_t3_closed(n).expect("n >= 1");
        direct != closed || v2_t3_rec(n) != closed || closed.is_infinite() != t3_is_zero(n)
    });
    Ok(CheckReport::from_outcome(
        "t3-valuation",
        n_max,
        hit.map(|n| {
            let msg = format!(
                "direct {} digits {} reduction {} zero-set {}",
                nu2_int(seq.at(n)),
                v2_t3_closed(n).unwrap(),
                v2_t3_rec(n),
                t3_is_zero(n)
            );
            (vec![("n", n as i64)], msg)
        }),
    ))
}
