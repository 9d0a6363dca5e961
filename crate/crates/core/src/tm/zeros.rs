use num_traits::Zero;

use crate::error::Result;
use crate::fpoly::FSeries;
use crate::report::CheckReport;

/// First `count` zeros of `t_3`, from `a_1 = 2`, `a_(2k) = 4 a_k + 3`,
/// `a_(2k+1) = 4 a_k + 6`. Index order is already increasing; this is
/// asserted.
pub fn t3_zero_seq(count: usize) -> Vec<u64> {
    let mut a = vec![0u64; count + 1];
    for k in 1..=count {
        a[k] = match k {
            1 => 2,
            _ if k % 2 == 0 => 4 * a[k / 2] + 3,
            _ => 4 * a[k / 2] + 6,
        };
    }
    let out = a.split_off(1);
    assert!(
        out.windows(2).all(|w| w[0] < w[1]),
        "zero sequence not increasing"
    );
    out
}

/// Membership in the zero set of `t_3`, by undoing the recurrence.
pub fn t3_is_zero(n: u64) -> bool {
    match n {
        2 => true,
        _ if n < 3 => false,
        _ if n % 4 == 3 => t3_is_zero((n - 3) / 4),
        _ if n % 4 == 2 && n >= 6 => t3_is_zero((n - 6) / 4),
        _ => false,
    }
}

/// `f_(a_k)(3) = 0` exactly for the first `count` zeros, evaluating the
/// polynomials `f_n(t)` themselves.
pub fn check_t3_reducibility_witness(count: usize) -> Result<CheckReport> {
    let zeros = t3_zero_seq(count);
    let top = zeros.last().copied().unwrap_or(0);
    let series = FSeries::up_to(top);
    let bad = zeros
        .iter()
        .enumerate()
        .find(|(_, &n)| !series.g(n).eval_i64(3).is_zero());
    Ok(CheckReport::from_outcome(
        "f-at-3-vanishes",
        count as u64,
        bad.map(|(k, &n)| {
            (
                vec![("k", k as i64 + 1), ("n", n as i64)],
                format!("f_{n}(3) != 0"),
            )
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tm::TmSeq;

    #[test]
    fn recurrence_values() {
        assert_eq!(
            t3_zero_seq(10),
            vec![2, 11, 14, 47, 50, 59, 62, 191, 194, 203]
        );
    }

    #[test]
    fn membership_matches_values() {
        let seq = TmSeq::with_max(3, 100_000).unwrap();
        let zeros: Vec<u64> = (0..=100_000).filter(|&n| seq.at(n).is_zero()).collect();
        let members: Vec<u64> = (0..=100_000).filter(|&n| t3_is_zero(n)).collect();
        assert_eq!(zeros, members);
        let listed: Vec<u64> = t3_zero_seq(255)
            .into_iter()
            .filter(|&a| a <= 100_000)
            .collect();
        assert_eq!(listed, members);
    }

    #[test]
    fn witness_small() {
        assert!(check_t3_reducibility_witness(3).unwrap().ok());
    }
}
