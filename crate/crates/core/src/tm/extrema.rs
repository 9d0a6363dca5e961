use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::seq::TmSeq;
use crate::error::{invalid, Error, Result};
use crate::report::CheckReport;

/// Extremes of `t_m` over `[0, 2^k]` with an index attaining each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxMin {
    #[serde(with = "crate::arith::decimal")]
    pub max: BigInt,
    #[serde(with = "crate::arith::decimal")]
    pub min: BigInt,
    pub argmax: u64,
    pub argmin: u64,
}

/// Scan of `t_m(0..=2^k)`; ties go to the smallest index.
pub fn maxmin_scan(seq: &TmSeq, k: u32) -> Result<MaxMin> {
    let top = 1u64 << k;
    if seq.max_index() < top {
        return Err(invalid(format!("prefix must reach 2^{k}")));
    }
    let mut best = MaxMin {
        max: seq.at(0).clone(),
        min: seq.at(0).clone(),
        argmax: 0,
        argmin: 0,
    };
    for n in 1..=top {
        let v = seq.at(n);
        if *v > best.max {
            best.max = v.clone();
            best.argmax = n;
        }
        if *v < best.min {
            best.min = v.clone();
            best.argmin = n;
        }
    }
    Ok(best)
}

fn integral(q: BigRational, what: &str) -> Result<BigInt> {
    if !q.is_integer() {
        return Err(Error::Invariant(format!("{what} = {q} is not an integer")));
    }
    Ok(q.to_integer())
}

fn pow2(e: u64) -> BigInt {
    BigInt::from(1) << e
}

/// Closed forms for the extremes of `t_2` (any `k >= 1`; the stated range
/// is `k >= 3`) and of `t_3` (any `k`).
///
/// For `m = 3` the fractional expressions are evaluated over the rationals
/// and must come out integral.
pub fn maxmin_closed(m: u64, k: u32) -> Result<MaxMin> {
    let k64 = k as u64;
    match m {
        2 => {
            if k == 0 {
                return Err(invalid("the m = 2 closed forms need k >= 1"));
            }
            let e_max = 2 * (k64 / 2);
            let e_min = 2 * ((k64 - 1) / 2) + 1;
            Ok(MaxMin {
                max: pow2(e_max),
                min: -pow2(e_min),
                argmax: (1 << e_max) - 1,
                argmin: (1 << e_min) - 1,
            })
        }
        3 => {
            let j = k64 / 2;
            let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
            let c = BigRational::from_integer(pow2(3 * j));
            let (max, min) = if k.is_multiple_of(2) {
                let min = -r(3, 7) * (BigRational::from_integer(pow2(3 * j + 1)) + r(5, 1));
                (c.clone(), min)
            } else {
                let iverson = if j == 0 { r(1, 1) } else { r(0, 1) };
                let max = r(15, 7) * (c.clone() - r(1, 1)) + iverson;
                (max, -r(3, 1) * c)
            };
            let top = 1u64 << k;
            let even = k.is_multiple_of(2);
            Ok(MaxMin {
                max: integral(max, "Max_3")?,
                min: integral(min, "Min_3")?,
                argmax: if even { top - 1 } else { top },
                argmin: if even { top } else { top - 1 },
            })
        }
        _ => Err(invalid("closed forms exist for m = 2 and m = 3 only")),
    }
}

/// Scanned extremes equal the closed forms, and `t_m` at each closed-form
/// index equals the corresponding extreme.
pub fn check_maxmin(seq: &TmSeq, k: u32) -> Result<CheckReport> {
    let m = seq.m();
    let scan = maxmin_scan(seq, k)?;
    let closed = maxmin_closed(m, k)?;
    let w = |what: &'static str| vec![("m", m as i64), ("k", k as i64), (what, 1)];
    let failure = if scan.max != closed.max {
        Some((
            w("max"),
            format!("scan max {} vs closed {}", scan.max, closed.max),
        ))
    } else if scan.min != closed.min {
        Some((
            w("min"),
            format!("scan min {} vs closed {}", scan.min, closed.min),
        ))
    } else if *seq.at(closed.argmax) != closed.max {
        Some((
            w("argmax"),
            format!(
                "t_{m}({}) = {} but max is {}",
                closed.argmax,
                seq.at(closed.argmax),
                closed.max
            ),
        ))
    } else if *seq.at(closed.argmin) != closed.min {
        Some((
            w("argmin"),
            format!(
                "t_{m}({}) = {} but min is {}",
                closed.argmin,
                seq.at(closed.argmin),
                closed.min
            ),
        ))
    } else {
        None
    };
    Ok(CheckReport::from_outcome("t-extrema", 1, failure))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let s2 = TmSeq::with_max(2, 1 << 4).unwrap();
        let mm = maxmin_scan(&s2, 4).unwrap();
        assert_eq!((mm.max, mm.argmax), (BigInt::from(16), 15));
        let s3 = TmSeq::with_max(3, 1 << 4).unwrap();
        assert_eq!(maxmin_scan(&s3, 2).unwrap().max, BigInt::from(8));
        assert_eq!(maxmin_closed(3, 1).unwrap().max, BigInt::from(1));
        assert_eq!(maxmin_closed(3, 0).unwrap().min, BigInt::from(-3));
        assert!(maxmin_closed(4, 3).is_err());
    }

    #[test]
    fn stated_ranges() {
        let s2 = TmSeq::with_max(2, 1 << 12).unwrap();
        for k in 3..=12 {
            assert!(check_maxmin(&s2, k).unwrap().ok(), "m=2 k={k}");
        }
        let s3 = TmSeq::with_max(3, 1 << 12).unwrap();
        for k in 2..=12 {
            assert!(check_maxmin(&s3, k).unwrap().ok(), "m=3 k={k}");
        }
    }

    #[test]
    fn max3_index_at_k1() {
        // Max over [0, 2] is t_3(0) = 1, while the index rule points at n = 2.
        let s3 = TmSeq::with_max(3, 2).unwrap();
        let r = check_maxmin(&s3, 1).unwrap();
        assert_eq!(r.witness("argmax"), Some(1));
    }
}
