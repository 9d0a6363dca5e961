use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::seq::TmSeq;
use crate::arith::{binom, s2};
use crate::error::{invalid, Error, Result};
use crate::report::CheckReport;

/// Rational bounds `LO < log 2 < HI`, 40 significant digits.
const LOG2_LO: (&str, &str) = (
    "6931471805599453094172321214581765680755",
    "10000000000000000000000000000000000000000",
);
const LOG2_HI: (&str, &str) = (
    "6931471805599453094172321214581765680756",
    "10000000000000000000000000000000000000000",
);

fn rational(p: (&str, &str)) -> BigRational {
    BigRational::new(p.0.parse().unwrap(), p.1.parse().unwrap())
}

/// `floor(n^2 / log 2)`, certified by a rational enclosure of `log 2`.
pub fn nonvanishing_threshold(n: u64) -> Result<u64> {
    let sq = BigRational::from_integer(BigInt::from(n * n));
    let lo = (&sq / rational(LOG2_HI)).floor().to_integer();
    let hi = (&sq / rational(LOG2_LO)).floor().to_integer();
    if lo != hi {
        return Err(Error::Invariant(format!(
            "log 2 enclosure too coarse for n = {n}"
        )));
    }
    u64::try_from(lo).map_err(|_| invalid("threshold overflows"))
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Visits every `(j_1, ..., j_n)` with `sum v j_v = n` and `sum j_v <= m`.
fn for_each_partition(n: u64, m: u64, visit: &mut dyn FnMut(&[u64])) {
    fn rec(
        part: u64,
        rest: u64,
        used: u64,
        m: u64,
        js: &mut Vec<u64>,
        visit: &mut dyn FnMut(&[u64]),
    ) {
        if part == 0 {
            if rest == 0 {
                visit(js);
            }
            return;
        }
        let mut j = 0;
        while j * part <= rest && used + j <= m {
            js[part as usize - 1] = j;
            rec(part - 1, rest - j * part, used + j, m, js, visit);
            j += 1;
        }
        js[part as usize - 1] = 0;
    }
    let mut js = vec![0u64; n as usize];
    rec(n, n, 0, m, &mut js, visit);
}

/// `m! / ((m - sum j)! prod j_v!)` for one vector `j`.
fn multinomial(m: u64, js: &[u64]) -> BigInt {
    let used: u64 = js.iter().sum();
    let den = js
        .iter()
        .fold(factorial(m - used), |acc, &j| acc * factorial(j));
    let (q, r) = factorial(m).div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// `sum_j m! / ((m - sum j)! prod j_v!)` over the vectors above; equals
/// `C(n + m - 1, m - 1)`.
pub fn multinomial_count(n: u64, m: u64) -> BigInt {
    let mut total = BigInt::zero();
    for_each_partition(n, m, &mut |js| total += multinomial(m, js));
    total
}

/// `t_m(n)` as the signed sum over the same vectors, with sign
/// `(-1)^(sum j_v s2(v))`.
pub fn tm_multinomial(m: u64, n: u64) -> BigInt {
    let mut total = BigInt::zero();
    for_each_partition(n, m, &mut |js| {
        let parity: u64 = js
            .iter()
            .enumerate()
            .map(|(v, &j)| j * s2(v as u64 + 1) as u64)
            .sum();
        let term = multinomial(m, js);
        if parity.is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    });
    total
}

/// For `1 <= n <= n_max`: `t_m(n) != 0` for the 16 values of `m` just above
/// `n^2 / log 2`; the multinomial count equals `C(n+m-1, m-1)` and the
/// signed multinomial sum equals `t_m(n)` for `1 <= n, m <= n_max`.
pub fn check_nonvanishing(n_max: u64) -> Result<CheckReport> {
    const WINDOW: u64 = 16;
    let mut window_cases = 0;
    let mut window_fail = None;
    'outer: for n in 1..=n_max {
        let m0 = nonvanishing_threshold(n)?;
        for m in m0 + 1..=m0 + WINDOW {
            window_cases += 1;
            let v = TmSeq::with_max(m, n)?.at(n).clone();
            if v.is_zero() {
                window_fail = Some((vec![("n", n as i64), ("m", m as i64)], "t_m(n) = 0".into()));
                break 'outer;
            }
        }
    }
    let mut count_cases = 0;
    let mut count_fail = None;
    'count: for n in 1..=n_max {
        for m in 1..=n_max {
            count_cases += 1;
            let s1 = multinomial_count(n, m);
            let want = BigInt::from(binom(n + m - 1, m - 1));
            if s1 != want {
                count_fail = Some((
                    vec![("n", n as i64), ("m", m as i64)],
                    format!("count {s1} vs {want}"),
                ));
                break 'count;
            }
            if &tm_multinomial(m, n) != TmSeq::with_max(m, n)?.at(n) {
                count_fail = Some((
                    vec![("n", n as i64), ("m", m as i64)],
                    "signed sum differs".into(),
                ));
                break 'count;
            }
        }
    }
    Ok(CheckReport::combine(
        "t-nonvanishing",
        [
            CheckReport::from_outcome("t-nonvanishing-window", window_cases, window_fail),
            CheckReport::from_outcome("multinomial-count", count_cases, count_fail),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(multinomial_count(3, 2), BigInt::from(4));
        assert_eq!(tm_multinomial(3, 2), BigInt::zero());
        assert_eq!(nonvanishing_threshold(1).unwrap(), 1);
        assert_eq!(nonvanishing_threshold(8).unwrap(), 92);
    }

    #[test]
    fn appendix_sweep() {
        assert!(check_nonvanishing(8).unwrap().ok());
    }
}
