use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::fact_poly::factorial;
use super::series::log_weight;
use super::{CoeffTable, FSeries};
use crate::arith::is_prime;
use crate::error::{invalid, Error, Result};
use crate::poly::IntPoly;
use crate::report::CheckReport;

/// `g_n(t) == g_(n mod p)(t) * (t - t^p)^floor(n/p)  (mod p)`.
///
/// `series` must hold `g_n`. A failing report names the first offending
/// coefficient index `i`.
pub fn check_g_factorization(series: &FSeries, n: u64, p: u64) -> Result<CheckReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let name = "g-factorization-mod-p";
    let mut t_minus_tp = IntPoly::monomial(-1, p as usize);
    t_minus_tp = &t_minus_tp + &IntPoly::var();
    let rhs = (series.g(n % p) * &t_minus_tp.pow(n / p)).mod_p(p);
    let lhs = series.g(n).mod_p(p);
    let len = lhs.len().max(rhs.len());
    let bad = (0..len).find(|&i| lhs.coeff(i) != rhs.coeff(i));
    Ok(match bad {
        None => CheckReport::passed(name, 1),
        Some(i) => CheckReport::failed(
            name,
            1,
            &[("n", n as i64), ("p", p as i64), ("i", i as i64)],
            format!("coefficient {i}: {} vs {}", lhs.coeff(i), rhs.coeff(i)),
        ),
    })
}

/// `f_n(t1 + t2) == sum_k f_k(t1) f_(n-k)(t2)` at integer points.
pub fn check_addition_formula(series: &FSeries, n: u64, t1: i64, t2: i64) -> CheckReport {
    let lhs = series.f(n).eval_int(t1 + t2);
    let rhs = (0..=n).fold(BigRational::zero(), |acc, k| {
        acc + series.f(k).eval_int(t1) * series.f(n - k).eval_int(t2)
    });
    let name = "f-addition-formula";
    if lhs == rhs {
        CheckReport::passed(name, 1)
    } else {
        CheckReport::failed(
            name,
            1,
            &[("n", n as i64), ("t1", t1), ("t2", t2)],
            format!("{lhs} vs {rhs}"),
        )
    }
}

/// Closed forms for the outer coefficients of `f_n`, `1 <= n <= n_max`:
/// `a(0, n) = 0`, `a(n, n) = (-1)^n / n!`,
/// `a(n-1, n) = (-1)^(n+1) 3 / (2! (n-2)!)` for `n >= 2`,
/// `a(n-2, n) = (-1)^n (27n - 73) / (4! (n-3)!)` for `n >= 3`,
/// `a(1, n) = (1 - 2^(nu2(n)+1)) / n`.
pub fn check_coeff_closed_forms(table: &CoeffTable, n_max: u64) -> Result<CheckReport> {
    if table.max_index() < n_max {
        return Err(invalid("coefficient table too short"));
    }
    let sign = |e: u64| {
        if e.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    };
    let ratio = |num: BigInt, den: BigInt| BigRational::new(num, den);
    let mut cases = 0;
    for n in 1..=n_max {
        let mut forms: Vec<(&str, u64, BigRational)> = vec![
            ("a(0,n)", 0, BigRational::zero()),
            ("a(n,n)", n, ratio(sign(n), factorial(n))),
            (
                "a(1,n)",
                1,
                ratio(BigInt::from(log_weight(n)), BigInt::from(n)),
            ),
        ];
        if n >= 2 {
            forms.push((
                "a(n-1,n)",
                n - 1,
                ratio(sign(n + 1) * 3, 2 * factorial(n - 2)),
            ));
        }
        if n >= 3 {
            let num = sign(n) * (27 * BigInt::from(n) - 73);
            forms.push(("a(n-2,n)", n - 2, ratio(num, 24 * factorial(n - 3))));
        }
        for (name, i, want) in forms {
            cases += 1;
            let got = table.a(i, n)?;
            if got != want {
                return Ok(CheckReport::failed(
                    "coefficient-closed-forms",
                    cases,
                    &[("n", n as i64), ("i", i as i64)],
                    format!("{name} = {got}, closed form {want}"),
                ));
            }
        }
    }
    Ok(CheckReport::passed("coefficient-closed-forms", cases))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_small() {
        let s = FSeries::up_to(60);
        for p in [2, 3, 5, 7] {
            for n in 0..=60 {
                assert!(check_g_factorization(&s, n, p).unwrap().ok(), "n={n} p={p}");
            }
        }
        assert!(check_g_factorization(&s, 4, 4).is_err());
    }

    #[test]
    fn addition_small() {
        let s = FSeries::up_to(30);
        for n in 0..=30 {
            assert!(check_addition_formula(&s, n, 2, 3).ok());
            assert!(check_addition_formula(&s, n, 1, -1).ok());
        }
    }

    #[test]
    fn closed_forms_small() {
        let t = CoeffTable::up_to(40);
        let r = check_coeff_closed_forms(&t, 40).unwrap();
        assert!(r.ok(), "{r}");
        assert!(check_coeff_closed_forms(&t, 41).is_err());
    }
}
