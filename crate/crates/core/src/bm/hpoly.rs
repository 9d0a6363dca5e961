use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::seq::BmSeq;
use crate::arith::{binom, decimal};
use crate::error::{invalid, Error, Result};
use crate::par;
use crate::poly::{IntPoly, SqrtPoly};
use crate::report::CheckReport;

/// Memoised numerators `h_{i,k,m}(x)` defined by
/// `(1-x)^(km) sum_n b_m(2^k n + i) x^n = h_{i,k,m}(x) sum_n b_m(n) x^n`.
#[derive(Clone, Debug, Default)]
pub struct HPolyTable {
    polys: BTreeMap<(u64, u32, u64), IntPoly>,
}

/// JSON form of one table entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolyEntry {
    pub i: u64,
    pub k: u32,
    pub m: u64,
    #[serde(with = "decimal::vec")]
    pub coeffs: Vec<BigInt>,
}

impl HPolyTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `h_{i,k,m}` for `0 <= i < 2^k`, from level `k - 1` by
    /// `(h(y)(1+y)^(mk) +- h(-y)(1-y)^(mk)) / 2`, divided by `y` in the
    /// upper half of the residues, then `y^2 -> x`.
    pub fn get(&mut self, i: u64, k: u32, m: u64) -> Result<IntPoly> {
        if k > 40 || i >> k != 0 {
            return Err(invalid(format!("need 0 <= i < 2^k, got i={i}, k={k}")));
        }
        if let Some(p) = self.polys.get(&(i, k, m)) {
            return Ok(p.clone());
        }
        let p = if k == 0 {
            IntPoly::one()
        } else {
            let half = 1u64 << (k - 1);
            let upper = i >= half;
            let parent = self.get(i % half, k - 1, m)?;
            let a = &SqrtPoly::substitute_sqrt(&parent) * &SqrtPoly::linear(1, 1).pow(m * k as u64);
            let combined = if upper {
                &a - &a.conjugate()
            } else {
                &a + &a.conjugate()
            };
            let reduced = if upper {
                combined.odd_half_exact()
            } else {
                combined.even_exact()
            };
            let reduced = reduced
                .ok_or_else(|| Error::Invariant(format!("h_{{{i},{k},{m}}}: wrong parity in y")))?;
            reduced.div_exact_scalar(&BigInt::from(2)).ok_or_else(|| {
                Error::Invariant(format!("h_{{{i},{k},{m}}}: odd coefficient before halving"))
            })?
        };
        self.polys.insert((i, k, m), p.clone());
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn entries(&self) -> Vec<HPolyEntry> {
        self.polys
            .iter()
            .map(|(&(i, k, m), p)| HPolyEntry {
                i,
                k,
                m,
                coeffs: p.coeffs().to_vec(),
            })
            .collect()
    }
}

/// `h_{i,k,m}(x)` computed from scratch.
pub fn h_poly(i: u64, k: u32, m: u64) -> Result<IntPoly> {
    HPolyTable::new().get(i, k, m)
}

/// Defining series identity of `h_{i,k,m}` modulo `x^T` with
/// `T = max(256, 4 deg h)`. `m >= 1`.
pub fn check_h_identity(table: &mut HPolyTable, i: u64, k: u32, m: u64) -> Result<CheckReport> {
    let h = table.get(i, k, m)?;
    let order = 256.max(4 * h.degree().unwrap_or(0));
    let step = 1u64 << k;
    let seq = BmSeq::with_max(m, step * (order as u64 - 1) + i)?;
    let sub = IntPoly::from_coeffs(
        (0..order as u64)
            .map(|n| seq.at(step * n + i).clone())
            .collect(),
    );
    let full = IntPoly::from_coeffs(seq.values()[..order].to_vec());
    let lhs = IntPoly::binomial_power(1, -1, m * k as u64).mul_trunc(&sub, order);
    let rhs = h.mul_trunc(&full, order);
    let name = format!("h-identity-{i}-{k}-{m}");
    if lhs == rhs {
        return Ok(CheckReport::passed(name, order as u64));
    }
    let n = (0..order)
        .find(|&n| lhs.coeff(n) != rhs.coeff(n))
        .expect("differ somewhere");
    Ok(CheckReport::failed(
        name,
        order as u64,
        &[
            ("i", i as i64),
            ("k", k as i64),
            ("m", m as i64),
            ("n", n as i64),
        ],
        format!("coefficient {} != {}", lhs.coeff(n), rhs.coeff(n)),
    ))
}

/// The reductions of `h_{i,k,p^s}` mod an odd prime `p` for `k` in
/// {1, 2}. For `m = 1 (mod 4)` the residue `i = 1` at `k = 2` is expected
/// as `x^((m-1)/4) + x^((5m-1)/4)`; the report notes whether the
/// alternative first exponent `(m-1)/2` also matches.
pub fn check_h_mod_p(table: &mut HPolyTable, p: u64, s: u32, k: u32) -> Result<CheckReport> {
    if !crate::arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 || !(1..=2).contains(&k) {
        return Err(invalid("need an odd prime p and k in {1, 2}"));
    }
    let m = p
        .checked_pow(s)
        .filter(|&m| m <= 1 << 12)
        .ok_or_else(|| invalid("p^s too large"))?;
    let mono = |c: i64, d: u64| IntPoly::monomial(c, d as usize);
    let r1 = m % 4 == 1;
    let expected: Vec<(u64, IntPoly)> = if k == 1 {
        vec![(0, IntPoly::one()), (1, mono(1, (m - 1) / 2))]
    } else {
        vec![
            (0, &IntPoly::one() + &mono(1, m)),
            (
                1,
                if r1 {
                    &mono(1, (m - 1) / 4) + &mono(1, (5 * m - 1) / 4)
                } else {
                    mono(2, (3 * m - 1) / 4)
                },
            ),
            (2, mono(2, (m - 1) / 2)),
            (
                3,
                if r1 {
                    mono(2, 3 * (m - 1) / 4)
                } else {
                    &mono(1, (m - 3) / 4) + &mono(1, (5 * m - 3) / 4)
                },
            ),
        ]
    };
    let mut report = CheckReport::passed(format!("h-mod-{p}-m{m}-k{k}"), expected.len() as u64);
    for (i, want) in expected {
        let got = table.get(i, k, m)?.mod_p(p);
        if got != want.mod_p(p) && report.ok() {
            report = CheckReport::failed(
                report.check.clone(),
                report.cases,
                &[
                    ("p", p as i64),
                    ("s", s as i64),
                    ("i", i as i64),
                    ("k", k as i64),
                ],
                format!("h = {} mod {p}, expected {}", got, want.mod_p(p)),
            );
        }
    }
    if k == 2 && r1 {
        let alt = (&mono(1, (m - 1) / 2) + &mono(1, (5 * m - 1) / 4)).mod_p(p);
        let matches = table.get(1, 2, m)?.mod_p(p) == alt;
        report = report.with_note(format!("first exponent (m-1)/2 for i=1 matches: {matches}"));
    }
    Ok(report)
}

/// `(q, c)` with `P = c + (x+1) q`, i.e. division by `x + 1`.
fn div_x_plus_1(p: &IntPoly) -> (IntPoly, BigInt) {
    p.div_rem_linear(&BigInt::from(-1))
}

/// `8(x+1)` divides `h_{2^k+1,k+1,2}` for `1 <= k <= k_max` and
/// `h_{2^k+2,k+1,4}` for `2 <= k <= k_max`, by exact division.
pub fn check_8x1_divisibility(table: &mut HPolyTable, k_max: u32) -> Result<CheckReport> {
    let eight = BigInt::from(8);
    let mut cases = 0;
    for k in 1..=k_max {
        for (m, offset, first) in [(2u64, 1u64, 1u32), (4, 2, 2)] {
            if k < first {
                continue;
            }
            cases += 1;
            let i = (1u64 << k) + offset;
            let h = table.get(i, k + 1, m)?;
            let (q, rem) = div_x_plus_1(&h);
            if !rem.is_zero() || !q.is_zero_mod(&eight) {
                return Ok(CheckReport::failed(
                    "8x1-divisibility",
                    cases,
                    &[("i", i as i64), ("k", k as i64 + 1), ("m", m as i64)],
                    format!("remainder {rem} at x = -1, quotient {q}"),
                ));
            }
        }
    }
    Ok(CheckReport::passed("8x1-divisibility", cases))
}

/// Expansion of a palindromic polynomial of order `s` and degree `d` as
/// `sum_j a_j x^(s+j) (1+x)^(d-s-2j)`, `0 <= j <= (d-s)/2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalindromicForm {
    pub order: usize,
    pub degree: usize,
    #[serde(with = "decimal::vec")]
    pub coeffs: Vec<BigInt>,
}

impl PalindromicForm {
    pub fn expand(&self) -> IntPoly {
        let span = self.degree - self.order;
        let mut acc = IntPoly::zero();
        for (j, a) in self.coeffs.iter().enumerate() {
            let term = IntPoly::binomial_power(1, 1, (span - 2 * j) as u64).shift(self.order + j);
            acc = &acc + &term.scale(a);
        }
        acc
    }
}

/// Coefficients of `p` in the palindromic basis; errors when `p` is zero
/// or not palindromic between its order and degree.
pub fn palindromic_decompose(p: &IntPoly) -> Result<PalindromicForm> {
    let (Some(order), Some(degree)) = (p.order(), p.degree()) else {
        return Err(invalid("zero polynomial has no palindromic form"));
    };
    let span = degree - order;
    let mut rest = p.clone();
    let mut coeffs = Vec::with_capacity(span / 2 + 1);
    for j in 0..=span / 2 {
        let a = rest.coeff(order + j);
        let term = IntPoly::binomial_power(1, 1, (span - 2 * j) as u64).shift(order + j);
        rest = &rest - &term.scale(&a);
        coeffs.push(a);
    }
    if !rest.is_zero() {
        return Err(invalid(format!("{p} is not palindromic")));
    }
    Ok(PalindromicForm {
        order,
        degree,
        coeffs,
    })
}

/// Palindromic expansions of `h_{1,k+1,2}` (`0 <= k <= k_max`) and
/// `h_{2,k+1,4}` (`1 <= k <= k_max`): order 0, leading basis coefficient
/// 2 resp. 14, every later one divisible by 8.
pub fn check_palindromic_basis(table: &mut HPolyTable, k_max: u32) -> Result<CheckReport> {
    let eight = BigInt::from(8);
    let mut cases = 0;
    for k in 0..=k_max {
        for (i, m, lead, first) in [(1u64, 2u64, 2i64, 0u32), (2, 4, 14, 1)] {
            if k < first {
                continue;
            }
            cases += 1;
            let h = table.get(i, k + 1, m)?;
            let witness = [("i", i as i64), ("k", k as i64 + 1), ("m", m as i64)];
            let form = match palindromic_decompose(&h) {
                Ok(f) => f,
                Err(e) => {
                    return Ok(CheckReport::failed(
                        "palindromic-basis",
                        cases,
                        &witness,
                        e.to_string(),
                    ))
                }
            };
            let bad_tail = form
                .coeffs
                .iter()
                .skip(1)
                .any(|c| !c.mod_floor(&eight).is_zero());
            if form.order != 0 || form.coeffs[0] != BigInt::from(lead) || bad_tail {
                let shown: Vec<String> = form.coeffs.iter().map(|c| c.to_string()).collect();
                return Ok(CheckReport::failed(
                    "palindromic-basis",
                    cases,
                    &witness,
                    format!("order {} coefficients [{}]", form.order, shown.join(", ")),
                ));
            }
        }
    }
    Ok(CheckReport::passed("palindromic-basis", cases))
}

/// `4 | C(4n, 2j) - C(2n, j)` for `0 <= n, j <= n_max`.
pub fn check_binomial_4div(n_max: u64) -> CheckReport {
    let four = BigInt::from(4);
    let side = n_max + 1;
    let diff = |idx: u64| {
        let (n, j) = (idx / side, idx % side);
        BigInt::from(binom(4 * n, 2 * j)) - BigInt::from(binom(2 * n, j))
    };
    let hit = par::first_failure(0..side * side, |idx| !diff(idx).mod_floor(&four).is_zero());
    CheckReport::from_outcome(
        "binomial-4div",
        side * side,
        hit.map(|idx| {
            let (n, j) = (idx / side, idx % side);
            (
                vec![("n", n as i64), ("j", j as i64)],
                format!("difference {}", diff(idx)),
            )
        }),
    )
}

/// The explicit small cases `h_{0,2,2} = 5x^2 + 10x + 1`,
/// `h_{2,2,2} = x^2 + 10x + 5`, `h_{1,2,4} = 4(3x+1)(3x^3+27x^2+33x+1)`,
/// with reductions 1, `x^2` mod 5 and 1 mod 3.
pub fn check_h_anchors(table: &mut HPolyTable) -> Result<CheckReport> {
    let p = IntPoly::from_i64s;
    let h124 = &(&p(&[4]) * &p(&[1, 3])) * &p(&[1, 33, 27, 3]);
    let anchors: [(u64, u32, u64, IntPoly, u64, IntPoly); 3] = [
        (0, 2, 2, p(&[1, 10, 5]), 5, IntPoly::one()),
        (2, 2, 2, p(&[5, 10, 1]), 5, IntPoly::monomial(1, 2)),
        (1, 2, 4, h124, 3, IntPoly::one()),
    ];
    for (i, k, m, want, modulus, reduced) in anchors {
        let got = table.get(i, k, m)?;
        let witness = [("i", i as i64), ("k", k as i64), ("m", m as i64)];
        if got != want {
            return Ok(CheckReport::failed(
                "h-anchors",
                3,
                &witness,
                format!("h = {got}, expected {want}"),
            ));
        }
        if got.mod_p(modulus) != reduced {
            let msg = format!(
                "h mod {modulus} = {}, expected {reduced}",
                got.mod_p(modulus)
            );
            return Ok(CheckReport::failed("h-anchors", 3, &witness, msg));
        }
    }
    Ok(CheckReport::passed("h-anchors", 3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn small_h() {
        assert_eq!(h_poly(0, 0, 7).unwrap(), IntPoly::one());
        assert_eq!(h_poly(1, 1, 2).unwrap(), p(&[2]));
        assert_eq!(h_poly(0, 2, 2).unwrap(), p(&[1, 10, 5]));
        assert_eq!(h_poly(1, 1, 0).unwrap(), IntPoly::zero());
        assert!(h_poly(4, 2, 2).is_err());
    }

    #[test]
    fn identity_small() {
        let mut t = HPolyTable::new();
        for k in 0..=2 {
            for i in 0..1 << k {
                let r = check_h_identity(&mut t, i, k, 3).unwrap();
                assert!(r.ok(), "{r}");
            }
        }
    }

    #[test]
    fn mod_p_examples() {
        let mut t = HPolyTable::new();
        assert_eq!(t.get(1, 1, 3).unwrap().mod_p(3), p(&[0, 1]));
        assert_eq!(t.get(1, 2, 3).unwrap().mod_p(3), p(&[0, 0, 2]));
        assert_eq!(t.get(1, 2, 5).unwrap().mod_p(5), p(&[0, 1, 0, 0, 0, 0, 1]));
        for (pr, s) in [(3, 1), (5, 1), (7, 1), (3, 2), (13, 1)] {
            for k in 1..=2 {
                let r = check_h_mod_p(&mut t, pr, s, k).unwrap();
                assert!(r.ok(), "{r}");
            }
        }
    }

    #[test]
    fn palindromic_round_trip() {
        let f = palindromic_decompose(&p(&[1, 2, 1])).unwrap();
        assert_eq!(f.coeffs, vec![BigInt::one(), BigInt::zero()]);
        let q = p(&[0, 0, 3, 7, 7, 3]);
        assert_eq!(palindromic_decompose(&q).unwrap().expand(), q);
        assert!(palindromic_decompose(&p(&[1, 2])).is_err());
        assert!(palindromic_decompose(&IntPoly::zero()).is_err());
    }

    #[test]
    fn structure_checks() {
        let mut t = HPolyTable::new();
        assert!(check_8x1_divisibility(&mut t, 4).unwrap().ok());
        assert!(check_palindromic_basis(&mut t, 5).unwrap().ok());
        assert!(check_h_anchors(&mut t).unwrap().ok());
        assert!(check_binomial_4div(40).ok());
        let json = serde_json::to_string(&t.entries()[0]).unwrap();
        assert!(json.starts_with("{\"i\":"), "{json}");
    }
}
