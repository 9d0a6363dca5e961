use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use super::hpoly::HPolyTable;
use crate::error::{invalid, Error, Result};
use crate::poly::{IntPoly, SqrtPoly};
use crate::report::CheckReport;

/// Linear difference operator `sum_j c_j(x) theta^j` acting on sequences
/// indexed by `m`, with `theta` the backward shift:
/// `(V s)_m = sum_j c_j(x) s_(m-j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftOperator {
    pub coeffs: Vec<IntPoly>,
}

fn mul_theta<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + Default,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::default(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// `(V s)_m` for `m = order ..= s.len() - 1`, in that order.
fn apply_generic<T>(coeffs: &[T], s: &[T]) -> Vec<T>
where
    T: Clone + Default,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    let order = coeffs.len().saturating_sub(1);
    (order..s.len())
        .map(|m| {
            coeffs
                .iter()
                .enumerate()
                .fold(T::default(), |acc, (j, c)| &acc + &(c * &s[m - j]))
        })
        .collect()
}

/// The two substituted copies `V_k(y, (1+y)^(k+1) theta)` and
/// `V_k(-y, (1-y)^(k+1) theta)` whose product is `V_(k+1)`.
fn lifted_factors(v: &ShiftOperator, k: u32) -> (Vec<SqrtPoly>, Vec<SqrtPoly>) {
    let plus: Vec<SqrtPoly> = v
        .coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| {
            &SqrtPoly::substitute_sqrt(c) * &SqrtPoly::linear(1, 1).pow((k as u64 + 1) * j as u64)
        })
        .collect();
    let minus = plus.iter().map(SqrtPoly::conjugate).collect();
    (plus, minus)
}

impl ShiftOperator {
    pub fn new(coeffs: Vec<IntPoly>) -> Self {
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `(V s)_m` for every `m >= order` covered by `s`.
    pub fn apply(&self, s: &[IntPoly]) -> Vec<IntPoly> {
        apply_generic(&self.coeffs, s)
    }

    /// Operator product; `other` acts first.
    pub fn compose(&self, other: &Self) -> Self {
        Self::new(mul_theta(&self.coeffs, &other.coeffs))
    }
}

/// `V_1 = (x-1) theta^2 + 2 theta - 1` and
/// `V_(k+1)(x, theta) = V_k(y, (1+y)^(k+1) theta) V_k(-y, (1-y)^(k+1) theta)`
/// with `y^2 = x`.
pub fn v_operator(k: u32) -> Result<ShiftOperator> {
    if k == 0 || k > 6 {
        return Err(invalid("need 1 <= k <= 6"));
    }
    let mut v = ShiftOperator::new(vec![
        IntPoly::from_i64s(&[-1]),
        IntPoly::from_i64s(&[2]),
        IntPoly::from_i64s(&[-1, 1]),
    ]);
    for level in 1..k {
        let (plus, minus) = lifted_factors(&v, level);
        let coeffs = mul_theta(&plus, &minus)
            .into_iter()
            .enumerate()
            .map(|(j, c)| {
                c.even_exact().ok_or_else(|| {
                    Error::Invariant(format!("V_{}: theta^{j} coefficient odd in y", level + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        v = ShiftOperator::new(coeffs);
    }
    Ok(v)
}

/// `V_k` annihilates `(h_{i,k,m})_m` for all `i < 2^k` and
/// `order <= m <= m_max`; the order is at most `2^k`.
pub fn check_annihilation(table: &mut HPolyTable, k: u32, m_max: u64) -> Result<CheckReport> {
    let v = v_operator(k)?;
    let name = format!("annihilation-k{k}");
    if v.order() > 1 << k {
        return Ok(CheckReport::failed(
            name,
            0,
            &[("k", k as i64)],
            format!("order {} exceeds 2^k", v.order()),
        ));
    }
    let mut cases = 0;
    for i in 0..1u64 << k {
        let seq = (0..=m_max)
            .map(|m| table.get(i, k, m))
            .collect::<Result<Vec<_>>>()?;
        let out = v.apply(&seq);
        cases += out.len() as u64;
        if let Some(pos) = out.iter().position(|p| !p.is_zero()) {
            let m = (pos + v.order()) as i64;
            return Ok(CheckReport::failed(
                name,
                cases,
                &[("i", i as i64), ("k", k as i64), ("m", m)],
                format!("residual {}", out[pos]),
            ));
        }
    }
    Ok(CheckReport::passed(name, cases))
}

/// The two factors of `V_2` applied in both orders to
/// `(h_{i,2,m})_m` (read in `y`) give the same sequence, which also
/// matches `V_2` applied directly.
pub fn check_factor_commutation(table: &mut HPolyTable, m_max: u64) -> Result<CheckReport> {
    let v1 = v_operator(1)?;
    let v2 = v_operator(2)?;
    let (plus, minus) = lifted_factors(&v1, 1);
    let mut cases = 0;
    for i in 0..4u64 {
        let seq: Vec<SqrtPoly> = (0..=m_max)
            .map(|m| table.get(i, 2, m).map(|h| SqrtPoly::embed(&h)))
            .collect::<Result<_>>()?;
        let ab = apply_generic(&plus, &apply_generic(&minus, &seq));
        let ba = apply_generic(&minus, &apply_generic(&plus, &seq));
        let direct: Vec<SqrtPoly> = apply_generic(
            &v2.coeffs,
            &seq.iter()
                .map(|s| s.even_exact().unwrap())
                .collect::<Vec<_>>(),
        )
        .iter()
        .map(SqrtPoly::embed)
        .collect();
        cases += ab.len() as u64;
        if ab != ba || ab != direct {
            return Ok(CheckReport::failed(
                "factor-commutation",
                cases,
                &[("i", i as i64), ("k", 2)],
                "factor orders or the product disagree".to_string(),
            ));
        }
    }
    Ok(CheckReport::passed("factor-commutation", cases))
}

/// `sum_m h_{0,1,m} T^m = (T-1)/((x-1)T^2 + 2T - 1)` and
/// `sum_m h_{1,1,m} T^m = -T/((x-1)T^2 + 2T - 1)`, coefficients of
/// `T^0 ..= T^order`.
pub fn check_g_closed_forms(table: &mut HPolyTable, order: u64) -> Result<CheckReport> {
    let den = [
        IntPoly::from_i64s(&[-1]),
        IntPoly::from_i64s(&[2]),
        IntPoly::from_i64s(&[-1, 1]),
    ];
    let numerators = [
        (0u64, vec![IntPoly::from_i64s(&[-1]), IntPoly::one()]),
        (1, vec![IntPoly::zero(), IntPoly::from_i64s(&[-1])]),
    ];
    for (i, num) in numerators {
        let mut series: Vec<IntPoly> = Vec::new();
        for m in 0..=order as usize {
            let mut acc = num.get(m).cloned().unwrap_or_default();
            for j in 1..=m.min(2) {
                acc = &acc - &(&den[j] * &series[m - j]);
            }
            // The constant term of the denominator is -1.
            series.push(-acc);
        }
        for (m, coeff) in series.iter().enumerate() {
            let h = table.get(i, 1, m as u64)?;
            if &h != coeff {
                return Ok(CheckReport::failed(
                    "g-closed-forms",
                    2 * (order + 1),
                    &[("i", i as i64), ("m", m as i64)],
                    format!("series gives {coeff}, h = {h}"),
                ));
            }
        }
    }
    Ok(CheckReport::passed("g-closed-forms", 2 * (order + 1)))
}
