use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::mul::{karatsuba, schoolbook, KARATSUBA_THRESHOLD};
use crate::arith::decimal;

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of the `i`-th power. The highest stored
/// coefficient is never zero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The polynomial `x`.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * x^d`.
    pub fn monomial(c: impl Into<BigInt>, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(a + b x)^e`.
    pub fn binomial_power(a: i64, b: i64, e: u64) -> Self {
        Self::from_i64s(&[a, b]).pow(e)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `x^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Keeps the terms of degree below `n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(n).cloned().collect())
    }

    /// `P(-x)`.
    pub fn negate_var(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Coefficients reduced into `0..p`.
    pub fn mod_p(&self, p: u64) -> Self {
        self.reduce_mod(&BigInt::from(p))
    }

    /// Coefficients reduced into `0..modulus`.
    pub fn reduce_mod(&self, modulus: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.mod_floor(modulus)).collect())
    }

    /// True when every coefficient is divisible by `modulus`.
    pub fn is_zero_mod(&self, modulus: &BigInt) -> bool {
        self.coeffs.iter().all(|c| c.mod_floor(modulus).is_zero())
    }

    /// Division of every coefficient by `d`, if exact.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::from_coeffs(out))
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_i64(&self, at: i64) -> BigInt {
        self.eval(&BigInt::from(at))
    }

    pub fn eval_rational(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * at + BigRational::from_integer(c.clone())
            })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Product truncated below degree `n`.
    pub fn mul_trunc(&self, other: &Self, n: usize) -> Self {
        let a = &self.coeffs[..self.coeffs.len().min(n)];
        let b = &other.coeffs[..other.coeffs.len().min(n)];
        let mut prod = Self::mul_slices(a, b);
        prod.truncate(n);
        Self::from_coeffs(prod)
    }

    /// Power-series inverse modulo `x^n`; the constant term must be a unit.
    pub fn inverse_series(&self, n: usize) -> Option<Self> {
        let c0 = self.coeff(0);
        if !(c0.is_one() || (-&c0).is_one()) {
            return None;
        }
        let mut inv = vec![BigInt::zero(); n];
        for i in 0..n {
            let mut s = if i == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            for j in 1..=i.min(self.coeffs.len().saturating_sub(1)) {
                s -= &self.coeffs[j] * &inv[i - j];
            }
            inv[i] = s * &c0;
        }
        Some(Self::from_coeffs(inv))
    }

    /// Division with remainder by `x - r`.
    pub fn div_rem_linear(&self, r: &BigInt) -> (Self, BigInt) {
        let n = self.coeffs.len();
        if n == 0 {
            return (Self::zero(), BigInt::zero());
        }
        let mut q = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * r;
            if i == 0 {
                return (Self::from_coeffs(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Division with remainder by a monic polynomial.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by zero polynomial");
        assert!(divisor.coeffs[d].is_one(), "divisor must be monic");
        if self.coeffs.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                rem[i - d + j] -= &c * &divisor.coeffs[j];
            }
            q[i - d] = c;
        }
        rem.truncate(d);
        (Self::from_coeffs(q), Self::from_coeffs(rem))
    }

    /// Coefficients read in reverse order over `0..=deg`.
    pub fn is_palindromic(&self) -> bool {
        let c = &self.coeffs;
        (0..c.len() / 2).all(|i| c[i] == c[c.len() - 1 - i])
    }

    /// Renders with the given variable name, lowest degree first,
    /// e.g. `1 + 10*x + 5*x^2`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let first = out.is_empty();
            let mag = c.abs();
            if c.is_negative() {
                out.push_str(if first { "-" } else { " - " });
            } else if !first {
                out.push_str(" + ");
            }
            match i {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        out
    }

    fn mul_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.len().min(b.len()) < KARATSUBA_THRESHOLD {
            schoolbook(a, b)
        } else {
            karatsuba(a, b)
        }
    }
}

/// Serialized as the coefficient list, lowest degree first, with each
/// coefficient as a decimal string.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        decimal::vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        decimal::vec::deserialize(d).map(Self::from_coeffs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl From<Vec<BigInt>> for IntPoly {
    fn from(coeffs: Vec<BigInt>) -> Self {
        Self::from_coeffs(coeffs)
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (d, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *d += s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.len() {
            coeffs.resize(rhs.len(), BigInt::zero());
        }
        for (d, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *d -= s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::from_coeffs(IntPoly::mul_slices(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn normalization() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), IntPoly::zero());
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(p(&[0, -3, 1]).mod_p(2), p(&[0, 1, 1]));
        assert_eq!(p(&[0, -3, 1]).eval_i64(3), BigInt::zero());
        assert_eq!(IntPoly::binomial_power(1, 1, 4), p(&[1, 4, 6, 4, 1]));
    }

    #[test]
    fn linear_division() {
        let f = &p(&[1, 1]) * &p(&[3, 0, 2, 7]);
        let (q, r) = f.div_rem_linear(&BigInt::from(-1));
        assert_eq!(q, p(&[3, 0, 2, 7]));
        assert!(r.is_zero());
        let (_, r) = p(&[1, 2, 3]).div_rem_linear(&BigInt::from(2));
        assert_eq!(r, BigInt::from(17));
    }

    #[test]
    fn monic_division() {
        let d = p(&[1, 2, 1]);
        let f = &(&d * &p(&[5, -1, 4])) + &p(&[2, 3]);
        let (q, r) = f.div_rem_monic(&d);
        assert_eq!(q, p(&[5, -1, 4]));
        assert_eq!(r, p(&[2, 3]));
    }

    #[test]
    fn series_inverse() {
        let f = p(&[1, -2, 0, 1]);
        let inv = f.inverse_series(40).unwrap();
        assert_eq!(f.mul_trunc(&inv, 40), IntPoly::one());
        assert!(p(&[2, 1]).inverse_series(4).is_none());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, 10, 5]).to_string(), "1 + 10*x + 5*x^2");
        assert_eq!(p(&[0, -3, 1]).display_with("t"), "-3*t + t^2");
        assert_eq!(p(&[0, 0, -1]).display_with("t"), "-t^2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
