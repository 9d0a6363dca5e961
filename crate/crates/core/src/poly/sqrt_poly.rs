use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPoly;

/// A polynomial in an auxiliary variable `y` standing for `sqrt(x)`.
///
/// Every such polynomial splits uniquely as `E(y^2) + y * O(y^2)`;
/// [`SqrtPoly::split`] returns `(E, O)` as polynomials in `x`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SqrtPoly(IntPoly);

impl SqrtPoly {
    pub fn new(p: IntPoly) -> Self {
        Self(p)
    }

    pub fn one() -> Self {
        Self(IntPoly::one())
    }

    /// `a + b*y`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self(IntPoly::from_i64s(&[a, b]))
    }

    /// The same polynomial in `x`, rewritten in `y` by `x = y^2`.
    pub fn embed(p: &IntPoly) -> Self {
        if p.is_zero() {
            return Self::default();
        }
        let mut coeffs = vec![BigInt::zero(); 2 * p.len() - 1];
        for (i, c) in p.coeffs().iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Self(IntPoly::from_coeffs(coeffs))
    }

    /// `P(sqrt x)`: the coefficients of `p` read as a polynomial in `y`.
    pub fn substitute_sqrt(p: &IntPoly) -> Self {
        Self(p.clone())
    }

    pub fn as_y_poly(&self) -> &IntPoly {
        &self.0
    }

    /// `P(-y)`.
    pub fn conjugate(&self) -> Self {
        Self(self.0.negate_var())
    }

    pub fn pow(&self, e: u64) -> Self {
        Self(self.0.pow(e))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self(self.0.scale(c))
    }

    pub fn split(&self) -> (IntPoly, IntPoly) {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (i, c) in self.0.coeffs().iter().enumerate() {
            if i % 2 == 0 {
                even.push(c.clone());
            } else {
                odd.push(c.clone());
            }
        }
        (IntPoly::from_coeffs(even), IntPoly::from_coeffs(odd))
    }

    /// `E(x)` if the polynomial is even in `y`, else `None`.
    pub fn even_exact(&self) -> Option<IntPoly> {
        let (even, odd) = self.split();
        odd.is_zero().then_some(even)
    }

    /// `O(x)` if the polynomial is `y` times an even polynomial, else `None`.
    pub fn odd_half_exact(&self) -> Option<IntPoly> {
        let (even, odd) = self.split();
        even.is_zero().then_some(odd)
    }

    /// Inverse of [`SqrtPoly::split`].
    pub fn reassemble(even: &IntPoly, odd_half: &IntPoly) -> Self {
        let e = Self::embed(even);
        let o = Self::embed(odd_half);
        Self(&e.0 + &o.0.shift(1))
    }
}

impl<'a> Add<&'a SqrtPoly> for &'a SqrtPoly {
    type Output = SqrtPoly;
    fn add(self, rhs: &SqrtPoly) -> SqrtPoly {
        SqrtPoly(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a SqrtPoly> for &'a SqrtPoly {
    type Output = SqrtPoly;
    fn sub(self, rhs: &SqrtPoly) -> SqrtPoly {
        SqrtPoly(&self.0 - &rhs.0)
    }
}

impl<'a> Mul<&'a SqrtPoly> for &'a SqrtPoly {
    type Output = SqrtPoly;
    fn mul(self, rhs: &SqrtPoly) -> SqrtPoly {
        SqrtPoly(&self.0 * &rhs.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn split_examples() {
        let sq = SqrtPoly::linear(1, 1).pow(2);
        assert_eq!(sq.split(), (p(&[1, 1]), p(&[2])));
        let fourth = SqrtPoly::linear(1, 1).pow(4);
        assert_eq!(fourth.split(), (p(&[1, 6, 1]), p(&[4, 4])));
        let cube = SqrtPoly::new(p(&[0, 0, 0, 1]));
        assert_eq!(cube.split(), (IntPoly::zero(), p(&[0, 1])));
    }

    #[test]
    fn embed_then_even_is_identity() {
        let q = p(&[3, -1, 0, 7]);
        assert_eq!(SqrtPoly::embed(&q).even_exact(), Some(q.clone()));
        assert_eq!(SqrtPoly::embed(&q).odd_half_exact(), None);
        // Product with its conjugate is always even in y.
        let s = SqrtPoly::new(p(&[1, 2, 3]));
        assert!((&s * &s.conjugate()).even_exact().is_some());
    }
}
