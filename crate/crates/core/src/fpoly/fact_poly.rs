use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::IntPoly;

/// `num / fact_index!`, deliberately not reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactPoly {
    pub num: IntPoly,
    pub fact_index: u64,
}

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl FactPoly {
    pub fn new(num: IntPoly, fact_index: u64) -> Self {
        Self { num, fact_index }
    }

    pub fn denominator(&self) -> BigInt {
        factorial(self.fact_index)
    }

    pub fn degree(&self) -> Option<usize> {
        self.num.degree()
    }

    /// Coefficient of `t^i` in lowest terms.
    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.num.coeff(i), self.denominator())
    }

    pub fn rational_coeffs(&self) -> Vec<BigRational> {
        let d = self.denominator();
        self.num
            .coeffs()
            .iter()
            .map(|c| BigRational::new(c.clone(), d.clone()))
            .collect()
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.num.eval_rational(at) / BigRational::from_integer(self.denominator())
    }

    pub fn eval_int(&self, at: i64) -> BigRational {
        BigRational::new(self.num.eval_i64(at), self.denominator())
    }

    /// Rational coefficients, lowest degree first, e.g.
    /// `-1/3*t + 3/2*t^2 - 1/6*t^3`.
    pub fn display_with(&self, var: &str) -> String {
        let cs = self.rational_coeffs();
        if cs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in cs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let first = out.is_empty();
            if c.is_negative() {
                out.push_str(if first { "-" } else { " - " });
            } else if !first {
                out.push_str(" + ");
            }
            let mag = c.abs();
            if i == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(var);
            if i > 1 {
                out.push_str(&format!("^{i}"));
            }
        }
        out
    }
}
