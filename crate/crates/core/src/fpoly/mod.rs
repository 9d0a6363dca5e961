//! The polynomials `f_n(t)`, coefficients of `x^n` in `F(x)^t`.
//!
//! `f_n` has rational coefficients with denominator dividing `n!`, so the
//! library works with the integer polynomial `g_n = n! f_n` and wraps it in
//! a [`FactPoly`] when the rational view is needed.

mod checks;
mod coeffs;
mod fact_poly;
mod log;
mod series;

pub use checks::{check_addition_formula, check_coeff_closed_forms, check_g_factorization};
pub use coeffs::{w_poly, CoeffTable, W_REFERENCE_RANGE};
pub use fact_poly::FactPoly;
pub use log::{formal_log_coeffs, log_coeff, log_coeff_base, log_coeff_base_unnormalized};
pub use series::{f_poly, f_poly_alt1, f_poly_alt2, FSeries};
