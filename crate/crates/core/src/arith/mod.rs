//! Integer foundations: binary digits, 2-adic valuations, binomials,
//! and the base-4 digit expansion over {0, 1, 3, 6}.

mod binom;
pub mod decimal;
mod digits;
mod valuation;

pub use binom::{binom, binom_u64, is_prime, nu2_binom, nu2_factorial};
pub use digits::{base4_digits_0136, eval_base4, nu2, s2};
pub use valuation::{nu2_int, Valuation};
