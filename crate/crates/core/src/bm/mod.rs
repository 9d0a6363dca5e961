//! The sequences `b_m(n)`: coefficients of `F(x)^(-m)`, counting binary
//! partitions of `n` whose parts carry one of `m` colours, together with
//! the numerator polynomials `h_{i,k,m}` of their 2-power subsequences.

mod b2_table;
mod congruences;
mod hpoly;
mod operator;
mod seq;
mod turan;
mod valuation;

pub use b2_table::{b2_row_certificate, check_b2_valuation_table, B2_VALUATION_TABLE};
pub use congruences::{
    check_derivative_convolution, check_prime_power_colors, check_prime_power_congruences,
    check_ptm_bridge, check_short_sum_congruences,
};
pub use hpoly::{
    check_8x1_divisibility, check_binomial_4div, check_h_anchors, check_h_identity, check_h_mod_p,
    check_palindromic_basis, h_poly, palindromic_decompose, HPolyEntry, HPolyTable,
    PalindromicForm,
};
pub use operator::{
    check_annihilation, check_factor_commutation, check_g_closed_forms, v_operator, ShiftOperator,
};
pub use seq::{b1, b1_oracle, bm, bm_alt, bm_oracle, BmCache, BmSeq};
pub use turan::{check_parity_b, check_turan_b};
pub use valuation::{check_churchhouse, check_v2_b2k1, v2_b1_churchhouse, v2_b2k1_closed};
