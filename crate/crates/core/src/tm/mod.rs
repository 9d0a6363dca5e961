//! The sequences `t_m(n)`: coefficients of `F(x)^m`, i.e. the `m`-fold
//! self-convolution of the Thue-Morse sequence.

mod appendix;
mod extrema;
mod inequalities;
mod pair_tree;
mod seq;
mod t2;
mod valuation;
mod zeros;

pub use appendix::{check_nonvanishing, multinomial_count, nonvanishing_threshold, tm_multinomial};
pub use extrema::{check_maxmin, maxmin_closed, maxmin_scan, MaxMin};
pub use inequalities::{check_growth, check_logconcave, check_mean, check_signs};
pub use pair_tree::{pair_tree_bfs, t2_solve, SolveOptions, T2Solution};
pub use seq::{check_parity_t, ptm, tm, tm_oracle, TmCache, TmSeq};
pub use t2::{check_kinf, check_symmetry, check_t2_mod4, t2_prefix, t2_symmetry_partner};
pub use valuation::{
    check_v2_t2k, check_v2_t3, v2_t2k_closed, v2_t2k_piecewise, v2_t3_closed, v2_t3_rec,
    valuation_reports_t2k, valuation_reports_t3, ValuationReport,
};
pub use zeros::{check_t3_reducibility_witness, t3_is_zero, t3_zero_seq};
