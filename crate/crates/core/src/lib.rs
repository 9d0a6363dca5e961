//! Exact arithmetic for the power series `F(x)^t` where
//! `F(x) = prod_{n >= 0} (1 - x^(2^n))` generates the Prouhet-Thue-Morse
//! sequence `(-1)^s2(n)`.
//!
//! The coefficients of `F(x)^t` are polynomials `f_n(t)` ([`fpoly`]).
//! At `t = m` they give the `m`-fold self-convolution `t_m(n)` of the
//! Thue-Morse sequence ([`tm`]); at `t = -m` they count binary partitions
//! with `m` colours, `b_m(n)` ([`bm`]). The [`harness`] module turns the
//! checks in those modules into named, bounded verification campaigns.
//!
//! All arithmetic is exact. Sweeps over large index ranges run on rayon
//! when the `parallel` feature is on (the default).

pub mod arith;
pub mod bm;
pub mod error;
pub mod fpoly;
pub mod harness;
pub mod par;
pub mod poly;
pub mod report;
pub mod tm;

pub use error::{Error, Result};
