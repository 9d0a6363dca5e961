//! Dense exact polynomials over the integers and the square-root calculus
//! used when substituting `x -> sqrt(x)`.

mod int_poly;
mod mul;
mod parse;
mod sqrt_poly;

pub use int_poly::IntPoly;
pub use sqrt_poly::SqrtPoly;
