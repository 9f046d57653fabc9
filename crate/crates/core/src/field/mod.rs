//! Exact arithmetic in `Q(h, a1..a6, eta, t1, t2)` and affine-linear forms
//! in ansatz unknowns over that field.

mod gcd;
mod linform;
mod poly;
mod ratfunc;
mod symbols;
pub(crate) mod text;

use thiserror::Error;

pub use gcd::{gcd, gcd_many};
pub use linform::{LinForm, Solution, UnknownSymbol};
pub use poly::{Monomial, Poly};
pub use ratfunc::{Bindings, RatFunc};
pub use symbols::{ParamSymbol, NVARS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the specialization point")]
    PoleAtPoint,
}

/// Normalized `num / den`.
pub fn normalize(num: Poly, den: Poly) -> Result<RatFunc, FieldError> {
    RatFunc::new(num, den)
}
