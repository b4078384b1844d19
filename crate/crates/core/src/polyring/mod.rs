//! Polynomials over `K`: ternary cubic forms (plane curves), quadratic and
//! linear forms, univariate polynomials, and binary forms with exact
//! Sylvester resultants.

mod bform;
pub mod cubic;
mod upoly;

pub use bform::{resultant_cubics, Axis, BForm};
pub use cubic::{aronhold_s, mono, monomial_index, LinForm, QuadForm, TernaryCubic, MONOMIALS};
pub use upoly::UPoly;
