//! The Hopf G-coalgebra `{U_alpha}`: colored coproducts and antipodes, the
//! right G-integral and the G-traces built from it.

mod color;
mod integral;

pub use color::Color;
pub use integral::{
    antipode_colored, check_right_integral, delta_colored, g_element, g_element_inverse, gtrace, integral,
    integral_oracle, integral_value_on_top, top_monomial, twist_integral_closed_formula, twist_integral_unit,
    IntegralForm, IntegralOracle,
};
