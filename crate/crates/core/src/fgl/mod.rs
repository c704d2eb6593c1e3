//! Formal group law coefficients, the `beta` basis, the `b` operator and the
//! telescope presentation of `R (x) H`.

mod beta;
mod law;
mod telescope;

pub use beta::{
    alpha_to_beta, b_matrix_entry, b_operator, beta_to_alpha, Alpha, AlphaVec, BasisName, Beta,
    BetaVec, RCombination,
};
pub use law::{
    adams_a1jk_check, generic_law, mult_coeff_closed_form, mult_law, power_coeff, symbol, Fgl,
};
pub use telescope::{normal_form_targets, telescope_colimit_map, telescope_preimage};
