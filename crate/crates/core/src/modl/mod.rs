//! Finite coefficient rings `Z/l^nu`: the blocks `b_k`, localization of finite
//! modules at an endomorphism, and the mod-`q` basis of `H`.

mod checks;
mod localize;
mod matrix;

pub use checks::{block_endo, hq_basis_check, hq_basis_indices, lemma_mb_check, t_block_endo, t_matrix, SIZE_GUARD};
pub use localize::{eventual_localization, LocalizedModule};
pub use matrix::{independent_mod_l, prime_power, valuation, EndoMap, ModMatrix};
