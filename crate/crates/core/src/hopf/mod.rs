//! The Hopf algebra `H = F[1/t]` inside `Q[t, 1/t]`.
//!
//! Elements are stored as `t^{-j} f` with `f` in F and `j` minimal, which is a
//! unique normal form because division by `t` in F is unambiguous. Tensor
//! powers keep one shift per factor ([`TensorH`]).

mod axioms;
mod elem;
mod tensor;

pub use axioms::{check_axiom, hopf_axioms_verify, HopfAxiom};
pub use elem::{
    antipode, coproduct, coproduct_alpha, counit, evaluation_criterion, h_eq, h_from_laurent,
    h_mul, h_normalize, rational_value, HElem,
};
pub use tensor::{tensor_slot_apply, SlotOp, TensorH};
