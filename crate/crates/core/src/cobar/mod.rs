//! The cobar complex of the split Hopf algebroid `(Z[u, 1/u], Z[u, 1/u] (x) H)`
//! and the standard cosimplicial ring on F.

mod algebroid;
mod cosimplicial;
mod elem;
mod fside;
mod primitives;
mod relem;

pub use algebroid::{
    algebroid_axioms_verify, gamma_conjugate, gamma_coproduct, gamma_counit, gamma_tensor, v_elem,
};
pub use cosimplicial::{
    check_identities, cosimplicial_identities_verify, dual_path_space_verify, f_identities_verify,
    fuzz_identities, CobarComplex, Cosimplicial, DualPathSpace, FComplex, IdentityCheck,
    IdentityTally, CODEGENERACY_CODEGENERACY, COFACE_COFACE, MAX_FUZZ_DEGREE, MIXED_ABOVE,
    MIXED_BELOW, MIXED_IDENTITY,
};
pub use elem::{
    cobar_differential, codegeneracy, coface, eta_l, eta_r, grading_degree, CobarElem,
    GradingDegree,
};
pub use fside::{f_codegeneracy, f_coface, FCosimplexElem};
pub use primitives::h0_primitives;
pub use relem::RElem;
