//! Seeded random elements for the property checks and the `verify` suites.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{Int, LaurentPoly, Rat};
use crate::cobar::{CobarElem, FCosimplexElem, RElem};
use crate::fgl::BetaVec;
use crate::hopf::{HElem, TensorH};
use crate::numpoly::NumPoly;

/// Largest binomial index used by the generators.
pub const MAX_INDEX: usize = 5;
/// Largest number of terms used by the generators.
pub const MAX_TERMS: usize = 4;
/// `u`-exponents are drawn from `[-MAX_U, MAX_U]`.
pub const MAX_U: i64 = 3;
/// Largest `t`-shift used by the generators.
pub const MAX_SHIFT: usize = 2;

/// Per-trial seed, independent of how trials are scheduled.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn trial_rng(master: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master, index))
}

fn nonzero_coeff<R: Rng>(rng: &mut R) -> Int {
    let c: i64 = rng.gen_range(1..=3);
    Int::from(if rng.gen_bool(0.5) { c } else { -c })
}

pub fn random_numpoly<R: Rng>(rng: &mut R, max_index: usize) -> NumPoly {
    let n = rng.gen_range(1..=MAX_TERMS);
    NumPoly::from_terms((0..n).map(|_| (rng.gen_range(0..=max_index), nonzero_coeff(rng))))
}

pub fn random_helem<R: Rng>(rng: &mut R) -> HElem {
    let shift = rng.gen_range(0..=MAX_SHIFT);
    HElem::new(shift, random_numpoly(rng, MAX_INDEX))
}

pub fn random_relem<R: Rng>(rng: &mut R) -> RElem {
    let n = rng.gen_range(1..=MAX_TERMS);
    RElem::from_terms((0..n).map(|_| (rng.gen_range(-MAX_U..=MAX_U), nonzero_coeff(rng))))
}

/// A sum of at most [`MAX_TERMS`] pure tensors, each with its own shifts.
pub fn random_tensor<R: Rng>(rng: &mut R, arity: usize) -> TensorH {
    let n = rng.gen_range(1..=MAX_TERMS);
    let mut acc = TensorH::zero(arity);
    for _ in 0..n {
        let shifts: Vec<usize> = (0..arity).map(|_| rng.gen_range(0..=MAX_SHIFT)).collect();
        let idx: Vec<usize> = (0..arity).map(|_| rng.gen_range(0..=MAX_INDEX)).collect();
        let t = TensorH::from_parts(shifts, [(idx, nonzero_coeff(rng))]).expect("arity matches");
        acc = &acc + &t;
    }
    acc
}

pub fn random_cobar<R: Rng>(rng: &mut R, degree: usize) -> CobarElem {
    let n = rng.gen_range(1..=MAX_TERMS);
    let mut acc = CobarElem::zero(degree);
    for _ in 0..n {
        let a = rng.gen_range(-MAX_U..=MAX_U);
        let shifts: Vec<usize> = (0..degree).map(|_| rng.gen_range(0..=MAX_SHIFT)).collect();
        let idx: Vec<usize> = (0..degree).map(|_| rng.gen_range(0..=MAX_INDEX)).collect();
        let t = TensorH::from_parts(shifts, [(idx, nonzero_coeff(rng))]).expect("arity matches");
        acc.add_tensor(a, t);
    }
    acc
}

pub fn random_fcosimplex<R: Rng>(rng: &mut R, degree: usize) -> FCosimplexElem {
    let n = rng.gen_range(1..=MAX_TERMS);
    let terms = (0..n).map(|_| {
        let idx: Vec<usize> = (0..=degree).map(|_| rng.gen_range(0..=MAX_INDEX)).collect();
        (idx, nonzero_coeff(rng))
    });
    FCosimplexElem::from_terms(degree, terms).expect("lengths match")
}

pub fn random_beta<R: Rng>(rng: &mut R) -> BetaVec {
    let n = rng.gen_range(1..=MAX_TERMS);
    BetaVec::from_terms((0..n).map(|_| (rng.gen_range(0..=MAX_INDEX), random_relem(rng))))
}

/// Laurent polynomials with exponents in `[-4, 6]` and denominators in `{1, 2, 3, 4, 6, 8}`.
pub fn random_laurent<R: Rng>(rng: &mut R) -> LaurentPoly {
    const DENS: [i64; 6] = [1, 2, 3, 4, 6, 8];
    let n = rng.gen_range(1..=MAX_TERMS);
    LaurentPoly::from_terms((0..n).map(|_| {
        let e = rng.gen_range(-4..=6);
        let num: i64 = rng.gen_range(-6..=6);
        let den = DENS[rng.gen_range(0..DENS.len())];
        (e, Rat::new(Int::from(num), Int::from(den)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_reproducible() {
        let a = random_cobar(&mut trial_rng(7, 3), 2);
        let b = random_cobar(&mut trial_rng(7, 3), 2);
        assert_eq!(a, b);
        assert_ne!(derive_seed(7, 3), derive_seed(7, 4));
        assert_eq!(a.degree(), 2);
    }
}
