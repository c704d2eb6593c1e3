use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::elem::{eta_l, eta_r};
use super::relem::RElem;
use crate::arith::{integer_kernel, Int};

/// A lattice basis of `{ r : eta_L(r) = eta_R(r) }` among `r` supported on
/// `u`-exponents in `[-bound, bound]`.
pub fn h0_primitives(bound: u32) -> Vec<RElem> {
    let b = i64::from(bound);
    let exps: Vec<i64> = (-b..=b).collect();
    let top = vec![bound as usize];
    // column a: coordinates of (eta_L - eta_R)(u^a) over t^{-bound}, keyed by (a, alpha index)
    let mut rows: BTreeMap<(i64, usize), Vec<Int>> = BTreeMap::new();
    for (col, a) in exps.iter().enumerate() {
        let r = RElem::u_pow(*a);
        let diff = &eta_l(&r) - &eta_r(&r);
        for (e, t) in diff.terms() {
            let raised = t.raised(&top);
            for (idx, c) in raised.terms() {
                rows.entry((e, idx[0]))
                    .or_insert_with(|| vec![Int::zero(); exps.len()])[col] += c;
            }
        }
    }
    let rows: Vec<Vec<Int>> = rows.into_values().collect();
    integer_kernel(&rows, exps.len())
        .into_iter()
        .map(|v| {
            let flip = v.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
            RElem::from_terms(
                exps.iter()
                    .zip(v)
                    .map(|(a, c)| (*a, if flip { -c } else { c })),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_constants() {
        for b in 1..=3 {
            assert_eq!(h0_primitives(b), vec![RElem::one()]);
        }
    }
}
