use super::beta::BetaVec;
use crate::cobar::{CobarElem, RElem};
use crate::error::{Error, Result};
use crate::hopf::{HElem, TensorH};
use crate::numpoly::NumPoly;

/// The class of `x` at telescope stage `j`, as `v^{-j} x` in `R (x) H`.
///
/// `c u^a beta_n` goes to `u^{a+n-j} (x) c t^{-j} alpha_n`.
pub fn telescope_colimit_map(stage: usize, x: &BetaVec) -> CobarElem {
    let mut out = CobarElem::zero(1);
    for (n, c) in x.terms() {
        for (a, k) in c.terms() {
            let h = HElem::new(stage, NumPoly::term(n, k.clone()));
            out.add_tensor(a + n as i64 - stage as i64, TensorH::from_helem(&h));
        }
    }
    out
}

/// A stage and a vector mapping to `y` under [`telescope_colimit_map`].
pub fn telescope_preimage(y: &CobarElem) -> Result<(usize, BetaVec)> {
    if y.degree() != 1 {
        return Err(Error::DegreeMismatch { expected: 1, found: y.degree() });
    }
    let stage = y.terms().map(|(_, t)| t.shifts()[0]).max().unwrap_or(0);
    let mut x = BetaVec::zero();
    for (a, t) in y.terms() {
        let raised = t.raised(&[stage]);
        for (idx, c) in raised.terms() {
            let n = idx[0];
            let e = a + stage as i64 - n as i64;
            x.add_term(n, RElem::monomial(e, c.clone()));
        }
    }
    Ok((stage, x))
}

/// Ten elements of `R (x) H` in normal form, used as surjectivity targets.
pub fn normal_form_targets() -> Vec<CobarElem> {
    use crate::arith::int;
    let h = |shift: usize, terms: &[(usize, i64)]| {
        HElem::new(shift, NumPoly::from_terms(terms.iter().map(|&(n, c)| (n, int(c)))))
    };
    let targets = [
        (0, h(0, &[(0, 1)])),
        (0, h(0, &[(1, 1)])),
        (0, h(1, &[(0, 1)])),
        (0, h(0, &[(2, 1)])),
        (0, h(1, &[(2, 1)])),
        (-1, h(3, &[(2, -1)])),
        (2, h(2, &[(1, 1), (3, 1)])),
        (1, h(0, &[(5, 1)])),
        (0, h(3, &[(4, 1), (5, -2)])),
        (-2, h(2, &[(3, 1)])),
    ];
    targets
        .into_iter()
        .map(|(a, h)| CobarElem::term(a, TensorH::from_helem(&h)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgl::b_operator;

    #[test]
    fn examples() {
        assert_eq!(
            telescope_colimit_map(0, &BetaVec::basis(2)),
            CobarElem::from_factors(2, &[HElem::alpha(2)])
        );
        assert_eq!(
            telescope_colimit_map(1, &BetaVec::basis(1)),
            CobarElem::from_factors(0, &[HElem::one()])
        );
        let b0 = BetaVec::basis(0);
        assert_eq!(telescope_colimit_map(1, &b_operator(&b0)), telescope_colimit_map(0, &b0));
    }

    #[test]
    fn targets_are_hit() {
        let targets = normal_form_targets();
        assert_eq!(targets.len(), 10);
        for y in targets {
            let (j, x) = telescope_preimage(&y).unwrap();
            assert_eq!(telescope_colimit_map(j, &x), y);
        }
        let y = CobarElem::from_factors(1, &[HElem::one(), HElem::one()]);
        assert!(telescope_preimage(&y).is_err());
    }
}
