use std::fmt;

use super::elem::{counit, HElem};
use super::tensor::TensorH;
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum HopfAxiom {
    Coassociativity,
    CounitLeft,
    CounitRight,
    AntipodeLeft,
    AntipodeRight,
    Multiplicativity,
}

impl HopfAxiom {
    pub const ALL: [HopfAxiom; 6] = [
        HopfAxiom::Coassociativity,
        HopfAxiom::CounitLeft,
        HopfAxiom::CounitRight,
        HopfAxiom::AntipodeLeft,
        HopfAxiom::AntipodeRight,
        HopfAxiom::Multiplicativity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HopfAxiom::Coassociativity => "coassociativity",
            HopfAxiom::CounitLeft => "counit_left",
            HopfAxiom::CounitRight => "counit_right",
            HopfAxiom::AntipodeLeft => "antipode_left",
            HopfAxiom::AntipodeRight => "antipode_right",
            HopfAxiom::Multiplicativity => "multiplicativity",
        }
    }
}

impl fmt::Display for HopfAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checks a single axiom on `a`; multiplicativity uses the pair `(a, b)`.
pub fn check_axiom(axiom: HopfAxiom, a: &HElem, b: &HElem) -> Result<(), String> {
    let x = TensorH::from_helem(a);
    let delta = x.apply_coproduct(0);
    let (lhs, rhs) = match axiom {
        HopfAxiom::Coassociativity => (delta.apply_coproduct(0), delta.apply_coproduct(1)),
        HopfAxiom::CounitLeft => (delta.apply_counit(0), x.clone()),
        HopfAxiom::CounitRight => (delta.apply_counit(1), x.clone()),
        HopfAxiom::AntipodeLeft | HopfAxiom::AntipodeRight => {
            let slot = usize::from(axiom == HopfAxiom::AntipodeRight);
            let lhs = delta.apply_antipode(slot).multiply_adjacent(0);
            (lhs, TensorH::from_helem(&HElem::from_f(crate::numpoly::NumPoly::constant(counit(a)))))
        }
        HopfAxiom::Multiplicativity => {
            let y = TensorH::from_helem(b);
            let ab = TensorH::from_helem(&(a * b));
            (ab.apply_coproduct(0), &delta * &y.apply_coproduct(0))
        }
    };
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{lhs} != {rhs}"))
    }
}

/// Runs every axiom on every sample; multiplicativity pairs each sample with the next one.
pub fn hopf_axioms_verify(samples: &[HElem]) -> Report {
    let mut report = Report::new("hopf");
    for (i, a) in samples.iter().enumerate() {
        let b = &samples[(i + 1) % samples.len()];
        for axiom in HopfAxiom::ALL {
            let subject = if axiom == HopfAxiom::Multiplicativity {
                format!("{a} ; {b}")
            } else {
                a.to_string()
            };
            match check_axiom(axiom, a, b) {
                Ok(()) => report.check(axiom.name(), subject, true),
                Err(d) => report.check_with(axiom.name(), subject, false, d),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numpoly::NumPoly;

    #[test]
    fn spec_samples() {
        let a2 = HElem::alpha(2);
        assert_eq!(check_axiom(HopfAxiom::CounitLeft, &a2, &a2), Ok(()));
        let a1 = HElem::alpha(1);
        assert_eq!(check_axiom(HopfAxiom::AntipodeLeft, &a1, &a1), Ok(()));
        let r = hopf_axioms_verify(&[HElem::one()]);
        assert!(r.passed());
        assert_eq!(r.count(), 6);
    }

    #[test]
    fn shifted_samples() {
        let samples = vec![
            HElem::new(2, NumPoly::from_terms([(1, 3.into()), (3, (-1).into())])),
            HElem::t_pow(-3),
            HElem::new(1, NumPoly::alpha(4)),
        ];
        let r = hopf_axioms_verify(&samples);
        assert!(r.passed(), "{r}");
    }
}
