use std::collections::BTreeMap;
use std::fmt::Display;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::elem::{cobar_differential, codegeneracy, coface, CobarElem};
use super::fside::{f_codegeneracy, f_coface, FCosimplexElem};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::sample::{random_cobar, random_fcosimplex, trial_rng};

/// A cosimplicial object given by its coface and codegeneracy operators.
pub trait Cosimplicial: Sync {
    type Elem: Clone + PartialEq + Display + Send;

    fn degree(&self, x: &Self::Elem) -> usize;
    fn coface(&self, i: usize, x: &Self::Elem) -> Result<Self::Elem>;
    fn codegeneracy(&self, i: usize, x: &Self::Elem) -> Result<Self::Elem>;
}

/// The cobar complex `C^n = R (x) H^{(x)n}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct CobarComplex;

impl Cosimplicial for CobarComplex {
    type Elem = CobarElem;

    fn degree(&self, x: &CobarElem) -> usize {
        x.degree()
    }
    fn coface(&self, i: usize, x: &CobarElem) -> Result<CobarElem> {
        coface(i, x)
    }
    fn codegeneracy(&self, i: usize, x: &CobarElem) -> Result<CobarElem> {
        codegeneracy(i, x)
    }
}

/// The standard cosimplicial ring `n -> F^{(x)n+1}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FComplex;

impl Cosimplicial for FComplex {
    type Elem = FCosimplexElem;

    fn degree(&self, x: &FCosimplexElem) -> usize {
        x.degree()
    }
    fn coface(&self, i: usize, x: &FCosimplexElem) -> Result<FCosimplexElem> {
        f_coface(i, x)
    }
    fn codegeneracy(&self, i: usize, x: &FCosimplexElem) -> Result<FCosimplexElem> {
        f_codegeneracy(i, x)
    }
}

/// `Y^n = X^{n+1}` with `partial_Y^i = partial_X^{i+1}` and `sigma_Y^i = sigma_X^{i+1}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DualPathSpace<C>(pub C);

impl<C: Cosimplicial> Cosimplicial for DualPathSpace<C> {
    type Elem = C::Elem;

    fn degree(&self, x: &C::Elem) -> usize {
        self.0.degree(x).checked_sub(1).expect("path space elements have degree at least 1")
    }
    fn coface(&self, i: usize, x: &C::Elem) -> Result<C::Elem> {
        self.0.coface(i + 1, x).map_err(|e| shift_index(e, self.degree(x)))
    }
    fn codegeneracy(&self, i: usize, x: &C::Elem) -> Result<C::Elem> {
        self.0.codegeneracy(i + 1, x).map_err(|e| shift_index(e, self.degree(x)))
    }
}

fn shift_index(e: Error, degree: usize) -> Error {
    match e {
        Error::FaceIndexOutOfRange { index, .. } => Error::FaceIndexOutOfRange { index: index - 1, degree },
        Error::DegeneracyIndexOutOfRange { index, .. } => {
            Error::DegeneracyIndexOutOfRange { index: index - 1, degree }
        }
        e => e,
    }
}

/// Outcome of one instance of a cosimplicial identity.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub instance: String,
    pub outcome: std::result::Result<(), String>,
}

pub const COFACE_COFACE: &str = "coface_coface";
pub const CODEGENERACY_CODEGENERACY: &str = "codegeneracy_codegeneracy";
pub const MIXED_BELOW: &str = "mixed_i_lt_j";
pub const MIXED_IDENTITY: &str = "mixed_identity";
pub const MIXED_ABOVE: &str = "mixed_i_gt_j_plus_1";

fn compare<E: PartialEq + Display>(lhs: Result<E>, rhs: Result<E>) -> std::result::Result<(), String> {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l == r => Ok(()),
        (Ok(l), Ok(r)) => Err(format!("lhs = {l}; rhs = {r}")),
        (Err(e), _) | (_, Err(e)) => Err(format!("error: {e}")),
    }
}

/// Checks every cosimplicial identity that applies to `x`.
pub fn check_identities<C: Cosimplicial>(obj: &C, x: &C::Elem) -> Vec<IdentityCheck> {
    let n = obj.degree(x);
    let mut out = Vec::new();
    let face = |i: usize, y: &C::Elem| obj.coface(i, y);
    let degen = |i: usize, y: &C::Elem| obj.codegeneracy(i, y);
    // d^j d^i = d^i d^{j-1}, i < j
    for j in 0..=n + 2 {
        for i in 0..j {
            let lhs = face(i, x).and_then(|y| face(j, &y));
            let rhs = face(j - 1, x).and_then(|y| face(i, &y));
            out.push(IdentityCheck {
                identity: COFACE_COFACE,
                instance: format!("d^{j} d^{i} = d^{i} d^{}", j - 1),
                outcome: compare(lhs, rhs),
            });
        }
    }
    // s^j s^i = s^i s^{j+1}, i <= j
    if n >= 2 {
        for j in 0..=n - 2 {
            for i in 0..=j {
                let lhs = degen(i, x).and_then(|y| degen(j, &y));
                let rhs = degen(j + 1, x).and_then(|y| degen(i, &y));
                out.push(IdentityCheck {
                    identity: CODEGENERACY_CODEGENERACY,
                    instance: format!("s^{j} s^{i} = s^{i} s^{}", j + 1),
                    outcome: compare(lhs, rhs),
                });
            }
        }
    }
    // s^j d^i on degree n + 1
    for j in 0..=n {
        for i in 0..=n + 1 {
            let lhs = face(i, x).and_then(|y| degen(j, &y));
            let (identity, instance, rhs) = if i < j {
                (MIXED_BELOW, format!("s^{j} d^{i} = d^{i} s^{}", j - 1), degen(j - 1, x).and_then(|y| face(i, &y)))
            } else if i == j || i == j + 1 {
                (MIXED_IDENTITY, format!("s^{j} d^{i} = id"), Ok(x.clone()))
            } else {
                (MIXED_ABOVE, format!("s^{j} d^{i} = d^{} s^{j}", i - 1), degen(j, x).and_then(|y| face(i - 1, &y)))
            };
            out.push(IdentityCheck { identity, instance, outcome: compare(lhs, rhs) });
        }
    }
    out
}

/// Per-identity counts and verbatim counterexamples.
#[derive(Clone, Debug, Default)]
pub struct IdentityTally {
    counts: BTreeMap<&'static str, usize>,
    failures: Vec<(&'static str, String, String)>,
}

impl IdentityTally {
    pub fn record(&mut self, subject: &str, checks: Vec<IdentityCheck>) {
        for c in checks {
            *self.counts.entry(c.identity).or_default() += 1;
            if let Err(d) = c.outcome {
                self.failures.push((c.identity, format!("{} on {subject}", c.instance), d));
            }
        }
    }

    pub fn merge(&mut self, other: IdentityTally) {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        self.failures.extend(other.failures);
    }

    pub fn count(&self, identity: &str) -> usize {
        self.counts.get(identity).copied().unwrap_or(0)
    }

    pub fn failure_count(&self) -> usize {
        self.failures.len()
    }

    pub fn into_report(self, title: &str) -> Report {
        let mut report = Report::new(title);
        for (name, count) in &self.counts {
            let failed = self.failures.iter().filter(|f| f.0 == *name).count();
            report.check_with(*name, "all", failed == 0, format!("{count} instances, {failed} failed"));
            report.fact(format!("{name}.instances"), *count);
        }
        for (name, subject, detail) in self.failures {
            report.check_with(name, subject, false, detail);
        }
        report
    }
}

/// Runs the identity checker on `trials` seeded elements of every degree up to `maxdeg`.
pub fn fuzz_identities<C, G>(obj: &C, generate: G, maxdeg: usize, trials: u64, seed: u64) -> IdentityTally
where
    C: Cosimplicial,
    G: Fn(&mut ChaCha8Rng, usize) -> C::Elem + Sync,
{
    let per_trial: Vec<IdentityTally> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let mut tally = IdentityTally::default();
            for degree in 0..=maxdeg {
                let x = generate(&mut rng, degree);
                tally.record(&x.to_string(), check_identities(obj, &x));
            }
            tally
        })
        .collect();
    per_trial.into_iter().fold(IdentityTally::default(), |mut acc, t| {
        acc.merge(t);
        acc
    })
}

/// Largest degree accepted by [`cosimplicial_identities_verify`].
pub const MAX_FUZZ_DEGREE: usize = 3;

/// Cosimplicial identities and `d o d = 0` on seeded random cobar elements.
pub fn cosimplicial_identities_verify(maxdeg: usize, trials: u64, seed: u64) -> Result<Report> {
    if maxdeg > MAX_FUZZ_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "maxdeg {maxdeg} exceeds {MAX_FUZZ_DEGREE}"
        )));
    }
    let tally = fuzz_identities(&CobarComplex, random_cobar, maxdeg, trials, seed);
    let mut report = tally.into_report("cosimplicial");
    let dd: Vec<(String, bool, String)> = (0..trials)
        .into_par_iter()
        .flat_map_iter(|t| {
            let mut rng = trial_rng(seed, t);
            (0..=maxdeg)
                .map(|degree| {
                    let x = random_cobar(&mut rng, degree);
                    let ddx = cobar_differential(&cobar_differential(&x));
                    (x.to_string(), ddx.is_zero(), ddx.to_string())
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let failed = dd.iter().filter(|d| !d.1).count();
    report.check_with("d_squared", "all", failed == 0, format!("{} instances, {failed} failed", dd.len()));
    report.fact("d_squared.instances", dd.len());
    for (x, ok, ddx) in dd {
        if !ok {
            report.check_with("d_squared", x, false, format!("d(d(x)) = {ddx}"));
        }
    }
    Ok(report)
}

/// The identity checker on the F-side complex.
pub fn f_identities_verify(maxdeg: usize, trials: u64, seed: u64) -> Report {
    fuzz_identities(&FComplex, random_fcosimplex, maxdeg, trials, seed).into_report("f_cosimplicial")
}

/// The identity checker on the path space obtained by dropping `partial^0` and `sigma^0`.
pub fn dual_path_space_verify(maxdeg: usize, trials: u64, seed: u64) -> Report {
    let obj = DualPathSpace(CobarComplex);
    fuzz_identities(&obj, |rng, d| random_cobar(rng, d + 1), maxdeg, trials, seed).into_report("dual_path_space")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobar::RElem;

    #[test]
    fn small_examples() {
        let u = CobarElem::from_r(&RElem::u(), 0);
        let checks = check_identities(&CobarComplex, &u);
        assert!(checks.iter().all(|c| c.outcome.is_ok()), "{checks:?}");
        assert!(checks.iter().any(|c| c.instance == "s^0 d^0 = id"));
        assert!(checks.iter().any(|c| c.instance == "s^0 d^1 = id"));
    }

    #[test]
    fn short_fuzz() {
        let r = cosimplicial_identities_verify(2, 5, 1).unwrap();
        assert!(r.passed(), "{r}");
        assert!(f_identities_verify(3, 5, 1).passed());
        assert!(dual_path_space_verify(1, 5, 1).passed());
        assert!(cosimplicial_identities_verify(4, 1, 1).is_err());
    }
}
