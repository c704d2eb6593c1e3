use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::relem::{fmt_u_monomial, RElem};
use crate::arith::Int;
use crate::error::{Error, Result};
use crate::hopf::{HElem, TensorH};

/// An element of `C^n = R (x) H^{(x)n}`, grouped by the exponent of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobarElem {
    degree: usize,
    terms: BTreeMap<i64, TensorH>,
}

/// The `u`-degree of a cobar element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradingDegree {
    Degree(i64),
    Mixed,
    Zero,
}

impl CobarElem {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    /// `u^a (x) x`.
    pub fn term(a: i64, x: TensorH) -> Self {
        let mut out = Self::zero(x.arity());
        out.add_tensor(a, x);
        out
    }

    /// `r (x) 1 (x) ... (x) 1`.
    pub fn from_r(r: &RElem, degree: usize) -> Self {
        let mut out = Self::zero(degree);
        for (a, c) in r.terms() {
            out.add_tensor(a, TensorH::unit(degree).scale(c));
        }
        out
    }

    /// `u^a (x) h_1 (x) ... (x) h_n`.
    pub fn from_factors(a: i64, factors: &[HElem]) -> Self {
        Self::term(a, TensorH::from_factors(factors))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &TensorH)> + '_ {
        self.terms.iter().map(|(a, x)| (*a, x))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of `(u^a, alpha-multi-index)` terms.
    pub fn len(&self) -> usize {
        self.terms.values().map(TensorH::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_tensor(&mut self, a: i64, x: TensorH) {
        assert_eq!(x.arity(), self.degree, "tensor arity must match the cobar degree");
        if x.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&a) {
            Some(prev) => &prev + &x,
            None => x,
        };
        if !sum.is_zero() {
            self.terms.insert(a, sum);
        }
    }

    /// The R-coefficient of a degree-0 element.
    pub fn to_r(&self) -> Option<RElem> {
        (self.degree == 0).then(|| {
            RElem::from_terms(
                self.terms
                    .iter()
                    .map(|(a, x)| (*a, x.as_scalar().unwrap_or_else(Int::zero))),
            )
        })
    }

    pub fn scale(&self, s: &Int) -> Self {
        let mut out = Self::zero(self.degree);
        for (a, x) in &self.terms {
            out.add_tensor(*a, x.scale(s));
        }
        out
    }

    fn map_terms(&self, degree: usize, f: impl Fn(i64, &TensorH) -> TensorH) -> Self {
        let mut out = Self::zero(degree);
        for (a, x) in &self.terms {
            out.add_tensor(*a, f(*a, x));
        }
        out
    }

    pub fn grading_degree(&self) -> GradingDegree {
        let mut keys = self.terms.keys();
        match (keys.next(), keys.next()) {
            (None, _) => GradingDegree::Zero,
            (Some(a), None) => GradingDegree::Degree(*a),
            _ => GradingDegree::Mixed,
        }
    }
}

pub fn grading_degree(x: &CobarElem) -> GradingDegree {
    x.grading_degree()
}

/// `eta_L(u^a) = u^a (x) 1`.
pub fn eta_l(r: &RElem) -> CobarElem {
    CobarElem::from_r(r, 1)
}

/// `eta_R(u^a) = u^a (x) t^a`.
pub fn eta_r(r: &RElem) -> CobarElem {
    let mut out = CobarElem::zero(1);
    for (a, c) in r.terms() {
        out.add_tensor(a, TensorH::from_helem(&HElem::t_pow(a)).scale(c));
    }
    out
}

/// `partial^i : C^n -> C^{n+1}`.
///
/// `partial^0` is `eta_R` on the R-factor, `partial^i` for `1 <= i <= n` is the
/// coproduct of the `i`-th H-factor, and `partial^{n+1}` appends `1`.
pub fn coface(i: usize, x: &CobarElem) -> Result<CobarElem> {
    let n = x.degree;
    if i > n + 1 {
        return Err(Error::FaceIndexOutOfRange { index: i, degree: n });
    }
    Ok(match i {
        0 => x.map_terms(n + 1, |a, t| TensorH::from_helem(&HElem::t_pow(a)).outer(t)),
        i if i == n + 1 => x.map_terms(n + 1, |_, t| t.insert_unit(n)),
        i => x.map_terms(n + 1, |_, t| t.apply_coproduct(i - 1)),
    })
}

/// `sigma^i : C^n -> C^{n-1}`, the counit on the `(i+1)`-th H-factor.
pub fn codegeneracy(i: usize, x: &CobarElem) -> Result<CobarElem> {
    let n = x.degree;
    if n == 0 || i >= n {
        return Err(Error::DegeneracyIndexOutOfRange { index: i, degree: n });
    }
    Ok(x.map_terms(n - 1, |_, t| t.apply_counit(i)))
}

/// `d = sum_i (-1)^i partial^i`.
pub fn cobar_differential(x: &CobarElem) -> CobarElem {
    let mut out = CobarElem::zero(x.degree + 1);
    for i in 0..=x.degree + 1 {
        let face = coface(i, x).expect("index in range");
        out = if i % 2 == 0 { &out + &face } else { &out - &face };
    }
    out
}

impl Add<&CobarElem> for &CobarElem {
    type Output = CobarElem;
    fn add(self, rhs: &CobarElem) -> CobarElem {
        assert_eq!(self.degree, rhs.degree, "cobar degree mismatch");
        let mut out = self.clone();
        for (a, x) in &rhs.terms {
            out.add_tensor(*a, x.clone());
        }
        out
    }
}

impl Neg for &CobarElem {
    type Output = CobarElem;
    fn neg(self) -> CobarElem {
        CobarElem {
            degree: self.degree,
            terms: self.terms.iter().map(|(a, x)| (*a, -x)).collect(),
        }
    }
}

impl Sub<&CobarElem> for &CobarElem {
    type Output = CobarElem;
    fn sub(self, rhs: &CobarElem) -> CobarElem {
        self + &(-rhs)
    }
}

impl fmt::Display for CobarElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (a, x)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            fmt_u_monomial(f, *a)?;
            if self.degree > 0 {
                write!(f, " ox [{x}]")?;
            } else if let Some(c) = x.as_scalar().filter(|c| *c != Int::from(1)) {
                write!(f, " * {c}")?;
            }
        }
        Ok(())
    }
}
