use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};

use super::law::Fgl;
use crate::arith::{CoeffRing, Int};
use crate::cobar::RElem;
use crate::numpoly::NumPoly;

/// Marker for the basis `beta_n = u^n alpha_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Beta;

/// Marker for the basis `alpha_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alpha;

pub trait BasisName {
    const SYMBOL: &'static str;
}

impl BasisName for Beta {
    const SYMBOL: &'static str = "b";
}

impl BasisName for Alpha {
    const SYMBOL: &'static str = "a";
}

/// A finite R-linear combination `sum c_n e_n` of basis vectors.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct RCombination<B> {
    coeffs: BTreeMap<usize, RElem>,
    basis: PhantomData<B>,
}

pub type BetaVec = RCombination<Beta>;
pub type AlphaVec = RCombination<Alpha>;

impl<B> Clone for RCombination<B> {
    fn clone(&self) -> Self {
        Self { coeffs: self.coeffs.clone(), basis: PhantomData }
    }
}

impl<B> Default for RCombination<B> {
    fn default() -> Self {
        Self { coeffs: BTreeMap::new(), basis: PhantomData }
    }
}

impl<B> RCombination<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `e_n`.
    pub fn basis(n: usize) -> Self {
        Self::term(n, RElem::one())
    }

    pub fn term(n: usize, c: RElem) -> Self {
        let mut out = Self::zero();
        out.add_term(n, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, RElem)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (n, c) in terms {
            out.add_term(n, c);
        }
        out
    }

    pub fn add_term(&mut self, n: usize, c: RElem) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&n) {
            Some(prev) => &prev + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(n, sum);
        }
    }

    pub fn coeff(&self, n: usize) -> RElem {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &RElem)> + '_ {
        self.coeffs.iter().map(|(n, c)| (*n, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, r: &RElem) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(n, c)| (*n, c * r)))
    }
}

impl AlphaVec {
    /// Writes `self` as `u^a * f` with `f` in F, when every coefficient is an
    /// integer multiple of the same power of `u`.
    pub fn factor(&self) -> Option<(i64, NumPoly)> {
        let mut exp = None;
        let mut f = NumPoly::zero();
        for (n, c) in &self.coeffs {
            let a = c.homogeneous_degree()?;
            if *exp.get_or_insert(a) != a {
                return None;
            }
            f.add_term(*n, c.coeff(a));
        }
        Some((exp.unwrap_or(0), f))
    }

    pub fn from_numpoly(a: i64, f: &NumPoly) -> Self {
        Self::from_terms(f.terms().map(|(n, c)| (n, RElem::monomial(a, c.clone()))))
    }
}

/// `beta_n = u^n alpha_n`.
pub fn beta_to_alpha(x: &BetaVec) -> AlphaVec {
    AlphaVec::from_terms(x.terms().map(|(n, c)| (n, c.shift(n as i64))))
}

pub fn alpha_to_beta(x: &AlphaVec) -> BetaVec {
    BetaVec::from_terms(x.terms().map(|(n, c)| (n, c.shift(-(n as i64)))))
}

/// `b(beta_n) = n u beta_n + (n+1) beta_{n+1}`.
pub fn b_operator(x: &BetaVec) -> BetaVec {
    let mut out = BetaVec::zero();
    for (n, c) in x.terms() {
        out.add_term(n, c.shift(1).scale(&Int::from(n)));
        out.add_term(n + 1, c.scale(&Int::from(n + 1)));
    }
    out
}

/// `k a_{1,1+j-k}`: the coefficient of `beta_k` in `b(beta_j)` for the law `f`.
pub fn b_matrix_entry<C: CoeffRing>(j: usize, k: usize, f: &Fgl<C>) -> C {
    f.a1(1 + j as i64 - k as i64).ring_scale(&Int::from(k))
}

impl<B> Add<&RCombination<B>> for &RCombination<B> {
    type Output = RCombination<B>;
    fn add(self, rhs: &RCombination<B>) -> RCombination<B> {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.add_term(*n, c.clone());
        }
        out
    }
}

impl<B> Neg for &RCombination<B> {
    type Output = RCombination<B>;
    fn neg(self) -> RCombination<B> {
        RCombination::from_terms(self.coeffs.iter().map(|(n, c)| (*n, -c)))
    }
}

impl<B> Sub<&RCombination<B>> for &RCombination<B> {
    type Output = RCombination<B>;
    fn sub(self, rhs: &RCombination<B>) -> RCombination<B> {
        self + &(-rhs)
    }
}

impl<B: BasisName> fmt::Display for RCombination<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (n, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c == RElem::one() {
                write!(f, "{}({n})", B::SYMBOL)?;
            } else {
                write!(f, "({c})*{}({n})", B::SYMBOL)?;
            }
        }
        Ok(())
    }
}
