use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::Int;

/// A Laurent polynomial in `u` with integer coefficients: an element of `R = Z[u, 1/u]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RElem {
    coeffs: BTreeMap<i64, Int>,
}

impl RElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Int::one())
    }

    pub fn u() -> Self {
        Self::u_pow(1)
    }

    pub fn u_pow(a: i64) -> Self {
        Self::monomial(a, Int::one())
    }

    pub fn monomial(a: i64, c: Int) -> Self {
        let mut r = Self::zero();
        r.add_term(a, c);
        r
    }

    pub fn constant(c: Int) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Int)>>(terms: I) -> Self {
        let mut r = Self::zero();
        for (a, c) in terms {
            r.add_term(a, c);
        }
        r
    }

    pub fn add_term(&mut self, a: i64, c: Int) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(a).or_insert_with(Int::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&a);
        }
    }

    pub fn coeff(&self, a: i64) -> Int {
        self.coeffs.get(&a).cloned().unwrap_or_else(Int::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Int)> + '_ {
        self.coeffs.iter().map(|(a, c)| (*a, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, s: &Int) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(a, c)| (*a, c * s)))
    }

    /// Multiplication by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(a, c)| (a + k, c.clone())).collect() }
    }

    /// The common `u`-exponent of a nonzero monomial.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        match self.coeffs.len() {
            1 => self.coeffs.keys().next().copied(),
            _ => None,
        }
    }
}

impl Add<&RElem> for &RElem {
    type Output = RElem;
    fn add(self, rhs: &RElem) -> RElem {
        let mut out = self.clone();
        for (a, c) in &rhs.coeffs {
            out.add_term(*a, c.clone());
        }
        out
    }
}

impl Sub<&RElem> for &RElem {
    type Output = RElem;
    fn sub(self, rhs: &RElem) -> RElem {
        self + &(-rhs)
    }
}

impl Neg for &RElem {
    type Output = RElem;
    fn neg(self) -> RElem {
        RElem { coeffs: self.coeffs.iter().map(|(a, c)| (*a, -c)).collect() }
    }
}

impl Mul<&RElem> for &RElem {
    type Output = RElem;
    fn mul(self, rhs: &RElem) -> RElem {
        let mut out = RElem::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

pub(crate) fn fmt_u_monomial(f: &mut fmt::Formatter<'_>, a: i64) -> fmt::Result {
    match a {
        0 => write!(f, "1"),
        1 => write!(f, "u"),
        a => write!(f, "u^{a}"),
    }
}

impl fmt::Display for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (a, c)) in self.coeffs.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}")?;
                if *a != 0 {
                    write!(f, "*")?;
                    fmt_u_monomial(f, *a)?;
                }
            } else {
                fmt_u_monomial(f, *a)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn arithmetic() {
        let r = &RElem::u() + &RElem::u_pow(-1);
        let sq = &r * &r;
        assert_eq!(sq, RElem::from_terms([(2, int(1)), (0, int(2)), (-2, int(1))]));
        assert!((&r - &r).is_zero());
        assert_eq!(sq.to_string(), "u^-2 + 2 + u^2");
    }
}
