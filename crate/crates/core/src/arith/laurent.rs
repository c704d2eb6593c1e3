use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Int, Rat};
use crate::error::{Error, Result};

/// A Laurent polynomial in `t` with rational coefficients.
///
/// Invariant: no stored coefficient is zero; the empty map is the zero
/// polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rat::one(), 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rat, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c * t^exp` in place, pruning a cancelled coefficient.
    pub fn add_term(&mut self, exp: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
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

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// The substitution `t -> 1/t`.
    pub fn invert_t(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        if x.is_zero() && self.min_exponent().is_some_and(|e| e < 0) {
            return Err(Error::DivisionByZero);
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.coeffs {
            let pow = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow(x.recip(), e.unsigned_abs() as usize)
            };
            acc += c * pow;
        }
        Ok(acc)
    }

    pub fn eval_int(&self, x: i64) -> Result<Rat> {
        self.eval(&Rat::from_integer(Int::from(x)))
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> Int {
        use num_integer::Integer;
        self.coeffs
            .values()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                _ if unit => write!(f, "t^{e}")?,
                _ => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn poly(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, n, d)| (e, rat(n, d))))
    }

    #[test]
    fn difference_of_squares() {
        let a = poly(&[(1, 1, 1), (0, 1, 1)]);
        let b = poly(&[(1, 1, 1), (0, -1, 1)]);
        assert_eq!(&a * &b, poly(&[(2, 1, 1), (0, -1, 1)]));
    }

    #[test]
    fn inverse_pair_and_annihilator() {
        let t = LaurentPoly::t();
        assert_eq!(&t.invert_t() * &t, LaurentPoly::one());
        assert!((&LaurentPoly::zero() * &t).is_zero());
    }

    #[test]
    fn invert_t_is_an_involution() {
        let p = poly(&[(0, 3, 1), (1, 1, 1)]);
        assert_eq!(p.invert_t(), poly(&[(0, 3, 1), (-1, 1, 1)]));
        assert_eq!(p.invert_t().invert_t(), p);
        assert_eq!(poly(&[(2, 1, 1)]).invert_t(), poly(&[(-2, 1, 1)]));
    }

    #[test]
    fn evaluation() {
        let c2 = poly(&[(2, 1, 2), (1, -1, 2)]);
        assert_eq!(c2.eval_int(5).unwrap(), rat(10, 1));
        let inv = poly(&[(-1, 1, 1)]);
        assert_eq!(inv.eval_int(2).unwrap(), rat(1, 2));
        assert_eq!(inv.eval_int(0), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[(2, 1, 2), (1, -1, 2)]).to_string(), "1/2*t^2 - 1/2*t");
        assert_eq!(poly(&[(-1, -1, 1), (0, 3, 1)]).to_string(), "3 - t^-1");
    }
}
