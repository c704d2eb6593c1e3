//! The ring F of numerical polynomials, stored in the binomial basis
//! `alpha_n = C(t, n)`.
//!
//! Products use the subset-counting structure constants
//! `alpha_i * alpha_j = sum_k k!/((k-i)!(k-j)!(i+j-k)!) alpha_k`. Conversion to
//! and from the monomial basis goes through forward finite differences at 0.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, binomial_rat, factorial, Int, LaurentPoly, Rat};
use crate::error::{Error, Result};

/// An element `sum c_n alpha_n` of F with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumPoly {
    coeffs: BTreeMap<usize, Int>,
}

impl NumPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `alpha_0 = 1`.
    pub fn one() -> Self {
        Self::alpha(0)
    }

    pub fn alpha(n: usize) -> Self {
        Self::term(n, Int::one())
    }

    pub fn term(n: usize, c: Int) -> Self {
        let mut p = Self::zero();
        p.add_term(n, c);
        p
    }

    /// The element `t = alpha_1`.
    pub fn t() -> Self {
        Self::alpha(1)
    }

    pub fn constant(c: Int) -> Self {
        Self::term(0, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Int)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (n, c) in terms {
            p.add_term(n, c);
        }
        p
    }

    pub fn add_term(&mut self, n: usize, c: Int) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(n).or_insert_with(Int::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub fn coeff(&self, n: usize) -> Int {
        self.coeffs.get(&n).cloned().unwrap_or_else(Int::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Int)> + '_ {
        self.coeffs.iter().map(|(n, c)| (*n, c))
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

    /// Largest `n` with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn scale(&self, s: &Int) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(n, c)| (*n, c * s)).collect(),
        }
    }

    /// Coefficients reduced into `[0, q)`, zeros pruned.
    pub fn reduce_mod(&self, q: &Int) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(n, c)| (*n, c.mod_floor(q))))
    }

    /// Multiplication by `t`, basis-wise: `T(alpha_n) = n alpha_n + (n+1) alpha_{n+1}`.
    pub fn t_apply(&self) -> Self {
        let mut out = Self::zero();
        for (n, c) in &self.coeffs {
            out.add_term(*n, c * Int::from(*n));
            out.add_term(n + 1, c * Int::from(n + 1));
        }
        out
    }

    /// Exact division by `t` inside F, when possible.
    ///
    /// `f = t g` with `g` in F iff `f(0) = 0` and `n | c_n` for every `n >= 1`;
    /// each term then divides as `t^{-1} (n alpha_n) = sum_{m<n} (-1)^{n-1-m} alpha_m`.
    pub fn t_divide(&self) -> Option<Self> {
        let mut out = Self::zero();
        for (n, c) in &self.coeffs {
            if *n == 0 {
                return None;
            }
            let (q, r) = c.div_rem(&Int::from(*n));
            if !r.is_zero() {
                return None;
            }
            for m in 0..*n {
                let sign = if (n - 1 - m) % 2 == 0 { q.clone() } else { -q.clone() };
                out.add_term(m, sign);
            }
        }
        Some(out)
    }

    /// Evaluation at an integer; negative arguments go through the monomial form.
    pub fn eval_at(&self, x: i64) -> Int {
        if x >= 0 {
            let x = Int::from(x);
            self.coeffs
                .iter()
                .map(|(n, c)| c * binomial(&x, *n))
                .sum()
        } else {
            let v = to_monomial(self)
                .eval_int(x)
                .expect("polynomials have no poles");
            debug_assert!(v.is_integer());
            v.to_integer()
        }
    }

    pub fn to_monomial(&self) -> LaurentPoly {
        to_monomial(self)
    }
}

/// `k! / (a! b! c!)`, zero when a part is negative.
pub fn multinomial(k: i64, a: i64, b: i64, c: i64) -> Result<Int> {
    if a + b + c != k {
        return Err(Error::PartitionMismatch { k, a, b, c });
    }
    if a < 0 || b < 0 || c < 0 {
        return Ok(Int::zero());
    }
    Ok(factorial(k as usize) / (factorial(a as usize) * factorial(b as usize) * factorial(c as usize)))
}

/// Structure constants of `alpha_i * alpha_j` as `(k, coefficient)` pairs.
pub fn alpha_product(i: usize, j: usize) -> Vec<(usize, Int)> {
    (i.max(j)..=i + j)
        .map(|k| {
            let (k, i, j) = (k as i64, i as i64, j as i64);
            let c = multinomial(k, k - i, k - j, i + j - k).expect("parts sum to k");
            (k as usize, c)
        })
        .collect()
}

pub fn alpha_mul(a: &NumPoly, b: &NumPoly) -> NumPoly {
    let mut out = NumPoly::zero();
    for (i, ca) in &a.coeffs {
        for (j, cb) in &b.coeffs {
            let c = ca * cb;
            for (k, s) in alpha_product(*i, *j) {
                out.add_term(k, &c * s);
            }
        }
    }
    out
}

/// Coefficients of the falling factorial `t (t-1) ... (t-n+1)`, lowest degree first.
pub(crate) fn falling_factorial(n: usize) -> Vec<Int> {
    let mut poly = vec![Int::one()];
    for i in 0..n {
        let mut next = vec![Int::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * Int::from(i);
        }
        poly = next;
    }
    poly
}

pub fn to_monomial(a: &NumPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (n, c) in &a.coeffs {
        let den = factorial(*n);
        for (d, f) in falling_factorial(*n).into_iter().enumerate() {
            out.add_term(d as i64, Rat::new(c * f, den.clone()));
        }
    }
    out
}

/// Re-expands a polynomial in the binomial basis; succeeds iff it is numerical.
pub fn from_monomial(p: &LaurentPoly) -> Result<NumPoly> {
    if let Some(e) = p.min_exponent().filter(|e| *e < 0) {
        return Err(Error::NegativeExponent(e));
    }
    let Some(deg) = p.max_exponent() else {
        return Ok(NumPoly::zero());
    };
    let mut diffs: Vec<Rat> = (0..=deg)
        .map(|x| p.eval_int(x).expect("no negative exponents"))
        .collect();
    let mut out = NumPoly::zero();
    for n in 0..=deg as usize {
        let c = &diffs[0];
        if !c.is_integer() {
            return Err(Error::NotNumerical { index: n, value: c.to_string() });
        }
        out.add_term(n, c.to_integer());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Ok(out)
}

pub fn is_numerical(p: &LaurentPoly) -> bool {
    from_monomial(p).is_ok()
}

/// `lambda^n(a) = C(a, n)`, computed in `Q[t]` and re-expanded.
pub fn lambda_op(a: &NumPoly, n: usize) -> NumPoly {
    let p = to_monomial(a);
    let mut acc = LaurentPoly::one();
    for i in 0..n {
        acc = &acc * &(&p - &LaurentPoly::constant(Rat::from_integer(Int::from(i))));
    }
    let acc = acc.scale(&Rat::new(Int::one(), factorial(n)));
    from_monomial(&acc).expect("F is closed under the binomial operations")
}

/// `C(x, n)` at an arbitrary rational point, exposed for cross-checks.
pub fn binomial_at(x: &Rat, n: usize) -> Rat {
    binomial_rat(x, n)
}

impl Add<&NumPoly> for &NumPoly {
    type Output = NumPoly;
    fn add(self, rhs: &NumPoly) -> NumPoly {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.add_term(*n, c.clone());
        }
        out
    }
}

impl Sub<&NumPoly> for &NumPoly {
    type Output = NumPoly;
    fn sub(self, rhs: &NumPoly) -> NumPoly {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.add_term(*n, -c.clone());
        }
        out
    }
}

impl Mul<&NumPoly> for &NumPoly {
    type Output = NumPoly;
    fn mul(self, rhs: &NumPoly) -> NumPoly {
        alpha_mul(self, rhs)
    }
}

impl Neg for &NumPoly {
    type Output = NumPoly;
    fn neg(self) -> NumPoly {
        self.scale(&-Int::one())
    }
}

impl fmt::Display for NumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (n, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "a({n})")?;
            } else {
                write!(f, "{mag}*a({n})")?;
            }
        }
        Ok(())
    }
}
