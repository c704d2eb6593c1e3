use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{Signed, Zero};

use super::tensor::TensorH;
use crate::arith::{divides_power_of, max_prime_exponent, Int, LaurentPoly, Rat};
use crate::error::{Error, Result};
use crate::numpoly::{from_monomial, to_monomial, NumPoly};

/// `t^{-shift} * num`, with `shift` minimal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HElem {
    shift: usize,
    num: NumPoly,
}

impl HElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_f(NumPoly::one())
    }

    pub fn from_f(f: NumPoly) -> Self {
        Self { shift: 0, num: f }
    }

    pub fn alpha(n: usize) -> Self {
        Self::from_f(NumPoly::alpha(n))
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        if k >= 0 {
            let mut f = NumPoly::one();
            for _ in 0..k {
                f = f.t_apply();
            }
            Self::from_f(f)
        } else {
            Self { shift: k.unsigned_abs() as usize, num: NumPoly::one() }
        }
    }

    pub fn new(shift: usize, num: NumPoly) -> Self {
        h_normalize(shift, num)
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn numerator(&self) -> &NumPoly {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value in `Q[t, 1/t]`.
    pub fn to_laurent(&self) -> LaurentPoly {
        to_monomial(&self.num).shift(-(self.shift as i64))
    }

    pub fn scale(&self, s: &Int) -> Self {
        h_normalize(self.shift, self.num.scale(s))
    }

    /// Numerator after raising the shift to `shift >= self.shift`.
    pub(crate) fn numerator_at(&self, shift: usize) -> NumPoly {
        debug_assert!(shift >= self.shift);
        let mut f = self.num.clone();
        for _ in self.shift..shift {
            f = f.t_apply();
        }
        f
    }

    pub fn to_tensor(&self) -> TensorH {
        TensorH::from_helem(self)
    }
}

/// Divides `f` by `t` while the shift allows it and the quotient stays in F.
pub fn h_normalize(mut shift: usize, mut f: NumPoly) -> HElem {
    if f.is_zero() {
        return HElem::zero();
    }
    while shift > 0 {
        match f.t_divide() {
            Some(g) => {
                f = g;
                shift -= 1;
            }
            None => break,
        }
    }
    HElem { shift, num: f }
}

pub fn h_mul(a: &HElem, b: &HElem) -> HElem {
    h_normalize(a.shift + b.shift, &a.num * &b.num)
}

/// Equality by cross-multiplication, `t^{j_b} f_a = t^{j_a} f_b`.
pub fn h_eq(a: &HElem, b: &HElem) -> bool {
    let s = a.shift.max(b.shift);
    a.numerator_at(s) == b.numerator_at(s)
}

/// Decides membership of a Laurent polynomial in H and returns its normal form.
///
/// With `m` clearing negative exponents and `nu` the largest prime exponent in
/// the coefficient denominators, `p` lies in H iff `t^{m+nu} p` is numerical.
pub fn h_from_laurent(p: &LaurentPoly) -> Result<HElem> {
    if p.is_zero() {
        return Ok(HElem::zero());
    }
    let m = (-p.min_exponent().unwrap_or(0)).max(0) as usize;
    let nu = p
        .terms()
        .map(|(_, c)| max_prime_exponent(c.denom()))
        .max()
        .unwrap_or(0) as usize;
    let shift = m + nu;
    let lifted = p.shift(shift as i64);
    match from_monomial(&lifted) {
        Ok(f) => Ok(h_normalize(shift, f)),
        Err(Error::NotNumerical { .. }) => Err(Error::NotInH),
        Err(e) => Err(Error::Invariant(format!("membership test failed: {e}"))),
    }
}

/// Checks `p(a)` lies in `Z[1/a]` for every `1 <= a <= bound`.
pub fn evaluation_criterion(p: &LaurentPoly, bound: u64) -> bool {
    (1..=bound).all(|a| {
        let v = p.eval_int(a as i64).expect("a >= 1");
        divides_power_of(v.denom(), &Int::from(a))
    })
}

/// `epsilon(t^{-j} f) = f(1)`.
pub fn counit(a: &HElem) -> Int {
    a.num.coeff(0) + a.num.coeff(1)
}

/// `c(t) = 1/t`, computed through the Laurent form.
pub fn antipode(a: &HElem) -> HElem {
    h_from_laurent(&a.to_laurent().invert_t())
        .expect("H is closed under t -> 1/t")
}

type CoproductCache = RwLock<HashMap<usize, Arc<Vec<(usize, usize, Int)>>>>;

fn coproduct_cache() -> &'static CoproductCache {
    static CACHE: OnceLock<CoproductCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Delta(alpha_n) = C(t1 t2, n)` expanded over `C(t1, a) C(t2, b)`, as
/// `(a, b, coefficient)` triples.
///
/// The coefficients are the double forward differences at the origin of the
/// grid `(x, y) -> C(xy, n)`, `0 <= x, y <= n`.
pub fn coproduct_alpha(n: usize) -> Arc<Vec<(usize, usize, Int)>> {
    if let Some(hit) = coproduct_cache().read().expect("cache lock").get(&n) {
        return hit.clone();
    }
    let size = n + 1;
    let mut grid: Vec<Vec<Int>> = (0..size)
        .map(|x| {
            (0..size)
                .map(|y| crate::arith::binomial(&Int::from(x * y), n))
                .collect()
        })
        .collect();
    // forward differences along x, then along y, in place
    for _ in 0..2 {
        for row in grid.iter_mut() {
            for level in 1..size {
                for k in (level..size).rev() {
                    let d = &row[k] - &row[k - 1];
                    row[k] = d;
                }
            }
        }
        grid = transpose(grid);
    }
    let mut out = Vec::new();
    for (a, row) in grid.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            if !c.is_zero() {
                out.push((a, b, c.clone()));
            }
        }
    }
    let out = Arc::new(out);
    coproduct_cache()
        .write()
        .expect("cache lock")
        .insert(n, out.clone());
    out
}

fn transpose(m: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    let n = m.len();
    (0..n).map(|j| (0..n).map(|i| m[i][j].clone()).collect()).collect()
}

/// `Delta(t^{-j} f) = (t^{-j} (x) t^{-j}) Delta(f)`, normalized.
pub fn coproduct(a: &HElem) -> TensorH {
    a.to_tensor().apply_coproduct(0)
}

impl Add<&HElem> for &HElem {
    type Output = HElem;
    fn add(self, rhs: &HElem) -> HElem {
        let s = self.shift.max(rhs.shift);
        h_normalize(s, &self.numerator_at(s) + &rhs.numerator_at(s))
    }
}

impl Sub<&HElem> for &HElem {
    type Output = HElem;
    fn sub(self, rhs: &HElem) -> HElem {
        self + &(-rhs)
    }
}

impl Neg for &HElem {
    type Output = HElem;
    fn neg(self) -> HElem {
        HElem { shift: self.shift, num: -&self.num }
    }
}

impl Mul<&HElem> for &HElem {
    type Output = HElem;
    fn mul(self, rhs: &HElem) -> HElem {
        h_mul(self, rhs)
    }
}

impl fmt::Display for HElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shift {
            0 => write!(f, "{}", self.num),
            j if self.num.len() == 1 && self.num.terms().all(|(_, c)| c.is_negative()) => {
                write!(f, "-t^-{j}*{}", -&self.num)
            }
            j if self.num.len() == 1 => write!(f, "t^-{j}*{}", self.num),
            j => write!(f, "t^-{j}*({})", self.num),
        }
    }
}

/// Rational scalar embedding, used by the rational sanity checks.
pub fn rational_value(a: &HElem, x: &Rat) -> Result<Rat> {
    a.to_laurent().eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn np(terms: &[(usize, i64)]) -> NumPoly {
        NumPoly::from_terms(terms.iter().map(|&(n, c)| (n, int(c))))
    }

    fn lp(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, n, d)| (e, rat(n, d))))
    }

    #[test]
    fn normal_forms() {
        assert_eq!(h_normalize(1, NumPoly::alpha(1)), HElem::one());
        let f = np(&[(3, 2), (4, -1)]);
        assert_eq!(h_normalize(0, f.clone()).numerator(), &f);
        assert_eq!(h_normalize(2, np(&[(1, 1), (2, 2)])), HElem::one());
        assert_eq!(h_normalize(3, NumPoly::zero()), HElem::zero());
    }

    #[test]
    fn products() {
        let inv_t = HElem::new(1, NumPoly::alpha(1));
        assert_eq!(h_mul(&inv_t, &inv_t), HElem::one());
        let a = HElem::new(1, NumPoly::alpha(2));
        assert_eq!(h_mul(&HElem::alpha(1), &a), HElem::alpha(2));
        assert_eq!(h_mul(&a, &HElem::one()), a);
    }

    #[test]
    fn equality() {
        let raw = HElem { shift: 1, num: NumPoly::alpha(1) };
        assert!(h_eq(&raw, &HElem::one()));
        assert!(!h_eq(&HElem::alpha(1), &HElem::alpha(2)));
        assert!(h_eq(&raw, &raw));
    }

    #[test]
    fn membership() {
        assert_eq!(h_from_laurent(&lp(&[(-1, 1, 1)])), Ok(HElem::t_pow(-1)));
        let h = h_from_laurent(&lp(&[(0, 1, 2), (1, -1, 2)])).unwrap();
        assert_eq!((h.shift(), h.numerator().clone()), (1, np(&[(2, -1)])));
        assert_eq!(h_from_laurent(&lp(&[(0, 1, 2)])), Err(Error::NotInH));
        assert_eq!(h_from_laurent(&LaurentPoly::zero()), Ok(HElem::zero()));
    }

    #[test]
    fn evaluation_criterion_examples() {
        assert!(evaluation_criterion(&lp(&[(-2, 1, 2), (-1, -1, 2)]), 20));
        assert!(!evaluation_criterion(&lp(&[(1, 1, 2)]), 3));
        assert!(evaluation_criterion(&to_monomial(&np(&[(4, 3), (7, -1)])), 30));
    }

    #[test]
    fn counit_values() {
        assert_eq!(counit(&HElem::alpha(1)), int(1));
        for n in 2..8 {
            assert_eq!(counit(&HElem::alpha(n)), int(0));
        }
        assert_eq!(counit(&HElem::one()), int(1));
        assert_eq!(counit(&HElem::t_pow(-3)), int(1));
    }

    #[test]
    fn antipode_values() {
        assert_eq!(antipode(&HElem::alpha(1)), HElem::t_pow(-1));
        assert_eq!(antipode(&HElem::one()), HElem::one());
        let c2 = antipode(&HElem::alpha(2));
        assert_eq!((c2.shift(), c2.numerator().clone()), (3, np(&[(2, -1)])));
    }

    #[test]
    fn coproduct_of_generators() {
        assert_eq!(coproduct_alpha(0).as_slice(), &[(0, 0, int(1))]);
        assert_eq!(coproduct_alpha(1).as_slice(), &[(1, 1, int(1))]);
        assert_eq!(
            coproduct_alpha(2).as_slice(),
            &[(1, 2, int(1)), (2, 1, int(1)), (2, 2, int(2))]
        );
    }

    #[test]
    fn t_powers() {
        assert_eq!(HElem::t_pow(2).numerator(), &np(&[(1, 1), (2, 2)]));
        assert_eq!(h_mul(&HElem::t_pow(3), &HElem::t_pow(-3)), HElem::one());
    }
}
