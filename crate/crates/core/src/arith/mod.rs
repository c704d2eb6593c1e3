//! Exact scalar arithmetic and sparse polynomial containers.
//!
//! Integers are arbitrary precision ([`Int`]) and rationals are always kept in
//! lowest terms with a positive denominator ([`Rat`]). Every container prunes
//! zero coefficients after each operation, so structural equality is
//! mathematical equality.

mod lattice;
mod laurent;
mod modint;
mod multipoly;

pub use lattice::integer_kernel;
pub use laurent::LaurentPoly;
pub use modint::ModInt;
pub use multipoly::{Monomial, MultiPoly};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * Int::from(k))
}

/// `C(x, n)` for an integer `x` of either sign, via the falling factorial.
pub fn binomial(x: &Int, n: usize) -> Int {
    let mut num = Int::one();
    for i in 0..n {
        num *= x - Int::from(i);
    }
    num / factorial(n)
}

/// `C(x, n)` for a rational argument.
pub fn binomial_rat(x: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..n {
        acc *= x - Rat::from_integer(Int::from(i));
    }
    acc / Rat::from_integer(factorial(n))
}

/// Largest exponent of any prime dividing `n` (0 for `n = ±1`).
pub fn max_prime_exponent(n: &Int) -> u32 {
    let mut n = num_traits::Signed::abs(n);
    if n.is_zero() {
        return 0;
    }
    let mut best = 0;
    let mut p = Int::from(2u32);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        best = best.max(e);
        p += 1u32;
    }
    if n > Int::one() {
        best = best.max(1);
    }
    best
}

/// True when `den` divides some power of `a`.
pub fn divides_power_of(den: &Int, a: &Int) -> bool {
    use num_integer::Integer;
    let mut d = num_traits::Signed::abs(den);
    loop {
        if d.is_one() {
            return true;
        }
        let g = d.gcd(a);
        if g.is_one() {
            return false;
        }
        d /= g;
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The coefficient operations needed by generic containers such as
/// truncated formal group laws.
pub trait CoeffRing: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn from_int(n: &Int) -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;

    fn ring_sub(&self, other: &Self) -> Self {
        self.ring_add(&other.ring_neg())
    }

    fn ring_scale(&self, n: &Int) -> Self {
        self.ring_mul(&Self::from_int(n))
    }
}

impl CoeffRing for Int {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn from_int(n: &Int) -> Self {
        n.clone()
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}

impl CoeffRing for MultiPoly {
    fn ring_zero() -> Self {
        MultiPoly::zero()
    }
    fn ring_one() -> Self {
        MultiPoly::one()
    }
    fn from_int(n: &Int) -> Self {
        MultiPoly::constant(n.clone())
    }
    fn ring_is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_of_negative_arguments() {
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&int(-1), 3), int(-1));
        assert_eq!(binomial(&int(3), 5), int(0));
    }

    #[test]
    fn prime_exponents() {
        assert_eq!(max_prime_exponent(&int(1)), 0);
        assert_eq!(max_prime_exponent(&int(24)), 3);
        assert_eq!(max_prime_exponent(&factorial(8)), 7);
        assert_eq!(max_prime_exponent(&int(97)), 1);
    }

    #[test]
    fn power_divisibility() {
        assert!(divides_power_of(&int(8), &int(6)));
        assert!(!divides_power_of(&int(2), &int(3)));
        assert!(divides_power_of(&int(1), &int(7)));
    }

    #[test]
    fn rationals_stay_reduced() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &int(-3));
        assert_eq!(r.denom(), &int(2));
    }
}
