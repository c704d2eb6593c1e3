use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A residue modulo `q`, carrying its modulus alongside the value.
///
/// Binary operators panic when the moduli differ; use the `try_*` forms to
/// get an error instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: u64,
    modulus: u64,
}

impl ModInt {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 1 && modulus <= u32::MAX as u64, "modulus out of range");
        let v = value.rem_euclid(modulus as i64) as u64;
        Self { value: v, modulus }
    }

    pub fn from_u64(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 1 && modulus <= u32::MAX as u64, "modulus out of range");
        Self { value: value % modulus, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.modulus, other.modulus))
        }
    }

    pub fn try_add(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_u64(self.value + other.value, self.modulus))
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_u64(
            ((self.value as u128 * other.value as u128) % self.modulus as u128) as u64,
            self.modulus,
        ))
    }

    /// Multiplicative inverse, when the residue is a unit.
    pub fn inverse(self) -> Option<Self> {
        let (g, x) = ext_gcd(self.value as i64, self.modulus as i64);
        (g == 1).then(|| Self::new(x, self.modulus))
    }

    pub fn is_unit(self) -> bool {
        gcd(self.value, self.modulus) == 1
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::from_u64(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64) {
    let (mut r0, mut r1, mut s0, mut s1) = (a, b, 1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0, s0)
}

impl Add for ModInt {
    type Output = ModInt;
    fn add(self, rhs: ModInt) -> ModInt {
        self.try_add(rhs).expect("ModInt moduli differ")
    }
}

impl Sub for ModInt {
    type Output = ModInt;
    fn sub(self, rhs: ModInt) -> ModInt {
        self + (-rhs)
    }
}

impl Mul for ModInt {
    type Output = ModInt;
    fn mul(self, rhs: ModInt) -> ModInt {
        self.try_mul(rhs).expect("ModInt moduli differ")
    }
}

impl Neg for ModInt {
    type Output = ModInt;
    fn neg(self) -> ModInt {
        Self::from_u64(self.modulus - self.value, self.modulus)
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}
