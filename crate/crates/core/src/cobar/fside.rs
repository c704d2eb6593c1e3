use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::numpoly::{alpha_product, NumPoly};

/// An element of `F^{(x)n+1}`, the `n`-th term of the standard cosimplicial ring on F.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FCosimplexElem {
    degree: usize,
    terms: BTreeMap<Vec<usize>, Int>,
}

impl FCosimplexElem {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    /// `f_0 (x) ... (x) f_n`, of degree `factors.len() - 1`.
    pub fn from_factors(factors: &[NumPoly]) -> Self {
        assert!(!factors.is_empty(), "at least one factor");
        let mut acc: Vec<(Vec<usize>, Int)> = vec![(Vec::new(), Int::one())];
        for f in factors {
            acc = acc
                .into_iter()
                .flat_map(|(idx, c)| {
                    f.terms().map(move |(n, d)| {
                        let mut idx = idx.clone();
                        idx.push(n);
                        (idx, &c * d)
                    })
                })
                .collect();
        }
        let mut out = Self::zero(factors.len() - 1);
        for (idx, c) in acc {
            out.add_term(idx, c);
        }
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<usize>, Int)>>(degree: usize, terms: I) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (idx, c) in terms {
            if idx.len() != degree + 1 {
                return Err(Error::DegreeMismatch { expected: degree + 1, found: idx.len() });
            }
            out.add_term(idx, c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Int)> + '_ {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: Int) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(idx.clone()).or_insert_with(Int::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&idx);
        }
    }

    /// The single factor of a degree-0 element.
    pub fn to_numpoly(&self) -> Option<NumPoly> {
        (self.degree == 0).then(|| NumPoly::from_terms(self.terms.iter().map(|(k, c)| (k[0], c.clone()))))
    }
}

/// Inserts `alpha_0 = 1` at position `i`.
pub fn f_coface(i: usize, x: &FCosimplexElem) -> Result<FCosimplexElem> {
    if i > x.degree + 1 {
        return Err(Error::FaceIndexOutOfRange { index: i, degree: x.degree });
    }
    let mut out = FCosimplexElem::zero(x.degree + 1);
    for (k, c) in &x.terms {
        let mut idx = k.clone();
        idx.insert(i, 0);
        out.terms.insert(idx, c.clone());
    }
    Ok(out)
}

/// Multiplies factors `i` and `i + 1` (0-based).
pub fn f_codegeneracy(i: usize, x: &FCosimplexElem) -> Result<FCosimplexElem> {
    if x.degree == 0 || i >= x.degree {
        return Err(Error::DegeneracyIndexOutOfRange { index: i, degree: x.degree });
    }
    let mut out = FCosimplexElem::zero(x.degree - 1);
    for (k, c) in &x.terms {
        for (m, d) in alpha_product(k[i], k[i + 1]) {
            let mut idx = k.clone();
            idx.remove(i + 1);
            idx[i] = m;
            out.add_term(idx, c * d);
        }
    }
    Ok(out)
}

impl Add<&FCosimplexElem> for &FCosimplexElem {
    type Output = FCosimplexElem;
    fn add(self, rhs: &FCosimplexElem) -> FCosimplexElem {
        assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Neg for &FCosimplexElem {
    type Output = FCosimplexElem;
    fn neg(self) -> FCosimplexElem {
        FCosimplexElem {
            degree: self.degree,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Sub<&FCosimplexElem> for &FCosimplexElem {
    type Output = FCosimplexElem;
    fn sub(self, rhs: &FCosimplexElem) -> FCosimplexElem {
        self + &(-rhs)
    }
}

impl fmt::Display for FCosimplexElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let body: Vec<String> = k.iter().map(|m| format!("a({m})")).collect();
            write!(f, "{}", body.join(" ox "))?;
        }
        Ok(())
    }
}
