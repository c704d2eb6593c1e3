use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{CoeffRing, Int, MultiPoly};
use crate::cobar::RElem;
use crate::error::{Error, Result};
use crate::numpoly::multinomial;
use crate::report::Report;

impl CoeffRing for RElem {
    fn ring_zero() -> Self {
        RElem::zero()
    }
    fn ring_one() -> Self {
        RElem::one()
    }
    fn from_int(n: &Int) -> Self {
        RElem::constant(n.clone())
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
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

/// `mu(x, y) = x + y + sum a_{ij} x^i y^j`, kept up to total degree `D`.
#[derive(Clone, Debug, PartialEq)]
pub struct Fgl<C: CoeffRing> {
    degree: usize,
    coeffs: BTreeMap<(usize, usize), C>,
    symmetric: bool,
    exact: bool,
}

impl<C: CoeffRing> Fgl<C> {
    /// A law from its coefficients `a_{ij}`, `i, j >= 1`, `i + j <= degree`.
    ///
    /// `exact` declares that every coefficient beyond `degree` vanishes.
    pub fn new(degree: usize, coeffs: BTreeMap<(usize, usize), C>, exact: bool) -> Result<Self> {
        for &(i, j) in coeffs.keys() {
            if i == 0 || j == 0 || i + j > degree {
                return Err(Error::InvalidArgument(format!("coefficient a_{{{i},{j}}} outside the law")));
            }
        }
        let coeffs: BTreeMap<_, _> = coeffs.into_iter().filter(|(_, c)| !c.ring_is_zero()).collect();
        let symmetric = coeffs
            .iter()
            .all(|(&(i, j), c)| coeffs.get(&(j, i)).is_some_and(|d| d == c));
        Ok(Self { degree, coeffs, symmetric, exact })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Coefficient of `x^i y^j` in `mu`, including the linear terms.
    pub fn coeff(&self, i: usize, j: usize) -> C {
        match (i, j) {
            (1, 0) | (0, 1) => C::ring_one(),
            _ => self.coeffs.get(&(i, j)).cloned().unwrap_or_else(C::ring_zero),
        }
    }

    /// `a_{1,c}` with `a_{1,0} = 1` and `a_{1,c} = 0` for `c < 0`.
    pub fn a1(&self, c: i64) -> C {
        if c < 0 {
            C::ring_zero()
        } else {
            self.coeff(1, c as usize)
        }
    }

    fn dense(&self, imax: usize, jmax: usize) -> Vec<Vec<C>> {
        let mut m = vec![vec![C::ring_zero(); jmax + 1]; imax + 1];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                if i + j <= self.degree {
                    *c = self.coeff(i, j);
                }
            }
        }
        m
    }

    /// `mu^k` with `x`-degree at most `imax` and `y`-degree at most `jmax`.
    ///
    /// Entries with `i + j + 1 - k > D` are only reliable for exact laws.
    pub fn power_table(&self, k: usize, imax: usize, jmax: usize) -> Vec<Vec<C>> {
        let mu = self.dense(imax, jmax);
        let mut acc = vec![vec![C::ring_zero(); jmax + 1]; imax + 1];
        acc[0][0] = C::ring_one();
        for _ in 0..k {
            let mut next = vec![vec![C::ring_zero(); jmax + 1]; imax + 1];
            for (i1, row) in acc.iter().enumerate() {
                for (j1, a) in row.iter().enumerate() {
                    if a.ring_is_zero() {
                        continue;
                    }
                    for (i2, mrow) in mu.iter().enumerate().take(imax + 1 - i1) {
                        for (j2, b) in mrow.iter().enumerate().take(jmax + 1 - j1) {
                            if !b.ring_is_zero() {
                                let cell = &mut next[i1 + i2][j1 + j2];
                                *cell = cell.ring_add(&a.ring_mul(b));
                            }
                        }
                    }
                }
            }
            acc = next;
        }
        acc
    }
}

impl<C: CoeffRing + fmt::Display> fmt::Display for Fgl<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x + y")?;
        for ((i, j), c) in &self.coeffs {
            write!(f, " + ({c})*x^{i}*y^{j}")?;
        }
        write!(f, " + O({})", self.degree + 1)
    }
}

/// `x + y + u x y`.
pub fn mult_law(degree: usize) -> Fgl<RElem> {
    let mut coeffs = BTreeMap::new();
    if degree >= 2 {
        coeffs.insert((1, 1), RElem::u());
    }
    Fgl::new(degree, coeffs, true).expect("(1,1) lies inside the law")
}

/// Name of the symbol standing for `a_{ij} = a_{ji}`.
pub fn symbol(i: usize, j: usize) -> String {
    let (lo, hi) = (i.min(j), i.max(j));
    format!("a_{lo}_{hi}")
}

/// The symmetric law with independent symbols `a_{ij}`, `i + j <= D`.
pub fn generic_law(degree: usize) -> Fgl<MultiPoly> {
    let mut coeffs = BTreeMap::new();
    for i in 1..degree {
        for j in 1..=degree - i {
            coeffs.insert((i, j), MultiPoly::var(&symbol(i, j)));
        }
    }
    Fgl::new(degree, coeffs, false).expect("indices inside the law")
}

/// Coefficient of `x^i y^j` in `mu(x, y)^k`.
pub fn power_coeff<C: CoeffRing>(f: &Fgl<C>, k: usize, i: usize, j: usize) -> Result<C> {
    if k > 0 && !f.exact && i + j + 1 > f.degree + k {
        return Err(Error::TruncationExceeded { i, j, degree: f.degree });
    }
    let table = f.power_table(k, i, j);
    Ok(table[i][j].clone())
}

/// `multinomial(k; k-i, k-j, i+j-k) u^{i+j-k}`.
pub fn mult_coeff_closed_form(k: usize, i: usize, j: usize) -> RElem {
    let (k, i, j) = (k as i64, i as i64, j as i64);
    let c = multinomial(k, k - i, k - j, i + j - k).expect("parts sum to k");
    RElem::monomial(i + j - k, c)
}

/// Checks `a_{1j}^k = k a_{1,1+j-k}` on the generic law for `1 <= k <= j+1 <= D`.
pub fn adams_a1jk_check(degree: usize) -> Result<Report> {
    if !(2..=8).contains(&degree) {
        return Err(Error::InvalidArgument(format!("degree {degree} outside 2..=8")));
    }
    let f = generic_law(degree);
    let mut report = Report::new("adams_a1jk");
    report.fact("degree", degree);
    for k in 1..=degree {
        let table = f.power_table(k, 1, degree - 1);
        for (j, lhs) in table[1].iter().enumerate().skip(k.saturating_sub(1)) {
            let rhs = f.a1(1 + j as i64 - k as i64).scale(&Int::from(k));
            let diff = lhs - &rhs;
            let subject = format!("k={k} j={j}");
            if diff.is_zero() {
                report.check("a1jk", subject, true);
            } else {
                report.check_with("a1jk", subject, false, format!("difference {diff}"));
            }
        }
    }
    Ok(report)
}
