use std::fmt;

use crate::arith::ModInt;
use crate::error::{Error, Result};

/// A dense matrix over `Z/q`. Column `j` holds the image of the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModMatrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Square matrices acting on `(Z/q)^d`.
pub type EndoMap = ModMatrix;

impl ModMatrix {
    pub fn zero(modulus: u64, rows: usize, cols: usize) -> Self {
        Self { modulus, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(modulus: u64, n: usize) -> Self {
        let mut m = Self::zero(modulus, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from a list of column vectors with signed entries.
    pub fn from_columns(modulus: u64, rows: usize, columns: &[Vec<i64>]) -> Self {
        let mut m = Self::zero(modulus, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has the wrong length");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, ModInt::new(*v, modulus).value());
            }
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.modulus;
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn from_u64_columns(modulus: u64, rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zero(modulus, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, *v);
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| *v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch(self.modulus, rhs.modulus));
        }
        if self.cols != rhs.rows {
            return Err(Error::DegreeMismatch { expected: self.cols, found: rhs.rows });
        }
        let q = u128::from(self.modulus);
        let mut out = Self::zero(self.modulus, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = u128::from(self.get(i, k));
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = ((u128::from(out.data[idx]) + a * u128::from(rhs.get(k, j))) % q) as u64;
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let q = u128::from(self.modulus);
        (0..self.rows)
            .map(|i| {
                let s: u128 = (0..self.cols)
                    .map(|j| u128::from(self.get(i, j)) * u128::from(v[j]) % q)
                    .sum();
                (s % q) as u64
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.modulus, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("square");
            }
            base = base.try_mul(&base).expect("square");
            e >>= 1;
        }
        acc
    }

    /// Rows `sel` of the matrix.
    pub fn select_rows(&self, sel: &[usize]) -> Self {
        let mut out = Self::zero(self.modulus, sel.len(), self.cols);
        for (r, &i) in sel.iter().enumerate() {
            for j in 0..self.cols {
                out.set(r, j, self.get(i, j));
            }
        }
        out
    }

    /// Sub-block `rows x cols` starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zero(self.modulus, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r0 + i, c0 + j));
            }
        }
        out
    }

    /// Inverse over `Z/q` by unit-pivot elimination, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let q = self.modulus;
        let mut a = self.clone();
        let mut inv = Self::identity(q, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| ModInt::from_u64(a.get(r, col), q).is_unit())?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = ModInt::from_u64(a.get(col, col), q).inverse()?.value();
            a.scale_row(col, p);
            inv.scale_row(col, p);
            for r in 0..n {
                if r != col {
                    let f = a.get(r, col);
                    if f != 0 {
                        a.add_row_multiple(r, col, q - f);
                        inv.add_row_multiple(r, col, q - f);
                    }
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: u64) {
        let q = u128::from(self.modulus);
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.data[idx] = (u128::from(self.data[idx]) * u128::from(s) % q) as u64;
        }
    }

    /// `row[dst] += s * row[src]`.
    fn add_row_multiple(&mut self, dst: usize, src: usize, s: u64) {
        let q = u128::from(self.modulus);
        for j in 0..self.cols {
            let v = u128::from(self.get(src, j)) * u128::from(s);
            let idx = dst * self.cols + j;
            self.data[idx] = ((u128::from(self.data[idx]) + v) % q) as u64;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, s: u64) {
        let q = u128::from(self.modulus);
        for i in 0..self.rows {
            let v = u128::from(self.get(i, src)) * u128::from(s);
            let idx = i * self.cols + dst;
            self.data[idx] = ((u128::from(self.data[idx]) + v) % q) as u64;
        }
    }

    /// Diagonal valuations `v_i < nu` of a Smith form over `Z/l^nu`.
    ///
    /// The column span is isomorphic to `(+) Z/l^{nu - v_i}`.
    pub fn smith_valuations(&self, l: u64, nu: u32) -> Vec<u32> {
        let mut a = self.clone();
        let mut out = Vec::new();
        let mut top = 0;
        while top < a.rows.min(a.cols) {
            let mut best: Option<(u32, usize, usize)> = None;
            for i in top..a.rows {
                for j in top..a.cols {
                    let v = valuation(a.get(i, j), l, nu);
                    if v < nu && best.is_none_or(|(b, _, _)| v < b) {
                        best = Some((v, i, j));
                    }
                }
            }
            let Some((v, i, j)) = best else { break };
            a.swap_rows(top, i);
            a.swap_cols(top, j);
            let q = a.modulus;
            let unit = a.get(top, top) / l.pow(v);
            let uinv = ModInt::from_u64(unit, q).inverse().expect("unit part").value();
            a.scale_row(top, uinv);
            for r in top + 1..a.rows {
                let f = a.get(r, top);
                if f != 0 {
                    a.add_row_multiple(r, top, q - f / l.pow(v));
                }
            }
            for c in top + 1..a.cols {
                let f = a.get(top, c);
                if f != 0 {
                    a.add_col_multiple(c, top, q - f / l.pow(v));
                }
            }
            out.push(v);
            top += 1;
        }
        out
    }

    /// `log_l` of the size of the column span.
    pub fn image_log_size(&self, l: u64, nu: u32) -> u32 {
        self.smith_valuations(l, nu).iter().map(|v| nu - v).sum()
    }
}

/// `l`-adic valuation of `x` in `Z/l^nu`, with `v(0) = nu`.
pub fn valuation(mut x: u64, l: u64, nu: u32) -> u32 {
    if x == 0 {
        return nu;
    }
    let mut v = 0;
    while x.is_multiple_of(l) && v < nu {
        x /= l;
        v += 1;
    }
    v
}

/// Splits `q = l^nu` with `l` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let l = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut nu = 0;
    while rest.is_multiple_of(l) {
        rest /= l;
        nu += 1;
    }
    (rest == 1).then_some((l, nu))
}

/// Rank over `F_l` of the reductions of `vectors`, together with the indices
/// of a maximal independent subfamily (chosen greedily in order).
pub fn independent_mod_l(vectors: &[Vec<u64>], l: u64) -> Vec<usize> {
    let mut echelon: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w: Vec<u64> = v.iter().map(|x| x % l).collect();
        for (p, row) in &echelon {
            let f = w[*p];
            if f != 0 {
                for (a, b) in w.iter_mut().zip(row) {
                    *a = (*a + (l - f) * b) % l;
                }
            }
        }
        if let Some(p) = w.iter().position(|x| *x != 0) {
            let inv = ModInt::from_u64(w[p], l).inverse().expect("field").value();
            w.iter_mut().for_each(|x| *x = *x * inv % l);
            for (_, row) in echelon.iter_mut() {
                let f = row[p];
                if f != 0 {
                    for (a, b) in row.iter_mut().zip(&w) {
                        *a = (*a + (l - f) * b) % l;
                    }
                }
            }
            echelon.push((p, w));
            chosen.push(idx);
        }
    }
    chosen
}

impl fmt::Display for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        write!(f, "(mod {})", self.modulus)
    }
}
