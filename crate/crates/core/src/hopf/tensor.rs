use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::elem::{antipode, coproduct_alpha, HElem};
use crate::arith::Int;
use crate::error::{Error, Result};
use crate::numpoly::{alpha_product, NumPoly};

/// An element of `H^{(x)n}`:
/// `(t^{-j_1} (x) ... (x) t^{-j_n}) * sum_m c_m alpha_{m_1} (x) ... (x) alpha_{m_n}`.
///
/// Arity 0 is the scalar ring Z. Shifts are reduced slot by slot until no
/// slot admits a further division by `t`; equality compares after raising
/// both operands to common shifts, so it never depends on the reduction path.
#[derive(Clone, Debug)]
pub struct TensorH {
    shifts: Vec<usize>,
    coeffs: BTreeMap<Vec<usize>, Int>,
}

/// Operation applied to a single tensor factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotOp {
    Coproduct,
    Counit,
    Antipode,
}

impl TensorH {
    pub fn zero(arity: usize) -> Self {
        Self { shifts: vec![0; arity], coeffs: BTreeMap::new() }
    }

    /// `1 (x) ... (x) 1`.
    pub fn unit(arity: usize) -> Self {
        Self::scalar_of_arity(arity, Int::one())
    }

    fn scalar_of_arity(arity: usize, c: Int) -> Self {
        let mut out = Self::zero(arity);
        out.add_term(vec![0; arity], c);
        out
    }

    /// Arity-0 wrapper around an integer.
    pub fn scalar(c: Int) -> Self {
        Self::scalar_of_arity(0, c)
    }

    pub fn from_helem(h: &HElem) -> Self {
        let mut out = Self::zero(1);
        out.shifts[0] = h.shift();
        for (n, c) in h.numerator().terms() {
            out.add_term(vec![n], c.clone());
        }
        out.normalized()
    }

    /// Builds from raw parts and normalizes.
    pub fn from_parts<I: IntoIterator<Item = (Vec<usize>, Int)>>(shifts: Vec<usize>, terms: I) -> Result<Self> {
        let mut out = Self::zero(shifts.len());
        out.shifts = shifts;
        for (idx, c) in terms {
            if idx.len() != out.arity() {
                return Err(Error::DegreeMismatch { expected: out.arity(), found: idx.len() });
            }
            out.add_term(idx, c);
        }
        Ok(out.normalized())
    }

    /// `h_1 (x) ... (x) h_n`.
    pub fn from_factors(factors: &[HElem]) -> Self {
        factors
            .iter()
            .fold(Self::unit(0), |acc, h| acc.outer(&Self::from_helem(h)))
    }

    pub fn arity(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[usize] {
        &self.shifts
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Int)> + '_ {
        self.coeffs.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, idx: Vec<usize>, c: Int) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The integer value of an arity-0 tensor.
    pub fn as_scalar(&self) -> Option<Int> {
        (self.arity() == 0).then(|| self.coeffs.get(&Vec::new()).cloned().unwrap_or_else(Int::zero))
    }

    pub fn to_helem(&self) -> Option<HElem> {
        (self.arity() == 1).then(|| {
            let f = NumPoly::from_terms(self.coeffs.iter().map(|(k, c)| (k[0], c.clone())));
            HElem::new(self.shifts[0], f)
        })
    }

    fn slot_divisible(&self, slot: usize) -> bool {
        self.coeffs.iter().all(|(k, c)| {
            let m = k[slot];
            m > 0 && c.is_multiple_of(&Int::from(m))
        })
    }

    fn divide_slot(&self, slot: usize) -> Self {
        let mut out = Self { shifts: self.shifts.clone(), coeffs: BTreeMap::new() };
        out.shifts[slot] -= 1;
        for (k, c) in &self.coeffs {
            let m = k[slot];
            let q = c / Int::from(m);
            for n in 0..m {
                let mut idx = k.clone();
                idx[slot] = n;
                let v = if (m - 1 - n) % 2 == 0 { q.clone() } else { -q.clone() };
                out.add_term(idx, v);
            }
        }
        out
    }

    fn raise_slot(&self, slot: usize) -> Self {
        let mut out = Self { shifts: self.shifts.clone(), coeffs: BTreeMap::new() };
        out.shifts[slot] += 1;
        for (k, c) in &self.coeffs {
            let m = k[slot];
            let mut lo = k.clone();
            lo[slot] = m;
            out.add_term(lo, c * Int::from(m));
            let mut hi = k.clone();
            hi[slot] = m + 1;
            out.add_term(hi, c * Int::from(m + 1));
        }
        out
    }

    pub(crate) fn normalized(mut self) -> Self {
        if self.coeffs.is_empty() {
            self.shifts.iter_mut().for_each(|s| *s = 0);
            return self;
        }
        loop {
            let mut changed = false;
            for slot in 0..self.arity() {
                while self.shifts[slot] > 0 && self.slot_divisible(slot) {
                    self = self.divide_slot(slot);
                    changed = true;
                }
            }
            if !changed {
                return self;
            }
        }
    }

    /// Same element written over the larger shifts `target`.
    pub fn raised(&self, target: &[usize]) -> Self {
        assert_eq!(target.len(), self.arity());
        let mut out = self.clone();
        for (slot, &s) in target.iter().enumerate() {
            assert!(s >= out.shifts[slot], "cannot lower a shift");
            while out.shifts[slot] < s {
                out = out.raise_slot(slot);
            }
        }
        out
    }

    fn common_shifts(&self, other: &Self) -> Vec<usize> {
        self.shifts
            .iter()
            .zip(&other.shifts)
            .map(|(a, b)| *a.max(b))
            .collect()
    }

    pub fn scale(&self, s: &Int) -> Self {
        let mut out = Self { shifts: self.shifts.clone(), coeffs: BTreeMap::new() };
        for (k, c) in &self.coeffs {
            out.add_term(k.clone(), c * s);
        }
        out.normalized()
    }

    /// Tensor product `self (x) other`, of arity `n + m`.
    pub fn outer(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.arity() + other.arity());
        out.shifts = self.shifts.iter().chain(&other.shifts).copied().collect();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &other.coeffs {
                let idx: Vec<usize> = ka.iter().chain(kb).copied().collect();
                out.add_term(idx, ca * cb);
            }
        }
        out.normalized()
    }

    /// Inserts the unit `1` as a new factor at position `pos`.
    pub fn insert_unit(&self, pos: usize) -> Self {
        assert!(pos <= self.arity());
        let mut out = Self { shifts: self.shifts.clone(), coeffs: BTreeMap::new() };
        out.shifts.insert(pos, 0);
        for (k, c) in &self.coeffs {
            let mut idx = k.clone();
            idx.insert(pos, 0);
            out.coeffs.insert(idx, c.clone());
        }
        out
    }

    /// Applies the coproduct to factor `slot` (0-based).
    pub(crate) fn apply_coproduct(&self, slot: usize) -> Self {
        let j = self.shifts[slot];
        let mut out = Self::zero(self.arity() + 1);
        out.shifts = self.shifts.clone();
        out.shifts.insert(slot, j);
        for (k, c) in &self.coeffs {
            for (a, b, d) in coproduct_alpha(k[slot]).iter() {
                let mut idx = k.clone();
                idx[slot] = *b;
                idx.insert(slot, *a);
                out.add_term(idx, c * d);
            }
        }
        out.normalized()
    }

    /// Applies the counit to factor `slot`; `epsilon(t) = 1` so the shift drops out.
    pub(crate) fn apply_counit(&self, slot: usize) -> Self {
        let mut out = Self::zero(self.arity() - 1);
        out.shifts = self.shifts.clone();
        out.shifts.remove(slot);
        for (k, c) in &self.coeffs {
            if k[slot] <= 1 {
                let mut idx = k.clone();
                idx.remove(slot);
                out.add_term(idx, c.clone());
            }
        }
        out.normalized()
    }

    /// Applies the antipode to factor `slot`.
    ///
    /// `c(t^{-j} alpha_m) = t^{j - s_m} g_m` where `c(alpha_m) = t^{-s_m} g_m`;
    /// all terms are brought over the common shift `max_m s_m`.
    pub(crate) fn apply_antipode(&self, slot: usize) -> Self {
        let j = self.shifts[slot];
        let mut images: HashMap<usize, HElem> = HashMap::new();
        for k in self.coeffs.keys() {
            images
                .entry(k[slot])
                .or_insert_with(|| antipode(&HElem::alpha(k[slot])));
        }
        let top = images.values().map(HElem::shift).max().unwrap_or(0);
        let mut out = Self { shifts: self.shifts.clone(), coeffs: BTreeMap::new() };
        out.shifts[slot] = top;
        for (k, c) in &self.coeffs {
            let img = &images[&k[slot]];
            let g = raise_n(&img.numerator_at(top), j);
            for (n, d) in g.terms() {
                let mut idx = k.clone();
                idx[slot] = n;
                out.add_term(idx, c * d);
            }
        }
        out.normalized()
    }

    /// Multiplies factors `slot` and `slot + 1` together.
    pub fn multiply_adjacent(&self, slot: usize) -> Self {
        assert!(slot + 1 < self.arity());
        let mut out = Self::zero(self.arity() - 1);
        out.shifts = self.shifts.clone();
        let merged = out.shifts[slot] + out.shifts[slot + 1];
        out.shifts.remove(slot + 1);
        out.shifts[slot] = merged;
        for (k, c) in &self.coeffs {
            for (n, d) in alpha_product(k[slot], k[slot + 1]) {
                let mut idx = k.clone();
                idx.remove(slot + 1);
                idx[slot] = n;
                out.add_term(idx, c * d);
            }
        }
        out.normalized()
    }

    /// The image of `self` in `Q[t_1^{+-1}, ..., t_n^{+-1}]` evaluated at a rational point.
    pub fn eval(&self, point: &[crate::arith::Rat]) -> crate::arith::Rat {
        use crate::arith::{binomial_rat, Rat};
        assert_eq!(point.len(), self.arity());
        let mut acc = Rat::zero();
        for (k, c) in &self.coeffs {
            let mut v = Rat::from_integer(c.clone());
            for (slot, m) in k.iter().enumerate() {
                v *= binomial_rat(&point[slot], *m);
            }
            acc += v;
        }
        let mut scale = Rat::one();
        for (slot, s) in self.shifts.iter().enumerate() {
            scale /= num_traits::pow(point[slot].clone(), *s);
        }
        acc * scale
    }
}

fn raise_n(f: &NumPoly, n: usize) -> NumPoly {
    (0..n).fold(f.clone(), |acc, _| acc.t_apply())
}

/// Applies `op` to factor `slot` (1-based) of `x`.
pub fn tensor_slot_apply(x: &TensorH, slot: usize, op: SlotOp) -> Result<TensorH> {
    if slot == 0 || slot > x.arity() {
        return Err(Error::SlotOutOfRange { slot, arity: x.arity() });
    }
    Ok(match op {
        SlotOp::Coproduct => x.apply_coproduct(slot - 1),
        SlotOp::Counit => x.apply_counit(slot - 1),
        SlotOp::Antipode => x.apply_antipode(slot - 1),
    })
}

impl PartialEq for TensorH {
    fn eq(&self, other: &Self) -> bool {
        if self.arity() != other.arity() {
            return false;
        }
        if self.shifts == other.shifts {
            return self.coeffs == other.coeffs;
        }
        let s = self.common_shifts(other);
        self.raised(&s).coeffs == other.raised(&s).coeffs
    }
}

impl Eq for TensorH {}

impl Add<&TensorH> for &TensorH {
    type Output = TensorH;
    fn add(self, rhs: &TensorH) -> TensorH {
        assert_eq!(self.arity(), rhs.arity(), "tensor arity mismatch");
        let s = self.common_shifts(rhs);
        let mut out = self.raised(&s);
        for (k, c) in rhs.raised(&s).coeffs {
            out.add_term(k, c);
        }
        out.normalized()
    }
}

impl Neg for &TensorH {
    type Output = TensorH;
    fn neg(self) -> TensorH {
        TensorH {
            shifts: self.shifts.clone(),
            coeffs: self.coeffs.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Sub<&TensorH> for &TensorH {
    type Output = TensorH;
    fn sub(self, rhs: &TensorH) -> TensorH {
        self + &(-rhs)
    }
}

impl Mul<&TensorH> for &TensorH {
    type Output = TensorH;
    fn mul(self, rhs: &TensorH) -> TensorH {
        assert_eq!(self.arity(), rhs.arity(), "tensor arity mismatch");
        let n = self.arity();
        let mut out = TensorH::zero(n);
        out.shifts = self.shifts.iter().zip(&rhs.shifts).map(|(a, b)| a + b).collect();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &rhs.coeffs {
                let mut partial: Vec<(Vec<usize>, Int)> = vec![(Vec::with_capacity(n), ca * cb)];
                for slot in 0..n {
                    let prods = alpha_product(ka[slot], kb[slot]);
                    partial = partial
                        .into_iter()
                        .flat_map(|(idx, c)| {
                            prods.iter().map(move |(m, d)| {
                                let mut idx = idx.clone();
                                idx.push(*m);
                                (idx, &c * d)
                            })
                        })
                        .collect();
                }
                for (idx, c) in partial {
                    out.add_term(idx, c);
                }
            }
        }
        out.normalized()
    }
}

impl fmt::Display for TensorH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        if self.shifts.iter().any(|s| *s > 0) {
            let parts: Vec<String> = self.shifts.iter().map(|s| format!("t^-{s}")).collect();
            write!(f, "({})*(", parts.join(" ox "))?;
        }
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let body: Vec<String> = k.iter().map(|m| format!("a({m})")).collect();
            match (body.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", body.join(" ox "))?,
                (false, false) => write!(f, "{mag}*{}", body.join(" ox "))?,
            }
        }
        if self.shifts.iter().any(|s| *s > 0) {
            write!(f, ")")?;
        }
        Ok(())
    }
}
