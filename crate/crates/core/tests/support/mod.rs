//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use binomial_cobar::arith::{Int, Rat};
use num_traits::{One, Zero};

/// Dense polynomial over Q, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct QPoly(pub Vec<Rat>);

impl QPoly {
    pub fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    /// `C(t, n)` built as a product of linear factors.
    pub fn binomial(n: usize) -> Self {
        let mut p = vec![Rat::one()];
        for i in 0..n {
            let mut next = vec![Rat::zero(); p.len() + 1];
            let scale = Rat::new(Int::one(), Int::from(i + 1));
            for (d, c) in p.iter().enumerate() {
                next[d + 1] += c * &scale;
                next[d] -= c * &scale * Rat::from_integer(Int::from(i));
            }
            p = next;
        }
        QPoly(p).trim()
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return QPoly(vec![]);
        }
        let mut out = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly(out).trim()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients in the basis `C(t, n)` via Newton forward differences.
    pub fn newton(&self) -> BTreeMap<usize, Rat> {
        let deg = self.0.len().saturating_sub(1);
        let mut vals: Vec<Rat> = (0..=deg).map(|x| self.eval(&Rat::from_integer(Int::from(x)))).collect();
        let mut out = BTreeMap::new();
        for n in 0..=deg {
            if !vals[0].is_zero() {
                out.insert(n, vals[0].clone());
            }
            vals = vals.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        out
    }
}

/// Integer coefficients of `t (t-1) ... (t-n+1)`, lowest degree first.
fn falling(n: usize) -> Vec<Int> {
    let mut p = vec![Int::one()];
    for i in 0..n {
        let mut next = vec![Int::zero(); p.len() + 1];
        for (d, c) in p.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * Int::from(i);
        }
        p = next;
    }
    p
}

/// `alpha_i * alpha_j` by multiplying monomial expansions and re-expanding.
///
/// Works with `i! j! alpha_i alpha_j`, an integer polynomial, and divides at the end.
pub fn alpha_product_oracle(i: usize, j: usize) -> BTreeMap<usize, Int> {
    let (a, b) = (falling(i), falling(j));
    let mut prod = vec![Int::zero(); a.len() + b.len() - 1];
    for (x, ca) in a.iter().enumerate() {
        for (y, cb) in b.iter().enumerate() {
            prod[x + y] += ca * cb;
        }
    }
    let den: Int = (1..=i).chain(1..=j).map(Int::from).product();
    let deg = prod.len() - 1;
    let mut vals: Vec<Int> = (0..=deg)
        .map(|x| {
            let x = Int::from(x);
            prod.iter().rev().fold(Int::zero(), |acc, c| acc * &x + c)
        })
        .collect();
    let mut out = BTreeMap::new();
    for n in 0..=deg {
        if !vals[0].is_zero() {
            let (q, r) = num_integer::Integer::div_rem(&vals[0], &den);
            assert!(r.is_zero(), "non-integral structure constant");
            out.insert(n, q);
        }
        vals = vals.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

/// `C(x, n)` for rational `x`.
pub fn binom_q(x: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..n {
        acc = acc * (x - Rat::from_integer(Int::from(i))) / Rat::from_integer(Int::from(i + 1));
    }
    acc
}

pub fn q(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Rational sample points away from 0 and 1.
pub fn sample_points() -> Vec<Rat> {
    vec![q(2, 1), q(3, 1), q(-1, 2), q(5, 3), q(7, 2), q(-3, 1)]
}

/// `(x + y + u x y)^k` expanded as `(i, j, e) -> coefficient of x^i y^j u^e`.
pub fn mult_law_power(k: usize) -> BTreeMap<(usize, usize, usize), Int> {
    let mut acc: BTreeMap<(usize, usize, usize), Int> = BTreeMap::from([((0, 0, 0), Int::one())]);
    let mu = [((1, 0, 0), 1), ((0, 1, 0), 1), ((1, 1, 1), 1)];
    for _ in 0..k {
        let mut next = BTreeMap::new();
        for ((i, j, e), c) in &acc {
            for ((a, b, f), d) in mu {
                *next.entry((i + a, j + b, e + f)).or_insert_with(Int::zero) += c * Int::from(d);
            }
        }
        acc = next;
    }
    acc
}

/// Brute-force span over `Z/q` of a set of vectors.
pub fn span(vectors: &[Vec<u64>], q: u64, dim: usize) -> HashSet<Vec<u64>> {
    let mut seen: HashSet<Vec<u64>> = HashSet::from([vec![0; dim]]);
    let mut frontier = vec![vec![0; dim]];
    while let Some(v) = frontier.pop() {
        for g in vectors {
            let w: Vec<u64> = v.iter().zip(g).map(|(a, b)| (a + b) % q).collect();
            if seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    seen
}

/// Column-major matrix application over `Z/q`.
pub fn apply(cols: &[Vec<u64>], v: &[u64], q: u64) -> Vec<u64> {
    let dim = cols.first().map_or(0, Vec::len);
    let mut out = vec![0; dim];
    for (c, x) in cols.iter().zip(v) {
        for (o, a) in out.iter_mut().zip(c) {
            *o = (*o + a * x) % q;
        }
    }
    out
}

/// Column-major product over `Z/q`.
pub fn compose(a: &[Vec<u64>], b: &[Vec<u64>], q: u64) -> Vec<Vec<u64>> {
    b.iter().map(|col| apply(a, col, q)).collect()
}

/// Columns of the `n`-th power.
pub fn power(cols: &[Vec<u64>], n: usize, q: u64) -> Vec<Vec<u64>> {
    let dim = cols.len();
    let mut acc: Vec<Vec<u64>> = (0..dim)
        .map(|j| (0..dim).map(|i| u64::from(i == j)).collect())
        .collect();
    for _ in 0..n {
        acc = compose(cols, &acc, q);
    }
    acc
}

/// Eventual image as the span of the columns of a high power; checks it is stable.
pub fn stable_image(cols: &[Vec<u64>], q: u64) -> HashSet<Vec<u64>> {
    let dim = cols.len();
    let n = 8 * dim + 2;
    let image = span(&power(cols, n, q), q, dim);
    let next = span(&power(cols, n + 1, q), q, dim);
    assert_eq!(image.len(), next.len(), "image not yet stable");
    image
}

/// Every combination `sum c_i g_i` with `c_i in Z/q`.
pub fn all_combinations(gens: &[Vec<u64>], q: u64, dim: usize) -> HashSet<Vec<u64>> {
    let mut out = HashSet::new();
    let r = gens.len();
    let total = (q as u128).pow(r as u32);
    for mut code in 0..total {
        let mut v = vec![0; dim];
        for g in gens {
            let c = (code % q as u128) as u64;
            code /= q as u128;
            for (a, b) in v.iter_mut().zip(g) {
                *a = (*a + c * b) % q;
            }
        }
        out.insert(v);
    }
    out
}

/// `t^{-j} f` at `x`, summing `C(x, n)` directly.
pub fn h_value(h: &binomial_cobar::hopf::HElem, x: &Rat) -> Rat {
    let f: Rat = h.numerator().terms().map(|(n, c)| binom_q(x, n) * Rat::from_integer(c.clone())).sum();
    f / num_traits::pow(x.clone(), h.shift())
}

/// A pure-tensor sum evaluated slotwise at `point`.
pub fn tensor_value(t: &binomial_cobar::hopf::TensorH, point: &[Rat]) -> Rat {
    assert_eq!(t.arity(), point.len());
    let mut acc = Rat::zero();
    for (idx, c) in t.terms() {
        let mut v = Rat::from_integer(c.clone());
        for (x, m) in point.iter().zip(idx) {
            v *= binom_q(x, *m);
        }
        acc += v;
    }
    for (x, s) in point.iter().zip(t.shifts()) {
        acc /= num_traits::pow(x.clone(), *s);
    }
    acc
}

/// Cobar element evaluated at `point`, one value per `u`-exponent.
pub fn cobar_value(x: &binomial_cobar::cobar::CobarElem, point: &[Rat]) -> BTreeMap<i64, Rat> {
    let mut out = BTreeMap::new();
    for (a, t) in x.terms() {
        let v = tensor_value(t, point);
        if !v.is_zero() {
            *out.entry(a).or_insert_with(Rat::zero) += v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}
