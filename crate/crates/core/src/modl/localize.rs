use super::matrix::{independent_mod_l, prime_power, EndoMap, ModMatrix};
use crate::error::{Error, Result};

/// `M[1/phi]` for `M = (Z/q)^d`, realized as the eventual image of `phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedModule {
    modulus: u64,
    ambient_dim: usize,
    basis: Vec<Vec<u64>>,
    action: ModMatrix,
    endo: EndoMap,
    steps: u64,
    pivot_rows: Vec<usize>,
    pivot_inverse: ModMatrix,
}

impl LocalizedModule {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Vectors of `M` whose span is the stable image; free of rank `basis().len()`.
    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of `phi` on the stable image, in the coordinates of `basis()`.
    pub fn action(&self) -> &ModMatrix {
        &self.action
    }

    /// Exponent `N` with `im(phi^N) = im(phi^{N+1})`.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// Coordinates of a vector of the stable image in `basis()`.
    pub fn coords(&self, v: &[u64]) -> Vec<u64> {
        let sel: Vec<u64> = self.pivot_rows.iter().map(|&i| v[i]).collect();
        self.pivot_inverse.apply(&sel)
    }

    /// Image of `v` under the canonical map `M -> M[1/phi]`, in `basis()` coordinates.
    pub fn class_of(&self, v: &[u64]) -> Vec<u64> {
        let pushed = self.endo.pow(self.steps).apply(v);
        let inv = self.action.inverse().expect("action is invertible");
        inv.pow(self.steps).apply(&self.coords(&pushed))
    }
}

/// Iterates `im(phi^N)` until it stops shrinking and returns the stable image with its induced action.
pub fn eventual_localization(m: &EndoMap) -> Result<LocalizedModule> {
    if !m.is_square() {
        return Err(Error::DegreeMismatch { expected: m.rows(), found: m.cols() });
    }
    let q = m.modulus();
    let (l, nu) = prime_power(q).ok_or(Error::InvalidArgument(format!("modulus {q} is not a prime power")))?;
    let d = m.rows();
    let limit = d as u64 * u64::from(nu) + 1;
    let mut power = ModMatrix::identity(q, d);
    let mut size = power.image_log_size(l, nu);
    let mut steps = 0;
    loop {
        let next = power.try_mul(m)?;
        let next_size = next.image_log_size(l, nu);
        if next_size == size {
            break;
        }
        power = next;
        size = next_size;
        steps += 1;
        if steps > limit {
            return Err(Error::NotStabilized { steps: steps as usize });
        }
    }
    let columns = power.columns();
    let chosen = independent_mod_l(&columns, l);
    let basis: Vec<Vec<u64>> = chosen.iter().map(|&j| columns[j].clone()).collect();
    let r = basis.len();
    if u64::from(size) != r as u64 * u64::from(nu) {
        return Err(Error::Invariant(format!(
            "stable image of size {l}^{size} is not free of rank {r}"
        )));
    }
    let b = ModMatrix::from_u64_columns(q, d, &basis);
    let reduced: Vec<Vec<u64>> = (0..d).map(|i| (0..r).map(|j| b.get(i, j)).collect()).collect();
    let pivot_rows = independent_mod_l(&reduced, l);
    let pivot_inverse = b
        .select_rows(&pivot_rows)
        .inverse()
        .ok_or_else(|| Error::Invariant("basis has no invertible row minor".into()))?;
    let image = m.try_mul(&b)?;
    let action = pivot_inverse.try_mul(&image.select_rows(&pivot_rows))?;
    if r > 0 && action.inverse().is_none() {
        return Err(Error::Invariant("induced action is not invertible".into()));
    }
    Ok(LocalizedModule {
        modulus: q,
        ambient_dim: d,
        basis,
        action,
        endo: m.clone(),
        steps,
        pivot_rows,
        pivot_inverse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modl::t_block_endo;

    #[test]
    fn block_2_1() {
        let loc = eventual_localization(&t_block_endo(2, 1).unwrap()).unwrap();
        assert_eq!(loc.basis(), &[vec![0, 1]]);
        assert!(loc.action().is_identity());
    }

    #[test]
    fn nilpotent_kills_everything() {
        let m = ModMatrix::from_columns(9, 3, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        let loc = eventual_localization(&m).unwrap();
        assert_eq!(loc.rank(), 0);
        assert_eq!(loc.steps(), 3);
    }

    #[test]
    fn invertible_is_its_own_localization() {
        let m = ModMatrix::from_columns(4, 2, &[vec![1, 1], vec![0, 3]]);
        let loc = eventual_localization(&m).unwrap();
        assert_eq!(loc.rank(), 2);
        assert_eq!(loc.steps(), 0);
        assert_eq!(loc.action(), &m);
    }

    #[test]
    fn classes_commute_with_the_action() {
        let m = t_block_endo(2, 2).unwrap();
        let loc = eventual_localization(&m).unwrap();
        for i in 0..4 {
            let mut e = vec![0; 4];
            e[i] = 1;
            let lhs = loc.class_of(&m.apply(&e));
            let rhs = loc.action().apply(&loc.class_of(&e));
            assert_eq!(lhs, rhs);
        }
    }
}
