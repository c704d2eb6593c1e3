use num_integer::Integer;
use num_traits::{One, Zero};

use super::localize::eventual_localization;
use super::matrix::{EndoMap, ModMatrix};
use crate::arith::{is_prime, Int};
use crate::error::{Error, Result};
use crate::report::Report;

/// Largest `q = l^nu` accepted by [`hq_basis_check`].
pub const SIZE_GUARD: u64 = 64;

fn modulus_of(l: u64, nu: u32) -> Result<u64> {
    if !is_prime(l) {
        return Err(Error::InvalidPrime(l));
    }
    if nu == 0 {
        return Err(Error::InvalidArgument("nu must be at least 1".into()));
    }
    l.checked_pow(nu)
        .ok_or_else(|| Error::InvalidArgument(format!("{l}^{nu} overflows")))
}

/// Matrix of `b_k` on `span(alpha_0, ..., alpha_{l-1})` over `Z/l^nu`.
pub fn block_endo(l: u64, nu: u32, k: u64) -> Result<EndoMap> {
    let q = modulus_of(l, nu)?;
    let n = l as usize;
    let mut m = ModMatrix::zero(q, n, n);
    let base = k * l;
    for i in 0..n {
        m.set(i, i, (base + i as u64) % q);
        if i + 1 < n {
            m.set(i + 1, i, (base + i as u64 + 1) % q);
        }
    }
    Ok(m)
}

/// Matrix of `T` on `span(alpha_0, ..., alpha_{dim-1})` mod `q`, dropping the `alpha_dim` term.
pub fn t_matrix(q: u64, dim: usize) -> ModMatrix {
    let mut m = ModMatrix::zero(q, dim, dim);
    for i in 0..dim {
        m.set(i, i, i as u64 % q);
        if i + 1 < dim {
            m.set(i + 1, i, (i as u64 + 1) % q);
        }
    }
    m
}

/// `T` on the first block `F_0 = span(alpha_0, ..., alpha_{q-1})`; the dropped term `q alpha_q` vanishes mod `q`.
pub fn t_block_endo(l: u64, nu: u32) -> Result<EndoMap> {
    let q = modulus_of(l, nu)?;
    Ok(t_matrix(q, q as usize))
}

/// `{ i : 0 < i < q, l does not divide i }`.
pub fn hq_basis_indices(l: u64, nu: u32) -> Result<Vec<usize>> {
    let q = modulus_of(l, nu)?;
    Ok((1..q).filter(|i| i % l != 0).map(|i| i as usize).collect())
}

/// Localizes `T` on the first block and checks that the classes of
/// `alpha_i` with `0 < i < q`, `l` not dividing `i`, form a basis of the result.
pub fn hq_basis_check(l: u64, nu: u32) -> Result<Report> {
    let q = modulus_of(l, nu)?;
    if q > SIZE_GUARD {
        return Err(Error::SizeGuard { q, limit: SIZE_GUARD });
    }
    let m = t_block_endo(l, nu)?;
    let loc = eventual_localization(&m)?;
    let indices = hq_basis_indices(l, nu)?;
    let expected = indices.len();
    let subject = format!("q={q}");
    let mut report = Report::new("hq_basis");
    report.fact("q", q);
    report.fact("l", l);
    report.fact("nu", nu);
    report.fact("rank", loc.rank());
    report.fact("expected_rank", expected);
    report.fact("stable_image_log_size", loc.rank() as u64 * u64::from(nu));
    report.fact("steps", loc.steps());
    report.fact("basis", indices.clone());
    report.check_with(
        "rank",
        subject.clone(),
        loc.rank() == expected,
        format!("stable image rank {} against {} candidates", loc.rank(), expected),
    );
    let classes: Vec<Vec<u64>> = indices
        .iter()
        .map(|&i| {
            let mut e = vec![0; q as usize];
            e[i] = 1;
            loc.class_of(&e)
        })
        .collect();
    let spans = loc.rank() == expected && ModMatrix::from_u64_columns(q, loc.rank(), &classes).inverse().is_some();
    report.check("classes_form_basis", subject.clone(), spans);
    report.check(
        "action_invertible",
        subject,
        loc.rank() == 0 || loc.action().inverse().is_some(),
    );
    Ok(report)
}

fn bareiss_det(mut a: Vec<Vec<Int>>) -> Int {
    let n = a.len();
    if n == 0 {
        return Int::one();
    }
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Checks that `b_k` is invertible on `L = span(alpha_1, ..., alpha_{l-1})` and
/// that `(b_k)^nu` carries `alpha_0` into `L`.
pub fn lemma_mb_check(l: u64, nu: u32, k: u64) -> Result<Report> {
    let q = modulus_of(l, nu)?;
    let n = l as usize - 1;
    let base = Int::from(k * l);
    let mut restricted = vec![vec![Int::zero(); n]; n];
    for i in 0..n {
        restricted[i][i] = &base + Int::from(i + 1);
        if i + 1 < n {
            restricted[i + 1][i] = &base + Int::from(i + 2);
        }
    }
    let det = bareiss_det(restricted);
    let product: Int = (1..l).map(|i| &base + Int::from(i)).product();
    let subject = format!("l={l} nu={nu} k={k}");
    let mut report = Report::new("lemma_mb");
    report.fact("determinant", det.to_string());
    report.check_with("determinant_product", subject.clone(), det == product, format!("det {det}, product {product}"));
    let unit = det.gcd(&Int::from(l)).is_one();
    report.check_with("determinant_unit", subject.clone(), unit, format!("det {det} mod {q}"));
    let b = block_endo(l, nu, k)?;
    let mut e0 = vec![0; l as usize];
    e0[0] = 1;
    let image = b.pow(u64::from(nu)).apply(&e0);
    report.check_with(
        "power_lands_in_l",
        subject,
        image[0] == 0,
        format!("alpha_0 coefficient {}", image[0]),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_examples() {
        assert_eq!(block_endo(2, 1, 0).unwrap(), ModMatrix::from_columns(2, 2, &[vec![0, 1], vec![0, 1]]));
        assert_eq!(
            block_endo(3, 1, 0).unwrap(),
            ModMatrix::from_columns(3, 3, &[vec![0, 1, 0], vec![0, 1, 2], vec![0, 0, 2]])
        );
        assert_eq!(block_endo(2, 2, 1).unwrap(), ModMatrix::from_columns(4, 2, &[vec![2, 3], vec![0, 3]]));
        assert_eq!(block_endo(4, 1, 0), Err(Error::InvalidPrime(4)));
    }

    #[test]
    fn t_block_examples() {
        assert_eq!(t_block_endo(2, 1).unwrap(), ModMatrix::from_columns(2, 2, &[vec![0, 1], vec![0, 1]]));
        assert_eq!(
            t_block_endo(2, 2).unwrap(),
            ModMatrix::from_columns(
                4,
                4,
                &[vec![0, 1, 0, 0], vec![0, 1, 2, 0], vec![0, 0, 2, 3], vec![0, 0, 0, 3]]
            )
        );
        assert_eq!(t_block_endo(3, 1).unwrap().column(2), vec![0, 0, 2]);
    }

    #[test]
    fn basis_examples() {
        let r = hq_basis_check(2, 2).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.facts["basis"], serde_json::json!([1, 3]));
        assert!(hq_basis_check(3, 1).unwrap().passed());
        let r = hq_basis_check(5, 2).unwrap();
        assert!(r.passed());
        assert_eq!(r.facts["rank"], serde_json::json!(20));
        assert_eq!(hq_basis_check(2, 7), Err(Error::SizeGuard { q: 128, limit: 64 }));
    }

    #[test]
    fn lemma_examples() {
        let r = lemma_mb_check(3, 1, 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.facts["determinant"], serde_json::json!("2"));
        assert!(lemma_mb_check(2, 3, 0).unwrap().passed());
        let r = lemma_mb_check(5, 1, 2).unwrap();
        assert!(r.passed());
        assert_eq!(r.facts["determinant"], serde_json::json!("24024"));
    }
}
