mod support;

use binomial_cobar::arith::{int, rat, Int, LaurentPoly, Rat};
use binomial_cobar::numpoly::{
    alpha_mul, alpha_product, from_monomial, is_numerical, lambda_op, multinomial, to_monomial, NumPoly,
};
use num_traits::{One, Zero};
use proptest::prelude::*;
use support::{alpha_product_oracle, binom_q, sample_points, QPoly};

fn numpoly() -> impl Strategy<Value = NumPoly> {
    prop::collection::vec((0usize..8, -20i64..=20), 0..5)
        .prop_map(|ts| NumPoly::from_terms(ts.into_iter().map(|(n, c)| (n, int(c)))))
}

fn as_qpoly(a: &NumPoly) -> QPoly {
    let mut acc = QPoly(vec![]);
    for (n, c) in a.terms() {
        let b = QPoly::binomial(n);
        let scaled: Vec<Rat> = b.0.iter().map(|x| x * Rat::from_integer(c.clone())).collect();
        let len = acc.0.len().max(scaled.len());
        acc.0.resize(len, Rat::zero());
        for (d, x) in scaled.into_iter().enumerate() {
            acc.0[d] += x;
        }
    }
    acc.trim()
}

#[test]
fn structure_constants_small() {
    assert_eq!(alpha_product(1, 1), vec![(1, int(1)), (2, int(2))]);
    assert_eq!(alpha_product(2, 3), vec![(3, int(3)), (4, int(12)), (5, int(10))]);
    assert_eq!(alpha_product(0, 4), vec![(4, int(1))]);
    assert_eq!(
        alpha_product(3, 3),
        vec![(3, int(1)), (4, int(12)), (5, int(30)), (6, int(20))]
    );
}

#[test]
fn structure_constants_match_oracle() {
    for i in 0..=12 {
        for j in 0..=12 {
            let got: Vec<(usize, Int)> = alpha_product(i, j).into_iter().filter(|(_, c)| !c.is_zero()).collect();
            let want: Vec<(usize, Int)> = alpha_product_oracle(i, j).into_iter().collect();
            assert_eq!(got, want, "alpha_{i} * alpha_{j}");
        }
    }
}

#[test]
fn multinomial_values() {
    assert_eq!(multinomial(5, 3, 2, 0).unwrap(), int(10));
    assert_eq!(multinomial(4, 2, 1, 1).unwrap(), int(12));
    assert_eq!(multinomial(3, -1, 2, 2).unwrap(), int(0));
    assert!(multinomial(3, 1, 1, 0).is_err());
}

#[test]
fn monomial_conversions() {
    let t2 = LaurentPoly::monomial(Rat::one(), 2);
    assert_eq!(from_monomial(&t2).unwrap(), NumPoly::from_terms([(1, int(1)), (2, int(2))]));
    let half = LaurentPoly::monomial(rat(1, 2), 2);
    assert!(!is_numerical(&half));
    let inv = LaurentPoly::monomial(Rat::one(), -1);
    assert!(from_monomial(&inv).is_err());
    let a3 = to_monomial(&NumPoly::alpha(3));
    assert_eq!(a3.coeff(3), rat(1, 6));
    assert_eq!(a3.coeff(2), rat(-1, 2));
    assert_eq!(a3.coeff(1), rat(1, 3));
}

#[test]
fn t_action_values() {
    assert_eq!(NumPoly::alpha(2).t_apply(), NumPoly::from_terms([(2, int(2)), (3, int(3))]));
    assert_eq!(NumPoly::alpha(1).t_divide(), Some(NumPoly::one()));
    assert_eq!(NumPoly::alpha(2).t_divide(), None);
    assert_eq!(NumPoly::one().t_divide(), None);
    assert_eq!(
        NumPoly::term(3, int(3)).t_divide(),
        Some(NumPoly::from_terms([(0, int(1)), (1, int(-1)), (2, int(1))]))
    );
}

#[test]
fn lambda_operations() {
    for n in 0..6 {
        assert_eq!(lambda_op(&NumPoly::t(), n), NumPoly::alpha(n));
    }
    assert_eq!(lambda_op(&NumPoly::alpha(2), 2), NumPoly::from_terms([(3, int(3)), (4, int(3))]));
}

#[test]
fn mod_two_idempotents() {
    let two = int(2);
    for n in 0..=64 {
        let a = NumPoly::alpha(n);
        assert_eq!(alpha_mul(&a, &a).reduce_mod(&two), a, "alpha_{n}");
    }
    for r in 1..=4u32 {
        let top = NumPoly::alpha((1 << r) - 1);
        for m in 0..(1usize << r) {
            let p = alpha_mul(&NumPoly::alpha(m), &top).reduce_mod(&two);
            assert_eq!(p, top, "alpha_{m} alpha_{}", (1 << r) - 1);
        }
    }
}

proptest! {
    #[test]
    fn product_matches_dense_product(a in numpoly(), b in numpoly()) {
        let got = as_qpoly(&alpha_mul(&a, &b));
        prop_assert_eq!(got, as_qpoly(&a).mul(&as_qpoly(&b)));
    }

    #[test]
    fn product_commutes_and_associates(a in numpoly(), b in numpoly(), c in numpoly()) {
        prop_assert_eq!(alpha_mul(&a, &b), alpha_mul(&b, &a));
        prop_assert_eq!(alpha_mul(&alpha_mul(&a, &b), &c), alpha_mul(&a, &alpha_mul(&b, &c)));
        prop_assert_eq!(alpha_mul(&a, &(&b + &c)), &alpha_mul(&a, &b) + &alpha_mul(&a, &c));
    }

    #[test]
    fn evaluation_is_multiplicative(a in numpoly(), b in numpoly(), x in -6i64..12) {
        prop_assert_eq!(alpha_mul(&a, &b).eval_at(x), a.eval_at(x) * b.eval_at(x));
    }

    #[test]
    fn evaluation_matches_rational_binomials(a in numpoly()) {
        for x in sample_points() {
            let want: Rat = a.terms().map(|(n, c)| binom_q(&x, n) * Rat::from_integer(c.clone())).sum();
            prop_assert_eq!(to_monomial(&a).eval(&x).unwrap(), want);
        }
    }

    #[test]
    fn monomial_round_trip(a in numpoly()) {
        prop_assert_eq!(from_monomial(&to_monomial(&a)).unwrap(), a);
    }

    #[test]
    fn t_divides_t_multiples(a in numpoly()) {
        let ta = a.t_apply();
        prop_assert_eq!(ta.t_divide(), Some(a.clone()));
        prop_assert_eq!(ta, alpha_mul(&NumPoly::t(), &a));
    }
}
