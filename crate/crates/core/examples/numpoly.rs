// Arithmetic of numerical polynomials in the binomial basis.

use binomial_cobar::arith::{int, rat, LaurentPoly};
use binomial_cobar::numpoly::{alpha_mul, from_monomial, lambda_op, NumPoly};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a1 = NumPoly::alpha(1);
    let sq = alpha_mul(&a1, &a1);
    println!("a(1)^2 = {sq}");
    assert_eq!(sq, NumPoly::from_terms([(1, int(1)), (2, int(2))]));

    let p = alpha_mul(&NumPoly::alpha(2), &NumPoly::alpha(3));
    println!("a(2)*a(3) = {p}");
    println!("  monomial form {}", p.to_monomial());

    // t(t+1)/2 is numerical, t/2 is not
    let tri = LaurentPoly::from_terms([(2, rat(1, 2)), (1, rat(1, 2))]);
    println!("t(t+1)/2 = {}", from_monomial(&tri)?);
    let half = LaurentPoly::monomial(rat(1, 2), 1);
    println!("t/2 -> {}", from_monomial(&half).unwrap_err());

    println!("T(a(3)) = {}", NumPoly::alpha(3).t_apply());
    println!("a(3)/t exists: {}", NumPoly::alpha(3).t_divide().is_some());
    println!("lambda^2(a(2)) = {}", lambda_op(&NumPoly::alpha(2), 2));

    let two = int(2);
    let idem = (0..=16).all(|n| alpha_mul(&NumPoly::alpha(n), &NumPoly::alpha(n)).reduce_mod(&two) == NumPoly::alpha(n));
    println!("a(n)^2 = a(n) mod 2 for n <= 16: {idem}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
