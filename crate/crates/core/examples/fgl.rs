// Coefficients of powers of formal group laws.

use binomial_cobar::fgl::{adams_a1jk_check, generic_law, mult_coeff_closed_form, mult_law, power_coeff};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let law = mult_law(8);
    println!("multiplicative law: {law}");
    for (k, i, j) in [(1, 1, 1), (2, 1, 1), (3, 2, 2), (4, 3, 3)] {
        let c = power_coeff(&law, k, i, j)?;
        assert_eq!(c, mult_coeff_closed_form(k, i, j));
        println!("[x^{i} y^{j}] mu^{k} = {c}");
    }

    let g = generic_law(4);
    println!("generic law: {g}");
    println!("[x y^2] mu^2 = {}", power_coeff(&g, 2, 1, 2)?);
    println!("[x^2 y^2] mu = {}", power_coeff(&g, 1, 2, 2)?);
    println!("[x^3 y^2] mu -> {}", power_coeff(&g, 1, 3, 2).unwrap_err());

    for d in 2..=6 {
        let r = adams_a1jk_check(d)?;
        println!("a_1j^k = k a_(1,1+j-k) up to degree {d}: {} checks pass={}", r.count(), r.passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
