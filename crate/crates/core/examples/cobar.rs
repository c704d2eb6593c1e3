// Cofaces, codegeneracies and the differential of the cobar complex.

use binomial_cobar::cobar::{
    check_identities, cobar_differential, codegeneracy, coface, fuzz_identities, h0_primitives, CobarComplex,
    CobarElem, RElem,
};
use binomial_cobar::hopf::HElem;
use binomial_cobar::sample::random_cobar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let u = CobarElem::from_r(&RElem::u(), 0);
    println!("d(u) = {}", cobar_differential(&u));

    let x = CobarElem::from_factors(1, &[HElem::alpha(2)]);
    for i in 0..=2 {
        println!("d^{i}({x}) = {}", coface(i, &x)?);
    }
    println!("s^0({x}) = {}", codegeneracy(0, &x)?);
    println!("d(d(x)) is zero: {}", cobar_differential(&cobar_differential(&x)).is_zero());

    let failures = check_identities(&CobarComplex, &x).iter().filter(|c| c.outcome.is_err()).count();
    println!("identities on x: {failures} failures");

    let tally = fuzz_identities(&CobarComplex, random_cobar, 2, 25, 1);
    println!("fuzzed {} identity instances, {} failures", tally.count("coface_coface"), tally.failure_count());

    println!("H^0 generators with |u-exponent| <= 3: {:?}", h0_primitives(3).iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
