// The telescope of b acting on beta-vectors and its image in R (x) H.

use binomial_cobar::fgl::{
    b_operator, beta_to_alpha, normal_form_targets, telescope_colimit_map, telescope_preimage, BetaVec,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = BetaVec::basis(2);
    println!("b({x}) = {}", b_operator(&x));
    println!("{x} in the alpha basis: {}", beta_to_alpha(&x));
    for j in 0..3 {
        println!("stage {j}: {}", telescope_colimit_map(j, &x));
    }
    assert_eq!(telescope_colimit_map(0, &x), telescope_colimit_map(1, &b_operator(&x)));

    for y in normal_form_targets() {
        let (j, pre) = telescope_preimage(&y)?;
        println!("{y}  <- stage {j}: {pre}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
