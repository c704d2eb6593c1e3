// Localization at t over Z/q and the mod-q basis of H.

use binomial_cobar::modl::{eventual_localization, hq_basis_check, lemma_mb_check, t_block_endo};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (l, nu) in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)] {
        let r = hq_basis_check(l, nu)?;
        println!(
            "q={:<3} rank={:<3} basis={} pass={}",
            r.facts["q"], r.facts["rank"], r.facts["basis"], r.passed()
        );
    }

    let loc = eventual_localization(&t_block_endo(2, 2)?)?;
    println!("stable image of T mod 4 after {} steps, basis {:?}", loc.steps(), loc.basis());
    println!("class of a(1) = {:?}", loc.class_of(&[0, 1, 0, 0]));

    let r = lemma_mb_check(3, 2, 4)?;
    println!("b_4 on Z/9: determinant {} pass={}", r.facts["determinant"], r.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
