// Seeded verification suites, as run by `binomial-cobar verify`.

use binomial_cobar::cli::run;
use binomial_cobar::cli::verify::{verify_hopf, verify_numpoly};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = verify_numpoly(7, 10);
    println!("numpoly: {} checks, pass={}", r.count(), r.passed());
    let r = verify_hopf(7, 10);
    println!("hopf: {} checks, pass={}", r.count(), r.passed());

    let (code, out) = run(["binomial-cobar", "verify", "fgl", "--seed", "7", "--trials", "10"]);
    println!("verify fgl exited {code}: {out}");
    if code != 0 {
        return Err(format!("verify fgl failed: {out}").into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
