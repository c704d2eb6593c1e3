// The Hopf algebra H = F[1/t]: coproduct, counit, antipode and membership.

use binomial_cobar::arith::{rat, LaurentPoly};
use binomial_cobar::hopf::{
    antipode, check_axiom, coproduct, counit, h_from_laurent, tensor_slot_apply, HElem, HopfAxiom, SlotOp,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a2 = HElem::alpha(2);
    println!("Delta(a(2)) = {}", coproduct(&a2));
    println!("eps(a(2)) = {}", counit(&a2));
    let c = antipode(&a2);
    println!("c(a(2)) = {c}");
    assert_eq!(antipode(&c), a2);

    let x = HElem::new(1, binomial_cobar::numpoly::NumPoly::alpha(1));
    println!("t^-1*a(1) normalizes to {x}");

    let p = LaurentPoly::from_terms([(0, rat(1, 2)), (-1, rat(-1, 2))]);
    println!("(t - 1)/(2t) = {}", h_from_laurent(&p)?);
    let q = LaurentPoly::constant(rat(1, 3));
    println!("1/3 -> {}", h_from_laurent(&q).unwrap_err());

    let d = coproduct(&HElem::t_pow(-1));
    let dd = tensor_slot_apply(&d, 2, SlotOp::Coproduct)?;
    println!("(1 ox Delta) Delta(t^-1) = {dd}");

    let b = HElem::alpha(3);
    for ax in HopfAxiom::ALL {
        check_axiom(ax, &a2, &b)?;
        println!("{:<16} ok", ax.name());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
