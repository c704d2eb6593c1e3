//! The split Hopf algebroid `(R, Gamma) = (Z[u, 1/u], R (x) H)`.
//!
//! Elements of `Gamma` are degree-1 cobar elements and `Gamma (x)_R Gamma` is
//! modeled as `R (x) H (x) H` via `(u^a (x) h) (x) (u^b (x) k) -> u^{a+b} (x) h t^b (x) k`.

use super::elem::{eta_l, eta_r, CobarElem};
use super::relem::RElem;
use crate::error::{Error, Result};
use crate::hopf::{HElem, TensorH};
use crate::report::Report;

fn expect_degree(x: &CobarElem, d: usize) -> Result<()> {
    if x.degree() != d {
        return Err(Error::DegreeMismatch { expected: d, found: x.degree() });
    }
    Ok(())
}

/// `epsilon(u^a (x) h) = epsilon(h) u^a`.
pub fn gamma_counit(x: &CobarElem) -> Result<RElem> {
    expect_degree(x, 1)?;
    let mut out = RElem::zero();
    for (a, t) in x.terms() {
        let c = t.apply_counit(0).as_scalar().expect("arity 0");
        out.add_term(a, c);
    }
    Ok(out)
}

/// `c(u^a (x) h) = u^a (x) t^a c(h)`.
pub fn gamma_conjugate(x: &CobarElem) -> Result<CobarElem> {
    expect_degree(x, 1)?;
    let mut out = CobarElem::zero(1);
    for (a, t) in x.terms() {
        let twisted = &TensorH::from_helem(&HElem::t_pow(a)) * &t.apply_antipode(0);
        out.add_tensor(a, twisted);
    }
    Ok(out)
}

/// `Delta(u^a (x) h) = u^a (x) Delta(h)` in `R (x) H (x) H`.
pub fn gamma_coproduct(x: &CobarElem) -> Result<CobarElem> {
    expect_degree(x, 1)?;
    let mut out = CobarElem::zero(2);
    for (a, t) in x.terms() {
        out.add_tensor(a, t.apply_coproduct(0));
    }
    Ok(out)
}

/// The image of `x (x)_R y` in `R (x) H (x) H`.
pub fn gamma_tensor(x: &CobarElem, y: &CobarElem) -> Result<CobarElem> {
    expect_degree(x, 1)?;
    expect_degree(y, 1)?;
    let mut out = CobarElem::zero(2);
    for (a, h) in x.terms() {
        for (b, k) in y.terms() {
            let ht = h * &TensorH::from_helem(&HElem::t_pow(b));
            out.add_tensor(a + b, ht.outer(k));
        }
    }
    Ok(out)
}

/// `v = u (x) t`.
pub fn v_elem() -> CobarElem {
    CobarElem::from_factors(1, &[HElem::alpha(1)])
}

fn counit_on_slot(x: &CobarElem, slot: usize) -> CobarElem {
    let mut out = CobarElem::zero(x.degree() - 1);
    for (a, t) in x.terms() {
        out.add_tensor(a, t.apply_counit(slot));
    }
    out
}

fn coproduct_on_slot(x: &CobarElem, slot: usize) -> CobarElem {
    let mut out = CobarElem::zero(x.degree() + 1);
    for (a, t) in x.terms() {
        out.add_tensor(a, t.apply_coproduct(slot));
    }
    out
}

fn record(report: &mut Report, name: &str, subject: &str, lhs: String, rhs: String, ok: bool) {
    if ok {
        report.check(name, subject, true);
    } else {
        report.check_with(name, subject, false, format!("lhs = {lhs}; rhs = {rhs}"));
    }
}

/// Axioms of the algebroid on ring samples `rs` and degree-1 samples `gs`.
pub fn algebroid_axioms_verify(rs: &[RElem], gs: &[CobarElem]) -> Result<Report> {
    let mut report = Report::new("algebroid");
    for r in rs {
        let s = r.to_string();
        let l = eta_l(r);
        let rr = eta_r(r);
        let el = gamma_counit(&l)?;
        record(&mut report, "counit_eta_l", &s, el.to_string(), s.clone(), &el == r);
        let er = gamma_counit(&rr)?;
        record(&mut report, "counit_eta_r", &s, er.to_string(), s.clone(), &er == r);
        let cl = gamma_conjugate(&l)?;
        record(&mut report, "conjugate_eta_l", &s, cl.to_string(), rr.to_string(), cl == rr);
        let cr = gamma_conjugate(&rr)?;
        record(&mut report, "conjugate_eta_r", &s, cr.to_string(), l.to_string(), cr == l);
        let dl = gamma_coproduct(&l)?;
        let want = CobarElem::from_r(r, 2);
        record(&mut report, "coproduct_eta_l", &s, dl.to_string(), want.to_string(), dl == want);
    }
    for g in gs {
        expect_degree(g, 1)?;
        let s = g.to_string();
        let cc = gamma_conjugate(&gamma_conjugate(g)?)?;
        record(&mut report, "conjugate_involution", &s, cc.to_string(), s.clone(), &cc == g);
        let ec = gamma_counit(&gamma_conjugate(g)?)?;
        let e = gamma_counit(g)?;
        record(&mut report, "counit_conjugate", &s, ec.to_string(), e.to_string(), ec == e);
        let d = gamma_coproduct(g)?;
        let lhs = coproduct_on_slot(&d, 0);
        let rhs = coproduct_on_slot(&d, 1);
        record(&mut report, "coassociativity", &s, lhs.to_string(), rhs.to_string(), lhs == rhs);
        let left = counit_on_slot(&d, 0);
        record(&mut report, "counit_left", &s, left.to_string(), s.clone(), &left == g);
        let right = counit_on_slot(&d, 1);
        record(&mut report, "counit_right", &s, right.to_string(), s.clone(), &right == g);
    }
    let v = v_elem();
    let dv = gamma_coproduct(&v)?;
    let ut_t = gamma_tensor(&v, &CobarElem::from_factors(0, &[HElem::alpha(1)]))?;
    let one_v = gamma_tensor(&eta_l(&RElem::one()), &v)?;
    record(&mut report, "coproduct_v", "v = ut ox t", dv.to_string(), ut_t.to_string(), dv == ut_t);
    record(&mut report, "coproduct_v", "v = 1 ox v", dv.to_string(), one_v.to_string(), dv == one_v);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let u = RElem::u();
        let cu = gamma_conjugate(&eta_l(&u)).unwrap();
        assert_eq!(cu, v_elem());
        assert_eq!(gamma_conjugate(&cu).unwrap(), eta_l(&u));
        assert_eq!(gamma_counit(&eta_r(&u)).unwrap(), u);
        assert_eq!(
            gamma_coproduct(&eta_l(&u)).unwrap(),
            CobarElem::from_factors(1, &[HElem::one(), HElem::one()])
        );
    }

    #[test]
    fn generators_pass() {
        let rs = [RElem::u(), RElem::u_pow(-1), RElem::one()];
        let r = algebroid_axioms_verify(&rs, &[v_elem(), eta_l(&RElem::u_pow(-2))]).unwrap();
        assert!(r.passed(), "{r}");
    }
}
