//! Seeded verification suites behind `verify`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::json::report_summary;
use crate::arith::{factorial, Int, LaurentPoly};
use crate::cobar::{
    algebroid_axioms_verify, codegeneracy, coface, cosimplicial_identities_verify, dual_path_space_verify,
    f_identities_verify, h0_primitives, CobarElem, GradingDegree, RElem,
};
use crate::error::Result;
use crate::fgl::{
    adams_a1jk_check, b_matrix_entry, b_operator, mult_coeff_closed_form, mult_law, normal_form_targets,
    telescope_colimit_map, telescope_preimage, BetaVec,
};
use crate::hopf::{antipode, check_axiom, counit, h_from_laurent, evaluation_criterion, HElem, HopfAxiom};
use crate::modl::{
    eventual_localization, hq_basis_check, lemma_mb_check, prime_power, t_matrix, ModMatrix,
};
use crate::numpoly::{alpha_mul, alpha_product, from_monomial, is_numerical, to_monomial, NumPoly};
use crate::report::Report;
use crate::sample::{
    random_beta, random_cobar, random_helem, random_laurent, random_numpoly, random_relem, trial_rng, MAX_U,
};

/// Suite names accepted by `verify`.
pub const SUITES: [&str; 5] = ["numpoly", "hopf", "modl", "cobar", "fgl"];

/// Moduli covered by the mod-`q` basis check.
pub const HQ_MODULI: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27];

/// Runs `f` once per trial in parallel and concatenates the reports in trial order.
fn par_trials<F>(title: &str, trials: u64, seed: u64, f: F) -> Report
where
    F: Fn(u64, &mut ChaCha8Rng, &mut Report) + Sync,
{
    let parts: Vec<Report> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let mut r = Report::new(title);
            f(t, &mut rng, &mut r);
            r
        })
        .collect();
    let mut out = Report::new(title);
    for p in parts {
        out.checks.extend(p.checks);
    }
    out
}

fn oracle_product(a: &NumPoly, b: &NumPoly) -> NumPoly {
    from_monomial(&(&to_monomial(a) * &to_monomial(b))).expect("products of numerical polynomials are numerical")
}

pub fn verify_numpoly(seed: u64, trials: u64) -> Report {
    let mut report = par_trials("numpoly", trials, seed, |_, rng, r| {
        let (i, j) = (rng.gen_range(0..=20), rng.gen_range(0..=20));
        let (ai, aj) = (NumPoly::alpha(i), NumPoly::alpha(j));
        let ok = NumPoly::from_terms(alpha_product(i, j)) == oracle_product(&ai, &aj);
        r.check("alpha_product_oracle", format!("i={i} j={j}"), ok);
        let a = random_numpoly(rng, 8);
        let b = random_numpoly(rng, 8);
        let ab = alpha_mul(&a, &b);
        r.check("product_oracle", format!("{a} ; {b}"), ab == oracle_product(&a, &b));
        let evals = (-3..=5).all(|x| ab.eval_at(x) == a.eval_at(x) * b.eval_at(x));
        r.check("evaluation_multiplicative", format!("{a} ; {b}"), evals);
        r.check("t_divide_t_apply", a.to_string(), a.t_apply().t_divide().as_ref() == Some(&a));
    });
    let two = Int::from(2);
    for n in 0..=64 {
        let sq = alpha_mul(&NumPoly::alpha(n), &NumPoly::alpha(n)).reduce_mod(&two);
        report.check("mod2_idempotent", format!("n={n}"), sq == NumPoly::alpha(n));
    }
    for r in 1..=4u32 {
        let top = (1usize << r) - 1;
        for m in 0..=top {
            let p = alpha_mul(&NumPoly::alpha(m), &NumPoly::alpha(top)).reduce_mod(&two);
            report.check("mod2_absorption", format!("m={m} r={r}"), p == NumPoly::alpha(top));
        }
    }
    report
}

/// `t^k p` for `k >= 0`.
fn times_t(p: &LaurentPoly, k: usize) -> LaurentPoly {
    p.shift(k as i64)
}

pub fn verify_hopf(seed: u64, trials: u64) -> Report {
    let mut report = Report::new("hopf");
    for n in 0..=10 {
        let a = HElem::alpha(n);
        let b = HElem::alpha((n + 1) % 11);
        for axiom in HopfAxiom::ALL {
            let res = check_axiom(axiom, &a, &b);
            report.check_with(axiom.name(), a.to_string(), res.is_ok(), res.err().unwrap_or_default());
        }
    }
    let random = par_trials("hopf", trials, seed, |_, rng, r| {
        let a = random_helem(rng);
        let b = random_helem(rng);
        for axiom in HopfAxiom::ALL {
            match check_axiom(axiom, &a, &b) {
                Ok(()) => r.check(axiom.name(), a.to_string(), true),
                Err(d) => r.check_with(axiom.name(), a.to_string(), false, d),
            }
        }
        let lp = a.to_laurent();
        r.check("laurent_round_trip", a.to_string(), h_from_laurent(&lp).as_ref() == Ok(&a));
        let j = a.shift();
        let sound = is_numerical(&times_t(&lp, j)) && (j == 0 || !is_numerical(&times_t(&lp, j - 1)));
        r.check("canonical_form", a.to_string(), sound);
        r.check("antipode_involution", a.to_string(), antipode(&antipode(&a)) == a);
        r.check("counit_multiplicative", format!("{a} ; {b}"), counit(&(&a * &b)) == counit(&a) * counit(&b));
        let p = random_laurent(rng);
        let decided = h_from_laurent(&p).is_ok();
        let criterion = evaluation_criterion(&p, 50);
        r.check_with(
            "membership_agrees_with_criterion",
            p.to_string(),
            decided == criterion,
            format!("decision {decided}, criterion {criterion}"),
        );
    });
    report.checks.extend(random.checks);
    report
}

fn random_endo(rng: &mut ChaCha8Rng) -> ModMatrix {
    const MODULI: [u64; 7] = [2, 3, 4, 5, 8, 9, 27];
    let q = MODULI[rng.gen_range(0..MODULI.len())];
    let d = rng.gen_range(1..=4);
    let cols: Vec<Vec<i64>> = (0..d)
        .map(|_| (0..d).map(|_| rng.gen_range(0..q as i64)).collect())
        .collect();
    ModMatrix::from_columns(q, d, &cols)
}

pub fn verify_modl(seed: u64, trials: u64) -> Report {
    let mut report = Report::new("modl");
    for q in HQ_MODULI {
        let (l, nu) = prime_power(q).expect("prime powers");
        match hq_basis_check(l, nu) {
            Ok(r) => report.extend(r),
            Err(e) => report.check_with("hq_basis", format!("q={q}"), false, e.to_string()),
        }
    }
    for l in [2, 3, 5, 7] {
        for nu in 1..=3 {
            for k in 0..=5 {
                match lemma_mb_check(l, nu, k) {
                    Ok(r) => report.checks.extend(r.checks),
                    Err(e) => report.check_with("lemma_mb", format!("l={l} nu={nu} k={k}"), false, e.to_string()),
                }
            }
        }
    }
    for q in HQ_MODULI {
        let q2 = t_matrix(q, 2 * q as usize);
        let n = q as usize;
        let diagonal = q2.block(0, 0, n, n) == q2.block(n, n, n, n);
        let off = q2.block(0, n, n, n).is_zero() && q2.block(n, 0, n, n).is_zero();
        report.check("block_decomposition", format!("q={q}"), diagonal && off);
    }
    let random = par_trials("modl", trials, seed, |_, rng, r| {
        let m = random_endo(rng);
        let subject = format!("{m}").replace('\n', " ");
        let Ok(loc) = eventual_localization(&m) else {
            r.check("localization", subject, false);
            return;
        };
        let inv_ok = loc.rank() == 0
            || loc
                .action()
                .inverse()
                .is_some_and(|inv| loc.action().try_mul(&inv).is_ok_and(|p| p.is_identity()));
        r.check("action_invertible", subject.clone(), inv_ok);
        let idem = eventual_localization(loc.action())
            .is_ok_and(|again| again.rank() == loc.rank() && again.action() == loc.action());
        r.check("localization_idempotent", subject.clone(), loc.rank() == 0 || idem);
        let d = m.rows();
        let commutes = (0..d).all(|i| {
            let mut e = vec![0; d];
            e[i] = 1;
            loc.class_of(&m.apply(&e)) == loc.action().apply(&loc.class_of(&e))
        });
        r.check("canonical_map_equivariant", subject, commutes);
    });
    report.checks.extend(random.checks);
    report
}

fn homogeneous_cobar(rng: &mut ChaCha8Rng, degree: usize) -> CobarElem {
    let x = random_cobar(rng, degree);
    let a = rng.gen_range(-MAX_U..=MAX_U);
    let mut out = CobarElem::zero(degree);
    for (_, t) in x.terms() {
        out.add_tensor(a, t.clone());
    }
    out
}

pub fn verify_cobar(seed: u64, trials: u64) -> Result<Report> {
    let mut report = Report::new("cobar");
    report.checks.extend(cosimplicial_identities_verify(3, trials, seed)?.checks);
    report.checks.extend(f_identities_verify(3, trials, seed ^ 0xF).checks);
    report.checks.extend(dual_path_space_verify(2, trials, seed ^ 0xD).checks);
    let mut gs: Vec<CobarElem> = (0..trials).map(|t| random_cobar(&mut trial_rng(seed ^ 0xA, t), 1)).collect();
    gs.push(crate::cobar::v_elem());
    let rs = [RElem::u(), RElem::u_pow(-1), RElem::one()];
    report.checks.extend(algebroid_axioms_verify(&rs, &gs)?.checks);
    for b in 1..=6 {
        let basis = h0_primitives(b);
        report.check_with(
            "h0_primitives",
            format!("bound={b}"),
            basis == vec![RElem::one()],
            format!("rank {}", basis.len()),
        );
    }
    for n in 2..=8 {
        for a in -MAX_U..=MAX_U {
            let h = HElem::from_f(NumPoly::term(n, factorial(n)));
            let x = CobarElem::from_factors(a, &[h]);
            let s = codegeneracy(0, &x).expect("degree 1");
            report.check("counit_vanishing", format!("n={n} a={a}"), s.is_zero());
        }
    }
    let random = par_trials("cobar", trials, seed ^ 0xB, |_, rng, r| {
        let x = CobarElem::from_r(&random_relem(rng), 0);
        for i in 0..=1 {
            let back = coface(i, &x).and_then(|y| codegeneracy(0, &y));
            r.check(format!("s0_d{i}_identity"), x.to_string(), back.as_ref() == Ok(&x));
        }
        for degree in 0..=2 {
            let y = homogeneous_cobar(rng, degree);
            let g = y.grading_degree();
            let mut ok = true;
            for i in 0..=degree + 1 {
                let z = coface(i, &y).expect("in range");
                ok &= z.is_zero() || z.grading_degree() == g || g == GradingDegree::Zero;
            }
            for i in 0..degree {
                let z = codegeneracy(i, &y).expect("in range");
                ok &= z.is_zero() || z.grading_degree() == g || g == GradingDegree::Zero;
            }
            r.check("grading_preserved", y.to_string(), ok);
        }
    });
    report.checks.extend(random.checks);
    Ok(report)
}

pub fn verify_fgl(seed: u64, trials: u64) -> Result<Report> {
    let mut report = Report::new("fgl");
    let law = mult_law(25);
    let closed: Vec<Report> = (0..=12usize)
        .into_par_iter()
        .map(|k| {
            let mut r = Report::new("fgl");
            let table = law.power_table(k, 12, 12);
            for (i, row) in table.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    r.check("closed_form", format!("k={k} i={i} j={j}"), *c == mult_coeff_closed_form(k, i, j));
                }
            }
            r
        })
        .collect();
    for r in closed {
        report.checks.extend(r.checks);
    }
    for i in 0..=10usize {
        for j in 0..=10usize {
            let prod = alpha_mul(&NumPoly::alpha(i), &NumPoly::alpha(j));
            let ok = (i.max(j)..=i + j).all(|k| {
                let want = RElem::monomial(i as i64 + j as i64 - k as i64, prod.coeff(k));
                mult_coeff_closed_form(k, i, j) == want
            });
            report.check("beta_transport", format!("i={i} j={j}"), ok);
        }
    }
    for d in 2..=6 {
        report.checks.extend(adams_a1jk_check(d)?.checks);
    }
    for j in 0..=6 {
        let b = b_operator(&BetaVec::basis(j));
        let ok = (0..=8).all(|k| b.coeff(k) == b_matrix_entry(j, k, &law));
        report.check("b_matrix", format!("j={j}"), ok);
    }
    for y in normal_form_targets() {
        let hit = telescope_preimage(&y).is_ok_and(|(j, x)| telescope_colimit_map(j, &x) == y);
        report.check("telescope_target", y.to_string(), hit);
    }
    let random = par_trials("fgl", trials, seed, |_, rng, r| {
        let j = rng.gen_range(0..=4);
        let x = random_beta(rng);
        let lhs = telescope_colimit_map(j, &x);
        let rhs = telescope_colimit_map(j + 1, &b_operator(&x));
        r.check("telescope_compatible", format!("j={j} x={x}"), lhs == rhs);
        let y = CobarElem::term(rng.gen_range(-MAX_U..=MAX_U), crate::hopf::TensorH::from_helem(&random_helem(rng)));
        let hit = telescope_preimage(&y).is_ok_and(|(j, x)| telescope_colimit_map(j, &x) == y);
        r.check("telescope_surjective", y.to_string(), hit);
        let h = random_helem(rng);
        r.check("rational_sanity", h.to_string(), h_from_laurent(&h.to_laurent()).as_ref() == Ok(&h));
    });
    report.checks.extend(random.checks);
    Ok(report)
}

/// Runs the named suite (or `all`) and returns the JSON summary and pass flag.
pub fn run_verify(suite: &str, seed: u64, trials: u64) -> Result<(bool, Value)> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut suites = serde_json::Map::new();
    let mut pass = true;
    for name in names {
        let report = match name {
            "numpoly" => verify_numpoly(seed, trials),
            "hopf" => verify_hopf(seed, trials),
            "modl" => verify_modl(seed, trials),
            "cobar" => verify_cobar(seed, trials)?,
            "fgl" => verify_fgl(seed, trials)?,
            other => {
                return Err(crate::error::Error::InvalidArgument(format!("unknown suite {other}")));
            }
        };
        pass &= report.passed();
        suites.insert(name.to_string(), report_summary(&report));
    }
    Ok((pass, json!({ "pass": pass, "seed": seed, "suites": suites, "trials": trials })))
}
