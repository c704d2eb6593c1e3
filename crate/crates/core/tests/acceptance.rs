//! Acceptance criteria. Prints one line per criterion and exits non-zero if any fails.

mod support;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use binomial_cobar::arith::{factorial, int, Rat};
use binomial_cobar::cobar::{
    codegeneracy, coface, cosimplicial_identities_verify, fuzz_identities, h0_primitives, CobarComplex, CobarElem,
    RElem, CODEGENERACY_CODEGENERACY, COFACE_COFACE, MIXED_ABOVE, MIXED_BELOW, MIXED_IDENTITY,
};
use binomial_cobar::fgl::{
    adams_a1jk_check, b_operator, mult_coeff_closed_form, mult_law, normal_form_targets, power_coeff,
    telescope_colimit_map, telescope_preimage,
};
use binomial_cobar::hopf::{antipode, hopf_axioms_verify, HElem};
use binomial_cobar::modl::{hq_basis_check, lemma_mb_check, prime_power};
use binomial_cobar::numpoly::{alpha_mul, alpha_product, NumPoly};
use binomial_cobar::sample::{random_beta, random_cobar, random_helem, random_numpoly, random_relem, trial_rng};
use num_traits::{One, Zero};
use rand::Rng;
use support::{alpha_product_oracle, binom_q, h_value, mult_law_power, QPoly};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn dense(a: &NumPoly) -> QPoly {
    let mut acc = QPoly(vec![]);
    for (n, c) in a.terms() {
        let b = QPoly::binomial(n);
        if acc.0.len() < b.0.len() {
            acc.0.resize(b.0.len(), Rat::zero());
        }
        for (d, x) in b.0.iter().enumerate() {
            acc.0[d] += x * Rat::from_integer(c.clone());
        }
    }
    acc.trim()
}

fn structure_constants() -> Outcome {
    let start = Instant::now();
    for i in 0..=20 {
        for j in 0..=20 {
            let got: Vec<_> = alpha_product(i, j).into_iter().filter(|(_, c)| !c.is_zero()).collect();
            let want: Vec<_> = alpha_product_oracle(i, j).into_iter().collect();
            ensure(got == want, || format!("alpha_{i} * alpha_{j}"))?;
        }
    }
    for t in 0..500 {
        let mut rng = trial_rng(1, t);
        let a = random_numpoly(&mut rng, 8);
        let b = random_numpoly(&mut rng, 8);
        ensure(dense(&alpha_mul(&a, &b)) == dense(&a).mul(&dense(&b)), || format!("({a}) * ({b})"))?;
    }
    within(start.elapsed(), Duration::from_secs(5))
}

fn hq_basis() -> Outcome {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
        let start = Instant::now();
        let (l, nu) = prime_power(q).ok_or(format!("{q} is not a prime power"))?;
        let r = hq_basis_check(l, nu).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("q={q}: {r}"))?;
        within(start.elapsed(), Duration::from_secs(1)).map_err(|e| format!("q={q}: {e}"))?;
    }
    Ok(())
}

fn lemma_mb() -> Outcome {
    for l in [2u64, 3, 5, 7] {
        for nu in 1..=3 {
            for k in 0..=5 {
                let r = lemma_mb_check(l, nu, k).map_err(|e| e.to_string())?;
                ensure(r.passed(), || format!("{r}"))?;
            }
        }
    }
    Ok(())
}

fn hopf_axioms() -> Outcome {
    let start = Instant::now();
    let mut samples: Vec<HElem> = (0..=10).map(HElem::alpha).collect();
    samples.extend((0..200).map(|t| random_helem(&mut trial_rng(4, t))));
    let r = hopf_axioms_verify(&samples);
    ensure(r.passed(), || format!("{} failures, first {:?}", r.failures().count(), r.failures().next()))?;
    within(start.elapsed(), Duration::from_secs(30))
}

fn antipode_values() -> Outcome {
    ensure(antipode(&HElem::t_pow(1)) == HElem::t_pow(-1), || "c(t) != 1/t".into())?;
    let c2 = antipode(&HElem::alpha(2));
    let want = HElem::new(3, NumPoly::term(2, int(-1)));
    ensure(c2 == want, || format!("c(alpha_2) = {c2}"))?;
    for x in [2, 3, 6] {
        let x = Rat::from_integer(int(x));
        let inv = Rat::one() / &x;
        ensure(h_value(&c2, &x) == binom_q(&inv, 2), || format!("c(alpha_2) at {x}"))?;
        ensure(h_value(&want, &x) == binom_q(&inv, 2), || format!("-t^-3 alpha_2 at {x}"))?;
    }
    Ok(())
}

fn closed_form() -> Outcome {
    let start = Instant::now();
    let law = mult_law(25);
    for k in 0..=12 {
        let oracle = mult_law_power(k);
        for i in 0..=12 {
            for j in 0..=12 {
                let closed = mult_coeff_closed_form(k, i, j);
                let table = power_coeff(&law, k, i, j).map_err(|e| e.to_string())?;
                let expanded = RElem::from_terms(
                    oracle
                        .iter()
                        .filter(|((a, b, _), _)| (*a, *b) == (i, j))
                        .map(|((_, _, e), c)| (*e as i64, c.clone())),
                );
                ensure(closed == table && closed == expanded, || format!("k={k} i={i} j={j}: {closed} vs {table}"))?;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(10))
}

fn adams() -> Outcome {
    for d in 2..=6 {
        let r = adams_a1jk_check(d).map_err(|e| e.to_string())?;
        ensure(r.passed() && r.count() > 0, || format!("{r}"))?;
    }
    Ok(())
}

fn cosimplicial_fuzz() -> Outcome {
    let start = Instant::now();
    let tally = fuzz_identities(&CobarComplex, random_cobar, 3, 200, 8);
    for id in [COFACE_COFACE, CODEGENERACY_CODEGENERACY, MIXED_BELOW, MIXED_IDENTITY, MIXED_ABOVE] {
        ensure(tally.count(id) >= 200, || format!("{id}: only {} instances", tally.count(id)))?;
    }
    ensure(tally.failure_count() == 0, || format!("{} identity failures", tally.failure_count()))?;
    let r = cosimplicial_identities_verify(3, 200, 8).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("{r}"))?;
    ensure(r.facts.get("d_squared.instances").and_then(|v| v.as_u64()) == Some(800), || "d o d count".into())?;
    within(start.elapsed(), Duration::from_secs(60))
}

fn counit_vanishing() -> Outcome {
    for n in 2..=8 {
        let falling = HElem::from_f(NumPoly::term(n, factorial(n)));
        let x = CobarElem::from_factors(0, &[falling]);
        let s = codegeneracy(0, &x).map_err(|e| e.to_string())?;
        ensure(s.is_zero(), || format!("n={n}: {s}"))?;
    }
    for t in 0..100 {
        let x = CobarElem::from_r(&random_relem(&mut trial_rng(9, t)), 0);
        for i in 0..=1 {
            let back = coface(i, &x).and_then(|y| codegeneracy(0, &y)).map_err(|e| e.to_string())?;
            ensure(back == x, || format!("s0 d{i} on {x}"))?;
        }
    }
    Ok(())
}

fn primitives() -> Outcome {
    for b in 0..=6 {
        let basis = h0_primitives(b);
        ensure(basis == vec![RElem::one()], || format!("bound {b}: {basis:?}"))?;
    }
    Ok(())
}

fn telescope() -> Outcome {
    for t in 0..200 {
        let mut rng = trial_rng(11, t);
        let j = rng.gen_range(0..=5);
        let x = random_beta(&mut rng);
        ensure(
            telescope_colimit_map(j, &x) == telescope_colimit_map(j + 1, &b_operator(&x)),
            || format!("j={j} x={x}"),
        )?;
    }
    let targets = normal_form_targets();
    ensure(targets.len() == 10, || format!("{} targets", targets.len()))?;
    for y in targets {
        let (j, x) = telescope_preimage(&y).map_err(|e| e.to_string())?;
        ensure(telescope_colimit_map(j, &x) == y, || format!("target {y}"))?;
    }
    Ok(())
}

fn mod_two() -> Outcome {
    let two = int(2);
    for n in 0..=64 {
        let a = NumPoly::alpha(n);
        ensure(alpha_mul(&a, &a).reduce_mod(&two) == a, || format!("alpha_{n}^2"))?;
    }
    for r in 1..=4u32 {
        let top = NumPoly::alpha((1 << r) - 1);
        for m in 0..(1usize << r) {
            let p = alpha_mul(&NumPoly::alpha(m), &top).reduce_mod(&two);
            ensure(p == top, || format!("alpha_{m} alpha_{}", (1 << r) - 1))?;
        }
    }
    Ok(())
}

fn cli_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_binomial-cobar");
    let runs: Vec<_> = (0..2)
        .map(|_| {
            Command::new(bin)
                .args(["verify", "all", "--seed", "7", "--trials", "100"])
                .env_remove("BINOMIAL_COBAR_SEED")
                .output()
                .map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()?;
    for (k, out) in runs.iter().enumerate() {
        ensure(out.status.code() == Some(0), || {
            format!("run {k} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout))
        })?;
    }
    ensure(runs[0].stdout == runs[1].stdout, || "outputs differ".into())?;
    let v: serde_json::Value = serde_json::from_slice(&runs[0].stdout).map_err(|e| e.to_string())?;
    ensure(v["pass"] == true, || "pass flag is false".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("structure constants against re-expansion oracle", structure_constants),
        ("mod-q basis of H", hq_basis),
        ("b_k lemma", lemma_mb),
        ("Hopf axioms on H", hopf_axioms),
        ("antipode spot values", antipode_values),
        ("multinomial closed form", closed_form),
        ("Adams relation on the generic law", adams),
        ("cosimplicial identity fuzz and d o d = 0", cosimplicial_fuzz),
        ("counit vanishing and s0 sections", counit_vanishing),
        ("degree-zero primitives", primitives),
        ("telescope compatibility and targets", telescope),
        ("mod-2 idempotents and absorption", mod_two),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS {name} ({elapsed:.2?})", n + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({elapsed:.2?}): {e}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
