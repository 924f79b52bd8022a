//! Acceptance suite: every exit criterion runs exactly as stated, prints
//! one pass/fail line, and must finish within its stated time budget.
//! Run with `cargo test -p pshcat-core --test acceptance -- --nocapture`.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use pshcat_core::heisenberg::{
    commutator_matches_as_operators, commutator_table, generator, heis_product, verify_injectivity,
    verify_phi_algebra, verify_phi_algebra_with, Generator, HeisElement,
};
use pshcat_core::hopfcat::{hopf_square, verify_deltam, verify_hopf_square, SshModel};
use pshcat_core::mutants;
use pshcat_core::partitions::{generate_partitions, Partition};
use pshcat_core::psh::{check_psh_axioms, PshAlgebra, SetMap};
use pshcat_core::symfunc::lr_coefficient;
use pshcat_core::twovect::{
    check_bc, compose_word, left_mate, right_mate, sampling, triangle_identities_hold, MateSide,
    Quintet, TwoMor,
};
use pshcat_core::wreath::{bundled_table, verify_decomposition};

fn run(
    all_ok: &mut bool,
    name: &str,
    budget_secs: u64,
    f: impl FnOnce() -> (bool, String),
) {
    let t0 = Instant::now();
    let (ok, detail) = f();
    let dt = t0.elapsed();
    let within = dt <= Duration::from_secs(budget_secs);
    let mark = if ok && within { "PASS" } else { "FAIL" };
    let mut line = format!("[{mark}] {name}: {detail} ({dt:.2?})");
    if !within {
        line.push_str(&format!(" -- exceeded the {budget_secs}s budget"));
    }
    println!("{line}");
    *all_ok &= ok && within;
}

#[test]
fn acceptance() {
    let mut ok = true;

    // 1. Exact agreement of the tableau-counting rule with the
    //    independent polynomial-expansion oracle on every triple with |λ| ≤ 8.
    run(&mut ok, "1. expansion-rule oracle equivalence, |λ| ≤ 8", 30, || {
        let vars = 8;
        let mut triples = 0u64;
        for n in 0..=8u32 {
            let lams = generate_partitions(n);
            for a in 0..=n {
                for mu in generate_partitions(a) {
                    for nu in generate_partitions(n - a) {
                        let table = common::product_in_schur_basis(&mu, &nu, vars);
                        for lam in &lams {
                            let got = BigInt::from(lr_coefficient(lam, &mu, &nu));
                            let want = table.get(lam).cloned().unwrap_or_else(BigInt::zero);
                            if got != want {
                                return (
                                    false,
                                    format!("mismatch at c^{lam:?}_{{{mu:?},{nu:?}}}: {got} vs {want}"),
                                );
                            }
                            triples += 1;
                        }
                    }
                }
            }
        }
        (true, format!("{triples} triples agree exactly"))
    });

    // 2. The axiom suite for the flagship instance at degree 8.
    run(&mut ok, "2. PSH axioms for the symmetric-function ring at D = 8", 60, || {
        let alg = PshAlgebra::lambda(8);
        let report = check_psh_axioms(&alg, 8);
        let detail = report
            .first_failure()
            .map(|c| format!("{}: {}", c.name, c.details))
            .unwrap_or_else(|| "positivity, self-adjointness, Hopf, connectedness".into());
        (report.passed(), detail)
    });

    // 3 + 4a. Straightening relation and the action being an algebra map.
    let phi_report = verify_phi_algebra(6, 3);
    run(&mut ok, "3. straightening relation on the double tensor at D = 6, |x| ≤ 3", 60, || {
        let c = phi_report
            .checks
            .iter()
            .find(|c| c.name == "straightening-relation")
            .expect("check exists");
        (c.passed, c.details.clone())
    });

    run(&mut ok, "4. action map is an injective algebra map", 60, || {
        let algebra = phi_report
            .checks
            .iter()
            .find(|c| c.name == "algebra-map")
            .expect("check exists");
        let inj = verify_injectivity(5);
        let detail = format!(
            "{}; injectivity: {}",
            algebra.details,
            inj.first_failure()
                .map(|c| format!("{}: {}", c.name, c.details))
                .unwrap_or_else(|| "full rank in every bidegree ≤ 5".into())
        );
        (algebra.passed && inj.passed(), detail)
    });

    // 5. Generator presentations: presentations 2 and 3 verified exactly
    //    in the double and as Fock operators; presentation 1 reported.
    run(&mut ok, "5. generator presentations up to index 5", 30, || {
        let t2 = commutator_table(2, 5).expect("table");
        let t3 = commutator_table(3, 5).expect("table");
        if !t2.all_match() {
            return (false, "presentation 2 table mismatch".into());
        }
        if !t3.all_match() {
            return (false, "presentation 3 table mismatch".into());
        }
        // Fock-operator verification on the common degree windows at D = 10
        let bound = 10;
        for k in 1..=5i64 {
            for l in 1..=5i64 {
                for (a, b) in [(k, -l), (-k, l), (k, l), (-k, -l)] {
                    let u = generator(Generator::C(a)).unwrap();
                    let v = generator(Generator::C(b)).unwrap();
                    let expected = if a + b == 0 {
                        HeisElement::unit().scale(&BigInt::from(a))
                    } else {
                        HeisElement::zero()
                    };
                    if !commutator_matches_as_operators(&u, &v, &expected, bound) {
                        return (false, format!("presentation 2 operators fail at ({a},{b})"));
                    }
                }
            }
        }
        for m in 1..=5u32 {
            for n in 1..=5u32 {
                let am = generator(Generator::A(m)).unwrap();
                let bn = generator(Generator::B(n)).unwrap();
                let one = HeisElement::unit();
                let am1 = if m >= 2 { generator(Generator::A(m - 1)).unwrap() } else { one.clone() };
                let bn1 = if n >= 2 { generator(Generator::B(n - 1)).unwrap() } else { one.clone() };
                let expected = heis_product(&am1, &bn1);
                if !commutator_matches_as_operators(&bn, &am, &expected, bound) {
                    return (false, format!("presentation 3 operators fail at ({m},{n})"));
                }
            }
        }
        // presentation 1: computed values reported, never asserted
        let t1 = commutator_table(1, 5).expect("table");
        if !t1.rows.iter().all(|r| r.matches.is_none()) {
            return (false, "presentation 1 must be report-only".into());
        }
        let sample = t1
            .rows
            .iter()
            .find(|r| r.lhs == "[p_2, q_2]")
            .map(|r| format!("{} = {}", r.lhs, r.computed))
            .unwrap_or_default();
        (true, format!("presentations 2 and 3 exact; presentation 1 reported, e.g. {sample}"))
    });

    // 6. The straightening square: invertible mate blocks and exact
    //    K-level agreement for every generator of size ≤ 3 at D = 6.
    run(&mut ok, "6. straightening square mates at D = 6, |F| ≤ 3", 120, || {
        let model = SshModel::new(6);
        let mut blocks = 0usize;
        for n in 0..=3u32 {
            for f in generate_partitions(n) {
                let (report, out) = match verify_deltam(&model, &f) {
                    Ok(r) => r,
                    Err(e) => return (false, format!("F = ({}): {e}", f.to_text())),
                };
                if !report.passed() {
                    let c = report.first_failure().unwrap();
                    return (false, format!("F = ({}): {}: {}", f.to_text(), c.name, c.details));
                }
                blocks += out.blocks.len();
            }
        }
        (true, format!("all mates blockwise invertible, K-levels agree ({blocks} blocks)"))
    });

    // 7. The coherence relation cubes at D = 5.
    run(&mut ok, "7. coherence relation cubes at D = 5", 60, || {
        let model = SshModel::new(5);
        let report = match verify_hopf_square(&model) {
            Ok(r) => r,
            Err(e) => return (false, e.to_string()),
        };
        let detail = report
            .first_failure()
            .map(|c| format!("{}: {}", c.name, c.details))
            .unwrap_or_else(|| {
                "Hopf square BC, both relation cubes, unit triangle".into()
            });
        (report.passed(), detail)
    });

    // 8. Mate-calculus self-consistency on 50 seeded random quintets.
    run(&mut ok, "8. mate calculus on 50 seeded quintets", 10, || {
        let mut rng = sampling::rng(0);
        let mut done = 0;
        while done < 50 {
            let q = match sampling::random_quintet(&mut rng, 3, 3) {
                Ok(q) => q,
                Err(_) => continue,
            };
            done += 1;
            for side in [&q.f[0], &q.g[0], &q.h[0], &q.i[0]] {
                if !triangle_identities_hold(side).unwrap() {
                    return (false, format!("triangle identities fail on quintet {done}"));
                }
            }
            let rm = right_mate(&q).unwrap();
            let back = left_mate(&rm).unwrap();
            if !back.alpha.same_blocks(&q.alpha) {
                return (false, format!("right-then-left round trip fails on quintet {done}"));
            }
            let lm = left_mate(&q).unwrap();
            let back = right_mate(&lm).unwrap();
            if !back.alpha.same_blocks(&q.alpha) {
                return (false, format!("left-then-right round trip fails on quintet {done}"));
            }
            let l = check_bc(&q, MateSide::Left).unwrap().ok;
            let r = check_bc(&q, MateSide::Right).unwrap().ok;
            if l != r {
                return (false, format!("left/right verdicts disagree on quintet {done}"));
            }
        }
        (true, "triangles, round trips and verdict agreement on all 50".into())
    });

    // 9. Wreath decomposition shadow for the bundled tables at D = 4.
    run(&mut ok, "9. wreath decomposition shadow at D = 4", 30, || {
        for name in ["trivial", "z2", "s3"] {
            let table = bundled_table(name).expect("bundled");
            let report = verify_decomposition(&table, 4).expect("runs");
            if !report.passed() {
                let c = report.first_failure().unwrap();
                return (false, format!("{name}: {}: {}", c.name, c.details));
            }
        }
        (true, "axioms pass and primitive ranks equal |Irr G| in degrees 1..4".into())
    });

    // 10. Fault detection: each seeded mutant is caught with a witness.
    run(&mut ok, "10. seeded fault detection", 30, || {
        // negated structure constant
        let bad = mutants::lambda_with_negated_constant(4);
        let report = check_psh_axioms(&bad, 4);
        let Some(first) = report.first_failure() else {
            return (false, "negated constant not caught".into());
        };
        if first.name != "positivity" || !first.details.contains('·') {
            return (false, format!("unexpected witness: {}", first.details));
        }
        let w1 = first.details.clone();

        // swapped Sweedler leg in the straightening rule
        let report = verify_phi_algebra_with(4, 1, mutants::heis_product_swapped_legs);
        let Some(first) = report.first_failure() else {
            return (false, "swapped Sweedler leg not caught".into());
        };
        if !first.details.contains("fails at") {
            return (false, format!("unexpected witness: {}", first.details));
        }
        let w2 = first.details.clone();

        // perturbed expansion entry in the based model
        let model = SshModel::new(3);
        let q = hopf_square(&model).expect("square");
        let mut bad_top = q.g[0].clone();
        mutants::perturb_entry(&mut bad_top.mult, 1, 1);
        let m = q.h[0].clone();
        let a_cat = bad_top.source.clone();
        let top = compose_word(&a_cat, &[&bad_top, &m]).unwrap();
        let bot = compose_word(&a_cat, &[&q.f[0], &m]).unwrap();
        let alpha = TwoMor::positional(&top, &bot).unwrap();
        let bad_q =
            Quintet::from_atoms(q.f[0].clone(), bad_top, m.clone(), m, alpha).unwrap();
        let out = check_bc(&bad_q, MateSide::Left).unwrap();
        if out.ok {
            return (false, "perturbed entry not caught".into());
        }
        let w3 = out.witness.unwrap_or_default();
        (true, format!("witnesses: [{w1}]; [{w2}]; [{w3}]"))
    });

    assert!(ok, "acceptance suite failed; see the lines above");
}
