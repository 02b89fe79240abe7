//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each, and
//! exits nonzero if any criterion fails.
//!
//! Set `LEIBNIZ_BLESS=1` to rewrite the mutation golden file.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use common::*;
use leibniz_core::conjugacy::{inner_derivation, invariance_check, is_derivation, non_conjugacy_certificate};
use leibniz_core::constructions::{counterexample, lie_semidirect_sum, sl2_irreducible_module, CATALOG};
use leibniz_core::exactlin::{format_scalar, int, ratio, Subspace};
use leibniz_core::levi::{leibniz_levi, lie_levi, verify_levi, ModuleAction};
use leibniz_core::structure::{leibniz_kernel, soluble_radical};
use leibniz_core::LeibnizAlgebra;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("{what} took {:.3}s, limit {:.0}s", elapsed.as_secs_f64(), limit.as_secs_f64()),
    )
}

/// 1. Kernel, radical and identity check on the sl2 bundle, under one second.
fn example_reproduction() -> Outcome {
    let start = Instant::now();
    let b = counterexample("sl2").map_err(|e| e.to_string())?;
    let kernel = leibniz_kernel(&b.algebra);
    let radical = soluble_radical(&b.algebra).map_err(|e| e.to_string())?;
    let report = b.algebra.check_left_leibniz();
    let elapsed = start.elapsed();
    ensure(b.algebra.dim() == 6, "bundle dimension is not 6")?;
    ensure(kernel == b.kernel && kernel.dim() == 3, "Leibniz kernel differs from K")?;
    ensure(radical == b.kernel, "soluble radical differs from K")?;
    ensure(report.is_empty(), format!("{} identity violations", report.len()))?;
    within(elapsed, Duration::from_secs(1), "sl2 bundle analysis")?;
    Ok(format!("Leib(L) = K (dim 3), R = K, identity holds, {:.3}s", elapsed.as_secs_f64()))
}

/// 2. Levi decomposition of the sl2 and sl3 bundles.
fn theorem_reproduction() -> Outcome {
    let b = counterexample("sl2").map_err(|e| e.to_string())?;
    let d = leibniz_levi(&b.algebra).map_err(|e| e.to_string())?;
    ensure(d.semisimple_part.dim() == 3, "sl2 bundle: S is not 3-dimensional")?;
    ensure(d.witnesses.all_pass(), "sl2 bundle: witnesses fail")?;

    let start = Instant::now();
    let b3 = counterexample("sl3").map_err(|e| e.to_string())?;
    let d3 = leibniz_levi(&b3.algebra).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(b3.algebra.dim() == 16, "sl3 bundle dimension is not 16")?;
    ensure(d3.semisimple_part.dim() == 8, "sl3 bundle: S is not 8-dimensional")?;
    ensure(d3.radical == b3.kernel, "sl3 bundle: radical differs from K")?;
    ensure(d3.witnesses.all_pass(), "sl3 bundle: witnesses fail")?;
    within(elapsed, Duration::from_secs(30), "sl3 bundle decomposition")?;
    Ok(format!("sl2: dim S = 3; sl3: dim S = 8 in {:.3}s; all witnesses pass", elapsed.as_secs_f64()))
}

/// 3. Five distinct complements `S_lambda`.
fn complement_multiplicity() -> Outcome {
    let b = counterexample("sl2").map_err(|e| e.to_string())?;
    for (name, u) in [("S", &b.s), ("S1", &b.s1)] {
        let w = verify_levi(&b.algebra, u).map_err(|e| e.to_string())?;
        ensure(w.all_pass(), format!("{name} fails verify_levi"))?;
    }
    let lambdas = [int(0), int(1), int(2), int(-1), ratio(1, 2)];
    let subspaces: Vec<Subspace> = lambdas.iter().map(|l| b.diagonal_complement(l)).collect();
    for (l, u) in lambdas.iter().zip(&subspaces) {
        let w = verify_levi(&b.algebra, u).map_err(|e| e.to_string())?;
        ensure(w.all_pass(), format!("S_{} fails verify_levi", format_scalar(l)))?;
    }
    ensure(subspaces[0] == b.s && subspaces[1] == b.s1, "S_0 != S or S_1 != S1")?;
    for i in 0..subspaces.len() {
        for j in i + 1..subspaces.len() {
            ensure(subspaces[i] != subspaces[j], format!("S_lambda {i} and {j} coincide"))?;
        }
    }
    Ok("S, S1 and S_lambda for lambda in {0, 1, 2, -1, 1/2}: 5 distinct complements".into())
}

/// 4. Non-conjugacy certificate for (S, S1).
fn non_conjugacy() -> Outcome {
    let b = counterexample("sl2").map_err(|e| e.to_string())?;
    let inv = invariance_check(&b.algebra, &b.s).map_err(|e| e.to_string())?;
    ensure(inv.all_pass() && inv.passed() == 6, "d_x(S) ⊆ S fails")?;
    let cert = non_conjugacy_certificate(&b.algebra, &b.s, &b.s1).map_err(|e| e.to_string())?;
    ensure(!cert.exp_checks.is_empty(), "no nilpotent generators")?;
    ensure(
        cert.exp_checks.iter().all(|c| c.automorphism && c.preserves),
        "an exponential fails to preserve S",
    )?;
    let gens: Vec<&str> = cert
        .exp_checks
        .iter()
        .map(|c| b.algebra.labels()[c.generator].as_str())
        .collect();
    ensure(gens == ["e", "f"], format!("unexpected nilpotent generators {gens:?}"))?;
    ensure(b.s1.contains(&cert.distinctness).unwrap() && !b.s.contains(&cert.distinctness).unwrap(), "bad distinctness witness")?;
    ensure(cert.check(&b.algebra).map_err(|e| e.to_string())?, "certificate does not re-check")?;
    Ok(format!("6/6 invariance rows, exp checks at {gens:?}, witness (e, e')"))
}

/// 5. Random squares span the kernel (seed 0).
fn kernel_oracle() -> Outcome {
    let b = counterexample("sl2").map_err(|e| e.to_string())?;
    let kernel = leibniz_kernel(&b.algebra);
    let mut rng = rng(0);
    let squares: Vec<_> = (0..100)
        .map(|_| {
            let x = random_vector(&mut rng, 6);
            b.algebra.product(&x, &x).unwrap()
        })
        .collect();
    for (t, sq) in squares.iter().enumerate() {
        ensure(kernel.contains(sq).unwrap(), format!("square {t} is outside the kernel"))?;
    }
    let span = Subspace::span(6, &squares[..18]);
    ensure(span == kernel, format!("span of 18 squares has dim {}, kernel dim {}", span.dim(), kernel.dim()))?;
    Ok("span of 18 seeded squares = Leib(L); 100/100 squares in Leib(L)".into())
}

/// 6. Lie Levi on gl2 and on five seeded sl2 ⋉ (2-dim module) algebras in random bases.
fn general_position_lie_levi() -> Outcome {
    let mut rng = rng(6);
    let g = gl2();
    let g = g.change_basis(&random_invertible(&mut rng, 4)).map_err(|e| e.to_string())?;
    let s = lie_levi(&g).map_err(|e| e.to_string())?;
    ensure(s.dim() == 3, "gl2: complement is not 3-dimensional")?;
    ensure(verify_levi(&g, &s).map_err(|e| e.to_string())?.all_pass(), "gl2: witnesses fail")?;

    let mut kinds = Vec::new();
    for i in 0..5 {
        let module = if rng.random_bool(0.5) {
            kinds.push("V1");
            sl2_irreducible_module(1)
        } else {
            kinds.push("2V0");
            ModuleAction::trivial(3, 2)
        };
        let a = lie_semidirect_sum(&sl2(), &module).map_err(|e| e.to_string())?;
        let a: LeibnizAlgebra = a.change_basis(&random_invertible(&mut rng, 5)).map_err(|e| e.to_string())?;
        let s = lie_levi(&a).map_err(|e| e.to_string())?;
        let w = verify_levi(&a, &s).map_err(|e| e.to_string())?;
        ensure(s.dim() == 3 && w.all_pass(), format!("instance {i} fails"))?;
    }
    Ok(format!("gl2 and 5 instances {kinds:?} pass verify_levi exactly"))
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/sl2_mutations_seed0.txt")
}

/// 7. 50 single-entry mutations of sl2.
fn mutation_sensitivity() -> Outcome {
    let sl2 = sl2();
    let mut rng = rng(0);
    let mut log = String::new();
    let mut flagged = 0;
    for t in 0..50 {
        let idx = rng.random_range(0..27);
        let (i, j, k) = (idx / 9, (idx / 3) % 3, idx % 3);
        let delta = loop {
            let d: i64 = rng.random_range(-3..=3);
            if d != 0 {
                break d;
            }
        };
        let mut table = sl2.table().clone();
        let old = table.get(i, j, k).clone();
        let new = &old + int(delta);
        table.set(i, j, k, new.clone());
        let mutated = LeibnizAlgebra::new_unchecked(sl2.labels().to_vec(), table.clone()).unwrap();
        let report = mutated.check_left_leibniz();
        let oracle_ok = brute_force_is_leibniz(&table);
        ensure(report.is_empty() == oracle_ok, format!("mutation {t}: report disagrees with oracle"))?;
        let verdict = match report.first() {
            Some(v) => {
                ensure(v.lhs != v.rhs, format!("mutation {t}: violation with equal sides"))?;
                flagged += 1;
                format!("flagged ({}, {}, {})", v.a, v.b, v.c)
            }
            None => format!("pass lie={}", mutated.is_lie()),
        };
        log.push_str(&format!(
            "{t:02} c[{i}][{j}][{k}] {} -> {} {verdict}\n",
            format_scalar(&old),
            format_scalar(&new)
        ));
    }
    log.push_str(&format!("flagged {flagged}/50\n"));

    let path = golden_path();
    if std::env::var_os("LEIBNIZ_BLESS").is_some() || !path.exists() {
        std::fs::write(&path, &log).map_err(|e| e.to_string())?;
    }
    let golden = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
    ensure(golden == log, "mutation log differs from the golden file")?;
    ensure(flagged >= 45, format!("only {flagged}/50 mutations flagged"))?;
    Ok(format!("{flagged}/50 mutations flagged with a violating triple; matches golden file"))
}

/// 8. Inner derivations are derivations in every catalog bundle.
fn derivation_property() -> Outcome {
    let mut rng = rng(8);
    let mut summary = Vec::new();
    for name in CATALOG {
        let b = counterexample(name).map_err(|e| e.to_string())?;
        let n = b.algebra.dim();
        for t in 0..100 {
            let x = random_vector(&mut rng, n);
            let d = inner_derivation(&b.algebra, &x).map_err(|e| e.to_string())?;
            ensure(is_derivation(&b.algebra, &d).map_err(|e| e.to_string())?, format!("{name}: trial {t} fails"))?;
        }
        summary.push(format!("{name} 100/100"));
    }
    Ok(summary.join(", "))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 example reproduction", example_reproduction),
        ("2 theorem reproduction", theorem_reproduction),
        ("3 complement multiplicity", complement_multiplicity),
        ("4 non-conjugacy certificate", non_conjugacy),
        ("5 kernel oracle equivalence", kernel_oracle),
        ("6 general-position Lie Levi", general_position_lie_levi),
        ("7 mutation sensitivity", mutation_sensitivity),
        ("8 derivation property", derivation_property),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
