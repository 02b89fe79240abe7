//! One function per subcommand. Each returns a report and the exit code it implies;
//! `Err` means the input could not be processed at all (exit 2).

use std::path::Path;

use leibniz_core::conjugacy::{invariance_check, non_conjugacy_certificate, InvarianceReport};
use leibniz_core::constructions::counterexample;
use leibniz_core::exactlin::{format_scalar, int};
use leibniz_core::levi::{leibniz_levi, verify_levi, LeviWitnesses};
use leibniz_core::structure::{derived_series, is_semisimple, leibniz_kernel, soluble_radical};
use leibniz_core::{Error, LeibnizAlgebra, Scalar, Subspace, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::files::{read_algebra_file, read_subspace, write_json, AlgebraFile, SubspaceFile};
use crate::report::{subspace_value, vector_value, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

pub struct Outcome {
    pub report: Report,
    pub code: i32,
}

impl Outcome {
    fn from_checks(report: Report) -> Self {
        let code = if report.all_pass() { EXIT_OK } else { EXIT_FAIL };
        Outcome { report, code }
    }
}

/// Reads an algebra. If the left Leibniz identity fails, the returned report already
/// records the violating triple and the command should stop with exit 1.
fn load_algebra(path: &Path, report: &mut Report) -> Result<Option<LeibnizAlgebra>, CliError> {
    let a = read_algebra_file(path)?.to_algebra_unchecked()?;
    Ok(record_identity(&a, report).then_some(a))
}

/// Adds the identity check to `report`; true if it holds.
fn record_identity(a: &LeibnizAlgebra, report: &mut Report) -> bool {
    report.algebra_digest = Some(a.digest());
    let violations = a.check_left_leibniz();
    let labels = a.labels();
    let witness = match violations.first() {
        None => Value::Null,
        Some(v) => json!({
            "triple": [labels[v.a], labels[v.b], labels[v.c]],
            "indices": [v.a, v.b, v.c],
            "a(bc)": vector_value(&v.lhs, labels),
            "(ab)c + b(ac)": vector_value(&v.rhs, labels),
            "violations": violations.len(),
        }),
    };
    report.check("left_leibniz_identity", violations.is_empty(), witness)
}

fn levi_checks(report: &mut Report, prefix: &str, w: &LeviWitnesses) -> bool {
    let mut ok = true;
    for (name, pass) in w.checks() {
        ok &= report.check(&format!("{prefix}{name}"), pass, Value::Null);
    }
    ok
}

pub fn validate(path: &Path, seed: u64) -> Result<Outcome, CliError> {
    let mut report = Report::new("validate", seed);
    let a = read_algebra_file(path)?.to_algebra_unchecked()?;
    record_identity(&a, &mut report);
    report.set("dim", a.dim());
    report.set("lie", a.is_lie());
    Ok(Outcome::from_checks(report))
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| int(rng.random_range(-3..=3))).collect()
}

pub fn analyze(path: &Path, seed: u64) -> Result<Outcome, CliError> {
    let mut report = Report::new("analyze", seed);
    let Some(a) = load_algebra(path, &mut report)? else {
        return Ok(Outcome::from_checks(report));
    };
    let labels = a.labels();
    let n = a.dim();
    let full = a.full_space();
    let kernel = leibniz_kernel(&a);
    let radical = soluble_radical(&a)?;
    let series = derived_series(&a, &full)?;

    report.check("kernel_is_ideal", a.is_ideal(&kernel)?, Value::Null);
    report.check(
        "kernel_left_annihilates",
        a.subspace_product(&kernel, &full)?.is_zero(),
        Value::Null,
    );

    // Independent sampling oracle: every square lies in the kernel, and squares span it.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = 4 * n + 8;
    let mut squares = Vec::with_capacity(samples);
    let mut outside = None;
    for _ in 0..samples {
        let x = random_vector(&mut rng, n);
        let xx = a.product(&x, &x)?;
        if outside.is_none() && !kernel.contains(&xx)? {
            outside = Some(x.clone());
        }
        squares.push(xx);
    }
    report.check(
        "random_squares_in_kernel",
        outside.is_none(),
        outside.map_or(Value::Null, |x| json!({ "x": vector_value(&x, labels) })),
    );
    let spanned = Subspace::span(n, &squares);
    report.check(
        "random_squares_span_kernel",
        spanned == kernel,
        json!({ "samples": samples, "span_dim": spanned.dim() }),
    );

    report.check("radical_is_ideal", a.is_ideal(&radical)?, Value::Null);
    let radical_series = derived_series(&a, &radical)?;
    report.check(
        "radical_is_soluble",
        radical_series.reaches_zero(),
        json!({ "derived_dims": radical_series.dims() }),
    );
    report.check("kernel_in_radical", kernel.is_subspace_of(&radical)?, Value::Null);

    report.set("dim", n);
    report.set("lie", a.is_lie());
    report.set("leibniz_kernel", subspace_value(&kernel, labels));
    report.set("derived_series_dims", series.dims());
    report.set("soluble", series.reaches_zero());
    report.set("soluble_radical", subspace_value(&radical, labels));
    report.set("semisimple", is_semisimple(&a));
    Ok(Outcome::from_checks(report))
}

pub fn levi(path: &Path, seed: u64) -> Result<Outcome, CliError> {
    let mut report = Report::new("levi", seed);
    let Some(a) = load_algebra(path, &mut report)? else {
        return Ok(Outcome::from_checks(report));
    };
    let labels = a.labels();
    let d = leibniz_levi(&a)?;
    // Recheck from scratch rather than trusting the witnesses returned alongside.
    let w = verify_levi(&a, &d.semisimple_part)?;
    levi_checks(&mut report, "", &w);
    report.set("semisimple_part", subspace_value(&d.semisimple_part, labels));
    report.set("radical", subspace_value(&d.radical, labels));
    Ok(Outcome::from_checks(report))
}

pub fn example(
    name: &str,
    lambdas: &[Scalar],
    out_dir: Option<&Path>,
    seed: u64,
) -> Result<Outcome, CliError> {
    let bundle = counterexample(name)?;
    let a = &bundle.algebra;
    let labels = a.labels();
    let mut report = Report::new("example", seed);
    report.algebra_digest = Some(a.digest());

    report.check("kernel_is_second_block", leibniz_kernel(a) == bundle.kernel, Value::Null);
    report.check("complements_differ", bundle.s != bundle.s1, Value::Null);
    levi_checks(&mut report, "S.", &verify_levi(a, &bundle.s)?);
    levi_checks(&mut report, "S1.", &verify_levi(a, &bundle.s1)?);

    let mut named: Vec<(String, Subspace)> = vec![
        ("K".into(), bundle.kernel.clone()),
        ("S".into(), bundle.s.clone()),
        ("S1".into(), bundle.s1.clone()),
    ];
    let mut lambda_values = Vec::new();
    for (i, lambda) in lambdas.iter().enumerate() {
        let u = bundle.diagonal_complement(lambda);
        let key = format!("S_lambda_{i}");
        levi_checks(&mut report, &format!("{key}."), &verify_levi(a, &u)?);
        lambda_values.push(json!({
            "lambda": format_scalar(lambda),
            "subspace": subspace_value(&u, labels),
        }));
        named.push((key, u));
    }

    report.set("name", name);
    report.set("dim", a.dim());
    report.set("algebra", serde_json::to_value(AlgebraFile::from_algebra(a)).expect("serializable"));
    for (key, u) in named.iter().take(3) {
        report.set(key, subspace_value(u, labels));
    }
    report.set("lambda_complements", lambda_values);

    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.display().to_string(), e))?;
        let mut written = vec!["algebra.json".to_string()];
        write_json(&dir.join("algebra.json"), &AlgebraFile::from_algebra(a))?;
        for (key, u) in &named {
            let file = format!("{key}.json");
            write_json(&dir.join(&file), &SubspaceFile::from_subspace(u, labels))?;
            written.push(file);
        }
        report.set("files", written);
    }
    Ok(Outcome::from_checks(report))
}

pub fn conjugacy(path: &Path, a_path: &Path, b_path: &Path, seed: u64) -> Result<Outcome, CliError> {
    let mut report = Report::new("conjugacy", seed);
    let Some(a) = load_algebra(path, &mut report)? else {
        return Ok(Outcome::from_checks(report));
    };
    let labels = a.labels();
    let ua = read_subspace(a_path)?;
    let ub = read_subspace(b_path)?;
    for u in [&ua, &ub] {
        if u.ambient_dim() != a.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: u.ambient_dim(),
            }
            .into());
        }
    }
    report.set("complement_a", subspace_value(&ua, labels));
    report.set("complement_b", subspace_value(&ub, labels));

    let ok_a = levi_checks(&mut report, "complement_a.", &verify_levi(&a, &ua)?);
    let ok_b = levi_checks(&mut report, "complement_b.", &verify_levi(&a, &ub)?);
    if !(ok_a && ok_b) {
        return Ok(Outcome {
            report,
            code: EXIT_BAD_INPUT,
        });
    }

    let distinct = ua != ub;
    report.check("complements_differ", distinct, Value::Null);
    if !distinct {
        return Ok(Outcome {
            report,
            code: EXIT_FAIL,
        });
    }

    // The certificate needs one complement fixed by every inner derivation; try A first.
    let inv_a = invariance_check(&a, &ua)?;
    let inv_b = invariance_check(&a, &ub)?;
    report.set("invariance_a", invariance_value(&inv_a, &ua, labels));
    report.set("invariance_b", invariance_value(&inv_b, &ub, labels));
    let (fixed, moved, which) = if inv_a.all_pass() {
        (&ua, &ub, "a")
    } else if inv_b.all_pass() {
        (&ub, &ua, "b")
    } else {
        report.check("invariant_complement_found", false, Value::Null);
        return Ok(Outcome {
            report,
            code: EXIT_FAIL,
        });
    };
    report.check("invariant_complement_found", true, json!({ "complement": which }));

    let cert = non_conjugacy_certificate(&a, fixed, moved)?;
    report.check(
        "exp_inner_automorphisms_preserve",
        cert.exp_checks.iter().all(|c| c.automorphism && c.preserves),
        json!({ "count": cert.exp_checks.len() }),
    );
    report.check("certificate_rechecks", cert.check(&a)?, Value::Null);
    let exp_checks: Vec<Value> = cert
        .exp_checks
        .iter()
        .map(|c| {
            json!({
                "generator": labels[c.generator],
                "automorphism": c.automorphism,
                "preserves": c.preserves,
            })
        })
        .collect();
    report.set(
        "certificate",
        json!({
            "algebra_digest": cert.algebra_digest,
            "invariant_complement": which,
            "distinctness": vector_value(&cert.distinctness, labels),
            "exp_checks": exp_checks,
            "claim": cert.claim,
        }),
    );
    Ok(Outcome::from_checks(report))
}

fn invariance_value(r: &InvarianceReport, u: &Subspace, labels: &[String]) -> Value {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            let failing = row.failing_vector.map_or(Value::Null, |k| {
                let v = u.basis_vectors().nth(k).expect("row index in range");
                vector_value(v, labels)
            });
            json!({ "generator": labels[row.generator], "pass": row.pass, "failing_vector": failing })
        })
        .collect();
    json!({ "passed": r.passed(), "total": r.rows.len(), "rows": rows })
}
