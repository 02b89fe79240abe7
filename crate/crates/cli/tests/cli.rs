use std::path::Path;
use std::process::{Command, Output};

use leibniz_cli::files::{write_json, AlgebraFile, SubspaceFile};
use leibniz_core::conjugacy::exp_inner_automorphism;
use leibniz_core::constructions::{
    counterexample, lie_semidirect_sum, simple_algebra, sl2_irreducible_module,
    split_extension_zero_right, CATALOG,
};
use leibniz_core::exactlin::{int, ratio, unit_vector, Matrix};
use leibniz_core::{LeibnizAlgebra, StructureTable, Subspace};
use serde_json::Value;
use tempfile::TempDir;

fn leibniz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write_algebra(dir: &TempDir, name: &str, a: &LeibnizAlgebra) -> String {
    let p = dir.path().join(name);
    write_json(&p, &AlgebraFile::from_algebra(a)).unwrap();
    path_str(&p).to_string()
}

fn write_subspace(dir: &TempDir, name: &str, s: &Subspace, a: &LeibnizAlgebra) -> String {
    let p = dir.path().join(name);
    write_json(&p, &SubspaceFile::from_subspace(s, a.labels())).unwrap();
    path_str(&p).to_string()
}

fn round_trip_algebras() -> Vec<LeibnizAlgebra> {
    let mut out = Vec::new();
    for name in CATALOG {
        out.push(simple_algebra(name).unwrap());
        out.push(counterexample(name).unwrap().algebra);
    }
    let sl2 = simple_algebra("sl2").unwrap();
    out.push(lie_semidirect_sum(&sl2, &sl2_irreducible_module(2)).unwrap());
    out.push(split_extension_zero_right(&sl2, &sl2_irreducible_module(1)).unwrap());
    // Fractional structure constants.
    let mut p = Matrix::identity(3);
    p[(0, 1)] = ratio(1, 3);
    p[(2, 0)] = ratio(-5, 2);
    out.push(sl2.change_basis(&p).unwrap());
    out.push(LeibnizAlgebra::abelian(0));
    out
}

#[test]
fn algebra_files_round_trip() {
    for a in round_trip_algebras() {
        let text = serde_json::to_string_pretty(&AlgebraFile::from_algebra(&a)).unwrap();
        let back: AlgebraFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_algebra_unchecked().unwrap(), a);
    }
}

#[test]
fn subspace_files_round_trip() {
    let bundle = counterexample("so3").unwrap();
    for s in [
        bundle.s.clone(),
        bundle.s1.clone(),
        bundle.diagonal_complement(&ratio(-7, 3)),
        Subspace::zero(6),
    ] {
        let f = SubspaceFile::from_subspace(&s, bundle.algebra.labels());
        let text = serde_json::to_string(&f).unwrap();
        let back: SubspaceFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_subspace().unwrap(), s);
    }
}

#[test]
fn validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = write_algebra(&dir, "sl3.json", &simple_algebra("sl3").unwrap());
    let out = leibniz(&["validate", &good]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["data"]["lie"], Value::Bool(true));

    // b b = b: a(bc) = b but (ab)c + b(ac) = 2b.
    let mut t = StructureTable::zeros(1);
    t.set(0, 0, 0, int(1));
    let bad = LeibnizAlgebra::new_unchecked(vec!["b".into()], t).unwrap();
    let bad = write_algebra(&dir, "bad.json", &bad);
    let out = leibniz(&["validate", &bad]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    assert_eq!(report["checks"][0]["witness"]["triple"], serde_json::json!(["b", "b", "b"]));
    assert_eq!(report["checks"][0]["witness"]["a(bc)"]["vector"], "b");
    assert_eq!(report["checks"][0]["witness"]["(ab)c + b(ac)"]["vector"], "2*b");

    // Every command reports the violation and stops.
    for cmd in ["analyze", "levi"] {
        let out = leibniz(&[cmd, &bad]);
        assert_eq!(code(&out), 1);
        assert_eq!(json(&out)["checks"][0]["name"], "left_leibniz_identity");
    }

    let bundle = write_algebra(&dir, "bundle.json", &counterexample("sl2").unwrap().algebra);
    let out = leibniz(&["validate", &bundle]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["data"]["lie"], Value::Bool(false));

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{\"dim\": 2").unwrap();
    assert_eq!(code(&leibniz(&["validate", path_str(&garbage)])), 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&leibniz(&["validate", path_str(&missing)])), 2);

    let bad_version = dir.path().join("v2.json");
    std::fs::write(&bad_version, r#"{"format_version":"2","dim":0,"basis":[],"table":[]}"#).unwrap();
    assert_eq!(code(&leibniz(&["analyze", path_str(&bad_version)])), 2);
}

#[test]
fn example_rejects_unknown_names_and_bad_lambdas() {
    assert_eq!(code(&leibniz(&["example", "--simple", "g2"])), 2);
    assert_eq!(code(&leibniz(&["example", "--simple", "sl2", "--lambda", "1/0"])), 2);
    assert_eq!(code(&leibniz(&["--format", "yaml", "example", "--simple", "sl2"])), 2);
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = write_algebra(&dir, "a.json", &counterexample("so3").unwrap().algebra);
    for args in [
        vec!["analyze", a.as_str()],
        vec!["--seed", "17", "analyze", a.as_str()],
        vec!["levi", a.as_str()],
        vec!["--format", "text", "levi", a.as_str()],
        vec!["example", "--simple", "sl2", "--lambda", "2/3"],
    ] {
        let first = leibniz(&args);
        assert_eq!(code(&first), 0, "{args:?}");
        assert_eq!(first.stdout, leibniz(&args).stdout, "{args:?}");
    }
}

#[test]
fn seed_changes_only_the_sampling() {
    let dir = TempDir::new().unwrap();
    let a = write_algebra(&dir, "a.json", &counterexample("sl2").unwrap().algebra);
    let r0 = json(&leibniz(&["--seed", "0", "analyze", &a]));
    let r1 = json(&leibniz(&["--seed", "1", "analyze", &a]));
    assert_eq!(r0["seed"], 0);
    assert_eq!(r1["seed"], 1);
    assert_eq!(r0["data"], r1["data"]);
}

#[test]
fn mutated_sl2_is_flagged() {
    let dir = TempDir::new().unwrap();
    let sl2 = simple_algebra("sl2").unwrap();
    let mut t = sl2.table().clone();
    // h e = 2e becomes h e = 3e.
    t.set(1, 0, 0, int(3));
    let mutated = LeibnizAlgebra::new_unchecked(sl2.labels().to_vec(), t).unwrap();
    let out = leibniz(&["validate", &write_algebra(&dir, "m.json", &mutated)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["checks"][0]["witness"]["triple"].as_array().unwrap().len(), 3);
}

#[test]
fn analyze_reports_structure() {
    let dir = TempDir::new().unwrap();
    let cases = [
        (counterexample("sl2").unwrap().algebra, 3, 3, false),
        (simple_algebra("sl2").unwrap(), 0, 0, true),
        (LeibnizAlgebra::abelian(2), 0, 2, false),
    ];
    for (i, (a, kernel, radical, semisimple)) in cases.into_iter().enumerate() {
        let out = leibniz(&["analyze", &write_algebra(&dir, &format!("{i}.json"), &a)]);
        assert_eq!(code(&out), 0);
        let d = &json(&out)["data"];
        assert_eq!(d["leibniz_kernel"]["dim"], kernel, "case {i}");
        assert_eq!(d["soluble_radical"]["dim"], radical, "case {i}");
        assert_eq!(d["semisimple"], semisimple, "case {i}");
    }
}

#[test]
fn levi_on_soluble_and_reductive_inputs() {
    let dir = TempDir::new().unwrap();
    let sl2 = simple_algebra("sl2").unwrap();
    let gl2 = lie_semidirect_sum(&sl2, &leibniz_core::levi::ModuleAction::trivial(3, 1)).unwrap();
    for (name, a, s_dim) in [("ab", LeibnizAlgebra::abelian(3), 0), ("gl2", gl2, 3)] {
        let out = leibniz(&["levi", &write_algebra(&dir, &format!("{name}.json"), &a)]);
        assert_eq!(code(&out), 0, "{name}");
        assert_eq!(json(&out)["data"]["semisimple_part"]["dim"], s_dim, "{name}");
    }
}

#[test]
fn levi_report_lists_bases_and_witnesses() {
    let dir = TempDir::new().unwrap();
    let sl2 = simple_algebra("sl2").unwrap();
    let a = lie_semidirect_sum(&sl2, &sl2_irreducible_module(2)).unwrap();
    let path = write_algebra(&dir, "a.json", &a);
    let out = leibniz(&["levi", &path]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["data"]["semisimple_part"]["dim"], 3);
    assert_eq!(r["data"]["radical"]["dim"], 3);
    let names: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["left_leibniz_identity", "sum_is_full", "intersection_is_zero", "closed_under_product", "semisimple"]);
    assert_eq!(r["algebra_digest"], a.digest());
}

#[test]
fn example_to_conjugacy_flow() {
    let dir = TempDir::new().unwrap();
    let out_dir = dir.path().join("sl2");
    let out = leibniz(&["example", "--simple", "sl2", "--lambda", "-3/4", "--out-dir", path_str(&out_dir)]);
    assert_eq!(code(&out), 0);
    let f = |n: &str| path_str(&out_dir.join(n)).to_string();
    let (alg, s, s1, k, sl) = (f("algebra.json"), f("S.json"), f("S1.json"), f("K.json"), f("S_lambda_0.json"));

    let out = leibniz(&["conjugacy", &alg, "--complement-a", &s, "--complement-b", &s1]);
    assert_eq!(code(&out), 0);
    let cert = &json(&out)["data"]["certificate"];
    assert_eq!(cert["distinctness"]["vector"], "e + e'");
    let gens: Vec<&str> = cert["exp_checks"].as_array().unwrap().iter().map(|c| c["generator"].as_str().unwrap()).collect();
    assert_eq!(gens, ["e", "f"]);

    assert_eq!(code(&leibniz(&["conjugacy", &alg, "--complement-a", &sl, "--complement-b", &s])), 0);
    // Equal complements: nothing to certify.
    assert_eq!(code(&leibniz(&["conjugacy", &alg, "--complement-a", &s1, "--complement-b", &s1])), 1);
    // The kernel is not a complement.
    assert_eq!(code(&leibniz(&["conjugacy", &alg, "--complement-a", &k, "--complement-b", &s])), 2);
}

#[test]
fn conjugate_complements_have_no_certificate() {
    // In a Lie algebra Levi complements are conjugate, and neither one is invariant.
    let dir = TempDir::new().unwrap();
    let sl2 = simple_algebra("sl2").unwrap();
    let a = lie_semidirect_sum(&sl2, &sl2_irreducible_module(1)).unwrap();
    let s = Subspace::coordinate(5, 0..3);
    let g = exp_inner_automorphism(&a, &unit_vector(5, 3)).unwrap();
    let t = g.image_of(&s).unwrap();
    assert_ne!(s, t);
    let alg = write_algebra(&dir, "a.json", &a);
    let (ps, pt) = (write_subspace(&dir, "s.json", &s, &a), write_subspace(&dir, "t.json", &t, &a));
    let out = leibniz(&["conjugacy", &alg, "--complement-a", &ps, "--complement-b", &pt]);
    assert_eq!(code(&out), 1);
    let r = json(&out);
    let last = r["checks"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["name"], "invariant_complement_found");
    assert_eq!(last["pass"], false);
    assert!(r["data"].get("certificate").is_none());
}

#[test]
fn mismatched_subspace_dimension_is_bad_input() {
    let dir = TempDir::new().unwrap();
    let bundle = counterexample("sl2").unwrap();
    let alg = write_algebra(&dir, "a.json", &bundle.algebra);
    let small = write_subspace(&dir, "small.json", &Subspace::full(3), &simple_algebra("sl2").unwrap());
    let s = write_subspace(&dir, "s.json", &bundle.s, &bundle.algebra);
    assert_eq!(code(&leibniz(&["conjugacy", &alg, "--complement-a", &small, "--complement-b", &s])), 2);
}

#[test]
fn text_format_and_timing() {
    let out = leibniz(&["--format", "text", "example", "--simple", "so3"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("command: example\n"));
    assert!(text.contains("[PASS] S1.semisimple"));
    assert!(!text.contains("timing_ms"));
    let timed = json(&leibniz(&["--timing", "example", "--simple", "so3"]));
    assert!(timed["timing_ms"].is_u64());
}
