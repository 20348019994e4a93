//! End-to-end tests driving the binary.

use std::process::{Command, Output};

use qcyclo_core::group::FieldParams;
use qcyclo_core::reps::{verify_homomorphism, Family, Irrep, Mat2, TwoDimRep};

fn qcyclo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcyclo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn payload(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(v["schema_version"], "1.0");
    v["payload"].clone()
}

#[test]
fn classify_cases_and_exit_codes() {
    let out = qcyclo(&["classify", "-p", "-1", "-q", "2"]);
    let p = payload(&out);
    assert_eq!(p["case"], "B");
    assert_eq!(p["case_tag"], "B_q_doubles");
    assert_eq!(p["lifted_group_order"], 8);

    let out = qcyclo(&["classify", "-p", "5", "-q", "11"]);
    assert_eq!(payload(&out)["case_tag"], "A");

    // invalid pairs exit 2 with a diagnostic
    let out = qcyclo(&["classify", "-p", "4", "-q", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = qcyclo(&["classify", "-p", "5", "-q", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    for args in [
        vec!["classify", "-p", "3", "-q", "5"],
        vec!["reps", "-p", "-1", "-q", "5"],
        vec!["zeta-ratio", "-p", "-1", "-q", "5", "--prime-bound", "30", "--coeffs", "30"],
        vec!["char-table", "-p", "2", "-q", "3"],
    ] {
        let a = qcyclo(&args);
        let b = qcyclo(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "args: {args:?}");
    }
}

#[test]
fn reps_counts_and_round_trip() {
    let out = qcyclo(&["reps", "-p", "-1", "-q", "5"]);
    let p = payload(&out);
    assert_eq!(p["one_dim"].as_array().unwrap().len(), 8);
    assert_eq!(p["two_dim"].as_array().unwrap().len(), 2);

    // re-parse the emitted matrices and re-verify the presentation relations
    for (pp, qq) in [(-1i64, 5i64), (3, 5), (2, 7), (5, 7)] {
        let out = qcyclo(&["reps", "-p", &pp.to_string(), "-q", &qq.to_string()]);
        let p = payload(&out);
        let params = FieldParams::new(pp, qq).unwrap();
        let names: Vec<String> = params
            .generators
            .iter()
            .map(|g| g.name.to_string())
            .collect();
        let two = p["two_dim"].as_array().unwrap();
        assert_eq!(two.len() as u64, params.group_order() / 4);
        for entry in two {
            let family = Family::from_str_tag(entry["family"].as_str().unwrap()).unwrap();
            let images: Vec<Mat2> = names
                .iter()
                .map(|n| serde_json::from_value(entry["images"][n].clone()).unwrap())
                .collect();
            let eps_image: Mat2 = serde_json::from_value(entry["eps_image"].clone()).unwrap();
            let rep = TwoDimRep {
                family,
                i: entry["i"].as_u64().unwrap(),
                j: entry["j"].as_u64().unwrap(),
                images,
                eps_image,
            };
            assert!(
                verify_homomorphism(&params, &Irrep::TwoDim(rep)),
                "({pp},{qq}) {entry}"
            );
        }
    }
}

#[test]
fn lfactor_example_and_consistency_exit() {
    let out = qcyclo(&["lfactor", "-p", "-1", "-q", "2", "--j", "0", "--ell", "7"]);
    let p = payload(&out);
    assert_eq!(p["explicit_integer"], serde_json::json!([1, 0, -1]));
    assert_eq!(p["equal"], true);

    // bad index is a usage error
    let out = qcyclo(&["lfactor", "-p", "-1", "-q", "2", "--j", "1", "--ell", "7"]);
    assert_eq!(out.status.code(), Some(2));
    // unsupported family
    let out = qcyclo(&["lfactor", "-p", "3", "-q", "5", "--j", "0", "--ell", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn char_table_shape() {
    let out = qcyclo(&["char-table", "-p", "-1", "-q", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    // header + 4 one-dim + 1 two-dim
    assert_eq!(lines.len(), 6);
    assert!(lines[0].starts_with("irrep,"));
    // 5 conjugacy classes
    assert_eq!(lines[0].split(',').count(), 6);
    // the two-dim row evaluates to 2 at the identity
    let last = lines[5].split(',').collect::<Vec<_>>();
    assert!(last[0].starts_with("B3.2"));
    assert!(last[1].contains("2.000000"));
}

#[test]
fn frobenius_candidates() {
    let out = qcyclo(&["frobenius", "-p", "-1", "-q", "17", "--ell", "2"]);
    let p = payload(&out);
    assert_eq!(p["decomposition"], "split");
    assert_eq!(p["inertia_candidates"].as_array().unwrap().len(), 2);
    assert_eq!(p["lift"]["kind"], "exact");

    let out = qcyclo(&["frobenius", "-p", "-1", "-q", "5", "--ell", "13"]);
    let p = payload(&out);
    assert_eq!(p["lift"]["kind"], "ambiguous_irrelevant");

    let out = qcyclo(&["frobenius", "-p", "-1", "-q", "5", "--ell", "5"]);
    let p = payload(&out);
    assert_eq!(p["decomposition"], "inert");
    assert_eq!(p["a"], serde_json::Value::Null);
}

#[test]
fn lfunction_formats() {
    let out = qcyclo(&[
        "lfunction", "-p", "-1", "-q", "2", "--j", "0", "--prime-bound", "10", "--coeffs", "10",
        "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,re,im");
    assert_eq!(lines.len(), 11);
    assert!(lines[1].starts_with("1,1"));
    // a_9 = 1 for the q = 2 representation
    assert!(lines[9].starts_with("9,1"));
    // a_2 = 0 and a_3 = 0
    assert!(lines[2].starts_with("2,0"));
    assert!(lines[3].starts_with("3,0"));

    let out = qcyclo(&[
        "lfunction", "-p", "-1", "-q", "7", "--j", "1", "--prime-bound", "20", "--coeffs", "20",
    ]);
    let p = payload(&out);
    assert_eq!(p["coefficients"][0]["n"], 1);
    assert_eq!(p["coefficients"][0]["re"], 1.0);
}

#[test]
fn zeta_ratio_report() {
    let out = qcyclo(&[
        "zeta-ratio", "-p", "-1", "-q", "7", "--prime-bound", "60", "--coeffs", "60",
    ]);
    let p = payload(&out);
    assert_eq!(p["coefficients"][1], 1);
    let summary = &p["closed_form_summary"];
    // the flagged sub-case is reported, not hidden
    assert!(summary["flagged_subcase_disagreements"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!(3)));
    let at3 = p["per_prime"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["prime"] == 3)
        .unwrap();
    assert_eq!(at3["agree"], false);
    assert_eq!(at3["flagged_subcase"], true);

    // q = 2 has no closed-form comparison
    let out = qcyclo(&[
        "zeta-ratio", "-p", "-1", "-q", "2", "--prime-bound", "20", "--coeffs", "20",
    ]);
    let p = payload(&out);
    assert_eq!(p["closed_form_summary"], serde_json::Value::Null);
}

#[test]
fn unit_value_flag_gate() {
    let out = qcyclo(&["unit-value", "-p", "2", "-q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qcyclo(&["unit-value", "-p", "2", "-q", "3", "--p2-interpretation"]);
    assert!(out.status.success());
    let out = qcyclo(&["unit-value", "-p", "-1", "-q", "5"]);
    let p = payload(&out);
    assert!((p["re"].as_f64().unwrap() - 5f64.sqrt()).abs() < 1e-12);
}

#[test]
fn seed_conventions_flag() {
    let out = qcyclo(&["classify", "-p", "-1", "-q", "5", "--seed-conventions"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "seed-conventions");
    assert_eq!(v["payload"]["primitive_root_q"], 2);
}
