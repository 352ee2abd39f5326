use std::path::PathBuf;
use std::process::Command;

use jumpcoef_cli::run_args;
use serde_json::Value;

fn case(path: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "cases", path]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn structured(args: &[&str]) -> Value {
    let mut argv = vec!["--format", "structured"];
    argv.extend_from_slice(args);
    let out = run_args(argv).unwrap();
    serde_json::from_str(&out.output).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_owned())
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_jumpcoef"))
}

fn expect_block(path: &str) -> Value {
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(case(path)).unwrap()).unwrap();
    doc["expect"].clone()
}

#[test]
fn monomial_cases_match_their_expectations() {
    for name in [
        "maxideal1",
        "maxideal2",
        "maxideal3",
        "s3t4",
        "s3t30",
        "s9t10",
        "st",
        "x3y3",
        "x3y3xy",
    ] {
        let path = format!("monomial/{name}.json");
        let expect = expect_block(&path);
        let max = expect["max"].as_str().unwrap();
        let doc = structured(&[
            "jumps",
            "monomial",
            &case(&path),
            "--max",
            max,
            "--multiplicities",
        ]);
        let jumps = &doc["report"]["spectra"][0]["jumps"];
        let values: Vec<String> = jumps
            .as_array()
            .unwrap()
            .iter()
            .map(|p| p[0].as_str().unwrap().to_owned())
            .collect();
        if let Some(all) = expect.get("jumps") {
            assert_eq!(values, strings(all), "{name}");
        }
        if let Some(first) = expect.get("first") {
            assert_eq!(values[0], first.as_str().unwrap(), "{name}");
        }
        if let Some(kappa) = expect.get("kappa") {
            let expanded: Vec<String> = jumps
                .as_array()
                .unwrap()
                .iter()
                .flat_map(|p| {
                    std::iter::repeat_n(p[0].as_str().unwrap().to_owned(), p[1].as_u64().unwrap() as usize)
                })
                .collect();
            let want = strings(kappa);
            assert_eq!(&expanded[..want.len()], &want[..], "{name}");
        }
    }
}

#[test]
fn polynomial_cases_match_their_expectations() {
    for name in ["s3t4", "x2y3", "saito", "smooth_linear"] {
        let path = format!("poly/{name}.json");
        let expect = expect_block(&path);
        let jac = structured(&["jacobian", &case(&path)]);
        assert_eq!(jac["report"]["tyurina"], expect["tyurina"], "{name}");
        assert_eq!(jac["report"]["milnor"], expect["milnor"], "{name}");
        if let Some(all) = expect.get("jumps") {
            let doc = structured(&[
                "jumps",
                "poly",
                &case(&path),
                "--max",
                expect["max"].as_str().unwrap(),
            ]);
            let spec = &doc["report"]["spectra"][0];
            let values: Vec<String> = spec["jumps"]
                .as_array()
                .unwrap()
                .iter()
                .map(|p| p[0].as_str().unwrap().to_owned())
                .collect();
            assert_eq!(values, strings(all), "{name}");
            assert_eq!(spec["jumping_length"], expect["jumping_length"], "{name}");
        }
    }
}

#[test]
fn text_output_for_the_cusp() {
    let out = run_args(["jumps", "poly", &case("poly/s3t4.json")]).unwrap();
    assert!(out.success);
    assert!(
        out.output.contains("7/12 5/6 11/12 1, length 4"),
        "{}",
        out.output
    );

    let bounds = run_args(["bounds", &case("poly/s3t4.json")]).unwrap();
    assert!(
        bounds.output.contains("d·ℓ = 8, τ+d = 8, ⌈μ/2⌉+d = 5"),
        "{}",
        bounds.output
    );
}

#[test]
fn csv_has_one_row_per_jump() {
    let out = run_args([
        "--format",
        "csv",
        "jumps",
        "monomial",
        &case("monomial/s3t4.json"),
        "--multiplicities",
    ])
    .unwrap();
    let lines: Vec<&str> = out.output.lines().collect();
    assert_eq!(lines[0], "value,multiplicity");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("7/12,"));
}

#[test]
fn svg_rulers_are_well_formed() {
    let out = run_args([
        "--format",
        "svg",
        "jumps",
        "monomial",
        &case("monomial/s9t10.json"),
        &case("monomial/s3t30.json"),
        "--max",
        "2",
    ])
    .unwrap();
    let opts = roxmltree::ParsingOptions {
        allow_dtd: true,
        ..Default::default()
    };
    let doc = roxmltree::Document::parse_with_options(&out.output, opts).unwrap();
    let rulers: Vec<_> = doc
        .descendants()
        .filter(|n| n.attribute("class") == Some("ruler"))
        .collect();
    assert_eq!(rulers.len(), 2);
    let ticks = |r: &roxmltree::Node| {
        r.descendants()
            .filter(|n| n.attribute("class") == Some("tick"))
            .count()
    };

    // closed forms: (i/9 + j/10 : i, j >= 1) and (i/3 + j/30 : i, j >= 1) up to 2
    let count = |a: i64, b: i64| {
        let mut v: Vec<(i64, i64)> = Vec::new();
        for i in 1..=2 * a {
            for j in 1..=2 * b {
                let num = i * b + j * a;
                if num <= 2 * a * b {
                    let g = gcd(num, a * b);
                    v.push((num / g, a * b / g));
                }
            }
        }
        v.sort();
        v.dedup();
        v.len()
    };
    assert_eq!(ticks(&rulers[0]), count(9, 10));
    assert_eq!(ticks(&rulers[1]), count(3, 30));
}

#[test]
fn structured_output_is_deterministic() {
    let args = [
        "--format",
        "structured",
        "verify",
        "subadditivity",
        "--trials",
        "5",
        "--seed",
        "7",
    ];
    let a = run_args(args).unwrap().output;
    let b = run_args(args).unwrap().output;
    assert_eq!(a, b);
    let doc: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(doc["report"]["seed"], 7);
}

#[test]
fn a_single_trial_reproduces() {
    let all = structured(&["verify", "skoda", "--trials", "3", "--seed", "11"]);
    let third: Vec<&Value> = all["report"]["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["trial"] == 2)
        .collect();
    assert!(!third.is_empty());
    let single = structured(&["verify", "skoda", "--seed", "11", "--trial", "2"]);
    let again: Vec<&Value> = single["report"]["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["trial"] == 2)
        .collect();
    assert_eq!(third, again);
}

#[test]
fn exit_codes() {
    let ok = binary()
        .args(["jumps", "monomial", &case("monomial/s3t4.json")])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"dimension": 2, "generators": [[1, 0], [0, "x"]]}"#).unwrap();
    let out = binary().args(["jumps", "monomial"]).arg(&bad).output().unwrap();
    assert_ne!(out.status.code(), Some(0));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("generators[1]"), "{stderr}");

    let missing = binary()
        .args(["jacobian", "/nonexistent/input.json"])
        .output()
        .unwrap();
    assert_ne!(missing.status.code(), Some(0));
}

#[test]
fn unavailable_formats_are_rejected() {
    assert!(run_args(["--format", "svg", "bounds", &case("poly/s3t4.json")]).is_err());
}

#[test]
fn graded_commands() {
    let h = structured(&["graded", "hyperbola", "--window", "20", "--clusters", "2"]);
    assert_eq!(h["passed"], true);
    let d = structured(&["graded", "diagonal", &case("families/mu_3_2.json")]);
    assert_eq!(d["passed"], true);
}

#[test]
fn bernstein_suite_with_input() {
    let out = run_args([
        "verify",
        "bs",
        "--trials",
        "0",
        "--input",
        &case("roots/s3t4_extra_roots.json"),
    ])
    .unwrap();
    assert!(out.success, "{}", out.output);
}
