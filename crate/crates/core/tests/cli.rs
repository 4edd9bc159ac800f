mod common;

use std::io::Write as _;

use hypersurface_link::cli::{self, render::reformat_json, run_scan, ScanRow};
use hypersurface_link::divisor::Divisor;
use hypersurface_link::error::Error;
use hypersurface_link::registry::Registry;
use hypersurface_link::report::{analyze, cross_checks};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("hslink").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

const CASES: [(&str, &str, &str); 3] = [
    ("dk1.json", "9,15,17,20", common::F60),
    ("dk2.json", "11,49,69,128", common::F256_1),
    ("dk3.json", "13,35,81,128", common::F256_2),
];

#[test]
fn json_reports_match_golden_files() {
    for (file, weights, poly) in CASES {
        let (code, out, err) = run(&["analyze", "--weights", weights, "--poly", poly, "--format", "json"]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out, golden(file), "{file}");
    }
}

#[test]
fn json_reports_round_trip() {
    for (file, _, _) in CASES {
        let text = golden(file);
        assert_eq!(reformat_json(&text).unwrap() + "\n", text);
    }
}

#[test]
fn text_report_endings() {
    let endings = [
        "diffeomorphism type: #2(S²×S³) [known SE: DK-1]",
        "diffeomorphism type: S²×S³ [known SE: DK-2]",
        "diffeomorphism type: S²×S³ [known SE: DK-3]",
    ];
    for ((_, weights, poly), ending) in CASES.iter().zip(endings) {
        let (code, out, _) = run(&["analyze", "--weights", weights, "--poly", poly]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().last(), Some(ending));
    }
    let (_, out, _) = run(&["analyze", "--weights", "9,15,17,20", "--poly", common::F60]);
    assert!(out.contains("orbifold order: 765 (derived)"), "{out}");
}

#[test]
fn quadric_and_permuted_input() {
    let (code, out, _) = run(&["analyze", "--weights", "1,1,1,1", "--poly", "z0^2 + z1^2 + z2^2 + z3^2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("diffeomorphism type: S²×S³ (k=1)"));
    assert!(out.contains("V_{4,2}(R)"));
    // same surface with variables listed in reverse
    let (code, out, _) = run(&["analyze", "--weights", "20,17,15,9", "--poly", "z3^5*z2 + z3*z1^3 + z2^4 + z0^3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("diffeomorphism type: #2(S²×S³) [known SE: DK-1]"));
}

#[test]
fn validation_errors_exit_one() {
    let (code, _, err) = run(&["analyze", "--weights", "2,4,6,8", "--poly", "z0^12 + z1^6 + z2^4 + z3^3"]);
    assert_eq!(code, 1);
    assert!(err.contains("not normalized"), "{err}");
    let (code, _, err) = run(&["analyze", "--weights", "1,1,1,1", "--poly", "z0^2 + y1"]);
    assert_eq!(code, 1);
    assert!(err.contains("position 7"), "{err}");
    let (code, _, _) = run(&["analyze", "--weights", "1,1,1,1", "--poly", "z0^2 + z1^3"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["analyze", "--weights", "0,1,1,1", "--poly", "z1^2"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["analyze", "--poly", "z0^2"]);
    assert_eq!(code, 1);
}

#[test]
fn isolatedness_flag() {
    // z3 never appears, so the singularity is not isolated
    let args = ["analyze", "--weights", "1,1,1,1", "--poly", "z0^2 + z1^2 + z2^2"];
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    assert!(out.contains("cannot be isolated"));
    let mut strict = args.to_vec();
    strict.extend(["--assume-isolated", "false"]);
    let (code, _, err) = run(&strict);
    assert_eq!(code, 1);
    assert!(err.contains("z3"), "{err}");
}

#[test]
fn consistency_failure_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wrong.jsonl");
    let line = Registry::builtin().to_jsonl().lines().next().unwrap().replace("\"b2\":2", "\"b2\":3");
    std::fs::write(&path, line).unwrap();
    let (code, _, err) = run(&[
        "--registry",
        path.to_str().unwrap(),
        "analyze",
        "--weights",
        "9,15,17,20",
        "--poly",
        common::F60,
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("reference b2"), "{err}");
}

#[test]
fn registry_override_and_listing() {
    let (code, out, _) = run(&["registry"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("registry.jsonl"));

    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.jsonl");
    std::fs::write(&empty, "").unwrap();
    let (code, out, _) = run(&["--registry", empty.to_str().unwrap(), "analyze", "--weights", "9,15,17,20", "--poly", common::F60]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("diffeomorphism type: #2(S²×S³) (k=2)"));
    assert!(out.contains("SE status: candidate"));

    let (code, _, _) = run(&["--registry", "/nonexistent/registry.jsonl", "registry"]);
    assert_eq!(code, 3);
}

#[test]
fn registry_golden_round_trip() {
    let text = golden("registry.jsonl");
    let parsed = Registry::from_jsonl(&text).unwrap();
    assert_eq!(parsed, Registry::builtin());
    assert_eq!(parsed.to_jsonl(), text);
}

fn batch_file(lines: &[&str]) -> (tempfile::TempDir, std::path::PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("in.jsonl");
    let mut f = std::fs::File::create(&path).unwrap();
    for l in lines {
        writeln!(f, "{l}").unwrap();
    }
    (dir, path)
}

fn record(weights: &str, degree: u64, poly: &str) -> String {
    format!(r#"{{"weights":[{weights}],"degree":{degree},"poly":"{poly}"}}"#)
}

fn summary(err: &str) -> cli::BatchSummary {
    serde_json::from_str(err.lines().last().unwrap()).unwrap()
}

#[test]
fn batch_three_records() {
    let recs = [
        record("9,15,17,20", 60, common::F60),
        record("11,49,69,128", 256, common::F256_1),
        record("13,35,81,128", 256, common::F256_2),
    ];
    let (_dir, path) = batch_file(&recs.iter().map(String::as_str).collect::<Vec<_>>());
    let (code, out, err) = run(&["batch", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(summary(&err), cli::BatchSummary { ok: 3, skipped: 0, failed: 0 });
    let tags: Vec<String> = out
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            v["classification"]["registry_tag"].as_str().unwrap().to_string()
        })
        .collect();
    assert_eq!(tags, ["DK-1", "DK-2", "DK-3"]);
    for (line, (file, _, _)) in out.lines().zip(CASES) {
        assert_eq!(reformat_json(line).unwrap() + "\n", golden(file));
    }
}

#[test]
fn batch_malformed_and_failed_lines() {
    let good = record("9,15,17,20", 60, common::F60);
    let quadric = record("1,1,1,1", 2, "z0^2 + z1^2 + z2^2 + z3^2");
    let (_dir, path) = batch_file(&[&good, "{\"weights\": [1,2", &quadric]);
    let (code, out, err) = run(&["batch", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(summary(&err), cli::BatchSummary { ok: 2, skipped: 1, failed: 0 });
    assert_eq!(out.lines().count(), 2);
    assert!(err.contains("line 2: skipped"), "{err}");

    let wrong_degree = record("1,1,1,1", 3, "z0^2 + z1^2 + z2^2 + z3^2");
    let (_dir, path) = batch_file(&[&good, &wrong_degree]);
    let (_, _, err) = run(&["batch", path.to_str().unwrap()]);
    assert_eq!(summary(&err), cli::BatchSummary { ok: 1, skipped: 0, failed: 1 });
}

#[test]
fn batch_empty_and_out_file() {
    let (dir, path) = batch_file(&[]);
    let (code, out, err) = run(&["batch", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(summary(&err), cli::BatchSummary::default());

    let good = record("9,15,17,20", 60, common::F60);
    let (_d, path) = batch_file(&[&good]);
    let target = dir.path().join("out.jsonl");
    let (code, out, _) = run(&["batch", path.to_str().unwrap(), "--out", target.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap().lines().count(), 1);

    let (code, _, _) = run(&["batch", "/nonexistent/in.jsonl"]);
    assert_eq!(code, 3);
}

fn scan(max_weight: u64) -> Vec<ScanRow> {
    let mut rows = Vec::new();
    run_scan(max_weight, 1, 4, |r| {
        rows.push(r.clone());
        Ok(())
    })
    .unwrap();
    rows
}

#[test]
fn scan_examples() {
    let rows = scan(1);
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0].weights.as_slice(), rows[0].degree), (&[1u64, 1, 1, 1][..], 3));

    let rows = scan(20);
    let hit = rows.iter().find(|r| r.weights == [9, 15, 17, 20]).unwrap();
    assert_eq!((hit.degree, hit.milnor_number, hit.b2), (60, Some(86), Some(2)));
    assert!(rows.windows(2).all(|p| p[0].weights < p[1].weights));
    assert!(rows.iter().all(|r| r.weights.iter().sum::<u64>() == r.degree + 1));
}

#[test]
fn scan_to_128() {
    let mut found = Vec::new();
    let mut last: Option<Vec<u64>> = None;
    run_scan(128, 1, 4, |r| {
        if let Some(prev) = &last {
            assert!(prev < &r.weights);
        }
        last = Some(r.weights.clone());
        if r.weights == [11, 49, 69, 128] || r.weights == [13, 35, 81, 128] {
            found.push((r.degree, r.milnor_number, r.b2));
        }
        Ok(())
    })
    .unwrap();
    assert_eq!(found, vec![(256, Some(255), Some(1)); 2]);
}

#[test]
fn scan_cli_and_bounds() {
    let (code, out, _) = run(&["scan", "--max-weight", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"weights\":[1,1,1,1],\"degree\":3,\"milnor_number\":16,\"b2\":6}\n");
    let (code, _, err) = run(&["scan", "--max-weight", "257"]);
    assert_eq!(code, 1);
    assert!(err.contains("256"));
    let (_, out, _) = run(&["scan", "--max-weight", "6", "--index", "2"]);
    assert!(out.lines().any(|l| l.contains("milnor_rational")), "{out}");
}

#[test]
fn perturbed_unit_coefficient_fails_b2_routes() {
    let mut report = analyze(&common::f60(), &Registry::builtin()).unwrap();
    assert!(cross_checks(&report).iter().all(|c| c.passed));
    report.divisor = &report.divisor + &Divisor::one();
    let failing: Vec<_> = cross_checks(&report).into_iter().filter(|c| !c.passed).collect();
    assert_eq!(failing[0].name, "b2 routes");
    assert!(matches!(
        failing[0].clone().into_result(),
        Err(Error::ConsistencyFailure { .. })
    ));
}
