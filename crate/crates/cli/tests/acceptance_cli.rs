//! CLI acceptance: determinism of report-all and the documented exit
//! status mapping (0 pass, 1 check failure, 2 usage error, 3 I/O error).

use std::process::Command;

fn sporadic() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sporadic"))
}

#[test]
fn criterion_13_cli_determinism_and_exit_statuses() {
    // byte-identical report-all across two runs with identical config
    let run = || {
        sporadic()
            .args([
                "report-all",
                "--format",
                "json",
                "--seed",
                "0",
                "--restarts",
                "64",
            ])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert_eq!(
        first.stdout, second.stdout,
        "report-all output not byte-identical"
    );

    // exit 0: a passing verification
    let ok = sporadic()
        .args(["verify", "--family", "trine-r2"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));

    // exit 1: an impossible tolerance makes floating-point checks fail
    let fail = sporadic()
        .args(["verify", "--family", "hesse-orbit", "--tolerance", "1e-30"])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(1));

    // exit 2: unknown family
    let usage = sporadic()
        .args(["verify", "--family", "not-a-family"])
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(2));

    // exit 2: unknown flags (argument parsing)
    let usage = sporadic().args(["verify", "--bogus"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));

    // exit 3: unwritable output path
    let io = sporadic()
        .args([
            "verify",
            "--family",
            "trine-r2",
            "--output",
            "/nonexistent-dir/cert.json",
        ])
        .output()
        .unwrap();
    assert_eq!(io.status.code(), Some(3));

    println!("acceptance criterion 13: PASS — deterministic output, exit statuses 0/1/2/3");
}

#[test]
fn seed_environment_override() {
    // SPORADIC_SEED matches an explicit --seed, and only the seed
    let by_flag = sporadic()
        .args([
            "entropy-search",
            "--family",
            "qubit-plus",
            "--seed",
            "5",
            "--restarts",
            "8",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    let by_env = sporadic()
        .args([
            "entropy-search",
            "--family",
            "qubit-plus",
            "--restarts",
            "8",
            "--format",
            "json",
        ])
        .env("SPORADIC_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(by_flag.stdout, by_env.stdout);

    let bad_env = sporadic()
        .args(["entropy-search", "--family", "qubit-plus"])
        .env("SPORADIC_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn impossible_tolerance_splits_exact_from_float_families() {
    // at tolerance 1e-30 the floating-point families fail, but the report
    // still covers all 13 families and the exact-arithmetic ones pass
    let out = sporadic()
        .args(["report-all", "--tolerance", "1e-30", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let families = doc["families"].as_array().unwrap();
    assert_eq!(families.len(), 13);
    assert!(!doc["overall"].as_bool().unwrap());
    let overall_of = |name: &str| {
        families
            .iter()
            .find(|f| f["subject"] == name)
            .unwrap()["overall"]
            .as_bool()
            .unwrap()
    };
    assert!(!overall_of("hesse-orbit"));
    assert!(!overall_of("hoggar-plus"));
    // exact integer/golden-field families: only float-valued welch
    // comparisons may fail, every exact check still passes
    for name in ["fano-28", "so8-28", "icosahedron"] {
        let fam = families.iter().find(|f| f["subject"] == name).unwrap();
        for check in fam["checks"].as_array().unwrap() {
            let passed = check["passed"].as_bool().unwrap();
            let is_float_check = check["name"].as_str().unwrap().starts_with("welch");
            assert!(
                passed || is_float_check,
                "{}/{} failed at 1e-30",
                name,
                check["name"]
            );
        }
    }
}

#[test]
fn invalid_config_is_a_usage_error() {
    let bad_tol = sporadic()
        .args(["verify", "--family", "trine-r2", "--tolerance", "0"])
        .output()
        .unwrap();
    assert_eq!(bad_tol.status.code(), Some(2));
    let bad_restarts = sporadic()
        .args([
            "entropy-search",
            "--family",
            "qubit-plus",
            "--restarts",
            "0",
        ])
        .output()
        .unwrap();
    assert_eq!(bad_restarts.status.code(), Some(2));
}

#[test]
fn verify_json_documents_are_well_formed() {
    let out = sporadic()
        .args(["verify", "--family", "bounds", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["subject"], "bounds");
    assert_eq!(doc["config"]["seed"], 0);
    assert!(doc["overall"].as_bool().unwrap());
    // deviations are 17-significant-digit decimal strings
    let dev = doc["checks"][0]["max_deviation"].as_str().unwrap();
    assert!(dev.parse::<f64>().is_ok());
}

#[test]
fn build_artifact_parses_back() {
    let out = sporadic()
        .args(["build", "--family", "hesse-orbit"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let ensemble = sporadic_core::sic::SicEnsemble::from_json(&text).unwrap();
    assert_eq!(ensemble.dimension(), 3);
    assert_eq!(ensemble.provenance(), "hesse-orbit");
}

#[test]
fn entropy_search_reports_pass() {
    let out = sporadic()
        .args([
            "entropy-search",
            "--family",
            "hesse-orbit",
            "--format",
            "text",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("minimizers at the minimum: 12 (expected 12)"));
}
