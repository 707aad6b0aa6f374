use std::process::Command;

use hopfsmith::{exit_code, run, Status};
use proptest::prelude::*;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["hopfsmith"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--json", "--no-timing"]);
    let (code, out, err) = call(&a);
    assert!(!out.is_empty(), "{args:?}: {err}");
    (code, serde_json::from_str(&out).unwrap())
}

fn status_of(report: &Value, name: &str) -> String {
    report["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap_or_else(|| panic!("no check {name}"))["status"]
        .as_str()
        .unwrap()
        .to_string()
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfsmith-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn census_prints_a_json_array() {
    assert_eq!(call(&["census", "point"]), (0, "[1]\n".into(), String::new()));
    assert_eq!(call(&["census", "mnd"]).1, "[1,1,2]\n");
}

#[test]
fn gray_of_globe_files() {
    let g1 = tmp("globe1.json");
    std::fs::write(&g1, walking::globe(1).unwrap().to_json()).unwrap();
    let g1 = g1.to_str().unwrap();
    let out = tmp("gray.json");
    let dot = tmp("gray.dot");
    let (code, rep) = json(&["gray", g1, g1, "-o", out.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(rep["data"]["census"], serde_json::json!([4, 4, 1]));
    assert_eq!(call(&["census", out.to_str().unwrap()]).1, "[4,4,1]\n");
    let d = std::fs::read_to_string(dot).unwrap();
    assert!(d.starts_with("digraph"));
    assert_eq!(d.matches("shape=box").count(), 9);
    assert!(d.contains("-> "));
}

#[test]
fn smash_of_mnd() {
    let (code, rep) = json(&["smash", "mnd", "mnd"]);
    assert_eq!(code, 0);
    assert_eq!(rep["data"]["census"], serde_json::json!([1, 0, 1, 4, 4]));
    assert_eq!(rep["data"]["gray_census"], serde_json::json!([1, 2, 5, 4, 4]));
}

#[test]
fn smash_needs_a_basepoint() {
    let (code, _, err) = call(&["smash", "adj", "o2"]);
    assert_eq!(code, 64, "{err}");
    assert!(err.contains("basepoint"));
    let (code, _, _) = call(&["smash", "adj", "globe1", "--point-b", "nope"]);
    assert_eq!(code, 1);
}

#[test]
fn shear_check_reports_flags_as_data() {
    let (code, rep) = json(&["shear-check", "s3"]);
    assert_eq!(code, 0);
    assert_eq!(rep["data"]["hopf"], true);
    assert_eq!(status_of(&rep, "universal shear evaluates to NE"), "pass");
    let (code, rep) = json(&["shear-check", "idempotent"]);
    assert_eq!(code, 0);
    assert_eq!(rep["data"]["hopf"], false);
    assert_eq!(rep["data"]["cohopf"], false);
    for w in ["NW", "NE", "SW", "SE"] {
        assert_eq!(rep["data"]["shears"][w]["invertible"], false);
    }
}

#[test]
fn corrupted_fixture_fails_with_a_witness() {
    let (code, rep) = json(&["shear-check", "corrupted-z2"]);
    assert_eq!(code, 1);
    assert_eq!(status_of(&rep, "axiom counit"), "fail");
    let w = rep["checks"].as_array().unwrap().iter().find(|c| c["name"] == "axiom counit").unwrap()["witness"].clone();
    assert_eq!((w["row"].as_u64(), w["col"].as_u64()), (Some(0), Some(1)));
}

#[test]
fn antipode_and_integrals() {
    let (code, rep) = json(&["antipode", "sweedler"]);
    assert_eq!(code, 0);
    assert_eq!(rep["data"]["antipode_order"], 4);
    assert_eq!(rep["data"]["antipode"][2], serde_json::json!(["0", "0", "0", "1"]));
    let (code, rep) = json(&["antipode", "idempotent"]);
    assert_eq!(code, 0);
    assert_eq!(rep["data"]["hopf"], false);
    assert!(rep["data"].get("antipode").is_none());
    let (code, rep) = json(&["integrals", "z2"]);
    assert_eq!(code, 0);
    assert_eq!(rep["data"]["integrals"][0]["coords"], serde_json::json!(["1", "0"]));
    assert_eq!(rep["data"]["cointegrals"][0]["coords"], serde_json::json!(["1", "1"]));
}

#[test]
fn bialgebra_files() {
    let p = tmp("sweedler.json");
    std::fs::write(&p, linear_hopf::fixtures::sweedler().to_json()).unwrap();
    let (code, rep) = json(&["antipode", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(rep["data"]["antipode_order"], 4);
    let bad = tmp("bad.json");
    std::fs::write(&bad, r#"{"field":"Q","dim":2,"m":[[1]],"u":[1,0],"delta":[],"epsilon":[1,1]}"#).unwrap();
    assert_eq!(call(&["antipode", bad.to_str().unwrap()]).0, 1);
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(call(&["antipode", bad.to_str().unwrap()]).0, 64);
}

#[test]
fn reconstruct_fixtures_and_families() {
    for name in ["z2", "s3", "sweedler", "idempotent"] {
        let (code, rep) = json(&["reconstruct", name]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(status_of(&rep, "Hopf flags agree"), "pass");
    }
    let fam = tmp("family.json");
    std::fs::write(&fam, r#"{"bialgebra":"s3","comodules":["trivial"]}"#).unwrap();
    let (code, rep) = json(&["reconstruct", fam.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(status_of(&rep, "canonical map is a coalgebra map"), "pass");
    assert_eq!(status_of(&rep, "canonical map is an isomorphism"), "fail");
    std::fs::write(&fam, r#"{"bialgebra":"sweedler","comodules":["regular","dual-regular"]}"#).unwrap();
    assert_eq!(json(&["reconstruct", fam.to_str().unwrap()]).0, 0);
    let (code, rep) = json(&["reconstruct", "sweedler", "--depth", "1"]);
    assert_eq!(code, 1);
    assert_eq!(status_of(&rep, "family is usable"), "fail");
}

#[test]
fn proof_skeleton_table() {
    let (code, out, _) = call(&["proof-skeleton", "--no-timing"]);
    assert_eq!(code, 0);
    assert!(out.contains("four-cell") && out.contains("collapse-trivial"));
    let (_, rep) = json(&["proof-skeleton"]);
    assert!(rep["data"]["counts"]["L"].as_u64().unwrap() >= 2);
    assert!(rep["data"]["counts"]["R"].as_u64().unwrap() >= 2);
    let (code, rep) = json(&["proof-skeleton", "--mutate", "3"]);
    assert_eq!(code, 1);
    let c = rep["checks"].as_array().unwrap().iter().find(|c| c["name"] == "chain is composable").unwrap().clone();
    assert_eq!(c["witness"], 3);
    assert_eq!(call(&["proof-skeleton", "--mutate", "99"]).0, 64);
}

#[test]
fn chain_files() {
    let p = tmp("chain.json");
    std::fs::write(&p, serde_json::to_string(&walking::skeleton::skeleton_chain()).unwrap()).unwrap();
    assert_eq!(call(&["proof-skeleton", "--chain", p.to_str().unwrap()]).0, 0);
    std::fs::write(&p, "[]").unwrap();
    // an empty chain composes vacuously but never reaches the shear image
    let (code, rep) = json(&["proof-skeleton", "--chain", p.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(status_of(&rep, "2-boundary matches the shear image"), "unknown");
}

#[test]
fn usage_errors() {
    assert_eq!(call(&[]).0, 64);
    assert_eq!(call(&["gray", "mnd"]).0, 64);
    assert_eq!(call(&["shear-check", "no-such-fixture"]).0, 64);
    assert_eq!(call(&["reconstruct", "z2", "--depth", "two"]).0, 64);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn json_reports_are_deterministic() {
    for args in [&["shear-check", "sweedler"][..], &["gray", "mnd", "mnd"], &["reconstruct", "s3"], &["proof-skeleton"]] {
        let mut a = args.to_vec();
        a.extend(["--json", "--no-timing"]);
        assert_eq!(call(&a).1, call(&a).1);
        assert!(!call(&a).1.contains("timing_ms"));
    }
    assert!(call(&["census", "mnd", "--json"]).1.contains("timing_ms"));
}

#[test]
fn binary_and_budget_env() {
    let bin = env!("CARGO_BIN_EXE_hopfsmith");
    let st = Command::new(bin).args(["shear-check", "corrupted-z2"]).output().unwrap();
    assert_eq!(st.status.code(), Some(1));
    let st = Command::new(bin).args(["proof-skeleton"]).env("HOPFSMITH_BUDGET", "5000").output().unwrap();
    assert_eq!(st.status.code(), Some(0));
    let st = Command::new(bin).args(["proof-skeleton"]).env("HOPFSMITH_BUDGET", "lots").output().unwrap();
    assert_eq!(st.status.code(), Some(64));
    let st = Command::new(bin).arg("--version").output().unwrap();
    assert_eq!(st.status.code(), Some(0));
}

fn oracle(statuses: &[Status]) -> i32 {
    if statuses.contains(&Status::Fail) {
        1
    } else if statuses.contains(&Status::Unknown) {
        2
    } else {
        0
    }
}

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![Just(Status::Pass), Just(Status::Fail), Just(Status::Unknown)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exit_code_contract(v in proptest::collection::vec(status(), 0..12)) {
        prop_assert_eq!(exit_code(v.clone()), oracle(&v));
    }

    #[test]
    fn exit_codes_follow_reported_statuses(
        fixture in proptest::sample::select(linear_hopf::fixtures::NAMES.to_vec()),
        cmd in proptest::sample::select(vec!["shear-check", "antipode", "integrals"]),
    ) {
        let (code, rep) = json(&[cmd, fixture]);
        let statuses: Vec<Status> = rep["checks"].as_array().unwrap().iter().map(|c| match c["status"].as_str().unwrap() {
            "pass" => Status::Pass,
            "fail" => Status::Fail,
            _ => Status::Unknown,
        }).collect();
        prop_assert_eq!(code, oracle(&statuses));
        // only the corrupted fixture fails; Hopf flags are never failures
        prop_assert_eq!(code == 1, fixture == "corrupted-z2");
    }
}
