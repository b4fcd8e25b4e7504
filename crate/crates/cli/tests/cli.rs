//! End-to-end runs of the compiled binary: pinned outputs, exit codes,
//! round trips through the wire format, and determinism under --seed.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyqt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json stdout")
}

// ---- pinned outputs ----

#[test]
fn enumerator_pin() {
    let out = run(&[
        "enumerator", "--family", "rp-bullet", "--m", "1", "--n", "1", "--k", "0", "--stats",
        "area,bounce",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 + q + t\n");
}

#[test]
fn recursion_pin() {
    let out = run(&["recursion", "--m", "1", "--n", "1", "--s", "1", "--k", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "t\n");
}

#[test]
fn verify_final_pin() {
    let out = run(&[
        "verify", "--check", "final", "--m", "1", "--n", "1", "--k", "0", "--points", "3",
        "--seed", "7",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("equal: true"), "{text}");

    let out = run(&[
        "verify", "--check", "final", "--m", "1", "--n", "1", "--k", "0", "--points", "3",
        "--seed", "7", "--output", "json",
    ]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["equal"], Value::Bool(true));
    assert!(report["checked"].as_array().is_some_and(|c| !c.is_empty()));
}

#[test]
fn verify_recursion_sweep() {
    let out = run(&[
        "verify", "--check", "recursion", "--m", "3", "--n", "3", "--k", "1", "--output", "json",
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["equal"], Value::Bool(true));
}

// ---- selftest ----

#[test]
fn selftest_passes() {
    let out = run(&["selftest", "--json"]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["passed"], Value::Bool(true));
    let cases = report["cases"].as_array().expect("cases array");
    assert_eq!(cases.len(), 5);
    assert!(cases.iter().all(|c| c["passed"] == Value::Bool(true)));
}

#[test]
fn selftest_negative_control_names_the_pin() {
    let out = run(&["selftest", "--negative-control"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("FAIL wide-bounce-path"), "{text}");
    assert!(text.contains("negative control caught the corrupted pin"), "{text}");
}

// ---- wire-format round trips ----

#[test]
fn enumerate_stats_map_round_trip() {
    let out = run(&[
        "enumerate", "--family", "valley-polyomino", "--m", "2", "--n", "2", "--k", "1",
        "--output", "json",
    ]);
    assert!(out.status.success());
    let objects = json(&out);
    let objects = objects.as_array().expect("object array");
    assert_eq!(objects.len(), 16);

    for obj in objects {
        let obj_text = obj.to_string();

        // Every enumerated object feeds back into stats.
        let stats = run(&["stats", "--in", &obj_text, "--output", "json"]);
        assert!(stats.status.success(), "stats rejects {obj_text}");
        let stats = json(&stats);

        // zeta transports (area, decorated bounce) to (dinv, decorated area).
        let mapped = run(&["map", "--bijection", "zeta", "--in", &obj_text, "--output", "json"]);
        assert!(mapped.status.success());
        let mapped = json(&mapped);
        assert_eq!(mapped["source_stats"]["area"], stats["area"]);
        assert_eq!(mapped["source_stats"]["bounce_dec"], stats["bounce_dec"]);
        assert_eq!(mapped["image_stats"]["dinv"], stats["area"]);
        assert_eq!(mapped["image_stats"]["area_dec"], stats["bounce_dec"]);

        // The inverse returns the original object.
        let image_text = mapped["image"].to_string();
        let back = run(&["map", "--bijection", "zeta-inv", "--in", &image_text, "--output", "json"]);
        assert!(back.status.success());
        assert_eq!(json(&back)["image"], *obj);
    }
}

#[test]
fn parking_and_stacking_round_trips() {
    let pf = r#"{"dec_rises":[2],"labels":[1,2,2],"path":"NNEENE"}"#;
    let mapped = run(&["map", "--bijection", "pf2", "--in", pf, "--output", "json"]);
    assert!(mapped.status.success());
    let mapped = json(&mapped);
    let back = run(&[
        "map", "--bijection", "pf2-inv", "--in", &mapped["image"].to_string(), "--output", "json",
    ]);
    assert!(back.status.success());
    assert_eq!(json(&back)["image"], serde_json::from_str::<Value>(pf).unwrap());

    let pldp = r#"{"dec_rises":[2,3],"labels":[1,2,3],"path":"NNNEEE"}"#;
    let mapped = run(&["map", "--bijection", "pldp", "--in", pldp, "--output", "json"]);
    assert!(mapped.status.success());
    let mapped = json(&mapped);
    let back = run(&[
        "map", "--bijection", "pldp-inv", "--in", &mapped["image"].to_string(), "--output", "json",
    ]);
    assert!(back.status.success());
    assert_eq!(json(&back)["image"], serde_json::from_str::<Value>(pldp).unwrap());
}

// ---- tables ----

#[test]
fn enumerator_csv_table() {
    let out = run(&[
        "enumerator", "--family", "rp-bullet", "--m", "1", "--n", "2", "--k", "0", "--output",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,n,k,s,polynomial"));
    assert_eq!(lines.next(), Some("1,2,0,,1 + q + t + q^2 + qt + t^2"));
}

// ---- exit codes ----

#[test]
fn usage_errors_exit_two() {
    let bad: [&[&str]; 4] = [
        &["enumerate", "--family", "widgets", "--m", "1", "--n", "1"],
        &["map", "--bijection", "zeta", "--in", "{}", "--output", "csv"],
        &["verify", "--check", "lemma", "--m", "1", "--n", "1", "--r", "5", "--k", "0"],
        &["stats", "--in", "{\"m\":1}"],
    ];
    for args in bad {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty(), "silent usage error for {args:?}");
    }
}

#[test]
fn degenerate_sweep_succeeds() {
    // The (0, 0) frame holds a single empty object, so the sweep is
    // nonvacuous and must still report equality.
    let out = run(&[
        "verify", "--check", "zeta-transport", "--m", "0", "--n", "0", "--k", "0", "--output",
        "json",
    ]);
    assert!(out.status.success());
    assert_eq!(json(&out)["equal"], Value::Bool(true));
}

// ---- determinism ----

#[test]
fn seeded_runs_are_byte_identical() {
    let args = [
        "verify", "--check", "identity1", "--m", "2", "--n", "1", "--k", "1", "--points", "3",
        "--seed", "11",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}
