use std::process::{Command, Output};

use serde_json::Value;

fn regdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regdist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = regdist(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn map_and_invert_examples() {
    let out = regdist(&["map", "--s", "9", "--t", "15", "10^4,5^7,3^5,1^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "25,18^2,9,5^3,3,2^2\n");

    let out = regdist(&["invert", "--s", "9", "--t", "15", "25,18^2,9,5^3,3,2^2"]);
    assert_eq!(stdout(&out), "10^4,5^7,3^5,1^2\n");

    let out = regdist(&["map", "--s", "18", "--t", "30", "--order", "3,2", "9"]);
    assert_eq!(stdout(&out), "1^9\n");
    let out = regdist(&["map", "--s", "18", "--t", "30", "--order", "2,3", "9"]);
    assert_eq!(stdout(&out), "9\n");

    let out = regdist(&[
        "map",
        "--s",
        "9",
        "--t",
        "15",
        "--variant",
        "primepower",
        "10^4,5^7,3^5,1^2",
    ]);
    assert_eq!(stdout(&out), "25,18^2,9,5^3,2^2,1^3\n");
}

#[test]
fn map_then_invert_round_trips() {
    for input in ["50", "10^4,5^7,3^5,1^2", "7^5,4^3,1^9", "20,13,2^9"] {
        let mapped = regdist(&["map", "--s", "6", "--t", "10", input]);
        assert!(mapped.status.success(), "{input}");
        let image = stdout(&mapped);
        let back = regdist(&["invert", "--s", "6", "--t", "10", image.trim()]);
        assert_eq!(stdout(&back).trim(), input, "via {image}");
    }
}

#[test]
fn exit_codes() {
    // Outside the domain.
    assert_eq!(
        regdist(&["map", "--s", "9", "--t", "15", "9"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        regdist(&["invert", "--s", "9", "--t", "15", "15"])
            .status
            .code(),
        Some(1)
    );
    // Bad arguments.
    assert_eq!(
        regdist(&["map", "--s", "1", "--t", "15", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        regdist(&["map", "--s", "9", "--t", "15", "x^y"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        regdist(&["map", "--s", "18", "--t", "30", "--order", "5", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        regdist(&["gf", "--spec", "nonsense 2 3"]).status.code(),
        Some(2)
    );
    assert_eq!(regdist(&["bogus"]).status.code(), Some(2));
}

#[test]
fn orbit_reports_the_cycle() {
    let out = regdist(&["orbit", "--s", "10", "--t", "6", "108,18^4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("30^6") && text.contains("3^60"));
    assert!(text.contains("cycle of length 3"));

    let v = json(&["orbit", "--s", "10", "--t", "6", "108,18^4"]);
    assert_eq!(v["outcome"]["kind"], "cycle");
    assert_eq!(v["outcome"]["length"], 3);
    assert_eq!(v["trajectory"].as_array().unwrap().len(), 3);

    let v = json(&["orbit", "--s", "6", "--t", "10", "50"]);
    assert_eq!(v["outcome"]["kind"], "success");
    assert_eq!(v["outcome"]["ell"], 2);
}

#[test]
fn json_output_for_every_subcommand() {
    let v = json(&["map", "--s", "9", "--t", "15", "10^4,5^7,3^5,1^2"]);
    assert_eq!(v["direction"], "forward");
    assert_eq!(v["output"]["parts"][0], serde_json::json!([25, 1]));
    let v = json(&["invert", "--s", "9", "--t", "15", "25,18^2,9,5^3,3,2^2"]);
    assert_eq!(v["output"]["parts"][0], serde_json::json!([10, 4]));

    let v = json(&["census", "--s", "6", "--t", "10", "--n", "10"]);
    assert_eq!(v["total"], 36);
    assert_eq!(v["zero_step_check"]["agrees"], true);

    let v = json(&["count", "--n", "10", "--regular", "2"]);
    assert_eq!(v["count"], 10);

    let v = json(&["gf", "--spec", "theorem9 2 3", "--N", "5"]);
    assert_eq!(
        v["coefficients"],
        serde_json::json!(["1", "1", "0", "0", "0", "1"])
    );

    let v = json(&["selftest"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn count_and_gf_agree() {
    let gf = json(&["gf", "--spec", "regular-distinct 6 10", "--N", "30"]);
    for n in [0u64, 9, 17, 30] {
        let c = json(&[
            "count",
            "--n",
            &n.to_string(),
            "--regular",
            "6",
            "--distinct",
            "10",
        ]);
        assert_eq!(
            c["count"].to_string(),
            gf["coefficients"][n as usize].as_str().unwrap()
        );
    }
}

#[test]
fn gf_text_and_degree_alias() {
    let out = regdist(&["gf", "--spec", "regular-distinct 2 3", "--degree", "5"]);
    assert_eq!(stdout(&out), "0: 1\n1: 1\n2: 1\n3: 1\n4: 1\n5: 2\n");
}

#[test]
fn selftest_passes() {
    let out = regdist(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("0 failed\n"));
}
