use std::process::{Command, Output};

use serde_json::Value;

fn cb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cb"))
        .args(args)
        .env_remove("CB_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cb(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn reduced_words() {
    let v = json(&["reduced-words", "A", "231645"]);
    assert_eq!(v["result"]["count"], 6);
    assert_eq!(v["result"]["words"][0], "1254");
    assert_eq!(stdout(&["reduced-words", "A", "1"]), "r = 1\n∅\n");
    assert_eq!(stdout(&["reduced-words", "B", "-1,2"]), "r = 1\n1\n");
    assert_eq!(cb(&["reduced-words", "D", "-1,2"]).status.code(), Some(2));
}

#[test]
fn parse_errors_carry_positions() {
    let out = cb(&["reduced-words", "A", "3,1,x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 4"));
}

#[test]
fn products() {
    assert_eq!(stdout(&["product", "pi", "231", "312"]), "[23514] + [25134]\n");
    assert_eq!(stdout(&["product", "pi", "1", "312"]), "[312]\n");
    let b = stdout(&["product", "Bmod", "1,-3,-2", "312"]);
    assert_eq!(b, "[1,-3,5,-2,4]_B + [1,-5,-2,3,4]_B + [5,-3,-2,1,4]_B\n");
    let with_oracle = stdout(&["product", "Bmod", "1,-3,-2", "312", "--oracle"]);
    assert!(with_oracle.starts_with(&b));
    assert!(with_oracle.contains("[PASS]"));
    let d = stdout(&["product", "Dmod", "[1,-3,-2]_D", "312"]);
    assert_eq!(d.matches("_D").count(), 4);
    let w = stdout(&["product", "word", "21:2", "1:1", "--oracle"]);
    assert!(w.starts_with("[213;3] + [231;3] + [321;3]\n"));
    assert!(stdout(&["product", "qsymM", "1", "1", "--oracle"]).starts_with("2*M[1,1] + M[2]\n"));
}

#[test]
fn zeta_flag() {
    let v = json(&["product", "pi", "21", "21", "--zeta", "gt"]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["result"]["psi"]["zeta"], "gt");
    assert_eq!(cb(&["product", "pi", "21", "21", "--zeta", "nope"]).status.code(), Some(2));
    let c = stdout(&["coproduct", "B", "-2,1", "--zeta", "B"]);
    assert!(c.contains("[PASS] Ψ_B commutes with the coproduct"));
}

#[test]
fn stanley() {
    assert_eq!(stdout(&["stanley", "A", "4321", "--basis", "schur"]), "s[3,2,1]\n");
    assert_eq!(stdout(&["stanley", "A", "21"]), "M[1]\n");
    for pi in ["-3,1,-2", "2,-1,3", "-1,-2,-3", "3,-2,1"] {
        let v = json(&["stanley", "B", pi, "--basis", "P"]);
        for t in v["result"]["expansion"]["terms"].as_array().unwrap() {
            assert_eq!(t["den"], "1", "{pi}");
            assert!(!t["num"].as_str().unwrap().starts_with('-'), "{pi}");
        }
    }
    assert!(stdout(&["stanley", "A", "321", "--zeta", "lt"]).contains("[PASS]"));
}

#[test]
fn verify() {
    let v = json(&["verify", "middle-sums", "--max-n", "7"]);
    assert_eq!(v["result"]["total"], 7);
    assert_eq!(v["pass"], true);
    assert!(stdout(&["verify", "a5-sum"]).contains("both sums are 80"));
    assert!(cb(&["verify", "p42"]).status.success());
    assert_eq!(cb(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert!(stdout(&["verify", "--list"]).contains("bd-actions"));
}

#[test]
fn export() {
    let v = json(&["export", "bmod-table", "--left", "2", "--right", "2"]);
    assert_eq!(v["result"]["rows"].as_array().unwrap().len(), 16);
    let v = json(&["export", "bmod-table", "--left", "3..2"]);
    assert_eq!(v["result"]["rows"].as_array().unwrap().len(), 0);
    let v = json(&["export", "sshuffle-table", "--left", "3", "--right", "3"]);
    assert_eq!(v["result"]["rows"].as_array().unwrap().len(), 36);
    let v = json(&["export", "dmod-table", "--left", "2", "--right", "2"]);
    assert_eq!(v["result"]["rows"].as_array().unwrap().len(), 8);
    assert_eq!(cb(&["export", "bmod-table", "--left", "5"]).status.code(), Some(2));
}

#[test]
fn caps() {
    assert_eq!(cb(&["stanley", "A", "12345678"]).status.code(), Some(2));
    assert!(cb(&["stanley", "A", "12345678", "--force"]).status.success());
    let capped = Command::new(env!("CARGO_BIN_EXE_cb"))
        .args(["product", "pi", "321", "21"])
        .env("CB_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("CB_MAX_DEGREE"));
}

#[test]
fn families() {
    let v = json(&["families", "A", "5"]);
    assert_eq!(v["result"]["size"], 8);
    assert_eq!(v["result"]["sum_r"], "80");
    let v = json(&["families", "B", "5", "--m", "3"]);
    assert_eq!(v["result"]["sum_r"], "80");
}

#[test]
fn output_is_deterministic() {
    let args = ["export", "dmod-table", "--left", "3", "--right", "2", "--json"];
    assert_eq!(cb(&args).stdout, cb(&args).stdout);
    let args = ["coproduct", "pi", "35142"];
    assert_eq!(cb(&args).stdout, cb(&args).stdout);
}
