//! Drives the `permlip` binary: output formats, engine agreement and the
//! exit-code contract.

use std::process::{Command, Output};

use permlip::cli::parse_bfile;
use permlip::BigCount;

fn permlip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permlip"))
        .args(args)
        .env_remove("PERMLIP_CEILING")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_examples() {
    let o = permlip(&["count", "-n", "6", "-m", "2", "--engine", "brute"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "18\n"));
    let o = permlip(&["count", "-n", "1", "-m", "1", "--engine", "brute"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn engines_agree_up_to_12() {
    for m in 1..=4u32 {
        for n in 1..=12usize {
            let (ms, ns) = (m.to_string(), n.to_string());
            let brute = stdout(&permlip(&[
                "count", "-n", &ns, "-m", &ms, "--engine", "brute",
            ]));
            for engine in ["closed", "recurrence", "gf"] {
                let o = permlip(&["count", "-n", &ns, "-m", &ms, "--engine", engine]);
                if m <= 2 || m as usize + 1 >= n {
                    assert_eq!(stdout(&o), brute, "{engine} n={n} m={m}");
                } else {
                    assert_eq!(o.status.code(), Some(2), "{engine} n={n} m={m}");
                }
            }
        }
    }
}

#[test]
fn exact_engines_agree_at_n_100() {
    let outs: Vec<String> = ["closed", "recurrence", "gf"]
        .iter()
        .map(|e| stdout(&permlip(&["count", "-n", "100", "-m", "2", "--engine", e])))
        .collect();
    assert!(outs.iter().all(|o| o == &outs[0]));
    assert_eq!(outs[0].trim(), "60117578549718044");
}

#[test]
fn bfile_round_trip() {
    let o = permlip(&["seq", "-m", "2", "-N", "6", "--format", "bfile"]);
    assert_eq!(stdout(&o), "1 1\n2 2\n3 5\n4 8\n5 12\n6 18\n");

    let long = stdout(&permlip(&[
        "seq", "-m", "2", "-N", "300", "--format", "bfile",
    ]));
    let parsed = parse_bfile(&long).unwrap();
    let plain = stdout(&permlip(&[
        "seq", "-m", "2", "-N", "300", "--format", "plain",
    ]));
    let expected: Vec<(usize, BigCount)> = plain
        .lines()
        .enumerate()
        .map(|(i, v)| (i + 1, v.parse().unwrap()))
        .collect();
    assert_eq!(parsed, expected);
    assert_eq!(parsed.len(), 300);
}

#[test]
fn csv_and_json_formats() {
    let o = permlip(&["seq", "-m", "1", "-N", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "1,1\n2,2\n3,2\n4,2\n");
    let o = permlip(&["seq", "-m", "3", "-N", "8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["engine"], "brute");
    assert_eq!(v["terms"][7], "214");
    assert!(v["terms"].as_array().unwrap().iter().all(|t| t.is_string()));
}

#[test]
fn exit_code_contract() {
    assert_eq!(
        permlip(&["seq", "-m", "2", "-N", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(permlip(&["count", "-n", "5"]).status.code(), Some(2));
    assert_eq!(
        permlip(&["count", "-n", "9", "-m", "3", "--engine", "gf"])
            .status
            .code(),
        Some(2)
    );
    let o = permlip(&["count", "-n", "20", "-m", "3", "--engine", "brute"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ceiling"));
    assert!(o.stdout.is_empty());
    assert_eq!(
        permlip(&["verify", "--suite", "split", "-N", "12"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn ceiling_env_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_permlip"))
        .args(["count", "-n", "6", "-m", "2", "--engine", "brute"])
        .env("PERMLIP_CEILING", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_permlip"))
        .args(["count", "-n", "6", "-m", "2"])
        .env("PERMLIP_CEILING", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    for (suite, n) in [
        ("max-position", "10"),
        ("d-class", "12"),
        ("c-bijection", "12"),
        ("b-recurrence", "12"),
        ("split", "12"),
        ("gf", "200"),
        ("asymptotics", "200"),
    ] {
        let o = permlip(&["verify", "--suite", suite, "-N", n]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).contains("pass"));
    }
    let o = permlip(&["verify", "--suite", "max-position", "-N", "10", "-m", "3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn asym_and_probe() {
    let o = permlip(&["asym"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["rho"].as_f64().unwrap() - 0.6823278038).abs() < 1e-10);
    assert!(v["alpha"].is_number() && v["C"].is_number());

    let o = permlip(&["asym", "--csv", "60"]);
    let text = stdout(&o);
    let csv = &text[text.find("n,exact").unwrap()..];
    assert_eq!(csv.lines().count(), 61);

    let o = permlip(&["probe", "-m", "2", "-N", "14"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["fitted"]["coefficients"],
        serde_json::json!([3, -3, 2, -2, 1])
    );

    let o = permlip(&["probe", "-m", "3", "-N", "12"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"][11], "2841");
    assert!(v.get("alpha_estimate").is_some());
}
