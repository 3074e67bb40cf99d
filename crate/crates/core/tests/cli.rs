use std::path::PathBuf;
use std::process::{Command, Output};

fn spec_path(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("specs");
    p.push(format!("{name}.json"));
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_patseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn exit(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn signs(csv: &str) -> String {
    csv.lines()
        .skip(1)
        .map(|line| {
            if line.split(',').nth(1) == Some("0") {
                '+'
            } else {
                '-'
            }
        })
        .collect()
}

#[test]
fn count_prints_occurrences() {
    let spec = spec_path("thue_morse");
    for (word, n, want) in [("0011", "6", "1"), ("0011", "51", "2"), ("1", "0", "0")] {
        let out = run(&["count", "--spec", &spec, "--word", word, "--n", n]);
        assert_eq!(exit(&out), 0);
        assert_eq!(stdout(&out).trim(), want);
    }
    let big = run(&[
        "count",
        "--spec",
        &spec,
        "--word",
        "1",
        "--n",
        "340282366920938463463374607431768211455",
    ]);
    assert_eq!(stdout(&big).trim(), "128");
}

#[test]
fn count_rejects_bad_words() {
    let spec = spec_path("thue_morse");
    for word in ["2", "00", "x"] {
        let out = run(&["count", "--spec", &spec, "--word", word, "--n", "5"]);
        assert_eq!(exit(&out), 2, "word {word}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn count_accepts_list_words() {
    let out = run(&[
        "count",
        "--spec",
        &spec_path("base12"),
        "--word",
        "11,0",
        "--n",
        "132",
    ]);
    assert_eq!(exit(&out), 0);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn seq_methods_are_byte_identical() {
    for name in [
        "thue_morse",
        "rudin_shapiro",
        "base3_mix",
        "leading_zeros",
        "empty",
        "base12",
    ] {
        for fmt in ["csv", "json"] {
            let spec = spec_path(name);
            let a = run(&[
                "seq", "--spec", &spec, "--len", "500", "--method", "direct", "--out", fmt,
            ]);
            let b = run(&[
                "seq",
                "--spec",
                &spec,
                "--len",
                "500",
                "--method",
                "substitution",
                "--out",
                fmt,
            ]);
            assert_eq!(exit(&a), 0);
            assert_eq!(a.stdout, b.stdout, "{name} {fmt}");
        }
    }
}

#[test]
fn seq_classical_prefixes() {
    let tm = run(&["seq", "--spec", &spec_path("thue_morse"), "--len", "8"]);
    assert_eq!(signs(&stdout(&tm)), "+--+-++-");
    let periodic = run(&["seq", "--spec", &spec_path("periodic"), "--len", "8"]);
    assert_eq!(signs(&stdout(&periodic)), "+-+-+-+-");
    let empty = run(&["seq", "--spec", &spec_path("empty"), "--len", "8"]);
    assert_eq!(signs(&stdout(&empty)), "++++++++");
}

#[test]
fn seq_csv_layout() {
    let out = stdout(&run(&[
        "seq",
        "--spec",
        &spec_path("base3_mix"),
        "--len",
        "3",
    ]));
    assert_eq!(
        out,
        "n,k,re,im\n0,0,1.000000000000,0.000000000000\n1,1,-0.500000000000,0.866025403784\n2,0,1.000000000000,0.000000000000\n"
    );
}

#[test]
fn seq_json_parses() {
    let out = stdout(&run(&[
        "seq",
        "--spec",
        &spec_path("rudin_shapiro"),
        "--len",
        "4",
        "--out",
        "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let ks: Vec<u64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["k"].as_u64().unwrap())
        .collect();
    assert_eq!(ks, vec![0, 0, 0, 1]);
}

#[test]
fn sums_thue_morse_at_powers() {
    let out = stdout(&run(&[
        "sums",
        "--spec",
        &spec_path("thue_morse"),
        "--nmax",
        "1024",
    ]));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("N,c_0,c_1,abs_sum,mean_abs"));
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let (n, c0, c1): (u64, i64, i64) = (
            f[0].parse().unwrap(),
            f[1].parse().unwrap(),
            f[2].parse().unwrap(),
        );
        assert_eq!((c0 + c1) as u64, n);
        assert!((c0 - c1).abs() <= 1);
    }
}

#[test]
fn sums_explicit_checkpoints_and_json() {
    let out = stdout(&run(&[
        "sums",
        "--spec",
        &spec_path("empty"),
        "--nmax",
        "100",
        "--checkpoints",
        "7,100,500",
        "--out",
        "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["counts"], serde_json::json!([100, 0, 0, 0]));
}

#[test]
fn sums_rejects_zero_horizon() {
    assert_eq!(
        exit(&run(&[
            "sums",
            "--spec",
            &spec_path("empty"),
            "--nmax",
            "0"
        ])),
        2
    );
}

#[test]
fn decide_exit_codes() {
    for (name, code) in [
        ("base3_mix", 0),
        ("periodic", 0),
        ("thue_morse", 0),
        ("rudin_shapiro", 0),
        ("odd_indicator", 1),
        ("empty", 1),
    ] {
        let out = run(&["decide", "--spec", &spec_path(name)]);
        assert_eq!(exit(&out), code, "{name}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["holds"], serde_json::json!(code == 0));
    }
}

#[test]
fn decide_reports_certificates() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["decide", "--spec", &spec_path("periodic")]))).unwrap();
    assert_eq!(v["b_is_eigenvalue"], serde_json::json!(true));
    assert_eq!(v["kernel_condition"], serde_json::json!(true));
    assert_eq!(v["dimensions"], serde_json::json!(4));
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["decide", "--spec", &spec_path("base3_mix")]))).unwrap();
    assert_eq!(v["b_is_eigenvalue"], serde_json::json!(false));
}

#[test]
fn malformed_inputs_exit_two() {
    let dir = std::env::temp_dir().join(format!("patseq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"base": 2, "modulus": 2, "patterns": [{"word": "2", "weight": 1}]}"#,
    )
    .unwrap();
    let bad = bad.to_string_lossy().into_owned();
    assert_eq!(exit(&run(&["decide", "--spec", &bad])), 2);
    assert_eq!(
        exit(&run(&["decide", "--spec", "/nonexistent/spec.json"])),
        2
    );
    assert_eq!(exit(&run(&["seq", "--spec", &spec_path("empty")])), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_passes_on_bundled_specs() {
    for (name, depth) in [
        ("periodic", "4"),
        ("leading_zeros", "3"),
        ("base3_mix", "3"),
        ("base12", "1"),
    ] {
        let out = run(&["verify", "--spec", &spec_path(name), "--depth", depth]);
        assert_eq!(exit(&out), 0, "{name}: {}", stdout(&out));
        let text = stdout(&out);
        assert!(!text.contains("[FAIL]"));
        assert!(text.contains("[PASS] decomposition"));
    }
    let out = run(&["verify", "--spec", &spec_path("leading_zeros"), "--depth", "3"]);
    assert!(stdout(&out).contains("2 parts with sizes [2, 3]"));
}

#[test]
fn verify_json_report() {
    let out = run(&[
        "verify",
        "--spec",
        &spec_path("thue_morse"),
        "--out",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 5);
    assert!(checks
        .iter()
        .all(|c| c["passed"] == serde_json::json!(true)));
}

#[test]
fn outputs_are_deterministic() {
    let spec = spec_path("base3_mix");
    for args in [
        vec!["sums", "--spec", &spec, "--nmax", "600000"],
        vec!["decide", "--spec", &spec],
        vec!["seq", "--spec", &spec, "--len", "300", "--out", "json"],
        vec!["verify", "--spec", &spec],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}
