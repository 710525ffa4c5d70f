use std::process::{Command, Output};

use serde_json::Value;

fn sovfft(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sovfft")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("sovfft-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn bratteli_dot_counts() {
    let o = sovfft(&["bratteli", "--chain", "brauer", "-n", "3", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().filter(|l| l.contains("->")).count(), 11);
    assert_eq!(s.lines().filter(|l| l.contains("[label=")).count(), 9);
}

#[test]
fn bmw_matches_brauer_structure() {
    let a = sovfft(&["bratteli", "--chain", "bmw", "-n", "5", "--format", "csv"]);
    let b = sovfft(&["bratteli", "--chain", "brauer", "-n", "5", "--format", "csv"]);
    assert_eq!(stdout(&a), stdout(&b));
    let p = sovfft(&["plan", "--chain", "bmw", "-n", "4", "--format", "csv"]);
    assert_eq!(p.status.code(), Some(0));
}

#[test]
fn dims_csv_matches_expected() {
    let o = sovfft(&["dims", "--chain", "tl", "-n", "6", "--format", "csv"]);
    for line in stdout(&o).lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f[1], f[2], "{line}");
    }
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["fft", "--chain", "sn", "-n", "3", "--q", "1/2"],
        &["fft", "--chain", "bmw", "-n", "3"],
        &["invert", "--chain", "bmw", "-n", "3"],
        &["bratteli", "--chain", "nope", "-n", "3"],
        &["fft", "--chain", "tl", "-n", "3", "--q", "1/0"],
        &["plan", "--chain", "tl", "-n", "3", "--format", "dot"],
        &["invert", "--chain", "tl", "-n", "3"],
        &["fft", "--chain", "tl", "-n", "3", "--coeffs", "/nonexistent/f.json"],
    ];
    for args in cases {
        let o = sovfft(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let bmw = sovfft(&["fft", "--chain", "bmw", "-n", "3"]);
    assert!(String::from_utf8_lossy(&bmw.stderr).contains("structural"));
}

#[test]
fn fft_file_roundtrip() {
    let f = tmp("f.json");
    std::fs::write(
        &f,
        r#"{"chain":"tl","n":4,"q":"10/3","coeffs":[{"diagram":"1-2,3-4,5-6,7-8","value":"1/2"},{"diagram":"1-5,2-6,3-7,4-8","value":"-3"}]}"#,
    )
    .unwrap();
    let o = sovfft(&["fft", "--chain", "tl", "-n", "4", "--q", "10/3", "--algo", "sov", "--coeffs", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let img: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(img["ops"]["mul"].as_u64().unwrap() <= 532);
    assert_eq!(img["bound"]["paper"], "532");
    let naive = sovfft(&["fft", "--chain", "tl", "-n", "4", "--algo", "naive", "--coeffs", f.to_str().unwrap()]);
    let nimg: Value = serde_json::from_str(&stdout(&naive)).unwrap();
    assert_eq!(nimg["blocks"], img["blocks"]);

    let i = tmp("img.json");
    std::fs::write(&i, stdout(&o)).unwrap();
    let back = sovfft(&["invert", "--chain", "tl", "-n", "4", "--image", i.to_str().unwrap()]);
    assert_eq!(back.status.code(), Some(0));
    let g: Value = serde_json::from_str(&stdout(&back)).unwrap();
    let src: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    let key = |v: &Value| {
        let mut c: Vec<(String, String)> = v["coeffs"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| (x["diagram"].as_str().unwrap().to_string(), x["value"].as_str().unwrap().to_string()))
            .collect();
        c.sort();
        c
    };
    assert_eq!(key(&g), key(&src));
}

#[test]
fn verify_brauer_three_passes() {
    let o = sovfft(&["verify", "--chain", "brauer", "-n", "3", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for suite in ["relations", "factor-set", "hom-counts", "roundtrip", "bounds"] {
        assert!(s.contains(&format!("PASS {suite}:")), "{suite} missing in\n{s}");
    }
}

#[test]
fn degenerate_q_is_a_verification_failure() {
    let o = sovfft(&["verify", "--chain", "tl", "-n", "3", "--q", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bench_is_deterministic_and_within_bounds() {
    let args = ["bench", "--chain", "tl", "-n", "6", "--seed", "7", "--trials", "3"];
    let a = stdout(&sovfft(&args));
    assert_eq!(a, stdout(&sovfft(&args)));
    let mut lines = a.lines();
    assert_eq!(lines.next().unwrap(), "n,dim,naive_mul,sov_mul,sov_add,predicted,paper_bound,reduced_t");
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let sov: u128 = f[3].parse().unwrap();
        let bound: u128 = f[6].parse().unwrap();
        assert!(sov <= bound, "{line}");
    }
}
