use std::path::PathBuf;
use std::process::{Command, Output};

fn cmult(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmult")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("cmult-cli-{}-{name}", std::process::id()))
}

#[test]
fn classify_examples() {
    for (poly, want) in [
        ("-2,5,-6,6,-4,1", r#"{"real":[2,1],"imag":[1,1]}"#),
        ("-1,1,1,-1,1,-1,-1,1", r#"{"real":[3,2],"imag":[1,1]}"#),
        ("1,0,1", r#"{"real":[],"imag":[1,1]}"#),
        ("1/4,-1,1", r#"{"real":[2],"imag":[]}"#),
    ] {
        let o = cmult(&["classify", "--poly", poly]);
        assert!(o.status.success(), "{poly}");
        assert_eq!(stdout(&o).trim(), want);
    }
    let o = cmult(&["classify", "--expr", "(x^2+x+1)^2"]);
    assert_eq!(stdout(&o).trim(), r#"{"real":[],"imag":[2,2]}"#);
}

#[test]
fn gen_counts_and_degree_guard() {
    let o = cmult(&["gen", "--degree", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let conds = v["conditions"].as_array().unwrap();
    assert_eq!(conds.len(), 3);
    let names: Vec<String> = conds.iter().map(|c| c["mu_c"].to_string()).collect();
    assert!(names.contains(&r#"{"imag":[1,1],"real":[]}"#.to_string()));
    assert!(names.contains(&r#"{"imag":[],"real":[2]}"#.to_string()));

    let o = cmult(&["gen", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cmult(&["gen"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_file_is_deterministic_and_classifies() {
    let (a, b) = (scratch("a.json"), scratch("b.json"));
    for p in [&a, &b] {
        let o = cmult(&["gen", "--degree", "4", "--out", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["conditions"].as_array().unwrap().len(), 9);
    let o = cmult(&["classify", "--expr", "(x-1)^2*(x^2+1)", "--conditions", a.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), r#"{"real":[2],"imag":[1,1]}"#);
    let o = cmult(&["classify", "--poly", "1,0,1", "--conditions", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn restricted_generation() {
    let path = scratch("monic.json");
    let o = cmult(&["gen", "--degree", "4", "--monic", "--drop-coeff", "3", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let o = cmult(&["classify", "--expr", "2*(x^2-1)^2", "--conditions", path.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), r#"{"real":[2,2],"imag":[]}"#);
    let _ = std::fs::remove_file(path);
}

#[test]
fn tables() {
    let o = cmult(&["table", "--metric", "counts", "--n-range", "3..10"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,t_yhz,t_qxy,ratio");
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[1], "3,5,8,0.625");
    assert_eq!(lines[8], "10,767,296,2.591");

    let o = cmult(&["table", "--metric", "maxdeg", "--n-range", "3..5"]);
    let text = stdout(&o);
    for line in text.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f[2], f[3], "{line}");
    }
    assert_eq!(cmult(&["table", "--metric", "counts", "--n-range", "5..3"]).status.code(), Some(2));
}

#[test]
fn verify_and_bench() {
    let o = cmult(&["verify", "--suite", "icgcd", "--trials", "100", "--seed", "7"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "icgcd: 100/100 pass");
    assert_eq!(cmult(&["verify", "--suite", "nope"]).status.code(), Some(2));

    let o = cmult(&["bench", "--degree", "4", "--method", "qxy"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("n,method,seconds,threads"));
    assert!(text.lines().nth(1).unwrap().starts_with("4,qxy,"));
    assert_eq!(cmult(&["bench", "--degree", "2"]).status.code(), Some(2));
}
