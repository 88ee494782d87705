use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tableaux")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn golden_outputs() {
    let cases: &[(&str, &[&str])] = &[
        ("plinth_two_rows.txt", &["plinth", "--shape", "3,2", "--syt", "1 2 3/4 5"]),
        ("evacuate_trace.txt", &["evacuate", "--syt", "1 2 7/3 5/4 6", "--trace"]),
        ("rectify_trace.txt", &["rectify", "--syt", ". . 2 3 / . 1 5 6 / 4 7 / 8", "--trace"]),
        ("decompose_minimal.txt", &["decompose", "--ssyt", ". . 0 0 / . 0 1 1 / . 1 2 2 / 0 2 3"]),
        (
            "plinth_row_order.txt",
            &["plinth", "--shape", "4,4,4,3/2,1,1", "--syt", "1 2 / 3 4 5 / 6 7 8 / 9 10 11"],
        ),
        ("skew_evacuate.txt", &["skew-evacuate", "--shape", "3,2,1/1", "--syt", "1 2 / 3 4 / 5"]),
        ("genfun_two_rows.txt", &["genfun", "--shape", "3,2", "--method", "plinth", "--truncate", "8"]),
        ("maj.txt", &["maj", "--syt", "1 2 5 / 3 4"]),
    ];
    for (file, args) in cases {
        assert_eq!(stdout(args), golden(file), "{file}");
    }
}

#[test]
fn genfun_methods_agree() {
    let a = stdout(&["genfun", "--shape", "1", "--method", "plinth", "--truncate", "3"]);
    assert_eq!(a, "1 + q + q^2 + q^3\n");
    for m in ["stanley", "bruteforce"] {
        assert_eq!(stdout(&["genfun", "--shape", "3,3/1", "--method", m, "--truncate", "10"]),
                   stdout(&["genfun", "--shape", "3,3/1", "--method", "plinth", "--truncate", "10"]));
    }
}

#[test]
fn json_output() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["plinth", "--shape", "3,2", "--syt", "1 2 3/4 5", "--json"])).unwrap();
    assert_eq!(v["shape"], "3,2");
    assert_eq!(v["rows"], serde_json::json!([[0, 0, 0], [1, 1]]));
    assert_eq!(v["meta"]["volume"], 2);
    let g: serde_json::Value =
        serde_json::from_str(&stdout(&["genfun", "--shape", "1,1", "--truncate", "4", "--json"])).unwrap();
    assert_eq!(g["coeffs"], serde_json::json!([0, 1, 1, 2, 2]));
}

#[test]
fn file_input() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("q.txt");
    std::fs::write(&path, "1 2 7\n3 5\n4 6\n").unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(stdout(&["evacuate", "--syt", &arg]), "1 2 4 / 3 5 / 6 7\n");
}

#[test]
fn domain_errors_exit_nonzero() {
    let out = run(&["plinth", "--syt", "2 1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert_eq!(run(&["evacuate", "--syt", ". 1 / 2"]).status.code(), Some(2));
    assert_eq!(run(&["genfun", "--shape", "2,3"]).status.code(), Some(2));
    assert!(!run(&["no-such-verb"]).status.success());
}

#[test]
fn random_rectification_is_seeded() {
    let q = ". . 1 / . 2 3 / 4 5";
    let a = stdout(&["rectify", "--syt", q, "--random", "--seed", "9"]);
    assert_eq!(a, stdout(&["rectify", "--syt", q, "--random", "--seed", "9"]));
    assert_eq!(a, stdout(&["rectify", "--syt", q]));
}

#[test]
fn verify_small_universe() {
    let out = run(&["verify", "all", "--max-cells", "5", "--truncate", "8"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 9);
    let json = stdout(&["verify", "rsk", "--max-cells", "6", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["passed"], true);
}
