use std::process::{Command, Output};

use kronecker_hall::hall::DoubleElement;

fn khall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_khall")).args(args).output().expect("spawn khall")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn verify_exit_codes() {
    assert_eq!(khall(&["verify", "szanto", "--q", "2", "--max-deg", "3"]).status.code(), Some(0));
    assert_eq!(khall(&["verify", "dj-relations", "--q", "3"]).status.code(), Some(0));
    assert_eq!(khall(&["verify", "unknown"]).status.code(), Some(2));
    assert_eq!(khall(&["verify", "szanto", "--q", "4"]).status.code(), Some(2));
}

#[test]
fn verify_report_is_deterministic() {
    let args = ["verify", "pairing", "--q", "2", "--max-dim", "1,1", "--format", "json"];
    let a = khall(&args);
    let b = khall(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suite"], "pairing");
    for c in v["checks"].as_array().unwrap() {
        for key in ["id", "paper_ref", "verdict", "detail"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
    }
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn census_examples() {
    assert_eq!(stdout(&khall(&["census", "points", "--q", "2", "--max-deg", "3"])), "[3, 1, 2]");
    assert_eq!(stdout(&khall(&["census", "isoclasses", "--dim", "1,1", "--q", "2"])), "4");
    let o = khall(&["census", "hallnum", "--Z", "S1+S2", "--X", "S1", "--Y", "S2", "--q", "2"]);
    assert_eq!(stdout(&o), "1");
}

#[test]
fn compute_examples() {
    let o = khall(&["compute", "one(1,0)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(1)[I0]+ K(0,0) [0]-");

    let o = khall(&["compute", "[I0]*[P0] - v^2*[P0]*[I0]", "--q", "2"]);
    let out = stdout(&o);
    for tube in ["T1(inf)", "T1(0,1)", "T1(1,1)"] {
        assert!(out.contains(tube), "{out}");
    }
    assert_eq!(out.matches("(1/2)").count(), 3, "{out}");

    let o = khall(&["compute", "G(E2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("X[0]+"));
}

#[test]
fn compute_json_round_trips() {
    for (expr, q) in [("one(1,1)", "2"), ("L(0)+ * L(0)-", "3"), ("[P1]*[I0] - v*[I0]*[P1]", "2")] {
        let o = khall(&["compute", expr, "--q", q, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{expr}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let e = DoubleElement::from_json(&v, q.parse().unwrap()).unwrap();
        assert_eq!(serde_json::to_value(&e).unwrap(), v, "{expr}");
    }
}

#[test]
fn compute_errors() {
    let o = khall(&["compute", "[P1]*[I0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 6"));
    let o = khall(&["compute", "[P3]- * [P3]+", "--q", "7"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("too large"));
}
