use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};
use tempfile::TempDir;

use stable4::cli::{run, Outcome};
use stable4::{AugmentedForm, ClassificationTable, Han1, Invariants};

fn stable4(args: &[&str]) -> Outcome {
    run(std::iter::once("stable4").chain(args.iter().copied()))
}

fn write(dir: &Path, name: &str, value: &Value) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string_pretty(value).unwrap()).unwrap();
    path
}

fn ok(out: &Outcome) -> &str {
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    &out.stdout
}

#[test]
fn classify_nil_tables() {
    for (z, classes) in [(3, 3), (4, 4)] {
        let family = format!("nil:{z}");
        let out = stable4(&["classify", "--family", &family, "--w", "0", "--category", "smooth"]);
        let v: Value = serde_json::from_str(ok(&out)).unwrap();
        assert_eq!(v["classes_per_signature"], classes);
        assert_eq!(ClassificationTable::from_json(&v).unwrap().finite_classes.len(), classes);
    }
    let out = stable4(&["classify", "--family", "nil:4", "--w", "0", "--format", "table"]);
    let text = ok(&out);
    assert!(text.contains("stride    16"));
    assert_eq!(text.lines().filter(|l| l.contains("orbit")).count(), 3);
}

#[test]
fn output_is_deterministic() {
    let args = ["classify", "--family", "z3", "--w", "100", "--category", "top"];
    let first = stable4(&args);
    ok(&first);
    for _ in 0..3 {
        assert_eq!(stable4(&args), first);
    }
}

#[test]
fn model_p_round_trips_and_is_even() {
    let dir = TempDir::new().unwrap();
    let out = stable4(&["model", "--kind", "p", "--presentation", "nil:2", "--gamma", "011"]);
    let value: Value = serde_json::from_str(ok(&out)).unwrap();
    let h = Han1::from_json(&value).unwrap();
    assert_eq!(h.to_json(), value);
    assert_eq!(value["tau"], "110");
    let file = write(dir.path(), "p.json", &value);
    let out = stable4(&["parity", "--form", file.to_str().unwrap()]);
    assert_eq!(ok(&out).trim(), "Even");
}

#[test]
fn parity_of_m1_form_file() {
    let dir = TempDir::new().unwrap();
    let out = stable4(&["model", "--kind", "m1", "--presentation", "z3"]);
    let value: Value = serde_json::from_str(ok(&out)).unwrap();
    let form = write(dir.path(), "m1.json", &value["form"]);
    AugmentedForm::from_json(&value["form"]).unwrap();
    assert_eq!(ok(&stable4(&["parity", "--form", form.to_str().unwrap()])).trim(), "Odd");
}

#[test]
fn decide_tuples_and_han1_files() {
    let dir = TempDir::new().unwrap();
    let odd = json!({"w": "0", "signature": 0, "parity": "odd", "tau": null});
    let a = write(dir.path(), "a.json", &odd);
    let b = write(dir.path(), "b.json", &odd);
    let args = ["decide", "--a", a.to_str().unwrap(), "--b", b.to_str().unwrap(), "--category", "top", "--family", "z3"];
    assert_eq!(ok(&stable4(&args)).trim(), "EQUIVALENT");

    let p1 = stable4(&["model", "--kind", "p", "--presentation", "z3", "--gamma", "100"]);
    let p2 = stable4(&["model", "--kind", "p", "--presentation", "z3", "--gamma", "001"]);
    let p0 = stable4(&["model", "--kind", "p", "--presentation", "z3", "--gamma", "000"]);
    let f1 = write(dir.path(), "p1.json", &serde_json::from_str(ok(&p1)).unwrap());
    let f2 = write(dir.path(), "p2.json", &serde_json::from_str(ok(&p2)).unwrap());
    let f0 = write(dir.path(), "p0.json", &serde_json::from_str(ok(&p0)).unwrap());
    let decide = |x: &Path, y: &Path| {
        stable4(&["decide", "--a", x.to_str().unwrap(), "--b", y.to_str().unwrap(), "--family", "z3"])
    };
    assert_eq!(ok(&decide(&f1, &f2)).trim(), "EQUIVALENT");
    assert_eq!(ok(&decide(&f0, &f1)).trim(), "DISTINCT");
}

#[test]
fn domain_error_exit_code() {
    let dir = TempDir::new().unwrap();
    let odd8 = json!({"w": "0", "signature": 8, "parity": "odd", "tau": null});
    let a = write(dir.path(), "a.json", &odd8);
    let out = stable4(&["decide", "--a", a.to_str().unwrap(), "--b", a.to_str().unwrap(), "--family", "z3"]);
    assert_eq!(out.code, 2);
    assert_eq!(out.stderr.lines().count(), 1);
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_error_exit_code() {
    assert_eq!(stable4(&["classify", "--family", "z3"]).code, 1);
    assert_eq!(stable4(&["parity", "--form", "/nonexistent/form.json"]).code, 1);
    assert_eq!(stable4(&["fox", "--word", "x q", "--gen", "x", "--presentation", "z3"]).code, 1);
}

#[test]
fn fox_and_arf() {
    let out = stable4(&["fox", "--word", "x y x^-1 y^-1", "--gen", "y"]);
    assert_eq!(ok(&out).trim(), "x - (x y x^-1 y^-1)");
    let out = stable4(&["fox", "--word", "g1 g2 g1^-1 g2^-1", "--gen", "g1", "--presentation", "z3"]);
    assert_eq!(ok(&out).trim(), "1 - g2");

    let dir = TempDir::new().unwrap();
    let q = write(dir.path(), "q.json", &json!({"bilinear": ["01", "10"], "values": "11"}));
    assert_eq!(ok(&stable4(&["arf", "--q", q.to_str().unwrap()])).trim(), "1");
    let q = write(dir.path(), "q0.json", &json!({"bilinear": ["01", "10"], "values": "10"}));
    assert_eq!(ok(&stable4(&["arf", "--q", q.to_str().unwrap()])).trim(), "0");
    let bad = write(dir.path(), "bad.json", &json!({"bilinear": ["00", "00"], "values": "10"}));
    assert_eq!(stable4(&["arf", "--q", bad.to_str().unwrap()]).code, 2);
}

#[test]
fn orbits_and_closure() {
    let out = stable4(&["orbits", "--family", "nil:2"]);
    let v: Value = serde_json::from_str(ok(&out)).unwrap();
    let reps: Vec<&str> = v["orbits"].as_array().unwrap().iter().map(|o| o["representative"].as_str().unwrap()).collect();
    assert_eq!(reps, ["000", "001", "010"]);
    let out = stable4(&["closure", "--family", "z3"]);
    let v: Value = serde_json::from_str(ok(&out)).unwrap();
    assert_eq!(v["size"], 168);
}

#[test]
fn realize_and_family_file() {
    let dir = TempDir::new().unwrap();
    let family = json!({
        "name": "swap",
        "d": 2,
        "out_generators": [["01", "10"]],
        "w": "0",
    });
    let family = write(dir.path(), "family.json", &family);
    let out = stable4(&["classify", "--family", family.to_str().unwrap()]);
    let v: Value = serde_json::from_str(ok(&out)).unwrap();
    // orbits {00}, {01, 10}, {11} and the odd class
    assert_eq!(v["classes_per_signature"], 4);

    let target = json!({"w": "infinity", "signature": -2, "parity": "odd", "tau": null, "ks": 1});
    let t = write(dir.path(), "t.json", &target);
    let out = stable4(&["model", "--kind", "realize", "--target", t.to_str().unwrap(), "--category", "top"]);
    let h = Han1::from_json(&serde_json::from_str(ok(&out)).unwrap()).unwrap();
    let back = stable4::invariants_of(&h, stable4::Category::Topological);
    assert_eq!(back, Invariants::from_json(&target).unwrap());
}

#[test]
fn binary_reports_cap_exceeded() {
    let exe = env!("CARGO_BIN_EXE_stable4");
    let out = Command::new(exe).args(["closure", "--family", "z3"]).env("STABLE4_CAP", "10").output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    let out = Command::new(exe).args(["closure", "--family", "z3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
