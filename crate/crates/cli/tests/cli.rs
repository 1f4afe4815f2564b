use std::process::Command;

use bouquet_cli::{run, Outcome};
use bouquet_core::io::ArrangementFile;
use serde_json::Value;

fn call(args: &str) -> Outcome {
    run(std::iter::once("bouquet-o").chain(args.split_whitespace()))
}

fn ok(args: &str) -> String {
    let o = call(args);
    assert_eq!(o.code, 0, "{args}: {}", o.stderr);
    o.stdout
}

fn json(args: &str) -> Value {
    serde_json::from_str(&ok(args)).unwrap()
}

#[test]
fn slice_tsv_has_five_rows_at_ell2() {
    let out = ok("slice 2 -2 --out tsv");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "sign_vector\tvertex\txi_value\tsubquotients");
    assert_eq!(lines.len(), 6);
    assert!(lines.contains(&"----\t(0,0,2,2)\t0\t----,--+-,---+"));
}

#[test]
fn slice_json_ell4() {
    let v = json("slice 4 -5 --out json");
    assert_eq!(v["chambers"].as_array().unwrap().len(), 13);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 1);
    assert_eq!(v["lambda_tilde"], "-5");
    let dims: Vec<u64> = v["chambers"].as_array().unwrap().iter().map(|c| c["support_dim"].as_u64().unwrap()).collect();
    assert_eq!(dims.iter().filter(|&&d| d == 0).count(), 2);
}

#[test]
fn slice_at_zero_is_non_regular() {
    let o = call("slice 2 0");
    assert_eq!(o.code, 3);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("NON_REGULAR"));
}

#[test]
fn fixed_point_counts() {
    assert_eq!(json("fixed-points 2 5")["diagrams"].as_array().unwrap().len(), 10);
    assert_eq!(json("fixed-points 1 3")["diagrams"].as_array().unwrap().len(), 1);
    let o = call("fixed-points 4 2");
    assert_eq!(o.code, 3);
    assert!(o.stderr.contains("UNSUPPORTED_DIM"));
    let ascii = ok("fixed-points 3 2 --out ascii");
    assert_eq!(ascii.lines().filter(|l| l.starts_with("# ")).count(), 18);
}

#[test]
fn classify_minus_half() {
    let v = json("classify 2 -1/2");
    assert_eq!(v["singular"], true);
    assert_eq!(v["regime"], "SINGULAR");
    assert_eq!(v["lambda"], "-1/2");
}

#[test]
fn homs_dot_edges() {
    let dot = ok("homs 3 -3 --out dot");
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 8);
    let half = ok("homs 3 -7/2 --out dot");
    assert_eq!(half.lines().filter(|l| l.contains("->")).count(), 3);
    assert!(half.contains("\"Δ6\" -> \"Δ1\""));
}

#[test]
fn mult_table_ell2() {
    let out = ok("mult 2 -2");
    let want = "\tΔ1\tΔ2\tΔ3\tΔ4\nS1\t1\t0\t0\t0\nS2\t1\t1\t0\t0\nS3\t1\t0\t1\t0\nS4\t1\t1\t1\t1\n";
    assert_eq!(out, want);
    assert_eq!(ok("mult 2 3"), want);
}

#[test]
fn table_commands_need_large_regime() {
    for cmd in ["homs", "mult", "socles", "res"] {
        for lam in ["0", "-1/2", "-5/2"] {
            let o = call(&format!("{cmd} 3 {lam}"));
            assert_eq!(o.code, 3, "{cmd} {lam}");
            assert!(o.stderr.contains("REGIME_OUT_OF_SCOPE"));
            assert!(o.stdout.is_empty());
        }
    }
}

#[test]
fn user_errors_exit_2() {
    for args in [
        "slice 2 x",
        "slice 1 -2",
        "classify 2 1/0",
        "fixed-components 3 SIGMA -4",
        "slice 2 -2 --out dot",
        "nonsense",
        "slice 2 -2 --hshift 2",
        "sign-vectors /nonexistent.json",
    ] {
        let o = call(args);
        assert_eq!(o.code, 2, "{args}");
        assert!(o.stdout.is_empty(), "{args}");
        assert!(!o.stderr.is_empty(), "{args}");
    }
}

/// Rationals travel as strings; JSON numbers must all be integers.
fn no_floats(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_i64() || n.is_u64(),
        Value::Array(a) => a.iter().all(no_floats),
        Value::Object(o) => o.values().all(no_floats),
        _ => true,
    }
}

#[test]
fn shifted_walls() {
    let out = ok("slice 2 -3 --hshift 1 --out tsv");
    assert_eq!(out.lines().count(), 6);
    assert_eq!(call("slice 2 -2 --hshift 1").code, 3);
    assert_eq!(json("slice 2 -3 --hshift 1")["hshift"], "1");
}

#[test]
fn json_round_trips() {
    for args in [
        "slice 2 -5/2",
        "slice 3 -4",
        "fixed-points 3 2",
        "fixed-components 3 NU_PRIME -4",
        "leaves 2 3",
        "dims 3 2",
        "classify 4 -13/3",
        "classify 3 --sample 20 --seed 5",
        "homs 4 -5 --out json",
        "mult 3 -7/2 --out json",
        "socles 3 -4",
        "res 3 -4",
        "support 4",
        "audit 3 -4",
        "reflect 5/7",
    ] {
        let v: Value = serde_json::from_str(&ok(args)).unwrap();
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v, "{args}");
        assert!(no_floats(&v), "{args}: non-integer JSON number");
    }
}

#[test]
fn arrangement_file_pipeline() {
    let text = ok("slice 2 -2 --emit-arrangement");
    let a = ArrangementFile::from_json(&text).unwrap();
    assert_eq!(a.base_point.iter().map(ToString::to_string).collect::<Vec<_>>(), ["0", "0", "2", "2"]);
    let path = std::env::temp_dir().join(format!("bouquet-o-test-{}.json", std::process::id()));
    std::fs::write(&path, &text).unwrap();
    let v = json(&format!("sign-vectors {}", path.display()));
    assert_eq!(v["feasible"].as_array().unwrap().len(), 10);
    assert_eq!(v["chambers"].as_array().unwrap().len(), 5);
    // the shifted walls move the regular range by one step
    let o = call(&format!("sign-vectors {} --hshift 1", path.display()));
    assert_eq!(o.code, 3);
    assert!(o.stderr.contains("NON_REGULAR"));
    std::fs::remove_file(path).ok();
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in ["slice 3 -4", "fixed-points 3 3", "audit 4 -5", "classify 2 --sample 50 --seed 9"] {
        assert_eq!(ok(args), ok(args), "{args}");
    }
    assert_ne!(ok("classify 2 --sample 50 --seed 1"), ok("classify 2 --sample 50 --seed 2"));
}

#[test]
fn binary_separates_streams() {
    let bin = env!("CARGO_BIN_EXE_bouquet-o");
    let good = Command::new(bin).args(["homs", "3", "-3", "--out", "dot", "-v"]).output().unwrap();
    assert!(good.status.success());
    assert!(String::from_utf8(good.stdout).unwrap().starts_with("digraph"));
    assert!(String::from_utf8(good.stderr).unwrap().contains("[bouquet-o]"));
    let bad = Command::new(bin).args(["slice", "2", "0", "--out", "json"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(3));
    assert!(bad.stdout.is_empty());
    let threads = Command::new(bin)
        .args(["slice", "3", "-4"])
        .env("BOUQUET_O_THREADS", "1")
        .output()
        .unwrap();
    let default = Command::new(bin).args(["slice", "3", "-4"]).output().unwrap();
    assert_eq!(threads.stdout, default.stdout);
}
