use std::path::PathBuf;
use std::process::{Command, Output};

use ppwb::dimer::{tiling_to_pp, HexTiling};
use ppwb::{BoxDims, PlanePartition};
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn ppwb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ppwb"))
        .args(args)
        .env_remove("PPWB_MAX_CELLS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn run_ok(args: &[&str]) -> String {
    let o = ppwb(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    ppwb(args).status.code().unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(run_ok(&["count", "--class", "1", "--box", "2,2,2", "--method", "lgv"]), "20\n");
    assert_eq!(run_ok(&["count", "--class", "10", "--a", "3", "--method", "formula"]), "7\n");
    assert_eq!(run_ok(&["count", "--class", "1", "--box", "1,1,1", "--method", "brute"]), "2\n");
    // 2x3x4 box: binomial product over the 24 cells
    assert_eq!(run_ok(&["count", "--class", "1", "--box", "2,3,4", "--method", "kasteleyn"]), "490\n");
    assert_eq!(run_ok(&["count", "--class", "10", "--a", "3", "--method", "brute"]), "7\n");
    assert_eq!(run_ok(&["count", "--class", "6", "--a", "2", "--c", "1"]), "2\n");
}

#[test]
fn count_rejects_bad_requests() {
    assert_eq!(code(&["count", "--class", "3", "--box", "2,2,2", "--method", "lgv"]), 2);
    assert_eq!(code(&["count", "--class", "11", "--box", "2,2,2"]), 2);
    assert_eq!(code(&["count", "--class", "1", "--box", "2,2"]), 2);
    assert_eq!(code(&["count", "--class", "1"]), 2);
    assert_eq!(code(&["count", "--class", "3", "--box", "2,2,3"]), 2);
    assert_eq!(code(&["count", "--class", "5", "--box", "3,3,3"]), 2);
}

#[test]
fn brute_force_guard() {
    let o = ppwb(&["count", "--class", "1", "--box", "5,5,5", "--method", "brute"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("PPWB_MAX_CELLS"));
    let o = Command::new(env!("CARGO_BIN_EXE_ppwb"))
        .args(["count", "--class", "1", "--box", "2,2,2", "--method", "brute"])
        .env("PPWB_MAX_CELLS", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_ppwb"))
        .args(["count", "--class", "1", "--box", "2,2,2", "--method", "brute"])
        .env("PPWB_MAX_CELLS", "8")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "20\n");
}

#[test]
fn gf_examples() {
    assert_eq!(run_ok(&["gf", "--class", "1", "--box", "1,1,2"]), "1 + q + q^2\n");
    assert_eq!(run_ok(&["gf", "--class", "2", "--a", "1", "--c", "1", "--weight", "size"]), "1 + q\n");
    assert_eq!(
        run_ok(&["gf", "--class", "4", "--a", "2", "--weight", "half", "--at-q", "1"]),
        "5\n"
    );
    // [[x, y], [y, z]] with 2 >= x >= y >= z >= 0
    assert_eq!(
        run_ok(&["gf", "--class", "2", "--a", "2", "--c", "2", "--method", "brute", "--at-q", "1"]),
        "10\n"
    );
    assert_eq!(code(&["gf", "--class", "1", "--box", "2,2,2", "--weight", "half"]), 2);
    assert_eq!(code(&["gf", "--class", "5", "--box", "2,2,2"]), 2);
    assert_eq!(code(&["gf", "--class", "3", "--a", "2", "--weight", "orbit"]), 2);
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    assert_eq!(code(&["verify", "--suite", "nope"]), 2);
}

#[test]
fn verify_json_schema() {
    let text = run_ok(&["verify", "--suite", "trace", "--json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["suite"], "trace");
    assert_eq!(v["pass"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for c in checks {
        for key in ["id", "status", "expected", "actual"] {
            assert!(c[key].is_string(), "{key} in {c}");
        }
    }
}

#[test]
fn bijection_pp_ssyt_gives_expected_tableau() {
    let pile = data("pile.pp");
    let out = run_ok(&["bijection", "--name", "pp-ssyt", "--input", pile.to_str().unwrap(), "--box", "3,4,6"]);
    assert_eq!(out, std::fs::read_to_string(data("pile_tableau.txt")).unwrap());
    assert_eq!(code(&["bijection", "--name", "pp-ssyt", "--input", pile.to_str().unwrap()]), 2);
}

#[test]
fn bijection_asm_mt_gives_expected_triangle() {
    let out = run_ok(&["bijection", "--name", "asm-mt", "--input", data("asm6.asm").to_str().unwrap()]);
    assert_eq!(out, std::fs::read_to_string(data("asm6.mt")).unwrap());
}

#[test]
fn bijection_stanley_on_worked_example() {
    let out = run_ok(&["bijection", "--name", "stanley", "--input", data("trace_example.pp").to_str().unwrap(), "--roundtrip"]);
    let mut total = 0;
    let mut weighted = 0;
    for line in out.lines().filter(|l| !l.starts_with('#') && !l.starts_with("roundtrip")) {
        let v: Vec<u64> = line.split_whitespace().map(|t| t.parse().unwrap()).collect();
        total += v[2];
        weighted += (v[0] + v[1] - 1) * v[2];
    }
    assert_eq!(total, 8);
    assert_eq!(weighted, 30);
    assert!(out.ends_with("roundtrip: ok\n"));
}

#[test]
fn bijection_golden_files() {
    let pile = data("pile.pp");
    let paths = run_ok(&["bijection", "--name", "pp-paths", "--input", pile.to_str().unwrap(), "--box", "3,4,5"]);
    assert_eq!(paths, std::fs::read_to_string(data("pile_paths.txt")).unwrap());
    let tiling = run_ok(&["bijection", "--name", "pp-tiling", "--input", pile.to_str().unwrap(), "--box", "3,4,5"]);
    assert_eq!(tiling, std::fs::read_to_string(data("pile_tiling.txt")).unwrap());
    let dims = BoxDims::new(3, 4, 5).unwrap();
    let t = HexTiling::parse(&tiling, dims).unwrap();
    let pp: PlanePartition = std::fs::read_to_string(&pile).unwrap().parse().unwrap();
    assert_eq!(tiling_to_pp(&t).unwrap(), pp);
}

#[test]
fn bijection_roundtrips() {
    for (name, file, bx) in [
        ("pp-paths", "pile.pp", Some("3,4,5")),
        ("pp-tiling", "pile.pp", Some("3,4,5")),
        ("pp-paths", "trace_example.pp", None),
        ("pp-tiling", "trace_example.pp", None),
        ("pp-ssyt", "pile.pp", Some("3,4,6")),
        ("stanley", "pile.pp", None),
        ("asm-mt", "asm6.asm", None),
    ] {
        let path = data(file);
        let mut args = vec!["bijection", "--name", name, "--input", path.to_str().unwrap(), "--roundtrip"];
        if let Some(b) = bx {
            args.extend(["--box", b]);
        }
        let out = run_ok(&args);
        assert!(out.ends_with("roundtrip: ok\n"), "{name} {file}");
    }
}

#[test]
fn parse_errors_name_the_cell() {
    let o = ppwb(&["bijection", "--name", "stanley", "--input", data("not_monotone.pp").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cell (2,2)"), "{}", stderr(&o));
    let o = ppwb(&["bijection", "--name", "asm-mt", "--input", data("not_asm.asm").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cell (2,1)"), "{}", stderr(&o));
    assert_eq!(code(&["bijection", "--name", "asm-mt", "--input", "/nonexistent"]), 2);
    let o = ppwb(&["bijection", "--name", "pp-tiling", "--input", data("pile.pp").to_str().unwrap(), "--box", "2,2,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn conjecture_examples() {
    let out = run_ok(&["conjecture", "--m", "0", "--n", "3", "--k", "3"]);
    assert!(out.contains("totals magog=7 gog=7"));
    assert!(out.ends_with("EQUAL\n"));
    let out = run_ok(&["conjecture", "--m", "1", "--n", "2", "--k", "1"]);
    assert!(out.contains("totals magog=5 gog=5"));
    assert_eq!(code(&["conjecture", "--m", "0", "--n", "2", "--k", "3"]), 2);
    assert_eq!(code(&["conjecture", "--m", "0", "--n", "2", "--k", "0"]), 2);
    assert_eq!(code(&["conjecture", "--m", "20", "--n", "2", "--k", "1"]), 2);
}

#[test]
fn conjecture_json() {
    let text = run_ok(&["conjecture", "--m", "1", "--n", "3", "--k", "2", "--json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["params"]["n"], 3);
    let total: u64 = v["magog"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e[2].as_str().unwrap().parse::<u64>().unwrap())
        .sum();
    let gog_total: u64 = v["gog"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e[2].as_str().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, gog_total);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--suite", "gogmagog", "--json"][..],
        &["conjecture", "--m", "2", "--n", "3", "--k", "3"],
        &["bijection", "--name", "pp-tiling", "--input", data("trace_example.pp").to_str().unwrap()],
    ] {
        assert_eq!(ppwb(args).stdout, ppwb(args).stdout);
    }
}
