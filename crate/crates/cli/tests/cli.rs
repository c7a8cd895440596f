use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use slkkm_cli::document::{parse_document, serialize_document, Document};
use slkkm_cli::{run, Output, EXIT_INVALID, EXIT_OK, EXIT_USAGE};
use slkkm_core::coloring::PointColoring;
use slkkm_core::constructions::{orthant_coloring, proximate_grid};
use slkkm_core::scalar::{half, rat};

fn slkkm(args: &[&str]) -> Output {
    run(std::iter::once("slkkm").chain(args.iter().copied()))
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&out.stdout).expect("stdout is JSON")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn ceil_ratio_pow(num: u128, den: u128, d: u32) -> u64 {
    let (n, m) = (num.pow(d), den.pow(d));
    n.div_ceil(m) as u64
}

/// Every bound of the table, recomputed by hand from `eps = p/q`.
fn expected_rows(d: u32, p: u128, q: u128) -> BTreeMap<&'static str, u64> {
    let mut m = BTreeMap::new();
    m.insert("classic", d as u64 + 1);
    m.insert("main", ceil_ratio_pow(q + 2 * p, q + p, d));
    m.insert("simple", ceil_ratio_pow(3 * q + 2 * p, 3 * q, d));
    m.insert("trivial", 1 << d);
    m.insert("secluded_n1", 1 << d);
    m.insert("secluded_nd", d as u64 + 1);
    let n_max = (q / (2 * p)).min(d as u128) as u32;
    let best = (1..=n_max).map(|n| ((n + 1) as u64).pow(d.div_ceil(n))).min().unwrap();
    m.insert("secluded_best", best);
    m.insert("halfball", (1 << (d - 1)) + 1);
    m
}

const GOLDEN: [(u32, u128, u128); 6] = [(1, 1, 2), (2, 1, 4), (3, 1, 2), (4, 1, 8), (5, 1, 10), (10, 1, 20)];

#[test]
fn bounds_match_golden_files_and_hand_values() {
    for (d, p, q) in GOLDEN {
        let eps = format!("{p}/{q}");
        let d_s = d.to_string();
        let stem = format!("bounds_d{d}_eps{p}_{q}");
        let text = slkkm(&["bounds", "--d", &d_s, "--eps", &eps]);
        assert_eq!(text.code, EXIT_OK);
        assert_eq!(
            text.stdout,
            fs::read_to_string(golden_dir().join(format!("{stem}.txt"))).unwrap()
        );
        let js = slkkm(&["bounds", "--d", &d_s, "--eps", &eps, "--format", "json"]);
        assert_eq!(
            js.stdout,
            fs::read_to_string(golden_dir().join(format!("{stem}.json"))).unwrap()
        );

        let expected = expected_rows(d, p, q);
        let report = json(&js);
        let rows = report["result"]["rows"].as_array().unwrap();
        assert_eq!(rows.len(), expected.len());
        for row in rows {
            let name = row["name"].as_str().unwrap();
            assert_eq!(
                row["value"].as_u64(),
                Some(expected[name]),
                "d={d} eps={eps} row {name}"
            );
        }
    }
}

#[test]
fn three_dimensional_half_radius_table() {
    let out = json(&slkkm(&["bounds", "--d", "3", "--eps", "1/2", "--format", "json"]));
    assert_eq!(out["result"]["lower_main"], 3);
    assert_eq!(out["result"]["upper_halfball"], 5);
    assert_eq!(out["result"]["upper_trivial"], 8);
}

#[test]
fn verify_orthants() {
    let out = slkkm(&[
        "verify",
        "--construct",
        "orthant",
        "--d",
        "2",
        "--eps",
        "1/4",
        "--format",
        "json",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let report = json(&out);
    assert!(report["result"]["search"]["max_colors"].as_u64().unwrap() >= 2);
    assert_eq!(report["result"]["holds"], true);
}

#[test]
fn validate_reports_the_offending_pair() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.json");
    fs::write(
        &path,
        r#"{"format_version":1,"dimension":2,"flavor":"points","points":[
            {"coords":["0","0"],"color":"red"},{"coords":["1","1"],"color":"red"},{"coords":["1","0"],"color":"blue"}]}"#,
    )
    .unwrap();
    let out = slkkm(&["validate", "--in", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.code, EXIT_INVALID);
    let v = &json(&out)["result"]["report"]["violations"][0];
    assert_eq!(v["kind"], "opposite_pair");
    assert_eq!((v["first"].as_u64(), v["second"].as_u64()), (Some(0), Some(1)));
}

#[test]
fn usage_errors_exit_64() {
    let out = slkkm(&["bounds", "--d", "3", "--eps", "1/2", "--bogus"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("Usage"));
    assert_eq!(slkkm(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(slkkm(&["bounds", "--d", "3", "--eps", "0.5"]).code, EXIT_USAGE);
    assert_eq!(slkkm(&["bounds", "--d", "3", "--eps", "-1/2"]).code, EXIT_USAGE);
    assert_eq!(
        slkkm(&["verify", "--construct", "orthant", "--eps", "1/4"]).code,
        EXIT_USAGE
    );
    assert_eq!(slkkm(&["--help"]).code, EXIT_OK);
}

#[test]
fn parse_errors_carry_code_and_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("float.json");
    fs::write(
        &path,
        r#"{"format_version":1,"dimension":1,"flavor":"points","points":[{"coords":[0.5],"color":"a"}]}"#,
    )
    .unwrap();
    let out = slkkm(&["validate", "--in", path.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INVALID);
    assert!(
        out.stderr.contains("BAD_RATIONAL at $.points[0].coords[0]"),
        "{}",
        out.stderr
    );
    let missing = slkkm(&["validate", "--in", dir.path().join("nope.json").to_str().unwrap()]);
    assert_eq!(missing.code, EXIT_INVALID);
}

#[test]
fn constructed_documents_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (args, name) in [
        (vec!["--construct", "orthant", "--d", "2"], "orthant.json"),
        (vec!["--construct", "hamming", "--d", "3"], "hamming.json"),
        (vec!["--construct", "brick", "--sigma", "1/3"], "brick.json"),
    ] {
        let path = dir.path().join(name);
        let mut argv = vec!["construct"];
        argv.extend(&args);
        argv.extend(["--out", path.to_str().unwrap()]);
        assert_eq!(slkkm(&argv).code, EXIT_OK);
        let text = fs::read_to_string(&path).unwrap();
        let doc = parse_document(&text).unwrap();
        assert_eq!(serialize_document(&doc), text);
        assert_eq!(slkkm(&["validate", "--in", path.to_str().unwrap()]).code, EXIT_OK);
    }
    let text = fs::read_to_string(dir.path().join("orthant.json")).unwrap();
    assert_eq!(
        parse_document(&text).unwrap(),
        Document::Regions(orthant_coloring(2).unwrap())
    );
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let argv = [
        "extremal", "--d", "1", "--eps", "1/4", "--budget", "300", "--seed", "5", "--format", "json",
    ];
    let a = slkkm(&argv);
    assert_eq!(a.code, EXIT_OK, "{}", a.stderr);
    assert_eq!(a.stdout, slkkm(&argv).stdout);
    let other_seed = slkkm(&[
        "extremal", "--d", "1", "--eps", "1/4", "--budget", "300", "--seed", "6", "--format", "json",
    ]);
    assert_ne!(json(&a)["inputs_digest"], json(&other_seed)["inputs_digest"]);
    assert!(!a.stdout.contains("timing"));
    let timed = slkkm(&["bounds", "--d", "2", "--eps", "1/4", "--format", "json", "--timing"]);
    assert!(json(&timed)["timing"]["elapsed_ms"].is_u64());
}

/// Walks a report and checks that every number is an integer, except in
/// fields whose name ends in `_float`.
fn only_exact_numbers(v: &Value, key: &str) -> bool {
    match v {
        Value::Number(n) => n.is_i64() || n.is_u64() || key.ends_with("_float"),
        Value::Array(items) => items.iter().all(|x| only_exact_numbers(x, key)),
        Value::Object(m) => m.iter().all(|(k, x)| only_exact_numbers(x, k)),
        _ => true,
    }
}

#[test]
fn reports_hold_no_stray_floats() {
    for argv in [
        vec![
            "extremal",
            "--d",
            "2",
            "--eps",
            "1/4",
            "--budget",
            "100",
            "--restarts",
            "1",
            "--format",
            "json",
        ],
        vec![
            "pipeline",
            "--construct",
            "orthant",
            "--d",
            "2",
            "--eps",
            "1/3",
            "--format",
            "json",
        ],
        vec![
            "search",
            "--construct",
            "brick",
            "--eps",
            "1/4",
            "--grid-step",
            "1/8",
            "--format",
            "json",
        ],
        vec![
            "curve",
            "--construct",
            "hamming",
            "--d",
            "2",
            "--eps-list",
            "1/10,1/2",
            "--format",
            "json",
        ],
    ] {
        let out = slkkm(&argv);
        assert_eq!(out.code, EXIT_OK, "{argv:?}: {}", out.stderr);
        assert!(only_exact_numbers(&json(&out), ""), "{argv:?}");
    }
}

#[test]
fn tables_export_as_csv() {
    let dir = tempfile::tempdir().unwrap();
    let bounds = dir.path().join("bounds.csv");
    assert_eq!(
        slkkm(&["bounds", "--d", "3", "--eps", "1/2", "--out", bounds.to_str().unwrap()]).code,
        EXIT_OK
    );
    let text = fs::read_to_string(&bounds).unwrap();
    assert!(text.starts_with("kind,name,formula,value,applies,regime\n"));
    assert!(text.contains("upper,halfball,2^(d-1)+1,5,true,"));

    let curve = dir.path().join("curve.csv");
    let out = slkkm(&[
        "curve",
        "--construct",
        "orthant",
        "--d",
        "2",
        "--eps-list",
        "1/10,1/4",
        "--out",
        curve.to_str().unwrap(),
    ]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        fs::read_to_string(&curve).unwrap(),
        "eps,open,closed\n1/10,4,4\n1/4,4,4\n"
    );
    assert_eq!(
        slkkm(&[
            "verify",
            "--construct",
            "orthant",
            "--d",
            "2",
            "--eps",
            "1/4",
            "--out",
            curve.to_str().unwrap()
        ])
        .code,
        EXIT_USAGE
    );
}

#[test]
fn covers_convert_during_validation() {
    let dir = tempfile::tempdir().unwrap();
    let iv =
        |lo: &str, hi: &str| format!(r#"[[{{"lo":"{lo}","lo_end":"lo_closed","hi":"{hi}","hi_end":"hi_closed"}}]]"#);
    let lebesgue = format!(
        r#"{{"format_version":1,"dimension":1,"flavor":"lebesgue_cover","members":[
            {{"label":"left","boxes":{}}},{{"label":"right","boxes":{}}}]}}"#,
        iv("0", "2/3"),
        iv("1/3", "1")
    );
    let path = dir.path().join("lebesgue.json");
    fs::write(&path, lebesgue).unwrap();
    let out = slkkm(&["validate", "--in", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(json(&out)["result"]["coloring"]["classes"].as_array().unwrap().len(), 2);
    let verify = slkkm(&["verify", "--in", path.to_str().unwrap(), "--eps", "1/4"]);
    assert_eq!(verify.code, EXIT_OK, "{}", verify.stderr);

    let kkm = format!(
        r#"{{"format_version":1,"dimension":1,"flavor":"kkm_cover","members":[
            {{"vertex":"0","boxes":{}}},{{"vertex":"1","boxes":{}}}]}}"#,
        iv("0", "1/4"),
        iv("1/2", "1")
    );
    let path = dir.path().join("kkm.json");
    fs::write(&path, kkm).unwrap();
    let out = slkkm(&["validate", "--in", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.code, EXIT_INVALID);
    assert_eq!(json(&out)["result"]["report"]["violations"][0]["kind"], "uncovered");
}

#[test]
fn sperner_extends_a_colored_grid() {
    let rho = rat(1, 3);
    let points = proximate_grid(2, &rho).unwrap();
    let entries = points
        .into_iter()
        .map(|p| {
            let color: String = p.coords().iter().map(|x| if *x > half() { '1' } else { '0' }).collect();
            (p, color)
        })
        .collect();
    let doc = Document::Points(PointColoring::new(2, entries).unwrap());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.json");
    fs::write(&path, serialize_document(&doc)).unwrap();
    let out = slkkm(&[
        "sperner",
        "--in",
        path.to_str().unwrap(),
        "--rho",
        "1/3",
        "--eps",
        "1/4",
        "--format",
        "json",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let r = json(&out);
    assert_eq!(r["result"]["gamma_report"]["total"], 0);
    assert_eq!(r["result"]["theorem"]["holds"], true);
    let far = slkkm(&[
        "sperner",
        "--in",
        path.to_str().unwrap(),
        "--rho",
        "1/10",
        "--eps",
        "1/4",
    ]);
    assert_eq!(far.code, EXIT_INVALID);
}
