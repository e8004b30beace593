use std::process::Command;

use powtrip::cli::run;
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn powtrip(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("powtrip").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn json(args: &[&str]) -> Value {
    let r = powtrip(args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.err);
    serde_json::from_str(&r.out).unwrap()
}

#[test]
fn verify_exit_codes() {
    let ok = powtrip(&["verify", "--k", "4", "1352", "9539880", "9768370"]);
    assert_eq!(ok.code, 0, "{}", ok.err);
    let doc: Value = serde_json::from_str(&ok.out).unwrap();
    assert_eq!(doc["schema"], "powtrip.verify/1");
    assert_eq!(doc["verified"], true);

    let bad = powtrip(&["verify", "--k", "4", "1", "2", "3"]);
    assert_eq!(bad.code, 1);
    let doc: Value = serde_json::from_str(&bad.out).unwrap();
    assert_eq!(doc["verified"], false);
    let failures = doc["failures"].as_array().unwrap();
    assert_eq!(failures.len(), 3);
    assert_eq!(failures[0]["value"], "3");
}

#[test]
fn negative_and_gaussian_arguments() {
    let r = powtrip(&["verify", "--k", "4", "-1352", "-9539880", "-9768370"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let r = powtrip(&["verify", "--k", "4", "28+4i", "42+24i", "140+52i"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let doc: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(doc["field"], "Q(i)");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(powtrip(&["no-such-command"]).code, 2);
    assert_eq!(powtrip(&["verify", "--k", "4", "1/0", "2"]).code, 2);
    assert_eq!(powtrip(&["verify", "--k", "4", "7"]).code, 2);
    assert_eq!(powtrip(&["--json", "--csv", "pell", "--count", "2"]).code, 2);
    assert_eq!(powtrip(&["family", "fam1"]).code, 2);
    assert_eq!(powtrip(&["family", "fam1", "--param", "1"]).code, 2);
    assert_eq!(powtrip(&["taxicab", "--bound", "10", "--k", "5"]).code, 2);
    assert_eq!(powtrip(&["search-rs", "--bound", "100", "--threads", "0"]).code, 2);
    assert_eq!(powtrip(&["prove-family", "--csv"]).code, 2);
    let r = powtrip(&["verify", "x", "y"]);
    assert!(r.err.starts_with("error: "), "{}", r.err);
}

#[test]
fn help_and_version_exit_zero() {
    let r = powtrip(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("search-rs"));
    let r = powtrip(&["taxicab", "--help"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("CSV columns: x,y,z,w,k,sum,square_product,sqrt_witness"));
    assert_eq!(powtrip(&["--version"]).code, 0);
}

#[test]
fn family_prints_printed_example() {
    let doc = json(&["family", "fam1", "--param", "3"]);
    assert_eq!(doc["schema"], "powtrip.family/1");
    assert_eq!(doc["params"]["u"], "3");
    let t = &doc["triple"];
    assert_eq!((t["a"].as_str(), t["b"].as_str(), t["c"].as_str()), (Some("1681/1600"), Some("8063044/3404025"), Some("62349625/8714304")));
    assert_eq!(json(&["family", "fam1", "--param", "u=3"]), doc);
}

#[test]
fn construct_and_family_round_trip_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let construct = powtrip(&["construct", "--r", "337", "--s", "339"]);
    assert_eq!(construct.code, 0);
    let path = dir.path().join("construct.json");
    std::fs::write(&path, &construct.out).unwrap();
    let r = powtrip(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);

    let sweep = powtrip(&["family", "fam3a", "--sweep", "u=-3:3:1/2"]);
    assert_eq!(sweep.code, 0, "{}", sweep.err);
    let lines = sweep.out.lines().count();
    assert!(lines > 5, "{}", sweep.out);
    let path = dir.path().join("sweep.jsonl");
    std::fs::write(&path, &sweep.out).unwrap();
    let r = powtrip(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.lines().count(), lines);

    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"k": 4, "elements": ["1", "2", "3"]}"#).unwrap();
    assert_eq!(powtrip(&["verify", "--input", path.to_str().unwrap()]).code, 1);
}

#[test]
fn construct_without_triple_exits_one() {
    let r = powtrip(&["construct", "--r", "2", "--s", "3"]);
    assert_eq!(r.code, 1);
    let doc: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(doc["found"], false);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["search-rs", "--bound", "1000"][..],
        &["taxicab", "--bound", "400", "--k", "3"],
        &["gaussian", "--box", "4"],
        &["family", "fam2k", "--param", "k=2", "--sweep", "u=1:4"],
    ] {
        let first = powtrip(args);
        let mut threaded = args.to_vec();
        if args[0] != "gaussian" && args[0] != "family" {
            threaded.extend(["--threads", "3"]);
        }
        let second = powtrip(&threaded);
        assert_eq!(first.out, second.out, "{args:?}");
        assert_eq!(first.code, second.code);
        assert!(first.err.is_empty(), "{args:?} wrote to stderr without --verbose");
    }
    let verbose = powtrip(&["search-rs", "--bound", "100", "--verbose"]);
    assert!(verbose.err.contains("hits in"));
}

#[test]
fn csv_output() {
    let r = powtrip(&["--csv", "pell", "--count", "9"]);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines[0], "index,p,r,ratio");
    assert_eq!(lines[8], "8,18817,10864,1.73205081001");
    let r = powtrip(&["--csv", "search-rs", "--bound", "300"]);
    assert_eq!(r.out, "r,s,t,integral_t,a,b,c\n");
}

#[test]
fn curve_operations() {
    let doc = json(&["curve", "alpha2", "--point", "1,1", "--unscaled", "--mul", "3"]);
    assert_eq!(doc["schema"], "powtrip.curve/1");
    assert_eq!(doc["multiple"]["point"]["x"], "337");
    assert_eq!(doc["multiple"]["point"]["y"], "3107");
    let doc = json(&["curve", "E_r", "--param", "337", "--point", "4372394120642", "--alpha-s"]);
    assert_eq!(doc["alpha_s"]["alpha"], "2");
    assert_eq!(doc["alpha_s"]["s"], "339");
    let doc = json(&["curve", "E_r", "--param", "3", "--point", "162,1440", "--torsion"]);
    assert_eq!(doc["torsion_order"], 4);
    assert_eq!(powtrip(&["curve", "rsq", "--point", "1,1"]).code, 2);
}

#[test]
fn proofs_and_suites() {
    let doc = json(&["prove-family"]);
    assert_eq!(doc["all_passed"], true);
    assert_eq!(doc["reports"].as_array().unwrap().len(), 6);
    let doc = json(&["gaussian"]);
    assert_eq!(doc["hits"].as_array().unwrap().len(), 0);
    assert_eq!(doc["known"].as_array().unwrap().len(), 2);
    let doc = json(&["euler-octic", "--a", "2"]);
    assert_eq!(doc["report"]["all_passed"], true);
    assert_eq!(doc["point"]["X"], "158");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_powtrip");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["verify", "--k", "4", "1352", "9539880", "9768370"]), Some(0));
    assert_eq!(status(&["verify", "--k", "4", "1", "2", "3"]), Some(1));
    assert_eq!(status(&["verify", "--frobnicate"]), Some(2));
}
