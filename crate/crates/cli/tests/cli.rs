use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn twistal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistal"))
        .args(args)
        .env_remove("TWISTAL_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "stderr: {}", stderr(o));
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

fn write_fixtures(dir: &Path) {
    let d = dir.to_str().unwrap();
    let o = twistal(&["fixtures", "--dir", d]);
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn fixtures_are_written_and_rewritten() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("fx");
    write_fixtures(&dir);
    let conway = fs::read_to_string(dir.join("conway_surgery.pres")).unwrap();
    assert_eq!(conway.lines().filter(|l| l.starts_with("rel:")).count(), 12);
    let before = fs::read_to_string(dir.join("a5.json")).unwrap();
    write_fixtures(&dir);
    assert_eq!(fs::read_to_string(dir.join("a5.json")).unwrap(), before);

    let blocker = tmp.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let o = twistal(&["fixtures", "--dir", blocker.join("sub").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn alex_on_the_trefoil() {
    let tmp = tempfile::tempdir().unwrap();
    write_fixtures(tmp.path());
    let file = tmp.path().join("trefoil.pres");
    let o = twistal(&["alex", "--file", file.to_str().unwrap(), "--phi", "ab", "--method", "gcd"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("numerator: 1 - t + t^2"), "{}", stdout(&o));

    let v = json(&twistal(&["alex", "--file", file.to_str().unwrap(), "--ring", "Z", "--output", "json"]));
    for key in ["input", "phi", "hom", "ring", "method", "numerator", "denominator", "degree", "monic", "notes"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["ring"], "Z");
    assert_eq!(v["method"], "wada-column-deletion");
    assert_eq!(v["degree"], 1);
    assert_eq!(v["h1_degree"], 2);
    assert_eq!(v["monic"], true);
    assert_eq!(v["numerator"]["coeffs"], serde_json::json!([[0, 1], [1, -1], [2, 1]]));
}

#[test]
fn alex_on_knot_codes() {
    let v = json(&twistal(&["alex", "--format", "dt", "--input", "DT(4,6,8,2)", "--ring", "Z", "--method", "gcd", "--output", "json"]));
    assert_eq!(v["numerator"]["coeffs"], serde_json::json!([[0, 1], [1, -3], [2, 1]]));
    let v = json(&twistal(&["alex", "--format", "braid", "--input", "braid[1,1,1]", "--group", "S3", "--output", "json"]));
    assert_eq!(v["group"], "S3");
    assert_eq!(v["input"]["manifold"], "exterior");
}

#[test]
fn conway_headline_degree() {
    let tmp = tempfile::tempdir().unwrap();
    write_fixtures(tmp.path());
    let file = tmp.path().join("conway_surgery.pres");
    let hom = tmp.path().join("a5.json");
    let v = json(&twistal(&[
        "alex", "--format", "pres", "--file", file.to_str().unwrap(), "--phi", "ab",
        "--hom", hom.to_str().unwrap(), "--prime", "53", "--output", "json",
    ]));
    assert_eq!(v["h1_degree"], 209);
    assert_eq!(v["degree"], 208);
    assert_eq!(v["numerator_degree"], 268);
    assert_eq!(v["group"], "A5");
    assert_eq!(v["input"]["manifold"], "exterior");
}

#[test]
fn input_errors_exit_one() {
    let o = twistal(&["alex", "--file", "/nonexistent/knot.pres"]);
    assert_eq!(o.status.code(), Some(1));
    let o = twistal(&["alex", "--input", "gens: a b\nrel: abQ\n"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("parse error at 17"), "{}", stderr(&o));
    let o = twistal(&["alex", "--input", "gens: a b\nrel: abaBAB\n", "--prime", "51"]);
    assert_eq!(o.status.code(), Some(1));
    let o = twistal(&["alex", "--input", "gens: a b\nrel: abaBAB\n", "--phi", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn degenerate_input_exits_two() {
    let o = twistal(&["alex", "--input", "gens: x\n", "--phi", "0", "--method", "wada"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn search_outputs() {
    let trefoil = "gens: a b\nrel: abaBAB\n";
    let v = json(&twistal(&["search", "--input", trefoil, "--group", "S3", "--surjective-only"]));
    assert_eq!(v.as_array().unwrap().len(), 6);
    let v = json(&twistal(&["search", "--input", "gens: x\n", "--group", "A5", "--surjective-only"]));
    assert_eq!(v, serde_json::json!([]));
    let v = json(&twistal(&["search", "--input", trefoil, "--group", "S3", "--max-results", "2", "--conjugacy-prune", "off"]));
    assert_eq!(v.as_array().unwrap().len(), 2);
    let o = twistal(&["search", "--input", trefoil, "--group", "S6"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn conway_search_contains_the_hom() {
    let tmp = tempfile::tempdir().unwrap();
    write_fixtures(tmp.path());
    let file = tmp.path().join("conway_surgery.pres");
    let v = json(&twistal(&[
        "search", "--file", file.to_str().unwrap(), "--manifold", "closed", "--group", "A5",
        "--surjective-only", "--conjugacy-prune", "on",
    ]));
    let found = v.as_array().unwrap();
    assert!(!found.is_empty());
    // the fixture hom itself is among the epimorphisms
    let hom: Value = serde_json::from_str(&fs::read_to_string(tmp.path().join("a5.json")).unwrap()).unwrap();
    let normalize = |s: &str| {
        // rotate each 3-cycle so the least point comes first
        let pts: Vec<u32> = s.trim_matches(|c| c == '(' || c == ')').split_whitespace().map(|x| x.parse().unwrap()).collect();
        let k = (0..pts.len()).min_by_key(|&i| pts[i]).unwrap();
        let rot: Vec<String> = pts[k..].iter().chain(&pts[..k]).map(u32::to_string).collect();
        format!("({})", rot.join(" "))
    };
    let want: Vec<String> = hom.as_object().unwrap().values().map(|c| normalize(c.as_str().unwrap())).collect();
    assert!(found.iter().any(|f| {
        let got: Vec<String> = f["images"].as_object().unwrap().values().map(|c| normalize(c.as_str().unwrap())).collect();
        got == want
    }));
}

#[test]
fn conway_bounds() {
    let tmp = tempfile::tempdir().unwrap();
    write_fixtures(tmp.path());
    let file = tmp.path().join("conway_surgery.pres");
    let hom = tmp.path().join("a5.json");
    for (sigma, best) in [("0", 6), ("-4", 10)] {
        let v = json(&twistal(&[
            "bound", "--file", file.to_str().unwrap(), "--hom", hom.to_str().unwrap(), "--splice",
            "--sigma-sq", sigma, "--chi-upper", "6", "--euler", "zero", "--b2plus", "--output", "json",
        ]));
        assert_eq!(v["best_bound"], best);
        assert_eq!(v["tight"], true);
        assert_eq!(v["rows"][0]["degree"], 329);
        assert_eq!(v["rows"][0]["div_kernel"], 1);
    }
}

#[test]
fn vacuous_bound_report() {
    let v = json(&twistal(&["bound", "--input", "gens: a b\n", "--phi", "1,0", "--group", "Z2", "--ring", "Z", "--output", "json"]));
    assert_eq!(v["best_bound"], Value::Null);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["vacuous"] == true));
    assert_eq!(v["symplectic"]["verdict"], "obstructed");
    assert_eq!(v["fibering"]["status"], "hypothesis-fails");
}

#[test]
fn cache_hit_matches_miss() {
    let tmp = tempfile::tempdir().unwrap();
    let cache = tmp.path().join("cache");
    let args = ["alex", "--format", "dt", "--input", "DT(4,8,10,2,6)", "--group", "S3", "--ring", "Z", "--output", "json"];
    let plain = stdout(&twistal(&args));
    let mut with_cache = args.to_vec();
    with_cache.extend(["--cache-dir", cache.to_str().unwrap()]);
    let miss = stdout(&twistal(&with_cache));
    let entries = fs::read_dir(&cache).unwrap().count();
    assert!(entries >= 1);
    let hit = stdout(&twistal(&with_cache));
    assert_eq!(plain, miss);
    assert_eq!(miss, hit);
    assert_eq!(fs::read_dir(&cache).unwrap().count(), entries);

    let via_env = Command::new(env!("CARGO_BIN_EXE_twistal"))
        .args(args)
        .env("TWISTAL_CACHE_DIR", &cache)
        .output()
        .unwrap();
    assert_eq!(stdout(&via_env), hit);
}

#[test]
fn parse_conversions() {
    let o = twistal(&["parse", "--format", "dt", "--input", "DT(4,6,2)"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("gens: a b c"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("rel:")).count(), 2);
    let o = twistal(&["parse", "--format", "braid", "--input", "braid[1,1,1]", "--to", "pd"]);
    assert!(stdout(&o).starts_with("PD["), "{}", stdout(&o));
    let o = twistal(&["parse", "--input", "gens: a\n", "--to", "pd"]);
    assert_eq!(o.status.code(), Some(1));
}
