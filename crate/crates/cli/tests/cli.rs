use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const TWO_VERTEX_SPHERE: &str = "tri 1\ntet 0: 0:1023 0:1023 0:0132 0:0132\n";

fn tv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

/// Writes the one-vertex census up to `tets` tetrahedra and returns the files.
fn census(dir: &Path, tets: usize, extra: &[&str]) -> Vec<PathBuf> {
    let out = dir.join("census");
    let tets = tets.to_string();
    let mut args = vec!["census", "--tets", &tets, "--one-vertex", "--out", out.to_str().unwrap()];
    args.extend(extra);
    assert!(tv(&args).status.success());
    let mut files: Vec<PathBuf> = std::fs::read_dir(&out).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn census_writes_the_two_smallest_homology_spheres() {
    let dir = TempDir::new().unwrap();
    let files = census(dir.path(), 1, &["--z2hs"]);
    assert_eq!(files.len(), 2);
    for f in &files {
        assert!(std::fs::read_to_string(f).unwrap().starts_with("tri 1\n"));
    }
}

#[test]
fn specialised_algorithms_match_naive() {
    let dir = TempDir::new().unwrap();
    for f in census(dir.path(), 2, &[]) {
        for (r, q, algo) in [("4", "1", "tv4"), ("4", "3", "tv4"), ("5", "1", "odd-fast"), ("7", "1", "odd-fast")] {
            let fast = json(&tv(&["compute", "--file", path(&f), "--r", r, "--q", q, "--algorithm", algo, "--json"]));
            let naive = json(&tv(&["compute", "--file", path(&f), "--r", r, "--q", q, "--algorithm", "naive", "--json"]));
            assert_eq!(fast["exact"], naive["exact"], "{} r={r} q={q}", f.display());
            assert_eq!(fast["algorithm"], algo);
        }
    }
}

#[test]
fn json_is_identical_across_thread_counts() {
    let dir = TempDir::new().unwrap();
    let files = census(dir.path(), 2, &[]);
    let f = path(files.last().unwrap());
    let runs: Vec<Vec<u8>> = ["1", "3", "8"]
        .iter()
        .map(|n| tv(&["compute", "--file", f, "--r", "6", "--json", "--threads", n]).stdout)
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let doc: Value = serde_json::from_slice(&runs[0]).unwrap();
    assert!(doc.get("wallTimeMs").is_none());
    let timed = json(&tv(&["compute", "--file", f, "--r", "6", "--json", "--timing"]));
    assert!(timed["wallTimeMs"].is_number());
}

#[test]
fn auto_selects_the_fast_paths() {
    let dir = TempDir::new().unwrap();
    let f = census(dir.path(), 1, &[]).remove(0);
    let pick = |r: &str| json(&tv(&["compute", "--file", path(&f), "--r", r, "--json"]))["algorithm"].clone();
    assert_eq!(pick("4"), "tv4");
    assert_eq!(pick("5"), "odd-fast");
    assert_eq!(pick("6"), "naive");
}

#[test]
fn multi_vertex_input_falls_back_or_is_refused() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("s3.tri");
    std::fs::write(&f, TWO_VERTEX_SPHERE).unwrap();
    let auto = tv(&["compute", "--file", path(&f), "--r", "5", "--json"]);
    assert_eq!(json(&auto)["algorithm"], "naive");
    assert!(String::from_utf8_lossy(&auto.stderr).contains("one-vertex"));
    let forced = tv(&["compute", "--file", path(&f), "--r", "5", "--algorithm", "odd-fast"]);
    assert_eq!(forced.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.tri");
    std::fs::write(&bad, "tri 1\ntet 0: 0:1023 - 0:0132 0:0132\n").unwrap();
    assert_eq!(tv(&["compute", "--file", path(&bad), "--r", "4"]).status.code(), Some(3));
    let open = dir.path().join("open.tri");
    std::fs::write(&open, "tri 1\ntet 0: - - 0:0132 0:0132\n").unwrap();
    assert_eq!(tv(&["compute", "--file", path(&open), "--r", "4"]).status.code(), Some(3));
    assert_eq!(tv(&["compute", "--file", path(&bad)]).status.code(), Some(2));
    assert_eq!(tv(&["frobnicate"]).status.code(), Some(2));
    let good = census(dir.path(), 1, &[]).remove(0);
    assert_eq!(tv(&["compute", "--file", path(&good), "--r", "4", "--q", "2"]).status.code(), Some(2));
    assert_eq!(tv(&["compute", "--file", path(&good), "--r", "4", "--class", "1"]).status.code(), Some(2));
    assert_eq!(tv(&["census", "--tets", "9"]).status.code(), Some(2));
}

#[test]
fn verify_passes_on_census_inputs() {
    let dir = TempDir::new().unwrap();
    for f in census(dir.path(), 2, &[]) {
        for r in ["4", "5", "7"] {
            let o = tv(&["verify", "--file", path(&f), "--r", r]);
            assert!(o.status.success(), "{} r={r}\n{}", f.display(), stdout(&o));
            assert!(!stdout(&o).contains("FAIL"));
        }
    }
}

#[test]
fn enumerate_lists_what_it_counts() {
    let dir = TempDir::new().unwrap();
    let files = census(dir.path(), 2, &[]);
    let f = path(&files[4]);
    let listing = stdout(&tv(&["enumerate", "--file", f, "--r", "6"]));
    let lines = listing.lines().filter(|l| !l.starts_with('#')).count();
    let counted = json(&tv(&["enumerate", "--file", f, "--r", "6", "--count-only", "--json"]));
    assert_eq!(counted["counts"]["admissible"], lines as u64);
    let ints = json(&tv(&["enumerate", "--file", f, "--r", "6", "--integer-only", "--json"]));
    for c in ints["colourings"].as_array().unwrap() {
        assert!(c.as_array().unwrap().iter().all(|x| !x.as_str().unwrap().contains('/')));
    }
    assert!(ints["counts"]["nodesVisited"].as_u64() < counted["counts"]["nodesVisited"].as_u64());
}

#[test]
fn bounds_report_sharpness() {
    let dir = TempDir::new().unwrap();
    let files = census(dir.path(), 1, &[]);
    let with_b1 = files
        .iter()
        .find(|f| {
            let rep = json(&tv(&["bounds", "--file", path(f), "--r", "4", "--json"]));
            rep["betti1"] == 1
        })
        .unwrap();
    let rep = json(&tv(&["bounds", "--file", path(with_b1), "--r", "4", "--json"]));
    assert_eq!(rep["actual"], 4);
    assert_eq!(rep["naive"]["value"], 9);
    assert_eq!(rep["eqLong"], serde_json::json!({ "value": 4, "sharp": true }));
    assert_eq!(rep["eqShort"], serde_json::json!({ "value": 4, "sharp": true }));
    let text = stdout(&tv(&["bounds", "--file", path(with_b1), "--r", "4"]));
    assert!(text.contains("sharp"));
}
