use std::process::{Command, Output};

fn suspfactor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_suspfactor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn verify_passes_and_records_generator() {
    let o = suspfactor(&["verify", "--example", "1", "--samples", "60", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["status"], "pass");
    assert_eq!(r["generator"], "ChaCha8Rng");
    assert!(r.get("duration_secs").is_none());
}

#[test]
fn verify_example5_tallies_strata() {
    let o = suspfactor(&["verify", "--example", "5", "--samples", "60", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    let cohom = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["check"] == "cohom_identity")
        .unwrap();
    assert_eq!(cohom["tallies"]["floor_index_equals_m"], 60);
    for s in ["X0", "X1", "X1'"] {
        assert_eq!(cohom["tallies"][s], 20);
    }
}

#[test]
fn verify_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = suspfactor(&[
        "verify", "--example", "4", "--samples", "20", "--seed", "3", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let r: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(r["example"], 4);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(suspfactor(&["verify", "--example", "9"]).status.code(), Some(2));
    assert_eq!(suspfactor(&["lengths", "--example", "3", "--bound", "0"]).status.code(), Some(2));
    assert_eq!(suspfactor(&["witness", "--example", "5", "--radius", "1"]).status.code(), Some(2));
    assert_eq!(
        suspfactor(&["render", "--example", "1", "--rho", "3/2", "--L", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn witness_commands() {
    let o = suspfactor(&["witness", "--example", "1", "--radius", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let w = json(&o);
    assert_eq!(w["radius"], 5);
    assert_eq!(w["word"].as_str().unwrap().split(' ').count(), 11);
    assert!(suspfactor(&["witness", "--example", "1", "--radius", "0"]).status.success());
    assert_eq!(stdout(&suspfactor(&["witness", "--example", "4", "--radius", "5"])), "none\n");
}

#[test]
fn lengths_commands() {
    for bound in ["1", "50"] {
        let r = json(&suspfactor(&["lengths", "--example", "3", "--bound", bound]));
        assert_eq!(r["count"], 0);
    }
    let r = json(&suspfactor(&["lengths", "--example", "5", "--bound", "50"]));
    assert_eq!(r["count"], 50);
    let eta2 = r["target_lengths"][1].clone();
    let k = r["source_lengths"].as_array().unwrap().iter().position(|l| *l == eta2).unwrap();
    for c in r["coincidences"].as_array().unwrap() {
        let left = c["left"].as_array().unwrap();
        assert!(left.iter().enumerate().all(|(i, n)| i == k || n == 0));
        assert_eq!(c["right"][0], 0);
    }
}

#[test]
fn render_text_shows_split_tiles() {
    let o = suspfactor(&["render", "--example", "4", "--rho", "1/7", "--s", "0", "--L", "3", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let (source, image) = text.split_once("image\n").unwrap();
    assert!(source.lines().skip(1).all(|l| l.ends_with(" 1")));
    assert!(image.lines().filter(|l| l.ends_with(" 1/2")).count() >= 2);
}

#[test]
fn render_json_and_svg() {
    let r = json(&suspfactor(&["render", "--example", "1", "--rho", "1/7", "--L", "8", "--format", "json"]));
    let tiles = r["source"]["tiles"].as_array().unwrap();
    assert!(!tiles.is_empty());
    assert_eq!(tiles[0]["length"].as_array().unwrap().len(), 4);
    let svg = stdout(&suspfactor(&["render", "--example", "2", "--rho", "0.3", "--L", "6", "--format", "svg"]));
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("class=\"origin\""));
}

#[test]
fn render_boundary_point_exits_3() {
    let o = suspfactor(&["render", "--example", "1", "--rho", "0", "--L", "3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn fixtures_and_precision_override() {
    let plain = suspfactor(&["fixtures", "--example", "4"]);
    let coarse = Command::new(env!("CARGO_BIN_EXE_suspfactor"))
        .args(["fixtures", "--example", "4"])
        .env("SUSPFACTOR_PRECISION", "1/10")
        .output()
        .unwrap();
    assert_eq!(plain.stdout, coarse.stdout);
    let f = json(&plain);
    assert_eq!(f["target_lengths"].as_array().unwrap().len(), 2);
    assert_eq!(f["non_local"], false);
}
