use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pht_core::corpus::{
    bundled_spiral, convex, five_armed_star, perturbed_arrowhead, random_star, twin_prongs,
};
use pht_core::Polygon;
use serde_json::Value;
use tempfile::TempDir;

fn pht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pht"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path
}

fn write_shape(dir: &TempDir, name: &str, p: &Polygon) -> PathBuf {
    write(dir, name, &serde_json::to_string(p).unwrap())
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

const ARROWHEAD: &str = r#"{"vertices": [[0,0],[4,0],[4,3],[2,1],[0,3]]}"#;
const SQUARE: &str = r#"{"vertices": [[0,0],[1,0],[1,1],[0,1]]}"#;

#[test]
fn generate_round_trips_exactly() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("star.json");
    let o = pht(&[
        "generate",
        "random_star",
        "--k",
        "12",
        "--seed",
        "7",
        "--out",
        s(&out),
    ]);
    assert_eq!(code(&o), 0);
    let back: Polygon = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(back, random_star(12, 7).unwrap());
    let o = pht(&["check", s(&out), "--require-star"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn generate_hexagon_and_spiral() {
    let o = pht(&["generate", "regular_ngon", "--n", "6"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["vertices"].as_array().unwrap().len(), 6);
    let dir = TempDir::new().unwrap();
    let sp = dir.path().join("spiral.json");
    assert_eq!(
        code(&pht(&[
            "generate",
            "spiral",
            "--turns",
            "1.5",
            "--k",
            "12",
            "--out",
            s(&sp)
        ])),
        0
    );
    let o = pht(&["check", s(&sp)]);
    assert_eq!(json(&o)["star_shaped"], false);
    assert_eq!(code(&pht(&["check", s(&sp), "--require-star"])), 1);
}

#[test]
fn generate_failure_exits_2() {
    assert_eq!(code(&pht(&["generate", "regular_ngon", "--n", "2"])), 2);
    assert_eq!(code(&pht(&["generate", "random_star"])), 2);
}

#[test]
fn check_perturbed_arrowhead() {
    let dir = TempDir::new().unwrap();
    let f = write_shape(&dir, "a.json", &perturbed_arrowhead());
    let o = pht(&[
        "check",
        s(&f),
        "--require-star",
        "--require-general-position",
        "--require-simple",
    ]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["star_shaped"], true);
    assert_eq!(r["general_position"], true);
    assert_eq!(r["simple"], true);
}

#[test]
fn check_square_general_position_fails_with_witness() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "sq.json", SQUARE);
    let o = pht(&["check", s(&f), "--require-general-position"]);
    assert_eq!(code(&o), 1);
    let w = &json(&o)["general_position_witness"];
    assert_eq!(w["first"], serde_json::json!([0, 1]));
    assert_eq!(w["second"], serde_json::json!([2, 3]));
    assert_eq!(code(&pht(&["check", s(&f), "--require-simple"])), 0);
}

#[test]
fn check_twin_prongs_not_simple() {
    let dir = TempDir::new().unwrap();
    let f = write_shape(&dir, "t.json", &twin_prongs());
    let o = pht(&["check", s(&f), "--require-simple"]);
    assert_eq!(code(&o), 1);
    let w = &json(&o)["simplicity"]["witness"];
    assert!((w["theta"].as_f64().unwrap() - 1.5 * PI).abs() < 1e-12);
}

#[test]
fn invalid_inputs_exit_2() {
    let dir = TempDir::new().unwrap();
    let bow = write(
        &dir,
        "bow.json",
        r#"{"vertices": [[0,0],[1,1],[1,0],[0,1]]}"#,
    );
    let o = pht(&["check", s(&bow)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("self-intersecting"));

    let bad = write(
        &dir,
        "bad.json",
        "{\"vertices\": [[0,0],\n[1,0],\n[1,\"x\"]]}",
    );
    let o = pht(&["check", s(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let off = write(
        &dir,
        "off.json",
        r#"{"vertices": [[0,0],[4,0],[4,3],[2,1],[0,3]], "center": [0.2, 2.5]}"#,
    );
    assert_eq!(code(&pht(&["check", s(&off)])), 2);
    assert_eq!(
        code(&pht(&["check", s(&dir.path().join("missing.json"))])),
        2
    );
}

#[test]
fn pht_arrowhead_straight_down() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "a.json", ARROWHEAD);
    let out = dir.path().join("pht.json");
    assert_eq!(code(&pht(&["pht", s(&f), "--out", s(&out)])), 0);
    let entries: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let down = entries
        .as_array()
        .unwrap()
        .iter()
        .find(|e| (e["direction"].as_f64().unwrap() - 1.5 * PI).abs() < 1e-12)
        .expect("entry at 3π/2");
    let pts = down["points"].as_array().unwrap();
    assert_eq!(pts.len(), 2);
    let (ess, fin): (Vec<&Value>, Vec<&Value>) = pts.iter().partition(|q| q["death"] == "inf");
    assert_eq!((ess.len(), fin.len()), (1, 1));
    assert!((ess[0]["birth"].as_f64().unwrap() + 3.0).abs() < 1e-12);
    assert!((fin[0]["birth"].as_f64().unwrap() + 3.0).abs() < 1e-12);
    assert!((fin[0]["death"].as_f64().unwrap() + 1.0).abs() < 1e-12);
}

#[test]
fn pht_pentagon_single_points() {
    let o = pht(&["generate", "regular_ngon", "--n", "5"]);
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("p.json");
    fs::write(&f, &o.stdout).unwrap();
    let o = pht(&["pht", s(&f), "--refine", "2"]);
    assert_eq!(code(&o), 0);
    for e in json(&o).as_array().unwrap() {
        let pts = e["points"].as_array().unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0]["death"], "inf");
    }
}

#[test]
fn pht_missing_output_dir_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "a.json", ARROWHEAD);
    let out = dir.path().join("nope").join("pht.json");
    assert_eq!(code(&pht(&["pht", s(&f), "--out", s(&out)])), 2);
    assert!(!out.exists());
}

#[test]
fn svg_is_xml_with_one_path_per_section() {
    let dir = TempDir::new().unwrap();
    let f = write_shape(&dir, "star.json", &five_armed_star());
    let svg = dir.path().join("star.svg");
    let verdict = dir.path().join("v.json");
    assert_eq!(
        code(&pht(&[
            "pht",
            s(&f),
            "--out",
            s(&dir.path().join("p.json")),
            "--svg",
            s(&svg)
        ])),
        0
    );
    assert_eq!(
        code(&pht(&["monodromy", s(&f), "--verdict", s(&verdict)])),
        0
    );
    let text = fs::read_to_string(&svg).unwrap();
    let doc = roxmltree::Document::parse(&text).expect("well-formed XML");
    let count = |class: &str| {
        doc.descendants()
            .filter(|n| n.attribute("class") == Some(class))
            .count()
    };
    let v: Value = serde_json::from_str(&fs::read_to_string(&verdict).unwrap()).unwrap();
    assert_eq!(
        count("section") as u64,
        v["section_count"].as_u64().unwrap()
    );
    assert_eq!(count("polygon"), 1);
    assert_eq!(count("sector"), 5);
}

#[test]
fn svg_for_non_simple_shape_still_renders() {
    let dir = TempDir::new().unwrap();
    let f = write_shape(&dir, "t.json", &twin_prongs());
    let svg = dir.path().join("t.svg");
    assert_eq!(
        code(&pht(&[
            "pht",
            s(&f),
            "--out",
            s(&dir.path().join("p.json")),
            "--svg",
            s(&svg)
        ])),
        0
    );
    roxmltree::Document::parse(&fs::read_to_string(&svg).unwrap()).unwrap();
}

#[test]
fn decompose_exit_codes() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", ARROWHEAD);
    let o = pht(&["decompose", s(&a)]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["verdict"], true);
    assert_eq!(r["max_gap"].as_f64(), Some(0.0));

    let sq = write(&dir, "sq.json", SQUARE);
    let o = pht(&["decompose", s(&sq), "--tol", "1e-9", "--refine", "1"]);
    assert_eq!(code(&o), 0);
    for rec in json(&o)["records"].as_array().unwrap() {
        assert!(rec["shape"]["points"].as_array().unwrap().is_empty());
        assert!(rec["sectors"]["points"].as_array().unwrap().is_empty());
    }

    let sp = write_shape(&dir, "sp.json", &bundled_spiral());
    assert_eq!(code(&pht(&["decompose", s(&sp)])), 2);
}

#[test]
fn monodromy_verdicts() {
    let dir = TempDir::new().unwrap();
    let run = |name: &str, p: &Polygon| -> (i32, Value, String) {
        let f = write_shape(&dir, name, p);
        let csv = dir.path().join(format!("{name}.csv"));
        let v = dir.path().join(format!("{name}.verdict.json"));
        let o = pht(&[
            "monodromy",
            s(&f),
            "--out",
            s(&csv),
            "--verdict",
            s(&v),
            "--jobs",
            "2",
        ]);
        let verdict =
            serde_json::from_str(&fs::read_to_string(&v).unwrap_or("null".into())).unwrap();
        (
            code(&o),
            verdict,
            fs::read_to_string(&csv).unwrap_or_default(),
        )
    };

    let (c, v, csv) = run("star", &five_armed_star());
    assert_eq!(c, 0);
    assert_eq!(v["trivial"], true);
    assert_eq!(v["section_count"], 6);
    assert!(v["witness_loop"].is_null());
    assert!(csv.starts_with("section_id,theta,birth,death,birth_vertex,death_vertex,essential\n"));

    let (c, v, _) = run("spiral", &bundled_spiral());
    assert_eq!(c, 0);
    assert_eq!(v["trivial"], false);
    let w = &v["witness_loop"];
    assert_ne!(w["start"], w["end"]);

    let (c, v, csv) = run("convex", &convex(9, 3).unwrap());
    assert_eq!(c, 0);
    assert_eq!(v["trivial"], true);
    assert_eq!(v["section_count"], 1);
    assert!(csv.lines().skip(1).all(|l| l.contains(",inf,")));

    let (c, _, _) = run("twin", &twin_prongs());
    assert_eq!(c, 1);
}

#[test]
fn monodromy_io_failure_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "sq.json", SQUARE);
    let out = dir.path().join("nope").join("v.csv");
    assert_eq!(code(&pht(&["monodromy", s(&f), "--out", s(&out)])), 2);
}
