use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde::Deserialize;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coophunt"))
}

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn run_config(cfg: &Path, dir: &Path) -> Output {
    bin().arg("run").arg(cfg).arg("--out").arg(dir).output().unwrap()
}

fn json_data(text: &str) -> Value {
    let v: Value = serde_json::from_str(text).unwrap();
    assert_eq!(v["schema_version"], 1);
    v["data"].clone()
}

fn csv_rows<T: for<'de> Deserialize<'de>>(text: &str) -> Vec<T> {
    assert!(text.starts_with("# schema_version=1\n"));
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap()
}

#[derive(Debug, Deserialize)]
#[allow(dead_code)]
struct EquilibriumRow {
    label: String,
    alpha: f64,
    kappa: f64,
    sigma: f64,
    h: f64,
    kind: String,
    x: f64,
    y: f64,
    classification: String,
    det: f64,
    trace: f64,
    multiplicity: u32,
}

#[derive(Debug, Deserialize)]
#[allow(dead_code)]
struct RegionRow {
    label: String,
    alpha: f64,
    kappa: f64,
    sigma: f64,
    h: f64,
    region: String,
    positive_count: usize,
    kappa1: Option<f64>,
    alpha1: Option<f64>,
    alpha2: Option<f64>,
    x_star: f64,
    f_at_xstar: f64,
    f_at_kappa: f64,
}

#[derive(Debug, Deserialize)]
#[allow(dead_code)]
struct BtRow {
    sigma: f64,
    alpha_sn: f64,
    alpha_h: Option<f64>,
    alpha_hl: Option<f64>,
    alpha_sn_exact: Option<f64>,
    alpha_h_exact: Option<f64>,
}

#[derive(Debug, Deserialize)]
struct TrajectoryRow {
    start: usize,
    t: f64,
    x: f64,
    y: f64,
}

#[test]
fn equilibria_reports_fold_candidate() {
    let out = run_ok(&["equilibria", "--alpha", "6", "--kappa", "1.2", "--sigma", "1", "--h", "0.5", "--format", "csv"]);
    let rows: Vec<EquilibriumRow> = csv_rows(&out);
    let pos: Vec<_> = rows.iter().filter(|r| r.kind == "Positive").collect();
    assert_eq!(pos.len(), 1);
    assert_eq!(pos[0].classification, "DegenerateFoldCandidate");
    assert!((pos[0].x - 1.0).abs() < 1e-6);
    assert!((pos[0].y - 1.0 / 6.0).abs() < 1e-6);
}

#[test]
fn bt_reports_anchor_and_coefficients() {
    let data = json_data(&run_ok(&["bt", "--xstar", "1", "--h", "0.5"]));
    let e = &data["expansion"];
    assert!((e["f11"].as_f64().unwrap() + 66.6667).abs() < 1e-4);
    assert!((e["f12"].as_f64().unwrap() - 222.2222).abs() < 1e-4);
    assert!((e["alpha_star"].as_f64().unwrap() - 20.0).abs() < 1e-12);
    assert!((e["sigma_star"].as_f64().unwrap() - 0.3).abs() < 1e-12);
}

#[test]
fn hopf_reproduces_two_cycle_parameters() {
    let data = json_data(&run_ok(&["hopf", "--kappa", "133.7629", "--h", "0.45", "--x1", "1"]));
    let c = &data["critical"];
    assert!((c["alpha"].as_f64().unwrap() - 0.3555).abs() < 5e-5);
    assert!((c["sigma"].as_f64().unwrap() - 2.319).abs() < 5e-4);
}

#[test]
fn usage_and_config_errors_exit_one() {
    let out = bin().args(["equilibria", "--alpha", "-1", "--kappa", "1", "--sigma", "1", "--h", "0.5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(bin().arg("nonsense").output().unwrap().status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    for (name, body) in [
        ("empty_tasks.json", r#"{"name": "x", "tasks": []}"#),
        ("bad_json.json", "{"),
        ("unknown_task.json", r#"{"name": "x", "tasks": ["plot"]}"#),
        ("no_points.json", r#"{"name": "x", "tasks": ["equilibria"]}"#),
        ("bad_grid.json", r#"{"name": "x", "grid": {"alpha": [], "kappa": 1, "sigma": 1, "h": 0.5}, "tasks": ["region"]}"#),
    ] {
        let p = dir.path().join(name);
        fs::write(&p, body).unwrap();
        let out = run_config(&p, &dir.path().join("out"));
        assert_eq!(out.status.code(), Some(1), "{name}");
    }
    let out = run_config(&dir.path().join("missing.json"), &dir.path().join("out"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn numeric_failure_exits_two_with_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("stall.json");
    fs::write(
        &cfg,
        r#"{"name": "stall",
            "points": [{"label": "p", "alpha": 18, "kappa": 1.2, "sigma": 0.35, "h": 0.5}],
            "tasks": ["simulate"],
            "integrator": {"max_steps": 5},
            "simulate": {"starts": [[0.9, 0.08]], "t_end": 100}}"#,
    )
    .unwrap();
    let out_dir = dir.path().join("out");
    let out = run_config(&cfg, &out_dir);
    assert_eq!(out.status.code(), Some(2));
    let diag = json_data(&fs::read_to_string(out_dir.join("diagnostic.json")).unwrap());
    assert_eq!(diag["task"], "simulate");
    assert!(diag["error"].as_str().unwrap().contains("budget"));
}

fn snapshot(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), fs::read(e.path()).unwrap())
        })
        .collect()
}

#[test]
fn runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for d in [&a, &b] {
        assert!(run_config(&configs().join("fig3a.json"), d).status.success());
    }
    let (sa, sb) = (snapshot(&a), snapshot(&b));
    assert_eq!(sa.keys().collect::<Vec<_>>(), sb.keys().collect::<Vec<_>>());
    for (k, v) in &sa {
        assert!(v == &sb[k], "{k} differs");
    }
}

#[test]
fn sweep_output_is_independent_of_seed() {
    let grid = configs().join("sweep_grid.json");
    let g = grid.to_str().unwrap();
    let a = run_ok(&["sweep", "--grid", g, "--format", "csv", "--seed", "1"]);
    let b = run_ok(&["sweep", "--grid", g, "--format", "csv", "--seed", "2"]);
    assert_eq!(a, b);
}

#[test]
fn fig2_artifacts_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_config(&configs().join("fig2.json"), dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let read = |f: &str| fs::read_to_string(dir.path().join(f)).unwrap();

    let bt: Vec<BtRow> = csv_rows(&read("bt_curves.csv"));
    assert_eq!(bt.len(), 81);
    assert!(bt.iter().all(|r| r.alpha_h.is_some() == (r.sigma > 0.3)));

    let eq: Vec<EquilibriumRow> = csv_rows(&read("equilibria.csv"));
    let count = |l: &str| eq.iter().filter(|r| r.label == l && r.kind == "Positive").count();
    assert_eq!(count("I1"), 0);
    assert_eq!(count("I2"), 2);
    assert_eq!(count("I4"), 2);

    let reg: Vec<RegionRow> = csv_rows(&read("region.csv"));
    assert_eq!(reg.len(), 6);

    for label in ["I1", "I2", "I3", "HL", "I4", "cusp"] {
        let tr: Vec<TrajectoryRow> = csv_rows(&read(&format!("trajectory_{label}.csv")));
        assert!(tr.len() > 10);
        assert!(tr.iter().all(|r| r.x >= -1e-10 && r.y >= -1e-10 && r.t >= 0.0 && r.start < 4));
    }

    let manifest = json_data(&read("manifest.json"));
    assert_eq!(manifest["artifacts"].as_array().unwrap().len(), 4);
}

#[test]
fn table1_config_matches_every_row() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run_config(&configs().join("table1.json"), dir.path()).status.success());
    let data = json_data(&fs::read_to_string(dir.path().join("table1.json")).unwrap());
    assert_eq!(data["all_match"], true);
    assert_eq!(data["rows"].as_array().unwrap().len(), 9);
}

#[test]
fn fig3_configs_report_cycles() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    assert!(run_config(&configs().join("fig3a.json"), &a).status.success());
    let cyc = json_data(&fs::read_to_string(a.join("cycles.json")).unwrap());
    let cycles = cyc[0]["report"]["cycles"].as_array().unwrap();
    assert_eq!(cycles.len(), 1);
    assert_eq!(cycles[0]["stability"], "Stable");
    let hopf = json_data(&fs::read_to_string(a.join("hopf.json")).unwrap());
    assert!((hopf[0]["focal"]["l1"].as_f64().unwrap() + 21.2827).abs() < 0.1);

    let b = dir.path().join("b");
    assert!(run_config(&configs().join("fig3b.json"), &b).status.success());
    let cyc = json_data(&fs::read_to_string(b.join("cycles.json")).unwrap());
    assert_eq!(cyc[0]["probes"].as_array().unwrap().len(), 2);
    let hopf = json_data(&fs::read_to_string(b.join("hopf.json")).unwrap());
    assert_eq!(hopf[0]["focal"]["multiplicity"], 2);
}
