use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const SL2: &str = r#"{"algebra": {"type": "A", "rank": 1}, "weights": [[1],[1]], "z": ["1","2"], "mode": "periodic"}"#;

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gaudinlab"))
        .arg("--cache-dir")
        .arg(cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn rep_build_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    for (args, dim) in [
        (vec!["rep", "build", "A", "1", "--weight", "2"], 3),
        (vec!["rep", "build", "A", "1", "--weight", "0"], 1),
        (vec!["rep", "build", "G", "2", "--weight", "1,0"], 7),
        (vec!["rep", "build", "B", "2", "--weight", "0,1", "--form", "normalized"], 4),
    ] {
        let o = run(dir.path(), &args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).contains(&format!("dim {dim}")), "{args:?}: {}", stdout(&o));
    }
    let again = run(dir.path(), &["rep", "build", "A", "1", "--weight", "2"]);
    assert!(stdout(&again).contains("(hit)"));
    assert!(dir.path().join("A1/killing/2.json").exists());
}

#[test]
fn rep_build_rejects_bad_weights() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["rep", "build", "A", "2", "--weight", "-1,0"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["rep", "build", "A", "2", "--weight", "1"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["rep", "build", "A", "0", "--weight", ""]).status.code(), Some(2));
}

#[test]
fn gaudin_run_writes_identical_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sl2.json");
    fs::write(&cfg, SL2).unwrap();
    let cache = dir.path().join("cache");
    let mut verdicts = Vec::new();
    for out in ["a", "b"] {
        let out_dir = dir.path().join(out);
        let o = run(&cache, &["gaudin", "run", cfg.to_str().unwrap(), "--seed", "3", "--out", out_dir.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(out_dir.join("manifest.json").exists());
        verdicts.push(fs::read(out_dir.join("verdict.json")).unwrap());
    }
    assert_eq!(verdicts[0], verdicts[1]);
    let v: serde_json::Value = serde_json::from_slice(&verdicts[0]).unwrap();
    assert_eq!(v["perfectly_integrable"], true);
}

#[test]
fn gaudin_run_config_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad_z = dir.path().join("z.json");
    fs::write(&bad_z, SL2.replace(r#""2"]"#, r#""1"]"#)).unwrap();
    let o = run(dir.path(), &["gaudin", "run", bad_z.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("z[1]"));

    let regular = dir.path().join("reg.json");
    fs::write(&regular, SL2.replace("periodic", "regular")).unwrap();
    let o = run(dir.path(), &["gaudin", "run", regular.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[1]"));

    let o = run(dir.path(), &["--dim-cap", "1", "gaudin", "run", regular.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(dir.path(), &["--dim-cap", "1", "gaudin", "run", bad_z.with_file_name("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let capped = dir.path().join("cap.json");
    fs::write(&capped, SL2).unwrap();
    let o = run(dir.path(), &["--dim-cap", "1", "gaudin", "run", capped.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn sweep_rows() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sl2.json");
    fs::write(&cfg, SL2).unwrap();
    let o = run(dir.path(), &["gaudin", "sweep", cfg.to_str().unwrap(), "--vary", "z2", "--grid", "2:5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.split(',').nth(11) == Some("true")), "{text}");

    let o = run(dir.path(), &["gaudin", "sweep", cfg.to_str().unwrap(), "--vary", "z2", "--grid", ""]);
    assert_eq!(stdout(&o).lines().count(), 1);

    let o = run(dir.path(), &["gaudin", "sweep", cfg.to_str().unwrap(), "--vary", "z2", "--grid", "1,3"]);
    let text = stdout(&o);
    assert!(text.lines().nth(1).unwrap().contains(",warning,"));
    assert!(text.lines().nth(2).unwrap().contains(",ok,"));
}

#[test]
fn counterexample_command() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["counterexample"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cyclic: yes"));
    let o = run(dir.path(), &["counterexample", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["trivial_eigenspace_dim"], "2");
    let o = run(dir.path(), &["counterexample", "--explain"]);
    let text = stdout(&o);
    assert!(text.contains("{1, x1, x2}"));
    assert!(text.contains("det = 0"));
}
