use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hamweave::formats::{ScheduleFile, SearchResultFile, SpecFile};
use hamweave::report::read_report;
use tempfile::TempDir;

fn hamweave(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamweave"))
        .args(args)
        .env_remove("HAMWEAVE_MAX_DENSE_N")
        .output()
        .unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = hamweave(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn read<T: serde::de::DeserializeOwned>(p: &Path) -> T {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

/// Writes the standard spec and compiles `circuit` at `base`; returns paths.
fn compiled(dir: &TempDir, circuit: &str, n: usize, base: u64) -> (PathBuf, PathBuf, PathBuf) {
    let spec = dir.path().join("spec.json");
    let sched = dir.path().join("sched.json");
    let circ = write(dir, "circ.json", circuit);
    let (n, base) = (n.to_string(), base.to_string());
    ok(&["genspec", "--n", &n, "--base", &base, "--out", s(&spec)]);
    ok(&[
        "compile",
        "--circuit",
        s(&circ),
        "--base",
        &base,
        "--out",
        s(&sched),
    ]);
    (spec, sched, circ)
}

fn fidelity(stdout: &str) -> f64 {
    let line = stdout.lines().find(|l| l.starts_with("fidelity:")).unwrap();
    line["fidelity:".len()..].trim().parse().unwrap()
}

#[test]
fn genspec_writes_power_of_two_coefficients() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("spec.json");
    ok(&["genspec", "--n", "3", "--base", "16", "--out", s(&out)]);
    let spec: SpecFile = read(&out);
    assert_eq!(spec.a, [1.0, 0.0625, 0.00390625]);
    assert_eq!(spec.b, [1.0, 16f64.powi(-2), 16f64.powi(-4)]);
    assert_eq!(spec.c, [16f64.powi(-1), 16f64.powi(-3)]);
    // Round trip through the same format is exact.
    let again = dir.path().join("again.json");
    fs::write(&again, serde_json::to_string(&spec).unwrap()).unwrap();
    assert_eq!(read::<SpecFile>(&again), spec);

    let minimal: SpecFile = serde_json::from_str(&ok(&["genspec", "--n", "1"])).unwrap();
    assert_eq!(
        minimal,
        SpecFile {
            n: 1,
            a: vec![1.0],
            b: vec![1.0],
            c: vec![]
        }
    );
}

#[test]
fn genspec_rejects_bad_base() {
    assert_eq!(code(&hamweave(&["genspec", "--n", "2", "--base", "12"])), 4);
    assert_eq!(code(&hamweave(&["genspec", "--n", "2", "--base", "8"])), 4);
}

#[test]
fn compile_single_hadamard() {
    let dir = TempDir::new().unwrap();
    let (_, sched, _) = compiled(&dir, r#"{"n":1,"gates":[{"g":"H","q":1}]}"#, 1, 16);
    let f: ScheduleFile = read(&sched);
    assert_eq!(f.segments.len(), 1);
    assert_eq!(f.segments[0].h, 1);
    assert_eq!(f.segments[0].t_pi, Some(0.5));
    assert_eq!(f.segments[0].t, Some(PI / 2.0));
}

#[test]
fn compile_reports_and_merges() {
    let dir = TempDir::new().unwrap();
    let circ = write(
        &dir,
        "cnot.json",
        r#"{"n":2,"gates":[{"g":"CNOT","q":1,"q2":2}]}"#,
    );
    let out = dir.path().join("s.json");
    let stdout = ok(&[
        "compile",
        "--circuit",
        s(&circ),
        "--base",
        "16",
        "--out",
        s(&out),
    ]);
    assert!(stdout.contains("segments: 3"), "{stdout}");
    let f: ScheduleFile = read(&out);
    assert_eq!(
        f.segments.iter().map(|s| s.h).collect::<Vec<_>>(),
        [1, 2, 1]
    );
    assert_eq!(f.segments[0].label.as_deref(), Some("CNOT(1,2): H(2)"));

    let empty = write(&dir, "empty.json", r#"{"n":2,"gates":[]}"#);
    let f: ScheduleFile = serde_json::from_str(&ok(&["compile", "--circuit", s(&empty)])).unwrap();
    assert!(f.segments.is_empty());
}

#[test]
fn compile_errors_have_distinct_codes() {
    let dir = TempDir::new().unwrap();
    let broken = write(
        &dir,
        "broken.json",
        "{\"n\": 2,\n \"gates\": [ {\"g\": \"H\" ",
    );
    let out = hamweave(&["compile", "--circuit", s(&broken)]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let unknown = write(&dir, "unknown.json", r#"{"n":2,"gates":[{"g":"Y","q":1}]}"#);
    assert_eq!(code(&hamweave(&["compile", "--circuit", s(&unknown)])), 3);
    let range = write(&dir, "range.json", r#"{"n":2,"gates":[{"g":"T","q":5}]}"#);
    assert_eq!(code(&hamweave(&["compile", "--circuit", s(&range)])), 4);
    assert_eq!(
        code(&hamweave(&["compile", "--circuit", "/nonexistent/c.json"])),
        1
    );
    assert_eq!(code(&hamweave(&["compile"])), 2);
}

#[test]
fn identity_schedule_leaves_state_alone() {
    let dir = TempDir::new().unwrap();
    let spec = dir.path().join("spec.json");
    ok(&["genspec", "--n", "3", "--out", s(&spec)]);
    let sched = write(&dir, "id.json", r#"{"segments":[]}"#);
    let csv = ok(&[
        "simulate",
        "--spec",
        s(&spec),
        "--schedule",
        s(&sched),
        "--initial",
        "010",
    ]);
    let mut rows = csv::Reader::from_reader(csv.as_bytes());
    for (i, rec) in rows.records().enumerate() {
        let rec = rec.unwrap();
        let re: f64 = rec[2].parse().unwrap();
        let im: f64 = rec[3].parse().unwrap();
        assert_eq!((re, im), (if i == 2 { 1.0 } else { 0.0 }, 0.0));
    }
}

#[test]
fn compiled_hadamard_fidelity_is_cos_pi_over_32() {
    let dir = TempDir::new().unwrap();
    let (spec, sched, circ) = compiled(&dir, r#"{"n":3,"gates":[{"g":"H","q":2}]}"#, 3, 16);
    let f = fidelity(&ok(&[
        "simulate",
        "--spec",
        s(&spec),
        "--schedule",
        s(&sched),
        "--circuit",
        s(&circ),
    ]));
    assert!((f - 0.9952).abs() <= 0.0005, "{f}");
    assert!((f - (PI / 32.0).cos()).abs() < 1e-9);
}

#[test]
fn compiled_cnot_base_256() {
    let dir = TempDir::new().unwrap();
    let (spec, sched, circ) = compiled(
        &dir,
        r#"{"n":2,"gates":[{"g":"CNOT","q":1,"q2":2}]}"#,
        2,
        256,
    );
    let out = dir.path().join("f.csv");
    let stdout = ok(&[
        "simulate",
        "--spec",
        s(&spec),
        "--schedule",
        s(&sched),
        "--circuit",
        s(&circ),
        "--out",
        s(&out),
    ]);
    assert!(fidelity(&stdout) >= 0.999);
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("n,fidelity,distance\n2,"), "{text}");
}

#[test]
fn simulate_dimension_checks() {
    let dir = TempDir::new().unwrap();
    let (spec, sched, _) = compiled(&dir, r#"{"n":3,"gates":[{"g":"H","q":1}]}"#, 3, 16);
    let two = write(&dir, "two.json", r#"{"n":2,"gates":[]}"#);
    let out = hamweave(&[
        "simulate",
        "--spec",
        s(&spec),
        "--schedule",
        s(&sched),
        "--circuit",
        s(&two),
    ]);
    assert_eq!(code(&out), 4);
    let out = hamweave(&[
        "simulate",
        "--spec",
        s(&spec),
        "--schedule",
        s(&sched),
        "--initial",
        "01",
    ]);
    assert_eq!(code(&out), 3);

    let three = write(&dir, "three.json", r#"{"n":3,"gates":[]}"#);
    let capped = Command::new(env!("CARGO_BIN_EXE_hamweave"))
        .args([
            "simulate",
            "--spec",
            s(&spec),
            "--schedule",
            s(&sched),
            "--circuit",
            s(&three),
        ])
        .env("HAMWEAVE_MAX_DENSE_N", "2")
        .output()
        .unwrap();
    assert_eq!(code(&capped), 4);
}

#[test]
fn seeded_random_state_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (spec, sched, _) = compiled(
        &dir,
        r#"{"n":2,"gates":[{"g":"H","q":1},{"g":"T","q":2}]}"#,
        2,
        16,
    );
    let run = |seed: &str| {
        ok(&[
            "simulate",
            "--spec",
            s(&spec),
            "--schedule",
            s(&sched),
            "--seed",
            seed,
        ])
    };
    assert_eq!(run("7"), run("7"));
    assert_ne!(run("7"), run("8"));
    let total: f64 = csv::Reader::from_reader(run("7").as_bytes())
        .records()
        .map(|r| r.unwrap()[4].parse::<f64>().unwrap())
        .sum();
    assert!((total - 1.0).abs() < 1e-12);
}

#[test]
fn report_is_sound_monotone_and_lossless() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("report.csv");
    ok(&[
        "report",
        "--n",
        "2",
        "--base",
        "16,64,256",
        "--out",
        s(&out),
    ]);
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("gate,qubits,base,n,duration,fidelity,bound,distance\n"));
    let rows = read_report(text.as_bytes()).unwrap();
    // H, T on 2 qubits, one ZZ, two CNOT orientations, per base.
    assert_eq!(rows.len(), 7 * 3);
    for r in &rows {
        assert!(r.distance <= r.bound + 1e-12, "{r:?}");
        if r.gate == "H" && r.qubits == "2" {
            assert!((r.fidelity - 1.0).abs() < 1e-9);
        }
    }
    for w in rows.chunks(7).collect::<Vec<_>>().windows(2) {
        for (lo, hi) in w[0].iter().zip(w[1]) {
            assert_eq!((&lo.gate, &lo.qubits), (&hi.gate, &hi.qubits));
            assert!(hi.fidelity >= lo.fidelity, "{lo:?} {hi:?}");
        }
    }
    // 17 significant digits: values parse back bit-for-bit.
    let line = text.lines().nth(1).unwrap();
    let field = line.split(',').nth(5).unwrap();
    assert_eq!(
        field.parse::<f64>().unwrap().to_bits(),
        rows[0].fidelity.to_bits()
    );
    assert_eq!(field.split('e').next().unwrap().replace('.', "").len(), 17);
}

#[test]
fn search_irrational_pair() {
    let stdout = ok(&[
        "search",
        "--coeffs",
        "1,sqrt(5)",
        "--targets",
        "pi/2,0",
        "--tolerance",
        "0.02",
        "--tmax",
        "5000",
        "--resolution",
        "1e-3",
    ]);
    let res: SearchResultFile = serde_json::from_str(&stdout).unwrap();
    assert!(res.converged && res.error <= 0.02);
    // Recorded fixture.
    assert!((res.time - 4538.0304).abs() < 1e-3, "{}", res.time);
}

#[test]
fn search_reports_failure_and_degenerate_cases() {
    let out = hamweave(&[
        "search",
        "--coeffs",
        "1,1",
        "--targets",
        "0,pi/2",
        "--tolerance",
        "0.01",
        "--tmax",
        "10",
    ]);
    assert_eq!(code(&out), 6);
    let res: SearchResultFile = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!res.converged);
    assert!((res.error - PI / 4.0).abs() < 1e-6);

    let res: SearchResultFile = serde_json::from_str(&ok(&[
        "search",
        "--coeffs",
        "1",
        "--targets",
        "0",
        "--tolerance",
        "0.01",
        "--tmax",
        "10",
    ]))
    .unwrap();
    assert_eq!((res.time, res.error), (0.0, 0.0));

    let bad = hamweave(&[
        "search",
        "--coeffs",
        "1,tau",
        "--targets",
        "0,0",
        "--tolerance",
        "0.1",
        "--tmax",
        "1",
    ]);
    assert_eq!(code(&bad), 3);
    let empty = hamweave(&[
        "search",
        "--targets",
        "0",
        "--tolerance",
        "0.1",
        "--tmax",
        "1",
    ]);
    assert_eq!(code(&empty), 3);
}

#[test]
fn search_problem_file_with_override() {
    let dir = TempDir::new().unwrap();
    let problem = write(
        &dir,
        "p.json",
        r#"{"coefficients":[1.0],"targets":[0.5],"tolerance":0.01,"t_max":10.0,"resolution":0.001}"#,
    );
    let out = dir.path().join("r.json");
    ok(&["search", "--problem", s(&problem), "--out", s(&out)]);
    let res: SearchResultFile = read(&out);
    assert!((res.time - 0.5).abs() < 1e-6);
    let res: SearchResultFile = serde_json::from_str(&ok(&[
        "search",
        "--problem",
        s(&problem),
        "--targets",
        "pi/4",
    ]))
    .unwrap();
    assert!((res.time - PI / 4.0).abs() < 1e-6);
}
