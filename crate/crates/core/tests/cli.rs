use std::fs;
use std::path::Path;
use std::process::{Command, Output};

/// Runs the binary on a whitespace-separated command line.
fn evasive(cmd: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_evasive")).args(cmd.split_whitespace()).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn construct_basic_writes_family() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fam.txt");
    let out = evasive(&format!("construct --mode basic --n 3 --d 2 --k 1 --out {}", path.display()));
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("49 members"));
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("format=1\nconstruction basic\n"));
    assert!(text.contains("members 49\n"));
}

#[test]
fn construct_main_records_branch() {
    let out = evasive("construct --mode main --n 3 --d 2 --k 1 --eps 1/2");
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("branch direct\n"));
}

#[test]
fn exit_codes() {
    let small = evasive("construct --mode basic --n 2 --d 1 --k 1 --prime 3");
    assert_eq!(code(&small), 2);
    assert!(stderr(&small).contains("must exceed 3"));
    assert_eq!(code(&evasive("construct --mode basic --n 2 --d 1 --k 5")), 1);
    assert_eq!(code(&evasive("construct --mode chow --n 2 --d 1 --k 0 --eps 0.1")), 1);
    assert_eq!(code(&evasive("construct --mode basic --n 2 --d 1 --k 0 --prime 100")), 1);
    assert_eq!(code(&evasive("hitting-set --m 2 --ideg 9 --eps 1/2 --prime 101")), 2);
    assert_eq!(code(&evasive("no-such-command")), 1);
    assert_eq!(code(&evasive("--help")), 0);
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("fam.txt").display().to_string();
    let report = dir.path().join("report.txt");
    let cubic = data("twisted_cubic.txt");
    assert_eq!(code(&evasive(&format!("construct --mode basic --n 3 --d 3 --k 1 --out {fam}"))), 0);

    let out = evasive(&format!("verify --family {fam} --variety {cubic} --oracle groebner --out {}", report.display()));
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&report).unwrap();
    assert!(text.contains("fraction 0/100\n"), "{text}");

    let out = evasive(&format!("verify --family {fam} --variety {cubic} --oracle linalg"));
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("oracle not applicable"));

    assert_eq!(code(&evasive(&format!("verify --family {fam} --variety {cubic} --budget 1"))), 4);
    assert_eq!(code(&evasive(&format!("verify --family {fam} --variety missing.txt"))), 1);
    assert_eq!(code(&evasive(&format!("verify --family {cubic} --variety {cubic}"))), 1);

    let out = evasive(&format!("verify --family {fam} --arrangement 1 --count 3 --seed 9 --oracle linalg"));
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("guarantee met\n"));
    let out = evasive(&format!("verify --family {fam} --curve --oracle curve"));
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_reports_violated_guarantee() {
    // the basic family of points in P^1 is {[-1:1], [-2:1]}; a variety made
    // of exactly those points defeats every member
    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("fam.txt").display().to_string();
    let var = dir.path().join("points.txt");
    fs::write(
        &var,
        "format=1\nambient projective 1\ncomponent dim=0 deg=1\nx0 + x1\ncomponent dim=0 deg=1\nx0 + 2*x1\n",
    )
    .unwrap();
    assert_eq!(code(&evasive(&format!("construct --mode basic --n 1 --d 1 --k 0 --out {fam}"))), 0);
    for oracle in ["linalg", "groebner"] {
        let out = evasive(&format!("verify --family {fam} --variety {} --oracle {oracle}", var.display()));
        assert_eq!(code(&out), 3);
        assert!(stdout(&out).contains("fraction 2/2\n"));
    }
}

#[test]
fn noether_check() {
    let hyperbola = data("hyperbola.txt");
    let out = evasive(&format!("noether --n 2 --d 2 --r 1 --eps 1/2 --check {hyperbola}"));
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("finite on the variety: 6/6"));

    let id = evasive("noether --n 2 --d 2 --r 2");
    assert_eq!(code(&id), 0);
    assert!(stdout(&id).contains("maps 1\nmap 0\nindex \nrow 1 0\nrow 0 1\n"));
    assert_eq!(code(&evasive("noether --n 2 --d 2 --r 1 --check missing.txt")), 1);

    // projections of the twisted cubic from lines of P^3 onto P^1
    let cubic = data("twisted_cubic.txt");
    let out = evasive(&format!("noether --n 3 --d 3 --r 1 --projective --check {cubic}"));
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("noether: 100 maps P^3 -> P^1; finite on the variety: 100/100"));
    let mixed = evasive(&format!("noether --n 2 --d 2 --r 1 --projective --check {hyperbola}"));
    assert_eq!(code(&mixed), 1);
}

#[test]
fn runs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let runs = [
        "construct --mode basic --n 3 --d 2 --k 1",
        "construct --mode main --n 5 --d 2 --k 3 --eps 1/2",
        "hitting-set --m 2 --ideg 3 --eps 1/4",
        "rank-extractor --n 6 --m 2 --eps 1/8",
        "noether --n 3 --d 2 --r 1 --eps 1/2",
    ];
    for (i, cmd) in runs.iter().enumerate() {
        let mut outputs = Vec::new();
        for rep in 0..2 {
            let path = dir.path().join(format!("{i}-{rep}.txt"));
            assert_eq!(code(&evasive(&format!("{cmd} --out {}", path.display()))), 0, "{cmd}");
            outputs.push(fs::read(&path).unwrap());
        }
        assert_eq!(outputs[0], outputs[1], "{cmd}");
    }
}
