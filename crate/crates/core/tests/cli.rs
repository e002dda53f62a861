use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_sepdepth"));
    c.env_remove("SEPDEPTH_BUDGET");
    c
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const C4: &str = "p tdp 4 4\n1 2\n2 3\n3 4\n4 1\n";

#[test]
fn generate_pipes_into_solve() {
    let gen = run(&["generate", "path", "15"], None);
    assert!(gen.status.success());
    let solve = run(&["solve"], Some(&stdout(&gen)));
    assert!(solve.status.success());
    assert_eq!(stdout(&solve).lines().next(), Some("4"));
}

#[test]
fn solve_then_verify() {
    let graph = scratch("c4.gr");
    let tree = scratch("c4.tree");
    std::fs::write(&graph, C4).unwrap();
    let solve = bin()
        .arg("solve")
        .arg(&graph)
        .arg("--out")
        .arg(&tree)
        .output()
        .unwrap();
    assert!(solve.status.success());
    assert_eq!(std::fs::read_to_string(&tree).unwrap(), "3\n0\n3\n1\n3\n");
    let verify = bin().arg("verify").arg(&graph).arg(&tree).output().unwrap();
    assert!(verify.status.success());
    assert_eq!(stdout(&verify), "3\n");
}

#[test]
fn verify_rejects_invalid_and_misdeclared_trees() {
    let graph = scratch("c4v.gr");
    std::fs::write(&graph, C4).unwrap();
    let cases = [
        ("star.tree", "2\n0\n1\n1\n1\n"),
        ("cycle.tree", "4\n2\n3\n4\n1\n"),
        ("depth.tree", "4\n0\n3\n1\n3\n"),
    ];
    for (name, text) in cases {
        let tree = scratch(name);
        std::fs::write(&tree, text).unwrap();
        let o = bin().arg("verify").arg(&graph).arg(&tree).output().unwrap();
        assert_eq!(o.status.code(), Some(3), "{name}");
    }
}

#[test]
fn stats_go_to_stderr() {
    let o = run(&["solve", "--stats", "--prune", "none"], Some(C4));
    assert!(o.status.success());
    let err = String::from_utf8(o.stderr.clone()).unwrap();
    for key in [
        "subproblems=",
        "separators_enumerated=",
        "separators_pruned=",
        "max_separator_size=",
    ] {
        assert!(err.contains(key), "{key}");
    }
    assert!(!stdout(&o).contains('='));
}

#[test]
fn parse_errors_exit_one() {
    let o = run(&["solve"], Some("p tdp 3 1\n1 1\n"));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr.clone())
        .unwrap()
        .contains("line 2"));
    assert_eq!(run(&["generate", "nope", "3"], None).status.code(), Some(1));
    assert_eq!(run(&["generate", "grid", "3"], None).status.code(), Some(1));
}

#[test]
fn budget_overruns_exit_two() {
    let gen = run(&["generate", "path", "13"], None);
    let o = run(&["oracle"], Some(&stdout(&gen)));
    assert_eq!(o.status.code(), Some(2));
    let o = bin()
        .args(["generate", "path", "100"])
        .env("SEPDEPTH_BUDGET", "generator_vertices=50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = bin()
        .args(["generate", "path", "3"])
        .env("SEPDEPTH_BUDGET", "bogus")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_matches_solver() {
    let gen = run(&["generate", "grid", "3", "3"], None);
    let o = run(&["oracle"], Some(&stdout(&gen)));
    assert_eq!(stdout(&o), "5\n");
    let s = run(&["solve"], Some(&stdout(&gen)));
    assert_eq!(stdout(&s).lines().next(), Some("5"));
}

#[test]
fn seps_lists_one_based_sets() {
    let o = run(&["seps"], Some(C4));
    assert_eq!(stdout(&o), "1 3\n2 4\n");
    let o = run(&["seps", "--max-size", "1"], Some(C4));
    assert_eq!(stdout(&o), "");
}

#[test]
fn analyze_prints_key_values() {
    let gen = run(&["generate", "cycle", "6"], None);
    let o = run(&["analyze"], Some(&stdout(&gen)));
    assert!(o.status.success());
    let text = stdout(&o);
    for line in [
        "n=6",
        "m=6",
        "tw_exact=2",
        "td=4",
        "separators=9",
        "ratio=1.000000",
        "outerplanar=true",
    ] {
        assert!(text.lines().any(|l| l == line), "{line}");
    }
}

#[test]
fn generation_is_deterministic() {
    for args in [
        &["generate", "ktree", "12", "3", "--seed", "5"][..],
        &["generate", "cograph", "10", "--seed", "5"],
        &["generate", "outerplanar", "9", "--seed", "5"],
        &["generate", "corner", "2", "3", "1", "2"],
    ] {
        let a = run(args, None);
        assert!(a.status.success());
        assert_eq!(a.stdout, run(args, None).stdout);
    }
    let a = run(&["generate", "ktree", "12", "3", "--seed", "5"], None);
    let b = run(&["generate", "ktree", "12", "3", "--seed", "6"], None);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn search_ratio_small_run() {
    let o = run(
        &[
            "search-ratio",
            "--max-n",
            "7",
            "--samples",
            "12",
            "--seed",
            "1",
        ],
        None,
    );
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("samples=12\n"));
    assert!(text.contains("violations=0\n"));
    assert_eq!(
        text,
        stdout(&run(
            &[
                "search-ratio",
                "--max-n",
                "7",
                "--samples",
                "12",
                "--seed",
                "1"
            ],
            None
        ))
    );
}

#[test]
fn solve_modes_agree() {
    let gen = run(&["generate", "exp-sep", "5"], None);
    let g = stdout(&gen);
    let a = run(&["solve"], Some(&g));
    let b = run(&["solve", "--prune", "none"], Some(&g));
    let c = run(&["solve", "--tw-mode", "heuristic"], Some(&g));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}
