use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn crcs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crcs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_on(args: &[&str], file: &str) -> Output {
    let path = data(file);
    let mut all = args.to_vec();
    all.push(path.to_str().unwrap());
    crcs(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn oracle_witness_on_example() {
    let o = run_on(&["solve", "--solver", "oracle", "--witness"], "example.crcs");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "YES");
    assert_eq!(lines.len(), 4);
    assert!(lines[1..].iter().all(|l| l.starts_with("swap ")));
}

#[test]
fn auto_solver_is_decision_only_off_the_oracle() {
    let o = run_on(&["solve", "--witness"], "star_kernel.crcs");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "YES\n");
    assert!(stderr(&o).contains("decision-only"));
}

#[test]
fn invalid_instance_is_no() {
    let o = run_on(&["solve", "--solver", "oracle"], "invalid.crcs");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NO\n");
}

#[test]
fn forced_path_solver_on_non_path_fails() {
    let o = run_on(&["solve", "--solver", "path"], "example.crcs");
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
}

#[test]
fn tiny_budget_overflows() {
    let o = run_on(&["solve", "--solver", "oracle", "--budget", "2"], "example.crcs");
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "OVERFLOW\n");
}

#[test]
fn explicit_cotree() {
    let cotree = data("star.cotree");
    let o = run_on(&["solve", "--cotree", cotree.to_str().unwrap()], "star_frozen.crcs");
    assert_eq!(o.status.code(), Some(1));
    let wrong = run_on(&["solve", "--cotree", cotree.to_str().unwrap()], "example.crcs");
    assert_eq!(wrong.status.code(), Some(2));
}

#[test]
fn syntax_error_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.crcs");
    std::fs::write(&bad, "crcs 1\nk three\n").unwrap();
    let o = crcs(&["solve", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("2:3"), "{}", stderr(&o));
}

#[test]
fn kernelize_star() {
    let o = run_on(&["kernelize"], "star_kernel.crcs");
    assert_eq!(o.status.code(), Some(0));
    let kernel = stdout(&o);
    assert!(kernel.contains("n 3\n"));
    assert_eq!(stderr(&o), "removed 3\n");

    // a second pass changes nothing
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kernel.crcs");
    std::fs::write(&path, &kernel).unwrap();
    let again = crcs(&["kernelize", path.to_str().unwrap()]);
    assert_eq!(stdout(&again), kernel);
    assert_eq!(stderr(&again), "");
}

#[test]
fn kernelize_frozen_pair_is_no() {
    let o = run_on(&["kernelize"], "star_frozen.crcs");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NO\n");
}

#[test]
fn kernelize_non_split_fails() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = dir.path().join("c4.crcs");
    std::fs::write(&c4, "crcs 1\nk 2\nn 4\nedge 0 1\nedge 1 2\nedge 2 3\nedge 0 3\nfs 1 2 1 2\nft 1 2 1 2\n").unwrap();
    let o = crcs(&["kernelize", c4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reductions_are_deterministic_and_reparse() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, file) in [
        ("ts-split", "split.ts"),
        ("ts-bipartite", "bipartite.ts"),
        ("svr-chordal", "triangle.svr"),
        ("ncl", "machine.ncl"),
    ] {
        let layout = dir.path().join(format!("{kind}.layout"));
        let a = run_on(&["reduce", kind, "--layout", layout.to_str().unwrap()], file);
        let b = run_on(&["reduce", kind], file);
        assert_eq!(a.status.code(), Some(0), "{kind}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{kind}");
        crcs::format::parse_crcs(&stdout(&a)).unwrap();
        let sidecar = std::fs::read_to_string(&layout).unwrap();
        assert!(sidecar.lines().all(|l| l.starts_with("role ") || l.starts_with("port ")));
    }
}

#[test]
fn reduce_rejects_bad_input() {
    assert_eq!(run_on(&["reduce", "ncl"], "bad_degree.ncl").status.code(), Some(2));
    assert_eq!(run_on(&["reduce", "ts-split"], "example.crcs").status.code(), Some(2));
}

#[test]
fn gen_is_reproducible() {
    let a = crcs(&["gen", "path", "6", "--k", "3", "--seed", "7"]);
    let b = crcs(&["gen", "path", "6", "--k", "3", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let inst = crcs::format::parse_crcs(&stdout(&a)).unwrap();
    assert_eq!(inst.graph, crcs::Graph::path(6));
    assert!(crcs::is_valid(&inst));
}

#[test]
fn gen_cograph_and_split_are_in_class() {
    let o = crcs(&["gen", "cograph", "--n", "8", "--seed", "1"]);
    let inst = crcs::format::parse_crcs(&stdout(&o)).unwrap();
    crcs::cograph::build_cotree(&inst.graph).unwrap();
    let o = crcs(&["gen", "split", "--n", "10"]);
    let inst = crcs::format::parse_crcs(&stdout(&o)).unwrap();
    crcs::split::split_partition(&inst.graph).unwrap();
}

#[test]
fn gen_infeasible_k_fails() {
    let o = crcs(&["gen", "path", "4", "--k", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dot_export() {
    let o = run_on(&["dot"], "example.crcs");
    assert!(stdout(&o).starts_with("graph crcs {"));
}
