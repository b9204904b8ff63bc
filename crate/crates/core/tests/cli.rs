use std::path::Path;
use std::process::{Command, Output};

fn hitwork(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hitwork"))
        .env("HITWORK_CACHE", cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn basis_listing() {
    let dir = tempfile::tempdir().unwrap();
    let o = hitwork(dir.path(), &["basis", "1", "7"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "dim 1\n(7)\n");
    let o = hitwork(dir.path(), &["basis", "4", "8"]);
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("dim 55"));
    assert_eq!(out.lines().count(), 56);
}

#[test]
fn basis_verify_file() {
    let dir = tempfile::tempdir().unwrap();
    let list = dir.path().join("list.txt");
    std::fs::write(&list, "# the seven families\nfamily A\nfamily B\nfamily C\nfamily D\nfamily E\nfamily F\n(4,2,1,1) (4,1,2,1) (1,4,2,1)\n").unwrap();
    let o = hitwork(dir.path(), &["basis", "4", "8", "--verify", list.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("VERIFIED basis of dim 55\n"));

    std::fs::write(&list, "family A\n").unwrap();
    let o = hitwork(dir.path(), &["basis", "4", "8", "--verify", list.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    std::fs::write(&list, "(7,1,0,0)\n(7,1\n").unwrap();
    let o = hitwork(dir.path(), &["basis", "4", "8", "--verify", list.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn invariants_and_hit() {
    let dir = tempfile::tempdir().unwrap();
    for (k, d, expect) in [("4", "8", "dim 0\n"), ("1", "1", "dim 1\n(1)\n")] {
        assert_eq!(stdout(&hitwork(dir.path(), &["invariants", k, d])), expect);
    }
    let o = hitwork(dir.path(), &["hit", "2", "(5,3)"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("NOT-HIT\n"));
    let o = hitwork(dir.path(), &["hit", "4", "(4,3,1,0)+(2,5,1,0)"]);
    assert!(stdout(&o).starts_with("HIT\nwitness: "));
    assert_eq!(stdout(&hitwork(dir.path(), &["hit", "1", "(2)"])), "HIT\nwitness: Sq^1(1)\n");
    let o = hitwork(dir.path(), &["hit", "2", "(1,0)+(1,1)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_output() {
    let dir = tempfile::tempdir().unwrap();
    let o = hitwork(dir.path(), &["--json", "hit", "4", "(2,2,2,2)"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "hit");
    assert_eq!(v["verdicts"]["hit"], true);
    assert!(v["witness"].as_str().unwrap().contains("Sq^"));
    assert!(v.get("inputs").is_some() && v.get("dims").is_some());
}

#[test]
fn kameko_one_step() {
    let dir = tempfile::tempdir().unwrap();
    let o = hitwork(dir.path(), &["kameko", "4", "1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("P4 degree 20 ambient = 1771"));
    assert!(out.contains("even-hypothesis OK"));
    assert!(out.contains("iso 55×55"));
}

#[test]
fn kameko_failing_hypothesis_exits_nonzero() {
    // Q_4(8) -> Q_4(2): monomials with an even exponent survive in degree 8
    let dir = tempfile::tempdir().unwrap();
    let o = hitwork(dir.path(), &["kameko", "4", "1", "--base", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("even-hypothesis FAILED"));
}

#[test]
fn chi_commands() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(stdout(&hitwork(dir.path(), &["chi", "9", "2", "(1,1)"])), "0\n");
    assert_eq!(stdout(&hitwork(dir.path(), &["chi", "3", "1", "(1)"])), "(4)\n");
    assert_eq!(stdout(&hitwork(dir.path(), &["chi", "0"])), "1\n");
    assert_eq!(hitwork(dir.path(), &["chi", "65"]).status.code(), Some(2));
}

#[test]
fn lattice_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("out.dot");
    let o = hitwork(dir.path(), &["lattice", "--dot", dot.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.ends_with("11 submodules verified; 24 = 4 ⊕ 20; 30′ ∩ 35 = 24\n"));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains("(") && !l.contains("->")).count(), 11);
    assert_eq!(stdout(&hitwork(dir.path(), &["lattice"])), out);
}

#[test]
fn lattice_mismatch_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let gens = dir.path().join("g.txt");
    let mut text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/lattice_q4_8.txt")).unwrap();
    text = text.replace("25:\nfamily A\nfamily C\n(4,2,1,1)+(4,1,2,1)+(1,4,2,1)", "25:\nfamily A\nfamily C\nfamily F");
    std::fs::write(&gens, text).unwrap();
    let o = hitwork(dir.path(), &["lattice", "--generators", gens.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAILED: submodule 25"));
}

#[test]
fn degree_cap_refusal() {
    let dir = tempfile::tempdir().unwrap();
    let o = hitwork(dir.path(), &["basis", "2", "129"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
    let o = hitwork(dir.path(), &["--max-degree", "10", "kameko", "4", "1"]);
    assert_eq!(o.status.code(), Some(2));
}
