use std::fs;
use std::path::PathBuf;

use xmodlink::cli::run_captured;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_captured(std::iter::once("xmodlink").chain(args.iter().copied()))
}

#[test]
fn builtins_lists_every_family() {
    let (code, out, _) = run(&["builtins"]);
    assert_eq!(code, 0);
    for key in ["group:S<n>", "rack:dihedral:<n>", "eisermann:<group>:x=<elt>", "lifted:gl25:x=<matrix>", "diagram:trefoil+string"] {
        assert!(out.contains(key), "missing {key}");
    }
}

#[test]
fn check_pair_passes_and_fails_with_exit_codes() {
    let (code, out, _) = run(&["check-pair", "--builtin", "eisermann:S4:x=(12)"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("passed\n"));

    let (code, out, _) = run(&["check-pair", "--pair", &data("cyclic3.pair")]);
    assert_eq!(code, 1);
    assert!(out.contains("R1: FAILED (3 violations)"));
    let (code, _, _) = run(&["check-pair", "--pair", &data("cyclic3.pair"), "--framed"]);
    assert_eq!(code, 0);

    // the trivial pair on a group file
    let (code, out, _) = run(&["check-pair", "--group", &data("s3.grp")]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn moves_summaries() {
    let (code, out, _) = run(&["moves", "--pair", &data("dihedral3.pair")]);
    assert_eq!(code, 0);
    assert!(out.contains("15/15 relations hold; framed set 15/15"), "{out}");

    let (code, out, _) = run(&["moves", "--builtin", "rack:cyclic:3"]);
    assert_eq!(code, 1);
    assert!(out.contains("R1 FAILED (witness X=0), 13/15 hold; framed set 15/15"), "{out}");
    let (code, _, _) = run(&["moves", "--builtin", "rack:cyclic:3", "--framed"]);
    assert_eq!(code, 0);
}

#[test]
fn invariant_from_files_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("row.tsv");
    let args = ["invariant", "--pair", &data("eisermann_s3_123.pair"), "--diagram", &data("trefoil_plus.tng"), "--top", "(12)"];
    let (code, out, err) = run(&[&args[..], &["--output", out_path.to_str().unwrap()]].concat());
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("source: (12)\ntarget: "));
    assert_eq!(fs::read_to_string(&out_path).unwrap(), out);

    let (_, single, _) = run(&[&args[..], &["--bottom", "(12)"]].concat());
    assert!(single.starts_with("source: (12)\ntarget: (12)\n"));

    let (code, out, _) = run(&["invariant", "--builtin", "rack:dihedral:3", "--diagram", &data("trefoil_closed.tng")]);
    assert_eq!(code, 0);
    assert_eq!(out, "source: \ntarget: \n9\t0\n");
}

#[test]
fn worker_count_does_not_change_output() {
    let base = ["invariant", "--builtin", "eisermann:S4:x=(1234)", "--builtin", "diagram:figure8-string", "--top", "(12)"];
    let (_, one, _) = run(&[&base[..], &["--workers", "1"]].concat());
    let (_, eight, _) = run(&[&base[..], &["--workers", "8"]].concat());
    assert!(!one.is_empty());
    assert_eq!(one, eight);
}

#[test]
fn rack_count_verb() {
    let (code, out, _) = run(&["rack-count", "--rack", &data("d3.rck"), "--diagram", &data("trefoil_closed.tng")]);
    assert_eq!(code, 0);
    assert_eq!(out, "9\t(empty)\n");
    let (_, out, _) = run(&["rack-count", "--builtin", "rack:dihedral:3", "--builtin", "diagram:trefoil+string", "--top", "0", "--bottom", "0"]);
    assert_eq!(out, "3\n");
}

#[test]
fn table_one_verb() {
    let (code, out, _) = run(&["tables", "--which", "eisermann-s5"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("K+  x=(12345)         id + 5·(15432)"));
    assert!(out.contains("14 of 14 cells agree"));
}

#[test]
fn errors_exit_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.tng");
    fs::write(&bad, "top: v\nid+\nx+\n").unwrap();
    let (code, _, err) = run(&["invariant", "--builtin", "rack:dihedral:3", "--diagram", bad.to_str().unwrap(), "--top", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("bad.tng") && err.contains("line 3"), "{err}");

    let grp = dir.path().join("g.grp");
    fs::write(&grp, "group Z2 2\nelements 0 1\n0 1\n1 7\n").unwrap();
    let (code, _, err) = run(&["check-pair", "--group", grp.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("g.grp:4: unknown element `7`"), "{err}");

    let (code, _, err) = run(&["check-pair", "--pair", "/nonexistent/p.pair"]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/p.pair"));

    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.contains("unrecognized subcommand"));

    let (code, _, err) = run(&["check-pair", "--builtin", "eisermann:S9:x=id"]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = run(&["invariant", "--builtin", "rack:dihedral:3"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["tables", "--which", "table4"]);
    assert_eq!(code, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("check-pair"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_xmodlink");
    let ok = std::process::Command::new(bin).args(["check-pair", "--builtin", "rack:dihedral:4"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let fail = std::process::Command::new(bin).args(["check-pair", "--builtin", "rack:cyclic:4"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let usage = std::process::Command::new(bin).args(["moves"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&usage.stderr).starts_with("error: no pair given"));
}
