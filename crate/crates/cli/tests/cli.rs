use std::path::Path;
use std::process::{Command, Output};

const TRI: &str = "\
# the three-point space with two crossing partitions
space TRI
points 0 1 2
gen 0 | 1 2
gen 0 1 | 2

space DSC3
points 0 1 2
gen 0 | 1 | 2

map u TRI -> DSC3
0 -> 0
1 -> 1
2 -> 1

map v DSC3 -> TRI
0 -> 0
1 -> 1
2 -> 2
";

fn nacomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nacomp")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn with_file(text: &str, f: impl FnOnce(&str)) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("input.nas");
    std::fs::write(&path, text).unwrap();
    f(path.to_str().unwrap());
}

#[test]
fn closure_reports_witness() {
    with_file(TRI, |file| {
        let out = nacomp(&["closure", file, "TRI", "--set", "0,2"]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        assert!(text.starts_with("closure: {0,2} (closed)\n"), "{text}");
        assert!(text.contains("excluded 1: 0 1 | 2 and 0 | 1 2"), "{text}");
    });
}

#[test]
fn complete_counts_points_and_emits_parseable_output() {
    with_file(TRI, |file| {
        let out = nacomp(&["complete", file, "TRI"]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).starts_with("completion has 4 points; 1 new point\n"));

        let out = nacomp(&["complete", file, "TRI", "--emit"]);
        let text = stdout(&out);
        let nas = &text[text.find("space TRI\n").unwrap()..];
        let doc = nacomp::format::parse(nas).unwrap();
        assert_eq!(doc.space("TRI_hat").unwrap().size(), 4);
        assert!(doc.map("j").unwrap().map.is_embedding());
    });
}

#[test]
fn extend_prints_map_or_refuses_incomplete_codomain() {
    with_file(TRI, |file| {
        let out = nacomp(&["extend", file, "u"]);
        assert_eq!(out.status.code(), Some(0));
        let doc = nacomp::format::parse(&stdout(&out)).unwrap();
        assert_eq!(doc.map("u_hat").unwrap().map.table(), &[0, 1, 1, 0]);

        let out = nacomp(&["extend", file, "v"]);
        assert_eq!(out.status.code(), Some(1));
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).contains("not complete"));
    });
}

#[test]
fn check_and_cauchy() {
    with_file(TRI, |file| {
        let text = stdout(&nacomp(&["check", file, "TRI"]));
        assert!(text.contains("t0: true\n"));
        assert!(text.contains("complete: false"));
        assert!(text.contains("intersection-closed: false"));

        let out = nacomp(&["cauchy", file, "DSC3"]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).starts_with("3 minimal Cauchy filters\n"));
        assert_eq!(nacomp(&["cauchy", file, "TRI"]).status.code(), Some(1));
    });
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(nacomp(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(nacomp(&["check", "/nonexistent/file.nas", "X"]).status.code(), Some(2));
    with_file("space X\npoints a b\ngen a | c\n", |file| {
        let out = nacomp(&["check", file, "X"]);
        assert_eq!(out.status.code(), Some(2));
        assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    });
    with_file(TRI, |file| {
        assert_eq!(nacomp(&["check", file, "NOPE"]).status.code(), Some(2));
        assert_eq!(nacomp(&["closure", file, "TRI", "--set", "7"]).status.code(), Some(2));
    });
    assert_eq!(nacomp(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(
        nacomp(&["verify", "--max-size", "2", "--exhaustive-to", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_is_deterministic_and_passes() {
    let args = ["verify", "--max-size", "3", "--exhaustive-to", "3", "--seed", "42"];
    let first = nacomp(&args);
    let second = nacomp(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert_eq!(text.lines().count(), 10);
    assert!(text.ends_with("all 9 suites passed\n"));
}

#[test]
fn verify_runs_selected_suites() {
    let out = nacomp(&[
        "verify",
        "--suite",
        "completion,cauchy",
        "--max-size",
        "4",
        "--samples",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("completion "));
    assert!(text.contains("\ncauchy "));
}

#[test]
fn emit_round_trip_is_idempotent() {
    let doc = nacomp::format::parse(TRI).unwrap();
    let once = nacomp::format::emit(&doc);
    assert_eq!(nacomp::format::emit(&nacomp::format::parse(&once).unwrap()), once);
    assert!(Path::new(env!("CARGO_BIN_EXE_nacomp")).exists());
}
