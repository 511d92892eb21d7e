//! End-to-end tests of the `ovals` binary: exit codes, output formats,
//! and agreement with the library API.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

use ovals::{analyze, parse_curve, report_json};

fn ovals_bin(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ovals"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn curve_file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

const ASTROID5: &str = "a0 5\nh 2 0 1\n";
const DELTOID8: &str = "a0 8\nh 3 0 1\n";
const NONCONVEX: &str = "a0 1\nh 2 1 0\n";

#[test]
fn check_accepts_convex_curve() {
    let dir = TempDir::new().unwrap();
    curve_file(dir.path(), "a.curve", ASTROID5);
    let out = ovals_bin(&["check", "a.curve"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("min(p + p'')"), "{text}");
    assert!(text.contains("constant width: false"), "{text}");
}

#[test]
fn check_rejects_nonconvex_curve_with_exit_3() {
    let dir = TempDir::new().unwrap();
    curve_file(dir.path(), "bad.curve", NONCONVEX);
    let out = ovals_bin(&["check", "bad.curve"], dir.path());
    assert_eq!(out.status.code(), Some(3), "{out:?}");
    // min(1 − 3cos 2φ) = −2: the printed minimum must be negative.
    assert!(
        stdout(&out).contains("min(p + p'') = -2"),
        "{}",
        stdout(&out)
    );
    assert!(stderr(&out).contains("not convex"), "{}", stderr(&out));
}

#[test]
fn check_marks_degenerate_curves() {
    let dir = TempDir::new().unwrap();
    curve_file(dir.path(), "d.curve", DELTOID8);
    let out = ovals_bin(&["check", "d.curve"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout(&out).contains("degenerate"), "{}", stdout(&out));
    assert!(
        stdout(&out).contains("constant width: true"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn report_json_equals_library_analysis() {
    let dir = TempDir::new().unwrap();
    curve_file(dir.path(), "a.curve", ASTROID5);
    let out = ovals_bin(&["report", "a.curve", "--json"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    let report = analyze(&parse_curve(ASTROID5).unwrap(), 1e-9).unwrap();
    assert_eq!(stdout(&out), report_json(&report));
}

#[test]
fn report_human_summary_names_the_equality_class() {
    let dir = TempDir::new().unwrap();
    curve_file(dir.path(), "a.curve", ASTROID5);
    let out = ovals_bin(&["report", "a.curve"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("classification: astroid_parallel"), "{text}");
    assert!(text.contains("delta"), "{text}");
    assert!(text.contains("lower_groemer"), "{text}");
}

#[test]
fn report_degenerate_curve_requires_opt_in() {
    let dir = TempDir::new().unwrap();
    curve_file(dir.path(), "d.curve", DELTOID8);

    let refused = ovals_bin(&["report", "d.curve"], dir.path());
    assert_eq!(refused.status.code(), Some(3), "{refused:?}");
    assert!(
        stderr(&refused).contains("--allow-degenerate"),
        "{}",
        stderr(&refused)
    );

    let accepted = ovals_bin(
        &["report", "d.curve", "--allow-degenerate", "--json"],
        dir.path(),
    );
    assert_eq!(accepted.status.code(), Some(0), "{accepted:?}");
    let value: serde_json::Value = serde_json::from_str(&stdout(&accepted)).unwrap();
    assert_eq!(value["constant_width"], true);
    assert_eq!(value["classification"], "hypocycloid3_parallel");
}

#[test]
fn report_nonconvex_exits_3() {
    let dir = TempDir::new().unwrap();
    curve_file(dir.path(), "bad.curve", NONCONVEX);
    let out = ovals_bin(&["report", "bad.curve", "--allow-degenerate"], dir.path());
    assert_eq!(out.status.code(), Some(3), "{out:?}");
}

#[test]
fn unreadable_or_malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let missing = ovals_bin(&["report", "nope.curve"], dir.path());
    assert_eq!(missing.status.code(), Some(2), "{missing:?}");

    curve_file(dir.path(), "dup.curve", "a0 1\nh 2 0 1\nh 2 1 0\n");
    let dup = ovals_bin(&["check", "dup.curve"], dir.path());
    assert_eq!(dup.status.code(), Some(2), "{dup:?}");
    assert!(stderr(&dup).contains("line 3"), "{}", stderr(&dup));
}

#[test]
fn render_writes_the_svg_document() {
    let dir = TempDir::new().unwrap();
    curve_file(dir.path(), "d.curve", DELTOID8);
    let out = ovals_bin(
        &["render", "d.curve", "--out", "fig.svg", "--samples", "256"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let svg = fs::read_to_string(dir.path().join("fig.svg")).unwrap();
    assert!(svg.starts_with("<svg"), "{}", &svg[..60]);
    assert_eq!(svg.matches("<polygon").count(), 3);
}

#[test]
fn render_layer_selection_and_validation() {
    let dir = TempDir::new().unwrap();
    curve_file(dir.path(), "a.curve", ASTROID5);

    let two = ovals_bin(
        &[
            "render",
            "a.curve",
            "--out",
            "two.svg",
            "--layers",
            "boundary,pedal",
        ],
        dir.path(),
    );
    assert_eq!(two.status.code(), Some(0), "{two:?}");
    let svg = fs::read_to_string(dir.path().join("two.svg")).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 2);
    assert!(svg.contains("id=\"pedal\""));

    let bad_layer = ovals_bin(
        &[
            "render",
            "a.curve",
            "--out",
            "x.svg",
            "--layers",
            "boundary,shadow",
        ],
        dir.path(),
    );
    assert_eq!(bad_layer.status.code(), Some(5), "{bad_layer:?}");

    let sparse = ovals_bin(
        &["render", "a.curve", "--out", "x.svg", "--samples", "8"],
        dir.path(),
    );
    assert_eq!(sparse.status.code(), Some(5), "{sparse:?}");

    let bad_distance = ovals_bin(
        &["render", "a.curve", "--out", "x.svg", "--parallel", "wide"],
        dir.path(),
    );
    assert_eq!(bad_distance.status.code(), Some(5), "{bad_distance:?}");

    let bad_out = ovals_bin(
        &["render", "a.curve", "--out", "no/such/dir/x.svg"],
        dir.path(),
    );
    assert_eq!(bad_out.status.code(), Some(2), "{bad_out:?}");
}

#[test]
fn sweep_passes_and_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let args = ["sweep", "--count", "64", "--degree", "6", "--seed", "11"];
    let first = ovals_bin(&args, dir.path());
    assert_eq!(first.status.code(), Some(0), "{first:?}");
    assert!(
        stdout(&first).contains("no violations"),
        "{}",
        stdout(&first)
    );
    assert!(stdout(&first).contains("min slack"), "{}", stdout(&first));

    let second = ovals_bin(&args, dir.path());
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn sweep_constant_width_reports_cw_bounds() {
    let dir = TempDir::new().unwrap();
    let out = ovals_bin(
        &[
            "sweep",
            "--count",
            "32",
            "--degree",
            "7",
            "--seed",
            "5",
            "--constant-width",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert!(stdout(&out).contains("lower_cw"), "{}", stdout(&out));
}

#[test]
fn sweep_validates_numeric_flags() {
    let dir = TempDir::new().unwrap();
    let out = ovals_bin(
        &[
            "sweep",
            "--count",
            "1",
            "--degree",
            "2",
            "--seed",
            "0",
            "--min-radius",
            "-1",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(5), "{out:?}");
}

#[test]
fn canon_prints_the_normal_form() {
    let dir = TempDir::new().unwrap();
    curve_file(dir.path(), "a.curve", ASTROID5);
    let out = ovals_bin(&["canon", "a.curve"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = stdout(&out);
    assert!(text.contains("n = 2"), "{text}");
    assert!(text.contains("amplitude = 1"), "{text}");
    assert!(text.contains("phi0 = 0.7853981633974483"), "{text}");

    curve_file(dir.path(), "mixed.curve", "a0 1\nh 2 0 0.1\nh 3 0.1 0\n");
    let rejected = ovals_bin(&["canon", "mixed.curve"], dir.path());
    assert_eq!(rejected.status.code(), Some(5), "{rejected:?}");
}

#[test]
fn help_and_argument_errors() {
    let dir = TempDir::new().unwrap();
    assert_eq!(ovals_bin(&["--help"], dir.path()).status.code(), Some(0));
    assert_eq!(
        ovals_bin(&["report", "--help"], dir.path()).status.code(),
        Some(0)
    );
    assert_eq!(
        ovals_bin(&["frobnicate"], dir.path()).status.code(),
        Some(5)
    );
    // sweep requires count/degree/seed
    assert_eq!(ovals_bin(&["sweep"], dir.path()).status.code(), Some(5));
}
