use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn mwb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mwb")).args(args).output().expect("mwb runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mwb-cli-tests-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn fano_info() {
    let o = mwb(&["matroid", "info", "--catalog", "F7"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    for line in ["elements: 7", "rank: 3", "bases: 28", "connectivity: 3-connected"] {
        assert!(s.contains(line), "{s}");
    }
}

#[test]
fn whirl_branch_width() {
    let o = mwb(&["bw", "--catalog", "whirl3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("branch-width: 3"));
}

#[test]
fn u24_is_unique_over_gf4() {
    let o = mwb(&["reps", "--catalog", "U24", "--field", "gf4", "--level", "algebraic"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("classes: 1"));
}

#[test]
fn negative_answers_exit_with_one() {
    let o = mwb(&["reps", "--catalog", "F7", "--field", "gf3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("classes: 0"));
    let o = mwb(&["stab", "--catalog", "U25", "--field", "gf5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("stabilizes: no"));
    assert!(stdout(&o).contains("pmatrix witness-2 over gf5"));
}

#[test]
fn usage_and_parse_errors_exit_with_two() {
    assert_eq!(mwb(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(mwb(&["bw"]).status.code(), Some(2));
    assert_eq!(mwb(&["bw", "--catalog", "K33"]).status.code(), Some(2));
    let bad = scratch("bad-exchange.txt", "matroid bad\nground a b c d\nrank 2\nbases ab cd\n");
    let o = mwb(&["matroid", "info", "--file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exchange"));
    let garbled = scratch("garbled.txt", "pmatrix m over gf5\nrows a\ncols b\na: 7x\n");
    let o = mwb(&["matrix", "show", "--file", garbled.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
}

#[test]
fn non_unit_entry_is_flagged() {
    let f = scratch("two.txt", "pmatrix two over regular\nrows a b\ncols c d\na: 1 1\nb: 1 2\n");
    let o = mwb(&["matrix", "check", "--file", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("non-unit-entries: b,d=2"), "{}", stdout(&o));
}

#[test]
fn text_forms_round_trip() {
    let m = stdout(&mwb(&["matroid", "show", "--catalog", "P7"]));
    let f = scratch("p7.txt", &m);
    assert_eq!(stdout(&mwb(&["matroid", "show", "--file", f.to_str().unwrap()])), m);
    let a = stdout(&mwb(&["matrix", "show", "--catalog", "whirl3"]));
    let f = scratch("w3.txt", &a);
    assert_eq!(stdout(&mwb(&["matrix", "show", "--file", f.to_str().unwrap()])), a);
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let args = ["pipeline", "--catalog", "F7-", "--field", "nearregular", "--bound", "2"];
    let one = mwb(&[&["--jobs", "1"], &args[..]].concat());
    let four = mwb(&[&["--jobs", "4"], &args[..]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert!(stdout(&one).contains("outcome: certified"));
    let f1 = mwb(&["--jobs", "1", "fragility", "--catalog", "whirl4"]);
    let f4 = mwb(&["--jobs", "4", "fragility", "--catalog", "whirl4"]);
    assert_eq!(f1.stdout, f4.stdout);
}

#[test]
fn blocking_sequence_and_separations() {
    // The lines of the Fano plane are its 3-separations.
    let o = mwb(&["seps", "--catalog", "F7", "--k", "3"]);
    assert!(stdout(&o).contains("count: 7"));
    assert!(stdout(&mwb(&["seps", "--catalog", "F7"])).contains("count: 0"));
    let o = mwb(&["blockseq", "--catalog", "whirl3", "--basis", "abc", "--z1", "ad", "--z2", "be"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("outcome: blocking-sequence\nsequence: f c\nchecks: 2 2 2"), "{}", stdout(&o));
    let o = mwb(&["blockseq", "--catalog", "whirl3", "--basis", "abc", "--z1", "ab", "--z2", "de"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn selftest_single_criterion() {
    let o = mwb(&["selftest", "--criterion", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS criterion  1"));
    assert_eq!(mwb(&["selftest", "--criterion", "12"]).status.code(), Some(2));
}
