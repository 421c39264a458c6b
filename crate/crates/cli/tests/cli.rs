use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

const KINK: &str = "word:\ncupr\nid cupr id\nxp id^2\nid capl id\ncapl\n";
const UNKNOT: &str = "word:\ncupr\ncapl\n";
const HOPF: &str = "word:\ncupr\nid^2 cupr\nid xp id\nid xp id\nid^2 capl\ncapl\n";

struct Files(TempDir);

impl Files {
    fn new() -> Files {
        Files(tempfile::tempdir().unwrap())
    }

    fn add(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

fn sl21(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl21")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn empty_link_gives_one() {
    let f = Files::new();
    let l = f.add("empty.link", "word:\n");
    let o = sl21(&["invariant", path(&l)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "1\napprox 1.0000000000 + 0.0000000000i\n");
}

#[test]
fn kink_gives_one_in_every_format() {
    let f = Files::new();
    let l = f.add("kink.link", KINK);
    assert_eq!(stdout(&sl21(&["invariant", path(&l), "--format", "exact"])), "1\n");
    assert_eq!(stdout(&sl21(&["--format", "decimal", "--precision", "3", "invariant", path(&l)])), "approx 1.000 + 0.000i\n");
}

#[test]
fn zero_framed_unknot_with_a_third_color_gives_zero() {
    let f = Files::new();
    let l = f.add("unknot.link", UNKNOT);
    let c = f.add("omega.col", "# a1\n1/3 0\n");
    let o = sl21(&["invariant", path(&l), path(&c), "--format", "exact"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn pd_input_is_detected() {
    let f = Files::new();
    let l = f.add("kink.pd", "PD[X[1,1,2,2]+]");
    let o = sl21(&["invariant", path(&l), "--format", "exact"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn inadmissible_coloring_exits_with_two() {
    let f = Files::new();
    let l = f.add("kink.link", KINK);
    let c = f.add("omega.col", "1/3 0\n");
    let o = sl21(&["invariant", path(&l), path(&c)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("inadmissible"), "{}", stderr(&o));
    let c2 = f.add("two.col", "0 0\n0 0\n");
    assert_eq!(sl21(&["invariant", path(&l), path(&c2)]).status.code(), Some(2));
}

#[test]
fn linkinfo_of_hopf_and_trefoil() {
    let f = Files::new();
    let h = f.add("hopf.link", HOPF);
    let o = sl21(&["linkinfo", path(&h)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("n=2\nlk=[[0,1],[1,0]]\nwrithes=[0,0]\n"), "{out}");
    assert!(out.contains("row 1: a2 = 0 mod Z^2"), "{out}");
    let t = f.add("trefoil.pd", "PD[X[1,5,2,4]+, X[3,1,4,6]+, X[5,3,6,2]+]");
    let out = stdout(&sl21(&["linkinfo", path(&t)]));
    assert!(out.starts_with("n=1\nlk=[[3]]\nwrithes=[3]\n"), "{out}");
}

#[test]
fn malformed_input_exits_with_one() {
    let f = Files::new();
    let bad = f.add("bad.link", "word: d\nid xq\n");
    let o = sl21(&["linkinfo", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2, column 4"), "{}", stderr(&o));
    let open = f.add("open.link", "word: d\n");
    assert_eq!(sl21(&["linkinfo", path(&open)]).status.code(), Some(1));
    let missing = f.0.path().join("missing.link");
    assert_eq!(sl21(&["linkinfo", path(&missing)]).status.code(), Some(1));
    let l = f.add("kink.link", KINK);
    let c = f.add("bad.col", "1/3\n");
    assert_eq!(sl21(&["invariant", path(&l), path(&c)]).status.code(), Some(1));
}

#[test]
fn unsupported_configuration_exits_with_four() {
    let f = Files::new();
    let l = f.add("empty.link", "word:\n");
    assert_eq!(sl21(&["--ell", "4", "invariant", path(&l)]).status.code(), Some(4));
    assert_eq!(sl21(&["verify", "--suite", "nope"]).status.code(), Some(4));
    // a color with denominator 3 does not fit the half-integer field
    let u = f.add("unknot.link", UNKNOT);
    let c = f.add("omega.col", "1/3 0\n");
    assert_eq!(sl21(&["--denominator", "2", "invariant", path(&u), path(&c)]).status.code(), Some(4));
}

#[test]
fn integral_suite_passes() {
    let o = sl21(&["verify", "--suite", "integral", "--threads", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("suite integral (ell=3): pass, 7778 checks\n"), "{}", stdout(&o));
}

#[test]
fn integral_dump_has_one_nonzero_entry() {
    let o = sl21(&["integral", "--format", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(2592 elements), nonzero entries: 1"), "{out}");
}

#[test]
fn output_is_deterministic() {
    let f = Files::new();
    // Hopf link with a kink on the first component
    let h = f.add("hopf.link", &HOPF.replacen("cupr\n", "cupr\nid cupr id\nxp id^2\nid capl id\n", 1));
    let a = sl21(&["invariant", path(&h)]);
    let b = sl21(&["invariant", path(&h)]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
}
