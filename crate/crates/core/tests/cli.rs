use std::path::PathBuf;
use std::process::{Command, Output};

fn cyk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixture(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cyk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn svect_on_cp2_is_zero() {
    let o = cyk(&["cyk", "builtin:svect", "builtin:CP2"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "value = 0"), "{}", stdout(&o));
}

#[test]
fn classify_k3() {
    let o = cyk(&["classify", "--chi", "24", "--sigma", "-16", "--spin", "--stab", "s2s2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 * K3");
}

#[test]
fn semion_gauss_sum() {
    let o = cyk(&["gauss", "builtin:semion"]);
    let out = stdout(&o);
    assert!(out.contains("order = 4\n"));
    assert!(out.contains("tau+ = 1 + z\n"), "{out}");
    assert!(out.contains("has_fermion = false\n"));
}

#[test]
fn category_file() {
    let path = fixture("semion.cat", "kind = pointed\norder = 4\ngroup = 2\ntheta.0 = 1\ntheta.1 = z\n");
    let o = cyk(&["gauss", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("tau+ = 1 + z\n"));
}

#[test]
fn exit_codes() {
    let bad = fixture("asym.m", "kind = matrix\nn = 2\n0 1\n2 0\n");
    let o = cyk(&["cyk", "builtin:svect", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[E-INVARIANT]"), "{}", stderr(&o));

    let garbage = fixture("garbage.cat", "kind = pointed\norder = four\n");
    let o = cyk(&["gauss", garbage.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("E-PARSE"));

    let o = cyk(&["classify", "--chi", "3", "--sigma", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[E-PARITY]"));

    let o = cyk(&["gauss", "/nonexistent/file.cat"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[E-IO]"));
}

#[test]
fn output_is_deterministic() {
    let args = ["generators", "builtin:toric"];
    let a = cyk(&args);
    let b = cyk(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn slide_output_reparses_to_the_same_value() {
    let o = cyk(&["slide", "builtin:S2xS2", "0", "1", "--sign", "-1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let slid = fixture("slid.man", &stdout(&o));
    let before = cyk(&["cyk", "builtin:tl(3)", "builtin:S2xS2"]);
    let after = cyk(&["cyk", "builtin:tl(3)", slid.to_str().unwrap(), "--width-cap", "32"]);
    assert!(after.status.success(), "{}", stderr(&after));
    assert_eq!(stdout(&before), stdout(&after));

    let again = cyk(&["slide", slid.to_str().unwrap(), "1", "0"]);
    assert!(again.status.success());
}

#[test]
fn closed_form_matches_state_sum() {
    let state = cyk(&["cyk", "builtin:semion", "builtin:K3"]);
    let closed = cyk(&["closed-form", "builtin:semion", "--manifold", "builtin:K3"]);
    assert!(closed.status.success(), "{}", stderr(&closed));
    assert_eq!(stdout(&state), stdout(&closed));
}

#[test]
fn frobenius_report() {
    let path = fixture(
        "z2.alg",
        "order = 1\nbasis = e, x\nm.e.e = 1, 0\nm.e.x = 0, 1\nm.x.e = 0, 1\nm.x.x = 1, 0\nunit = 1, 0\ncounit = 1, 0\n",
    );
    let o = cyk(&["frobenius", path.to_str().unwrap()]);
    let out = stdout(&o);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(out.contains("semisimple = true\n"));
    assert!(out.contains("indecomposables = 2\n"));

    let dual = fixture(
        "dual.alg",
        "order = 1\nbasis = e, x\nm.e.e = 1, 0\nm.e.x = 0, 1\nm.x.e = 0, 1\nunit = 1, 0\ncounit = 0, 1\n",
    );
    let o = cyk(&["frobenius", dual.to_str().unwrap()]);
    assert!(stdout(&o).contains("semisimple = false\n"), "{}", stdout(&o));
}

#[test]
fn selftest_single_criterion() {
    let o = cyk(&["selftest", "--only", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("criterion  1 PASS"));
}
