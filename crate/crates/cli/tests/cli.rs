use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn grprime(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grprime"))
        .args(args)
        .output()
        .expect("run grprime")
}

fn stdout(args: &[&str]) -> String {
    let out = grprime(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn d(name: &str) -> String {
    data(name).to_str().unwrap().to_string()
}

#[test]
fn prime_field() {
    assert_eq!(stdout(&["prime", &d("gf2.ring")]), "prime: YES\n");
}

#[test]
fn prime_ideal_of_zmod6() {
    assert_eq!(stdout(&["prime", &d("zmod6.ring"), "--ideal", "2"]), "ideal {0,2,4}: prime: YES\n");
    assert_eq!(stdout(&["prime", &d("zmod6.ring")]), "prime: NO\n");
}

#[test]
fn ideal_listing_is_canonical() {
    assert_eq!(
        stdout(&["ideals", &d("zmod6.ring")]),
        "ideals: 4\nideal {0}\nideal {0,3}\nideal {0,2,4}\nideal {0,1,2,3,4,5}\n"
    );
}

#[test]
fn classify_triangular() {
    assert_eq!(
        stdout(&["classify", &d("tri2.graded")]),
        "strongly: NO, symmetrically: NO, ideally: NO, nearly-eps: NO\n"
    );
}

#[test]
fn graded_prime_triangular() {
    let out = stdout(&["graded-prime", &d("tri2.graded")]);
    assert!(out.starts_with("graded prime: NO\n"), "{out}");
}

#[test]
fn correspondence_reports() {
    let tri = stdout(&["correspondence", &d("tri2.graded")]);
    assert!(tri.contains("identity-generated: PASS\n"), "{tri}");
    assert!(tri.contains("ideally-symmetric: skipped"), "{tri}");
    let grp = stdout(&["correspondence", &d("f2c2.graded")]);
    assert!(grp.contains("ideally-symmetric: PASS\n"), "{grp}");
    assert!(!grp.contains("FAIL"), "{grp}");
}

#[test]
fn leavitt_two_isolated_vertices() {
    assert_eq!(
        stdout(&["leavitt", &d("two_isolated.graph"), "--coeff", &d("gf2.ring")]),
        "MT-3: FAIL (v,w); prime: NO\n"
    );
    assert_eq!(
        stdout(&[
            "leavitt",
            &d("two_isolated.graph"),
            "--coeff",
            &d("gf2.ring"),
            "--orthogonality-depth",
            "3"
        ]),
        "MT-3: FAIL (v,w); prime: NO\northogonality (depth 3): PASS\n"
    );
}

#[test]
fn leavitt_rose() {
    assert_eq!(
        stdout(&["leavitt", &d("rose.graph"), "--coeff", &d("mat2.ring")]),
        "MT-3: PASS; prime: YES\n"
    );
    assert_eq!(
        stdout(&["leavitt", &d("rose.graph"), "--coeff", &d("zmod6.ring")]),
        "MT-3: PASS; prime: NO\n"
    );
}

#[test]
fn filter_first_row() {
    assert_eq!(stdout(&["filter", &d("first_row_c2.filter")]), "filter: VALID\norder: 16\n");
    let c = stdout(&["filter", &d("first_row_c2.filter"), "--classify"]);
    assert!(c.contains("symmetric: YES, inverse-equal: YES, ideally: NO, nearly-eps: NO"), "{c}");
}

#[test]
fn filter_witness_trials() {
    let out = stdout(&["filter", &d("gf4_z.filter"), "--witness", "--trials", "10", "--seed", "3"]);
    assert!(out.ends_with("witnesses: 10/10 (seed 3)\n"), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("trial ")).count(), 10);
}

#[test]
fn porcelain_output() {
    assert_eq!(stdout(&["--porcelain", "prime", &d("gf2.ring")]), "prime=yes\n");
    assert_eq!(
        stdout(&["leavitt", "--porcelain", &d("two_isolated.graph"), "--coeff", &d("gf2.ring")]),
        "mt3=fail,v,w\ncoefficients_prime=yes\nprime=no\n"
    );
}

#[test]
fn fixed_seed_is_reproducible() {
    let args = ["filter", &d("mat2_z.filter"), "--witness", "--trials", "20", "--seed", "11"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn errors_exit_nonzero() {
    let missing = grprime(&["prime", "/nonexistent/ring"]);
    assert!(!missing.status.success());
    assert!(missing.stdout.is_empty());
    assert!(String::from_utf8_lossy(&missing.stderr).contains("cannot read"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ring");
    fs::write(&bad, "gf(6)").unwrap();
    let out = grprime(&["prime", bad.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());

    let big = dir.path().join("big.ring");
    fs::write(&big, "mat(gf(2),2)").unwrap();
    let capped = grprime(&["--max-order", "8", "prime", big.to_str().unwrap()]);
    assert!(!capped.status.success());

    assert!(!grprime(&["frobnicate"]).status.success());
    assert!(!grprime(&["filter", &d("gf4_z.filter"), "--classify", "--witness"]).status.success());
}

#[test]
fn invalid_filter_is_a_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.filter");
    // Over C3 with I_1 = R and I_2 = 0: I_1 I_1 = R is not inside I_2.
    fs::write(&f, "ring: gf(2) group: cyclic(3) I 0 = [1] I 1 = [1]").unwrap();
    assert_eq!(stdout(&["filter", f.to_str().unwrap()]), "filter: INVALID\n");
}
