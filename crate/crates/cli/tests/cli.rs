use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use torus_ideals::{IntPoly, LaurentPoly, ZetaFactorization};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_torus-ideals"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.display().to_string()
}

fn bfile(first: i64, values: &[i64]) -> String {
    let mut s = String::from("# test fixture\n");
    for (i, v) in (first..).zip(values) {
        s.push_str(&format!("{i} {v}\n"));
    }
    s
}

#[test]
fn compute_examples() {
    assert_eq!(stdout(&["compute", "pg", "--n", "6", "--eval", "3"]), "200\n");
    assert_eq!(stdout(&["compute", "fpoly", "--n", "15", "--eval", "3"]), "1149851\n");
    assert_eq!(stdout(&["compute", "fpoly", "--k", "14", "--eval", "3"]), "1149851\n");
    assert_eq!(stdout(&["compute", "pg", "--n", "16", "--eval", "5"]), "20344613659\n");
    assert_eq!(stdout(&["compute", "pg", "--n", "3"]), "X^2 + X - 2\n");
    assert_eq!(stdout(&["compute", "tcheb", "--n", "4"]), "X^4 - 4X^2 + 2\n");
    assert_eq!(stdout(&["compute", "cn", "--n", "4"]), "q^8 - q^7 - q + 1\n");
    assert_eq!(stdout(&["compute", "pg", "--n", "5", "--eval", "-2"]), "2\n");
    assert_eq!(stdout(&["compute", "cn", "--n", "3", "--eval", "1"]), "0\n");
}

#[test]
fn zeta_text() {
    let out = stdout(&["compute", "zeta", "--n", "4"]);
    assert!(out.starts_with("Z(t) = (1-q^7t)(1-qt)/((1-q^8t)(1-t))\n"), "{out}");
    assert!(out.contains("zeta(s-1) zeta(s-7) / (zeta(s) zeta(s-8))"), "{out}");
}

#[test]
fn json_round_trips() {
    let pg: IntPoly = serde_json::from_str(&stdout(&["compute", "pg", "--n", "9", "--format", "json"])).unwrap();
    assert_eq!(pg, torus_ideals::pg(9));
    let pn: LaurentPoly = serde_json::from_str(&stdout(&["compute", "pn", "--n", "6", "--format", "json"])).unwrap();
    assert_eq!(pn, torus_ideals::hilbert::pn_from_cn(6).unwrap());
    let z: serde_json::Value = serde_json::from_str(&stdout(&["compute", "zeta", "--n", "3", "--format", "json"])).unwrap();
    let local: ZetaFactorization = serde_json::from_value(z["local"].clone()).unwrap();
    assert_eq!(local, torus_ideals::local_zeta_factors(3));
    assert_eq!(z["local"]["den"], serde_json::json!([0, 3, 3, 6]));
}

#[test]
fn table_values_csv() {
    let out = stdout(&["table", "values", "--N", "3,4,5", "--max-n", "16", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 17);
    assert_eq!(lines[0], "n,pg(3),f(3),rel(3),pg(4),f(4),rel(4),pg(5),f(5),rel(5)");
    assert_eq!(lines[6], "6,200,199,differ-by-1,990,989,differ-by-1,3192,3191,differ-by-1");
    assert_eq!(
        lines[16],
        "16,3010349,3010349,equal,518408351,518408351,equal,20344613659,20344613659,equal"
    );
    assert!(lines[5].ends_with("660,666,other"));
}

#[test]
fn table_polynomials_and_decomposition() {
    let pg = stdout(&["table", "pg", "--max-n", "12"]);
    assert_eq!(pg.lines().count(), 12);
    assert!(pg.contains("Pg_4 = X^3 + X^2 - 2X - 1\n"));
    let t = stdout(&["table", "tcheb"]);
    assert_eq!(t.lines().next(), Some("T_0 = 2"));
    assert_eq!(t.lines().count(), 13);
    let f = stdout(&["table", "fpoly"]);
    assert_eq!(f.lines().last(), Some("F_11 = X^11 + X^10 - 10X^9 - 9X^8 + 36X^7 + 28X^6 - 56X^5 - 35X^4 + 35X^3 + 15X^2 - 6X - 1"));
    let d = stdout(&["table", "decomp", "--max-n", "16", "--format", "csv"]);
    assert!(d.contains("12,T_0 + 2T_1 + 2T_2 + T_3 + T_4 + T_5 + T_6 + T_7 + T_8 + T_9 + T_10 + T_11,F_11 + F_2\n"));
    assert!(d.contains("15,T_0 + T_1 + T_2 + T_3 + T_7 + T_8 + T_9 + T_10 + T_11 + T_12 + T_13 + T_14,F_14 - F_6 + F_3 + F_0\n"));
}

#[test]
fn verify_suites_pass() {
    let out = run(&["verify", "routes", "--max-n", "60"]);
    assert_eq!(out.status.code(), Some(0));
    let out = stdout(&["verify", "special", "--max-n", "10000"]);
    assert!(out.contains("note: +F_0: [6, 28, 496, 8128]"), "{out}");
    assert!(out.contains("note: -F_0: [3, 10, 136]"), "{out}");
    let js: serde_json::Value = serde_json::from_str(&stdout(&["verify", "mult", "--max-n", "20", "--format", "json"])).unwrap();
    assert_eq!(js["failed"], 0);
    assert_eq!(js["suite"], "mult");
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&["verify", "all", "--max-n", "40", "--format", "json"]);
    let b = stdout(&["verify", "all", "--max-n", "40", "--format", "json"]);
    assert_eq!(a, b);
    let a = stdout(&["table", "values", "--max-n", "40", "--format", "json"]);
    let b = stdout(&["table", "values", "--max-n", "40", "--format", "json"]);
    assert_eq!(a, b);
}

#[test]
fn oeis_checks_pass() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    // Pg_n(3), read off the first table
    let a329156 = write(d, "b329156.txt", &bfile(1, &[1, 4, 10, 29, 72, 200, 510, 1364, 3546, 9348, 24400, 64090, 167562, 439200, 1149360, 3010349]));
    let a002878 = write(d, "b002878.txt", &bfile(0, &[1, 4, 11, 29, 76, 199, 521, 1364, 3571, 9349, 24476]));
    let a001834 = write(d, "b001834.txt", &bfile(0, &[1, 5, 19, 71, 265, 989, 3691, 13775]));
    let a030221 = write(d, "b030221.txt", &bfile(0, &[1, 6, 29, 139, 666, 3191, 15289, 73254]));
    let a000203 = write(d, "b000203.txt", &bfile(1, &[1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28, 14, 24, 24, 31]));
    let a001227 = write(d, "b001227.txt", &bfile(1, &[1, 1, 2, 1, 2, 2, 2, 1, 3, 2, 2, 2, 2, 2, 4, 1]));
    let a002654 = write(d, "b002654.txt", &bfile(1, &[1, 1, 0, 1, 2, 0, 0, 1, 1, 2, 0, 0, 2, 0, 0, 1, 2, 1, 0, 2]));
    let a002325 = write(d, "b002325.txt", &bfile(1, &[1, 1, 2, 1, 0, 2, 0, 1, 3, 0, 2, 2]));
    for args in [
        vec!["oeis-check", "pg3", &a329156],
        vec!["oeis-check", "pg_eval", "3", &a329156],
        vec!["oeis-check", "f_eval", "3", &a002878],
        vec!["oeis-check", "f_eval", "4", &a001834],
        vec!["oeis-check", "f_eval", "5", &a030221],
        vec!["oeis-check", "sigma", &a000203],
        vec!["oeis-check", "odd_div_count", &a001227],
        vec!["oeis-check", "pg_abs", "-2", &a002654],
        vec!["oeis-check", "pg_abs", "0", &a002325],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn oeis_mismatch_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    // index shifted by one: the classic off-by-one
    let shifted = write(d, "b002878.txt", &bfile(1, &[1, 4, 11, 29]));
    let out = run(&["oeis-check", "f_eval", "3", &shifted]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));

    let bad = write(d, "bad.txt", "# c\n1 1\n2 two\n");
    let out = run(&["oeis-check", "sigma", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.txt:3"));

    let out = run(&["oeis-check", "sigma", "/nonexistent/b000203.txt"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["oeis-check", "nosuch", &bad]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn emitted_bfile_checks_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pg4.txt");
    let p = path.display().to_string();
    let out = run(&["table", "bfile", "--at", "4", "--max-n", "30", "--out", &p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.lines().any(|l| l == "7 3672"));
    assert!(text.lines().any(|l| l == "16 518408351"));
    assert_eq!(run(&["oeis-check", "pg_eval", "4", &p]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["compute", "pg", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "pg"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "zeta", "--n", "3", "--eval", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["table", "values", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
