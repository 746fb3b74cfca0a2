//! End-to-end tests of the command line tool against the shipped data
//! files: worked values, parse diagnostics, determinism of the verify
//! suites, and the conjugation symmetry of emitted profiles.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_knotalg"))
}

fn testdata(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("testdata")
        .join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn alexander_worked_values() {
    let out = bin()
        .args(["alexander"])
        .arg(testdata("trefoil.sft"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 - t + t^2");

    let out = bin()
        .args(["alexander"])
        .arg(testdata("unknot.sft"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn lt_sig_and_xi_exclusion() {
    let out = bin()
        .args(["lt-sig"])
        .arg(testdata("trefoil.sft"))
        .args(["--xi", "1/2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("signature = -2"), "{}", text);
    assert!(text.contains("nullity = 0"), "{}", text);

    let out = bin()
        .args(["lt-sig"])
        .arg(testdata("trefoil.sft"))
        .args(["--xi", "0/1"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(stderr(&out).contains("excluded"), "{}", stderr(&out));
}

#[test]
fn malformed_matrix_names_the_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ragged.sft");
    std::fs::write(&path, "parity 1\nmatrix 2\n-1 1\n0 -1 7\n").unwrap();
    let out = bin().args(["alexander"]).arg(&path).output().unwrap();
    assert!(!out.status.success());
    let err = stderr(&out);
    assert!(err.contains("line 4"), "{}", err);
    assert!(err.contains("row 2"), "{}", err);
}

#[test]
fn wall_chain_homology_and_mk_values() {
    let out = bin().args(["wall"]).arg(testdata("cp2.wall")).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");

    let out = bin()
        .args(["chain-homology"])
        .arg(testdata("cyclic2.cpx"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "H_0 = Z/2, H_1 = 0");

    let out = bin()
        .args(["mk-check"])
        .arg(testdata("trefoil_vs_unknot.mk"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "lhs = 2, rhs = 2, holds = true, slack = 0"
    );
}

#[test]
fn triad_split_certifies() {
    let out = bin()
        .args(["triad-split"])
        .arg(testdata("scalar.triad"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches(": true").count(), 4, "{}", text);
}

#[test]
fn verify_is_deterministic_per_seed() {
    let run = |seed: &str| {
        let out = bin()
            .args(["verify", "inv1", "--cases", "40", "--seed", seed])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("7"), run("7"));

    let out = bin().args(["verify", "no-such-suite"]).output().unwrap();
    assert!(!out.status.success());
    assert!(stderr(&out).contains("unknown suite"), "{}", stderr(&out));
}

#[test]
fn profile_nullity_lights_up_at_the_alexander_roots() {
    let out = bin()
        .args(["lt-profile"])
        .arg(testdata("trefoil.sft"))
        .args(["--denominator-max", "6"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    let nullity_rows: Vec<&str> = text
        .lines()
        .skip(1)
        .filter(|l| !l.split(',').nth(1).unwrap().starts_with('0'))
        .collect();
    // the trefoil's Alexander polynomial vanishes exactly at the primitive
    // sixth roots of unity
    assert_eq!(nullity_rows.len(), 2, "{}", text);
    assert!(nullity_rows[0].starts_with("1/6,1,"), "{}", nullity_rows[0]);
    assert!(nullity_rows[1].starts_with("5/6,1,"), "{}", nullity_rows[1]);
    for row in nullity_rows {
        assert!(row.ends_with("true"), "nullity row must flag Delta = 0: {}", row);
    }
}

#[test]
fn profile_rows_are_conjugation_symmetric() {
    let out = bin()
        .args(["lt-profile"])
        .arg(testdata("trefoil.sft"))
        .args(["--denominator-max", "8"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p/q,nullity,signature,delta_zero"));
    let rows: Vec<(u64, u64, i64)> = lines
        .map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            let (p, q) = cols[0].split_once('/').unwrap();
            (p.parse().unwrap(), q.parse().unwrap(), cols[2].parse().unwrap())
        })
        .collect();
    // rows are sorted by angle and symmetric under p -> q - p
    for w in rows.windows(2) {
        assert!(w[0].0 * w[1].1 <= w[1].0 * w[0].1, "rows not sorted by angle");
    }
    for &(p, q, sig) in &rows {
        let partner = rows
            .iter()
            .find(|&&(pp, qq, _)| qq == q && pp == q - p)
            .expect("conjugate row present");
        assert_eq!(partner.2, sig, "sigma({}/{}) != sigma({}/{})", p, q, q - p, q);
    }
}

#[test]
fn corpus_table_and_duplicate_labels() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(testdata("trefoil.sft"), dir.path().join("a.sft")).unwrap();
    std::fs::copy(testdata("unknot.sft"), dir.path().join("b.sft")).unwrap();
    // a duplicate label and an unparseable file
    std::fs::copy(testdata("trefoil.sft"), dir.path().join("c.sft")).unwrap();
    std::fs::write(dir.path().join("broken.sft"), "parity 1\nmatrix 1\nx\n").unwrap();
    let out = bin()
        .args(["corpus"])
        .arg(dir.path())
        .args(["--report", "table"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    let err = stderr(&out);
    assert!(text.starts_with("label\t"), "{}", text);
    assert!(text.contains("trefoil\t1 - t + t^2\t-2\t0"), "{}", text);
    assert!(text.contains("trefoil#2\t"), "{}", text);
    assert!(text.contains("unknot\t1\t0\t0"), "{}", text);
    assert!(err.contains("skipped"), "{}", err);
    assert!(err.contains("duplicate label"), "{}", err);

    // empty directory: header only, success
    let empty = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["corpus"])
        .arg(empty.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1);
}
