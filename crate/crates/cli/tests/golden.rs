//! Byte-exact command outputs. Run with `UPDATE_GOLDEN=1` to rewrite the
//! expected files after an intentional format change.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twoblock"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn golden(name: &str, args: &[&str], exit: i32) {
    let out = run(args);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        out.status.code(),
        Some(exit),
        "{name}: stderr {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", &format!("{name}.out")]
        .iter()
        .collect();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &stdout).unwrap();
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(stdout, expected, "{name}");
}

fn stderr_of(args: &[&str], exit: i32) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(exit), "{args:?}");
    String::from_utf8(out.stderr).unwrap()
}

#[test]
fn generate_displayed_prefixes() {
    golden(
        "generate_tm_kappa",
        &["generate", "tm-kappa", "--seed", "001110", "-n", "33"],
        0,
    );
    golden(
        "generate_pell",
        &["generate", "pell-morphism", "--seed", "0", "-n", "13"],
        0,
    );
    golden(
        "generate_kolakoski_12",
        &[
            "generate",
            "kolakoski-selfread",
            "--start",
            "2",
            "-n",
            "6",
            "--coding",
            "12",
        ],
        0,
    );
    golden(
        "generate_kolakoski_01",
        &["generate", "kolakoski-selfread", "--start", "2", "-n", "6"],
        0,
    );
    golden(
        "generate_iterate_1",
        &["generate", "tm-kappa", "--seed", "001110", "--iterate", "1"],
        0,
    );
    golden(
        "generate_iterate_2",
        &["generate", "tm-kappa", "--seed", "001110", "--iterate", "2"],
        0,
    );
}

#[test]
fn generate_from_rule_file_matches_catalog() {
    let dir = std::env::temp_dir().join(format!("twoblock-rules-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let rules = dir.join("tm.rules");
    fs::write(&rules, "# x^(00)\n00 -> 001\n01 -> 010\n10 -> 101\n11 -> 110\n").unwrap();
    let out = run(&["generate", rules.to_str().unwrap(), "--seed", "001110", "-n", "33"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "001110101101110010110001101110001\n"
    );
    let target = dir.join("out.txt");
    let out = run(&["generate", "pell-word", "-n", "13", "-o", target.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&target).unwrap(), "0010010001001\n");
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn generate_errors() {
    assert!(stderr_of(&["generate", "tm-kappa", "--seed", "001", "-n", "10"], 2).contains("stalled"));
    assert!(stderr_of(&["generate", "pell-kappa", "--seed", "01", "-n", "10"], 2).contains("invalid seed"));
    assert!(stderr_of(&["generate", "no-such-map", "-n", "10"], 2).contains("no-such-map"));
    assert!(stderr_of(&["generate", "tm-kappa", "-n", "10"], 2).contains("--seed"));
    stderr_of(&["generate", "tm-kappa", "--coding", "23", "-n", "3"], 2);
}

#[test]
fn analyze_reports() {
    golden(
        "analyze_complexity",
        &["analyze", "complexity", "tm-kappa-fixed-point", "-n", "14"],
        0,
    );
    golden(
        "analyze_invariance",
        &[
            "analyze",
            "invariance",
            "tm-kappa-fixed-point",
            "--prefix",
            "1000",
            "-n",
            "6",
            "--transform",
            "reverse",
        ],
        0,
    );
    golden("analyze_periodicity", &["analyze", "periodicity", "001001001"], 0);
    golden(
        "analyze_powers",
        &[
            "analyze",
            "powers",
            "tm-kappa-fixed-point",
            "--prefix",
            "40",
            "--exponent",
            "4",
            "--max-base",
            "4",
        ],
        0,
    );
    golden("analyze_recurrence", &["analyze", "recurrence", "010101", "-n", "2"], 0);
    assert!(stderr_of(&["analyze", "periodicity", "0011", "--max-period", "2"], 2).contains("too short"));
}

#[test]
fn commute_verdicts() {
    golden(
        "commute_pell",
        &["commute", "pell-kappa", "pell-morphism", "--gens", "00,01,10"],
        0,
    );
    golden(
        "commute_ex2",
        &["commute", "ex2-kappa-prime", "ex2-sigma", "--gens", "000,001,010,100"],
        0,
    );
    golden("commute_tm", &["commute", "tm-kappa", "tm-morphism"], 1);
}

#[test]
fn solve_eq_listings() {
    golden("solve_ex3_19", &["solve-eq", "data/ex3.sys", "--max-len", "19"], 0);
    golden("solve_pell_6", &["solve-eq", "data/pell.sys", "--max-len", "6"], 0);
    golden("solve_pell_0", &["solve-eq", "data/pell.sys", "--max-len", "0"], 0);
}

#[test]
fn oeis_checks() {
    golden(
        "oeis_match",
        &[
            "oeis-check",
            "pell-kappa-fixed-point",
            "data/b289001.txt",
            "--offset",
            "1",
        ],
        0,
    );
    golden(
        "oeis_shifted",
        &["oeis-check", "pell-word", "data/b289001-shifted.txt"],
        1,
    );
    golden("oeis_empty", &["oeis-check", "pell-word", "data/empty-bfile.txt"], 0);
    assert!(stderr_of(&["oeis-check", "pell-word", "data/empty-bfile.txt"], 0).contains("warning"));
    assert!(stderr_of(&["oeis-check", "pell-word", "data/malformed-bfile.txt"], 2).contains("line 4"));
}

#[test]
fn list_catalog() {
    golden("list", &["list"], 0);
}
