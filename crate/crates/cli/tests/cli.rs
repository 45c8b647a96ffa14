use std::io::Write;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn involutive(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_involutive"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the child may exit before reading its input
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

const MONOMIALS: &str = "vars: x y z\nx^2*y\nx*z\ny^2\ny*z\nz^3\n";
const CYCLIC3: &str = "vars: x y z\norder: degrevlex\nx + y + z\nx*y + y*z + z*x\nx*y*z - 1\n";

fn stat(stdout: &str, key: &str) -> usize {
    stdout
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in output"))
        .parse()
        .unwrap()
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(involutive(&["--help"], "").code, 0);
    assert_eq!(involutive(&["--version"], "").code, 0);
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(involutive(&["frobnicate"], "").code, 1);
    assert_eq!(involutive(&["separate", "-", "--division", "nope"], MONOMIALS).code, 1);
    assert_eq!(involutive(&["separate", "/nonexistent/problem.txt"], "").code, 1);
}

#[test]
fn parse_errors_report_line_and_column() {
    let run = involutive(&["separate", "-"], "vars: x y\nx\nx + q\n");
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("-:3:5:"), "{}", run.stderr);
}

#[test]
fn janet_completion_lists_eight_monomials_in_completion_order() {
    let run = involutive(&["complete-monomials", "-", "--division", "janet", "--completion-order", "deglex"], MONOMIALS);
    assert_eq!(run.code, 0);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines, ["y*z", "y^2", "x*z", "z^3", "x*y*z", "x*y^2", "x^2*z", "x^2*y"]);
}

#[test]
fn pommaret_completion_hits_the_degree_limit() {
    let run = involutive(&["complete-monomials", "-", "--division", "pommaret", "--max-degree", "8"], MONOMIALS);
    assert_eq!(run.code, 2);
    assert!(run.stdout.lines().any(|l| l == "x^7*y"));
    assert!(run.stderr.contains("limit") || run.stderr.contains("degree"));
}

#[test]
fn prolongation_count_is_the_same_for_every_completion_order() {
    for division in ["thomas", "janet", "div1", "div2", "induced-lex"] {
        let counts: Vec<usize> = ["lex", "deglex", "degrevlex"]
            .iter()
            .map(|o| {
                let run = involutive(
                    &["complete-monomials", "-", "--division", division, "--completion-order", o, "--stats"],
                    MONOMIALS,
                );
                assert_eq!(run.code, 0);
                stat(&run.stdout, "prolongations_checked")
            })
            .collect();
        assert!(counts.windows(2).all(|w| w[0] == w[1]), "{division}: {counts:?}");
    }
}

#[test]
fn fast_path_is_refused_for_non_monotone_pairs() {
    let run = involutive(
        &["complete-monomials", "-", "--division", "div1", "--monotone-fast-path"],
        MONOMIALS,
    );
    assert_eq!(run.code, 1);
    let run = involutive(
        &["complete-monomials", "-", "--division", "janet", "--completion-order", "lex", "--monotone-fast-path"],
        MONOMIALS,
    );
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout.lines().count(), 8);
}

#[test]
fn separate_singleton_thomas_is_fully_multiplicative() {
    let run = involutive(&["separate", "-", "--division", "thomas"], "vars: x y z\nx*y^2\n");
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout.lines().nth(1).unwrap().split_whitespace().collect::<Vec<_>>(), ["x*y^2", "x,y,z"]);
}

#[test]
fn pommaret_row_ignores_the_rest_of_the_set() {
    let alone = involutive(&["separate", "-", "--division", "pommaret"], "vars: x y z\nx*z\n");
    let among = involutive(&["separate", "-", "--division", "pommaret"], MONOMIALS);
    let row = |s: &str| s.lines().find(|l| l.starts_with("x*z ")).unwrap().split_whitespace().nth(1).unwrap().to_string();
    assert_eq!(row(&alone.stdout), row(&among.stdout));
}

#[test]
fn cyclic3_basis_verifies() {
    let run = involutive(&["involutive-basis", "-", "--division", "janet", "--verify"], CYCLIC3);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert!(run.stdout.contains("verification: PASSED"));
    assert!(run.stdout.starts_with("x + y + z\n"));
}

#[test]
fn autoreduction_and_criterion_do_not_change_the_basis() {
    let reference = involutive(&["involutive-basis", "-"], CYCLIC3).stdout;
    assert_eq!(involutive(&["involutive-basis", "-", "--no-autoreduce"], CYCLIC3).stdout, reference);
    assert_eq!(involutive(&["involutive-basis", "-", "--no-criterion"], CYCLIC3).stdout, reference);
}

#[test]
fn basis_stats_are_key_value_lines() {
    let run = involutive(&["involutive-basis", "-", "--stats"], CYCLIC3);
    assert_eq!(run.code, 0);
    for key in ["prolongations_examined", "criterion_hits", "normal_forms", "displacements", "final_size"] {
        stat(&run.stdout, key);
    }
}

#[test]
fn zero_polynomial_is_rejected() {
    let run = involutive(&["involutive-basis", "-"], "vars: x y\nx - y\n0\n");
    assert_eq!(run.code, 1);
}

#[test]
fn groebner_reduces_the_hyperbola_system() {
    let run = involutive(&["groebner", "-"], "vars: x y\norder: deglex\nx*y - 1\ny^2 - 1\n");
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout, "x - y\ny^2 - 1\n");
    let again = involutive(&["groebner", "-"], &format!("vars: x y\norder: deglex\n{}", run.stdout));
    assert_eq!(again.stdout, run.stdout);
}

#[test]
fn groebner_rejects_empty_input() {
    assert_eq!(involutive(&["groebner", "-"], "vars: x y\n").code, 1);
}

#[test]
fn verify_distinguishes_bases_from_non_bases() {
    let basis = involutive(&["involutive-basis", "-"], CYCLIC3).stdout;
    let file = format!("vars: x y z\norder: degrevlex\n{basis}");
    let run = involutive(&["verify", "-", "--division", "janet"], &file);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("PASSED"));
    let run = involutive(&["verify", "-", "--division", "janet"], CYCLIC3);
    assert_eq!(run.code, 3);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["separate", "-", "--all-divisions"],
        vec!["complete-monomials", "-", "--division", "thomas", "--stats"],
    ] {
        let a = involutive(&args, MONOMIALS);
        let b = involutive(&args, MONOMIALS);
        assert_eq!(a.stdout, b.stdout);
    }
    let a = involutive(&["harness", "monomials", "--seed", "3", "--count", "20"], "");
    let b = involutive(&["harness", "monomials", "--seed", "3", "--count", "20"], "");
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn polynomial_harness_passes() {
    let run = involutive(&["harness", "polynomials", "--seed", "9", "--count", "10"], "");
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert_eq!(run.stdout.matches("PASSED").count(), 2);
}
