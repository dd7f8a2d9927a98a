//! The command-line front end, driven through `cli::run`.

use quatnorm::cli::{parse_expression, run, Expression, Outcome};

fn cli(args: &[&str]) -> Outcome {
    run(args.iter().copied(), &mut std::io::empty())
}

fn cli_stdin(args: &[&str], input: &str) -> Outcome {
    run(args.iter().copied(), &mut input.as_bytes())
}

#[test]
fn normalize_triple_rule() {
    let o = cli(&["normalize", "--vars", "3", "v3*v2*v1"]);
    assert_eq!(o.status, 0);
    assert_eq!(o.output, "-v2*v3*v1 + v1*v3*v2 + v1*v2*v3\n");
}

#[test]
fn normalize_reads_stdin_lines() {
    let o = cli_stdin(&["normalize", "--vars", "3"], "v2*v2*v1\n\nv1*v2 + v2*v1 - 2*S(v1*v2)\n");
    assert_eq!(o.status, 0, "{}", o.output);
    assert_eq!(o.output, "v1*v2*v2\n0\n");
}

#[test]
fn normalize_quaternion_syzygy() {
    let o = cli(&["normalize", "--vars", "1", "q1*q1' - q1'*q1"]);
    assert_eq!((o.status, o.output.as_str()), (0, "0\n"));
    let o = cli(&["normalize", "--vars", "2", "q1*q2"]);
    assert_eq!(o.status, 0);
    let printed = o.output.trim();
    assert!(printed.contains("s1*s2"), "{printed}");
    // the scalar-coefficient output parses back
    assert!(matches!(parse_expression(printed), Ok(Expression::Vector(_))));
}

#[test]
fn normalize_output_round_trips() {
    for input in ["v3*v2*v1*v2 - 4*v2*v1", "S(v3*v1*v2*v1)", "cross(v2, v1)*v3"] {
        let o = cli(&["normalize", "--vars", "3", "--max-deg", "4", input]);
        assert_eq!(o.status, 0);
        let again = cli(&["normalize", "--vars", "3", "--max-deg", "4", o.output.trim()]);
        assert_eq!(again.output, o.output, "normal forms are fixed points");
    }
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let o = cli(&["normalize", "--vars", "2", "v1 + * v2"]);
    assert_eq!(o.status, 2);
    assert!(o.output.contains("1:6"), "{}", o.output);
    assert_eq!(cli(&["normalize", "--vars", "2", "v1*q1"]).status, 2);
    assert_eq!(cli(&["normalize", "--vars", "2", "v3"]).status, 2);
    assert_eq!(cli(&["normalize", "--vars", "2", "--max-deg", "3", "v1^4"]).status, 2);
    assert_eq!(cli(&["frobnicate"]).status, 2);
    assert_eq!(cli(&["gb", "--vars", "3", "--bogus"]).status, 2);
    assert_eq!(cli(&["normalize", "v1"]).status, 2, "--vars is required");
    let o = cli_stdin(&["zero-test"], "v1\nv1 +\n");
    assert_eq!(o.status, 2);
    assert!(o.output.contains("2:5"), "{}", o.output);
}

#[test]
fn help_exits_0() {
    let o = cli(&["--help"]);
    assert_eq!(o.status, 0);
    for verb in [
        "normalize",
        "check-normal",
        "gb",
        "verify-groebner",
        "zero-test",
        "dim-check",
        "identities",
        "complete",
    ] {
        assert!(o.output.contains(verb), "{verb} missing from help");
    }
}

#[test]
fn gb_lists_rules() {
    let o = cli(&["gb", "--vars", "2"]);
    assert_eq!(o.output, "v2*v2*v1 -> v1*v2*v2\nv2*v1*v1 -> v1*v1*v2\n");
    let o = cli(&["gb", "--vars", "4", "--multilinear"]);
    assert_eq!(o.output.lines().count(), 8 + 1);
    assert!(o.output.lines().all(|l| l.contains(" -> ")));
    assert!(o.output.contains("v3*v2*v4*v1 -> "));
    let t = cli(&["gb", "--vars", "3", "--max-deg", "4", "--tail-reduce"]);
    assert_eq!(t.status, 0);
    assert_eq!(t.output.lines().count(), cli(&["gb", "--vars", "3", "--max-deg", "4"]).output.lines().count());
}

#[test]
fn verify_groebner_passes() {
    let o = cli(&["verify-groebner", "--vars", "4", "--max-deg", "6"]);
    assert_eq!(o.status, 0);
    assert!(o.output.ends_with("all S-polynomials reduce to 0\n"), "{}", o.output);
    let o = cli(&["verify-groebner", "--vars", "5", "--max-deg", "6", "--multilinear"]);
    assert_eq!(o.status, 0, "{}", o.output);
}

#[test]
fn zero_test_reports_witness() {
    let o = cli(&["zero-test", "--trials", "20", "S(v1*v2*v3) - S(v3*v1*v2)"]);
    assert_eq!((o.status, o.output.as_str()), (0, "zero at 20 trials\n"));
    let o = cli(&["zero-test", "--seed", "5", "v1*v2 - v2*v1"]);
    assert_eq!(o.status, 1);
    assert!(o.output.starts_with("nonzero at trial 0"), "{}", o.output);
    assert!(o.output.contains("  v2 = (0, "));
    let o = cli(&["zero-test", "q1*q2 - q2*q1"]);
    assert_eq!(o.status, 1, "{}", o.output);
    let o = cli(&["zero-test", "(q1 + q1')*q2 - q2*(q1 + q1')"]);
    assert_eq!(o.status, 0, "{}", o.output);
}

#[test]
fn dim_check_counts_agree() {
    let o = cli(&["dim-check", "--vars", "3", "--multilinear"]);
    assert_eq!(o.status, 0);
    assert_eq!(
        o.output,
        "multiset {v1,v2,v3}: 6 words, rank 2, quotient 4, factor-free 4, structural 4\n"
    );
    let o = cli(&["dim-check", "--vars", "2", "--deg", "3"]);
    assert!(o.output.contains("8 words, rank 2, quotient 6"));
    assert_eq!(cli(&["dim-check", "--vars", "3"]).status, 2);
    assert_eq!(cli(&["dim-check", "--vars", "10", "--deg", "5"]).status, 2);
}

#[test]
fn check_normal_flags_reducible_words() {
    let o = cli(&["check-normal", "--vars", "4", "v1*v3*v2*v4"]);
    assert_eq!((o.status, o.output.as_str()), (0, "v1*v3*v2*v4: normal\n"));
    let o = cli(&["check-normal", "--vars", "4", "--multilinear", "v3*v2*v4*v1"]);
    assert_eq!(o.status, 1);
    assert_eq!(o.output, "v3*v2*v4*v1: reducible by v3*v2*v4*v1\n");
    assert_eq!(cli(&["check-normal", "--vars", "3", "--multilinear", "v1*v1"]).status, 2);
}

#[test]
fn identities_small() {
    let o = cli(&["identities", "--max-n", "3", "--trials", "10"]);
    assert_eq!(o.status, 0, "{}", o.output);
    assert!(o.output.contains("PASS double-cross: 13 instances"));
    assert!(o.output.ends_with("failing\n"));
    let v = cli(&["identities", "--max-n", "2", "--trials", "5", "--verbose"]);
    assert!(v.output.contains("PASS cross-square[1,2]: normal form 0, zero on 5 trials"));
}

#[test]
fn complete_matches_closed_form() {
    let o = cli(&["complete", "--vars", "3", "--max-deg", "4", "--compare"]);
    assert_eq!(o.status, 0, "{}", o.output);
    let mut rules: Vec<String> = cli(&["complete", "--vars", "2", "--max-deg", "3"])
        .output
        .lines()
        .map(String::from)
        .collect();
    rules.sort();
    let mut closed: Vec<String> = cli(&["gb", "--vars", "2"]).output.lines().map(String::from).collect();
    closed.sort();
    assert_eq!(rules, closed);
    let capped = cli(&["complete", "--vars", "3", "--max-deg", "5", "--cap", "3"]);
    assert_eq!(capped.status, 2);
}

#[test]
fn reports_are_deterministic() {
    let args = ["zero-test", "--seed", "11", "--trials", "30", "v1*v2*v3 + v3*v2*v1", "v1*v1"];
    assert_eq!(cli(&args), cli(&args));
    let args = ["verify-groebner", "--vars", "3", "--max-deg", "5"];
    assert_eq!(cli(&args), cli(&args));
}
