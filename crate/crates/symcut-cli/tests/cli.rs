//! End-to-end tests of the `symcut` binary: example invocations, output
//! formats, exit codes, and byte determinism.

use std::process::{Command, Output};

fn symcut() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_symcut"));
    // Isolate from the ambient environment so the default cap applies.
    cmd.env_remove("SYMCUT_MAX_RANK");
    cmd
}

fn run(args: &[&str]) -> Output {
    symcut()
        .args(args)
        .output()
        .expect("failed to launch symcut")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is not UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is not UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process was signalled")
}

#[test]
fn info_reports_exact_lengths_for_a_rank_six_space() {
    let out = run(&["info", "E I", "--gamma", "Z3"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("space: E6/Sp(4)  [E I, quotient]"));
    assert!(text.contains("center: Z3 (order 3)"));
    assert!(text.contains("vertices (19):"));
    assert!(text.contains("i = pi*sqrt(8)"));
    assert!(text.contains("d = pi*sqrt(16)"));
}

#[test]
fn ricci_normalization_reaches_the_round_sphere_value() {
    // A rank-one restricted system read as a group manifold, metric scaled
    // to constant curvature 1: both radii come out at pi/2.
    let out = run(&["info", "--sigma", "A1", "--gamma", "Z2", "--ricci", "2"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("epsilon: 1/4"));
    assert!(text.contains("i = pi*sqrt(1/4) = 1.57079632679"));
    assert!(text.contains("d = pi*sqrt(1/4) = 1.57079632679"));
}

#[test]
fn spin8_order_two_quotients_share_one_result() {
    let result_of = |gamma: &str| -> serde_json::Value {
        let out = run(&["info", "Spin(8)", "--gamma", gamma, "--format", "json"]);
        assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        v["result"].clone()
    };
    let e3 = result_of("gen=e3");
    let e4 = result_of("gen=e4");
    let e1 = result_of("gen=e1");
    assert_eq!(e3, e4);
    assert_eq!(e3, e1);
    assert_eq!(e3["i_exact"], "pi*sqrt(6)");
    assert_eq!(e3["d_exact"], "pi*sqrt(24)");
}

#[test]
fn group_table_rows_for_the_exceptional_groups() {
    let out = run(&["table", "8.2", "--only", "E6,E7"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let expected = "\
family  space  sigma  gamma  i            d
E6      E6     E6     Z3     pi*sqrt(16)  pi*sqrt(32)
E7      E7     E7     Z2     pi*sqrt(27)  pi*sqrt(63)
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn quotient_table_rows_for_the_rank_seven_exceptional_spaces() {
    let out = run(&["table", "8.1", "--only", "E V,E VII"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("pi*sqrt(27/2)"));
    assert!(text.contains("pi*sqrt(63/2)"));
    assert!(text.contains("pi*sqrt(45/2)"));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn range_override_instantiates_one_family() {
    let out = run(&["table", "8.1", "--only", "A I", "--n", "2..4"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[1].contains("SU(2)/SO(2)") && lines[1].contains("pi*sqrt(1/2)"));
    assert!(lines[2].contains("SU(3)/SO(3)") && lines[2].contains("pi*sqrt(4/3)"));
    assert!(lines[3].contains("SU(4)/SO(4)") && lines[3].contains("pi*sqrt(5/2)"));
    assert!(lines[4].contains("SU(4)/SO(4)") && lines[4].contains("pi*sqrt(6)"));
}

#[test]
fn beyond_rows_are_marked_in_every_format() {
    let out = run(&["table", "8.1", "--only", "A I", "--n", "6", "--format", "csv"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let z3 = text
        .lines()
        .find(|l| l.contains(",Z3,"))
        .expect("Z3 row missing");
    assert!(z3.contains("true"), "beyond flag missing: {z3}");
    let out = run(&["table", "8.1", "--only", "A I", "--n", "6"]);
    assert!(stdout(&out).contains("[beyond]"));
}

#[test]
fn verify_passes_at_moderate_rank() {
    let out = run(&["verify", "--max-rank", "5"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("ok   killing-norms:"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_reports_skipped_checks_at_low_rank() {
    let out = run(&["verify", "--max-rank", "2", "--format", "json"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["passed"], true);
    let skipped: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "skip")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(skipped, vec!["vertex-lists", "table-8.1", "table-8.2"]);
}

#[test]
fn bad_input_exits_with_code_two() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["info", "nonsense"],
        vec!["info"],
        vec!["info", "BD I", "--p", "6", "--gamma", "Z2"],
        vec!["info", "E I", "--gamma", "Z9"],
        vec!["info", "A III", "--p", "2", "--q", "3"],
        vec!["info", "E I", "--epsilon", "0"],
        vec!["info", "E I", "--epsilon", "1/2", "--ricci", "2"],
        vec!["info", "E I", "--format", "yaml"],
        vec!["table", "9.9"],
        vec!["table", "8.1", "--only", "A I", "--n", "4..2"],
        vec!["table", "8.1", "--only", "C I", "--n", "2"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(code(&out), 2, "args {args:?}: stderr {}", stderr(&out));
    }
}

#[test]
fn rank_cap_exits_with_code_three() {
    let out = run(&["info", "A I", "--n", "12"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("exceeds the enumeration cap"));

    let out = symcut()
        .env("SYMCUT_MAX_RANK", "4")
        .args(["info", "E I"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);

    // An explicit flag beats the environment variable.
    let out = symcut()
        .env("SYMCUT_MAX_RANK", "4")
        .args(["info", "E I", "--max-rank", "8"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["info", "E I", "--gamma", "Z3", "--format", "json"],
        vec!["table", "8.1", "--only", "C I", "--format", "md"],
        vec!["list", "--format", "csv"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(code(&first), 0);
        assert_eq!(first.stdout, second.stdout, "nondeterministic: {args:?}");
    }
}

#[test]
fn listing_covers_both_tables_and_no_form_spaces() {
    let out = run(&["list"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("SU(6)/SO(6)"));
    assert!(text.contains("Spin(8)"));
    let odd = text
        .lines()
        .find(|l| l.contains("SO(10)/U(5)"))
        .expect("odd rank listing missing");
    assert!(odd.contains("none"));
    assert!(odd.contains("BC2"));

    let out = run(&["list", "--format", "csv"]);
    assert_eq!(stdout(&out).lines().count(), 52);
}

#[test]
fn sphere_labels_resolve_to_the_same_entry() {
    let by_family = run(&["info", "S^q", "--q", "4"]);
    let by_name = run(&["info", "S^4"]);
    assert_eq!(code(&by_family), 0, "stderr: {}", stderr(&by_family));
    assert_eq!(by_family.stdout, by_name.stdout);
    let text = stdout(&by_name);
    assert!(text.contains("q_i: 3/2"));
    assert!(text.contains("q_d: 3/2"));
}

#[test]
fn json_output_ends_with_a_single_lf_and_has_no_cr() {
    for args in [
        vec!["info", "S^3", "--format", "json"],
        vec!["table", "8.2", "--only", "E6", "--format", "json"],
        vec!["verify", "--max-rank", "2", "--format", "csv"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 0);
        let bytes = out.stdout;
        assert!(!bytes.contains(&b'\r'), "CR in output of {args:?}");
        assert_eq!(bytes.last(), Some(&b'\n'), "missing trailing LF: {args:?}");
    }
}
