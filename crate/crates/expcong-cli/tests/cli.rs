//! End-to-end tests that drive the compiled `expcong` binary: output
//! formats and their round-trip guarantees, exit codes, cap configuration
//! precedence, and the verify suite's expected-failure semantics.

use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_expcong"));
    // Isolate tests from any ambient cap configuration.
    cmd.env_remove("EXPCONG_MAX_N");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary spawns")
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, got {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("stdout is utf-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process not killed by signal")
}

/// Parses a single-record JSON response, checking the schema shape.
fn parse_record(line: &str) -> Value {
    let value: Value = serde_json::from_str(line).expect("valid JSON");
    let top = value.as_object().expect("top-level object");
    let keys: Vec<&String> = top.keys().collect();
    assert_eq!(keys, ["command", "inputs", "result", "paper_ref"], "schema keys in order");
    value
}

#[test]
fn symbol_plain_matches_known_values() {
    assert_eq!(run_ok(&["symbol", "2", "5", "2"]), "(2/5)_2 = -1\n");
    assert_eq!(run_ok(&["symbol", "1", "9", "7"]), "(1/9)_7 = +1\n");
    assert_eq!(run_ok(&["symbol", "-1", "7", "1"]), "(-1/7)_1 = -1\n");
}

#[test]
fn symbol_explain_shows_residue_and_branch() {
    let out = run_ok(&["symbol", "7", "15", "2", "--explain"]);
    assert!(out.contains("(7/15)_2 = 0"), "{out}");
    assert!(out.contains("7^2 mod 15 = 4"), "{out}");
    assert!(out.contains("neither"), "{out}");
}

#[test]
fn json_output_round_trips_byte_identically() {
    for args in [
        &["symbol", "2", "5", "2", "--format", "json"] as &[&str],
        &["partition", "15", "2", "--format", "json"],
        &["count", "13", "3", "--format", "json"],
        &["expsum", "5", "2", "1", "--format", "json"],
        &["lseries", "2", "5", "2", "1000", "--completed", "--format", "json"],
        &["scan", "14..16", "1..2", "--format", "json"],
    ] {
        let out = run_ok(args);
        for line in out.lines() {
            let value = parse_record(line);
            let reserialized = serde_json::to_string(&value).unwrap();
            assert_eq!(line, reserialized, "round trip for {args:?}");
        }
    }
}

#[test]
fn symbol_json_payload() {
    let out = run_ok(&["symbol", "2", "5", "2", "--format", "json"]);
    let record = parse_record(out.trim());
    assert_eq!(record["command"], "symbol");
    assert_eq!(record["inputs"]["a"], 2);
    assert_eq!(record["inputs"]["n"], 5);
    assert_eq!(record["inputs"]["k"], 2);
    assert_eq!(record["result"]["value"], -1);

    let out = run_ok(&["symbol", "7", "15", "2", "--explain", "--format", "json"]);
    let record = parse_record(out.trim());
    assert_eq!(record["result"]["value"], 0);
    assert_eq!(record["result"]["residue"], 4);
}

#[test]
fn partition_json_lists_and_counts() {
    let out = run_ok(&["partition", "15", "2", "--format", "json"]);
    let record = parse_record(out.trim());
    assert_eq!(record["result"]["r_plus"], serde_json::json!([1, 4, 11, 14]));
    assert_eq!(record["result"]["r_minus"], serde_json::json!([]));
    assert_eq!(record["result"]["r_zero"], serde_json::json!([2, 7, 8, 13]));
    assert_eq!(record["result"]["non_units"], 7);

    let out = run_ok(&["partition", "15", "2", "--counts", "--format", "json"]);
    let record = parse_record(out.trim());
    assert_eq!(record["result"]["count_plus"], 4);
    assert_eq!(record["result"]["count_minus"], 0);
    assert_eq!(record["result"]["count_zero"], 4);
    assert!(record["result"].get("r_plus").is_none(), "--counts drops the lists");
}

#[test]
fn partition_plain_layout() {
    let out = run_ok(&["partition", "3", "1"]);
    assert_eq!(out, "R+1 = {1}\nR-1 = {2}\nR0  = {}\nnon-units: 1\n");
    assert_eq!(run_ok(&["partition", "13", "3", "--counts"]), "3/3/6 (non-units: 1)\n");
}

#[test]
fn count_uses_the_closed_form() {
    let record = parse_record(run_ok(&["count", "13", "3", "--format", "json"]).trim());
    assert_eq!(record["result"]["group_order"], 12);
    assert_eq!(record["result"]["g"], 3);
    assert_eq!(record["result"]["count_plus"], 3);
    assert_eq!(record["result"]["count_minus"], 3);
    assert_eq!(record["result"]["minus_solvable"], true);

    // k = 4: g = 4 does not divide (p-1)/2 = 6, so -1 is unreachable.
    let record = parse_record(run_ok(&["count", "13", "4", "--format", "json"]).trim());
    assert_eq!(record["result"]["count_plus"], 4);
    assert_eq!(record["result"]["count_minus"], 0);
    assert_eq!(record["result"]["minus_solvable"], false);
}

#[test]
fn scan_single_cell_matches_partition() {
    let scan = parse_record(run_ok(&["scan", "15", "2", "--format", "json"]).trim());
    let part =
        parse_record(run_ok(&["partition", "15", "2", "--counts", "--format", "json"]).trim());
    for key in ["count_plus", "count_minus", "count_zero", "non_units"] {
        assert_eq!(scan["result"][key], part["result"][key], "{key}");
    }
    assert_eq!(scan["result"]["orthogonality_sum"], 4);
    assert_eq!(scan["result"]["index_two"], false);
}

#[test]
fn scan_streams_one_record_per_pair() {
    let out = run_ok(&["scan", "3..10", "1..3", "--format", "json"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 8 * 3);
    for line in lines {
        let record = parse_record(line);
        assert_eq!(record["command"], "scan");
    }
}

#[test]
fn scan_primes_visits_exactly_the_primes() {
    let out = run_ok(&["scan", "3..50", "2", "--primes", "--format", "json"]);
    let visited: Vec<u64> = out
        .lines()
        .map(|line| parse_record(line)["inputs"]["n"].as_u64().unwrap())
        .collect();
    assert_eq!(visited, [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
    // gcd(2, p-1) = 2 for every odd prime, so each +1 class has 2 elements.
    for line in out.lines() {
        assert_eq!(parse_record(line)["result"]["count_plus"], 2, "{line}");
    }
}

#[test]
fn csv_emits_one_header_then_rows() {
    let out = run_ok(&["scan", "3..6", "1..2", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1 + 4 * 2);
    assert!(lines[0].starts_with("command,n,k,count_plus,count_minus"), "{}", lines[0]);
    assert_eq!(lines.iter().filter(|l| l.starts_with("command,")).count(), 1);
    assert!(lines[1].starts_with("scan,3,1,"), "{}", lines[1]);

    // Complex-valued fields split into _re/_im columns.
    let out = run_ok(&["expsum", "5", "2", "0..1", "--format", "csv"]);
    assert!(out.lines().next().unwrap().contains("sum_re,sum_im"), "{out}");
}

#[test]
fn expsum_rows_carry_the_class_bound() {
    let out = run_ok(&["expsum", "5", "2", "0..4", "--format", "json"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);

    let row0 = parse_record(lines[0]);
    assert_eq!(row0["inputs"]["m"], 0);
    assert!(row0["result"]["abs"].as_f64().unwrap() < 1e-9, "S(0) vanishes for (5,2)");

    let row1 = parse_record(lines[1]);
    let abs = row1["result"]["abs"].as_f64().unwrap();
    assert!((abs - 5f64.sqrt()).abs() <= 1e-9, "|S(1)| = sqrt(5), got {abs}");
    assert_eq!(row1["result"]["bound"], 4.0);

    // Full zero class mod 15 at k=2: S(0) counts the four +1 residues.
    let out = run_ok(&["expsum", "15", "2", "0", "--format", "json"]);
    let row = parse_record(out.trim());
    let abs = row["result"]["abs"].as_f64().unwrap();
    assert!((abs - 4.0).abs() <= 1e-9, "got {abs}");
}

#[test]
fn lseries_reports_tail_bound_and_completed_form() {
    let record = parse_record(run_ok(&["lseries", "2", "5", "2", "1000", "--format", "json"]).trim());
    assert_eq!(record["result"]["tail_bound"], 0.001);
    assert!(record["result"]["abs"].as_f64().unwrap() > 0.5);
    assert!(record["result"].get("completed").is_none());

    let record = parse_record(
        run_ok(&["lseries", "2", "5", "2", "1000", "--completed", "--format", "json"]).trim(),
    );
    let completed = record["result"]["completed"].as_array().expect("complex pair");
    assert_eq!(completed.len(), 2);
    assert!(completed[0].as_f64().unwrap().is_finite());
}

#[test]
fn domain_errors_exit_two_and_keep_stdout_clean() {
    for args in [
        &["symbol", "2", "1", "2"] as &[&str],
        &["symbol", "2", "0", "1"],
        &["partition", "15", "0"],
        &["count", "15", "2"],
        &["scan", "5..x", "2"],
        &["scan", "9..3", "1"],
        &["lseries", "1", "5", "2", "100"],
        &["verify", "--theorem", "no-such-check"],
    ] {
        let out = run(args);
        assert_eq!(exit_code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?} wrote data to stdout");
        assert!(!out.stderr.is_empty(), "{args:?} left stderr empty");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(exit_code(&run(&[])), 2);
    assert_eq!(exit_code(&run(&["frobnicate"])), 2);
    assert_eq!(exit_code(&run(&["symbol", "2", "5", "2", "--jobs", "0"])), 2);
    assert_eq!(exit_code(&run(&["verify", "--all", "--theorem", "prime-count"])), 2);
}

#[test]
fn enumeration_cap_exits_three_and_follows_precedence() {
    let over_cap = &["partition", "2000000", "2", "--counts"];

    let out = run(over_cap);
    assert_eq!(exit_code(&out), 3, "default cap");

    let out = run(&["partition", "2000000", "2", "--counts", "--max-n", "3000000"]);
    assert_eq!(exit_code(&out), 0, "flag raises the cap");

    let out = bin().args(over_cap).env("EXPCONG_MAX_N", "3000000").output().unwrap();
    assert_eq!(exit_code(&out), 0, "environment raises the cap");

    let out = bin()
        .args(over_cap)
        .env("EXPCONG_MAX_N", "3000000")
        .args(["--max-n", "100"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 3, "flag beats environment");

    let out = bin().args(over_cap).env("EXPCONG_MAX_N", "not-a-number").output().unwrap();
    assert_eq!(exit_code(&out), 2, "malformed environment value");
}

#[test]
fn jobs_flag_never_changes_output() {
    let reference = run_ok(&["scan", "3..20", "1..4", "--format", "json", "--jobs", "1"]);
    let parallel = run_ok(&["scan", "3..20", "1..4", "--format", "json", "--jobs", "8"]);
    assert_eq!(reference, parallel);
}

#[test]
fn verify_quick_suite_passes_end_to_end() {
    let out = run_ok(&["verify", "--quick"]);
    assert!(out.contains("17 checked, 17 passed, 0 failed"), "{out}");
    assert!(!out.contains("FAIL"), "{out}");
}

#[test]
fn verify_scoped_expected_failures_count_as_pass() {
    let out = run_ok(&["verify", "--theorem", "multiplicativity", "--quick"]);
    assert!(out.contains("PASS  multiplicativity"), "{out}");
    assert!(out.contains("1 checked, 1 passed, 0 failed"), "{out}");

    let out = run_ok(&["verify", "--theorem", "euler-product", "--theorem", "jacobi-witness", "--quick"]);
    assert!(out.contains("PASS  euler-product"), "{out}");
    assert!(out.contains("PASS  jacobi-witness"), "{out}");
    assert!(out.contains("2 checked, 2 passed, 0 failed"), "{out}");
}
