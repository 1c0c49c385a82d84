//! End-to-end checks of the installed binary: output schemas, format
//! equivalence, determinism, and exit codes.

use std::process::{Command, Output};

fn boxwell(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_boxwell"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

/// Parse csv output into (header, rows of raw cells).
fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header: Vec<String> = lines.next().expect("header").split(',').map(str::to_string).collect();
    let rows = lines
        .map(|l| l.split(',').map(str::to_string).collect::<Vec<_>>())
        .collect();
    (header, rows)
}

fn csv_field<'a>(header: &[String], row: &'a [String], name: &str) -> &'a str {
    let i = header.iter().position(|h| h == name).unwrap_or_else(|| panic!("column {name}"));
    &row[i]
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["table1", "--format", "csv"],
        vec!["table2", "--format", "json"],
        vec!["spectrum", "--k", "4", "--levels", "5", "--format", "csv"],
    ] {
        let a = boxwell(&args, &[]);
        let b = boxwell(&args, &[]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "stdout differs across runs of {args:?}");
        assert_eq!(a.stderr, b.stderr, "stderr differs across runs of {args:?}");
    }
}

#[test]
fn csv_and_json_agree_cell_for_cell() {
    let csv_out = boxwell(&["table1", "--format", "csv"], &[]);
    let json_out = boxwell(&["table1", "--format", "json"], &[]);
    assert!(csv_out.status.success() && json_out.status.success());
    let (header, rows) = parse_csv(&stdout_of(&csv_out));
    let parsed: serde_json::Value =
        serde_json::from_str(&stdout_of(&json_out)).expect("valid json");
    let objects = parsed.as_array().expect("array of rows");
    assert_eq!(objects.len(), rows.len());
    for (row, obj) in rows.iter().zip(objects) {
        for (name, cell) in header.iter().zip(row) {
            let v = &obj[name.as_str()];
            match name.as_str() {
                "parity" | "method" => assert_eq!(v.as_str().unwrap(), cell),
                "n" => assert_eq!(v.as_u64().unwrap().to_string(), *cell),
                _ if cell.is_empty() => assert!(v.is_null(), "{name}: expected null"),
                _ => {
                    let from_csv: f64 = cell.parse().expect("numeric cell");
                    let from_json = v.as_f64().expect("json number");
                    assert_eq!(from_csv, from_json, "{name} differs between formats");
                }
            }
        }
    }
}

#[test]
fn ground_shift_golden_values() {
    // Six-significant-digit renderings of independently computed shifts.
    let cases = [
        ("3", "3.91083e-4", "4.17759e-4", "3.90566e-4"),
        ("5", "7.67171e-11", "7.83543e-11", "7.67171e-11"),
        ("7", "4.09801e-21", "4.14117e-21", "4.09801e-21"),
        ("10", "4.17645e-43", "4.19766e-43", "4.17645e-43"),
    ];
    for (k, exact, asym, integral) in cases {
        let out = boxwell(&["shift", "--k", k, "--n", "0"], &[]);
        assert!(out.status.success());
        let (header, rows) = parse_csv(&stdout_of(&out));
        assert_eq!(rows.len(), 1);
        assert_eq!(csv_field(&header, &rows[0], "shift_exact"), exact, "k = {k}");
        assert_eq!(csv_field(&header, &rows[0], "shift_barton_asym"), asym, "k = {k}");
        assert_eq!(csv_field(&header, &rows[0], "shift_barton_integral"), integral, "k = {k}");
    }
}

#[test]
fn report_header_is_stable() {
    let out = boxwell(&["shift", "--k", "2", "--n", "1"], &[]);
    let (header, _) = parse_csv(&stdout_of(&out));
    assert_eq!(
        header,
        [
            "k",
            "n",
            "parity",
            "nu",
            "shift_exact",
            "shift_barton_asym",
            "shift_barton_integral",
            "ratio",
            "method",
            "residual"
        ]
    );
}

#[test]
fn integral_estimate_absent_when_node_reaches_wall() {
    // n = 3 has its outermost polynomial node at ~1.22; at k = 1.2 there is
    // no node-free window, so the integral column must be empty, not fail.
    let out = boxwell(&["shift", "--k", "1.2", "--n", "3"], &[]);
    assert!(out.status.success());
    let (header, rows) = parse_csv(&stdout_of(&out));
    assert_eq!(csv_field(&header, &rows[0], "shift_barton_integral"), "");
    let json = boxwell(&["shift", "--k", "1.2", "--n", "3", "--format", "json"], &[]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert!(parsed[0]["shift_barton_integral"].is_null());
}

#[test]
fn table1_flags_the_inconsistent_reference_row() {
    let out = boxwell(&["table1"], &[]);
    assert!(out.status.success());
    let stderr = stderr_of(&out);
    assert!(stderr.contains("36.769e-43"), "stderr: {stderr}");
    assert!(stderr.contains("4.17645e-43"));
    // stdout carries only the schema and computed numbers
    let stdout = stdout_of(&out);
    assert!(!stdout.contains("36.769"));
    let (_, rows) = parse_csv(&stdout);
    assert_eq!(rows.len(), 7);
}

#[test]
fn table2_reports_mean_ratios_off_schema() {
    let md = boxwell(&["table2", "--format", "markdown"], &[]);
    let md_stdout = stdout_of(&md);
    assert!(md_stdout.contains("- k = 3: 7.08225e-1 (levels 1-2)"), "{md_stdout}");
    assert!(md_stdout.contains("- k = 5: 8.47758e-1 (levels 1-3)"));
    assert!(md_stdout.contains("- k = 6: 8.94242e-1 (levels 1-3)"));

    let csv = boxwell(&["table2"], &[]);
    let csv_stdout = stdout_of(&csv);
    assert!(!csv_stdout.contains("mean"), "aggregate leaked into csv stdout");
    let stderr = stderr_of(&csv);
    assert!(stderr.contains("mean exact/asymptotic ratio at k = 3: 7.08225e-1"));
    let (_, rows) = parse_csv(&csv_stdout);
    assert_eq!(rows.len(), 8);
}

#[test]
fn spectrum_oracle_columns_track_the_exact_energies() {
    let out = boxwell(&["spectrum", "--k", "8", "--levels", "3", "--oracle"], &[]);
    assert!(out.status.success());
    let (header, rows) = parse_csv(&stdout_of(&out));
    assert_eq!(rows.len(), 3);
    for row in &rows {
        let exact: f64 = csv_field(&header, row, "energy_confined").parse().unwrap();
        let fd: f64 = csv_field(&header, row, "fd_energy").parse().unwrap();
        assert!((exact - fd).abs() <= 1e-8, "fd {fd} vs exact {exact}");
    }
    // Without the flag the oracle columns are absent.
    let plain = boxwell(&["spectrum", "--k", "8", "--levels", "3"], &[]);
    let (header, _) = parse_csv(&stdout_of(&plain));
    assert!(!header.iter().any(|h| h == "fd_energy"));
}

#[test]
fn markdown_renders_a_pipe_table() {
    let out = boxwell(&["shift", "--k", "2", "--n", "1", "--format", "markdown"], &[]);
    let stdout = stdout_of(&out);
    let mut lines = stdout.lines();
    assert!(lines.next().unwrap().starts_with("| k | n | parity |"));
    assert!(lines.next().unwrap().starts_with("|---|"));
    assert!(lines.next().unwrap().starts_with("| 2.00000e0 | 1 | odd |"));
}

#[test]
fn domain_invalid_flags_exit_2() {
    let neg_k = boxwell(&["shift", "--k", "-1", "--n", "0"], &[]);
    assert_eq!(neg_k.status.code(), Some(2));
    assert!(stderr_of(&neg_k).contains("k > 0"));

    let bad_cap = boxwell(&["shift", "--k", "3", "--n", "0", "--max-terms", "8"], &[]);
    assert_eq!(bad_cap.status.code(), Some(2));
    assert!(stderr_of(&bad_cap).contains("max_terms"));

    let bad_tol = boxwell(&["shift", "--k", "3", "--n", "0", "--tol", "0"], &[]);
    assert_eq!(bad_tol.status.code(), Some(2));

    let zero_levels = boxwell(&["spectrum", "--k", "3", "--levels", "0"], &[]);
    assert_eq!(zero_levels.status.code(), Some(2));
}

#[test]
fn numerical_failure_exits_3_and_names_the_level() {
    // 16 terms passes config validation but cannot sum the k = 6 series.
    let out = boxwell(&["shift", "--k", "6", "--n", "0"], &[("BOXWELL_MAX_TERMS", "16")]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = stderr_of(&out);
    assert!(stderr.contains("level n = 0 at k = 6"), "stderr: {stderr}");
}

#[test]
fn max_terms_env_and_flag_are_equivalent() {
    let via_env = boxwell(&["shift", "--k", "6", "--n", "0"], &[("BOXWELL_MAX_TERMS", "16")]);
    let via_flag = boxwell(&["shift", "--k", "6", "--n", "0", "--max-terms", "16"], &[]);
    assert_eq!(via_env.status.code(), via_flag.status.code());
    // And a generous cap through the env succeeds.
    let ok = boxwell(&["shift", "--k", "6", "--n", "0"], &[("BOXWELL_MAX_TERMS", "500")]);
    assert_eq!(ok.status.code(), Some(0));
}
